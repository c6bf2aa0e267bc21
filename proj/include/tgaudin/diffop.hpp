#pragma once

#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "tgaudin/ratfun.hpp"
#include "tgaudin/series.hpp"
#include "tgaudin/tensor.hpp"

namespace tgaudin {

// ---- d/du on the coefficient rings -------------------------------------

inline Rational d_du(const Rational&) { return Rational(0); }

template <class F>
RatFun<F> d_du(const RatFun<F>& f) {
  const Var v = f.var();
  if (v != Var::u && v != Var::none) throw VariableMismatch(v, Var::u);
  return f.derivative();
}

/// A series in u is differentiated termwise in u; a series in any other
/// variable (e.g. eps) has u-dependent coefficients that are differentiated.
template <class R>
TruncSeries<R> d_du(const TruncSeries<R>& s) {
  if (s.var() == Var::u) return s.derivative();
  return s.map_coeffs([](const R& c) { return d_du(c); });
}

template <class R>
AuxTensor<R> d_du(const AuxTensor<R>& t) {
  return t.map([](const R& v) { return d_du(v); });
}

// ---- the shift g(u) -> g(u q^{-2k}) behind delta^k ------------------------

inline Rational delta_shift(const Rational& c, int) { return c; }

/// Over Q(q)(u): exact substitution u -> u q^{-2k}.
inline RatFun<RatFun<Rational>> delta_shift(const RatFun<RatFun<Rational>>& f, int k) {
  if (k == 0 || f.is_constant()) return f;
  using QQ = RatFun<Rational>;
  const QQ q = QQ::variable(Var::q);
  QQ s(1);
  for (int i = 0; i < 2 * (k >= 0 ? k : -k); ++i) s = s * (k >= 0 ? QQ(1) / q : q);
  return f.scale_var(s);
}

/// Over Q(u)[[eps]] with q = 1 + eps: Taylor expansion of g(u (1+eps)^{-2k}).
TruncSeries<RatFun<Rational>> delta_shift(const TruncSeries<RatFun<Rational>>& s, int k);

template <class R>
AuxTensor<R> delta_shift(const AuxTensor<R>& t, int k) {
  return t.map([k](const R& v) { return delta_shift(v, k); });
}

/// Finite sum  sum_k c_k d^k  with coefficients on the left, in the algebra
/// generated by u-dependent coefficients and d = d/du with d g = g d + g'.
template <class C>
class DiffOp {
 public:
  using Coef = C;
  using Terms = std::map<int, C>;

  DiffOp() = default;
  explicit DiffOp(C c0) { put(0, std::move(c0)); }
  static DiffOp term(int k, C c) {
    if (k < 0) throw std::invalid_argument("DiffOp: negative derivative degree");
    DiffOp d;
    d.put(k, std::move(c));
    return d;
  }

  [[nodiscard]] const Terms& terms() const { return t_; }
  [[nodiscard]] bool is_zero() const { return t_.empty(); }
  [[nodiscard]] int degree() const { return t_.empty() ? -1 : t_.rbegin()->first; }
  [[nodiscard]] C coefficient(int k) const {
    auto it = t_.find(k);
    return it == t_.end() ? C{} : it->second;
  }

  DiffOp& operator+=(const DiffOp& o) {
    for (const auto& [k, c] : o.t_) accumulate(k, c);
    return *this;
  }
  DiffOp& operator-=(const DiffOp& o) {
    for (const auto& [k, c] : o.t_) accumulate(k, -c);
    return *this;
  }
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  friend DiffOp operator-(const DiffOp& a) {
    DiffOp r = a;
    for (auto& [k, c] : r.t_) c = -c;
    return r;
  }

  /// (A d^i)(B d^j) = sum_t binom(i,t) A B^{(t)} d^{i+j-t}.
  friend DiffOp operator*(const DiffOp& a, const DiffOp& b) {
    DiffOp r;
    if (a.t_.empty() || b.t_.empty()) return r;
    const int top = a.degree();
    std::map<int, std::vector<C>> derivs;  // b-term degree -> [B, B', B'', ...]
    for (const auto& [j, cb] : b.t_) {
      std::vector<C>& v = derivs[j];
      v.push_back(cb);
      for (int t = 1; t <= top; ++t) {
        C next = d_du(v.back());
        if (detail::elem_is_zero(next)) break;
        v.push_back(std::move(next));
      }
    }
    for (const auto& [i, ca] : a.t_)
      for (const auto& [j, dv] : derivs)
        for (int t = 0; t <= i && t < static_cast<int>(dv.size()); ++t) {
          C prod = ca * dv[static_cast<std::size_t>(t)];
          if (t > 0 && i > 1) prod = scale_by(prod, binomial(i, t));
          r.accumulate(i + j - t, prod);
        }
    return r;
  }
  DiffOp& operator*=(const DiffOp& o) { return *this = *this * o; }

  friend bool operator==(const DiffOp& a, const DiffOp& b) { return a.t_ == b.t_; }

  template <class Fn>
  [[nodiscard]] DiffOp map(Fn&& fn) const {
    DiffOp r;
    for (const auto& [k, c] : t_) r.put(k, fn(c));
    return r;
  }

  [[nodiscard]] std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      if (!first) os << " + ";
      first = false;
      os << "[" << it->second << "]";
      if (it->first > 0) os << "*d^" << it->first;
    }
    if (first) os << "0";
    return os.str();
  }
  friend std::ostream& operator<<(std::ostream& os, const DiffOp& d) { return os << d.to_string(); }

 private:
  void put(int k, C c) {
    if (detail::elem_is_zero(c))
      t_.erase(k);
    else
      t_[k] = std::move(c);
  }
  void accumulate(int k, const C& c) {
    if (detail::elem_is_zero(c)) return;
    auto [it, inserted] = t_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (detail::elem_is_zero(it->second)) t_.erase(it);
    }
  }

  Terms t_;
};

template <class C>
bool is_zero(const DiffOp<C>& d) {
  return d.is_zero();
}
template <class C>
DiffOp<C> scale_by(const DiffOp<C>& d, const Rational& c) {
  return d.map([&](const C& x) { return scale_by(x, c); });
}

/// Finite sum  sum_k c_k delta^k  with coefficients on the left and the rule
/// delta g(u) = g(u q^{-2}) delta.
template <class C>
class QDiffOp {
 public:
  using Coef = C;
  using Terms = std::map<int, C>;

  QDiffOp() = default;
  explicit QDiffOp(C c0) { put(0, std::move(c0)); }
  static QDiffOp term(int k, C c) {
    if (k < 0) throw std::invalid_argument("QDiffOp: negative delta degree");
    QDiffOp d;
    d.put(k, std::move(c));
    return d;
  }

  [[nodiscard]] const Terms& terms() const { return t_; }
  [[nodiscard]] bool is_zero() const { return t_.empty(); }
  [[nodiscard]] int degree() const { return t_.empty() ? -1 : t_.rbegin()->first; }
  [[nodiscard]] C coefficient(int k) const {
    auto it = t_.find(k);
    return it == t_.end() ? C{} : it->second;
  }

  QDiffOp& operator+=(const QDiffOp& o) {
    for (const auto& [k, c] : o.t_) accumulate(k, c);
    return *this;
  }
  QDiffOp& operator-=(const QDiffOp& o) {
    for (const auto& [k, c] : o.t_) accumulate(k, -c);
    return *this;
  }
  friend QDiffOp operator+(QDiffOp a, const QDiffOp& b) { return a += b; }
  friend QDiffOp operator-(QDiffOp a, const QDiffOp& b) { return a -= b; }
  friend QDiffOp operator-(const QDiffOp& a) {
    QDiffOp r = a;
    for (auto& [k, c] : r.t_) c = -c;
    return r;
  }

  /// (A delta^i)(B delta^j) = A sigma^i(B) delta^{i+j}.
  friend QDiffOp operator*(const QDiffOp& a, const QDiffOp& b) {
    QDiffOp r;
    for (const auto& [i, ca] : a.t_)
      for (const auto& [j, cb] : b.t_) r.accumulate(i + j, ca * (i == 0 ? cb : delta_shift(cb, i)));
    return r;
  }
  QDiffOp& operator*=(const QDiffOp& o) { return *this = *this * o; }

  friend bool operator==(const QDiffOp& a, const QDiffOp& b) { return a.t_ == b.t_; }

  template <class Fn>
  [[nodiscard]] QDiffOp map(Fn&& fn) const {
    QDiffOp r;
    for (const auto& [k, c] : t_) r.put(k, fn(c));
    return r;
  }

  [[nodiscard]] std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      if (!first) os << " + ";
      first = false;
      os << "[" << it->second << "]";
      if (it->first > 0) os << "*delta^" << it->first;
    }
    if (first) os << "0";
    return os.str();
  }
  friend std::ostream& operator<<(std::ostream& os, const QDiffOp& d) { return os << d.to_string(); }

 private:
  void put(int k, C c) {
    if (detail::elem_is_zero(c))
      t_.erase(k);
    else
      t_[k] = std::move(c);
  }
  void accumulate(int k, const C& c) {
    if (detail::elem_is_zero(c)) return;
    auto [it, inserted] = t_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (detail::elem_is_zero(it->second)) t_.erase(it);
    }
  }

  Terms t_;
};

template <class C>
bool is_zero(const QDiffOp<C>& d) {
  return d.is_zero();
}
template <class C>
QDiffOp<C> scale_by(const QDiffOp<C>& d, const Rational& c) {
  return d.map([&](const C& x) { return scale_by(x, c); });
}

}  // namespace tgaudin
