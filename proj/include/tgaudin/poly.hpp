#pragma once

#include <cstddef>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tgaudin/rational.hpp"
#include "tgaudin/ring.hpp"
#include "tgaudin/var.hpp"

namespace tgaudin {

/// Degree reported for the zero polynomial.
inline constexpr int kZeroDegree = -1;

/// Dense univariate polynomial over a field F. Coefficients are stored in
/// ascending order with no trailing zeros; a polynomial of degree <= 0 carries
/// Var::none so constants combine with any indeterminate.
template <class F>
class Poly {
 public:
  Poly() = default;

  Poly(Var var, std::vector<F> coeffs) : var_(var), c_(std::move(coeffs)) { trim(); }

  static Poly constant(const F& c) { return Poly(Var::none, {c}); }

  static Poly monomial(const F& c, int degree, Var var) {
    std::vector<F> v(static_cast<std::size_t>(degree) + 1, F(0));
    v.back() = c;
    return Poly(var, std::move(v));
  }

  static Poly variable(Var var) { return monomial(F(1), 1, var); }

  /// (t - a) in the given indeterminate.
  static Poly linear_root(Var var, const F& a) { return Poly(var, {-a, F(1)}); }

  [[nodiscard]] int degree() const {
    return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1;
  }
  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  [[nodiscard]] bool is_constant() const { return c_.size() <= 1; }
  [[nodiscard]] Var var() const { return var_; }
  [[nodiscard]] const std::vector<F>& coeffs() const { return c_; }

  [[nodiscard]] F coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return F(0);
    return c_[static_cast<std::size_t>(i)];
  }
  [[nodiscard]] const F& lead() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  [[nodiscard]] F eval(const F& at) const {
    F acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  [[nodiscard]] Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<F> d(c_.size() - 1, F(0));
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * F(static_cast<int>(i));
    return Poly(var_, std::move(d));
  }

  /// p(a + t), expressed in the same indeterminate t.
  [[nodiscard]] Poly taylor_shift(const F& a) const {
    std::vector<F> b = c_;
    const std::size_t n = b.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = n - 1; j > i; --j) b[j - 1] = b[j - 1] + a * b[j];
    return Poly(var_, std::move(b));
  }

  /// p(c t).
  [[nodiscard]] Poly scale_var(const F& c) const {
    std::vector<F> b = c_;
    F power(1);
    for (auto& x : b) {
      x = x * power;
      power = power * c;
    }
    return Poly(var_, std::move(b));
  }

  [[nodiscard]] Poly monic() const {
    if (c_.empty()) return *this;
    const F inv = F(1) / c_.back();
    Poly r = *this;
    for (auto& x : r.c_) x = x * inv;
    r.c_.back() = F(1);
    return r;
  }

  /// Multiplies by t^k.
  [[nodiscard]] Poly shift_up(int k) const {
    if (c_.empty() || k == 0) return *this;
    std::vector<F> b(static_cast<std::size_t>(k), F(0));
    b.insert(b.end(), c_.begin(), c_.end());
    return Poly(var_, std::move(b));
  }

  /// Exponent of the lowest nonzero coefficient (degree sentinel for zero).
  [[nodiscard]] int valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!is_zero_elem(c_[i])) return static_cast<int>(i);
    return kZeroDegree;
  }

  Poly& operator+=(const Poly& o) {
    var_ = join_var(var_, o.var_);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    var_ = join_var(var_, o.var_);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a) {
    Poly r = a;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    const Var v = join_var(a.var_, b.var_);
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<F> r(a.c_.size() + b.c_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero_elem(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(v, std::move(r));
  }

  friend Poly operator*(const F& s, const Poly& p) {
    if (is_zero_elem(s)) return {};
    Poly r = p;
    for (auto& x : r.c_) x = s * x;
    r.trim();
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.var_ == b.var_ && a.c_ == b.c_;
  }

  /// Euclidean division: a = q b + r with deg r < deg b.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const Var v = join_var(a.var_, b.var_);
    if (a.degree() < b.degree()) return {Poly{}, a};
    std::vector<F> r = a.c_;
    const int db = b.degree();
    std::vector<F> q(static_cast<std::size_t>(a.degree() - db) + 1, F(0));
    const F inv_lead = F(1) / b.lead();
    const bool monic_b = b.lead() == F(1);
    for (int i = a.degree(); i >= db; --i) {
      const F& top = r[static_cast<std::size_t>(i)];
      if (is_zero_elem(top)) continue;
      const F t = monic_b ? top : top * inv_lead;
      q[static_cast<std::size_t>(i - db)] = t;
      for (int j = 0; j <= db; ++j) {
        auto& slot = r[static_cast<std::size_t>(i - db + j)];
        slot = slot - t * b.c_[static_cast<std::size_t>(j)];
      }
    }
    r.resize(static_cast<std::size_t>(db));
    return {Poly(v, std::move(q)), Poly(v, std::move(r))};
  }

  /// Exact division; throws if b does not divide a.
  friend Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("polynomial exact division left a remainder");
    return q;
  }

  /// Monic greatest common divisor (zero if both are zero).
  friend Poly gcd(Poly a, Poly b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
      if (b.degree() == 0) return constant(F(1));
      Poly r = divmod(a, b).second;
      a = std::move(b);
      b = r.monic();
    }
    return a.monic();
  }

  [[nodiscard]] std::string to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      const F& c = c_[static_cast<std::size_t>(i)];
      if (is_zero_elem(c)) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << c << ")";
      if (i >= 1) os << "*" << var_name(var_);
      if (i >= 2) os << "^" << i;
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

 private:
  static bool is_zero_elem(const F& x) { return detail::elem_is_zero(x); }

  void trim() {
    while (!c_.empty() && is_zero_elem(c_.back())) c_.pop_back();
    if (c_.size() <= 1) var_ = Var::none;
  }

  Var var_ = Var::none;
  std::vector<F> c_;
};

template <class F>
bool is_zero(const Poly<F>& p) {
  return p.is_zero();
}

}  // namespace tgaudin
