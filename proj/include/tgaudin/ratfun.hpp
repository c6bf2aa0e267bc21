#pragma once

#include <concepts>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tgaudin/poly.hpp"

namespace tgaudin {

/// Reduced rational function num/den in one indeterminate over a field F.
/// Canonical form: gcd(num, den) = 1, den monic; equality is structural.
template <class F>
class RatFun {
 public:
  using Field = F;
  using PolyT = Poly<F>;

  RatFun() : den_(PolyT::constant(F(1))) {}
  RatFun(int c) : num_(PolyT::constant(F(c))), den_(PolyT::constant(F(1))) {}  // NOLINT
  RatFun(const F& c) : num_(PolyT::constant(c)), den_(PolyT::constant(F(1))) {}  // NOLINT
  explicit RatFun(const Rational& c)
    requires(!std::same_as<F, Rational>)
      : RatFun(F(c)) {}
  explicit RatFun(PolyT p) : num_(std::move(p)), den_(PolyT::constant(F(1))) {}
  RatFun(PolyT num, PolyT den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

  static RatFun variable(Var v) { return RatFun(PolyT::variable(v)); }

  [[nodiscard]] const PolyT& num() const { return num_; }
  [[nodiscard]] const PolyT& den() const { return den_; }
  [[nodiscard]] Var var() const { return join_var(num_.var(), den_.var()); }
  [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
  [[nodiscard]] bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  [[nodiscard]] bool is_polynomial() const { return den_.is_constant(); }
  [[nodiscard]] F constant_value() const {
    if (!is_constant()) throw std::domain_error("rational function is not constant");
    return num_.coeff(0);
  }

  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

  friend RatFun operator+(const RatFun& a, const RatFun& b) { return add(a, b, false); }
  friend RatFun operator-(const RatFun& a, const RatFun& b) { return add(a, b, true); }
  friend RatFun operator-(const RatFun& a) {
    RatFun r = a;
    r.num_ = -r.num_;
    return r;
  }

  friend RatFun operator*(const RatFun& a, const RatFun& b) {
    if (a.is_zero() || b.is_zero()) {
      (void)join_var(a.var(), b.var());
      return {};
    }
    if (a.is_polynomial() && b.is_polynomial()) return RatFun::raw(a.num_ * b.num_, PolyT::constant(F(1)));
    const PolyT g1 = gcd(a.num_, b.den_);
    const PolyT g2 = gcd(b.num_, a.den_);
    PolyT n = exact_div(a.num_, g1) * exact_div(b.num_, g2);
    PolyT d = exact_div(a.den_, g2) * exact_div(b.den_, g1);
    return RatFun::normalized(std::move(n), std::move(d));
  }

  friend RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inverse(); }

  [[nodiscard]] RatFun inverse() const {
    if (is_zero()) throw std::domain_error("division by zero rational function");
    return RatFun::normalized(den_, num_);
  }

  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Quotient-rule derivative in the function's own indeterminate.
  [[nodiscard]] RatFun derivative() const {
    if (num_.is_zero()) return {};
    if (den_.is_constant()) return RatFun::raw(num_.derivative(), den_);
    // (n/d)' = (n' d - n d') / d^2, reduced via g = gcd(d, d').
    const PolyT dd = den_.derivative();
    const PolyT g = gcd(den_, dd);
    const PolyT d_over_g = exact_div(den_, g);
    const PolyT top = num_.derivative() * d_over_g - num_ * exact_div(dd, g);
    return RatFun(top, den_ * d_over_g);
  }

  /// Value at a point; throws if the point is a pole.
  [[nodiscard]] F eval(const F& at) const {
    const F d = den_.eval(at);
    if (detail::elem_is_zero(d)) throw std::domain_error("evaluation at a pole");
    return num_.eval(at) / d;
  }

  /// f(c t) for a nonzero scalar c.
  [[nodiscard]] RatFun scale_var(const F& c) const {
    return RatFun::normalized(num_.scale_var(c), den_.scale_var(c));
  }

  /// f(a + t).
  [[nodiscard]] RatFun taylor_shift(const F& a) const {
    return RatFun::normalized(num_.taylor_shift(a), den_.taylor_shift(a));
  }

  [[nodiscard]] std::string to_string() const {
    if (den_.is_constant()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }
  friend std::ostream& operator<<(std::ostream& os, const RatFun& f) { return os << f.to_string(); }

 private:
  static RatFun raw(PolyT n, PolyT d) {
    RatFun r;
    r.num_ = std::move(n);
    r.den_ = std::move(d);
    return r;
  }

  // Coprime inputs: only the monic normalization remains.
  static RatFun normalized(PolyT n, PolyT d) {
    if (d.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (n.is_zero()) return raw(PolyT{}, PolyT::constant(F(1)));
    const F lead = d.lead();
    if (!(lead == F(1))) {
      const F inv = F(1) / lead;
      n = inv * n;
      d = d.monic();
    }
    return raw(std::move(n), std::move(d));
  }

  static RatFun add(const RatFun& a, const RatFun& b, bool negate_b) {
    const PolyT& bn0 = b.num_;
    if (b.is_zero()) {
      (void)join_var(a.var(), b.var());
      return a;
    }
    if (a.is_zero()) {
      (void)join_var(a.var(), b.var());
      return negate_b ? -b : b;
    }
    const PolyT bn = negate_b ? -bn0 : bn0;
    if (a.den_ == b.den_) {
      if (a.den_.is_constant()) return raw(a.num_ + bn, a.den_);
      PolyT n = a.num_ + bn;
      const PolyT g = gcd(n, a.den_);
      if (g.is_constant()) return raw(std::move(n), a.den_);
      return normalized(exact_div(n, g), exact_div(a.den_, g));
    }
    // Henrici: with g = gcd(da, db), the only possible common factors of the
    // new numerator and denominator divide g.
    const PolyT g = gcd(a.den_, b.den_);
    const PolyT da = exact_div(a.den_, g);
    const PolyT db = exact_div(b.den_, g);
    PolyT n = a.num_ * db + bn * da;
    if (n.is_zero()) return {};
    const PolyT g2 = gcd(n, g);
    if (g2.is_constant()) return normalized(std::move(n), da * b.den_);
    return normalized(exact_div(n, g2), da * exact_div(b.den_, g2));
  }

  void reduce() {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num_.is_zero()) {
      (void)join_var(num_.var(), den_.var());
      den_ = PolyT::constant(F(1));
      return;
    }
    (void)join_var(num_.var(), den_.var());
    const PolyT g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
    *this = normalized(std::move(num_), std::move(den_));
  }

  PolyT num_;
  PolyT den_;
};

template <class F>
bool is_zero(const RatFun<F>& f) {
  return f.is_zero();
}

/// Laurent coefficients c_k of f about `point`, for k = min_order..max_order.
template <class F>
std::vector<F> expand_at(const RatFun<F>& f, const F& point, int min_order, int max_order) {
  if (max_order < min_order) throw std::invalid_argument("expand_at: max_order < min_order");
  std::vector<F> out(static_cast<std::size_t>(max_order - min_order + 1), F(0));
  if (f.is_zero()) return out;
  const Poly<F> n = f.num().taylor_shift(point);
  const Poly<F> d = f.den().taylor_shift(point);
  const int vn = n.valuation();
  const int vd = d.valuation();
  const int lead_exp = vn - vd;
  const int terms = max_order - lead_exp + 1;
  if (terms <= 0) return out;
  // Series division of (n / t^vn) by (d / t^vd); the latter has nonzero constant term.
  const auto& nc = n.coeffs();
  const auto& dc = d.coeffs();
  auto ncoef = [&](int i) -> F {
    const int k = i + vn;
    return k < static_cast<int>(nc.size()) ? nc[static_cast<std::size_t>(k)] : F(0);
  };
  auto dcoef = [&](int i) -> F {
    const int k = i + vd;
    return k < static_cast<int>(dc.size()) ? dc[static_cast<std::size_t>(k)] : F(0);
  };
  const F inv_d0 = F(1) / dcoef(0);
  std::vector<F> s(static_cast<std::size_t>(terms), F(0));
  for (int i = 0; i < terms; ++i) {
    F acc = ncoef(i);
    for (int j = 1; j <= i; ++j) {
      const F dj = dcoef(j);
      if (!detail::elem_is_zero(dj)) acc = acc - dj * s[static_cast<std::size_t>(i - j)];
    }
    s[static_cast<std::size_t>(i)] = acc * inv_d0;
  }
  for (int k = min_order; k <= max_order; ++k) {
    const int idx = k - lead_exp;
    if (idx >= 0 && idx < terms)
      out[static_cast<std::size_t>(k - min_order)] = s[static_cast<std::size_t>(idx)];
  }
  return out;
}

/// Order of the pole of f at `point` (0 if f is regular there).
template <class F>
int pole_order(const RatFun<F>& f, const F& point) {
  const int vd = f.den().taylor_shift(point).valuation();
  return vd > 0 ? vd : 0;
}

/// f = polynomial + sum over poles a of sum_p c_{a,p} / (t - a)^p.
template <class F>
struct PartialFractions {
  Poly<F> polynomial;
  /// (pole, [c_1, ..., c_p]) for every listed pole that actually occurs.
  std::vector<std::pair<F, std::vector<F>>> principal;
};

class UnlistedPole : public std::domain_error {
 public:
  explicit UnlistedPole(const std::string& factor)
      : std::domain_error("denominator has a factor outside the pole list: " + factor) {}
};

template <class F>
PartialFractions<F> partial_fractions(const RatFun<F>& f, const std::vector<F>& poles) {
  PartialFractions<F> out;
  auto [quot, rem] = divmod(f.num(), f.den());
  out.polynomial = std::move(quot);
  Poly<F> rest = f.den();
  const Var v = f.var() == Var::none ? Var::u : f.var();
  for (const F& a : poles) {
    int mult = 0;
    const Poly<F> lin = Poly<F>::linear_root(v, a);
    while (rest.degree() > 0 && detail::elem_is_zero(rest.eval(a))) {
      rest = exact_div(rest, lin);
      ++mult;
    }
    if (mult == 0) continue;
    std::vector<F> lc = expand_at(f, a, -mult, -1);
    std::vector<F> c(static_cast<std::size_t>(mult), F(0));
    for (int p = 1; p <= mult; ++p) c[static_cast<std::size_t>(p - 1)] = lc[static_cast<std::size_t>(mult - p)];
    out.principal.emplace_back(a, std::move(c));
  }
  if (rest.degree() > 0) throw UnlistedPole(rest.to_string());
  return out;
}

/// Inverse of partial_fractions; used to certify decompositions.
template <class F>
RatFun<F> recombine(const PartialFractions<F>& pf, Var v) {
  RatFun<F> acc(pf.polynomial);
  for (const auto& [a, cs] : pf.principal) {
    const Poly<F> lin = Poly<F>::linear_root(v, a);
    Poly<F> power = Poly<F>::constant(F(1));
    for (const F& c : cs) {
      power = power * lin;
      acc = acc + RatFun<F>(Poly<F>::constant(c), power);
    }
  }
  return acc;
}

}  // namespace tgaudin
