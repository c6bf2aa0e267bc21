#pragma once

#include <algorithm>
#include <concepts>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tgaudin/rational.hpp"
#include "tgaudin/ring.hpp"
#include "tgaudin/var.hpp"

namespace tgaudin {

class TruncationError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Power series in one indeterminate known modulo t^(order+1), with
/// coefficients in a (possibly noncommutative) ring R. Exact polynomials use
/// the kExact order. Products track valuations, so a factor with leading
/// t^v lets the other factor's precision carry over shifted by v.
template <class R>
class TruncSeries {
 public:
  static constexpr int kExact = std::numeric_limits<int>::max() / 4;

  TruncSeries() = default;
  TruncSeries(int c) : TruncSeries(R(c)) {}  // NOLINT
  TruncSeries(const R& c) : order_(kExact), c_{c} { trim(); }  // NOLINT
  explicit TruncSeries(const Rational& c)
    requires(!std::same_as<R, Rational>)
      : TruncSeries(R(c)) {}
  TruncSeries(Var var, int order, std::vector<R> coeffs)
      : var_(var), order_(order), c_(std::move(coeffs)) {
    if (order_ < 0) throw std::invalid_argument("series order must be >= 0");
    if (order_ != kExact && static_cast<int>(c_.size()) > order_ + 1) c_.resize(order_ + 1);
    trim();
  }

  /// The indeterminate itself, exact.
  static TruncSeries variable(Var var) { return TruncSeries(var, kExact, {R(0), R(1)}); }

  [[nodiscard]] Var var() const { return var_; }
  [[nodiscard]] int order() const { return order_; }
  [[nodiscard]] bool is_exact() const { return order_ == kExact; }
  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  [[nodiscard]] const std::vector<R>& stored() const { return c_; }

  /// Coefficient of t^k; asking beyond the truncation order is an error.
  [[nodiscard]] R coeff(int k) const {
    if (k < 0) return R(0);
    if (k > order_)
      throw TruncationError("series coefficient " + std::to_string(k) +
                            " requested beyond truncation order " + std::to_string(order_));
    return k < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(k)] : R(0);
  }

  /// Lowest index with a nonzero coefficient; order+1 if none is known.
  [[nodiscard]] int valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!detail::elem_is_zero(c_[i])) return static_cast<int>(i);
    return sat_add(order_, 1);
  }

  [[nodiscard]] TruncSeries truncate(int order) const {
    if (order > order_) throw TruncationError("cannot raise the precision of a series");
    return TruncSeries(var_, order, c_);
  }

  TruncSeries& operator+=(const TruncSeries& o) { return *this = combine(*this, o, false); }
  TruncSeries& operator-=(const TruncSeries& o) { return *this = combine(*this, o, true); }
  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    return combine(a, b, false);
  }
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    return combine(a, b, true);
  }
  friend TruncSeries operator-(const TruncSeries& a) {
    TruncSeries r = a;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries r;
    r.var_ = join_var(a.var_, b.var_);
    const int va = a.valuation();
    const int vb = b.valuation();
    r.order_ = std::min({sat_add(a.order_, vb), sat_add(b.order_, va), kExact});
    if (a.c_.empty() || b.c_.empty()) return r;
    const std::size_t top = std::min<std::size_t>(
        a.c_.size() + b.c_.size() - 1,
        r.order_ == kExact ? a.c_.size() + b.c_.size() - 1 : static_cast<std::size_t>(r.order_) + 1);
    r.c_.assign(top, R(0));
    for (std::size_t i = 0; i < a.c_.size() && i < top; ++i) {
      if (detail::elem_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size() && i + j < top; ++j) {
        if (detail::elem_is_zero(b.c_[j])) continue;
        r.c_[i + j] += a.c_[i] * b.c_[j];
      }
    }
    r.trim();
    return r;
  }
  TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

  /// Multiplicative inverse; needs an invertible constant term and a finite order.
  [[nodiscard]] TruncSeries inverse(int order) const {
    if (order > order_) throw TruncationError("inverse requested beyond known precision");
    if (c_.empty() || detail::elem_is_zero(c_[0]))
      throw std::domain_error("series inverse needs a nonzero constant term");
    std::vector<R> s(static_cast<std::size_t>(order) + 1, R(0));
    const R inv0 = R(1) / c_[0];
    s[0] = inv0;
    for (int n = 1; n <= order; ++n) {
      R acc(0);
      for (int j = 1; j <= n && j < static_cast<int>(c_.size()); ++j)
        acc += c_[static_cast<std::size_t>(j)] * s[static_cast<std::size_t>(n - j)];
      s[static_cast<std::size_t>(n)] = -(inv0 * acc);
    }
    return TruncSeries(var_, order, std::move(s));
  }

  friend TruncSeries operator/(const TruncSeries& a, const TruncSeries& b) {
    int order = std::min(a.order_, b.order_);
    if (order == kExact) {
      if (b.c_.size() > 1) throw std::domain_error("exact series division needs a finite order");
      order = static_cast<int>(a.c_.size());
    }
    return a * b.inverse(order);
  }

  /// Derivative in the series variable; loses one order of precision.
  [[nodiscard]] TruncSeries derivative() const {
    if (order_ == 0) return TruncSeries(var_, 0, {});
    std::vector<R> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * R(static_cast<int>(i)));
    return TruncSeries(var_, order_ == kExact ? kExact : order_ - 1, std::move(d));
  }

  /// Multiplies by t^k.
  [[nodiscard]] TruncSeries shift_up(int k) const {
    std::vector<R> d(static_cast<std::size_t>(k), R(0));
    d.insert(d.end(), c_.begin(), c_.end());
    return TruncSeries(var_, sat_add(order_, k), std::move(d));
  }

  template <class Fn>
  [[nodiscard]] auto map_coeffs(Fn&& fn) const {
    using S = decltype(fn(std::declval<const R&>()));
    std::vector<S> d;
    d.reserve(c_.size());
    for (const auto& x : c_) d.push_back(fn(x));
    return TruncSeries<S>(var_, order_, std::move(d));
  }

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.order_ == b.order_ && a.c_ == b.c_ && (a.c_.empty() || a.var_ == b.var_);
  }

  [[nodiscard]] std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (detail::elem_is_zero(c_[i])) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << c_[i] << ")";
      if (i >= 1) os << "*" << var_name(var_) << "^" << i;
    }
    if (first) os << "0";
    if (order_ != kExact) os << " + O(" << var_name(var_) << "^" << order_ + 1 << ")";
    return os.str();
  }
  friend std::ostream& operator<<(std::ostream& os, const TruncSeries& s) {
    return os << s.to_string();
  }

 private:
  static int sat_add(int a, int b) { return (a >= kExact || b >= kExact) ? kExact : std::min(a + b, kExact); }

  static TruncSeries combine(const TruncSeries& a, const TruncSeries& b, bool negate) {
    TruncSeries r;
    r.var_ = join_var(a.var_, b.var_);
    r.order_ = std::min(a.order_, b.order_);
    std::size_t n = std::max(a.c_.size(), b.c_.size());
    if (r.order_ != kExact) n = std::min(n, static_cast<std::size_t>(r.order_) + 1);
    r.c_.assign(n, R(0));
    for (std::size_t i = 0; i < n; ++i) {
      if (i < a.c_.size()) r.c_[i] = a.c_[i];
      if (i < b.c_.size()) {
        if (negate)
          r.c_[i] -= b.c_[i];
        else
          r.c_[i] += b.c_[i];
      }
    }
    r.trim();
    return r;
  }

  void trim() {
    while (!c_.empty() && detail::elem_is_zero(c_.back())) c_.pop_back();
    if (c_.size() <= 1 && order_ == kExact) var_ = c_.empty() ? var_ : Var::none;
  }

  Var var_ = Var::none;
  int order_ = kExact;
  std::vector<R> c_;
};

template <class R>
bool is_zero(const TruncSeries<R>& s) {
  return s.is_zero();
}

template <class R>
TruncSeries<R> scale_by(const TruncSeries<R>& s, const Rational& c) {
  return s.map_coeffs([&](const R& x) { return scale_by(x, c); });
}

}  // namespace tgaudin
