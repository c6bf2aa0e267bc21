#pragma once

#include <stdexcept>
#include <vector>

#include "tgaudin/rational.hpp"
#include "tgaudin/ring.hpp"
#include "tgaudin/tensor.hpp"

namespace tgaudin {

/// N x N matrix over a noncommutative ring E, read as an element of
/// End C^N (x) A for the algebra A that E lives in. Value-initialised entries
/// are zero.
template <class E>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    if (n < 1) throw std::invalid_argument("SquareMatrix: size must be >= 1");
  }

  [[nodiscard]] int n() const { return n_; }
  E& operator()(int i, int j) { return a_[idx(i, j)]; }
  const E& operator()(int i, int j) const { return a_[idx(i, j)]; }

  SquareMatrix& operator+=(const SquareMatrix& o) {
    check(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  SquareMatrix& operator-=(const SquareMatrix& o) {
    check(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
  friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }
  friend SquareMatrix operator-(const SquareMatrix& a) {
    SquareMatrix r = a;
    for (auto& x : r.a_) x = -x;
    return r;
  }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    a.check(b);
    SquareMatrix r(a.n_);
    for (int i = 0; i < a.n_; ++i)
      for (int k = 0; k < a.n_; ++k) {
        const E& x = a(i, k);
        if (detail::elem_is_zero(x)) continue;
        for (int j = 0; j < a.n_; ++j) {
          const E& y = b(k, j);
          if (!detail::elem_is_zero(y)) r(i, j) += x * y;
        }
      }
    return r;
  }

  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    return a.n_ == b.n_ && a.a_ == b.a_;
  }

  [[nodiscard]] E trace() const {
    E t{};
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
  }

  template <class Fn>
  [[nodiscard]] auto map(Fn&& fn) const {
    using S = decltype(fn(std::declval<const E&>()));
    SquareMatrix<S> r(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) r(i, j) = fn((*this)(i, j));
    return r;
  }

 private:
  [[nodiscard]] std::size_t idx(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) throw std::out_of_range("SquareMatrix: index out of range");
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
  }
  void check(const SquareMatrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("SquareMatrix: size mismatch");
  }

  int n_ = 0;
  std::vector<E> a_;
};

/// tr_{1..s}( C . X_1 ... X_s ) where C is an operator on s auxiliary legs with
/// rational entries and X_a is the matrix X placed on leg a. Only the nonzero
/// entries of C are visited:  sum_{alpha,beta} C_{alpha beta} (X_1)_{beta_1 alpha_1} ... (X_s)_{beta_s alpha_s}.
struct RationalScale {
  template <class E>
  E operator()(const E& x, const Rational& c) const {
    return scale_by(x, c);
  }
};

template <class E, class C, class Scale = RationalScale>
E trace_contract(const AuxTensor<C>& c, const std::vector<SquareMatrix<E>>& xs, Scale scale = {}) {
  const Space& sp = c.space();
  if (sp.legs_count() != xs.size()) throw std::invalid_argument("trace_contract: one matrix per leg required");
  E total{};
  for (const auto& [key, coef] : c.entries()) {
    E prod{};
    bool first = true;
    bool vanished = false;
    for (std::size_t a = 0; a < xs.size(); ++a) {
      const E& x = xs[a](sp.digit(key.second, a), sp.digit(key.first, a));
      if (detail::elem_is_zero(x)) {
        vanished = true;
        break;
      }
      prod = first ? x : prod * x;
      first = false;
    }
    if (vanished) continue;
    if (first) throw std::invalid_argument("trace_contract: no legs");
    total += scale(prod, coef);
  }
  return total;
}

}  // namespace tgaudin
