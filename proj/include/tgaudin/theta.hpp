#pragma once

#include <vector>

#include "tgaudin/matrix.hpp"
#include "tgaudin/rmat.hpp"
#include "tgaudin/tensor.hpp"

namespace tgaudin {

/// Coefficient of y^power in T_{s-1,s}(y) ... T_{12}(y) on s auxiliary legs
/// (the identity for s = 1). Computed from the closed form of T(y); cached.
const AuxTensor<Rational>& t_chain_coefficient(int n, int s, int power);

/// Product X_{(c_k,...,c_1)} = X_{k-1,k} ... X_{12} of a two-leg tensor along
/// adjacent legs of a k-leg space.
template <class F>
AuxTensor<F> adjacent_chain(const AuxTensor<F>& two_leg, int k) {
  const Space sp = Space::aux(two_leg.space().n(), k);
  AuxTensor<F> acc = AuxTensor<F>::identity(sp, F(1));
  for (int a = k - 1; a >= 1; --a)
    acc = acc * embed(two_leg, sp, {static_cast<std::size_t>(a - 1), static_cast<std::size_t>(a)});
  return acc;
}

/// Which two-leg tensor a traced chain between legs a < b collapses to.
enum class GapRule {
  derived,     // gap 1: P, even gap: Tc, odd gap >= 3: TcBar
  as_printed,  // gap 1: P, odd gap >= 3: Tc, even gap >= 2: TcBar
};
AuxTensor<Rational> gap_tensor(int n, int gap, GapRule rule);

/// theta_m from the generating function:
/// sum_s tr_{1..s} [y^{m-s}] T_{s-1,s}(y)...T_{12}(y) L_1 ... L_s.
template <class E>
E theta_generating_of(const SquareMatrix<E>& cal_l, int m) {
  E total{};
  for (int s = 1; s <= m; ++s) {
    const AuxTensor<Rational>& c = t_chain_coefficient(cal_l.n(), s, m - s);
    if (c.is_zero()) continue;
    total += trace_contract(c, std::vector<SquareMatrix<E>>(static_cast<std::size_t>(s), cal_l));
  }
  return total;
}

/// tr M-bar_m by the right-multiplication recursion
/// X <- Tc_{a,a+1} X + P_{a,a+1} X L_a, tracing leg a as soon as no later
/// factor touches it. After the trace X lives on one leg and the update reads
/// X_{ab} <- sgn(a-b) X_{ab} + (X L)_{ab}.
template <class E>
E theta_mbar_of(const SquareMatrix<E>& cal_l, int m) {
  if (m < 1) throw std::invalid_argument("theta: m must be >= 1");
  if (m == 1) return cal_l.trace();
  const int n = cal_l.n();
  SquareMatrix<E> x = cal_l;  // the a = 1 step applied to X = 1
  for (int a = 2; a < m; ++a) {
    SquareMatrix<E> next = x * cal_l;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && !detail::elem_is_zero(x(i, j))) next(i, j) += scale_by(x(i, j), Rational(sign(i - j)));
    x = std::move(next);
  }
  return (x * cal_l).trace();
}

/// The same recursion on the full m-leg tensor space with a single trace at
/// the end; exponential in m, used to validate the early-trace version.
template <class E>
E theta_mbar_literal_of(const SquareMatrix<E>& cal_l, int m, const E& one) {
  const int n = cal_l.n();
  const Space sp = Space::aux(n, m);
  auto lift = [&](const AuxTensor<Rational>& t) { return t.map([&](const Rational& c) { return scale_by(one, c); }); };
  auto on_leg = [&](int a) {
    AuxTensor<E> single(Space::aux(n, 1));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        single.add(static_cast<Space::Index>(i), static_cast<Space::Index>(j), cal_l(i, j));
    return embed(single, sp, {static_cast<std::size_t>(a - 1)});
  };
  AuxTensor<E> x = AuxTensor<E>::identity(sp, one);
  for (int a = 1; a < m; ++a) {
    const std::vector<std::size_t> legs{static_cast<std::size_t>(a - 1), static_cast<std::size_t>(a)};
    x = embed(lift(tc(n)), sp, legs) * x + embed(lift(perm_p(n)), sp, legs) * x * on_leg(a);
  }
  x = x * on_leg(m);
  return x.trace();
}

/// tr M-bar_m after collapsing the traced chains:
/// sum over 1 = a_1 < ... < a_k = m of tr X_[a_{k-1} a_k] ... X_[a_1 a_2] L_{a_1} ... L_{a_k}.
template <class E>
E theta_collapsed_of(const SquareMatrix<E>& cal_l, int m, GapRule rule) {
  const int n = cal_l.n();
  if (m == 1) return cal_l.trace();
  E total{};
  // interior subsets of {2..m-1}
  const int interior = m - 2;
  for (unsigned mask = 0; mask < (1u << interior); ++mask) {
    std::vector<int> a{1};
    for (int b = 0; b < interior; ++b)
      if (mask & (1u << b)) a.push_back(b + 2);
    a.push_back(m);
    const int k = static_cast<int>(a.size());
    const Space sp = Space::aux(n, k);
    AuxTensor<Rational> c = AuxTensor<Rational>::identity(sp);
    for (int j = k - 1; j >= 1; --j) {
      const int gap = a[static_cast<std::size_t>(j)] - a[static_cast<std::size_t>(j - 1)];
      c = c * embed(gap_tensor(n, gap, rule), sp, {static_cast<std::size_t>(j - 1), static_cast<std::size_t>(j)});
    }
    total += trace_contract(c, std::vector<SquareMatrix<E>>(static_cast<std::size_t>(k), cal_l));
  }
  return total;
}

}  // namespace tgaudin
