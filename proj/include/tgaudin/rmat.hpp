#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "tgaudin/ratfun.hpp"
#include "tgaudin/series.hpp"
#include "tgaudin/tensor.hpp"

namespace tgaudin {

/// Thrown when a constructor is evaluated where its defining formula has a pole.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class RMatrixKind { P, Tc, TcBar, Tofy, rClassical, Pq, Aq, Rq, RqBar, Dshift, RhoShift };

inline int sign(int v) { return (v > 0) - (v < 0); }

namespace rmat_detail {

template <class F>
F checked_div(const F& a, const F& b, const char* what) {
  if (detail::elem_is_zero(b)) throw PoleError(std::string(what) + ": argument sits on a pole");
  return a / b;
}

/// sum_{i,j} w(i,j) e_ij (x) e_ji on two legs; w receives 0-based labels.
template <class F, class W>
AuxTensor<F> flip_weighted(int n, W&& w) {
  const Space sp = Space::aux(n, 2);
  AuxTensor<F> t(sp);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t.add(sp.encode({i, j}), sp.encode({j, i}), w(i, j));
  return t;
}

}  // namespace rmat_detail

/// Permutation P = sum e_ij (x) e_ji.
template <class F = Rational>
AuxTensor<F> perm_p(int n) {
  return rmat_detail::flip_weighted<F>(n, [](int, int) { return F(1); });
}

/// sum sign(j-i) e_ij (x) e_ji; equals r(-1).
template <class F = Rational>
AuxTensor<F> tc(int n) {
  return rmat_detail::flip_weighted<F>(n, [](int i, int j) { return F(sign(j - i)); });
}

/// sum_{i != j} e_ij (x) e_ji.
template <class F = Rational>
AuxTensor<F> tc_bar(int n) {
  return rmat_detail::flip_weighted<F>(n, [](int i, int j) { return F(i == j ? 0 : 1); });
}

/// T(y) = sum e_ii(x)e_ii + (1-y)^{-1} sum_{i<j} e_ij(x)e_ji + (1+y)^{-1} sum_{i>j} e_ij(x)e_ji.
template <class F>
AuxTensor<F> t_of_y(int n, const F& y) {
  const F lo = rmat_detail::checked_div(F(1), F(1) - y, "T(y)");
  const F hi = rmat_detail::checked_div(F(1), F(1) + y, "T(y)");
  return rmat_detail::flip_weighted<F>(n, [&](int i, int j) { return i == j ? F(1) : (i < j ? lo : hi); });
}

/// Trigonometric classical r-matrix r(x) = sum ((1+x)/(1-x) + sign(j-i)) e_ij (x) e_ji.
template <class F>
AuxTensor<F> r_classical(int n, const F& x) {
  const F h = rmat_detail::checked_div(F(1) + x, F(1) - x, "r(x)");
  return rmat_detail::flip_weighted<F>(n, [&](int i, int j) { return h + F(sign(j - i)); });
}

/// q-permutation: e_ii(x)e_ii, weight q for i>j and q^{-1} for i<j.
template <class F>
AuxTensor<F> perm_pq(int n, const F& q) {
  const F qi = rmat_detail::checked_div(F(1), q, "P^q");
  return rmat_detail::flip_weighted<F>(n, [&](int i, int j) { return i == j ? F(1) : (i > j ? q : qi); });
}

/// Quantum R-matrix R(x) with parameter q.
template <class F>
AuxTensor<F> r_quantum(int n, const F& x, const F& q) {
  const F qi = rmat_detail::checked_div(F(1), q, "R(x)");
  const F den = q - qi * x;
  const F diag_ne = rmat_detail::checked_div(F(1) - x, den, "R(x)");
  const F lower = rmat_detail::checked_div((q - qi) * x, den, "R(x)");
  const F upper = rmat_detail::checked_div(q - qi, den, "R(x)");
  const Space sp = Space::aux(n, 2);
  AuxTensor<F> t(sp);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        t.add(sp.encode({i, i}), sp.encode({i, i}), F(1));
        continue;
      }
      t.add(sp.encode({i, j}), sp.encode({i, j}), diag_ne);
      t.add(sp.encode({i, j}), sp.encode({j, i}), i > j ? lower : upper);
    }
  return t;
}

/// D = diag(q^{N-1}, q^{N-3}, ..., q^{-N+1}) on one leg.
template <class F>
AuxTensor<F> d_shift(int n, const F& q) {
  const Space sp = Space::aux(n, 1);
  AuxTensor<F> t(sp);
  const F qi = rmat_detail::checked_div(F(1), q, "D");
  for (int i = 0; i < n; ++i) {
    const int e = n - 1 - 2 * i;
    F v(1);
    for (int k = 0; k < (e >= 0 ? e : -e); ++k) v = v * (e >= 0 ? q : qi);
    t.add(static_cast<Space::Index>(i), static_cast<Space::Index>(i), v);
  }
  return t;
}

/// rho = diag(N-1, N-3, ..., -N+1) on one leg.
template <class F = Rational>
AuxTensor<F> rho_shift(int n) {
  const Space sp = Space::aux(n, 1);
  AuxTensor<F> t(sp);
  for (int i = 0; i < n; ++i)
    t.add(static_cast<Space::Index>(i), static_cast<Space::Index>(i), F(n - 1 - 2 * i));
  return t;
}

/// One reduced word (list of adjacent transpositions s_a, 1-based a) for a
/// permutation given in one-line notation (sigma[i] = image of i+1, 1-based).
std::vector<int> reduced_word(const std::vector<int>& one_line);

/// Product of the adjacent operators along `word` on k legs; `adjacent`
/// must be a two-leg tensor (typically P^q).
template <class F>
AuxTensor<F> word_product(const AuxTensor<F>& adjacent, int k, const std::vector<int>& word) {
  const int n = adjacent.space().n();
  const Space sp = Space::aux(n, k);
  AuxTensor<F> acc = AuxTensor<F>::identity(sp, F(1));
  for (int a : word) {
    if (a < 1 || a >= k) throw std::out_of_range("word_product: transposition outside 1..k-1");
    acc = acc * embed(adjacent, sp, {static_cast<std::size_t>(a - 1), static_cast<std::size_t>(a)});
  }
  return acc;
}

/// P^q_sigma via one reduced decomposition of sigma.
template <class F>
AuxTensor<F> perm_q(const std::vector<int>& one_line, int n, const F& q) {
  return word_product(perm_pq(n, q), static_cast<int>(one_line.size()), reduced_word(one_line));
}

/// All permutations of 1..k in lexicographic order, with signs.
std::vector<std::pair<std::vector<int>, int>> signed_permutations(int k);

/// Normalized q-antisymmetrizer (1/k!) sum sgn(sigma) P^q_sigma.
template <class F>
AuxTensor<F> antisymmetrizer(int k, int n, const F& q) {
  if (k < 1) throw std::invalid_argument("antisymmetrizer: k must be >= 1");
  const AuxTensor<F> pq = perm_pq(n, q);
  AuxTensor<F> acc(Space::aux(n, k));
  for (const auto& [perm, sg] : signed_permutations(k)) {
    AuxTensor<F> term = word_product(pq, k, reduced_word(perm));
    if (sg > 0)
      acc += term;
    else
      acc -= term;
  }
  return scale_by(acc, Rational(1) / factorial(k));
}

/// Coefficient f_k(q) of f(x) = 1 + sum f_k x^k defined by
/// f(x q^{2N}) = f(x) (1 - x q^2)(1 - x q^{2N-2}) / ((1 - x)(1 - x q^{2N})).
/// Works over any field F holding q; a specialization with q^{2Nk} = 1 throws.
template <class F>
std::vector<F> f_coefficients(int n, int order, const F& q) {
  if (order < 0) throw std::invalid_argument("f_series: order must be >= 0");
  auto qpow = [&](int e) {
    F v(1);
    for (int k = 0; k < e; ++k) v = v * q;
    return v;
  };
  // g = (1 - x q^2)(1 - x q^{2N-2}),  h = (1 - x)(1 - x q^{2N})
  const std::vector<F> g{F(1), -(qpow(2) + qpow(2 * n - 2)), qpow(2 * n)};
  const std::vector<F> h{F(1), -(F(1) + qpow(2 * n)), qpow(2 * n)};
  auto at = [](const std::vector<F>& v, int i) { return i >= 0 && i < static_cast<int>(v.size()) ? v[static_cast<std::size_t>(i)] : F(0); };
  std::vector<F> f{F(1)};
  for (int k = 1; k <= order; ++k) {
    F rhs(0);
    for (int j = 0; j < k; ++j)
      rhs = rhs + f[static_cast<std::size_t>(j)] * (at(g, k - j) - qpow(2 * n * j) * at(h, k - j));
    const F lhs = qpow(2 * n * k) - F(1);
    if (detail::elem_is_zero(lhs))
      throw PoleError("f_series: q^(2Nk) = 1 at k = " + std::to_string(k) + "; q must be generic");
    f.push_back(rhs / lhs);
  }
  return f;
}

using QFun = RatFun<Rational>;

/// f(x) as a truncated series in x with coefficients in Q(q).
TruncSeries<QFun> f_series(int n, int order);

/// R-bar(x q^c) = f(x q^c) R(x q^c) as a two-leg tensor whose entries are
/// truncated series in x over Q(q).
AuxTensor<TruncSeries<QFun>> rbar_shifted_series(int n, int c, int order);

}  // namespace tgaudin
