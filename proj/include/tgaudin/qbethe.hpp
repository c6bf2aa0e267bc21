#pragma once

#include <string>
#include <vector>

#include "tgaudin/diffop.hpp"
#include "tgaudin/gaudin.hpp"
#include "tgaudin/matrix.hpp"
#include "tgaudin/rmat.hpp"
#include "tgaudin/series.hpp"

namespace tgaudin {

/// Q(q)
using QQ = RatFun<Rational>;
/// Q(q)(u): outer variable u, coefficients in Q(q).
using QQU = RatFun<QQ>;
/// Q(u)[[eps]] with q = 1 + eps.
using EpsSeries = TruncSeries<QFun>;

using QQOp = AuxTensor<QQU>;
using QConstOp = AuxTensor<QQ>;
using EpsOp = AuxTensor<EpsSeries>;

/// Evaluation representation of the q-current on l vector representations.
class QRep : public GaudinRep {
 public:
  using GaudinRep::GaudinRep;
};

/// Quantum R-matrix R_{0i}(x) read as an N x N matrix over operators on the
/// quantum space (entry (a,b) multiplies e_ab on the auxiliary leg).
template <class F>
SquareMatrix<AuxTensor<F>> site_r_matrix(const QRep& rep, int site, const F& x, const F& q) {
  const int n = rep.n();
  const AuxTensor<F> r = r_quantum(n, x, q);
  const Space& sp = r.space();
  SquareMatrix<AuxTensor<F>> out(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) out(a, b) = AuxTensor<F>(rep.space());
  for (const auto& [key, v] : r.entries()) {
    const int a = sp.digit(key.first, 0), b = sp.digit(key.second, 0);
    const int c = sp.digit(key.first, 1), d = sp.digit(key.second, 1);
    const QOp unit = site_unit(rep, site, c, d);
    out(a, b) += unit.map([&](const Rational& w) { return F(w) * v; });
  }
  return out;
}

/// L+(u) = R_01(u/a_1) ... R_0l(u/a_l) over any field holding u and q.
template <class F>
SquareMatrix<AuxTensor<F>> qrep_current_in(const QRep& rep, const F& u, const F& q) {
  SquareMatrix<AuxTensor<F>> acc;
  for (int s = 0; s < rep.sites(); ++s) {
    const F x = u * F(Rational(1) / rep.points()[static_cast<std::size_t>(s)]);
    auto factor = site_r_matrix(rep, s, x, q);
    acc = s == 0 ? std::move(factor) : acc * factor;
  }
  return acc;
}

SquareMatrix<QQOp> qrep_current(const QRep& rep);
/// The same current expanded in eps = q - 1 to the given order.
SquareMatrix<EpsOp> qrep_current_eps(const QRep& rep, int order);

/// q -> 1 specialization of a Q(q)(u) function.
QFun specialize_q(const QQU& f, const Rational& q0);

/// RLL relation R(u/v) L1(u) L2(v) = L2(v) L1(u) R(u/v). u stays symbolic;
/// after clearing denominators the difference is a polynomial in v of degree
/// at most l + 1, so it is checked at l + 3 distinct rational v.
struct RllCheck {
  bool holds = false;
  int degree_bound = 0;
  std::vector<Rational> samples;
  std::string first_failure;  // empty when the relation holds
};
RllCheck rll_check(const QRep& rep);

enum class BetheKind { antisym, newton };
std::string to_string(BetheKind kind);

/// One-line form of the cycle (k, k-1, ..., 1): [k, 1, 2, ..., k-1].
std::vector<int> descending_cycle(int k);

/// tr_{1..k} X L_1(u) L_2(u q^{-2}) ... L_k(u q^{-2k+2}) (D_1 ... D_k),
/// X = A^(k) (antisym, k <= N) or P^q of the cycle (k, ..., 1) (newton).
template <class F>
AuxTensor<F> bethe_in(const QRep& rep, const SquareMatrix<AuxTensor<F>>& current, const F& q, BetheKind kind, int k,
                      bool with_d) {
  const int n = rep.n();
  if (k < 1) throw std::invalid_argument("bethe: k must be >= 1");
  if (kind == BetheKind::antisym && k > n) throw std::invalid_argument("bethe: antisymmetrizer needs k <= N");
  const AuxTensor<F> x = kind == BetheKind::antisym ? antisymmetrizer(k, n, q) : perm_q(descending_cycle(k), n, q);
  const AuxTensor<F> d = d_shift(n, q);
  std::vector<SquareMatrix<AuxTensor<F>>> legs;
  for (int j = 0; j < k; ++j) {
    SquareMatrix<AuxTensor<F>> lj = current.map([j](const AuxTensor<F>& e) { return delta_shift(e, j); });
    if (with_d)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          lj(a, b) = lj(a, b).map([&](const F& v) {
            return v * d.at(static_cast<Space::Index>(b), static_cast<Space::Index>(b));
          });
    legs.push_back(std::move(lj));
  }
  auto scale = [](const AuxTensor<F>& e, const F& c) { return e.map([&](const F& v) { return v * c; }); };
  return trace_contract(x, legs, scale);
}

QQOp bethe(const QRep& rep, BetheKind kind, int k, bool with_d);

/// Partial-fraction data of an operator-valued function of u over Q(q),
/// with candidate poles a_i q^{2j}, 1 <= j <= max_shift.
struct QLocation {
  bool pole = false;
  int site = -1;
  int shift = 0;  // pole at a_site q^{2 shift}
  int order = 0;  // pole order, or polynomial degree
  friend bool operator==(const QLocation&, const QLocation&) = default;
  friend auto operator<=>(const QLocation&, const QLocation&) = default;
};
std::vector<std::pair<QLocation, QConstOp>> q_partial_fraction_operators(const QRep& rep, const QQOp& f,
                                                                          int max_shift);

struct BetheCommutativity {
  bool with_d = false;
  std::vector<std::string> elements;  // e.g. "newton k=2"
  std::size_t operators = 0;
  std::size_t pairs = 0;
  std::vector<std::string> failures;
  [[nodiscard]] bool pass() const { return failures.empty(); }
};
/// Pairwise commutators of the partial-fraction data of every Bethe element
/// (both kinds, 1 <= k <= k_max, antisym only up to N) with the same D choice.
BetheCommutativity bethe_commutativity(const QRep& rep, int k_max, bool with_d, int workers = 1);

using QQDelta = QDiffOp<QQOp>;
using EpsDelta = QDiffOp<EpsOp>;

/// The delta-polynomial recursion for M = L+ delta (or L+ D delta), traced:
/// tr (1 - M_m)(P_{m-1,m} - P^q_{m-1,m} M_{m-1}) ... (P_12 - P^q_12 M_1) 1.
/// Legs are traced as soon as no later factor touches them; the state is then
/// a single-leg matrix X and a step reads X_ab <- X_ab - w(b,a) (X M)_ab with
/// w the P^q weights.
template <class F>
QDiffOp<AuxTensor<F>> mcal_numerator_in(const QRep& rep, const SquareMatrix<AuxTensor<F>>& current, const F& q,
                                        int m, bool with_d) {
  using E = QDiffOp<AuxTensor<F>>;
  if (m < 1) throw std::invalid_argument("mcal: m must be >= 1");
  const int n = rep.n();
  const AuxTensor<F> d = d_shift(n, q);
  const F qi = F(1) / q;
  SquareMatrix<E> big_m(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      AuxTensor<F> e = current(a, b);
      if (with_d) e = e.map([&](const F& v) { return v * d.at(static_cast<Space::Index>(b), static_cast<Space::Index>(b)); });
      big_m(a, b) = E::term(1, std::move(e));
    }
  SquareMatrix<E> x(n);
  for (int a = 0; a < n; ++a) x(a, a) = E(AuxTensor<F>::identity(rep.space(), F(1)));
  for (int step = 1; step < m; ++step) {
    const SquareMatrix<E> xm = x * big_m;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const E& t = xm(a, b);
        if (t.is_zero()) continue;
        if (a == b)
          x(a, b) -= t;
        else {
          const F w = b > a ? q : qi;
          x(a, b) -= t.map([&](const AuxTensor<F>& c) { return c.map([&](const F& v) { return v * w; }); });
        }
      }
  }
  return (x - x * big_m).trace();
}

/// tr Mc_m = numerator / (q-1)^m over Q(q)(u).
struct McalResult {
  int m = 0;
  QQDelta numerator;
  [[nodiscard]] QQDelta value() const;
};
McalResult mcal(const QRep& rep, int m, bool with_d);

/// sum_k (-1)^k binom(m,k) tr P^q_{(k..1)} M_1 ... M_k; the k = 0 term is
/// tr over m legs of the P-cycle, i.e. N.
QQDelta mcal_collapsed_numerator(const QRep& rep, int m, bool with_d);

/// Partial-trace identity for Pi_{a_1..a_k} built from P-cycles and P^q.
struct TracePiCheck {
  int m = 0;
  std::vector<int> subset;
  bool holds = false;
  AuxTensor<QQ> lhs;
  AuxTensor<QQ> rhs;
};
TracePiCheck trace_identity_pi(int m, const std::vector<int>& subset, int n);

/// eps-expansion comparison of (q-1)^m tr Mc_m with tr M-bar_m.
struct ClassicalLimitReport {
  int m = 0;
  bool with_d = false;
  bool current_matches = false;      // eps^1 of L+ equals the q -> 1 current
  bool lower_orders_vanish = false;  // eps^0 .. eps^{m-1}
  bool leading_matches = false;      // eps^m equals tr M-bar_m
  OpDiff leading;
  OpDiff expected;
  [[nodiscard]] bool pass() const { return current_matches && lower_orders_vanish && leading_matches; }
};
ClassicalLimitReport classical_limit_compare(const QRep& rep, int m, bool with_d);

/// delta^k -> exp(-2k log(1+eps) u d) rewriting of a delta polynomial.
DiffOp<EpsOp> delta_to_d(const EpsDelta& p, int order);

/// (Rbar(x q^c) - Rbar(x q^{-c})) / (q-1)^2 at q = 1 against
/// 4c x/(1-x)^2 (P - 1/N), coefficientwise for x^0 .. x^order.
struct CentralTermCheck {
  int n = 0;
  int c = 0;
  int order = 0;
  bool holds = false;
  std::vector<int> failing_powers;
};
CentralTermCheck central_term_check(int n, int c, int order);

}  // namespace tgaudin
