#include <random>

#include "doctest.h"
#include "test_support.hpp"
#include "tgaudin/matrix.hpp"
#include "tgaudin/rmat.hpp"
#include "tgaudin/tensor.hpp"

using namespace tgaudin;
using T = AuxTensor<Rational>;

namespace {

T random_sparse(const Space& sp, std::mt19937& rng, int entries) {
  T t(sp);
  std::uniform_int_distribution<Space::Index> pick(0, sp.dim() - 1);
  for (int k = 0; k < entries; ++k) t.add(pick(rng), pick(rng), test_support::random_rational(rng));
  return t;
}

T on_legs(const T& t, int s, std::size_t a, std::size_t b) {
  return embed(t, Space::aux(t.space().n(), s), {a, b});
}

bool no_stored_zeros(const T& t) {
  for (const auto& [k, v] : t.entries())
    if (v.is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("space indexing is mixed radix with the first leg most significant") {
  const Space sp = Space::aux(3, 3);
  CHECK(sp.dim() == 27);
  CHECK(sp.encode({1, 0, 2}) == 11);
  CHECK(sp.decode(11) == std::vector<int>{1, 0, 2});
  CHECK_THROWS(Space(2, {{LegKind::aux, 1}, {LegKind::aux, 1}}));
  CHECK(Space(2, {}).dim() == 1);
}

TEST_CASE("embed places a tensor on chosen legs") {
  const int n = 3;
  const Space s3 = Space::aux(n, 3);
  const T p = on_legs(perm_p(n), 3, 0, 1);
  // P on legs (1,2) sends e1 (x) e2 (x) e3 to e2 (x) e1 (x) e3.
  CHECK(p.at({1, 0, 2}, {0, 1, 2}) == 1);
  CHECK(p.at({0, 1, 2}, {0, 1, 2}) == 0);

  CHECK(embed(T::identity(Space::aux(n, 2)), s3, {2, 0}) == T::identity(s3));

  // e12 (x) e21 on legs (1,3): <1,k,2| . |2,k,1> = 1 for each k.
  const Space s2 = Space::aux(n, 2);
  T e(s2);
  e.add(s2.encode({0, 1}), s2.encode({1, 0}), 1);
  const T emb = embed(e, s3, {0, 2});
  CHECK(emb.nnz() == 3);
  for (int k = 0; k < n; ++k) CHECK(emb.at({0, k, 1}, {1, k, 0}) == 1);

  CHECK_THROWS(embed(e, s3, {1, 1}));
  CHECK_THROWS(embed(e, Space::aux(2, 3), {0, 1}));
  CHECK_THROWS(embed(e, s3, {0}));
}

TEST_CASE("compose and commutator on permutations") {
  const int n = 2;
  const T p12 = on_legs(perm_p(n), 3, 0, 1);
  const T p23 = on_legs(perm_p(n), 3, 1, 2);
  const T p13 = on_legs(perm_p(n), 3, 0, 2);
  CHECK(p12 * p12 == T::identity(Space::aux(n, 3)));
  CHECK(p12 * p23 * p12 == p13);
  CHECK(commutator(on_legs(perm_p(n), 4, 0, 1), on_legs(perm_p(n), 4, 2, 3)).is_zero());
  CHECK_THROWS_AS(p12 * perm_p(n), SpaceMismatch);
}

TEST_CASE("partial traces of the distinguished tensors") {
  for (int n = 1; n <= 4; ++n) {
    CAPTURE(n);
    CHECK(perm_p(n).partial_trace({0}) == T::identity(Space(n, {{LegKind::aux, 2}})));
    CHECK(tc(n).partial_trace({0}).is_zero());
    CHECK(tc_bar(n).partial_trace({0}).is_zero());
    CHECK(perm_p(n).trace() == Rational(n));
    // tr_2 X_23 P_12 = X_13 for X in {Tc, TcBar}
    for (const T& x : {tc(n), tc_bar(n)}) {
      const T lhs = (on_legs(x, 3, 1, 2) * on_legs(perm_p(n), 3, 0, 1)).partial_trace({1});
      const T rhs = x;  // legs (1,3) survive and are relabelled in order
      CHECK(lhs.space().legs() == std::vector<Leg>{{LegKind::aux, 1}, {LegKind::aux, 3}});
      CHECK(lhs.entries() == rhs.entries());
    }
  }
}

TEST_CASE("quantum legs are never traced") {
  const Space mixed(2, {{LegKind::aux, 0}, {LegKind::quantum, 1}});
  const T id = T::identity(mixed);
  CHECK(id.partial_trace({0}) == T::identity(Space(2, {{LegKind::quantum, 1}}), Rational(2)));
  CHECK_THROWS_AS((void)id.partial_trace({1}), std::invalid_argument);
}

TEST_CASE("randomized algebraic properties") {
  std::mt19937 rng(424242);
  const Space sp = Space::aux(2, 3);
  for (int trial = 0; trial < 15; ++trial) {
    const T a = random_sparse(sp, rng, 12);
    const T b = random_sparse(sp, rng, 12);
    const T c = random_sparse(sp, rng, 12);
    CHECK((a * b) * c == a * (b * c));
    CHECK(commutator(a, b) == -commutator(b, a));
    CHECK(commutator(a + scale_by(c, Rational(3)), b) == commutator(a, b) + scale_by(commutator(c, b), Rational(3)));
    CHECK(no_stored_zeros(a * b - b * a));
    CHECK((a - a).nnz() == 0);

    // trace slides past a factor supported away from the traced leg
    const T small = random_sparse(Space::aux(2, 2), rng, 6);
    const T b_on_23 = embed(small, sp, {1, 2});
    const T lhs = (a * b_on_23).partial_trace({0});
    const T reduced = a.partial_trace({0});
    CHECK(lhs == reduced * small.relabel(reduced.space()));
  }
}

TEST_CASE("trace_contract agrees with the explicit tensor computation") {
  // tr_{12}(P_12 X_1 X_2) = tr(X^2) for a scalar matrix X
  std::mt19937 rng(5);
  const int n = 3;
  SquareMatrix<Rational> x(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) x(i, j) = test_support::random_rational(rng);
  const Rational lhs = trace_contract(perm_p(n), std::vector<SquareMatrix<Rational>>{x, x});
  CHECK(lhs == (x * x).trace());

  // with a non-permutation C, compare to building the tensor product
  const T c = tc(n) + scale_by(perm_p(n), Rational(2));
  const Space s1 = Space::aux(n, 1);
  T x1(s1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) x1.add(static_cast<Space::Index>(i), static_cast<Space::Index>(j), x(i, j));
  const T prod = c * kron(x1, x1.relabel(Space(n, {{LegKind::aux, 2}})));
  CHECK(trace_contract(c, std::vector<SquareMatrix<Rational>>{x, x}) == prod.trace());
}
