#include <random>

#include "doctest.h"
#include "tgaudin/pbw.hpp"

using namespace tgaudin;

namespace {

PBWElement e(int n, int i, int j, int t) { return PBWElement::mode(n, {i, j, t}); }

PBWElement comm(const PBWElement& a, const PBWElement& b) { return a * b - b * a; }

Mode random_mode(std::mt19937& rng, int n, int lo, int hi) {
  std::uniform_int_distribution<int> idx(1, n), deg(lo, hi);
  const int i = idx(rng), j = idx(rng);
  return {i, j, deg(rng)};
}

PBWElement random_element(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> coef(-3, 3), len(1, 2);
  PBWElement x = PBWElement::central(n, Rational(0));
  for (int t = 0; t < 2; ++t) {
    std::vector<Mode> w;
    for (int s = len(rng); s > 0; --s) w.push_back(random_mode(rng, n, -2, 2));
    x += normal_order(w, n).scaled(Rational(coef(rng)));
  }
  return x;
}

}  // namespace

TEST_CASE("brackets of single modes") {
  CHECK(bracket({1, 1, -1}, {1, 2, -1}, 2) == e(2, 1, 2, -2));
  CHECK(bracket({1, 2, 1}, {2, 1, -1}, 2) == e(2, 1, 1, 0) - e(2, 2, 2, 0) + PBWElement::central(2));
  CHECK(bracket({1, 1, 1}, {1, 1, -1}, 2) == PBWElement::central(2, Rational(1, 2)));
  CHECK(bracket({1, 1, 1}, {1, 1, -1}, 3) == PBWElement::central(3, Rational(2, 3)));
  CHECK(bracket({1, 2, 0}, {1, 2, 3}, 2).is_zero());
  CHECK_THROWS_AS((void)bracket({1, 1, 1}, {1, 1, -1}, 0), std::logic_error);
}

TEST_CASE("bracket antisymmetry and Jacobi identity") {
  std::mt19937 rng(20261016);
  for (int n = 1; n <= 3; ++n)
    for (int t = 0; t < 40; ++t) {
      const Mode a = random_mode(rng, n, -2, 2), b = random_mode(rng, n, -2, 2), c = random_mode(rng, n, -2, 2);
      CHECK(bracket(a, b, n) == -bracket(b, a, n));
      const PBWElement x = PBWElement::mode(n, a), y = PBWElement::mode(n, b), z = PBWElement::mode(n, c);
      CHECK((comm(comm(x, y), z) + comm(comm(y, z), x) + comm(comm(z, x), y)).is_zero());
      CHECK(comm(x, y) == bracket(a, b, n));
    }
}

TEST_CASE("normal ordering") {
  CHECK(normal_order({{1, 2, -1}, {1, 1, -1}}, 2) == normal_order({{1, 1, -1}, {1, 2, -1}}, 2) - e(2, 1, 2, -2));
  const PBWElement sorted = normal_order({{1, 1, -1}, {1, 2, -1}}, 2);
  REQUIRE(sorted.size() == 1);
  CHECK(sorted.terms().begin()->first.sorted());
  CHECK(normal_order({}, 2) == PBWElement(1));

  SUBCASE("creators before annihilators") {
    CHECK(Mode{1, 1, -1} < Mode{1, 2, 0});
    CHECK(Mode{1, 2, 0} < Mode{1, 1, 0});
    CHECK(Mode{2, 1, 0} < Mode{1, 1, 1});
    const PBWElement x = normal_order({{1, 1, 1}, {1, 1, -1}}, 2);
    CHECK(x == normal_order({{1, 1, -1}, {1, 1, 1}}, 2) + PBWElement::central(2, Rational(1, 2)));
  }

  SUBCASE("both strategies agree on random words") {
    std::mt19937 rng(7);
    for (int n = 1; n <= 3; ++n)
      for (int t = 0; t < 30; ++t) {
        std::vector<Mode> w;
        for (int s = 1 + t % 4; s > 0; --s) w.push_back(random_mode(rng, n, -2, 2));
        const PBWElement a = normal_order(w, n, OrderingStrategy::insertion);
        const PBWElement b = normal_order(w, n, OrderingStrategy::leftmost_swap);
        CHECK(a == b);
        for (const auto& [m, c] : a.terms()) CHECK(m.sorted());
      }
  }

  SUBCASE("multiplication is associative") {
    std::mt19937 rng(11);
    for (int t = 0; t < 15; ++t) {
      const int n = 1 + t % 3;
      const PBWElement a = random_element(rng, n), b = random_element(rng, n), c = random_element(rng, n);
      CHECK((a * b) * c == a * (b * c));
    }
  }
}

TEST_CASE("normal ordering matches the evaluation representation") {
  // the evaluation map is a homomorphism with K acting by zero
  const GaudinRep rep(2, {Rational(2), Rational(-3)});
  std::mt19937 rng(3);
  for (int t = 0; t < 20; ++t) {
    std::vector<Mode> w;
    QOp direct = QOp::identity(rep.space());
    for (int s = 1 + t % 4; s > 0; --s) {
      w.push_back(random_mode(rng, 2, -2, 1));
      direct = direct * evaluate_in_rep(PBWElement::mode(2, w.back()), rep);
    }
    CHECK(evaluate_in_rep(normal_order(w, 2), rep) == direct);
  }
}

TEST_CASE("vacuum evaluation") {
  const PBWElement x = e(2, 1, 2, 0) + e(2, 1, 1, -1) * e(2, 2, 1, 0) + PBWElement::central(2, Rational(3)) * e(2, 1, 2, -1);
  CHECK(x.on_vacuum(Rational(-2)) == e(2, 1, 2, 0) + e(2, 1, 2, -1).scaled(Rational(-6)));
  CHECK(PBWElement::central(2).on_vacuum(Rational(-2)) == PBWElement(-2));
}

TEST_CASE("rank bookkeeping") {
  CHECK(e(2, 1, 1, 0).rank() == 2);
  CHECK((PBWElement(3) * e(3, 1, 2, 0)).rank() == 3);
  CHECK_THROWS_AS((void)(e(2, 1, 1, 0) + e(3, 1, 1, 0)), std::invalid_argument);
}

TEST_CASE("current modes") {
  CHECK(lplus_mode(2, 0, 1, 0) == e(2, 1, 2, 0).scaled(Rational(-2)));
  CHECK(lplus_mode(2, 1, 0, 0).is_zero());
  CHECK(lplus_mode(2, 0, 0, 0) == -e(2, 1, 1, 0));
  CHECK(lplus_mode(2, 1, 0, 3) == e(2, 2, 1, -3).scaled(Rational(-2)));
  CHECK(lminus_mode(2, 1, 0, 0) == e(2, 2, 1, 0).scaled(Rational(2)));
  CHECK(lminus_mode(2, 0, 1, 0).is_zero());
  CHECK(lminus_mode(2, 0, 0, 2) == e(2, 1, 1, 2).scaled(Rational(2)));
  CHECK_THROWS_AS((void)lplus_mode(2, 0, 0, -1), std::invalid_argument);
}

TEST_CASE("symbolic theta for m = 1") {
  for (int n = 1; n <= 3; ++n)
    for (bool shifted : {false, true}) {
      const SymbolicTheta t = theta_symbolic(n, 1, 2, shifted);
      PBWElement zero_modes = PBWElement::central(n, Rational(0)), first = zero_modes, second = zero_modes;
      for (int i = 1; i <= n; ++i) {
        zero_modes += e(n, i, i, 0);
        first += e(n, i, i, -1).scaled(Rational(2));
        second += e(n, i, i, -2).scaled(Rational(2));
      }
      CHECK(t.at(0, 0) == zero_modes);
      CHECK(t.at(0, 1) == first);
      CHECK(t.at(0, 2) == second);
      CHECK(t.at(1, 1) == PBWElement(2 * n));
      CHECK(t.at(1, 0).is_zero());
      CHECK_THROWS_AS((void)t.at(0, 3), TruncationError);
    }
}

TEST_CASE("envelope") {
  CHECK_NOTHROW((void)theta_symbolic(3, 2, 1, false));
  CHECK_THROWS_AS((void)theta_symbolic(3, 3, 1, false), std::invalid_argument);
  CHECK_THROWS_AS((void)theta_symbolic(2, 4, 1, false), std::invalid_argument);
  CHECK_THROWS_AS((void)theta_symbolic(4, 1, 1, false), std::invalid_argument);
  CHECK_THROWS_AS((void)theta_symbolic(2, 0, 1, false), std::invalid_argument);
}

TEST_CASE("trace of the current is central") {
  for (int d = 0; d <= 3; ++d) {
    PBWElement tr = PBWElement::central(2, Rational(0));
    for (int i = 0; i < 2; ++i) tr += lplus_mode(2, i, i, d);
    for (int t = -2; t <= 0; ++t)
      for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) CHECK(comm(tr, e(2, i, j, t)).is_zero());
  }
}

TEST_CASE("coefficients commute") {
  for (bool shifted : {false, true}) {
    std::vector<LabelledElement> all;
    for (int m = 1; m <= 2; ++m)
      for (auto& x : labelled_coefficients(theta_symbolic(2, m, 2, shifted))) all.push_back(std::move(x));
    const PBWCommuteReport r = commute_check(all, 2, 2);
    CHECK(r.pass());
    CHECK(r.pairs == all.size() * (all.size() - 1) / 2);
  }
  // a non-central element is caught
  std::vector<LabelledElement> probe = labelled_coefficients(theta_symbolic(2, 2, 1, false));
  probe.push_back({"probe", e(2, 1, 2, -1)});
  CHECK_FALSE(commute_check(probe, 2).pass());
}

TEST_CASE("vacuum invariance at the critical level") {
  std::vector<LabelledElement> all;
  for (int m = 1; m <= 2; ++m)
    for (auto& x : labelled_coefficients(theta_symbolic(2, m, 1, true))) all.push_back(std::move(x));
  const VacuumReport r = vacuum_invariance_check(all, 2, 2, 2);
  CHECK(r.checks > 0);
  CHECK(r.pass());
  const VacuumReport bad = vacuum_invariance_check({{"probe", e(2, 1, 2, -1)}}, 2, 1);
  CHECK_FALSE(bad.pass());
}

TEST_CASE("symbolic coefficients agree with the representation") {
  const GaudinRep rep(2, {Rational(1), Rational(3)});
  for (bool shifted : {false, true})
    for (int m = 1; m <= 2; ++m) CHECK(cross_check_representation(theta_symbolic(2, m, 2, shifted), rep).empty());
  const GaudinRep rep3(3, {Rational(2)});
  CHECK(cross_check_representation(theta_symbolic(3, 2, 1, true), rep3).empty());
}
