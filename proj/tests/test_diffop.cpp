#include <random>

#include "doctest.h"
#include "test_support.hpp"
#include "tgaudin/diffop.hpp"

using namespace tgaudin;
using QFun = RatFun<Rational>;
using D = DiffOp<QFun>;
using QQ = RatFun<Rational>;
using QQU = RatFun<QQ>;
using QD = QDiffOp<QQU>;
using ES = TruncSeries<QFun>;

namespace {

QFun u() { return QFun::variable(Var::u); }
D dd() { return D::term(1, QFun(1)); }
D fn(const QFun& f) { return D(f); }

QFun random_ratfun(std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-4, 4);
  QFun num(QFun::PolyT(Var::u, {Rational(c(rng)), Rational(c(rng)), Rational(c(rng))}));
  QFun den(QFun::PolyT(Var::u, {Rational(c(rng) == 0 ? 1 : 2), Rational(c(rng))}));
  if (den.is_zero()) den = QFun(1);
  return num / den;
}

/// Action of an operator on a function of u.
QFun apply_to(const D& op, const QFun& f) {
  QFun acc(0);
  for (const auto& [k, c] : op.terms()) {
    QFun g = f;
    for (int i = 0; i < k; ++i) g = g.derivative();
    acc += c * g;
  }
  return acc;
}

}  // namespace

TEST_CASE("Leibniz products of differential operators") {
  CHECK(dd() * fn(u()) == fn(u()) * dd() + fn(QFun(1)));
  const D two_u_d = D::term(1, QFun(2) * u());
  CHECK(two_u_d * two_u_d == D::term(2, QFun(4) * u() * u()) + D::term(1, QFun(4) * u()));
  const QFun c(Rational(7, 3));
  CHECK(apply_to(two_u_d - fn(c), QFun(1)) == -c);
  CHECK((dd() * dd() * fn(u() * u())).coefficient(0) == QFun(2));
}

TEST_CASE("coefficient extraction") {
  const int n = 3;
  const QFun trl = QFun(1) / (QFun(1) - u());
  const D theta1 = D::term(1, QFun(2 * n) * u()) - fn(trl);
  CHECK(theta1.coefficient(1) == QFun(2 * n) * u());
  CHECK(theta1.coefficient(0) == -trl);
  CHECK(theta1.coefficient(9).is_zero());
  CHECK(theta1.degree() == 1);
}

TEST_CASE("randomized associativity and the Weyl commutator") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 12; ++trial) {
    const QFun f = random_ratfun(rng);
    const QFun g = random_ratfun(rng);
    const QFun h = random_ratfun(rng);
    const D a = D::term(2, f) + D::term(0, g);
    const D b = D::term(1, h) + D::term(0, f);
    const D c = D::term(1, g) + D::term(3, QFun(1));
    CHECK((a * b) * c == a * (b * c));
    const D fd = D::term(1, f);
    const D gd = D::term(1, g);
    CHECK(fd * gd - gd * fd == D::term(1, f * g.derivative() - g * f.derivative()));
  }
}

TEST_CASE("delta shifts arguments by q^-2") {
  const QQ q = QQ::variable(Var::q);
  const QQU uu = QQU::variable(Var::u);
  const QD delta = QD::term(1, QQU(1));
  const QQU qm2 = QQU(QQ(1) / (q * q));
  CHECK(delta * QD(uu) == QD::term(1, uu * qm2));
  const QQU g = (QQU(1) + uu) / (QQU(QQ(3)) - uu);
  const QQU g4 = (QQU(1) + uu * qm2 * qm2) / (QQU(QQ(3)) - uu * qm2 * qm2);
  CHECK(delta * delta * QD(g) == QD::term(2, g4));
  CHECK(delta * QD(QQU(QQ(5))) == QD::term(1, QQU(QQ(5))));
}

TEST_CASE("delta on eps-series matches the exact shift") {
  const QFun g = (QFun(1) + u()) / (QFun(3) - u() * u());
  const int order = 4;
  const ES s(Var::eps, order, {g});
  for (int k = 1; k <= 3; ++k) {
    const ES shifted = delta_shift(s, k);
    for (const Rational& u0 : {Rational(1, 2), Rational(-2), Rational(5, 7)}) {
      // g(u0 (1+eps)^{-2k}) as a rational function of eps, expanded at 0
      const QFun e = QFun::variable(Var::eps);
      QFun scale(1);
      for (int i = 0; i < 2 * k; ++i) scale = scale / (QFun(1) + e);
      const QFun arg = QFun(u0) * scale;
      const QFun exact = (QFun(1) + arg) / (QFun(3) - arg * arg);
      const auto coeffs = expand_at(exact, Rational(0), 0, order);
      for (int j = 0; j <= order; ++j) CHECK(shifted.coeff(j).eval(u0) == coeffs[static_cast<std::size_t>(j)]);
    }
  }
}

TEST_CASE("at q = 1 delta commutes with everything") {
  using QE = QDiffOp<ES>;
  const ES g(Var::eps, 0, {(QFun(1) + u()) / (QFun(2) - u())});
  const QE delta = QE::term(1, ES(Var::eps, 0, {QFun(1)}));
  CHECK(delta * QE(g) == QE(g) * delta);
}
