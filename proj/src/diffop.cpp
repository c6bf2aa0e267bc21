#include "tgaudin/diffop.hpp"

namespace tgaudin {

TruncSeries<RatFun<Rational>> delta_shift(const TruncSeries<RatFun<Rational>>& s, int k) {
  using QFun = RatFun<Rational>;
  if (k == 0 || s.is_zero()) return s;
  if (s.is_exact()) {
    for (const auto& c : s.stored())
      if (!c.is_constant()) throw TruncationError("delta_shift: u-dependent exact eps-series needs a finite order");
    return s;
  }
  const int m = s.order();
  // w = (1+eps)^{-2k} - 1, coefficients binom(-2k, n) for n >= 1.
  std::vector<Rational> w(static_cast<std::size_t>(m) + 1, Rational(0));
  Rational b(1);
  for (int n = 1; n <= m; ++n) {
    b = b * Rational(-2 * k - (n - 1)) / Rational(n);
    w[static_cast<std::size_t>(n)] = b;
  }
  auto mul = [m](const std::vector<Rational>& a, const std::vector<Rational>& c) {
    std::vector<Rational> r(static_cast<std::size_t>(m) + 1, Rational(0));
    for (int i = 0; i <= m; ++i) {
      if (a[static_cast<std::size_t>(i)].is_zero()) continue;
      for (int j = 0; i + j <= m; ++j) r[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(j)];
    }
    return r;
  };
  std::vector<std::vector<Rational>> wpow{std::vector<Rational>(static_cast<std::size_t>(m) + 1, Rational(0))};
  wpow[0][0] = Rational(1);
  for (int n = 1; n <= m; ++n) wpow.push_back(mul(wpow.back(), w));

  const QFun u = QFun::variable(Var::u);
  std::vector<QFun> res(static_cast<std::size_t>(m) + 1);
  for (int j = 0; j <= m && j < static_cast<int>(s.stored().size()); ++j) {
    QFun g = s.stored()[static_cast<std::size_t>(j)];
    QFun upow(1);
    for (int n = 0; j + n <= m && !g.is_zero(); ++n) {
      const QFun c = g * upow * QFun(Rational(1) / factorial(n));
      for (int t = n; j + t <= m; ++t) {
        const Rational& wt = wpow[static_cast<std::size_t>(n)][static_cast<std::size_t>(t)];
        if (!wt.is_zero()) res[static_cast<std::size_t>(j + t)] += c * QFun(wt);
      }
      g = g.derivative();
      upow = upow * u;
    }
  }
  return TruncSeries<QFun>(Var::eps, m, std::move(res));
}

}  // namespace tgaudin
