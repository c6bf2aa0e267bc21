#include "tgaudin/qbethe.hpp"

#include <algorithm>
#include <map>

#include "tgaudin/parallel.hpp"
#include "tgaudin/theta.hpp"

namespace tgaudin {

namespace {

QQ q_var() { return QQ::variable(Var::q); }

QQ q_power(int e) {
  QQ v(1);
  const QQ step = e >= 0 ? q_var() : QQ(1) / q_var();
  for (int i = 0; i < (e >= 0 ? e : -e); ++i) v = v * step;
  return v;
}

EpsSeries eps_q(int order) { return (EpsSeries(1) + EpsSeries::variable(Var::eps)).truncate(order); }

template <class F>
AuxTensor<F> times(const AuxTensor<F>& t, const F& c) {
  return t.map([&](const F& v) { return v * c; });
}

}  // namespace

SquareMatrix<QQOp> qrep_current(const QRep& rep) {
  return qrep_current_in(rep, QQU::variable(Var::u), QQU(q_var()));
}

SquareMatrix<EpsOp> qrep_current_eps(const QRep& rep, int order) {
  if (order < 1) throw std::invalid_argument("qrep_current_eps: order must be >= 1");
  return qrep_current_in(rep, EpsSeries(QFun::variable(Var::u)), eps_q(order));
}

QFun specialize_q(const QQU& f, const Rational& q0) {
  auto spec = [&](const Poly<QQ>& p) {
    std::vector<Rational> c;
    for (const QQ& x : p.coeffs()) c.push_back(x.eval(q0));
    return Poly<Rational>(Var::u, std::move(c));
  };
  return QFun(spec(f.num()), spec(f.den()));
}

RllCheck rll_check(const QRep& rep) {
  const int n = rep.n();
  const int n2 = n * n;
  const QQU q(q_var());
  const auto lu = qrep_current_in(rep, QQU::variable(Var::u), q);
  RllCheck out;
  out.degree_bound = rep.sites() + 1;
  static const std::vector<Rational> pool{Rational(2),     Rational(-1, 2), Rational(3),     Rational(5, 3),
                                          Rational(-7, 4), Rational(4),     Rational(-9, 5), Rational(11, 6),
                                          Rational(-6),    Rational(13, 7)};
  const std::size_t count = static_cast<std::size_t>(out.degree_bound + 2);
  if (count > pool.size()) throw std::invalid_argument("rll_check: too many sites for the sample pool");
  out.samples.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(count));
  out.holds = true;
  for (const Rational& v0 : out.samples) {
    const auto lv = qrep_current_in(rep, QQU(QQ(v0)), q);
    const AuxTensor<QQU> r = r_quantum(n, QQU::variable(Var::u) * QQU(QQ(Rational(1) / v0)), q);
    SquareMatrix<QQOp> rm(n2), l12(n2), l21(n2);
    for (int i = 0; i < n2; ++i)
      for (int j = 0; j < n2; ++j) {
        rm(i, j) = QQOp::identity(rep.space(), r.at(static_cast<Space::Index>(i), static_cast<Space::Index>(j)));
        const int a1 = i / n, a2 = i % n, b1 = j / n, b2 = j % n;
        l12(i, j) = lu(a1, b1) * lv(a2, b2);
        l21(i, j) = lv(a2, b2) * lu(a1, b1);
      }
    if (!(rm * l12 == l21 * rm)) {
      out.holds = false;
      out.first_failure = "v = " + v0.to_string();
      break;
    }
  }
  return out;
}

std::string to_string(BetheKind kind) { return kind == BetheKind::antisym ? "antisym" : "newton"; }

std::vector<int> descending_cycle(int k) {
  std::vector<int> w{k};
  for (int i = 1; i < k; ++i) w.push_back(i);
  return w;
}

QQOp bethe(const QRep& rep, BetheKind kind, int k, bool with_d) {
  return bethe_in(rep, qrep_current(rep), QQU(q_var()), kind, k, with_d);
}

std::vector<std::pair<QLocation, QConstOp>> q_partial_fraction_operators(const QRep& rep, const QQOp& f,
                                                                          int max_shift) {
  std::vector<QQ> poles;
  std::vector<QLocation> where;
  for (int s = 0; s < rep.sites(); ++s)
    for (int j = 1; j <= max_shift; ++j) {
      poles.push_back(QQ(rep.points()[static_cast<std::size_t>(s)]) * q_power(2 * j));
      where.push_back({true, s, j, 0});
    }
  std::map<QLocation, QConstOp> acc;
  auto slot = [&](const QLocation& loc) -> QConstOp& {
    auto it = acc.find(loc);
    if (it == acc.end()) it = acc.emplace(loc, QConstOp(rep.space())).first;
    return it->second;
  };
  for (const auto& [key, value] : f.entries()) {
    const auto pf = partial_fractions(value, poles);
    const auto& poly = pf.polynomial.coeffs();
    for (std::size_t d = 0; d < poly.size(); ++d)
      if (!poly[d].is_zero()) slot({false, -1, 0, static_cast<int>(d)}).add(key.first, key.second, poly[d]);
    for (const auto& [pole, cs] : pf.principal) {
      const auto idx = static_cast<std::size_t>(std::find(poles.begin(), poles.end(), pole) - poles.begin());
      for (std::size_t p = 0; p < cs.size(); ++p)
        if (!cs[p].is_zero()) {
          QLocation loc = where[idx];
          loc.order = static_cast<int>(p) + 1;
          slot(loc).add(key.first, key.second, cs[p]);
        }
    }
  }
  std::vector<std::pair<QLocation, QConstOp>> out;
  for (auto& [loc, op] : acc)
    if (!op.is_zero()) out.emplace_back(loc, std::move(op));
  return out;
}

BetheCommutativity bethe_commutativity(const QRep& rep, int k_max, bool with_d, int workers) {
  struct Job {
    BetheKind kind;
    int k;
  };
  std::vector<Job> jobs;
  for (int k = 1; k <= k_max; ++k) {
    if (k <= rep.n()) jobs.push_back({BetheKind::antisym, k});
    jobs.push_back({BetheKind::newton, k});
  }
  const auto current = qrep_current(rep);
  const QQU q(q_var());
  const auto data = parallel_map<std::vector<std::pair<QLocation, QConstOp>>>(jobs.size(), workers, [&](std::size_t i) {
    return q_partial_fraction_operators(rep, bethe_in(rep, current, q, jobs[i].kind, jobs[i].k, with_d), jobs[i].k);
  });

  BetheCommutativity out;
  out.with_d = with_d;
  std::vector<QConstOp> ops;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const std::string name = to_string(jobs[i].kind) + " k=" + std::to_string(jobs[i].k);
    out.elements.push_back(name);
    for (const auto& [loc, op] : data[i]) {
      ops.push_back(op);
      labels.push_back(name + (loc.pole ? " pole a" + std::to_string(loc.site + 1) + "q^" + std::to_string(2 * loc.shift) +
                                              " order " + std::to_string(loc.order)
                                        : " u^" + std::to_string(loc.order)));
    }
  }
  out.operators = ops.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < ops.size(); ++i)
    for (std::size_t j = i + 1; j < ops.size(); ++j) pairs.emplace_back(i, j);
  out.pairs = pairs.size();
  const auto zero = parallel_map<char>(pairs.size(), workers, [&](std::size_t p) {
    return static_cast<char>(commutator(ops[pairs[p].first], ops[pairs[p].second]).is_zero());
  });
  for (std::size_t p = 0; p < pairs.size(); ++p)
    if (!zero[p]) out.failures.push_back(labels[pairs[p].first] + " vs " + labels[pairs[p].second]);
  return out;
}

QQDelta McalResult::value() const {
  QQ denom(1);
  for (int i = 0; i < m; ++i) denom = denom * (q_var() - QQ(1));
  const QQU factor(QQ(1) / denom);
  return numerator.map([&](const QQOp& c) { return times(c, factor); });
}

McalResult mcal(const QRep& rep, int m, bool with_d) {
  return {m, mcal_numerator_in(rep, qrep_current(rep), QQU(q_var()), m, with_d)};
}

QQDelta mcal_collapsed_numerator(const QRep& rep, int m, bool with_d) {
  if (m < 1) throw std::invalid_argument("mcal: m must be >= 1");
  const auto current = qrep_current(rep);
  const QQU q(q_var());
  QQDelta total(QQOp::identity(rep.space(), QQU(rep.n())));
  for (int k = 1; k <= m; ++k) {
    const Rational w = binomial(m, k) * Rational(k % 2 == 0 ? 1 : -1);
    total += QQDelta::term(k, scale_by(bethe_in(rep, current, q, BetheKind::newton, k, with_d), w));
  }
  return total;
}

TracePiCheck trace_identity_pi(int m, const std::vector<int>& subset, int n) {
  if (m < 1) throw std::invalid_argument("trace_identity_pi: m must be >= 1");
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] < 1 || subset[i] > m) throw std::invalid_argument("trace_identity_pi: index outside 1..m");
    if (i > 0 && subset[i] <= subset[i - 1]) throw std::invalid_argument("trace_identity_pi: subset must increase");
  }
  const QQ q = q_var();
  const Space sp = Space::aux(n, m);
  const AuxTensor<QQ> p = perm_p<QQ>(n);
  const AuxTensor<QQ> pq = perm_pq(n, q);
  // Step a contributes P^q_{a,a+1} when a is chosen (a < m) and P_{a,a+1}
  // otherwise; the steps are applied right to left, a = 1 first.
  AuxTensor<QQ> pi = AuxTensor<QQ>::identity(sp, QQ(1));
  for (int a = m - 1; a >= 1; --a) {
    const bool chosen = std::find(subset.begin(), subset.end(), a) != subset.end();
    pi = pi * embed(chosen ? pq : p, sp, {static_cast<std::size_t>(a - 1), static_cast<std::size_t>(a)});
  }
  std::vector<std::size_t> traced;
  for (int a = 1; a <= m; ++a)
    if (std::find(subset.begin(), subset.end(), a) == subset.end()) traced.push_back(static_cast<std::size_t>(a - 1));
  TracePiCheck out;
  out.m = m;
  out.subset = subset;
  const int k = static_cast<int>(subset.size());
  if (k == 0) {
    // Full trace of the P-cycle: the scalar N.
    out.lhs = AuxTensor<QQ>::identity(Space::aux(n, 0), pi.trace());
    out.rhs = AuxTensor<QQ>::identity(Space::aux(n, 0), QQ(n));
  } else {
    out.lhs = pi.partial_trace(traced).relabel(Space::aux(n, k));
    out.rhs = adjacent_chain(pq, k);
  }
  out.holds = out.lhs == out.rhs;
  return out;
}

DiffOp<EpsOp> delta_to_d(const EpsDelta& p, int order) {
  // log(1+eps) and its powers
  std::vector<QFun> lc(static_cast<std::size_t>(order) + 1, QFun(0));
  for (int i = 1; i <= order; ++i) lc[static_cast<std::size_t>(i)] = QFun(Rational(i % 2 == 1 ? 1 : -1, i));
  const EpsSeries log1p(Var::eps, order, lc);
  std::vector<EpsSeries> logpow{EpsSeries(1).truncate(order)};
  for (int i = 1; i <= order; ++i) logpow.push_back(logpow.back() * log1p);
  // Stirling numbers of the second kind S(n, i)
  std::vector<std::vector<Rational>> stirling(static_cast<std::size_t>(order) + 1,
                                              std::vector<Rational>(static_cast<std::size_t>(order) + 1, Rational(0)));
  stirling[0][0] = Rational(1);
  for (int n = 1; n <= order; ++n)
    for (int i = 1; i <= n; ++i)
      stirling[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)] =
          stirling[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(i - 1)] +
          Rational(i) * stirling[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(i)];

  const QFun u = QFun::variable(Var::u);
  DiffOp<EpsOp> out;
  for (const auto& [k, c] : p.terms()) {
    for (int i = 0; i <= order; ++i) {
      EpsSeries w = EpsSeries(0).truncate(order);
      for (int n = i; n <= order; ++n) {
        const Rational s = stirling[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
        if (s.is_zero()) continue;
        const Rational coef = pow(Rational(-2 * k), n) / factorial(n) * s;
        if (coef.is_zero()) continue;
        w += logpow[static_cast<std::size_t>(n)] * EpsSeries(QFun(coef));
      }
      if (w.is_zero()) continue;
      QFun upow(1);
      for (int t = 0; t < i; ++t) upow = upow * u;
      w = w * EpsSeries(upow);
      out += DiffOp<EpsOp>::term(i, times(c, w));
    }
  }
  return out;
}

ClassicalLimitReport classical_limit_compare(const QRep& rep, int m, bool with_d) {
  if (m < 1) throw std::invalid_argument("classical_limit_compare: m must be >= 1");
  ClassicalLimitReport out;
  out.m = m;
  out.with_d = with_d;
  const int n = rep.n();
  const auto cur = qrep_current_eps(rep, m);
  const auto classical = represent_current(rep, true);
  out.current_matches = true;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const Op c0 = cur(a, b).map([](const EpsSeries& s) { return s.coeff(0); });
      const Op c1 = cur(a, b).map([](const EpsSeries& s) { return s.coeff(1); });
      const Op id = a == b ? Op::identity(rep.space(), QFun(1)) : Op(rep.space());
      if (!(c0 == id) || !(c1 == classical(a, b))) out.current_matches = false;
    }

  const auto num = mcal_numerator_in(rep, cur, eps_q(m), m, with_d);
  const auto dop = delta_to_d(num, m);
  out.lower_orders_vanish = true;
  for (const auto& [i, c] : dop.terms()) {
    for (int j = 0; j < m; ++j)
      for (const auto& [key, v] : c.entries())
        if (!v.coeff(j).is_zero()) out.lower_orders_vanish = false;
    out.leading += OpDiff::term(i, c.map([m](const EpsSeries& s) { return s.coeff(m); }));
  }
  out.expected = theta_mbar_of(calligraphic_l(rep, classical, with_d), m);
  out.leading_matches = out.leading == out.expected;
  return out;
}

CentralTermCheck central_term_check(int n, int c, int order) {
  CentralTermCheck out;
  out.n = n;
  out.c = c;
  out.order = order;
  const auto plus = rbar_shifted_series(n, c, order);
  const auto minus = rbar_shifted_series(n, -c, order);
  const auto diff = plus - minus;
  const QQ q = q_var();
  const QQ denom = (q - QQ(1)) * (q - QQ(1));
  const Space sp = Space::aux(n, 2);
  const AuxTensor<Rational> p = perm_p(n);
  for (int k = 0; k <= order; ++k) {
    bool ok = true;
    for (Space::Index i = 0; i < sp.dim() && ok; ++i)
      for (Space::Index j = 0; j < sp.dim() && ok; ++j) {
        const QQ v = diff.at(i, j).coeff(k) / denom;
        Rational expect = p.at(i, j);
        if (i == j) expect -= Rational(1, n);
        expect = expect * Rational(4 * c * k);
        try {
          ok = v.eval(Rational(1)) == expect;
        } catch (const std::domain_error&) {
          ok = false;
        }
      }
    if (!ok) out.failing_powers.push_back(k);
  }
  out.holds = out.failing_powers.empty();
  return out;
}

}  // namespace tgaudin
