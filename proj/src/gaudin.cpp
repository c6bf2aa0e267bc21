#include "tgaudin/gaudin.hpp"

#include <map>
#include <set>

#include "tgaudin/parallel.hpp"
#include "tgaudin/rmat.hpp"

namespace tgaudin {

GaudinRep::GaudinRep(int n, std::vector<Rational> points) : n_(n), points_(std::move(points)) {
  if (n_ < 1) throw std::invalid_argument("GaudinRep: N must be >= 1");
  if (points_.empty()) throw std::invalid_argument("GaudinRep: at least one site is required");
  std::set<Rational> seen;
  for (const Rational& a : points_) {
    if (a.is_zero()) throw std::invalid_argument("GaudinRep: evaluation points must be nonzero");
    if (!seen.insert(a).second) throw std::invalid_argument("GaudinRep: evaluation points must be distinct");
  }
  space_ = Space::quantum(n_, static_cast<int>(points_.size()));
}

QOp site_unit(const GaudinRep& rep, int site, int i, int j) {
  QOp unit(Space(rep.n(), {{LegKind::quantum, site + 1}}));
  unit.add(static_cast<Space::Index>(i), static_cast<Space::Index>(j), Rational(1));
  return embed(unit, rep.space(), {static_cast<std::size_t>(site)});
}

QOp on_sites(const GaudinRep& rep, const QOp& t, int s1, int s2) {
  return embed(t, rep.space(), {static_cast<std::size_t>(s1), static_cast<std::size_t>(s2)});
}

namespace {

Op with_coefficient(const QOp& t, const QFun& c) {
  return t.map([&](const Rational& v) { return QFun(v) * c; });
}

QFun site_h(const Rational& a) {
  const QFun x = QFun::variable(Var::u) / QFun(a);
  return (QFun(1) + x) / (QFun(1) - x);
}

}  // namespace

SquareMatrix<Op> represent_current(const GaudinRep& rep, bool drop_central) {
  const int n = rep.n();
  SquareMatrix<Op> l(n);
  const QOp id = QOp::identity(rep.space());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Op entry(rep.space());
      for (int s = 0; s < rep.sites(); ++s) {
        const QFun h = site_h(rep.points()[static_cast<std::size_t>(s)]);
        entry += with_coefficient(site_unit(rep, s, b, a), h + QFun(sign(b - a)));
        if (drop_central && a == b) entry -= with_coefficient(id, h);
      }
      l(a, b) = std::move(entry);
    }
  return l;
}

SquareMatrix<OpDiff> calligraphic_l(const GaudinRep& rep, const SquareMatrix<Op>& current, bool shifted) {
  const int n = rep.n();
  SquareMatrix<OpDiff> out(n);
  const Op two_u = Op::identity(rep.space(), QFun(2) * QFun::variable(Var::u));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Op c0 = -current(a, b);
      OpDiff entry;
      if (a == b) {
        if (shifted) c0 -= Op::identity(rep.space(), QFun(n - 1 - 2 * a));
        entry = OpDiff::term(1, two_u);
      }
      entry += OpDiff(c0);
      out(a, b) = std::move(entry);
    }
  return out;
}

OpDiff theta_generating(const GaudinRep& rep, int m, bool shifted) {
  return theta_generating_of(calligraphic_l(rep, represent_current(rep), shifted), m);
}

OpDiff theta_mbar(const GaudinRep& rep, int m, bool shifted) {
  return theta_mbar_of(calligraphic_l(rep, represent_current(rep), shifted), m);
}

std::string Location::to_string(const GaudinRep& rep) const {
  if (kind == Kind::polynomial) return "u^" + std::to_string(order);
  return "pole a=" + rep.points()[static_cast<std::size_t>(site)].to_string() + " order " + std::to_string(order);
}

std::vector<std::pair<Location, QOp>> partial_fraction_operators(const GaudinRep& rep, const Op& f) {
  std::map<Location, QOp> acc;
  auto slot = [&](const Location& loc) -> QOp& {
    auto it = acc.find(loc);
    if (it == acc.end()) it = acc.emplace(loc, QOp(rep.space())).first;
    return it->second;
  };
  for (const auto& [key, value] : f.entries()) {
    const auto pf = partial_fractions(value, rep.points());
    const auto& poly = pf.polynomial.coeffs();
    for (std::size_t d = 0; d < poly.size(); ++d)
      if (!poly[d].is_zero())
        slot({Location::Kind::polynomial, -1, static_cast<int>(d)}).add(key.first, key.second, poly[d]);
    for (const auto& [pole, cs] : pf.principal) {
      const auto it = std::find(rep.points().begin(), rep.points().end(), pole);
      const int site = static_cast<int>(it - rep.points().begin());
      for (std::size_t p = 0; p < cs.size(); ++p)
        if (!cs[p].is_zero())
          slot({Location::Kind::pole, site, static_cast<int>(p) + 1}).add(key.first, key.second, cs[p]);
    }
  }
  std::vector<std::pair<Location, QOp>> out;
  for (auto& [loc, op] : acc)
    if (!op.is_zero()) out.emplace_back(loc, std::move(op));
  return out;
}

std::vector<Hamiltonian> extract_family(const GaudinRep& rep, int m_max, bool shifted, int workers) {
  if (m_max < 1) throw std::invalid_argument("extract_family: m_max must be >= 1");
  const auto cal_l = calligraphic_l(rep, represent_current(rep), shifted);
  const auto thetas = parallel_map<OpDiff>(static_cast<std::size_t>(m_max), workers,
                                           [&](std::size_t i) { return theta_mbar_of(cal_l, static_cast<int>(i) + 1); });
  std::vector<Hamiltonian> family;
  for (int m = 1; m <= m_max; ++m)
    for (int k = 0; k <= m; ++k)
      for (auto& [loc, op] : partial_fraction_operators(rep, thetas[static_cast<std::size_t>(m - 1)].coefficient(k)))
        family.push_back({m, k, loc, std::move(op)});
  return family;
}

std::vector<ResidueCheck> quad_residue_check(const GaudinRep& rep) {
  const auto current = represent_current(rep);
  const Op tr_sq = (current * current).trace();
  const auto pieces = partial_fraction_operators(rep, tr_sq);
  const QOp id = QOp::identity(rep.space());
  std::vector<ResidueCheck> out;
  for (int i = 0; i < rep.sites(); ++i) {
    const Rational& ai = rep.points()[static_cast<std::size_t>(i)];
    ResidueCheck rc;
    rc.site = i;
    rc.residue = QOp(rep.space());
    for (const auto& [loc, op] : pieces)
      if (loc == Location{Location::Kind::pole, i, 1}) rc.residue = op;
    QOp cross(rep.space());
    for (int j = 0; j < rep.sites(); ++j) {
      if (j == i) continue;
      cross += on_sites(rep, r_classical(rep.n(), ai / rep.points()[static_cast<std::size_t>(j)]), i, j);
    }
    const QOp literal = scale_by(cross, Rational(2) * ai);
    const QOp corrected = scale_by(id, Rational(4 * rep.n()) * ai) - scale_by(cross, Rational(4) * ai);
    rc.literal_difference = rc.residue - literal;
    rc.corrected_difference = rc.residue - corrected;
    rc.literal_holds = rc.literal_difference.is_zero();
    rc.corrected_holds = rc.corrected_difference.is_zero();
    out.push_back(std::move(rc));
  }
  return out;
}

std::string max_abs_numerator(const QOp& t) {
  mpz_class best = 0;
  for (const auto& [k, v] : t.entries()) {
    const mpz_class a = v.abs_num();
    if (a > best) best = a;
  }
  return best.get_str();
}

CommutativityReport commutativity_report(const std::vector<QOp>& ops, int workers) {
  CommutativityReport rep;
  rep.operators = ops.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < ops.size(); ++i)
    for (std::size_t j = i + 1; j < ops.size(); ++j) pairs.emplace_back(i, j);
  rep.pairs = pairs.size();
  const auto comms = parallel_map<QOp>(pairs.size(), workers, [&](std::size_t p) {
    return commutator(ops[pairs[p].first], ops[pairs[p].second]);
  });
  for (std::size_t p = 0; p < pairs.size(); ++p)
    if (!comms[p].is_zero())
      rep.failures.push_back({pairs[p].first, pairs[p].second, max_abs_numerator(comms[p]), comms[p]});
  return rep;
}

}  // namespace tgaudin
