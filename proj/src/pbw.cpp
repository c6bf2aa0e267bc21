#include "tgaudin/pbw.hpp"

#include <sstream>
#include <stdexcept>

#include "tgaudin/parallel.hpp"
#include "tgaudin/rmat.hpp"
#include "tgaudin/theta.hpp"

namespace tgaudin {

std::string Mode::to_string() const {
  return "E" + std::to_string(i) + std::to_string(j) + "[" + std::to_string(n) + "]";
}

bool PBWMonomial::sorted() const {
  for (std::size_t a = 1; a < modes.size(); ++a)
    if (modes[a] < modes[a - 1]) return false;
  return true;
}

std::string PBWMonomial::to_string() const {
  std::string s;
  for (const Mode& m : modes) s += m.to_string();
  if (k_power > 0) s += k_power == 1 ? "K" : "K^" + std::to_string(k_power);
  return s.empty() ? "1" : s;
}

PBWElement PBWElement::mode(int n, const Mode& m, const Rational& c) {
  PBWElement e;
  e.rank_ = n;
  e.add({{m}, 0}, c);
  return e;
}

PBWElement PBWElement::central(int n, const Rational& c) {
  PBWElement e;
  e.rank_ = n;
  e.add({{}, 1}, c);
  return e;
}

void PBWElement::join_rank(int other) {
  if (other == 0 || other == rank_) return;
  if (rank_ != 0) throw std::invalid_argument("PBWElement: mixing gl_N of different N");
  rank_ = other;
}

void PBWElement::add(const PBWMonomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

PBWElement& PBWElement::operator+=(const PBWElement& o) {
  join_rank(o.rank_);
  for (const auto& [m, c] : o.t_) add(m, c);
  return *this;
}

PBWElement& PBWElement::operator-=(const PBWElement& o) {
  join_rank(o.rank_);
  for (const auto& [m, c] : o.t_) add(m, -c);
  return *this;
}

PBWElement operator-(const PBWElement& a) { return a.scaled(Rational(-1)); }

PBWElement PBWElement::scaled(const Rational& c) const {
  PBWElement r;
  r.rank_ = rank_;
  if (c.is_zero()) return r;
  for (const auto& [m, v] : t_) r.t_.emplace(m, v * c);
  return r;
}

PBWElement bracket(const Mode& a, const Mode& b, int n) {
  PBWElement out;
  const int r = a.n, s = b.n;
  if (b.i == a.j) out += PBWElement::mode(n, {a.i, b.j, r + s});
  if (a.i == b.j) out -= PBWElement::mode(n, {b.i, a.j, r + s});
  if (r != 0 && r == -s) {
    Rational c(0);
    if (b.i == a.j && a.i == b.j) c += Rational(1);
    if (a.i == a.j && b.i == b.j) {
      if (n <= 0) throw std::logic_error("bracket: central term needs the rank N");
      c -= Rational(1, n);
    }
    out += PBWElement::central(n, c * Rational(r));
  }
  return out;
}

namespace {

using Word = std::vector<Mode>;

struct CacheKey {
  int n;
  Word word;
  Mode y;
  friend bool operator<(const CacheKey& a, const CacheKey& b) {
    if (a.n != b.n) return a.n < b.n;
    if (auto c = a.y <=> b.y; c != 0) return c < 0;
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    return a.word < b.word;
  }
};

// Sorted word times one mode, straightened. Results have k-power relative to
// the input. One cache per thread keeps workers independent.
const PBWElement& mul_sorted(int n, const Word& word, const Mode& y) {
  thread_local std::map<CacheKey, PBWElement> cache;
  CacheKey key{n, word, y};
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  PBWElement out;
  if (word.empty() || !(y < word.back())) {
    Word w = word;
    w.push_back(y);
    out = PBWElement::central(n, Rational(0));
    out.add({std::move(w), 0}, Rational(1));
  } else {
    // A x y = (A y) x + A [x, y]
    const Mode x = word.back();
    const Word a(word.begin(), word.end() - 1);
    const PBWElement ay = mul_sorted(n, a, y);
    for (const auto& [mono, c] : ay.terms())
      for (const auto& [m2, c2] : mul_sorted(n, mono.modes, x).terms())
        out.add({m2.modes, m2.k_power + mono.k_power}, c * c2);
    const PBWElement xy = bracket(x, y, n);
    for (const auto& [bm, bc] : xy.terms()) {
      if (bm.modes.empty()) {
        out.add({a, bm.k_power}, bc);
        continue;
      }
      for (const auto& [m2, c2] : mul_sorted(n, a, bm.modes.front()).terms())
        out.add({m2.modes, m2.k_power + bm.k_power}, bc * c2);
    }
    out += PBWElement::central(n, Rational(0));
  }
  return cache.emplace(std::move(key), std::move(out)).first->second;
}

}  // namespace

PBWElement PBWElement::times_mode(const Mode& y) const {
  PBWElement r;
  r.rank_ = rank_;
  for (const auto& [m, c] : t_)
    for (const auto& [m2, c2] : mul_sorted(rank_, m.modes, y).terms()) r.add({m2.modes, m2.k_power + m.k_power}, c * c2);
  return r;
}

PBWElement operator*(const PBWElement& a, const PBWElement& b) {
  PBWElement r;
  r.join_rank(a.rank_);
  r.join_rank(b.rank_);
  const int n = r.rank_;
  for (const auto& [mb, cb] : b.t_) {
    for (const auto& [ma, ca] : a.t_) {
      // straighten ma * mb one mode of mb at a time
      std::map<PBWMonomial, Rational> cur{{{ma.modes, ma.k_power + mb.k_power}, ca * cb}};
      for (const Mode& y : mb.modes) {
        std::map<PBWMonomial, Rational> next;
        for (const auto& [m, c] : cur)
          for (const auto& [m2, c2] : mul_sorted(n, m.modes, y).terms()) {
            auto [it, ins] = next.try_emplace({m2.modes, m2.k_power + m.k_power}, c * c2);
            if (!ins) it->second += c * c2;
          }
        cur = std::move(next);
      }
      for (const auto& [m, c] : cur) r.add(m, c);
    }
  }
  return r;
}

PBWElement PBWElement::on_vacuum(const Rational& k_value) const {
  PBWElement r;
  r.rank_ = rank_;
  for (const auto& [m, c] : t_) {
    bool dead = false;
    for (const Mode& x : m.modes) dead = dead || x.annihilator();
    if (!dead) r.add({m.modes, 0}, c * pow(k_value, m.k_power));
  }
  return r;
}

int PBWElement::degree() const {
  int d = -1;
  for (const auto& [m, c] : t_) d = std::max(d, static_cast<int>(m.modes.size()));
  return d;
}

std::string PBWElement::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : t_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")" << m.to_string();
  }
  return os.str();
}

PBWElement normal_order(const std::vector<Mode>& word, int n, OrderingStrategy strategy) {
  if (strategy == OrderingStrategy::insertion) {
    PBWElement acc(Rational(1));
    acc += PBWElement::central(n, Rational(0));
    for (const Mode& y : word) acc = acc.times_mode(y);
    return acc;
  }
  // Rewrite the leftmost inversion x y -> y x + [x, y] until every word is sorted.
  std::map<PBWMonomial, Rational> pending{{{word, 0}, Rational(1)}};
  PBWElement done = PBWElement::central(n, Rational(0));
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const PBWMonomial& w = node.key();
    const Rational c = node.mapped();
    std::size_t pos = 0;
    while (pos + 1 < w.modes.size() && !(w.modes[pos + 1] < w.modes[pos])) ++pos;
    if (pos + 1 >= w.modes.size()) {
      done.add(w, c);
      continue;
    }
    auto push = [&](PBWMonomial m, const Rational& v) {
      if (v.is_zero()) return;
      auto [it, ins] = pending.try_emplace(std::move(m), v);
      if (!ins) {
        it->second += v;
        if (it->second.is_zero()) pending.erase(it);
      }
    };
    PBWMonomial swapped = w;
    std::swap(swapped.modes[pos], swapped.modes[pos + 1]);
    push(swapped, c);
    const PBWElement br = bracket(w.modes[pos], w.modes[pos + 1], n);
    for (const auto& [bm, bc] : br.terms()) {
      PBWMonomial t;
      t.k_power = w.k_power + bm.k_power;
      t.modes.assign(w.modes.begin(), w.modes.begin() + static_cast<std::ptrdiff_t>(pos));
      t.modes.insert(t.modes.end(), bm.modes.begin(), bm.modes.end());
      t.modes.insert(t.modes.end(), w.modes.begin() + static_cast<std::ptrdiff_t>(pos) + 2, w.modes.end());
      push(std::move(t), c * bc);
    }
  }
  return done;
}

PBWElement lplus_mode(int rank, int i, int j, int n) {
  if (n < 0) throw std::invalid_argument("lplus_mode: n must be >= 0");
  if (n >= 1) return PBWElement::mode(rank, {i + 1, j + 1, -n}, Rational(-2));
  return PBWElement::mode(rank, {i + 1, j + 1, 0}, Rational(-(1 + sign(j - i))));
}

PBWElement lminus_mode(int rank, int i, int j, int n) {
  if (n < 0) throw std::invalid_argument("lminus_mode: n must be >= 0");
  if (n >= 1) return PBWElement::mode(rank, {i + 1, j + 1, n}, Rational(2));
  return PBWElement::mode(rank, {i + 1, j + 1, 0}, Rational(1 + sign(i - j)));
}

const PBWElement& SymbolicTheta::at(int k, int d) const {
  static const PBWElement zero;
  if (d > u_order) throw TruncationError("symbolic theta: u^" + std::to_string(d) + " beyond the computed order " +
                                         std::to_string(u_order));
  auto it = coeffs.find({k, d});
  return it == coeffs.end() ? zero : it->second;
}

PBWEnvelope pbw_envelope(int n) {
  switch (n) {
    case 1:
      return {4, 6};
    case 2:
      return {3, 4};
    case 3:
      return {2, 3};
    default:
      return {0, 0};
  }
}

SymbolicTheta theta_symbolic(int n, int m, int u_order, bool shifted) {
  const PBWEnvelope env = pbw_envelope(n);
  if (m < 1 || u_order < 0) throw std::invalid_argument("theta_symbolic: need m >= 1 and u_order >= 0");
  if (m > env.max_m || u_order > env.max_u_order)
    throw std::invalid_argument("theta_symbolic: (N=" + std::to_string(n) + ", m=" + std::to_string(m) +
                                ", u_order=" + std::to_string(u_order) + ") is outside the supported envelope");
  using D = DiffOp<PBWSeries>;
  const PBWSeries two_u(Var::u, PBWSeries::kExact, {PBWElement(0), PBWElement(2)});
  SquareMatrix<D> cal(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<PBWElement> c;
      for (int d = 0; d <= u_order; ++d) c.push_back(lplus_mode(n, i, j, d));
      PBWSeries entry = -PBWSeries(Var::u, u_order, std::move(c));
      D op;
      if (i == j) {
        if (shifted) entry = entry - PBWSeries(PBWElement(n - 1 - 2 * i));
        op = D::term(1, two_u);
      }
      op += D(entry);
      cal(i, j) = std::move(op);
    }
  const D theta = theta_mbar_of(cal, m);
  SymbolicTheta out;
  out.n = n;
  out.m = m;
  out.u_order = u_order;
  out.shifted = shifted;
  for (const auto& [k, series] : theta.terms())
    for (int d = 0; d <= u_order; ++d) {
      PBWElement c = series.coeff(d);
      if (!c.is_zero()) out.coeffs.emplace(std::make_pair(k, d), std::move(c));
    }
  return out;
}

std::vector<LabelledElement> labelled_coefficients(const SymbolicTheta& theta) {
  std::vector<LabelledElement> out;
  const std::string name = theta.shifted ? "shifted m=" : "m=";
  for (const auto& [kd, e] : theta.coeffs)
    out.push_back({name + std::to_string(theta.m) + " k=" + std::to_string(kd.first) + " d=" + std::to_string(kd.second), e});
  return out;
}

PBWCommuteReport commute_check(const std::vector<LabelledElement>& elements, int n, int workers) {
  PBWCommuteReport rep;
  rep.elements = elements.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = i + 1; j < elements.size(); ++j) pairs.emplace_back(i, j);
  rep.pairs = pairs.size();
  const auto sizes = parallel_map<std::size_t>(pairs.size(), workers, [&](std::size_t p) {
    const PBWElement& a = elements[pairs[p].first].value;
    const PBWElement& b = elements[pairs[p].second].value;
    PBWElement comm = a * b - b * a;
    comm += PBWElement::central(n, Rational(0));
    return comm.size();
  });
  for (std::size_t p = 0; p < pairs.size(); ++p)
    if (sizes[p] != 0)
      rep.failures.push_back(elements[pairs[p].first].label + " vs " + elements[pairs[p].second].label + ": " +
                             std::to_string(sizes[p]) + " monomials");
  return rep;
}

VacuumReport vacuum_invariance_check(const std::vector<LabelledElement>& elements, int n, int v_order, int workers) {
  struct Job {
    std::size_t element;
    int i, j, mode;
  };
  std::vector<Job> jobs;
  for (std::size_t e = 0; e < elements.size(); ++e)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int v = 0; v <= v_order; ++v)
          if (!lminus_mode(n, i, j, v).is_zero()) jobs.push_back({e, i, j, v});
  const auto results = parallel_map<PBWElement>(jobs.size(), workers, [&](std::size_t idx) {
    const Job& jb = jobs[idx];
    return (lminus_mode(n, jb.i, jb.j, jb.mode) * elements[jb.element].value).on_vacuum(Rational(-n));
  });
  VacuumReport rep;
  rep.checks = jobs.size();
  for (std::size_t idx = 0; idx < jobs.size(); ++idx) {
    if (results[idx].is_zero()) continue;
    const Job& jb = jobs[idx];
    const std::string head = results[idx].terms().begin()->second.to_string() + "*" +
                             results[idx].terms().begin()->first.to_string();
    rep.failures.push_back("L-" + std::to_string(jb.i + 1) + std::to_string(jb.j + 1) + "[" + std::to_string(jb.mode) +
                           "] on " + elements[jb.element].label + ": " + std::to_string(results[idx].size()) +
                           " vacuum terms, first " + head);
  }
  return rep;
}

QOp evaluate_in_rep(const PBWElement& x, const GaudinRep& rep) {
  std::map<Mode, QOp> images;
  auto image = [&](const Mode& md) -> const QOp& {
    auto it = images.find(md);
    if (it != images.end()) return it->second;
    QOp t(rep.space());
    for (int s = 0; s < rep.sites(); ++s)
      t -= scale_by(site_unit(rep, s, md.j - 1, md.i - 1), pow(rep.points()[static_cast<std::size_t>(s)], md.n));
    return images.emplace(md, std::move(t)).first->second;
  };
  QOp total(rep.space());
  const QOp id = QOp::identity(rep.space());
  for (const auto& [m, c] : x.terms()) {
    if (m.k_power > 0) continue;  // K acts by zero
    QOp prod = id;
    for (const Mode& md : m.modes) prod = prod * image(md);
    total += scale_by(prod, c);
  }
  return total;
}

std::vector<std::string> cross_check_representation(const SymbolicTheta& theta, const GaudinRep& rep) {
  if (rep.n() != theta.n) throw std::invalid_argument("cross_check_representation: N differs");
  const OpDiff rep_theta = theta_mbar(rep, theta.m, theta.shifted);
  std::vector<std::string> bad;
  for (int k = 0; k <= theta.m; ++k) {
    const Op c = rep_theta.coefficient(k);
    for (int d = 0; d <= theta.u_order; ++d) {
      const QOp expect = c.map([d](const QFun& f) { return expand_at(f, Rational(0), d, d)[0]; });
      if (!(evaluate_in_rep(theta.at(k, d), rep) == expect))
        bad.push_back("k=" + std::to_string(k) + " d=" + std::to_string(d));
    }
  }
  return bad;
}

}  // namespace tgaudin
