#include "tgaudin/rmat.hpp"

#include <algorithm>
#include <numeric>

namespace tgaudin {

std::vector<int> reduced_word(const std::vector<int>& one_line) {
  const int k = static_cast<int>(one_line.size());
  std::vector<int> seen(one_line);
  std::sort(seen.begin(), seen.end());
  for (int i = 0; i < k; ++i)
    if (seen[static_cast<std::size_t>(i)] != i + 1) throw std::invalid_argument("reduced_word: not a permutation");
  // Bubble sort w down to the identity, recording s_a applied on the right:
  // w s_a swaps positions a, a+1. Each swap removes one inversion, so the
  // recorded word has length inv(w) and is reduced.
  std::vector<int> w(one_line);
  std::vector<int> right;
  for (bool changed = true; changed;) {
    changed = false;
    for (int a = 0; a + 1 < k; ++a)
      if (w[static_cast<std::size_t>(a)] > w[static_cast<std::size_t>(a + 1)]) {
        std::swap(w[static_cast<std::size_t>(a)], w[static_cast<std::size_t>(a + 1)]);
        right.push_back(a + 1);
        changed = true;
      }
  }
  // w s_{b1} ... s_{bt} = id  =>  w = s_{bt} ... s_{b1}
  std::reverse(right.begin(), right.end());
  return right;
}

std::vector<std::pair<std::vector<int>, int>> signed_permutations(int k) {
  std::vector<int> p(static_cast<std::size_t>(k));
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::pair<std::vector<int>, int>> out;
  do {
    int inv = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)]) ++inv;
    out.emplace_back(p, inv % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

TruncSeries<QFun> f_series(int n, int order) {
  return TruncSeries<QFun>(Var::x, order, f_coefficients(n, order, QFun::variable(Var::q)));
}

AuxTensor<TruncSeries<QFun>> rbar_shifted_series(int n, int c, int order) {
  using S = TruncSeries<QFun>;
  const QFun q = QFun::variable(Var::q);
  QFun qc(1);
  for (int k = 0; k < (c >= 0 ? c : -c); ++k) qc = qc * (c >= 0 ? q : QFun(1) / q);
  const S x = S::variable(Var::x).truncate(order);
  const S xs = x * S(qc);  // x q^c
  const QFun qi = QFun(1) / q;
  const S den_inv = (S(q) - S(qi) * xs).inverse(order);
  const S diag_ne = (S(1) - xs) * den_inv;
  const S lower = S(q - qi) * xs * den_inv;
  const S upper = S(q - qi) * den_inv;

  // f(x q^c) = sum f_k q^{ck} x^k
  const std::vector<QFun> fk = f_coefficients(n, order, q);
  std::vector<QFun> shifted;
  QFun pw(1);
  for (int k = 0; k <= order; ++k) {
    shifted.push_back(fk[static_cast<std::size_t>(k)] * pw);
    pw = pw * qc;
  }
  const S f(Var::x, order, shifted);

  const Space sp = Space::aux(n, 2);
  AuxTensor<S> t(sp);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        t.add(sp.encode({i, i}), sp.encode({i, i}), f);
        continue;
      }
      t.add(sp.encode({i, j}), sp.encode({i, j}), f * diag_ne);
      t.add(sp.encode({i, j}), sp.encode({j, i}), f * (i > j ? lower : upper));
    }
  return t;
}

}  // namespace tgaudin
