#include "tgaudin/theta.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace tgaudin {

const AuxTensor<Rational>& t_chain_coefficient(int n, int s, int power) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int>, AuxTensor<Rational>> cache;
  if (s < 1 || power < 0) throw std::invalid_argument("t_chain_coefficient: need s >= 1 and power >= 0");
  std::lock_guard<std::mutex> lock(mutex);
  const auto key = std::make_tuple(n, s, power);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  AuxTensor<RatFun<Rational>> chain = adjacent_chain(t_of_y(n, RatFun<Rational>::variable(Var::y)), s);
  const AuxTensor<Rational> coeff =
      chain.map([power](const RatFun<Rational>& f) { return expand_at(f, Rational(0), power, power)[0]; });
  return cache.emplace(key, coeff).first->second;
}

AuxTensor<Rational> gap_tensor(int n, int gap, GapRule rule) {
  if (gap < 1) throw std::invalid_argument("gap_tensor: gap must be >= 1");
  if (gap == 1) return perm_p(n);
  const bool even = gap % 2 == 0;
  if (rule == GapRule::derived) return even ? tc(n) : tc_bar(n);
  return even ? tc_bar(n) : tc(n);
}

}  // namespace tgaudin
