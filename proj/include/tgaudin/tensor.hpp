#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tgaudin/rational.hpp"
#include "tgaudin/ring.hpp"

namespace tgaudin {

enum class LegKind : std::uint8_t { aux, quantum };

struct Leg {
  LegKind kind = LegKind::aux;
  int label = 0;
  friend bool operator==(const Leg&, const Leg&) = default;
  friend auto operator<=>(const Leg&, const Leg&) = default;
};

class SpaceMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Ordered tensor product of copies of C^N. Basis vectors are addressed by a
/// mixed-radix index with the first leg most significant.
class Space {
 public:
  using Index = std::uint64_t;

  Space() = default;
  Space(int n, std::vector<Leg> legs) : n_(n), legs_(std::move(legs)) {
    if (n_ < 1) throw std::invalid_argument("Space: N must be >= 1");
    std::set<Leg> seen(legs_.begin(), legs_.end());
    if (seen.size() != legs_.size()) throw std::invalid_argument("Space: duplicate leg label");
    strides_.assign(legs_.size(), 1);
    for (std::size_t p = legs_.size(); p-- > 1;) strides_[p - 1] = strides_[p] * static_cast<Index>(n_);
    dim_ = legs_.empty() ? 1 : strides_[0] * static_cast<Index>(n_);
  }

  /// Auxiliary legs labelled 1..s.
  static Space aux(int n, int s) {
    std::vector<Leg> legs;
    for (int a = 1; a <= s; ++a) legs.push_back({LegKind::aux, a});
    return {n, std::move(legs)};
  }
  /// Quantum legs labelled 1..l.
  static Space quantum(int n, int l) {
    std::vector<Leg> legs;
    for (int a = 1; a <= l; ++a) legs.push_back({LegKind::quantum, a});
    return {n, std::move(legs)};
  }

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] std::size_t legs_count() const { return legs_.size(); }
  [[nodiscard]] const std::vector<Leg>& legs() const { return legs_; }
  [[nodiscard]] Index dim() const { return dim_; }

  [[nodiscard]] std::size_t position(Leg leg) const {
    auto it = std::find(legs_.begin(), legs_.end(), leg);
    if (it == legs_.end()) throw std::invalid_argument("Space: no such leg");
    return static_cast<std::size_t>(it - legs_.begin());
  }

  /// Digit (0-based basis label) of leg position p inside index i.
  [[nodiscard]] int digit(Index i, std::size_t p) const {
    return static_cast<int>((i / strides_[p]) % static_cast<Index>(n_));
  }
  [[nodiscard]] Index stride(std::size_t p) const { return strides_[p]; }

  [[nodiscard]] Index encode(const std::vector<int>& digits) const {
    if (digits.size() != legs_.size()) throw std::invalid_argument("Space: digit count mismatch");
    Index i = 0;
    for (std::size_t p = 0; p < digits.size(); ++p) {
      if (digits[p] < 0 || digits[p] >= n_) throw std::out_of_range("Space: basis label out of range");
      i += static_cast<Index>(digits[p]) * strides_[p];
    }
    return i;
  }
  [[nodiscard]] std::vector<int> decode(Index i) const {
    std::vector<int> d(legs_.size());
    for (std::size_t p = 0; p < legs_.size(); ++p) d[p] = digit(i, p);
    return d;
  }

  friend bool operator==(const Space& a, const Space& b) { return a.n_ == b.n_ && a.legs_ == b.legs_; }

 private:
  int n_ = 1;
  std::vector<Leg> legs_;
  std::vector<Index> strides_;
  Index dim_ = 1;
};

/// Sparse operator on a Space with entries in a ring R (not necessarily
/// commutative: products keep the order of factors). Zero entries are never
/// stored, so structural equality is operator equality.
template <class R>
class AuxTensor {
 public:
  using Index = Space::Index;
  using Key = std::pair<Index, Index>;
  using Entries = std::map<Key, R>;

  /// A default-constructed tensor is a zero that adopts the space of whatever
  /// it is combined with.
  AuxTensor() = default;
  explicit AuxTensor(Space space) : space_(std::move(space)), bound_(true) {}

  static AuxTensor identity(const Space& space, const R& one = R(1)) {
    AuxTensor t(space);
    if (detail::elem_is_zero(one)) return t;
    for (Index i = 0; i < space.dim(); ++i) t.e_.emplace_hint(t.e_.end(), Key{i, i}, one);
    return t;
  }

  [[nodiscard]] const Space& space() const { return space_; }
  [[nodiscard]] const Entries& entries() const { return e_; }
  [[nodiscard]] std::size_t nnz() const { return e_.size(); }
  [[nodiscard]] bool is_zero() const { return e_.empty(); }

  [[nodiscard]] R at(Index row, Index col) const {
    auto it = e_.find({row, col});
    return it == e_.end() ? R{} : it->second;
  }
  [[nodiscard]] R at(const std::vector<int>& row, const std::vector<int>& col) const {
    return at(space_.encode(row), space_.encode(col));
  }

  void set(Index row, Index col, R value) {
    check_index(row, col);
    if (detail::elem_is_zero(value))
      e_.erase({row, col});
    else
      e_[{row, col}] = std::move(value);
  }
  void add(Index row, Index col, const R& value) {
    check_index(row, col);
    if (detail::elem_is_zero(value)) return;
    auto [it, inserted] = e_.try_emplace({row, col}, value);
    if (!inserted) {
      it->second += value;
      if (detail::elem_is_zero(it->second)) e_.erase(it);
    }
  }

  [[nodiscard]] bool bound() const { return bound_; }

  /// Same entries viewed on another space with the same N and leg count.
  [[nodiscard]] AuxTensor relabel(const Space& target) const {
    if (target.n() != space_.n() || target.legs_count() != space_.legs_count())
      throw SpaceMismatch("relabel: shape differs");
    AuxTensor r(target);
    r.e_ = e_;
    return r;
  }

  AuxTensor& operator+=(const AuxTensor& o) {
    require_same(o);
    adopt(o);
    for (const auto& [k, v] : o.e_) add(k.first, k.second, v);
    return *this;
  }
  AuxTensor& operator-=(const AuxTensor& o) {
    require_same(o);
    adopt(o);
    for (const auto& [k, v] : o.e_) add(k.first, k.second, -v);
    return *this;
  }
  friend AuxTensor operator+(AuxTensor a, const AuxTensor& b) { return a += b; }
  friend AuxTensor operator-(AuxTensor a, const AuxTensor& b) { return a -= b; }
  friend AuxTensor operator-(const AuxTensor& a) {
    AuxTensor r = a;
    for (auto& [k, v] : r.e_) v = -v;
    return r;
  }

  /// Left and right scalar multiples.
  friend AuxTensor operator*(const R& s, const AuxTensor& a) {
    AuxTensor r = a.empty_like();
    for (const auto& [k, v] : a.e_) r.add(k.first, k.second, s * v);
    return r;
  }
  friend AuxTensor operator*(const AuxTensor& a, const R& s) {
    AuxTensor r = a.empty_like();
    for (const auto& [k, v] : a.e_) r.add(k.first, k.second, v * s);
    return r;
  }

  /// Operator product a*b.
  friend AuxTensor operator*(const AuxTensor& a, const AuxTensor& b) {
    a.require_same(b);
    AuxTensor r = a.bound_ ? AuxTensor(a.space_) : AuxTensor(b.space_);
    r.bound_ = a.bound_ || b.bound_;
    for (const auto& [ka, va] : a.e_) {
      for (auto it = b.e_.lower_bound(Key{ka.second, 0}); it != b.e_.end() && it->first.first == ka.second;
           ++it)
        r.add(ka.first, it->first.second, va * it->second);
    }
    return r;
  }
  AuxTensor& operator*=(const AuxTensor& o) { return *this = *this * o; }

  friend bool operator==(const AuxTensor& a, const AuxTensor& b) {
    if (!a.bound_ || !b.bound_) return a.e_.empty() && b.e_.empty();
    return a.space_ == b.space_ && a.e_ == b.e_;
  }

  template <class Fn>
  [[nodiscard]] auto map(Fn&& fn) const {
    using S = decltype(fn(std::declval<const R&>()));
    AuxTensor<S> r = bound_ ? AuxTensor<S>(space_) : AuxTensor<S>();
    for (const auto& [k, v] : e_) r.add(k.first, k.second, fn(v));
    return r;
  }

  /// Sum over equal basis labels of the given leg positions. Quantum legs are
  /// never traced.
  [[nodiscard]] AuxTensor partial_trace(const std::vector<std::size_t>& positions) const {
    std::vector<bool> traced(space_.legs_count(), false);
    for (std::size_t p : positions) {
      if (p >= traced.size()) throw std::out_of_range("partial_trace: leg position out of range");
      if (space_.legs()[p].kind == LegKind::quantum)
        throw std::invalid_argument("partial_trace: quantum legs cannot be traced");
      traced[p] = true;
    }
    std::vector<Leg> kept;
    std::vector<std::size_t> kept_pos;
    for (std::size_t p = 0; p < traced.size(); ++p)
      if (!traced[p]) {
        kept.push_back(space_.legs()[p]);
        kept_pos.push_back(p);
      }
    Space out_space(space_.n(), kept);
    AuxTensor out(out_space);
    for (const auto& [k, v] : e_) {
      bool diagonal = true;
      for (std::size_t p = 0; p < traced.size() && diagonal; ++p)
        if (traced[p] && space_.digit(k.first, p) != space_.digit(k.second, p)) diagonal = false;
      if (!diagonal) continue;
      Index r = 0;
      Index c = 0;
      for (std::size_t j = 0; j < kept_pos.size(); ++j) {
        r += static_cast<Index>(space_.digit(k.first, kept_pos[j])) * out_space.stride(j);
        c += static_cast<Index>(space_.digit(k.second, kept_pos[j])) * out_space.stride(j);
      }
      out.add(r, c, v);
    }
    return out;
  }
  /// Trace over legs named by label.
  [[nodiscard]] AuxTensor trace_legs(const std::vector<Leg>& legs) const {
    std::vector<std::size_t> pos;
    for (const Leg& l : legs) pos.push_back(space_.position(l));
    return partial_trace(pos);
  }
  /// Full trace (all legs must be auxiliary).
  [[nodiscard]] R trace() const {
    std::vector<std::size_t> all(space_.legs_count());
    for (std::size_t p = 0; p < all.size(); ++p) all[p] = p;
    return partial_trace(all).at(0, 0);
  }

  [[nodiscard]] std::string to_string() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [k, v] : e_) {
      if (!first) os << ", ";
      first = false;
      os << "(" << k.first << "," << k.second << "): " << v;
    }
    os << "}";
    return os.str();
  }
  friend std::ostream& operator<<(std::ostream& os, const AuxTensor& t) { return os << t.to_string(); }

 private:
  void check_index(Index row, Index col) const {
    if (!bound_) throw std::logic_error("AuxTensor: entry access on an unbound zero");
    if (row >= space_.dim() || col >= space_.dim()) throw std::out_of_range("AuxTensor: index out of range");
  }
  [[nodiscard]] AuxTensor empty_like() const { return bound_ ? AuxTensor(space_) : AuxTensor(); }
  void adopt(const AuxTensor& o) {
    if (!bound_ && o.bound_) {
      space_ = o.space_;
      bound_ = true;
    }
  }
  void require_same(const AuxTensor& o) const {
    if (!bound_ || !o.bound_) return;
    if (!(space_ == o.space_)) throw SpaceMismatch("AuxTensor: operands live on different spaces");
  }

  Space space_;
  bool bound_ = false;
  Entries e_;
};

template <class R>
bool is_zero(const AuxTensor<R>& t) {
  return t.is_zero();
}

template <class R>
AuxTensor<R> scale_by(const AuxTensor<R>& t, const Rational& c) {
  return t.map([&](const R& v) { return scale_by(v, c); });
}

template <class R>
AuxTensor<R> commutator(const AuxTensor<R>& a, const AuxTensor<R>& b) {
  return a * b - b * a;
}

/// Places t on the target legs given by `assignment` (source position p goes to
/// target position assignment[p]); identity on every other target leg.
template <class R>
AuxTensor<R> embed(const AuxTensor<R>& t, const Space& target, const std::vector<std::size_t>& assignment) {
  const Space& src = t.space();
  if (src.n() != target.n()) throw SpaceMismatch("embed: N differs between source and target");
  if (assignment.size() != src.legs_count()) throw std::invalid_argument("embed: every source leg needs a target");
  std::vector<bool> used(target.legs_count(), false);
  for (std::size_t p : assignment) {
    if (p >= used.size()) throw std::out_of_range("embed: target position out of range");
    if (used[p]) throw std::invalid_argument("embed: two source legs assigned to one target leg");
    used[p] = true;
  }
  std::vector<std::size_t> free_pos;
  for (std::size_t p = 0; p < used.size(); ++p)
    if (!used[p]) free_pos.push_back(p);
  Space::Index free_count = 1;
  for (std::size_t i = 0; i < free_pos.size(); ++i) free_count *= static_cast<Space::Index>(target.n());

  AuxTensor<R> out(target);
  for (const auto& [k, v] : t.entries()) {
    Space::Index r0 = 0;
    Space::Index c0 = 0;
    for (std::size_t p = 0; p < assignment.size(); ++p) {
      r0 += static_cast<Space::Index>(src.digit(k.first, p)) * target.stride(assignment[p]);
      c0 += static_cast<Space::Index>(src.digit(k.second, p)) * target.stride(assignment[p]);
    }
    for (Space::Index f = 0; f < free_count; ++f) {
      Space::Index rest = f;
      Space::Index off = 0;
      for (std::size_t j = free_pos.size(); j-- > 0;) {
        off += (rest % static_cast<Space::Index>(target.n())) * target.stride(free_pos[j]);
        rest /= static_cast<Space::Index>(target.n());
      }
      out.add(r0 + off, c0 + off, v);
    }
  }
  return out;
}

/// Two-leg embedding by labels: t acts on target legs (a, b).
template <class R>
AuxTensor<R> embed_pair(const AuxTensor<R>& t, const Space& target, Leg a, Leg b) {
  return embed(t, target, {target.position(a), target.position(b)});
}

/// Kronecker product on the concatenated space.
template <class R>
AuxTensor<R> kron(const AuxTensor<R>& a, const AuxTensor<R>& b) {
  if (a.space().n() != b.space().n()) throw SpaceMismatch("kron: N differs");
  std::vector<Leg> legs = a.space().legs();
  legs.insert(legs.end(), b.space().legs().begin(), b.space().legs().end());
  Space s(a.space().n(), legs);
  AuxTensor<R> out(s);
  const Space::Index db = b.space().dim();
  for (const auto& [ka, va] : a.entries())
    for (const auto& [kb, vb] : b.entries()) out.add(ka.first * db + kb.first, ka.second * db + kb.second, va * vb);
  return out;
}

}  // namespace tgaudin
