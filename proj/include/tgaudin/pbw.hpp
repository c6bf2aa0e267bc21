#pragma once

#include <compare>
#include <map>
#include <ostream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "tgaudin/gaudin.hpp"
#include "tgaudin/rational.hpp"
#include "tgaudin/series.hpp"

namespace tgaudin {

/// E_ij[n] = E_ij t^n with 1-based i, j.
struct Mode {
  int i = 1;
  int j = 1;
  int n = 0;

  /// Annihilates the vacuum: n >= 1, or n = 0 with i >= j.
  [[nodiscard]] bool annihilator() const { return n > 0 || (n == 0 && i >= j); }
  /// PBW sort key: negative modes by t-degree, then zero modes with i < j,
  /// then zero modes with i >= j, then positive modes; (i, j) breaks ties.
  [[nodiscard]] std::tuple<int, int, int, int> key() const {
    const int cls = n < 0 ? 0 : n > 0 ? 3 : (i < j ? 1 : 2);
    return {cls, n, i, j};
  }
  friend bool operator==(const Mode& a, const Mode& b) { return a.i == b.i && a.j == b.j && a.n == b.n; }
  friend std::strong_ordering operator<=>(const Mode& a, const Mode& b) { return a.key() <=> b.key(); }
  [[nodiscard]] std::string to_string() const;
};

/// Sorted product of modes times K^k_power.
struct PBWMonomial {
  std::vector<Mode> modes;
  int k_power = 0;
  friend bool operator==(const PBWMonomial&, const PBWMonomial&) = default;
  friend auto operator<=>(const PBWMonomial& a, const PBWMonomial& b) {
    if (auto c = a.k_power <=> b.k_power; c != 0) return c;
    if (auto c = a.modes.size() <=> b.modes.size(); c != 0) return c;
    return a.modes <=> b.modes;
  }
  [[nodiscard]] bool sorted() const;
  [[nodiscard]] std::string to_string() const;
};

/// Element of U(gl_N hat) (K central, kept symbolic) in the PBW basis. The
/// rank N is carried along (0 for pure scalars) since brackets depend on it.
class PBWElement {
 public:
  using Terms = std::map<PBWMonomial, Rational>;

  PBWElement() = default;
  PBWElement(int c) : PBWElement(Rational(c)) {}  // NOLINT
  explicit PBWElement(const Rational& c) { add({}, c); }
  static PBWElement mode(int n, const Mode& m, const Rational& c = Rational(1));
  static PBWElement central(int n, const Rational& c = Rational(1));

  [[nodiscard]] int rank() const { return rank_; }
  [[nodiscard]] const Terms& terms() const { return t_; }
  [[nodiscard]] bool is_zero() const { return t_.empty(); }
  [[nodiscard]] std::size_t size() const { return t_.size(); }
  void add(const PBWMonomial& m, const Rational& c);

  PBWElement& operator+=(const PBWElement& o);
  PBWElement& operator-=(const PBWElement& o);
  friend PBWElement operator+(PBWElement a, const PBWElement& b) { return a += b; }
  friend PBWElement operator-(PBWElement a, const PBWElement& b) { return a -= b; }
  friend PBWElement operator-(const PBWElement& a);
  friend PBWElement operator*(const PBWElement& a, const PBWElement& b);
  PBWElement& operator*=(const PBWElement& o) { return *this = *this * o; }
  friend bool operator==(const PBWElement& a, const PBWElement& b) { return a.t_ == b.t_; }

  [[nodiscard]] PBWElement scaled(const Rational& c) const;
  /// Right multiplication by one mode, straightened into the PBW basis.
  [[nodiscard]] PBWElement times_mode(const Mode& y) const;
  /// Value on the vacuum at level K = k_value: monomials containing an
  /// annihilator vanish, K^p becomes k_value^p.
  [[nodiscard]] PBWElement on_vacuum(const Rational& k_value) const;
  /// Largest monomial length (mode count).
  [[nodiscard]] int degree() const;

  [[nodiscard]] std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const PBWElement& e) { return os << e.to_string(); }

 private:
  void join_rank(int other);

  int rank_ = 0;
  Terms t_;
};

inline bool is_zero(const PBWElement& e) { return e.is_zero(); }
inline PBWElement scale_by(const PBWElement& e, const Rational& c) { return e.scaled(c); }
/// Constants with respect to u.
inline PBWElement d_du(const PBWElement&) { return PBWElement(); }

/// [E_ij[r], E_kl[s]] for gl_N hat with K symbolic.
PBWElement bracket(const Mode& a, const Mode& b, int n);

enum class OrderingStrategy { insertion, leftmost_swap };
/// Straightens a word of modes into the PBW basis. `insertion` builds the
/// product left to right with memoised right multiplication; `leftmost_swap`
/// rewrites the first out-of-order adjacent pair until no word is unsorted.
PBWElement normal_order(const std::vector<Mode>& word, int n, OrderingStrategy strategy = OrderingStrategy::insertion);

/// Current modes L+_ij[-n] and L-_ij[n] (n >= 0) of gl_rank, 0-based i, j.
PBWElement lplus_mode(int rank, int i, int j, int n);
PBWElement lminus_mode(int rank, int i, int j, int n);

using PBWSeries = TruncSeries<PBWElement>;

/// Coefficients of d_u^k u^d in theta_m (or the shifted theta_m), k the
/// d_u-degree, d <= u_order.
struct SymbolicTheta {
  int n = 0;
  int m = 0;
  int u_order = 0;
  bool shifted = false;
  std::map<std::pair<int, int>, PBWElement> coeffs;  // (k, d) -> element
  [[nodiscard]] const PBWElement& at(int k, int d) const;
};

/// Size limits for the symbolic computation.
struct PBWEnvelope {
  int max_m;
  int max_u_order;
};
PBWEnvelope pbw_envelope(int n);

SymbolicTheta theta_symbolic(int n, int m, int u_order, bool shifted);

struct LabelledElement {
  std::string label;
  PBWElement value;
};
std::vector<LabelledElement> labelled_coefficients(const SymbolicTheta& theta);

struct PBWCommuteReport {
  std::size_t elements = 0;
  std::size_t pairs = 0;
  std::vector<std::string> failures;  // "a vs b: <monomial count>"
  [[nodiscard]] bool pass() const { return failures.empty(); }
};
PBWCommuteReport commute_check(const std::vector<LabelledElement>& elements, int n, int workers = 1);

struct VacuumReport {
  std::size_t checks = 0;
  std::vector<std::string> failures;  // "L-_ij[n] . X: <witness>"
  [[nodiscard]] bool pass() const { return failures.empty(); }
};
/// L-_ij[n] X |0> = 0 at K = -N for every element, every (i, j) and n <= v_order.
VacuumReport vacuum_invariance_check(const std::vector<LabelledElement>& elements, int n, int v_order, int workers = 1);

/// Image of an element of U(g+) in the evaluation representation:
/// E_ij[n] -> -sum_s a_s^n e_ji^(s) for n <= 0.
QOp evaluate_in_rep(const PBWElement& x, const GaudinRep& rep);

/// Symbolic coefficients against the u-expansion at 0 of the representation
/// output of the gaudin module; returns the failing (k, d) labels.
std::vector<std::string> cross_check_representation(const SymbolicTheta& theta, const GaudinRep& rep);

}  // namespace tgaudin
