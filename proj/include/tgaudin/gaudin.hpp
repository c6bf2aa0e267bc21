#pragma once

#include <string>
#include <vector>

#include "tgaudin/diffop.hpp"
#include "tgaudin/matrix.hpp"
#include "tgaudin/ratfun.hpp"
#include "tgaudin/tensor.hpp"
#include "tgaudin/theta.hpp"

namespace tgaudin {

using QFun = RatFun<Rational>;
/// Operator on the quantum space with entries in Q(u).
using Op = AuxTensor<QFun>;
/// Operator on the quantum space with entries in Q.
using QOp = AuxTensor<Rational>;
using OpDiff = DiffOp<Op>;

/// Tensor product of l vector representations of gl_N with evaluation
/// points a_1..a_l (pairwise distinct, nonzero).
class GaudinRep {
 public:
  GaudinRep(int n, std::vector<Rational> points);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] int sites() const { return static_cast<int>(points_.size()); }
  [[nodiscard]] const std::vector<Rational>& points() const { return points_; }
  [[nodiscard]] const Space& space() const { return space_; }

 private:
  int n_;
  std::vector<Rational> points_;
  Space space_;
};

/// Matrix unit e_{ij} (0-based) acting on quantum leg `site` (0-based).
QOp site_unit(const GaudinRep& rep, int site, int i, int j);

/// Two-leg tensor t placed on quantum sites (s1, s2).
QOp on_sites(const GaudinRep& rep, const QOp& t, int s1, int s2);

/// L(u) = r_{01}(u/a_1) + ... + r_{0l}(u/a_l): entry (a, b) is the quantum
/// operator multiplying e_ab on the auxiliary leg. With `drop_central` the
/// scalar (a_i+u)/(a_i-u) Id of each site is removed (the q -> 1 current).
SquareMatrix<Op> represent_current(const GaudinRep& rep, bool drop_central = false);

/// The matrix 2u d_u - L (or 2u d_u - rho - L when shifted).
SquareMatrix<OpDiff> calligraphic_l(const GaudinRep& rep, const SquareMatrix<Op>& current, bool shifted);

OpDiff theta_generating(const GaudinRep& rep, int m, bool shifted);
OpDiff theta_mbar(const GaudinRep& rep, int m, bool shifted);

/// Where an extracted operator sits in the partial-fraction presentation.
struct Location {
  enum class Kind { pole, polynomial } kind = Kind::polynomial;
  int site = -1;   // pole a_site (0-based) for poles
  int order = 0;   // pole order p >= 1, or polynomial degree d
  [[nodiscard]] std::string to_string(const GaudinRep& rep) const;
  friend bool operator==(const Location&, const Location&) = default;
  friend auto operator<=>(const Location&, const Location&) = default;
};

struct Hamiltonian {
  int m = 0;
  int k = 0;  // d_u degree inside theta_m
  Location where;
  QOp op;
};

/// Partial fractions of an operator-valued rational function over the poles
/// {a_i}: every pole coefficient and polynomial coefficient as an operator.
std::vector<std::pair<Location, QOp>> partial_fraction_operators(const GaudinRep& rep, const Op& f);

/// All nonzero partial-fraction operators of theta_m^{(k)} (k the d-degree)
/// for m <= m_max.
std::vector<Hamiltonian> extract_family(const GaudinRep& rep, int m_max, bool shifted, int workers = 1);

/// Residue identities at each a_i for tr L(u)^2.
struct ResidueCheck {
  int site = 0;
  bool literal_holds = false;    // res = 2 a_i sum_{j != i} r_ij(a_i/a_j)
  bool corrected_holds = false;  // res = 4 N a_i - 4 a_i sum_{j != i} r_ij(a_i/a_j)
  QOp residue;
  QOp literal_difference;
  QOp corrected_difference;
};
std::vector<ResidueCheck> quad_residue_check(const GaudinRep& rep);

struct CommutatorRecord {
  std::size_t first = 0;
  std::size_t second = 0;
  std::string max_abs_numerator;  // "0" when the pair commutes
  QOp commutator;
};
struct CommutativityReport {
  std::size_t operators = 0;
  std::size_t pairs = 0;
  std::vector<CommutatorRecord> failures;
  [[nodiscard]] bool pass() const { return failures.empty(); }
};
CommutativityReport commutativity_report(const std::vector<QOp>& ops, int workers = 1);

/// Largest |numerator| over the entries, as a decimal string.
std::string max_abs_numerator(const QOp& t);

}  // namespace tgaudin
