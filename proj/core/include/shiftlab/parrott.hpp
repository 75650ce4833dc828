#pragma once

#include <Eigen/Dense>
#include <array>
#include <optional>

#include "shiftlab/matrix_polynomial.hpp"
#include "shiftlab/vn_check.hpp"
#include "shiftlab/weights.hpp"

namespace shiftlab {

// Configuration of the 3-variable zero-weight family: six unimodular cross
// couplings a_{i,j} (i != j) and three bottom weights delta_j with
// |delta_j| <= 1. A nonzero delta forces all three to be nonzero, the three
// linear relations
//   delta_1 a_13 = delta_3 a_31,
//   delta_2 a_21 = delta_1 a_12,
//   delta_3 a_32 = delta_2 a_23,
// and consequently the product constraint a_13 a_21 a_32 = a_31 a_12 a_23.
struct ParrottConfig {
  // couplings[i-1][j-1] = a_{i,j}; the diagonal is unused.
  std::array<std::array<Complex, 3>, 3> couplings;
  std::array<Complex, 3> delta;

  static ParrottConfig signed_config();  // a_21 = -1, every other coupling 1, delta = 0
  static ParrottConfig all_ones(Complex delta_value = Complex(0.0, 0.0));

  Complex a(int i, int j) const;    // 1-based, i != j
  bool delta_is_zero() const;

  // Throws std::domain_error quoting the first failed relation.
  void validate(double tol = 1e-12) const;
};

// The weight family (d = 3, N = 2): delta_j at the origin, a_{i,j} at e_i for
// i != j, and zero at e_j and at every |I| = 2. Commutation residual is 0 for
// any valid configuration.
WeightFamily parrott_family(const ParrottConfig& config);

// Compression of the tuple to the 6-dimensional space spanned by
// e_{(1,0,0)}, e_{(0,1,0)}, e_{(0,0,1)}, e_{(1,1,0)}, e_{(1,0,1)}, e_{(0,1,1)}
// in this order, where T_j = [[0,0],[A_j,0]]. Requires delta = 0, the case
// where that space carries the whole action.
std::array<Eigen::Matrix3cd, 3> parrott_compression_matrices(const ParrottConfig& config);

// The 3x3 matrix polynomial [[z1, z2, 0], [z3, 0, z2], [0, z3, -z1]].
MatrixPolynomial parrott_polynomial();

// Null space of the three linear relations in delta for fixed couplings.
// Nullity 0 means delta = 0 is the only consistent choice (the rigidity that
// blocks perturbing the zero weights); otherwise a unit direction spanning
// the solutions is reported.
struct DeltaRigidity {
  int nullity = 0;
  std::optional<Eigen::Vector3cd> direction;
  std::array<double, 3> relation_residuals{};  // at the configured delta
};
DeltaRigidity solve_delta_constraints(const ParrottConfig& config);

struct RefutationReport {
  ParrottConfig config;
  double norm_full_tuple = 0.0;      // ||p(T)|| on the whole truncated space
  double norm_compressed = 0.0;      // ||p(A1, A2, A3)||
  double compression_gap = 0.0;      // |difference|, validating the 6-dim reduction
  Eigen::Matrix3cd submatrix;        // rows {1,6,8} x cols {2,4,9}, 1-based
  double submatrix_norm = 0.0;       // independent lower-bound witness
  SupNormResult sup;
  double ratio = 0.0;
  bool matrix_vn_violated = false;   // ||p(T)|| > sup + uncertainty
  int grid_per_axis = 0;
};

// Builds the tuple for the given delta = 0 configuration, evaluates the
// matrix polynomial on it both ways, and compares against the polydisc
// sup-norm. A violated matrix von Neumann inequality rules out dilation to
// commuting unitaries. Defaults to the sign configuration where the ratio is
// 2/sqrt(3).
RefutationReport parrott_refutation_report(const ParrottConfig& config = ParrottConfig::signed_config(),
                                           int grid_per_axis = 64);

}  // namespace shiftlab
