#pragma once

#include <Eigen/Dense>
#include <vector>

#include "shiftlab/matrix_polynomial.hpp"
#include "shiftlab/shift.hpp"

namespace shiftlab {

// p(T) = sum_K coeff_K (x) T^K, an (n*D) x (n*D) matrix with n x n block
// structure of D x D blocks.
Eigen::MatrixXcd eval_at_tuple(const MatrixPolynomial& p, const TruncatedShift& T);

// Largest singular value. Throws std::domain_error on non-finite entries.
double op_norm(const Eigen::MatrixXcd& A);

// Sorted (ascending) eigenvalues of a Hermitian matrix; the input is
// symmetrized before solving.
Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& A);

struct SupNormResult {
  double value = 0.0;               // best found; a lower bound for the sup
  std::vector<double> angles;       // argmax angles in [0, 2pi)
  std::vector<Complex> argmax;      // e^{i angles}
  double uncertainty = 0.0;         // Lipschitz bound: sup <= grid max + uncertainty
  int grid_per_axis = 0;
  bool refined = false;
};

// Sup of ||p(z)|| over the closed polydisc, evaluated on the torus grid
// {(e^{2pi i k_1/m}, ...)} with an optional coordinate-wise golden-section
// refinement from the best grid point. The reported uncertainty L*pi/m, with
// L the coefficient Lipschitz constant, brackets the true sup from above
// relative to the unrefined grid maximum.
SupNormResult sup_norm_torus(const MatrixPolynomial& p, int grid_per_axis = 64,
                             bool refine = true);

enum class VnVerdict { kHolds, kInconclusive, kViolated };

const char* to_string(VnVerdict verdict);

struct VnResult {
  double operator_norm = 0.0;
  SupNormResult sup;
  double ratio = 0.0;
  VnVerdict verdict = VnVerdict::kInconclusive;
};

// ||p(T)|| / sup-norm with a three-way verdict:
//   holds        when ||p(T)|| <= grid max (certified),
//   violated     when ||p(T)|| >  grid max + uncertainty (certified),
//   inconclusive in the gap.
// Requires a contractive tuple and a nonzero polynomial.
VnResult vn_check(const MatrixPolynomial& p, const TruncatedShift& T, int grid_per_axis = 64,
                  bool refine = true);

double vn_ratio(const MatrixPolynomial& p, const TruncatedShift& T, int grid_per_axis = 64);

}  // namespace shiftlab
