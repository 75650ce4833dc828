#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "shiftlab/matrix_polynomial.hpp"
#include "shiftlab/shift.hpp"

namespace shiftlab {

// Commuting unitary dilation of the all-ones truncated shift realized by
// cyclic coordinate shifts on the grid (Z_M)^d with M = N + degree_bound + 2.
// For polynomials q of degree <= degree_bound no shift wraps around inside
// the embedded window, so the compression identity P q(U) P = q(T(1)) holds
// exactly; the certificate records the degree bound so the claim is never
// overstated.
struct CyclicDilation {
  int d = 1;
  int N = 0;
  int degree_bound = 1;
  int M = 0;                    // grid points per axis
  std::int64_t grid_dim = 0;    // M^d
  BasisEnumeration window;      // level N+1 basis embedded into the grid
  std::vector<std::int64_t> embedding;  // window rank -> grid linear index

  double residual = 0.0;        // max over the random battery
  int battery_size = 0;
  std::uint64_t seed = 0;

  // The cyclic shift U_axis as a dense permutation matrix (exactly unitary).
  Eigen::MatrixXcd unitary(int axis) const;

  // P q(U) P on the window, computed from the permutation action; valid for
  // arbitrary scalar q including degrees past the bound (where wrap-around
  // makes the identity fail by design).
  Eigen::MatrixXcd compress(const MatrixPolynomial& q) const;

  std::int64_t grid_linear_index(const MultiIndex& point) const;
};

CyclicDilation build_cyclic_dilation(int N, int d, int degree_bound, int battery_size = 50,
                                     std::uint64_t seed = 0x5eed);

// Brehmer defect Delta_S = sum_{F subset of S} (-1)^|F| T^F (T^F)*, Hermitian
// up to rounding. Nonnegativity for every S is necessary for the adjoint
// tuple to admit a regular unitary dilation.
Eigen::MatrixXcd brehmer_defect(const TruncatedShift& T, const std::vector<int>& S);

enum class ObstructionVerdict { kObstruction, kInconclusive };

const char* to_string(ObstructionVerdict verdict);

struct ObstructionResult {
  double min_eigenvalue = 0.0;
  ObstructionVerdict verdict = ObstructionVerdict::kInconclusive;
  Eigen::VectorXd spectrum;  // ascending
};

// Negative spectrum of Delta_{j,k} rules out coextension to doubly commuting
// isometries; positivity alone is necessary, not sufficient, hence the
// "inconclusive" branch.
ObstructionResult doubly_commuting_obstruction(const TruncatedShift& T, int j, int k,
                                               double tol = 1e-10);

}  // namespace shiftlab
