#pragma once

#include <vector>

#include "shiftlab/matrix_polynomial.hpp"
#include "shiftlab/weights.hpp"

namespace shiftlab {

// Diagonal unit gauge lambda_I for |I| <= N+1 with lambda_0 = 1.
struct PhaseGauge {
  BasisEnumeration domain;  // level N+1
  std::vector<Complex> lambda;

  // Max disagreement between the defining recursion and every alternative
  // predecessor; the executable form of the gauge being well defined.
  double max_path_residual = 0.0;

  Complex at(const MultiIndex& I) const {
    return lambda[static_cast<size_t>(domain.rank(I))];
  }
};

struct PhaseNormalization {
  WeightFamily abs_weights;
  PhaseGauge gauge;
};

// Transforms a nonzero-weight family to its modulus family via the recursion
// lambda_{I+e_j} = lambda_I w_{I,j} / |w_{I,j}|, walking the basis in graded
// order with the first predecessor in basis order as the defining path and
// every other predecessor checked as an assertion. Conjugating the shift by
// diag(lambda) yields the modulus shift entrywise.
// Throws std::domain_error when any weight is zero: families with zero
// weights admit no such gauge.
PhaseNormalization phase_normalize(const WeightFamily& W);

// | ||p(T(W))|| - ||p(T(|W|)))|| |, which the unitary gauge forces to vanish.
double gauge_norm_invariance_check(const WeightFamily& W, const MatrixPolynomial& p);

}  // namespace shiftlab
