#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "shiftlab/matrix_polynomial.hpp"
#include "shiftlab/weights.hpp"

namespace shiftlab {

struct ScalablePair {
  MultiIndex index;
  int axis = 1;
  bool operator==(const ScalablePair& other) const {
    return index == other.index && axis == other.axis;
  }
};

// Good/bad partition of {I : |I| <= N+1} for a contractive nonzero family:
// I is good when every weight on every monotone path from 0 to I is
// unimodular. Good indices form a lower set; (I, j) is scalable when I is
// good but I + e_j is bad, and exactly those entries get scaled.
struct BoundaryState {
  WeightFamily weights;
  BasisEnumeration basis;   // level N+1
  std::vector<bool> good;   // indexed by basis rank
  std::vector<ScalablePair> scalable;
  double radius = 0.0;      // 1 / max scalable modulus; > 1 when scalable is nonempty

  bool is_good(const MultiIndex& I) const {
    return good[static_cast<size_t>(basis.rank(I))];
  }
  // All weight moduli equal to 1, i.e. nothing left to scale.
  bool at_boundary() const { return scalable.empty(); }
};

// Requires a validated, contractive family with nonzero entries; weights
// within unimodular_tol of the unit circle count as unimodular.
BoundaryState classify(const WeightFamily& W, double unimodular_tol = kUnimodularTol);

// The scaled family: scalable entries multiplied by t, everything else kept.
// In every commutation relation either no factor or exactly one factor per
// side is scalable, so the relations survive the scaling, and |t| <= radius
// keeps the family contractive. Throws std::invalid_argument for |t| > radius.
WeightFamily scale_step(const BoundaryState& S, Complex t);

// f(w) = <p(T(w)) g, h> with unit vectors g, h of size n * dim(H_{N+1}).
// When absent, the surrogate functional is the constant 1 and the push walks
// to the boundary along positive-real scalings.
struct AnalyticFunctional {
  MatrixPolynomial poly;
  Eigen::VectorXcd g;
  Eigen::VectorXcd h;
};

struct PushStep {
  std::vector<ScalablePair> scalable;
  double radius = 0.0;
  Complex t0;
  double f_before = 0.0;
  double f_after = 0.0;
  double slack = 0.0;  // max(0, f_before - f_after), the sampling slack paid
  std::vector<ScalablePair> new_unimodular;
};

struct PushResult {
  std::vector<WeightFamily> path;  // starts at the input, ends in the boundary
  std::vector<PushStep> steps;
  int circle_samples = 0;
  double total_slack = 0.0;
};

// Iteratively scales the family to the all-unimodular set while weakly
// increasing |f| up to the sampling slack. Each step picks the argmax of
// |f| over circle_samples equispaced points on |t| = radius (ties broken by
// the smallest argument) and strictly grows the unimodular entry set, so at
// most d * binomial(N+d, d) steps occur.
PushResult push_to_boundary(const WeightFamily& W,
                            const std::optional<AnalyticFunctional>& f = std::nullopt,
                            int circle_samples = 720);

}  // namespace shiftlab
