#pragma once

#include <Eigen/Dense>

#include "shiftlab/weights.hpp"

namespace shiftlab {

// The d commuting matrices of a truncated weighted shift acting on
// span{e_I : |I| <= N+1}: T_j e_I = w_{I,j} e_{I+e_j} for |I| <= N and
// T_j e_I = 0 on the top layer. Strictly block-sub-diagonal in graded order,
// hence nilpotent of order <= N+2.
class TruncatedShift {
 public:
  int d() const { return weights_.d(); }
  int level() const { return weights_.level(); }  // N
  int dim() const { return basis_.dim(); }        // D = dim of level N+1

  const BasisEnumeration& basis() const { return basis_; }
  const WeightFamily& weights() const { return weights_; }

  const Eigen::MatrixXcd& component(int axis) const;  // T_axis, 1-based

  // T^K via repeated multiplication; the factor order is irrelevant up to
  // rounding by commutativity. Zero for |K| > N+1.
  Eigen::MatrixXcd monomial(const MultiIndex& K) const;

  double max_commutator_norm() const;

 private:
  friend TruncatedShift build_shift(const WeightFamily&, double);
  TruncatedShift(WeightFamily W, BasisEnumeration basis, std::vector<Eigen::MatrixXcd> mats)
      : weights_(std::move(W)), basis_(std::move(basis)), mats_(std::move(mats)) {}

  WeightFamily weights_;
  BasisEnumeration basis_;  // level N+1
  std::vector<Eigen::MatrixXcd> mats_;
};

// Validates the family (commutation residual <= tol) and assembles the d
// matrices. Throws std::invalid_argument when validation fails.
TruncatedShift build_shift(const WeightFamily& W, double tol = kDefaultCommutationTol);

// Compression to span{e_I : |I| <= M+1}, i.e. the shift built from the weight
// restriction to |I| <= M. The space is co-invariant, so polynomial calculus
// commutes with the compression.
TruncatedShift compress(const TruncatedShift& T, int M);

}  // namespace shiftlab
