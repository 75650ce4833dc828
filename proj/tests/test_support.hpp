#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "shiftlab/multi_index.hpp"
#include "shiftlab/weights.hpp"

namespace shiftlab::testing {

// Enumerates every monotone lattice path from 0 to I as sequences of axes.
// Exponential; only for small oracle checks.
inline std::vector<std::vector<int>> all_monotone_paths(const MultiIndex& I) {
  std::vector<std::vector<int>> paths;
  std::vector<int> current;
  std::function<void(const MultiIndex&)> walk = [&](const MultiIndex& J) {
    if (J.degree() == 0) {
      paths.emplace_back(current.rbegin(), current.rend());
      return;
    }
    for (int axis = 1; axis <= J.dim(); ++axis) {
      if (J[axis - 1] == 0) continue;
      current.push_back(axis);
      walk(J.decremented(axis));
      current.pop_back();
    }
  };
  walk(I);
  return paths;
}

// Product of weights along a path of axis steps starting at 0.
inline Complex path_product(const WeightFamily& W, const std::vector<int>& path) {
  Complex product(1.0, 0.0);
  MultiIndex at = MultiIndex::zero(W.d());
  for (int axis : path) {
    product *= W.at(at, axis);
    at = at.incremented(axis);
  }
  return product;
}

// Dense projection of the level-(N+1) space onto the level-(M+1) subspace;
// the graded order makes it the leading identity block.
inline Eigen::MatrixXcd leading_projection(int full_dim, int sub_dim) {
  Eigen::MatrixXcd P = Eigen::MatrixXcd::Zero(sub_dim, full_dim);
  P.block(0, 0, sub_dim, sub_dim) = Eigen::MatrixXcd::Identity(sub_dim, sub_dim);
  return P;
}

}  // namespace shiftlab::testing
