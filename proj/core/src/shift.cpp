#include "shiftlab/shift.hpp"

#include <stdexcept>

namespace shiftlab {

const Eigen::MatrixXcd& TruncatedShift::component(int axis) const {
  if (axis < 1 || axis > d()) {
    throw std::invalid_argument("TruncatedShift::component: axis " + std::to_string(axis) +
                                " out of range 1.." + std::to_string(d()));
  }
  return mats_[static_cast<size_t>(axis - 1)];
}

Eigen::MatrixXcd TruncatedShift::monomial(const MultiIndex& K) const {
  if (K.dim() != d()) {
    throw std::invalid_argument("TruncatedShift::monomial: exponent dimension mismatch");
  }
  const int D = dim();
  if (K.degree() > level() + 1) {
    return Eigen::MatrixXcd::Zero(D, D);
  }
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(D, D);
  for (int j = 1; j <= d(); ++j) {
    for (int rep = 0; rep < K[j - 1]; ++rep) {
      out = component(j) * out;
    }
  }
  return out;
}

double TruncatedShift::max_commutator_norm() const {
  double worst = 0.0;
  for (int j = 1; j <= d(); ++j) {
    for (int k = j + 1; k <= d(); ++k) {
      const Eigen::MatrixXcd c = component(j) * component(k) - component(k) * component(j);
      worst = std::max(worst, c.norm());
    }
  }
  return worst;
}

TruncatedShift build_shift(const WeightFamily& W, double tol) {
  const ValidationReport report = validate_commuting(W, tol);
  if (!report.ok()) {
    throw std::invalid_argument(
        "build_shift: weight family violates the commutation relations (max residual " +
        std::to_string(report.max_residual) + " > tol " + std::to_string(tol) + ")");
  }
  const int d = W.d();
  const int N = W.level();
  BasisEnumeration basis(d, N + 1);
  const int D = basis.dim();
  std::vector<Eigen::MatrixXcd> mats(static_cast<size_t>(d), Eigen::MatrixXcd::Zero(D, D));
  for (const MultiIndex& I : W.domain()) {
    const int col = basis.rank(I);
    for (int j = 1; j <= d; ++j) {
      const int row = basis.rank(I.incremented(j));
      mats[static_cast<size_t>(j - 1)](row, col) = W.at_rank(W.domain().rank(I), j);
    }
  }
  return TruncatedShift(W, std::move(basis), std::move(mats));
}

TruncatedShift compress(const TruncatedShift& T, int M) {
  if (M < 0 || M > T.level()) {
    throw std::invalid_argument("compress: target level M must be in 0.." +
                                std::to_string(T.level()));
  }
  return build_shift(T.weights().restricted(M));
}

}  // namespace shiftlab
