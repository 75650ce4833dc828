#include "shiftlab/dilation.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "shiftlab/parallel.hpp"
#include "shiftlab/vn_check.hpp"

namespace shiftlab {

std::int64_t CyclicDilation::grid_linear_index(const MultiIndex& point) const {
  std::int64_t idx = 0;
  std::int64_t stride = 1;
  for (int j = 0; j < d; ++j) {
    idx += stride * static_cast<std::int64_t>(point[j] % M);
    stride *= M;
  }
  return idx;
}

Eigen::MatrixXcd CyclicDilation::unitary(int axis) const {
  if (axis < 1 || axis > d) {
    throw std::invalid_argument("CyclicDilation::unitary: axis out of range");
  }
  Eigen::MatrixXcd U = Eigen::MatrixXcd::Zero(grid_dim, grid_dim);
  std::int64_t stride = 1;
  for (int j = 1; j < axis; ++j) stride *= M;
  for (std::int64_t x = 0; x < grid_dim; ++x) {
    const std::int64_t coord = (x / stride) % M;
    const std::int64_t y = (coord + 1 < M) ? x + stride : x - stride * (M - 1);
    U(y, x) = Complex(1.0, 0.0);
  }
  return U;
}

Eigen::MatrixXcd CyclicDilation::compress(const MatrixPolynomial& q) const {
  if (q.n() != 1) {
    throw std::invalid_argument("CyclicDilation::compress: scalar polynomials only");
  }
  if (q.d() != d) {
    throw std::invalid_argument("CyclicDilation::compress: variable count mismatch");
  }
  const int D = window.dim();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(D, D);
  for (const auto& [K, coeff] : q.terms()) {
    const Complex c = coeff(0, 0);
    for (int r = 0; r < D; ++r) {
      // U^K e_x = e_{(x + K) mod M}; land back in the window or vanish.
      std::vector<int> shifted(static_cast<size_t>(d));
      const MultiIndex& I = window.unrank(r);
      for (int j = 0; j < d; ++j) {
        shifted[static_cast<size_t>(j)] = (I[j] + K[j]) % M;
      }
      const MultiIndex target(shifted);
      if (window.contains(target)) {
        out(window.rank(target), r) += c;
      }
    }
  }
  return out;
}

CyclicDilation build_cyclic_dilation(int N, int d, int degree_bound, int battery_size,
                                     std::uint64_t seed) {
  if (d < 1 || N < 0) {
    throw std::invalid_argument("build_cyclic_dilation: need d >= 1 and N >= 0");
  }
  if (degree_bound < 1) {
    throw std::invalid_argument("build_cyclic_dilation: degree bound must be >= 1");
  }
  CyclicDilation cert{d, N, degree_bound, N + degree_bound + 2, 0,
                      BasisEnumeration(d, N + 1), {}, 0.0, battery_size, seed};
  cert.grid_dim = 1;
  for (int j = 0; j < d; ++j) cert.grid_dim *= cert.M;
  cert.embedding.resize(static_cast<size_t>(cert.window.dim()));
  for (int r = 0; r < cert.window.dim(); ++r) {
    cert.embedding[static_cast<size_t>(r)] = cert.grid_linear_index(cert.window.unrank(r));
  }

  const TruncatedShift allOnes = build_shift(WeightFamily::constant(d, N, Complex(1.0, 0.0)));
  // Parallel battery; the max-residual reduction is order-independent.
  double residual = 0.0;
  std::mutex merge_mutex;
  parallel_chunks(battery_size, [&](std::int64_t begin, std::int64_t end) {
    double local = 0.0;
    for (std::int64_t i = begin; i < end; ++i) {
      const MatrixPolynomial q =
          random_matrix_polynomial(d, 1, degree_bound, seed + static_cast<std::uint64_t>(i));
      local = std::max(local, op_norm(cert.compress(q) - eval_at_tuple(q, allOnes)));
    }
    std::lock_guard<std::mutex> lock(merge_mutex);
    residual = std::max(residual, local);
  });
  cert.residual = residual;
  return cert;
}

Eigen::MatrixXcd brehmer_defect(const TruncatedShift& T, const std::vector<int>& S) {
  if (S.empty()) {
    throw std::invalid_argument("brehmer_defect: S must be nonempty");
  }
  for (int axis : S) {
    if (axis < 1 || axis > T.d()) {
      throw std::invalid_argument("brehmer_defect: axis " + std::to_string(axis) +
                                  " out of range 1.." + std::to_string(T.d()));
    }
  }
  std::vector<int> axes(S);
  std::sort(axes.begin(), axes.end());
  if (std::adjacent_find(axes.begin(), axes.end()) != axes.end()) {
    throw std::invalid_argument("brehmer_defect: S must not repeat axes");
  }

  const int D = T.dim();
  Eigen::MatrixXcd delta = Eigen::MatrixXcd::Zero(D, D);
  const size_t subsets = size_t{1} << axes.size();
  for (size_t mask = 0; mask < subsets; ++mask) {
    MultiIndex exponent = MultiIndex::zero(T.d());
    int parity = 1;
    for (size_t b = 0; b < axes.size(); ++b) {
      if (mask & (size_t{1} << b)) {
        exponent = exponent.incremented(axes[b]);
        parity = -parity;
      }
    }
    const Eigen::MatrixXcd TF = T.monomial(exponent);
    delta += static_cast<double>(parity) * (TF * TF.adjoint());
  }
  return delta;
}

const char* to_string(ObstructionVerdict verdict) {
  switch (verdict) {
    case ObstructionVerdict::kObstruction:
      return "no doubly-commuting isometric coextension";
    case ObstructionVerdict::kInconclusive:
      return "inconclusive";
  }
  return "unknown";
}

ObstructionResult doubly_commuting_obstruction(const TruncatedShift& T, int j, int k,
                                               double tol) {
  if (T.d() < 2) {
    throw std::invalid_argument("doubly_commuting_obstruction: needs at least two axes");
  }
  if (j == k) {
    throw std::invalid_argument("doubly_commuting_obstruction: axes must differ");
  }
  ObstructionResult result;
  result.spectrum = hermitian_eigenvalues(brehmer_defect(T, {j, k}));
  result.min_eigenvalue = result.spectrum(0);
  result.verdict = result.min_eigenvalue < -tol ? ObstructionVerdict::kObstruction
                                                : ObstructionVerdict::kInconclusive;
  return result;
}

}  // namespace shiftlab
