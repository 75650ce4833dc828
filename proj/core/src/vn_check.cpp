#include "shiftlab/vn_check.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

#include "shiftlab/parallel.hpp"

namespace shiftlab {

Eigen::MatrixXcd eval_at_tuple(const MatrixPolynomial& p, const TruncatedShift& T) {
  if (p.d() != T.d()) {
    throw std::invalid_argument("eval_at_tuple: polynomial in " + std::to_string(p.d()) +
                                " variables applied to a " + std::to_string(T.d()) +
                                "-tuple");
  }
  const int n = p.n();
  const int D = T.dim();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n * D, n * D);
  for (const auto& [K, coeff] : p.terms()) {
    const Eigen::MatrixXcd TK = T.monomial(K);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const Complex c = coeff(i, j);
        if (c != Complex(0.0, 0.0)) {
          out.block(i * D, j * D, D, D) += c * TK;
        }
      }
    }
  }
  return out;
}

double op_norm(const Eigen::MatrixXcd& A) {
  if (!A.allFinite()) {
    throw std::domain_error("op_norm: matrix has non-finite entries");
  }
  if (A.rows() == 0 || A.cols() == 0) return 0.0;
  if (A.rows() == 1 && A.cols() == 1) return std::abs(A(0, 0));
  // sigma_max via the smaller Gram matrix; Hermitian eigensolvers are robust
  // for complex input at every size we care about.
  if (A.cols() <= A.rows()) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(A.adjoint() * A,
                                                       Eigen::EigenvaluesOnly);
    return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(A * A.adjoint(), Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& A) {
  if (A.rows() != A.cols()) {
    throw std::invalid_argument("hermitian_eigenvalues: matrix must be square");
  }
  const Eigen::MatrixXcd H = 0.5 * (A + A.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

namespace {

// ||p(z)|| at the torus point with angle indices k (grid of m roots of unity):
// z^K = omega^{<k,K> mod m}, so each term is one table lookup.
double grid_value(const MatrixPolynomial& p, const std::vector<Complex>& roots,
                  const std::vector<int>& k, int m) {
  const int n = p.n();
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(n, n);
  for (const auto& [K, coeff] : p.terms()) {
    std::int64_t phase = 0;
    for (int j = 0; j < p.d(); ++j) {
      phase += static_cast<std::int64_t>(k[static_cast<size_t>(j)]) * K[j];
    }
    acc += coeff * roots[static_cast<size_t>(phase % m)];
  }
  return op_norm(acc);
}

double angle_value(const MatrixPolynomial& p, const std::vector<double>& theta) {
  std::vector<Complex> z(theta.size());
  for (size_t j = 0; j < theta.size(); ++j) z[j] = std::polar(1.0, theta[j]);
  return op_norm(p.eval_at_point(z));
}

// Golden-section maximization of a unimodal slice; returns the best angle.
double golden_section_axis(const MatrixPolynomial& p, std::vector<double> theta, int axis,
                           double lo, double hi) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  theta[static_cast<size_t>(axis)] = x1;
  double f1 = angle_value(p, theta);
  theta[static_cast<size_t>(axis)] = x2;
  double f2 = angle_value(p, theta);
  for (int iter = 0; iter < 48 && (b - a) > 1e-13; ++iter) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      theta[static_cast<size_t>(axis)] = x2;
      f2 = angle_value(p, theta);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      theta[static_cast<size_t>(axis)] = x1;
      f1 = angle_value(p, theta);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

SupNormResult sup_norm_torus(const MatrixPolynomial& p, int grid_per_axis, bool refine) {
  if (grid_per_axis < 4) {
    throw std::invalid_argument("sup_norm_torus: grid_per_axis must be >= 4");
  }
  const int d = p.d();
  const int m = grid_per_axis;

  SupNormResult result;
  result.grid_per_axis = m;
  result.uncertainty = p.coefficient_lipschitz() * M_PI / static_cast<double>(m);

  if (p.is_zero()) {
    result.angles.assign(static_cast<size_t>(d), 0.0);
    result.argmax.assign(static_cast<size_t>(d), Complex(1.0, 0.0));
    result.uncertainty = 0.0;
    return result;
  }

  std::vector<Complex> roots(static_cast<size_t>(m));
  for (int k = 0; k < m; ++k) {
    roots[static_cast<size_t>(k)] = std::polar(1.0, 2.0 * M_PI * k / m);
  }

  std::int64_t total = 1;
  for (int j = 0; j < d; ++j) total *= m;

  // Max with deterministic tie-breaking: larger value wins, equal values go to
  // the smaller linear index (= lexicographically smallest angle vector).
  struct Best {
    double value = -1.0;
    std::int64_t index = -1;
  };
  Best global;
  std::mutex merge_mutex;
  parallel_chunks(total, [&](std::int64_t begin, std::int64_t end) {
    Best local;
    std::vector<int> k(static_cast<size_t>(d));
    for (std::int64_t linear = begin; linear < end; ++linear) {
      std::int64_t rest = linear;
      for (int j = 0; j < d; ++j) {
        k[static_cast<size_t>(j)] = static_cast<int>(rest % m);
        rest /= m;
      }
      const double v = grid_value(p, roots, k, m);
      if (v > local.value || (v == local.value && linear < local.index)) {
        local = {v, linear};
      }
    }
    std::lock_guard<std::mutex> lock(merge_mutex);
    if (local.value > global.value ||
        (local.value == global.value && local.index < global.index)) {
      global = local;
    }
  });

  std::vector<double> theta(static_cast<size_t>(d));
  {
    std::int64_t rest = global.index;
    for (int j = 0; j < d; ++j) {
      theta[static_cast<size_t>(j)] = 2.0 * M_PI * static_cast<double>(rest % m) / m;
      rest /= m;
    }
  }
  result.value = global.value;

  if (refine) {
    const double half_step = M_PI / static_cast<double>(m);
    double best = result.value;
    for (int sweep = 0; sweep < 8; ++sweep) {
      const double before = best;
      for (int axis = 0; axis < d; ++axis) {
        const double center = theta[static_cast<size_t>(axis)];
        const double candidate =
            golden_section_axis(p, theta, axis, center - 2.0 * half_step,
                                center + 2.0 * half_step);
        std::vector<double> trial = theta;
        trial[static_cast<size_t>(axis)] = candidate;
        const double v = angle_value(p, trial);
        if (v > best) {
          best = v;
          theta = trial;
        }
      }
      if (best - before < 1e-14) break;
    }
    result.value = best;
    result.refined = true;
  }

  result.angles.resize(static_cast<size_t>(d));
  result.argmax.resize(static_cast<size_t>(d));
  for (int j = 0; j < d; ++j) {
    double a = std::fmod(theta[static_cast<size_t>(j)], 2.0 * M_PI);
    if (a < 0.0) a += 2.0 * M_PI;
    result.angles[static_cast<size_t>(j)] = a;
    result.argmax[static_cast<size_t>(j)] = std::polar(1.0, a);
  }
  return result;
}

const char* to_string(VnVerdict verdict) {
  switch (verdict) {
    case VnVerdict::kHolds:
      return "holds";
    case VnVerdict::kInconclusive:
      return "inconclusive";
    case VnVerdict::kViolated:
      return "violated";
  }
  return "unknown";
}

VnResult vn_check(const MatrixPolynomial& p, const TruncatedShift& T, int grid_per_axis,
                  bool refine) {
  if (p.is_zero()) {
    throw std::domain_error("vn_check: zero polynomial has no von Neumann ratio");
  }
  if (!T.weights().contractive()) {
    throw std::invalid_argument("vn_check: tuple is not contractive (max weight modulus " +
                                std::to_string(T.weights().max_modulus()) + ")");
  }
  VnResult result;
  result.operator_norm = op_norm(eval_at_tuple(p, T));
  result.sup = sup_norm_torus(p, grid_per_axis, refine);
  result.ratio = result.operator_norm / result.sup.value;
  if (result.operator_norm <= result.sup.value) {
    result.verdict = VnVerdict::kHolds;
  } else if (result.operator_norm > result.sup.value + result.sup.uncertainty) {
    result.verdict = VnVerdict::kViolated;
  } else {
    result.verdict = VnVerdict::kInconclusive;
  }
  return result;
}

double vn_ratio(const MatrixPolynomial& p, const TruncatedShift& T, int grid_per_axis) {
  return vn_check(p, T, grid_per_axis, true).ratio;
}

}  // namespace shiftlab
