#include "shiftlab/normalize.hpp"

#include <cmath>
#include <stdexcept>

#include "shiftlab/shift.hpp"
#include "shiftlab/vn_check.hpp"

namespace shiftlab {

PhaseNormalization phase_normalize(const WeightFamily& W) {
  if (!W.injective()) {
    throw std::domain_error(
        "phase_normalize: family has zero weights; no unit gauge exists for "
        "non-injective families");
  }
  const int d = W.d();
  const int N = W.level();

  PhaseGauge gauge{BasisEnumeration(d, N + 1), {}, 0.0};
  gauge.lambda.assign(static_cast<size_t>(gauge.domain.dim()), Complex(0.0, 0.0));
  gauge.lambda[0] = Complex(1.0, 0.0);

  for (int r = 1; r < gauge.domain.dim(); ++r) {
    const MultiIndex& I = gauge.domain.unrank(r);
    Complex value(0.0, 0.0);
    bool defined = false;
    for (int j = 1; j <= d; ++j) {
      if (I[j - 1] == 0) continue;
      const MultiIndex J = I.decremented(j);
      const Complex w = W.at(J, j);
      const Complex candidate =
          gauge.lambda[static_cast<size_t>(gauge.domain.rank(J))] * (w / std::abs(w));
      if (!defined) {
        value = candidate;
        defined = true;
      } else {
        gauge.max_path_residual =
            std::max(gauge.max_path_residual, std::abs(candidate - value));
      }
    }
    gauge.lambda[static_cast<size_t>(r)] = value;
  }

  std::vector<Complex> abs_entries(W.entries());
  for (Complex& w : abs_entries) w = Complex(std::abs(w), 0.0);
  return PhaseNormalization{WeightFamily(d, N, std::move(abs_entries)), std::move(gauge)};
}

double gauge_norm_invariance_check(const WeightFamily& W, const MatrixPolynomial& p) {
  const PhaseNormalization norm = phase_normalize(W);
  const double a = op_norm(eval_at_tuple(p, build_shift(W)));
  const double b = op_norm(eval_at_tuple(p, build_shift(norm.abs_weights)));
  return std::abs(a - b);
}

}  // namespace shiftlab
