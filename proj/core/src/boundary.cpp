#include "shiftlab/boundary.hpp"

#include <cmath>
#include <limits>
#include <mutex>
#include <stdexcept>

#include "shiftlab/parallel.hpp"
#include "shiftlab/shift.hpp"
#include "shiftlab/vn_check.hpp"

namespace shiftlab {

BoundaryState classify(const WeightFamily& W, double unimodular_tol) {
  if (!W.injective()) {
    throw std::domain_error("classify: family has zero weights and lies outside the "
                            "closure of nonzero contractive families");
  }
  if (!W.contractive()) {
    throw std::domain_error("classify: family is not contractive (max modulus " +
                            std::to_string(W.max_modulus()) + ")");
  }
  const ValidationReport report = validate_commuting(W);
  if (!report.ok()) {
    throw std::invalid_argument("classify: family violates the commutation relations "
                                "(max residual " + std::to_string(report.max_residual) + ")");
  }

  const int d = W.d();
  const int N = W.level();
  BoundaryState state{W, BasisEnumeration(d, N + 1), {}, {}, 0.0};
  state.good.assign(static_cast<size_t>(state.basis.dim()), false);
  state.good[0] = true;

  auto unimodular = [unimodular_tol](const Complex& w) {
    return std::abs(std::abs(w) - 1.0) <= unimodular_tol;
  };

  // Graded order guarantees all predecessors are classified first. Requiring
  // every incoming edge keeps the good set a lower set by construction.
  for (int r = 1; r < state.basis.dim(); ++r) {
    const MultiIndex& I = state.basis.unrank(r);
    bool good = true;
    for (int j = 1; j <= d && good; ++j) {
      if (I[j - 1] == 0) continue;
      const MultiIndex J = I.decremented(j);
      good = state.good[static_cast<size_t>(state.basis.rank(J))] && unimodular(W.at(J, j));
    }
    state.good[static_cast<size_t>(r)] = good;
  }

  double max_scalable_modulus = 0.0;
  for (const MultiIndex& I : W.domain()) {
    if (!state.is_good(I)) continue;
    for (int j = 1; j <= d; ++j) {
      if (!state.is_good(I.incremented(j))) {
        state.scalable.push_back({I, j});
        max_scalable_modulus = std::max(max_scalable_modulus, std::abs(W.at(I, j)));
      }
    }
  }
  state.radius = state.scalable.empty() ? std::numeric_limits<double>::infinity()
                                        : 1.0 / max_scalable_modulus;
  return state;
}

WeightFamily scale_step(const BoundaryState& S, Complex t) {
  if (std::abs(t) > S.radius * (1.0 + 1e-12)) {
    throw std::invalid_argument("scale_step: |t| = " + std::to_string(std::abs(t)) +
                                " exceeds the scaling radius " + std::to_string(S.radius));
  }
  std::vector<Complex> entries(S.weights.entries());
  const int d = S.weights.d();
  for (const ScalablePair& pair : S.scalable) {
    const size_t slot =
        static_cast<size_t>(S.weights.domain().rank(pair.index)) * static_cast<size_t>(d) +
        static_cast<size_t>(pair.axis - 1);
    entries[slot] *= t;
  }
  return WeightFamily(d, S.weights.level(), std::move(entries));
}

namespace {

double functional_value(const std::optional<AnalyticFunctional>& f, const WeightFamily& W) {
  if (!f) return 1.0;
  const TruncatedShift T = build_shift(W);
  const Eigen::MatrixXcd A = eval_at_tuple(f->poly, T);
  if (f->g.size() != A.cols() || f->h.size() != A.rows()) {
    throw std::invalid_argument("push_to_boundary: functional vectors must have size n * dim");
  }
  return std::abs(f->h.dot(A * f->g));  // Eigen's dot conjugates the left factor
}

std::vector<ScalablePair> newly_unimodular(const BoundaryState& S, const WeightFamily& next) {
  std::vector<ScalablePair> fresh;
  for (const ScalablePair& pair : S.scalable) {
    if (std::abs(std::abs(next.at(pair.index, pair.axis)) - 1.0) <= kUnimodularTol) {
      fresh.push_back(pair);
    }
  }
  return fresh;
}

}  // namespace

PushResult push_to_boundary(const WeightFamily& W, const std::optional<AnalyticFunctional>& f,
                            int circle_samples) {
  if (circle_samples < 1) {
    throw std::invalid_argument("push_to_boundary: circle_samples must be >= 1");
  }
  PushResult result;
  result.circle_samples = circle_samples;
  result.path.push_back(W);

  WeightFamily current = W;
  double f_value = functional_value(f, current);
  int unimodular_entries = current.unimodular_count();
  const int total_entries = static_cast<int>(current.entries().size());

  // |I| steps suffice: each one converts at least one more entry to modulus 1.
  for (int step = 0; step <= total_entries; ++step) {
    const BoundaryState state = classify(current);
    if (state.at_boundary()) return result;

    const double r = state.radius;
    double best_value = 1.0;
    std::int64_t best_sample = 0;
    if (f) {
      // Embarrassingly parallel circle scan; ties resolve to the smallest
      // argument no matter how the samples are chunked.
      best_value = -1.0;
      best_sample = circle_samples;
      std::mutex merge_mutex;
      parallel_chunks(circle_samples, [&](std::int64_t begin, std::int64_t end) {
        double local_value = -1.0;
        std::int64_t local_sample = circle_samples;
        for (std::int64_t s = begin; s < end; ++s) {
          const Complex t =
              std::polar(r, 2.0 * M_PI * static_cast<double>(s) / circle_samples);
          const double v = functional_value(f, scale_step(state, t));
          if (v > local_value || (v == local_value && s < local_sample)) {
            local_value = v;
            local_sample = s;
          }
        }
        std::lock_guard<std::mutex> lock(merge_mutex);
        if (local_value > best_value ||
            (local_value == best_value && local_sample < best_sample)) {
          best_value = local_value;
          best_sample = local_sample;
        }
      });
    }

    const Complex t0 =
        std::polar(r, 2.0 * M_PI * static_cast<double>(best_sample) / circle_samples);
    WeightFamily next = scale_step(state, t0);

    PushStep record;
    record.scalable = state.scalable;
    record.radius = r;
    record.t0 = t0;
    record.f_before = f_value;
    record.f_after = best_value;
    record.slack = std::max(0.0, f_value - best_value);
    record.new_unimodular = newly_unimodular(state, next);

    const int next_unimodular = next.unimodular_count();
    if (next_unimodular <= unimodular_entries) {
      throw std::logic_error("push_to_boundary: unimodular set failed to grow");
    }
    unimodular_entries = next_unimodular;
    f_value = best_value;
    result.total_slack += record.slack;
    result.steps.push_back(std::move(record));
    result.path.push_back(next);
    current = std::move(next);
  }
  throw std::logic_error("push_to_boundary: step bound exceeded");
}

}  // namespace shiftlab
