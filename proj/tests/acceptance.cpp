// Acceptance suite: every release-gating criterion at its pinned tolerance,
// one pass/fail line each. Exits with the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "shiftlab/boundary.hpp"
#include "shiftlab/dilation.hpp"
#include "shiftlab/normalize.hpp"
#include "shiftlab/parrott.hpp"
#include "shiftlab/shift.hpp"
#include "shiftlab/vn_check.hpp"

using namespace shiftlab;

namespace {

const double kSqrt3 = std::sqrt(3.0);

class Checker {
 public:
  void require(bool ok, const std::string& detail) {
    if (!ok) failures_.push_back(detail);
  }
  void require_close(double actual, double expected, double tol, const std::string& label) {
    if (!(std::abs(actual - expected) <= tol)) {
      failures_.push_back(label + ": got " + std::to_string(actual) + ", want " +
                          std::to_string(expected) + " +/- " + std::to_string(tol));
    }
  }
  bool ok() const { return failures_.empty(); }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
};

WeightFamily half_family(int d, int N) {
  auto entries = WeightFamily::constant(d, N, Complex(1.0, 0.0)).entries();
  for (int j = 0; j < d; ++j) entries[static_cast<size_t>(j)] = Complex(0.5, 0.0);
  return WeightFamily(d, N, entries);
}

// --- criterion 1: operator norm of the counterexample -----------------------

void criterion_counterexample_norm(Checker& check) {
  const auto report = parrott_refutation_report(ParrottConfig::signed_config(), 8);
  check.require_close(report.norm_compressed, 2.0, 1e-9, "||p(A1,A2,A3)||");
  check.require_close(report.norm_full_tuple, 2.0, 1e-9, "||p(T1,T2,T3)||");
  Eigen::Matrix3cd witness;
  witness << -1, 1, 0, 1, 0, 1, 0, 1, -1;
  check.require((report.submatrix - witness).norm() == 0.0,
                "submatrix rows {1,6,8} x cols {2,4,9} must match exactly");
  check.require_close(report.submatrix_norm, 2.0, 1e-12, "submatrix norm");
}

// --- criterion 2: sup-norm of the counterexample polynomial -----------------

void criterion_counterexample_sup(Checker& check) {
  const auto sup = sup_norm_torus(parrott_polynomial(), 64, true);
  check.require_close(sup.value, kSqrt3, 5e-3, "sup over the 3-torus at grid 64^3");
  check.require(sup.value <= kSqrt3 + 1e-10,
                "grid + refinement may never exceed the true sup");
  check.require(sup.value + sup.uncertainty >= kSqrt3,
                "Lipschitz bracket must contain sqrt(3)");
}

// --- criterion 3: the von Neumann ratio 2/sqrt(3) ---------------------------

void criterion_vn_refutation(Checker& check) {
  const TruncatedShift T = build_shift(parrott_family(ParrottConfig::signed_config()));
  const VnResult result = vn_check(parrott_polynomial(), T, 64, true);
  check.require_close(result.ratio, 2.0 / kSqrt3, 5e-3, "von Neumann ratio");
  check.require(result.verdict == VnVerdict::kViolated,
                std::string("verdict must be violated, got ") + to_string(result.verdict));
}

// --- criterion 4: the -3/4 defect eigenpair ---------------------------------

void criterion_brehmer_defect(Checker& check) {
  for (int N : {2, 3}) {
    const TruncatedShift T = build_shift(half_family(2, N));
    const Eigen::MatrixXcd delta = brehmer_defect(T, {1, 2});
    Eigen::VectorXcd e11 = Eigen::VectorXcd::Zero(T.dim());
    e11(T.basis().rank(MultiIndex({1, 1}))) = Complex(1.0, 0.0);
    check.require((delta * e11 + 0.75 * e11).norm() <= 1e-12,
                  "defect eigenvector e_{(1,1)} at N=" + std::to_string(N));
    const Eigen::VectorXd spectrum = hermitian_eigenvalues(delta);
    double closest = 1e9;
    for (Eigen::Index i = 0; i < spectrum.size(); ++i) {
      closest = std::min(closest, std::abs(spectrum(i) + 0.75));
    }
    check.require(closest <= 1e-12, "eigenvalue -3/4 at N=" + std::to_string(N));
  }
}

// --- criterion 5: dilation theorem property battery -------------------------

void criterion_vn_property_battery(Checker& check) {
  int families = 0;
  int violations = 0;
  std::uint64_t seed = 1;
  while (families < 510) {
    for (int d = 1; d <= 3 && families < 510; ++d) {
      for (int N = 0; N <= 4 && families < 510; ++N, ++seed) {
        const auto W = random_contractive_family(d, N, seed, WeightProfile::kComplexNonzero);
        const TruncatedShift T = build_shift(W);
        const int grid = d == 1 ? 128 : (d == 2 ? 48 : 20);
        for (int n = 1; n <= 2; ++n) {
          const auto p = random_matrix_polynomial(d, n, 3, seed * 7919 + n);
          const VnResult result = vn_check(p, T, grid, false);
          const double bound = 1.0 + result.sup.uncertainty / result.sup.value;
          if (result.ratio > bound || result.verdict == VnVerdict::kViolated) {
            ++violations;
            check.require(false, "violation at d=" + std::to_string(d) + " N=" +
                                     std::to_string(N) + " seed=" + std::to_string(seed) +
                                     " n=" + std::to_string(n) + " ratio=" +
                                     std::to_string(result.ratio));
          }
        }
        ++families;
      }
    }
  }
  check.require(families >= 500, "at least 500 families must be tested");
  check.require(violations == 0,
                std::to_string(violations) + " violations across the battery");
}

// --- criterion 6: phase normalization suite ---------------------------------

void criterion_phase_normalization(Checker& check) {
  int count = 0;
  std::uint64_t seed = 1000;
  while (count < 200) {
    for (int d = 1; d <= 3 && count < 200; ++d) {
      for (int N = 1; N <= 3 && count < 200; ++N, ++seed) {
        const auto W = random_contractive_family(d, N, seed, WeightProfile::kComplexNonzero);
        const auto norm = phase_normalize(W);
        if (norm.gauge.max_path_residual > 1e-12) {
          check.require(false, "path residual " + std::to_string(norm.gauge.max_path_residual) +
                                   " at seed " + std::to_string(seed));
        }
        const auto p = random_matrix_polynomial(d, 1, 3, seed + 31);
        const double gap = gauge_norm_invariance_check(W, p);
        if (gap > 1e-10) {
          check.require(false, "gauge norm invariance gap " + std::to_string(gap) +
                                   " at seed " + std::to_string(seed));
        }
        ++count;
      }
    }
  }
}

// --- criterion 7: boundary scaling suite -------------------------------------

void criterion_boundary_scaling(Checker& check) {
  int count = 0;
  std::uint64_t seed = 4000;
  while (count < 100) {
    for (int d = 2; d <= 3 && count < 100; ++d) {
      for (int N = 1; N <= 2 && count < 100; ++N, ++seed) {
        const auto W = random_contractive_family(d, N, seed, WeightProfile::kComplexNonzero);
        if (W.unimodular_count() == static_cast<int>(W.entries().size())) continue;

        const TruncatedShift T0 = build_shift(W);
        AnalyticFunctional f;
        f.poly = random_matrix_polynomial(d, 1, 2, seed + 99);
        f.g = Eigen::VectorXcd::Ones(T0.dim()).normalized();
        f.h = Eigen::VectorXcd::Ones(T0.dim()).normalized();

        const PushResult push = push_to_boundary(W, f, 128);

        const size_t pair_count = W.entries().size();  // d * binom(N+d, d)
        if (push.steps.size() > pair_count) {
          check.require(false, "push exceeded the step bound at seed " + std::to_string(seed));
        }
        const auto& final = push.path.back();
        if (final.unimodular_count() != static_cast<int>(final.entries().size())) {
          check.require(false, "push did not reach the boundary at seed " +
                                   std::to_string(seed));
        }
        for (const PushStep& step : push.steps) {
          if (step.f_after < step.f_before - step.slack - 1e-12) {
            check.require(false, "|f| decreased beyond the recorded slack at seed " +
                                     std::to_string(seed));
          }
        }

        // Commutation preservation along every step of the walk at 32 ray
        // samples on the scaling circle.
        for (size_t i = 0; i + 1 < push.path.size(); ++i) {
          const BoundaryState state = classify(push.path[i]);
          for (int s = 0; s < 32; ++s) {
            const Complex t = std::polar(state.radius, 2.0 * M_PI * s / 32.0);
            const double residual = validate_commuting(scale_step(state, t)).max_residual;
            if (residual > 1e-13) {
              check.require(false, "scaled commutation residual " + std::to_string(residual) +
                                       " at seed " + std::to_string(seed));
            }
          }
        }
        ++count;
      }
    }
  }
}

// --- criterion 8: dilation compression residuals ----------------------------

void criterion_dilation_certificates(Checker& check) {
  for (int d = 1; d <= 3; ++d) {
    for (int N = 0; N <= 3; ++N) {
      for (int deg = 1; deg <= 4; ++deg) {
        const auto cert = build_cyclic_dilation(N, d, deg, 50,
                                                static_cast<std::uint64_t>(d * 100 + N * 10 + deg));
        if (cert.residual > 1e-12) {
          check.require(false, "residual " + std::to_string(cert.residual) + " at d=" +
                                   std::to_string(d) + " N=" + std::to_string(N) +
                                   " deg=" + std::to_string(deg));
        }
      }
    }
  }
}

// --- criterion 9: delta rigidity and the dilatable configuration ------------

void criterion_delta_rigidity(Checker& check) {
  const auto signed_rigidity = solve_delta_constraints(ParrottConfig::signed_config());
  check.require(signed_rigidity.nullity == 0,
                "signed configuration must force delta = 0 uniquely");

  const ParrottConfig relaxed = ParrottConfig::all_ones(Complex(0.5, 0.0));
  const auto relaxed_rigidity = solve_delta_constraints(relaxed);
  check.require(relaxed_rigidity.nullity == 1, "all-ones configuration must free delta");
  for (double r : relaxed_rigidity.relation_residuals) {
    check.require(r <= 1e-14, "delta = (1/2,1/2,1/2) must satisfy the relations");
  }

  const WeightFamily W = parrott_family(relaxed);
  check.require(validate_commuting(W).max_residual == 0.0,
                "relaxed family must commute exactly");
  const TruncatedShift T = build_shift(W);

  const VnResult counterexample_poly = vn_check(parrott_polynomial(), T, 48, true);
  check.require(counterexample_poly.verdict != VnVerdict::kViolated,
                "the dilatable tuple must pass the counterexample polynomial");
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int n = (seed % 2 == 0) ? 1 : 2;
    const auto p = random_matrix_polynomial(3, n, 3, 8000 + seed);
    const VnResult result = vn_check(p, T, 20, false);
    if (result.verdict == VnVerdict::kViolated) {
      check.require(false, "vn battery violation at seed " + std::to_string(seed));
    }
  }
}

struct Criterion {
  int id;
  const char* name;
  double runtime_limit_seconds;  // 0 = unconstrained
  std::function<void(Checker&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "counterexample operator norm 2 with exact submatrix witness", 1.0,
       criterion_counterexample_norm},
      {2, "counterexample sup-norm sqrt(3) at grid 64^3 with bracket", 30.0,
       criterion_counterexample_sup},
      {3, "von Neumann ratio 2/sqrt(3) with violated verdict", 0.0, criterion_vn_refutation},
      {4, "half-weight family defect eigenpair -3/4 at e_{(1,1)}", 0.0,
       criterion_brehmer_defect},
      {5, "510 random contractive families obey the inequality", 300.0,
       criterion_vn_property_battery},
      {6, "200 phase normalizations: path independence and gauge invariance", 0.0,
       criterion_phase_normalization},
      {7, "100 boundary pushes: commutation, termination, monotone |f|", 0.0,
       criterion_boundary_scaling},
      {8, "cyclic dilation compression residuals over 48 configurations", 0.0,
       criterion_dilation_certificates},
      {9, "delta rigidity and the dilatable all-ones configuration", 0.0,
       criterion_delta_rigidity},
  };

  int failed = 0;
  for (const Criterion& criterion : criteria) {
    Checker check;
    const auto start = std::chrono::steady_clock::now();
    criterion.run(check);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criterion.runtime_limit_seconds > 0.0 && seconds > criterion.runtime_limit_seconds) {
      check.require(false, "runtime " + std::to_string(seconds) + " s exceeds " +
                               std::to_string(criterion.runtime_limit_seconds) + " s");
    }
    std::printf("[%s] %d. %s (%.2f s)\n", check.ok() ? "PASS" : "FAIL", criterion.id,
                criterion.name, seconds);
    if (!check.ok()) {
      ++failed;
      for (const std::string& reason : check.failures()) {
        std::printf("       - %s\n", reason.c_str());
      }
    }
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed;
}
