#include "shiftlab/normalize.hpp"

#include <cmath>

#include "doctest.h"
#include "shiftlab/shift.hpp"
#include "shiftlab/vn_check.hpp"

using namespace shiftlab;

TEST_CASE("positive families get the identity gauge") {
  const auto W = random_contractive_family(2, 2, 8, WeightProfile::kPositive);
  const auto norm = phase_normalize(W);
  for (const Complex& l : norm.gauge.lambda) {
    CHECK(l == Complex(1.0, 0.0));
  }
  for (size_t i = 0; i < W.entries().size(); ++i) {
    CHECK(norm.abs_weights.entries()[i] == W.entries()[i]);
  }
}

TEST_CASE("single-variable weights (-1, i) produce lambda (1, -1, -i)") {
  const WeightFamily W(1, 1, {Complex(-1.0, 0.0), Complex(0.0, 1.0)});
  const auto norm = phase_normalize(W);
  CHECK(std::abs(norm.gauge.at(MultiIndex({0})) - Complex(1.0, 0.0)) <= 1e-15);
  CHECK(std::abs(norm.gauge.at(MultiIndex({1})) - Complex(-1.0, 0.0)) <= 1e-15);
  CHECK(std::abs(norm.gauge.at(MultiIndex({2})) - Complex(0.0, -1.0)) <= 1e-15);
  CHECK(norm.abs_weights.at(MultiIndex({0}), 1) == Complex(1.0, 0.0));
  CHECK(norm.abs_weights.at(MultiIndex({1}), 1) == Complex(1.0, 0.0));
}

TEST_CASE("zero weights admit no gauge") {
  // Zero entries appear at the top degree of this family by construction.
  auto entries = WeightFamily::constant(3, 2, Complex(0.0, 0.0)).entries();
  const WeightFamily W(3, 2, entries);
  CHECK_THROWS_AS(phase_normalize(W), std::domain_error);
}

TEST_CASE("lambda recursion is path-independent when weights commute") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const auto W = random_contractive_family(3, 3, seed, WeightProfile::kComplexNonzero);
    const auto norm = phase_normalize(W);
    CHECK(norm.gauge.max_path_residual <= 1e-12);
    for (const Complex& l : norm.gauge.lambda) {
      CHECK(std::abs(std::abs(l) - 1.0) <= 1e-14);
    }
  }
}

TEST_CASE("conjugating by the gauge matches the modulus shift entrywise") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto W = random_contractive_family(2, 2, 50 + seed, WeightProfile::kComplexNonzero);
    const auto norm = phase_normalize(W);
    const TruncatedShift T = build_shift(W);
    const TruncatedShift Tabs = build_shift(norm.abs_weights);
    Eigen::VectorXcd diag(T.dim());
    for (int r = 0; r < T.dim(); ++r) {
      diag(r) = norm.gauge.lambda[static_cast<size_t>(r)];
    }
    const Eigen::MatrixXcd U = diag.asDiagonal();
    for (int j = 1; j <= 2; ++j) {
      const Eigen::MatrixXcd conjugated = U.adjoint() * T.component(j) * U;
      CHECK((conjugated - Tabs.component(j)).cwiseAbs().maxCoeff() <= 1e-12);
    }
  }
}

TEST_CASE("gauge invariance for the coordinate polynomial is exact") {
  const auto W = random_contractive_family(2, 2, 4, WeightProfile::kComplexNonzero);
  CHECK(gauge_norm_invariance_check(W, MatrixPolynomial::variable(2, 1)) <= 1e-12);
}

TEST_CASE("polynomial norms are gauge invariant") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const auto W = random_contractive_family(2, 2, 300 + seed, WeightProfile::kComplexNonzero);
    const auto p = random_matrix_polynomial(2, 1, 3, 400 + seed);
    CHECK(gauge_norm_invariance_check(W, p) <= 1e-10);
  }
}

TEST_CASE("unimodular single-variable weights match the all-ones shift in norm") {
  // Truncated shifts with torus weights are unitarily equivalent to the
  // all-ones shift, so every polynomial norm agrees.
  const WeightFamily W(1, 2, {std::polar(1.0, 0.7), std::polar(1.0, -2.1),
                              std::polar(1.0, 1.9)});
  const WeightFamily ones = WeightFamily::constant(1, 2, Complex(1.0, 0.0));
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const auto p = random_matrix_polynomial(1, 1, 3, 70 + seed);
    const double a = op_norm(eval_at_tuple(p, build_shift(W)));
    const double b = op_norm(eval_at_tuple(p, build_shift(ones)));
    CHECK(a == doctest::Approx(b).epsilon(1e-11));
  }
}
