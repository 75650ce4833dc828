#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <map>

#include "shiftlab/multi_index.hpp"
#include "shiftlab/weights.hpp"

namespace shiftlab {

// An n x n matrix of polynomials in d commuting variables, stored as a map
// multi-index K -> n x n coefficient matrix. Scalar polynomials are the n = 1
// case.
class MatrixPolynomial {
 public:
  using TermMap = std::map<MultiIndex, Eigen::MatrixXcd, GradedLexLess>;

  MatrixPolynomial() = default;  // the scalar zero polynomial in one variable
  MatrixPolynomial(int d, int n);

  static MatrixPolynomial scalar(int d) { return MatrixPolynomial(d, 1); }

  // Convenience: the scalar variable z_axis.
  static MatrixPolynomial variable(int d, int axis);

  int d() const { return d_; }
  int n() const { return n_; }

  // Max |K| with a stored coefficient; 0 for the zero polynomial.
  int degree() const;

  int term_count() const { return static_cast<int>(terms_.size()); }
  const TermMap& terms() const { return terms_; }

  // Sets (or overwrites) a coefficient. A numerically zero matrix erases the
  // term. Throws on shape or dimension mismatch.
  void set_term(const MultiIndex& K, Eigen::MatrixXcd coeff);
  void add_term(const MultiIndex& K, const Eigen::MatrixXcd& coeff);

  Eigen::MatrixXcd coefficient(const MultiIndex& K) const;  // zero matrix if absent

  Eigen::MatrixXcd eval_at_point(const std::vector<Complex>& z) const;

  bool is_zero() const { return terms_.empty(); }

  // Sum of ||coeff_K|| * |K| (operator norms); a Lipschitz constant for
  // z -> ||p(z)|| with respect to the max angle displacement on the torus.
  double coefficient_lipschitz() const;

  MatrixPolynomial operator+(const MatrixPolynomial& other) const;
  MatrixPolynomial operator*(const MatrixPolynomial& other) const;  // matrix-product convolution

 private:
  int d_ = 1;
  int n_ = 1;
  TermMap terms_;
};

// Deterministic-in-seed dense random polynomial of degree <= max_degree with
// coefficient entries uniform in the unit square of the complex plane.
MatrixPolynomial random_matrix_polynomial(int d, int n, int max_degree, std::uint64_t seed);

}  // namespace shiftlab
