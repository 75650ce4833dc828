#include "shiftlab/matrix_polynomial.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace shiftlab {

MatrixPolynomial::MatrixPolynomial(int d, int n) : d_(d), n_(n) {
  if (d < 1) throw std::invalid_argument("MatrixPolynomial: d must be >= 1");
  if (n < 1) throw std::invalid_argument("MatrixPolynomial: n must be >= 1");
}

MatrixPolynomial MatrixPolynomial::variable(int d, int axis) {
  MatrixPolynomial p(d, 1);
  Eigen::MatrixXcd one(1, 1);
  one(0, 0) = Complex(1.0, 0.0);
  p.set_term(MultiIndex::unit(d, axis), one);
  return p;
}

int MatrixPolynomial::degree() const {
  // Terms are graded-ordered, so the last key carries the maximal degree.
  if (terms_.empty()) return 0;
  return terms_.rbegin()->first.degree();
}

void MatrixPolynomial::set_term(const MultiIndex& K, Eigen::MatrixXcd coeff) {
  if (K.dim() != d_) {
    throw std::invalid_argument("MatrixPolynomial::set_term: exponent dimension mismatch");
  }
  if (coeff.rows() != n_ || coeff.cols() != n_) {
    throw std::invalid_argument("MatrixPolynomial::set_term: coefficient must be " +
                                std::to_string(n_) + "x" + std::to_string(n_));
  }
  if (coeff.norm() == 0.0) {
    terms_.erase(K);
  } else {
    terms_[K] = std::move(coeff);
  }
}

void MatrixPolynomial::add_term(const MultiIndex& K, const Eigen::MatrixXcd& coeff) {
  auto it = terms_.find(K);
  if (it == terms_.end()) {
    set_term(K, coeff);
  } else {
    set_term(K, it->second + coeff);
  }
}

Eigen::MatrixXcd MatrixPolynomial::coefficient(const MultiIndex& K) const {
  auto it = terms_.find(K);
  if (it == terms_.end()) return Eigen::MatrixXcd::Zero(n_, n_);
  return it->second;
}

Eigen::MatrixXcd MatrixPolynomial::eval_at_point(const std::vector<Complex>& z) const {
  if (static_cast<int>(z.size()) != d_) {
    throw std::invalid_argument("MatrixPolynomial::eval_at_point: point dimension mismatch");
  }
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n_, n_);
  for (const auto& [K, coeff] : terms_) {
    Complex zK(1.0, 0.0);
    for (int j = 0; j < d_; ++j) {
      for (int rep = 0; rep < K[j]; ++rep) zK *= z[static_cast<size_t>(j)];
    }
    out += coeff * zK;
  }
  return out;
}

double MatrixPolynomial::coefficient_lipschitz() const {
  double L = 0.0;
  for (const auto& [K, coeff] : terms_) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(coeff);
    L += svd.singularValues()(0) * static_cast<double>(K.degree());
  }
  return L;
}

MatrixPolynomial MatrixPolynomial::operator+(const MatrixPolynomial& other) const {
  if (d_ != other.d_ || n_ != other.n_) {
    throw std::invalid_argument("MatrixPolynomial::operator+: shape mismatch");
  }
  MatrixPolynomial out = *this;
  for (const auto& [K, coeff] : other.terms_) out.add_term(K, coeff);
  return out;
}

MatrixPolynomial MatrixPolynomial::operator*(const MatrixPolynomial& other) const {
  if (d_ != other.d_ || n_ != other.n_) {
    throw std::invalid_argument("MatrixPolynomial::operator*: shape mismatch");
  }
  MatrixPolynomial out(d_, n_);
  for (const auto& [K, cK] : terms_) {
    for (const auto& [L, cL] : other.terms_) {
      out.add_term(K + L, cK * cL);
    }
  }
  return out;
}

MatrixPolynomial random_matrix_polynomial(int d, int n, int max_degree, std::uint64_t seed) {
  if (max_degree < 0) throw std::invalid_argument("random_matrix_polynomial: degree < 0");
  std::mt19937_64 rng(seed);
  auto u = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  MatrixPolynomial p(d, n);
  for (const MultiIndex& K : BasisEnumeration(d, max_degree)) {
    Eigen::MatrixXcd coeff(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        coeff(i, j) = Complex(2.0 * u() - 1.0, 2.0 * u() - 1.0);
      }
    }
    p.set_term(K, std::move(coeff));
  }
  return p;
}

}  // namespace shiftlab
