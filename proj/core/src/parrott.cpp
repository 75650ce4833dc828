#include "shiftlab/parrott.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "shiftlab/shift.hpp"

namespace shiftlab {

namespace {

std::string fmt(const Complex& z) {
  std::ostringstream os;
  os << z.real();
  if (z.imag() != 0.0) os << (z.imag() > 0 ? "+" : "") << z.imag() << "i";
  return os.str();
}

}  // namespace

ParrottConfig ParrottConfig::signed_config() {
  ParrottConfig c = all_ones();
  c.couplings[1][0] = Complex(-1.0, 0.0);  // a_21
  return c;
}

ParrottConfig ParrottConfig::all_ones(Complex delta_value) {
  ParrottConfig c;
  for (auto& row : c.couplings) row.fill(Complex(1.0, 0.0));
  c.delta.fill(delta_value);
  return c;
}

Complex ParrottConfig::a(int i, int j) const {
  if (i < 1 || i > 3 || j < 1 || j > 3 || i == j) {
    throw std::invalid_argument("ParrottConfig::a: need distinct i, j in 1..3");
  }
  return couplings[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
}

bool ParrottConfig::delta_is_zero() const {
  return delta[0] == Complex(0.0, 0.0) && delta[1] == Complex(0.0, 0.0) &&
         delta[2] == Complex(0.0, 0.0);
}

void ParrottConfig::validate(double tol) const {
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      if (i == j) continue;
      if (std::abs(std::abs(a(i, j)) - 1.0) > tol) {
        throw std::domain_error("ParrottConfig: |a_" + std::to_string(i) +
                                std::to_string(j) + "| = " + std::to_string(std::abs(a(i, j))) +
                                " must be 1");
      }
    }
  }
  for (int j = 0; j < 3; ++j) {
    if (std::abs(delta[static_cast<size_t>(j)]) > 1.0 + tol) {
      throw std::domain_error("ParrottConfig: |delta_" + std::to_string(j + 1) +
                              "| exceeds 1");
    }
  }
  if (delta_is_zero()) return;

  for (const Complex& dj : delta) {
    if (dj == Complex(0.0, 0.0)) {
      throw std::domain_error(
          "ParrottConfig: if one delta_j is nonzero then all must be nonzero");
    }
  }
  struct Relation {
    const char* text;
    Complex lhs, rhs;
  };
  const Relation relations[] = {
      {"delta_1 a_13 = delta_3 a_31", delta[0] * a(1, 3), delta[2] * a(3, 1)},
      {"delta_2 a_21 = delta_1 a_12", delta[1] * a(2, 1), delta[0] * a(1, 2)},
      {"delta_3 a_32 = delta_2 a_23", delta[2] * a(3, 2), delta[1] * a(2, 3)},
  };
  for (const Relation& rel : relations) {
    if (std::abs(rel.lhs - rel.rhs) > tol) {
      throw std::domain_error(std::string("ParrottConfig: relation ") + rel.text +
                              " fails: " + fmt(rel.lhs) + " != " + fmt(rel.rhs));
    }
  }
  const Complex lhs = a(1, 3) * a(2, 1) * a(3, 2);
  const Complex rhs = a(3, 1) * a(1, 2) * a(2, 3);
  if (std::abs(lhs - rhs) > tol) {
    throw std::domain_error("ParrottConfig: product constraint a_13 a_21 a_32 = "
                            "a_31 a_12 a_23 fails: " + fmt(lhs) + " != " + fmt(rhs));
  }
}

WeightFamily parrott_family(const ParrottConfig& config) {
  config.validate();
  const int d = 3;
  const int N = 2;
  BasisEnumeration domain(d, N);
  std::vector<Complex> entries(static_cast<size_t>(domain.dim()) * 3, Complex(0.0, 0.0));
  for (int r = 0; r < domain.dim(); ++r) {
    const MultiIndex& I = domain.unrank(r);
    const int degree = I.degree();
    for (int j = 1; j <= d; ++j) {
      Complex value(0.0, 0.0);
      if (degree == 0) {
        value = config.delta[static_cast<size_t>(j - 1)];
      } else if (degree == 1) {
        int i = 0;
        for (int axis = 1; axis <= d; ++axis) {
          if (I[axis - 1] == 1) i = axis;
        }
        value = (i == j) ? Complex(0.0, 0.0) : config.a(i, j);
      }
      entries[static_cast<size_t>(r) * 3 + static_cast<size_t>(j - 1)] = value;
    }
  }
  return WeightFamily(d, N, std::move(entries));
}

std::array<Eigen::Matrix3cd, 3> parrott_compression_matrices(const ParrottConfig& config) {
  config.validate();
  if (!config.delta_is_zero()) {
    throw std::domain_error("parrott_compression_matrices: the 6-dimensional reduction "
                            "requires delta = 0");
  }
  // Domain basis e_{e_1}, e_{e_2}, e_{e_3}; range basis e_{110}, e_{101}, e_{011}.
  // T_j maps e_{e_i} to a_{i,j} e_{e_i + e_j} for i != j and kills e_{e_j}.
  std::array<Eigen::Matrix3cd, 3> A;
  for (auto& m : A) m.setZero();
  A[0](0, 1) = config.a(2, 1);  // e_2 -> e_{110}
  A[0](1, 2) = config.a(3, 1);  // e_3 -> e_{101}
  A[1](0, 0) = config.a(1, 2);  // e_1 -> e_{110}
  A[1](2, 2) = config.a(3, 2);  // e_3 -> e_{011}
  A[2](1, 0) = config.a(1, 3);  // e_1 -> e_{101}
  A[2](2, 1) = config.a(2, 3);  // e_2 -> e_{011}
  return A;
}

MatrixPolynomial parrott_polynomial() {
  MatrixPolynomial p(3, 3);
  Eigen::MatrixXcd c1 = Eigen::MatrixXcd::Zero(3, 3);
  c1(0, 0) = Complex(1.0, 0.0);
  c1(2, 2) = Complex(-1.0, 0.0);
  Eigen::MatrixXcd c2 = Eigen::MatrixXcd::Zero(3, 3);
  c2(0, 1) = Complex(1.0, 0.0);
  c2(1, 2) = Complex(1.0, 0.0);
  Eigen::MatrixXcd c3 = Eigen::MatrixXcd::Zero(3, 3);
  c3(1, 0) = Complex(1.0, 0.0);
  c3(2, 1) = Complex(1.0, 0.0);
  p.set_term(MultiIndex::unit(3, 1), std::move(c1));
  p.set_term(MultiIndex::unit(3, 2), std::move(c2));
  p.set_term(MultiIndex::unit(3, 3), std::move(c3));
  return p;
}

DeltaRigidity solve_delta_constraints(const ParrottConfig& config) {
  // Relations as R * delta = 0.
  Eigen::Matrix3cd R = Eigen::Matrix3cd::Zero();
  R(0, 0) = config.a(1, 3);
  R(0, 2) = -config.a(3, 1);
  R(1, 1) = config.a(2, 1);
  R(1, 0) = -config.a(1, 2);
  R(2, 2) = config.a(3, 2);
  R(2, 1) = -config.a(2, 3);

  DeltaRigidity result;
  Eigen::JacobiSVD<Eigen::Matrix3cd> svd(R, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  for (int i = 0; i < 3; ++i) {
    if (sv(i) <= 1e-12 * sv(0)) ++result.nullity;
  }
  if (result.nullity > 0) {
    result.direction = svd.matrixV().col(2);
  }
  const Eigen::Vector3cd delta(config.delta[0], config.delta[1], config.delta[2]);
  const Eigen::Vector3cd residual = R * delta;
  for (int i = 0; i < 3; ++i) {
    result.relation_residuals[static_cast<size_t>(i)] = std::abs(residual(i));
  }
  return result;
}

RefutationReport parrott_refutation_report(const ParrottConfig& config, int grid_per_axis) {
  config.validate();
  if (!config.delta_is_zero()) {
    throw std::domain_error("parrott_refutation_report: requires a delta = 0 configuration");
  }

  RefutationReport report;
  report.config = config;
  report.grid_per_axis = grid_per_axis;

  const MatrixPolynomial p = parrott_polynomial();

  // Full operator route on H_3 (dimension 20 per variable).
  const TruncatedShift T = build_shift(parrott_family(config));
  report.norm_full_tuple = op_norm(eval_at_tuple(p, T));

  // 6-dimensional route via the A_j blocks: p(T_1,T_2,T_3) has the same norm
  // as p(A_1,A_2,A_3) because the only surviving blocks are the A_j.
  const std::array<Eigen::Matrix3cd, 3> A = parrott_compression_matrices(config);
  Eigen::MatrixXcd pa = Eigen::MatrixXcd::Zero(9, 9);
  int axis = 1;
  for (const auto& Aj : A) {
    const Eigen::MatrixXcd coeff = p.coefficient(MultiIndex::unit(3, axis));
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (coeff(i, j) != Complex(0.0, 0.0)) {
          pa.block(3 * i, 3 * j, 3, 3) += coeff(i, j) * Aj;
        }
      }
    }
    ++axis;
  }
  report.norm_compressed = op_norm(pa);
  report.compression_gap = std::abs(report.norm_full_tuple - report.norm_compressed);

  const int rows[] = {0, 5, 7};  // 1-based rows 1, 6, 8
  const int cols[] = {1, 3, 8};  // 1-based cols 2, 4, 9
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      report.submatrix(i, j) = pa(rows[i], cols[j]);
    }
  }
  report.submatrix_norm = op_norm(report.submatrix);

  report.sup = sup_norm_torus(p, grid_per_axis, /*refine=*/true);
  report.ratio = report.norm_full_tuple / report.sup.value;
  report.matrix_vn_violated =
      report.norm_full_tuple > report.sup.value + report.sup.uncertainty;
  return report;
}

}  // namespace shiftlab
