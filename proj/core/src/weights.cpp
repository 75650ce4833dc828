#include "shiftlab/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace shiftlab {

WeightFamily::WeightFamily(int d, int N, std::vector<Complex> entries)
    : d_(d), level_(N), domain_(d, N), entries_(std::move(entries)) {
  const size_t expected = static_cast<size_t>(domain_.dim()) * static_cast<size_t>(d);
  if (entries_.size() != expected) {
    throw std::invalid_argument("WeightFamily: expected " + std::to_string(expected) +
                                " entries, got " + std::to_string(entries_.size()));
  }
}

WeightFamily WeightFamily::constant(int d, int N, Complex value) {
  BasisEnumeration domain(d, N);
  std::vector<Complex> entries(static_cast<size_t>(domain.dim()) * static_cast<size_t>(d), value);
  return WeightFamily(d, N, std::move(entries));
}

WeightFamily WeightFamily::from_entries(int d, int N, const std::vector<WeightEntry>& entries) {
  BasisEnumeration domain(d, N);
  const size_t total = static_cast<size_t>(domain.dim()) * static_cast<size_t>(d);
  std::vector<Complex> values(total, Complex(0.0, 0.0));
  std::vector<bool> seen(total, false);
  for (const WeightEntry& e : entries) {
    if (e.axis < 1 || e.axis > d) {
      throw std::invalid_argument("WeightFamily: axis " + std::to_string(e.axis) +
                                  " out of range 1.." + std::to_string(d));
    }
    if (e.index.dim() != d || e.index.degree() > N) {
      throw std::invalid_argument("WeightFamily: index " + e.index.to_string() +
                                  " outside {|I| <= " + std::to_string(N) + "}");
    }
    const size_t slot =
        static_cast<size_t>(domain.rank(e.index)) * static_cast<size_t>(d) +
        static_cast<size_t>(e.axis - 1);
    if (seen[slot]) {
      throw std::invalid_argument("WeightFamily: duplicate entry for I=" + e.index.to_string() +
                                  ", j=" + std::to_string(e.axis));
    }
    seen[slot] = true;
    values[slot] = e.value;
  }
  for (int r = 0; r < domain.dim(); ++r) {
    for (int j = 1; j <= d; ++j) {
      const size_t slot = static_cast<size_t>(r) * static_cast<size_t>(d) +
                          static_cast<size_t>(j - 1);
      if (!seen[slot]) {
        throw std::invalid_argument("WeightFamily: missing entry for I=" +
                                    domain.unrank(r).to_string() + ", j=" + std::to_string(j));
      }
    }
  }
  return WeightFamily(d, N, std::move(values));
}

Complex WeightFamily::at(const MultiIndex& I, int axis) const {
  return at_rank(domain_.rank(I), axis);
}

Complex WeightFamily::at_rank(int rank, int axis) const {
  if (axis < 1 || axis > d_) {
    throw std::invalid_argument("WeightFamily::at: axis " + std::to_string(axis) +
                                " out of range 1.." + std::to_string(d_));
  }
  return entries_[static_cast<size_t>(rank) * static_cast<size_t>(d_) +
                  static_cast<size_t>(axis - 1)];
}

WeightFamily WeightFamily::restricted(int M) const {
  if (M < 0 || M > level_) {
    throw std::invalid_argument("WeightFamily::restricted: M must be in 0.." +
                                std::to_string(level_));
  }
  BasisEnumeration sub(d_, M);
  // The graded order makes the level-M enumeration a prefix of the level-N one.
  std::vector<Complex> entries(entries_.begin(),
                               entries_.begin() + static_cast<std::ptrdiff_t>(
                                   static_cast<size_t>(sub.dim()) * static_cast<size_t>(d_)));
  return WeightFamily(d_, M, std::move(entries));
}

bool WeightFamily::injective() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Complex& w) { return std::abs(w) > 0.0; });
}

bool WeightFamily::contractive(double tol) const {
  return max_modulus() <= 1.0 + tol;
}

double WeightFamily::max_modulus() const {
  double m = 0.0;
  for (const Complex& w : entries_) m = std::max(m, std::abs(w));
  return m;
}

double WeightFamily::min_modulus() const {
  double m = std::numeric_limits<double>::infinity();
  for (const Complex& w : entries_) m = std::min(m, std::abs(w));
  return m;
}

int WeightFamily::unimodular_count(double tol) const {
  int count = 0;
  for (const Complex& w : entries_) {
    if (std::abs(std::abs(w) - 1.0) <= tol) ++count;
  }
  return count;
}

bool WeightFamily::operator==(const WeightFamily& other) const {
  return d_ == other.d_ && level_ == other.level_ && entries_ == other.entries_;
}

ValidationReport validate_commuting(const WeightFamily& W, double tol) {
  if (tol < 0.0) throw std::invalid_argument("validate_commuting: tol must be >= 0");
  ValidationReport report;
  report.tol = tol;
  const int d = W.d();
  const int N = W.level();
  for (const MultiIndex& I : W.domain()) {
    if (I.degree() > N - 1) continue;
    for (int j = 1; j <= d; ++j) {
      const MultiIndex Ij = I.incremented(j);
      for (int k = j + 1; k <= d; ++k) {
        const MultiIndex Ik = I.incremented(k);
        const Complex lhs = W.at(I, j) * W.at(Ij, k);
        const Complex rhs = W.at(I, k) * W.at(Ik, j);
        const double residual = std::abs(lhs - rhs);
        report.max_residual = std::max(report.max_residual, residual);
        if (residual > tol) {
          report.violations.push_back({I, j, k, residual});
        }
      }
    }
  }
  return report;
}

BetaFamily::BetaFamily(int d, int N, std::vector<double> values)
    : d_(d), level_(N), domain_(d, N + 1), values_(std::move(values)) {
  if (values_.size() != static_cast<size_t>(domain_.dim())) {
    throw std::invalid_argument("BetaFamily: expected " + std::to_string(domain_.dim()) +
                                " values, got " + std::to_string(values_.size()));
  }
  for (double v : values_) {
    if (!(v > 0.0)) {
      throw std::domain_error("BetaFamily: all values must be strictly positive");
    }
  }
  if (std::abs(values_[0] - 1.0) > 1e-12) {
    throw std::domain_error("BetaFamily: beta at the zero index must equal 1");
  }
}

BetaFamily BetaFamily::constant(int d, int N, double value) {
  BasisEnumeration domain(d, N + 1);
  std::vector<double> values(static_cast<size_t>(domain.dim()), value);
  values[0] = 1.0;
  return BetaFamily(d, N, std::move(values));
}

double BetaFamily::at(const MultiIndex& I) const {
  return values_[static_cast<size_t>(domain_.rank(I))];
}

WeightFamily weights_from_beta(const BetaFamily& B) {
  const int d = B.d();
  const int N = B.level();
  BasisEnumeration domain(d, N);
  std::vector<Complex> entries(static_cast<size_t>(domain.dim()) * static_cast<size_t>(d));
  for (int r = 0; r < domain.dim(); ++r) {
    const MultiIndex& I = domain.unrank(r);
    const double bI = B.at(I);
    for (int j = 1; j <= d; ++j) {
      entries[static_cast<size_t>(r) * static_cast<size_t>(d) + static_cast<size_t>(j - 1)] =
          Complex(B.at(I.incremented(j)) / bI, 0.0);
    }
  }
  return WeightFamily(d, N, std::move(entries));
}

BetaFamily beta_from_weights(const WeightFamily& W) {
  if (!W.injective()) {
    throw std::domain_error(
        "beta_from_weights: non-injective family has no beta representation");
  }
  const int d = W.d();
  const int N = W.level();
  BasisEnumeration target(d, N + 1);
  std::vector<double> beta(static_cast<size_t>(target.dim()), 0.0);
  beta[0] = 1.0;
  for (int r = 1; r < target.dim(); ++r) {
    const MultiIndex& I = target.unrank(r);
    // Defining path: first predecessor in basis order; every other predecessor
    // must reproduce the same value, which is the path-independence statement.
    double value = -1.0;
    for (int j = 1; j <= d; ++j) {
      if (I[j - 1] == 0) continue;
      const MultiIndex J = I.decremented(j);
      const double candidate = beta[static_cast<size_t>(target.rank(J))] * std::abs(W.at(J, j));
      if (value < 0.0) {
        value = candidate;
      } else if (std::abs(candidate - value) > 1e-12 * std::max(1.0, value)) {
        throw std::domain_error("beta_from_weights: path-dependent products at I=" +
                                I.to_string() + " (family does not commute)");
      }
    }
    if (!(value > 0.0)) {
      throw std::domain_error("beta_from_weights: zero product reached at I=" + I.to_string());
    }
    beta[static_cast<size_t>(r)] = value;
  }
  return BetaFamily(d, N, std::move(beta));
}

namespace {

double uniform01(std::mt19937_64& rng) {
  // 53-bit mantissa; implementation-independent for reproducible streams.
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

WeightFamily random_contractive_family(int d, int N, std::uint64_t seed, WeightProfile profile) {
  std::mt19937_64 rng(seed);
  BasisEnumeration domain(d, N + 1);
  std::vector<double> beta(static_cast<size_t>(domain.dim()), 1.0);
  for (int r = 1; r < domain.dim(); ++r) {
    const MultiIndex& I = domain.unrank(r);
    double floor = 1.0;
    for (int j = 1; j <= d; ++j) {
      if (I[j - 1] == 0) continue;
      floor = std::min(floor, beta[static_cast<size_t>(domain.rank(I.decremented(j)))]);
    }
    const double ratio = 0.35 + 0.65 * uniform01(rng);
    beta[static_cast<size_t>(r)] = floor * ratio;
  }
  WeightFamily W = weights_from_beta(BetaFamily(d, N, std::move(beta)));
  if (profile == WeightProfile::kPositive) return W;

  // Unit gauge lambda with lambda_0 = 1; w_{I,j} = |w_{I,j}| lambda_{I+e_j} / lambda_I
  // keeps the relations exact and the moduli unchanged.
  std::vector<Complex> lambda(static_cast<size_t>(domain.dim()));
  lambda[0] = Complex(1.0, 0.0);
  for (int r = 1; r < domain.dim(); ++r) {
    const double theta = 2.0 * M_PI * uniform01(rng);
    lambda[static_cast<size_t>(r)] = std::polar(1.0, theta);
  }
  std::vector<Complex> entries(W.entries());
  const BasisEnumeration& wdomain = W.domain();
  for (int r = 0; r < wdomain.dim(); ++r) {
    const MultiIndex& I = wdomain.unrank(r);
    const Complex lI = lambda[static_cast<size_t>(domain.rank(I))];
    for (int j = 1; j <= d; ++j) {
      const Complex lJ = lambda[static_cast<size_t>(domain.rank(I.incremented(j)))];
      entries[static_cast<size_t>(r) * static_cast<size_t>(d) + static_cast<size_t>(j - 1)] *=
          lJ / lI;
    }
  }
  return WeightFamily(d, N, std::move(entries));
}

}  // namespace shiftlab
