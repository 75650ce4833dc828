#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "shiftlab/multi_index.hpp"
#include "shiftlab/version.hpp"

namespace shiftlab {

using Complex = std::complex<double>;

struct WeightEntry {
  MultiIndex index;
  int axis = 1;  // 1-based
  Complex value;
};

// The weight collection w = (w_{I,j}) for |I| <= N, 1 <= j <= d. Zero entries
// are allowed; families are stored exactly as given and validated, never
// silently repaired. Immutable after construction.
class WeightFamily {
 public:
  // entries indexed rank(I) * d + (axis-1) over the level-N enumeration.
  WeightFamily(int d, int N, std::vector<Complex> entries);

  static WeightFamily constant(int d, int N, Complex value);

  // Builds from an explicit entry list. Every pair (I, axis) with |I| <= N
  // must appear exactly once; otherwise throws std::invalid_argument naming
  // the missing or duplicated pair.
  static WeightFamily from_entries(int d, int N, const std::vector<WeightEntry>& entries);

  int d() const { return d_; }
  int level() const { return level_; }  // N

  // Enumeration of the index set {I : |I| <= N} the weights live on.
  const BasisEnumeration& domain() const { return domain_; }

  Complex at(const MultiIndex& I, int axis) const;
  Complex at_rank(int rank, int axis) const;

  // Restriction of the family to |I| <= M (M <= N).
  WeightFamily restricted(int M) const;

  bool injective() const;  // all entries nonzero
  bool contractive(double tol = kUnimodularTol) const;
  double max_modulus() const;
  double min_modulus() const;

  // Number of entries with modulus within tol of 1.
  int unimodular_count(double tol = kUnimodularTol) const;

  const std::vector<Complex>& entries() const { return entries_; }

  bool operator==(const WeightFamily& other) const;

 private:
  int d_ = 1;
  int level_ = 0;
  BasisEnumeration domain_;
  std::vector<Complex> entries_;
};

struct CommutationViolation {
  MultiIndex index;
  int j = 1;
  int k = 2;
  double residual = 0.0;
};

struct ValidationReport {
  double max_residual = 0.0;
  double tol = kDefaultCommutationTol;
  std::vector<CommutationViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Exact maximum over |I| <= N-1, 1 <= j < k <= d of
// |w_{I,j} w_{I+e_j,k} - w_{I,k} w_{I+e_k,j}|, with every triple above tol
// reported.
ValidationReport validate_commuting(const WeightFamily& W, double tol = kDefaultCommutationTol);

// Norm weights beta_I > 0 for |I| <= N+1 with beta_0 = 1.
class BetaFamily {
 public:
  // values indexed by the level-(N+1) enumeration.
  BetaFamily(int d, int N, std::vector<double> values);

  static BetaFamily constant(int d, int N, double value = 1.0);

  int d() const { return d_; }
  int level() const { return level_; }  // N; values live on |I| <= N+1
  const BasisEnumeration& domain() const { return domain_; }

  double at(const MultiIndex& I) const;
  const std::vector<double>& values() const { return values_; }

 private:
  int d_ = 1;
  int level_ = 0;
  BasisEnumeration domain_;  // level N+1
  std::vector<double> values_;
};

// w_{I,j} = beta_{I+e_j} / beta_I. The result satisfies the commutation
// relations up to rounding (both sides reduce to beta_{I+e_j+e_k}/beta_I).
WeightFamily weights_from_beta(const BetaFamily& B);

// beta_I = product of |w| along a monotone lattice path from 0 to I, with
// beta_0 = 1. Requires all weights nonzero; path-independence (a consequence
// of the commutation relations) is asserted during the computation.
BetaFamily beta_from_weights(const WeightFamily& W);

enum class WeightProfile { kPositive, kComplexNonzero };

// Deterministic-in-seed generator of exactly-commuting contractive families
// with all moduli in (0, 1]. Positive profile yields positive weights; the
// complex profile applies a random unit gauge on top, which preserves the
// relations exactly.
WeightFamily random_contractive_family(int d, int N, std::uint64_t seed,
                                       WeightProfile profile = WeightProfile::kPositive);

}  // namespace shiftlab
