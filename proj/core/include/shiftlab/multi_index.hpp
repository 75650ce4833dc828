#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace shiftlab {

// Exponent tuple in N^d. Immutable value type. Axes are 1-based throughout
// the public interface, matching the usual epsilon_j notation for the unit
// index on axis j.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> coords);

  static MultiIndex zero(int d);
  static MultiIndex unit(int d, int axis);

  int dim() const { return static_cast<int>(coords_.size()); }
  int degree() const;
  int operator[](int k) const { return coords_[static_cast<size_t>(k)]; }
  const std::vector<int>& coords() const { return coords_; }

  // I + epsilon_axis / I - epsilon_axis. Throws std::invalid_argument when
  // the axis is out of range (or, for decremented, the coordinate is 0).
  MultiIndex incremented(int axis) const;
  MultiIndex decremented(int axis) const;

  MultiIndex operator+(const MultiIndex& other) const;

  // Componentwise partial order i_k <= j_k for all k.
  bool leq(const MultiIndex& other) const;

  bool operator==(const MultiIndex& other) const { return coords_ == other.coords_; }
  bool operator!=(const MultiIndex& other) const { return coords_ != other.coords_; }

  std::string to_string() const;  // "[1,0,2]"

 private:
  std::vector<int> coords_;
};

// Canonical total order on multi-indices: degree-major, then lexicographic
// within a degree with the larger leading coordinate first, so that for d=3
// the degree-1 layer reads (1,0,0), (0,1,0), (0,0,1).
bool graded_lex_less(const MultiIndex& a, const MultiIndex& b);

struct GradedLexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const {
    return graded_lex_less(a, b);
  }
};

// binomial(N+d, d), the number of multi-indices of degree <= N in d variables.
std::int64_t basis_dimension(int d, int N);

// Deterministic enumeration of {I : |I| <= N} in graded-lex order. Rank 0 is
// the zero index; rank(unrank(k)) == k for all k < dim().
class BasisEnumeration {
 public:
  BasisEnumeration(int d, int N);

  int d() const { return d_; }
  int level() const { return level_; }
  int dim() const { return static_cast<int>(indices_.size()); }

  int rank(const MultiIndex& I) const;  // throws std::out_of_range if absent
  const MultiIndex& unrank(int k) const;
  bool contains(const MultiIndex& I) const;

  const std::vector<MultiIndex>& indices() const { return indices_; }

  auto begin() const { return indices_.begin(); }
  auto end() const { return indices_.end(); }

 private:
  int d_ = 1;
  int level_ = 0;
  std::vector<MultiIndex> indices_;
};

}  // namespace shiftlab
