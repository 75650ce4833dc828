#include "shiftlab/multi_index.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace shiftlab {

MultiIndex::MultiIndex(std::vector<int> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) {
    throw std::invalid_argument("MultiIndex: dimension must be >= 1");
  }
  for (int c : coords_) {
    if (c < 0) {
      throw std::invalid_argument("MultiIndex: coordinates must be non-negative");
    }
  }
}

MultiIndex MultiIndex::zero(int d) {
  if (d < 1) throw std::invalid_argument("MultiIndex::zero: d must be >= 1");
  return MultiIndex(std::vector<int>(static_cast<size_t>(d), 0));
}

MultiIndex MultiIndex::unit(int d, int axis) {
  MultiIndex I = zero(d);
  return I.incremented(axis);
}

int MultiIndex::degree() const {
  return std::accumulate(coords_.begin(), coords_.end(), 0);
}

MultiIndex MultiIndex::incremented(int axis) const {
  if (axis < 1 || axis > dim()) {
    throw std::invalid_argument("MultiIndex::incremented: axis " + std::to_string(axis) +
                                " out of range 1.." + std::to_string(dim()));
  }
  MultiIndex out = *this;
  ++out.coords_[static_cast<size_t>(axis - 1)];
  return out;
}

MultiIndex MultiIndex::decremented(int axis) const {
  if (axis < 1 || axis > dim()) {
    throw std::invalid_argument("MultiIndex::decremented: axis " + std::to_string(axis) +
                                " out of range 1.." + std::to_string(dim()));
  }
  if (coords_[static_cast<size_t>(axis - 1)] == 0) {
    throw std::invalid_argument("MultiIndex::decremented: coordinate on axis " +
                                std::to_string(axis) + " is already 0");
  }
  MultiIndex out = *this;
  --out.coords_[static_cast<size_t>(axis - 1)];
  return out;
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  if (dim() != other.dim()) {
    throw std::invalid_argument("MultiIndex::operator+: dimension mismatch");
  }
  std::vector<int> out(coords_);
  for (int k = 0; k < dim(); ++k) out[static_cast<size_t>(k)] += other[k];
  return MultiIndex(std::move(out));
}

bool MultiIndex::leq(const MultiIndex& other) const {
  if (dim() != other.dim()) {
    throw std::invalid_argument("MultiIndex::leq: dimension mismatch");
  }
  for (int k = 0; k < dim(); ++k) {
    if ((*this)[k] > other[k]) return false;
  }
  return true;
}

std::string MultiIndex::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int k = 0; k < dim(); ++k) {
    if (k) os << ',';
    os << (*this)[k];
  }
  os << ']';
  return os.str();
}

bool graded_lex_less(const MultiIndex& a, const MultiIndex& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("graded_lex_less: dimension mismatch");
  }
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da < db;
  for (int k = 0; k < a.dim(); ++k) {
    if (a[k] != b[k]) return a[k] > b[k];
  }
  return false;
}

std::int64_t basis_dimension(int d, int N) {
  if (d < 1 || N < 0) {
    throw std::invalid_argument("basis_dimension: need d >= 1 and N >= 0");
  }
  // binom(N+d, d) accumulated multiplicatively; overflow-checked.
  std::int64_t result = 1;
  for (int k = 1; k <= d; ++k) {
    const std::int64_t num = static_cast<std::int64_t>(N) + k;
    if (result > std::numeric_limits<std::int64_t>::max() / num) {
      throw std::overflow_error("basis_dimension: binomial overflow");
    }
    result = result * num / k;
  }
  return result;
}

namespace {

void append_degree_layer(int d, int degree, std::vector<int>& prefix,
                         std::vector<MultiIndex>& out) {
  if (d == 1) {
    prefix.push_back(degree);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int lead = degree; lead >= 0; --lead) {
    prefix.push_back(lead);
    append_degree_layer(d - 1, degree - lead, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

BasisEnumeration::BasisEnumeration(int d, int N) : d_(d), level_(N) {
  if (d < 1 || N < 0) {
    throw std::invalid_argument("BasisEnumeration: need d >= 1 and N >= 0");
  }
  const std::int64_t D = basis_dimension(d, N);
  if (D > std::numeric_limits<int>::max()) {
    throw std::overflow_error("BasisEnumeration: basis too large");
  }
  indices_.reserve(static_cast<size_t>(D));
  std::vector<int> prefix;
  for (int m = 0; m <= N; ++m) {
    append_degree_layer(d, m, prefix, indices_);
  }
}

int BasisEnumeration::rank(const MultiIndex& I) const {
  auto it = std::lower_bound(indices_.begin(), indices_.end(), I, graded_lex_less);
  if (it == indices_.end() || !(*it == I)) {
    throw std::out_of_range("BasisEnumeration::rank: index " + I.to_string() +
                            " not in basis (d=" + std::to_string(d_) +
                            ", N=" + std::to_string(level_) + ")");
  }
  return static_cast<int>(it - indices_.begin());
}

const MultiIndex& BasisEnumeration::unrank(int k) const {
  if (k < 0 || k >= dim()) {
    throw std::out_of_range("BasisEnumeration::unrank: rank " + std::to_string(k) +
                            " out of range 0.." + std::to_string(dim() - 1));
  }
  return indices_[static_cast<size_t>(k)];
}

bool BasisEnumeration::contains(const MultiIndex& I) const {
  if (I.dim() != d_ || I.degree() > level_) return false;
  auto it = std::lower_bound(indices_.begin(), indices_.end(), I, graded_lex_less);
  return it != indices_.end() && *it == I;
}

}  // namespace shiftlab
