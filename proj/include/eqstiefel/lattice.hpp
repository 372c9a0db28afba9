#pragma once

// Exact integer lattices in echelon (Hermite) form over sparse vectors.

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace eqs::lattice {

using Integer = mpz_class;

/// Sorted by index, no stored zeros.
using SparseVector = std::vector<std::pair<std::size_t, Integer>>;

/// a*x + b*y.
SparseVector combine(const Integer& a, const SparseVector& x, const Integer& b,
                     const SparseVector& y);

/// Z-span of inserted vectors, kept as a basis with distinct leading indices
/// and positive pivots. Every insertion is a sequence of unimodular row
/// operations, so vectors that reduce to zero yield a Z-basis of the relation
/// module among the inserted tags.
class EchelonLattice {
 public:
  explicit EchelonLattice(bool track_combinations = true) : track_(track_combinations) {}

  void insert(SparseVector v, std::size_t tag);

  /// Coefficients c_tag with sum c_tag * v_tag = target, or nullopt if the
  /// target is outside the lattice. With tracking disabled the returned
  /// combination is empty on success.
  std::optional<SparseVector> solve(SparseVector target) const;

  bool contains(SparseVector target) const { return solve(std::move(target)).has_value(); }

  std::size_t rank() const { return basis_.size(); }

  /// Leading coefficients in pivot order.
  std::vector<std::pair<std::size_t, Integer>> pivots() const;

  const std::vector<SparseVector>& relations() const { return relations_; }

 private:
  struct Row {
    SparseVector vec;
    SparseVector combo;
  };

  bool track_;
  std::map<std::size_t, Row> basis_;
  std::vector<SparseVector> relations_;
};

/// Z-basis of {c : sum_i c_i * columns[i] = 0}.
std::vector<SparseVector> integer_kernel(const std::vector<SparseVector>& columns);

}  // namespace eqs::lattice
