#include "eqstiefel/lattice.hpp"

namespace eqs::lattice {

SparseVector combine(const Integer& a, const SparseVector& x, const Integer& b,
                     const SparseVector& y) {
  SparseVector out;
  out.reserve(x.size() + y.size());
  auto ix = x.begin();
  auto iy = y.begin();
  Integer value;
  while (ix != x.end() || iy != y.end()) {
    if (iy == y.end() || (ix != x.end() && ix->first < iy->first)) {
      if (a != 0) out.emplace_back(ix->first, a * ix->second);
      ++ix;
    } else if (ix == x.end() || iy->first < ix->first) {
      if (b != 0) out.emplace_back(iy->first, b * iy->second);
      ++iy;
    } else {
      value = a * ix->second + b * iy->second;
      if (value != 0) out.emplace_back(ix->first, value);
      ++ix;
      ++iy;
    }
  }
  return out;
}

void EchelonLattice::insert(SparseVector v, std::size_t tag) {
  SparseVector combo;
  if (track_) combo.emplace_back(tag, Integer(1));
  const Integer one(1);
  while (true) {
    if (v.empty()) {
      if (track_) relations_.push_back(std::move(combo));
      return;
    }
    const std::size_t lead = v.front().first;
    auto it = basis_.find(lead);
    if (it == basis_.end()) {
      if (v.front().second < 0) {
        for (auto& entry : v) entry.second = -entry.second;
        for (auto& entry : combo) entry.second = -entry.second;
      }
      basis_.emplace(lead, Row{std::move(v), std::move(combo)});
      return;
    }
    Row& row = it->second;
    const Integer& bp = row.vec.front().second;
    const Integer& vp = v.front().second;
    if (vp % bp == 0) {
      const Integer q = vp / bp;
      v = combine(one, v, -q, row.vec);
      if (track_) combo = combine(one, combo, -q, row.combo);
      continue;
    }
    Integer g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), bp.get_mpz_t(), vp.get_mpz_t());
    const Integer bq = bp / g;
    const Integer vq = vp / g;
    // [[s, t], [-vq, bq]] has determinant 1.
    SparseVector new_row = combine(s, row.vec, t, v);
    SparseVector new_v = combine(bq, v, -vq, row.vec);
    if (track_) {
      SparseVector new_row_combo = combine(s, row.combo, t, combo);
      combo = combine(bq, combo, -vq, row.combo);
      row.combo = std::move(new_row_combo);
    }
    row.vec = std::move(new_row);
    v = std::move(new_v);
  }
}

std::optional<SparseVector> EchelonLattice::solve(SparseVector target) const {
  SparseVector result;
  const Integer one(1);
  while (!target.empty()) {
    auto it = basis_.find(target.front().first);
    if (it == basis_.end()) return std::nullopt;
    const Row& row = it->second;
    const Integer& bp = row.vec.front().second;
    if (target.front().second % bp != 0) return std::nullopt;
    const Integer q = target.front().second / bp;
    target = combine(one, target, -q, row.vec);
    if (track_) result = combine(one, result, q, row.combo);
  }
  return result;
}

std::vector<std::pair<std::size_t, Integer>> EchelonLattice::pivots() const {
  std::vector<std::pair<std::size_t, Integer>> out;
  for (const auto& [lead, row] : basis_) out.emplace_back(lead, row.vec.front().second);
  return out;
}

std::vector<SparseVector> integer_kernel(const std::vector<SparseVector>& columns) {
  EchelonLattice lattice(true);
  for (std::size_t i = 0; i < columns.size(); ++i) lattice.insert(columns[i], i);
  return lattice.relations();
}

}  // namespace eqs::lattice
