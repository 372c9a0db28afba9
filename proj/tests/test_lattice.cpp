#include "doctest.h"
#include "eqstiefel/lattice.hpp"
#include "oracles.hpp"

using namespace eqs::lattice;

namespace {

SparseVector sparse(const std::vector<long long>& dense) {
  SparseVector out;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] != 0) out.emplace_back(i, Integer(std::to_string(dense[i])));
  }
  return out;
}

SparseVector evaluate_combo(const std::vector<SparseVector>& columns, const SparseVector& combo) {
  SparseVector sum;
  for (const auto& [tag, c] : combo) sum = combine(Integer(1), sum, c, columns[tag]);
  return sum;
}

}  // namespace

TEST_CASE("combine") {
  CHECK(combine(2, sparse({1, 0, 3}), -1, sparse({2, 5, 6})) == sparse({0, -5, 0}));
  CHECK(combine(0, sparse({1, 2}), 1, sparse({0, 4})) == sparse({0, 4}));
  CHECK(combine(1, {}, 1, {}).empty());
}

TEST_CASE("small lattices") {
  EchelonLattice lat;
  lat.insert(sparse({2, 0}), 0);
  lat.insert(sparse({3, 1}), 1);
  CHECK(lat.rank() == 2);
  // 2 and 3 generate 1 in the leading coordinate.
  auto combo = lat.solve(sparse({1, 1}));
  REQUIRE(combo.has_value());
  CHECK(evaluate_combo({sparse({2, 0}), sparse({3, 1})}, *combo) == sparse({1, 1}));
  CHECK_FALSE(lat.contains(sparse({0, 1})));
  CHECK(lat.contains(sparse({0, 2})));

  EchelonLattice even;
  even.insert(sparse({2, 4}), 0);
  CHECK_FALSE(even.contains(sparse({1, 2})));
  CHECK(even.contains(sparse({-6, -12})));
  CHECK(even.pivots().front().second == 2);

  EchelonLattice neg;
  neg.insert(sparse({-3, 1}), 0);
  CHECK(neg.pivots().front().second == 3);
  CHECK(neg.contains(sparse({})));
}

TEST_CASE("integer kernel") {
  const std::vector<SparseVector> cols{sparse({1, 1}), sparse({1, -1}), sparse({2, 0})};
  const auto kernel = integer_kernel(cols);
  REQUIRE(kernel.size() == 1);
  CHECK(evaluate_combo(cols, kernel[0]).empty());
  // The relation c0 + c1 - c2 = 0 is primitive.
  Integer g = 0;
  for (const auto& [tag, c] : kernel[0]) g = gcd(g, c);
  CHECK(g == 1);

  CHECK(integer_kernel({sparse({1, 0}), sparse({0, 1})}).empty());
  const auto zero_col = integer_kernel({sparse({}), sparse({1})});
  REQUIRE(zero_col.size() == 1);
  CHECK(zero_col[0] == SparseVector{{0, Integer(1)}});
}

TEST_CASE("echelon membership agrees with dense Hermite reduction") {
  oracle::Rng rng(101);
  for (int trial = 0; trial < 400; ++trial) {
    const int dim = oracle::uniform_int(rng, 1, 7);
    const int count = oracle::uniform_int(rng, 0, 7);
    std::vector<std::vector<long long>> dense_cols;
    std::vector<SparseVector> cols;
    EchelonLattice lat;
    for (int c = 0; c < count; ++c) {
      std::vector<long long> col(dim);
      for (auto& v : col) v = oracle::uniform_int(rng, 0, 2) == 0 ? 0 : oracle::uniform_int(rng, -6, 6);
      dense_cols.push_back(col);
      cols.push_back(sparse(col));
      lat.insert(cols.back(), c);
    }
    const oracle::DenseLattice dense(dense_cols, dim);
    for (int probe = 0; probe < 6; ++probe) {
      std::vector<long long> target(dim, 0);
      if (probe % 2 == 0 && count > 0) {
        for (int c = 0; c < count; ++c) {
          const int k = oracle::uniform_int(rng, -3, 3);
          for (int i = 0; i < dim; ++i) target[i] += k * dense_cols[c][i];
        }
      } else {
        for (auto& v : target) v = oracle::uniform_int(rng, -10, 10);
      }
      const bool want = dense.contains(target);
      const auto got = lat.solve(sparse(target));
      CHECK(got.has_value() == want);
      if (got) CHECK(evaluate_combo(cols, *got) == sparse(target));
    }
    // Relations vanish and their number is count - rank.
    for (const auto& rel : lat.relations()) CHECK(evaluate_combo(cols, rel).empty());
    CHECK(lat.relations().size() + lat.rank() == static_cast<std::size_t>(count));
  }
}
