#include <doctest.h>

#include <algorithm>
#include <random>

#include "nlie/sparse.hpp"

using namespace nlie;

namespace {

SparseMatrix from_rows(const std::vector<std::vector<long>>& rows, std::int64_t cols) {
  SparseMatrix m(std::int64_t(rows.size()), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m.add(std::int64_t(r), std::int64_t(c), rat(rows[r][c]));
  return m;
}

}  // namespace

TEST_CASE("rank basics") {
  CHECK(rank(SparseMatrix(3, 3)) == 0);
  SparseMatrix id(3, 3);
  for (int i = 0; i < 3; ++i) id.set(i, i, rat(1));
  CHECK(rank(id) == 3);
  CHECK(rank(from_rows({{1, 2}, {2, 4}}, 2)) == 1);
}

TEST_CASE("kernel basics") {
  SparseMatrix id(2, 2);
  id.set(0, 0, rat(1));
  id.set(1, 1, rat(1));
  CHECK(kernel_basis(id).empty());

  CHECK(kernel_basis(SparseMatrix(2, 3)).size() == 3);

  SparseMatrix row(1, 2);
  row.set(0, 0, rat(1));
  row.set(0, 1, rat(1));
  auto kb = kernel_basis(row);
  REQUIRE(kb.size() == 1);
  CHECK(kb[0][0] == -kb[0][1]);
  CHECK(kb[0][0] != 0);
}

TEST_CASE("solve_in_image basics") {
  SparseMatrix id(2, 2);
  id.set(0, 0, rat(1));
  id.set(1, 1, rat(1));
  Vec b{rat(3), rat(-7, 2)};
  auto x = solve_in_image(id, b);
  REQUIRE(x);
  CHECK(*x == b);

  SparseMatrix z(2, 2);
  CHECK(solve_in_image(z, zero_vec(2)));
  CHECK_FALSE(solve_in_image(z, Vec{rat(1), rat(0)}));
}

TEST_CASE("rank + nullity = cols, kernel vectors annihilate, on random matrices") {
  std::mt19937_64 gen(42);
  std::uniform_int_distribution<long> entry(-3, 3), denom(1, 2);
  for (int trial = 0; trial < 30; ++trial) {
    std::uniform_int_distribution<int> dim(1, 8);
    int rows = dim(gen), cols = dim(gen);
    SparseMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c)
        if (entry(gen) > 0) m.set(r, c, rat(entry(gen), denom(gen)));
    auto kb = kernel_basis(m);
    CHECK(rank(m) + std::int64_t(kb.size()) == cols);
    for (const Vec& v : kb) CHECK(is_zero(m.apply(v)));
  }
}

TEST_CASE("rank and kernel are independent of assembly order") {
  std::mt19937_64 gen(7);
  std::vector<std::tuple<int, int, long>> entries;
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 5; ++c) {
      long v = long((r * 31 + c * 17) % 7) - 3;
      if (v != 0) entries.emplace_back(r, c, v);
    }
  SparseMatrix a(6, 5);
  for (auto& [r, c, v] : entries) a.add(r, c, rat(v));
  std::shuffle(entries.begin(), entries.end(), gen);
  SparseMatrix b(6, 5);
  // also split entries into two partial adds
  for (auto& [r, c, v] : entries) {
    b.add(r, c, rat(v, 2));
    b.add(r, c, rat(v, 2));
  }
  CHECK(rank(a) == rank(b));
  CHECK(kernel_basis(a) == kernel_basis(b));
}

TEST_CASE("solve_in_image returns an exact preimage on random consistent systems") {
  std::mt19937_64 gen(99);
  std::uniform_int_distribution<long> entry(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    SparseMatrix m(5, 4);
    for (int r = 0; r < 5; ++r)
      for (int c = 0; c < 4; ++c)
        if (entry(gen) > 0) m.set(r, c, rat(entry(gen)));
    Vec x0(4);
    for (auto& v : x0) v = rat(entry(gen), 2);
    Vec b = m.apply(x0);
    auto x = solve_in_image(m, b);
    REQUIRE(x);
    CHECK(m.apply(*x) == b);
  }
}

TEST_CASE("EchelonBasis tracks span membership") {
  EchelonBasis e(3);
  CHECK(e.insert(Vec{rat(1), rat(2), rat(3)}));
  CHECK(e.insert(Vec{rat(0), rat(1), rat(1)}));
  CHECK_FALSE(e.insert(Vec{rat(1), rat(3), rat(4)}));
  CHECK(e.rank() == 2);
  CHECK(e.contains(Vec{rat(2), rat(5), rat(7)}));
  CHECK_FALSE(e.contains(Vec{rat(0), rat(0), rat(1)}));
}
