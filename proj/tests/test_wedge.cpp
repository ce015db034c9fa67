#include <doctest.h>

#include <algorithm>

#include "nlie/wedge.hpp"

using namespace nlie;

TEST_CASE("sort_with_sign basics") {
  auto r = sort_with_sign({1, 0});
  REQUIRE(r);
  CHECK(r->first == Tuple{0, 1});
  CHECK(r->second == -1);

  r = sort_with_sign({0, 1, 2});
  REQUIRE(r);
  CHECK(r->second == 1);

  CHECK_FALSE(sort_with_sign({0, 0}));
}

TEST_CASE("sort_with_sign is multiplicative under permutations (length <= 4)") {
  // exhaustive: apply every permutation of a sorted tuple and compare parity
  Tuple base{0, 2, 3, 5};
  for (int len = 1; len <= 4; ++len) {
    Tuple t(base.begin(), base.begin() + len);
    std::vector<int> perm(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) perm[std::size_t(i)] = i;
    do {
      Tuple shuffled(static_cast<std::size_t>(len));
      // parity of perm by explicit inversion count
      int inv = 0;
      for (int i = 0; i < len; ++i)
        for (int j = i + 1; j < len; ++j)
          if (perm[std::size_t(i)] > perm[std::size_t(j)]) ++inv;
      for (int i = 0; i < len; ++i) shuffled[std::size_t(i)] = t[std::size_t(perm[std::size_t(i)])];
      auto r = sort_with_sign(shuffled);
      REQUIRE(r);
      CHECK(r->first == t);
      CHECK(r->second == (inv % 2 == 0 ? 1 : -1));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("rank/unrank are mutually inverse (exhaustive d <= 8)") {
  for (int d = 0; d <= 8; ++d)
    for (int k = 0; k <= d; ++k) {
      std::int64_t count = binomial(d, k);
      for (std::int64_t pos = 0; pos < count; ++pos) {
        Tuple w = wedge_unrank(pos, k, d);
        CHECK(int(w.size()) == k);
        CHECK(strictly_increasing(w));
        CHECK(wedge_rank(w, d) == pos);
      }
    }
}

TEST_CASE("lexicographic anchors") {
  CHECK(wedge_rank({0, 1}, 3) == 0);
  CHECK(binomial(4, 2) == 6);
  CHECK(wedge_unrank(5, 2, 4) == Tuple{2, 3});
  CHECK_THROWS_AS(wedge_unrank(6, 2, 4), std::out_of_range);
  // empty wedge: one basis element
  CHECK(binomial(5, 0) == 1);
  CHECK(wedge_unrank(0, 0, 5) == Tuple{});
  CHECK(wedge_rank({}, 5) == 0);
}

TEST_CASE("basis descriptors enumerate row-major") {
  BasisDescriptor b;
  b.factors.push_back(Factor::lam(2, 4));  // 6
  b.factors.push_back(Factor::plain(3));
  CHECK(b.total() == 18);
  for (std::int64_t i = 0; i < b.total(); ++i) {
    auto comps = b.split(i);
    CHECK(b.fuse(comps) == i);
  }
  CHECK(b.split(5) == std::vector<std::int64_t>{1, 2});
}
