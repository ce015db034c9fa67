#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace nlie {

// Basis index tuple, 0-based internally (the JSON layer is 1-based).
using Tuple = std::vector<int>;

inline std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Sorts a tuple into strictly increasing order, returning the parity of the
// permutation. A repeated index kills the wedge: nullopt.
inline std::optional<std::pair<Tuple, int>> sort_with_sign(Tuple t) {
  int sign = 1;
  // insertion sort, counting transpositions
  for (std::size_t i = 1; i < t.size(); ++i) {
    int x = t[i];
    std::size_t j = i;
    while (j > 0 && t[j - 1] > x) {
      t[j] = t[j - 1];
      --j;
      sign = -sign;
    }
    t[j] = x;
  }
  for (std::size_t i = 1; i < t.size(); ++i)
    if (t[i] == t[i - 1]) return std::nullopt;
  return std::make_pair(std::move(t), sign);
}

// Lexicographic rank of a strictly increasing k-tuple among the C(d,k)
// subsets of {0,...,d-1}. The empty tuple (k = 0) has rank 0; this makes
// wedge degree 0 a one-dimensional space, so the n = 2 specializations of
// the complexes come out right.
inline std::int64_t wedge_rank(const Tuple& w, int d) {
  std::int64_t r = 0;
  int prev = -1;
  int k = int(w.size());
  for (int j = 0; j < k; ++j) {
    for (int t = prev + 1; t < w[j]; ++t) r += binomial(d - 1 - t, k - 1 - j);
    prev = w[j];
  }
  return r;
}

inline Tuple wedge_unrank(std::int64_t pos, int k, int d) {
  if (pos < 0 || pos >= binomial(d, k))
    throw std::out_of_range("wedge_unrank: position out of range");
  Tuple w(k);
  int t = 0;
  for (int j = 0; j < k; ++j) {
    for (;; ++t) {
      std::int64_t c = binomial(d - 1 - t, k - 1 - j);
      if (pos < c) break;
      pos -= c;
    }
    w[j] = t++;
  }
  return w;
}

inline bool strictly_increasing(const Tuple& t) {
  for (std::size_t i = 1; i < t.size(); ++i)
    if (t[i] <= t[i - 1]) return false;
  return true;
}

// One factor of a product basis: either the wedge power Lambda^k of a
// d-dimensional space (basis = increasing k-tuples in lexicographic order)
// or the space itself (basis = plain indices).
struct Factor {
  bool wedge = false;
  int k = 1;  // wedge degree when wedge == true
  int dim = 0;

  static Factor plain(int d) { return Factor{false, 1, d}; }
  static Factor lam(int k, int d) { return Factor{true, k, d}; }

  std::int64_t size() const { return wedge ? binomial(dim, k) : dim; }
};

// Names the rows/columns of a differential matrix: a formal product of
// factors, enumerated row-major (first factor slowest).
struct BasisDescriptor {
  std::vector<Factor> factors;

  std::int64_t total() const {
    std::int64_t t = 1;
    for (const Factor& f : factors) t *= f.size();
    return t;
  }

  std::vector<std::int64_t> split(std::int64_t idx) const {
    std::vector<std::int64_t> comps(factors.size());
    for (std::size_t i = factors.size(); i-- > 0;) {
      std::int64_t s = factors[i].size();
      comps[i] = idx % s;
      idx /= s;
    }
    return comps;
  }

  std::int64_t fuse(const std::vector<std::int64_t>& comps) const {
    std::int64_t idx = 0;
    for (std::size_t i = 0; i < factors.size(); ++i)
      idx = idx * factors[i].size() + comps[i];
    return idx;
  }
};

}  // namespace nlie
