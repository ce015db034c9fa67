#pragma once

#include <gmpxx.h>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace nlie {

// Exact rational scalar. mpq_class keeps canonical form (lowest terms,
// positive denominator) under arithmetic as long as every value is
// canonicalized on construction, so all entry points go through here.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Accepts "p", "-p", "p/q" with decimal integers (ASCII minus or U+2212).
inline Rat parse_rat(std::string s) {
  static const std::string unicode_minus = "−";
  for (std::string::size_type p = s.find(unicode_minus); p != std::string::npos;
       p = s.find(unicode_minus))
    s.replace(p, unicode_minus.size(), "-");
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rat q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: '" + s + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator in rational literal: '" + s + "'");
  q.canonicalize();
  return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

// Dense vector over Q.
using Vec = std::vector<Rat>;

inline Vec zero_vec(std::size_t n) { return Vec(n, Rat(0)); }

inline Vec basis_vec(std::size_t i, std::size_t n) {
  Vec v(n, Rat(0));
  v[i] = 1;
  return v;
}

inline bool is_zero(const Vec& v) {
  for (const Rat& x : v)
    if (x != 0) return false;
  return true;
}

inline void axpy(Vec& acc, const Rat& a, const Vec& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) acc[i] += a * v[i];
}

inline Vec operator+(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline Vec operator-(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

inline Vec operator*(const Rat& c, Vec a) {
  for (Rat& x : a) x *= c;
  return a;
}

// Small dense matrix, row-major. Used for representation matrices; the big
// differential matrices live in SparseMatrix instead.
struct Mat {
  int rows = 0, cols = 0;
  std::vector<Rat> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c, Rat(0)) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  Rat& at(int r, int c) { return a[std::size_t(r) * cols + c]; }
  const Rat& at(int r, int c) const { return a[std::size_t(r) * cols + c]; }

  bool is_zero() const {
    for (const Rat& x : a)
      if (x != 0) return false;
    return true;
  }

  bool operator==(const Mat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }

  Vec apply(const Vec& v) const {
    Vec out(rows, Rat(0));
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c)
        if (at(r, c) != 0 && v[c] != 0) out[r] += at(r, c) * v[c];
    return out;
  }

  Mat operator*(const Mat& o) const {
    Mat out(rows, o.cols);
    for (int r = 0; r < rows; ++r)
      for (int k = 0; k < cols; ++k) {
        const Rat& x = at(r, k);
        if (x == 0) continue;
        for (int c = 0; c < o.cols; ++c)
          if (o.at(k, c) != 0) out.at(r, c) += x * o.at(k, c);
      }
    return out;
  }

  Mat operator+(const Mat& o) const {
    Mat out = *this;
    for (std::size_t i = 0; i < a.size(); ++i) out.a[i] += o.a[i];
    return out;
  }

  Mat operator-(const Mat& o) const {
    Mat out = *this;
    for (std::size_t i = 0; i < a.size(); ++i) out.a[i] -= o.a[i];
    return out;
  }

  Mat operator-() const {
    Mat out = *this;
    for (Rat& x : out.a) x = -x;
    return out;
  }

  Mat scaled(const Rat& c) const {
    Mat out = *this;
    for (Rat& x : out.a) x *= c;
    return out;
  }
};

// Seeded generator of small rationals for randomized identity tests.
class RatSampler {
 public:
  explicit RatSampler(std::uint64_t seed) : gen_(seed), num_(-4, 4), den_(1, 3) {}

  Rat operator()() { return rat(num_(gen_), den_(gen_)); }

  Vec vec(std::size_t n) {
    Vec v(n);
    for (Rat& x : v) x = (*this)();
    return v;
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
  std::uniform_int_distribution<long> num_, den_;
};

}  // namespace nlie
