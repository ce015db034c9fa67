#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "nlie/rational.hpp"
#include "nlie/wedge.hpp"

namespace nlie {

// Sparse exact matrix, column-major. No zero entry is ever stored. Carries
// the basis descriptors of its domain (columns) and codomain (rows) so that
// kernel vectors and representatives can be read back as cochains.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::int64_t rows, std::int64_t cols)
      : rows_(rows), cols_(cols), col_(static_cast<std::size_t>(cols)) {}

  std::int64_t rows() const { return rows_; }
  std::int64_t cols() const { return cols_; }

  void add(std::int64_t r, std::int64_t c, const Rat& v) {
    if (v == 0) return;
    auto& col = col_[std::size_t(c)];
    auto it = col.find(r);
    if (it == col.end()) {
      col.emplace(r, v);
    } else {
      it->second += v;
      if (it->second == 0) col.erase(it);
    }
  }

  void set(std::int64_t r, std::int64_t c, const Rat& v) {
    auto& col = col_[std::size_t(c)];
    if (v == 0)
      col.erase(r);
    else
      col[r] = v;
  }

  Rat get(std::int64_t r, std::int64_t c) const {
    const auto& col = col_[std::size_t(c)];
    auto it = col.find(r);
    return it == col.end() ? Rat(0) : it->second;
  }

  const std::map<std::int64_t, Rat>& column(std::int64_t c) const {
    return col_[std::size_t(c)];
  }

  std::int64_t nnz() const {
    std::int64_t t = 0;
    for (const auto& c : col_) t += std::int64_t(c.size());
    return t;
  }

  bool is_zero() const {
    for (const auto& c : col_)
      if (!c.empty()) return false;
    return true;
  }

  bool operator==(const SparseMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && col_ == o.col_;
  }

  Vec apply(const Vec& v) const;
  SparseMatrix operator*(const SparseMatrix& o) const;
  SparseMatrix operator-(const SparseMatrix& o) const;

  // Restriction to coordinate subspaces: keeps the listed columns/rows, in
  // the listed order.
  SparseMatrix select(const std::vector<std::int64_t>& row_ids,
                      const std::vector<std::int64_t>& col_ids) const;

  BasisDescriptor domain;    // columns
  BasisDescriptor codomain;  // rows

 private:
  std::int64_t rows_ = 0, cols_ = 0;
  std::vector<std::map<std::int64_t, Rat>> col_;
};

// Exact rank over Q (fraction-free Bareiss elimination on integer-scaled
// rows, pivot row chosen by minimal numerator magnitude). Deterministic.
std::int64_t rank(const SparseMatrix& m);

// Basis of the right kernel {v : Mv = 0}, in reduced echelon form with unit
// entries at the free columns; column order is fixed by the domain
// descriptor, so representatives are reproducible.
std::vector<Vec> kernel_basis(const SparseMatrix& m);

// Some x with Mx = b, or nullopt when b is not in the column space.
std::optional<Vec> solve_in_image(const SparseMatrix& m, const Vec& b);

// Incremental reduced-echelon accumulator over Q. insert() reduces the
// vector against the rows held so far and keeps it if independent; also the
// membership test for spans.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t width) : width_(width) {}

  // Returns true if v enlarged the span.
  bool insert(Vec v);
  bool contains(Vec v) const;
  // Reduces v modulo the span (returns the residue).
  Vec reduce(Vec v) const;

  std::int64_t rank() const { return std::int64_t(rows_.size()); }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  std::size_t width_;
  std::vector<Vec> rows_;             // reduced echelon rows
  std::vector<std::size_t> pivots_;   // pivot column per row, increasing
};

}  // namespace nlie
