#include "nlie/sparse.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace nlie {

Vec SparseMatrix::apply(const Vec& v) const {
  if (std::int64_t(v.size()) != cols_)
    throw std::invalid_argument("SparseMatrix::apply: size mismatch");
  Vec out(std::size_t(rows_), Rat(0));
  for (std::int64_t c = 0; c < cols_; ++c) {
    if (v[std::size_t(c)] == 0) continue;
    for (const auto& [r, x] : col_[std::size_t(c)])
      out[std::size_t(r)] += x * v[std::size_t(c)];
  }
  return out;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
  if (cols_ != o.rows_)
    throw std::invalid_argument("SparseMatrix::operator*: shape mismatch");
  SparseMatrix out(rows_, o.cols_);
  out.domain = o.domain;
  out.codomain = codomain;
  for (std::int64_t j = 0; j < o.cols_; ++j)
    for (const auto& [k, v] : o.col_[std::size_t(j)])
      for (const auto& [i, u] : col_[std::size_t(k)]) out.add(i, j, u * v);
  return out;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("SparseMatrix::operator-: shape mismatch");
  SparseMatrix out = *this;
  for (std::int64_t c = 0; c < cols_; ++c)
    for (const auto& [r, v] : o.col_[std::size_t(c)]) out.add(r, c, -v);
  return out;
}

SparseMatrix SparseMatrix::select(const std::vector<std::int64_t>& row_ids,
                                  const std::vector<std::int64_t>& col_ids) const {
  std::map<std::int64_t, std::int64_t> row_pos;
  for (std::size_t i = 0; i < row_ids.size(); ++i) row_pos[row_ids[i]] = std::int64_t(i);
  SparseMatrix out(std::int64_t(row_ids.size()), std::int64_t(col_ids.size()));
  for (std::size_t j = 0; j < col_ids.size(); ++j)
    for (const auto& [r, v] : col_[std::size_t(col_ids[j])]) {
      auto it = row_pos.find(r);
      if (it != row_pos.end()) out.set(it->second, std::int64_t(j), v);
    }
  return out;
}

namespace {

// Row-major working form for elimination: integer rows (denominators
// cleared), kept sparse as sorted (col, value) pairs.
struct IntRow {
  std::vector<std::pair<std::int64_t, mpz_class>> e;

  const mpz_class* at(std::int64_t c) const {
    auto it = std::lower_bound(
        e.begin(), e.end(), c,
        [](const auto& p, std::int64_t col) { return p.first < col; });
    return (it != e.end() && it->first == c) ? &it->second : nullptr;
  }
};

std::vector<IntRow> integer_rows(const SparseMatrix& m) {
  std::vector<std::map<std::int64_t, Rat>> rows(std::size_t(m.rows()));
  for (std::int64_t c = 0; c < m.cols(); ++c)
    for (const auto& [r, v] : m.column(c)) rows[std::size_t(r)][c] = v;
  std::vector<IntRow> out;
  out.reserve(rows.size());
  for (auto& row : rows) {
    if (row.empty()) continue;
    mpz_class l(1);
    for (const auto& [c, v] : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    IntRow ir;
    ir.e.reserve(row.size());
    for (const auto& [c, v] : row) {
      mpz_class z = v.get_num() * (l / v.get_den());
      ir.e.emplace_back(c, std::move(z));
    }
    out.push_back(std::move(ir));
  }
  return out;
}

struct Echelon {
  std::vector<IntRow> rows;              // staircase rows, pivot first
  std::vector<std::int64_t> pivot_cols;  // pivot column per row, increasing
};

// Fraction-free Bareiss elimination. Every active row is updated at every
// pivot step as (p*row - row[c]*pivot_row) / prev, including rows with a
// zero pivot-column entry (the update degenerates to the p/prev scaling
// Bareiss exactness depends on). Pivot row: minimal |entry| in the pivot
// column. Row swaps do not disturb the divisibility argument, and the pivot
// COLUMN set is determined by the matrix alone, so ranks and kernels are
// independent of assembly order.
Echelon eliminate(std::vector<IntRow> rows, std::int64_t ncols) {
  Echelon ech;
  mpz_class prev(1);
  std::size_t done = 0;
  for (std::int64_t col = 0; col < ncols && done < rows.size(); ++col) {
    std::size_t best = rows.size();
    for (std::size_t i = done; i < rows.size(); ++i) {
      const mpz_class* v = rows[i].at(col);
      if (!v) continue;
      if (best == rows.size() ||
          mpz_cmpabs(v->get_mpz_t(), rows[best].at(col)->get_mpz_t()) < 0)
        best = i;
    }
    if (best == rows.size()) continue;
    std::swap(rows[done], rows[best]);
    const IntRow prow = rows[done];
    const mpz_class p = *prow.at(col);
    for (std::size_t i = done + 1; i < rows.size(); ++i) {
      const mpz_class* qp = rows[i].at(col);
      const mpz_class q = qp ? *qp : mpz_class(0);
      IntRow upd;
      upd.e.reserve(rows[i].e.size() + prow.e.size());
      std::size_t a = 0, b = 0;
      while (a < rows[i].e.size() || b < prow.e.size()) {
        std::int64_t ca = a < rows[i].e.size() ? rows[i].e[a].first : ncols;
        std::int64_t cb = (q != 0 && b < prow.e.size()) ? prow.e[b].first : ncols;
        if (cb == ncols && ca == ncols) break;
        mpz_class val;
        std::int64_t cc;
        if (ca < cb) {
          cc = ca;
          val = p * rows[i].e[a].second;
          ++a;
        } else if (cb < ca) {
          cc = cb;
          val = -q * prow.e[b].second;
          ++b;
        } else {
          cc = ca;
          val = p * rows[i].e[a].second - q * prow.e[b].second;
          ++a;
          ++b;
        }
        if (cc <= col) continue;  // entries at and left of the pivot vanish
        if (val == 0) continue;
        mpz_divexact(val.get_mpz_t(), val.get_mpz_t(), prev.get_mpz_t());
        upd.e.emplace_back(cc, std::move(val));
      }
      rows[i] = std::move(upd);
    }
    prev = p;
    ++done;
    rows.erase(std::remove_if(rows.begin() + std::ptrdiff_t(done), rows.end(),
                              [](const IntRow& r) { return r.e.empty(); }),
               rows.end());
    ech.pivot_cols.push_back(col);
  }
  rows.resize(done);
  ech.rows = std::move(rows);
  return ech;
}

// Solves the homogeneous system of the echelon rows with the given values
// preset at non-pivot columns (back-substitution over Q).
void back_substitute(const Echelon& ech, Vec& v) {
  for (std::size_t ri = ech.rows.size(); ri-- > 0;) {
    const IntRow& row = ech.rows[ri];
    Rat s(0);
    for (std::size_t t = 1; t < row.e.size(); ++t) {
      const auto& [c, z] = row.e[t];
      if (v[std::size_t(c)] != 0) s += Rat(z) * v[std::size_t(c)];
    }
    if (s != 0) {
      Rat piv(row.e.front().second);
      v[std::size_t(row.e.front().first)] = -s / piv;
    } else {
      v[std::size_t(row.e.front().first)] = 0;
    }
  }
}

std::vector<Vec> kernel_from_echelon(const Echelon& ech, std::int64_t ncols) {
  std::vector<bool> is_pivot(std::size_t(ncols), false);
  for (std::int64_t c : ech.pivot_cols) is_pivot[std::size_t(c)] = true;
  std::vector<Vec> basis;
  for (std::int64_t fc = 0; fc < ncols; ++fc) {
    if (is_pivot[std::size_t(fc)]) continue;
    Vec v(std::size_t(ncols), Rat(0));
    v[std::size_t(fc)] = 1;
    back_substitute(ech, v);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::int64_t rank(const SparseMatrix& m) {
  return std::int64_t(eliminate(integer_rows(m), m.cols()).pivot_cols.size());
}

std::vector<Vec> kernel_basis(const SparseMatrix& m) {
  return kernel_from_echelon(eliminate(integer_rows(m), m.cols()), m.cols());
}

std::optional<Vec> solve_in_image(const SparseMatrix& m, const Vec& b) {
  if (std::int64_t(b.size()) != m.rows())
    throw std::invalid_argument("solve_in_image: rhs length != rows");
  // Augmented column trick: a pivot in the b column means inconsistent.
  SparseMatrix aug(m.rows(), m.cols() + 1);
  for (std::int64_t c = 0; c < m.cols(); ++c)
    for (const auto& [r, v] : m.column(c)) aug.set(r, c, v);
  for (std::int64_t r = 0; r < m.rows(); ++r) aug.set(r, m.cols(), b[std::size_t(r)]);
  Echelon ech = eliminate(integer_rows(aug), aug.cols());
  for (std::int64_t c : ech.pivot_cols)
    if (c == m.cols()) return std::nullopt;
  // particular solution: free variables 0, augmented slot pinned at -1, so
  // the homogeneous solve of [M | b] yields Mx - b = 0 directly
  Vec v(std::size_t(m.cols()) + 1, Rat(0));
  v[std::size_t(m.cols())] = -1;
  back_substitute(ech, v);
  v.pop_back();
  return v;
}

bool EchelonBasis::insert(Vec v) {
  v = reduce(std::move(v));
  std::size_t p = 0;
  while (p < width_ && v[p] == 0) ++p;
  if (p == width_) return false;
  Rat piv = v[p];
  for (Rat& x : v) x /= piv;
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (rows_[i][p] != 0) {
      Rat c = rows_[i][p];
      for (std::size_t j = 0; j < width_; ++j)
        if (v[j] != 0) rows_[i][j] -= c * v[j];
    }
  auto it = std::upper_bound(pivots_.begin(), pivots_.end(), p);
  std::size_t pos = std::size_t(it - pivots_.begin());
  pivots_.insert(it, p);
  rows_.insert(rows_.begin() + std::ptrdiff_t(pos), std::move(v));
  return true;
}

Vec EchelonBasis::reduce(Vec v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Rat c = v[pivots_[i]];
    if (c == 0) continue;
    for (std::size_t j = 0; j < width_; ++j)
      if (rows_[i][j] != 0) v[j] -= c * rows_[i][j];
  }
  return v;
}

bool EchelonBasis::contains(Vec v) const { return is_zero(reduce(std::move(v))); }

}  // namespace nlie
