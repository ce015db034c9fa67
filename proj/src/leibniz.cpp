#include "nlie/leibniz.hpp"

#include <cassert>
#include <stdexcept>

#include "nlie/cochain_spaces.hpp"

namespace nlie {

Vec LeibnizAlgebra::bracket_basis(int i, int j) const {
  auto it = br.find({i, j});
  return it == br.end() ? zero_vec(static_cast<std::size_t>(dim)) : it->second;
}

Vec LeibnizAlgebra::bracket(const Vec& x, const Vec& y) const {
  Vec out = zero_vec(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    if (x[std::size_t(i)] == 0) continue;
    for (int j = 0; j < dim; ++j) {
      if (y[std::size_t(j)] == 0) continue;
      axpy(out, x[std::size_t(i)] * y[std::size_t(j)], bracket_basis(i, j));
    }
  }
  return out;
}

LeibnizRep LeibnizRep::zero(int dim_l, int dim_v) {
  LeibnizRep r;
  r.dim_l = dim_l;
  r.dim_v = dim_v;
  r.lambda.assign(std::size_t(dim_l), Mat(dim_v, dim_v));
  r.rho.assign(std::size_t(dim_l), Mat(dim_v, dim_v));
  return r;
}

Mat LeibnizRep::lam_vec(const Vec& x) const {
  Mat out(dim_v, dim_v);
  for (int i = 0; i < dim_l; ++i)
    if (x[std::size_t(i)] != 0) out = out + lambda[std::size_t(i)].scaled(x[std::size_t(i)]);
  return out;
}

Mat LeibnizRep::rho_vec(const Vec& x) const {
  Mat out(dim_v, dim_v);
  for (int i = 0; i < dim_l; ++i)
    if (x[std::size_t(i)] != 0) out = out + rho[std::size_t(i)].scaled(x[std::size_t(i)]);
  return out;
}

CheckResult validate_leibniz(const LeibnizAlgebra& lb) {
  for (int x = 0; x < lb.dim; ++x)
    for (int y = 0; y < lb.dim; ++y)
      for (int z = 0; z < lb.dim; ++z) {
        Vec ex = basis_vec(std::size_t(x), std::size_t(lb.dim));
        Vec lhs = lb.bracket(ex, lb.bracket_basis(y, z));
        Vec rhs = lb.bracket(lb.bracket_basis(x, y), basis_vec(std::size_t(z), std::size_t(lb.dim))) +
                  lb.bracket(basis_vec(std::size_t(y), std::size_t(lb.dim)), lb.bracket_basis(x, z));
        if (lhs != rhs)
          return Violation{"leibniz-left", {{x, y, z}},
                           "lhs=" + vec_str(lhs) + " rhs=" + vec_str(rhs)};
      }
  return std::nullopt;
}

CheckResult validate_leibniz_right(const LeibnizAlgebra& lb) {
  for (int x = 0; x < lb.dim; ++x)
    for (int y = 0; y < lb.dim; ++y)
      for (int z = 0; z < lb.dim; ++z) {
        Vec ez = basis_vec(std::size_t(z), std::size_t(lb.dim));
        Vec lhs = lb.bracket(lb.bracket_basis(x, y), ez);
        Vec rhs = lb.bracket(lb.bracket_basis(x, z), basis_vec(std::size_t(y), std::size_t(lb.dim))) +
                  lb.bracket(basis_vec(std::size_t(x), std::size_t(lb.dim)), lb.bracket_basis(y, z));
        if (lhs != rhs)
          return Violation{"leibniz-right", {{x, y, z}},
                           "lhs=" + vec_str(lhs) + " rhs=" + vec_str(rhs)};
      }
  return std::nullopt;
}

CheckResult validate_leibniz_rep(const LeibnizAlgebra& lb, const LeibnizRep& r) {
  if (r.dim_l != lb.dim) throw std::invalid_argument("rep/algebra dim mismatch");
  for (int x = 0; x < lb.dim; ++x)
    for (int y = 0; y < lb.dim; ++y) {
      Vec bxy = lb.bracket_basis(x, y);
      const Mat &lx = r.lambda[std::size_t(x)], &ly = r.lambda[std::size_t(y)];
      const Mat &rx = r.rho[std::size_t(x)], &ry = r.rho[std::size_t(y)];
      if (!(r.lam_vec(bxy) == lx * ly - ly * lx))
        return Violation{"leibniz-rep-1", {{x, y}}, ""};
      if (!(r.rho_vec(bxy) == lx * ry - ry * lx))
        return Violation{"leibniz-rep-2", {{x, y}}, ""};
      if (!(ry * rx == -(ry * lx)))
        return Violation{"leibniz-rep-3", {{x, y}}, ""};
    }
  return std::nullopt;
}

LeibnizAlgebra induced_leibniz(const NLieAlgebra& a) {
  const int n = a.n, d = a.dim;
  const std::int64_t dl = binomial(d, n - 1);
  LeibnizAlgebra lb;
  lb.dim = int(dl);
  for (std::int64_t i = 0; i < dl; ++i) {
    Tuple wi = wedge_unrank(i, n - 1, d);
    for (std::int64_t j = 0; j < dl; ++j) {
      Tuple wj = wedge_unrank(j, n - 1, d);
      Vec val = zero_vec(static_cast<std::size_t>(dl));
      for (int k = 0; k < n - 1; ++k) {
        Tuple args = wi;
        args.push_back(wj[std::size_t(k)]);
        Vec b = a.bracket_basis(args);
        for (int t = 0; t < d; ++t) {
          if (b[std::size_t(t)] == 0) continue;
          Tuple repl = wj;
          repl[std::size_t(k)] = t;
          auto norm = sort_with_sign(repl);
          if (!norm) continue;
          std::int64_t rk = wedge_rank(norm->first, d);
          val[std::size_t(rk)] += b[std::size_t(t)] * norm->second;
        }
      }
      if (!is_zero(val)) lb.br[{int(i), int(j)}] = std::move(val);
    }
  }
  return lb;
}

LeibnizRep fundamental_rep(const NLieAlgebra& a) {
  const int n = a.n, d = a.dim;
  const std::int64_t dl = binomial(d, n - 1);
  LeibnizRep r = LeibnizRep::zero(int(dl), d);
  for (std::int64_t i = 0; i < dl; ++i) {
    Tuple w = wedge_unrank(i, n - 1, d);
    Mat m(d, d);
    Tuple args = w;
    args.push_back(0);
    for (int j = 0; j < d; ++j) {
      args.back() = j;
      Vec col = a.bracket_basis(args);
      for (int t = 0; t < d; ++t) m.at(t, j) = col[std::size_t(t)];
    }
    r.lambda[std::size_t(i)] = m;
    r.rho[std::size_t(i)] = -m;
  }
  return r;
}

LeibnizRep adjoint_pair(const LeibnizAlgebra& lb) {
  LeibnizRep r = LeibnizRep::zero(lb.dim, lb.dim);
  for (int x = 0; x < lb.dim; ++x) {
    Mat l(lb.dim, lb.dim), rr(lb.dim, lb.dim);
    for (int y = 0; y < lb.dim; ++y) {
      Vec lv = lb.bracket_basis(x, y);   // ad^L_x(y) = [x,y]
      Vec rv = lb.bracket_basis(y, x);   // ad^R_x(y) = [y,x]
      for (int t = 0; t < lb.dim; ++t) {
        l.at(t, y) = lv[std::size_t(t)];
        rr.at(t, y) = rv[std::size_t(t)];
      }
    }
    r.lambda[std::size_t(x)] = std::move(l);
    r.rho[std::size_t(x)] = std::move(rr);
  }
  return r;
}

SubRepresentation sym_subrep(const LeibnizAlgebra& lb, const LeibnizRep& r) {
  const int dv = r.dim_v;
  // kernel of the stacked maps v -> lambda(x)v + rho(x)v over basis x
  SparseMatrix stacked(std::int64_t(lb.dim) * dv, dv);
  for (int x = 0; x < lb.dim; ++x) {
    Mat s = r.lambda[std::size_t(x)] + r.rho[std::size_t(x)];
    for (int i = 0; i < dv; ++i)
      for (int j = 0; j < dv; ++j)
        stacked.add(std::int64_t(x) * dv + i, j, s.at(i, j));
  }
  SubRepresentation out;
  out.basis = kernel_basis(stacked);
  const std::size_t k = out.basis.size();
  // closure: the action must preserve the subspace
  SparseMatrix bmat(dv, std::int64_t(k));
  for (std::size_t j = 0; j < k; ++j)
    for (int i = 0; i < dv; ++i) bmat.set(i, std::int64_t(j), out.basis[j][std::size_t(i)]);
  out.rep = LeibnizRep::zero(lb.dim, int(k));
  for (int x = 0; x < lb.dim; ++x) {
    for (std::size_t j = 0; j < k; ++j) {
      Vec lv = r.lambda[std::size_t(x)].apply(out.basis[j]);
      Vec rv = r.rho[std::size_t(x)].apply(out.basis[j]);
      auto lc = solve_in_image(bmat, lv);
      auto rc = solve_in_image(bmat, rv);
      if (!lc || !rc)
        throw std::runtime_error("sym_subrep: action does not preserve V^sym");
      for (std::size_t i = 0; i < k; ++i) {
        out.rep.lambda[std::size_t(x)].at(int(i), int(j)) = (*lc)[i];
        out.rep.rho[std::size_t(x)].at(int(i), int(j)) = (*rc)[i];
      }
    }
  }
  return out;
}

QuotientRepresentation antisym_kernel(const LeibnizAlgebra& lb, const LeibnizRep& r) {
  const int dv = r.dim_v;
  EchelonBasis anti(static_cast<std::size_t>(dv));
  for (int x = 0; x < lb.dim; ++x) {
    Mat s = r.lambda[std::size_t(x)] + r.rho[std::size_t(x)];
    for (int j = 0; j < dv; ++j) {
      Vec col(static_cast<std::size_t>(dv), Rat(0));
      for (int i = 0; i < dv; ++i) col[std::size_t(i)] = s.at(i, j);
      anti.insert(std::move(col));
    }
  }
  QuotientRepresentation out;
  out.anti_basis = anti.rows();
  std::vector<bool> is_pivot(std::size_t(dv), false);
  for (std::size_t p : anti.pivots()) is_pivot[p] = true;
  for (std::size_t cc = 0; cc < std::size_t(dv); ++cc)
    if (!is_pivot[cc]) out.complement.push_back(cc);

  const std::size_t ka = out.anti_basis.size(), kq = out.complement.size();
  SparseMatrix amat(dv, std::int64_t(ka));
  for (std::size_t j = 0; j < ka; ++j)
    for (int i = 0; i < dv; ++i) amat.set(i, std::int64_t(j), out.anti_basis[j][std::size_t(i)]);

  out.anti_rep = LeibnizRep::zero(lb.dim, int(ka));
  out.quotient_rep = LeibnizRep::zero(lb.dim, int(kq));
  for (int x = 0; x < lb.dim; ++x) {
    for (std::size_t j = 0; j < ka; ++j) {
      Vec lv = r.lambda[std::size_t(x)].apply(out.anti_basis[j]);
      Vec rv = r.rho[std::size_t(x)].apply(out.anti_basis[j]);
      auto lc = solve_in_image(amat, lv);
      auto rc = solve_in_image(amat, rv);
      if (!lc || !rc)
        throw std::runtime_error("antisym_kernel: action does not preserve V_anti");
      for (std::size_t i = 0; i < ka; ++i) {
        out.anti_rep.lambda[std::size_t(x)].at(int(i), int(j)) = (*lc)[i];
        out.anti_rep.rho[std::size_t(x)].at(int(i), int(j)) = (*rc)[i];
      }
    }
    // quotient action: reduce mod V_anti, read complement coordinates
    for (std::size_t j = 0; j < kq; ++j) {
      Vec ev = basis_vec(out.complement[j], std::size_t(dv));
      Vec lv = anti.reduce(r.lambda[std::size_t(x)].apply(ev));
      Vec rv = anti.reduce(r.rho[std::size_t(x)].apply(ev));
      for (std::size_t i = 0; i < kq; ++i) {
        out.quotient_rep.lambda[std::size_t(x)].at(int(i), int(j)) = lv[out.complement[i]];
        out.quotient_rep.rho[std::size_t(x)].at(int(i), int(j)) = rv[out.complement[i]];
      }
    }
  }
  return out;
}

LeibnizAlgebra semidirect_sum_leibniz(const LeibnizAlgebra& lb, const LeibnizRep& r) {
  const int dv = r.dim_v, dl = lb.dim;
  LeibnizAlgebra s;
  s.dim = dv + dl;
  for (int a = 0; a < s.dim; ++a)
    for (int b = 0; b < s.dim; ++b) {
      Vec val = zero_vec(static_cast<std::size_t>(s.dim));
      if (a < dv && b >= dv) {  // (v, 0), (0, y): v <| y
        const Mat& m = r.rho[std::size_t(b - dv)];
        for (int i = 0; i < dv; ++i) val[std::size_t(i)] = m.at(i, a);
      } else if (a >= dv && b < dv) {  // (0, x), (w, 0): x |> w
        const Mat& m = r.lambda[std::size_t(a - dv)];
        for (int i = 0; i < dv; ++i) val[std::size_t(i)] = m.at(i, b);
      } else if (a >= dv && b >= dv) {
        Vec lv = lb.bracket_basis(a - dv, b - dv);
        for (int i = 0; i < dl; ++i) val[std::size_t(dv + i)] = lv[std::size_t(i)];
      }
      if (!is_zero(val)) s.br[{a, b}] = std::move(val);
    }
  return s;
}

SparseMatrix leibniz_differential(const LeibnizAlgebra& lb, const LeibnizRep& r, int m) {
  const int dl = lb.dim, dv = r.dim_v;
  BasisDescriptor dom = leibniz_cochain_desc(dl, dv, m);
  BasisDescriptor cod = leibniz_cochain_desc(dl, dv, m + 1);
  SparseMatrix out(cod.total(), dom.total());
  out.domain = dom;
  out.codomain = cod;
  if (dl == 0 || dv == 0 || cod.total() == 0) return out;

  const std::int64_t ntuples = cod.total() / dv;
  Tuple s(static_cast<std::size_t>(m + 1));
  for (std::int64_t si = 0; si < ntuples; ++si) {
    // decode codomain argument tuple
    std::int64_t rest = si;
    for (int k = m; k >= 0; --k) {
      s[std::size_t(k)] = int(rest % dl);
      rest /= dl;
    }
    const std::int64_t row0 = si * dv;
    auto col_of = [&](const Tuple& t) {
      std::int64_t idx = 0;
      for (int v : t) idx = idx * dl + v;
      return idx * dv;
    };
    // bracket terms: remove slot a, bracket into slot b, sign (-1)^{a+1}
    for (int aa = 0; aa <= m; ++aa)
      for (int bb = aa + 1; bb <= m; ++bb) {
        Vec bvec = lb.bracket_basis(s[std::size_t(aa)], s[std::size_t(bb)]);
        if (is_zero(bvec)) continue;
        Rat sign = (aa % 2 == 0) ? Rat(-1) : Rat(1);
        Tuple t;
        t.reserve(static_cast<std::size_t>(m));
        for (int k = 0; k <= m; ++k)
          if (k != aa) t.push_back(s[std::size_t(k)]);
        for (int idx = 0; idx < dl; ++idx) {
          if (bvec[std::size_t(idx)] == 0) continue;
          t[std::size_t(bb - 1)] = idx;
          std::int64_t c0 = col_of(t);
          for (int q = 0; q < dv; ++q)
            out.add(row0 + q, c0 + q, sign * bvec[std::size_t(idx)]);
        }
      }
    // left actions, slots 1..m: sign (-1)^{k+1}
    for (int k = 0; k < m; ++k) {
      const Mat& lam = r.lambda[std::size_t(s[std::size_t(k)])];
      if (lam.is_zero()) continue;
      Rat sign = (k % 2 == 0) ? Rat(1) : Rat(-1);
      Tuple t;
      t.reserve(static_cast<std::size_t>(m));
      for (int kk = 0; kk <= m; ++kk)
        if (kk != k) t.push_back(s[std::size_t(kk)]);
      std::int64_t c0 = col_of(t);
      for (int p = 0; p < dv; ++p)
        for (int q = 0; q < dv; ++q)
          if (lam.at(p, q) != 0) out.add(row0 + p, c0 + q, sign * lam.at(p, q));
    }
    // right action of the last slot: sign (-1)^{m+1}
    {
      const Mat& rho = r.rho[std::size_t(s[std::size_t(m)])];
      if (!rho.is_zero()) {
        Rat sign = (m % 2 == 0) ? Rat(-1) : Rat(1);
        Tuple t(s.begin(), s.end() - 1);
        std::int64_t c0 = col_of(t);
        for (int p = 0; p < dv; ++p)
          for (int q = 0; q < dv; ++q)
            if (rho.at(p, q) != 0) out.add(row0 + p, c0 + q, sign * rho.at(p, q));
      }
    }
  }
  return out;
}

LeibnizRep rep_on_Ln2_tensor_V(const NLieAlgebra& a, const Representation& r) {
  const int n = a.n, d = a.dim, dv = r.dim_v;
  const std::int64_t dl = binomial(d, n - 1);
  const std::int64_t dz = binomial(d, n - 2);
  const int dim_space = int(dz) * dv;
  LeibnizRep out = LeibnizRep::zero(int(dl), dim_space);
  for (std::int64_t wi = 0; wi < dl; ++wi) {
    Tuple w = wedge_unrank(wi, n - 1, d);
    Mat lam(dim_space, dim_space), rho(dim_space, dim_space);
    Mat mu_w = r.mu_basis(w);
    for (std::int64_t zi = 0; zi < dz; ++zi) {
      Tuple z = wedge_unrank(zi, n - 2, d);
      for (int v = 0; v < dv; ++v) {
        const int col = int(zi) * dv + v;
        // x |> (z (x) v): bracket into each wedge slot, then mu on the value
        for (int k = 0; k < n - 2; ++k) {
          Tuple args = w;
          args.push_back(z[std::size_t(k)]);
          Vec b = a.bracket_basis(args);
          for (int t = 0; t < d; ++t) {
            if (b[std::size_t(t)] == 0) continue;
            Tuple repl = z;
            repl[std::size_t(k)] = t;
            auto norm = sort_with_sign(repl);
            if (!norm) continue;
            std::int64_t rk = wedge_rank(norm->first, d);
            lam.at(int(rk) * dv + v, col) += b[std::size_t(t)] * norm->second;
          }
        }
        for (int p = 0; p < dv; ++p)
          if (mu_w.at(p, v) != 0) lam.at(int(zi) * dv + p, col) += mu_w.at(p, v);
        // (z (x) v) <| x = sum_k (-1)^{n+k} (x drop k) (x) mu(z..., x^k)(v)
        for (int k = 0; k < n - 1; ++k) {
          Rat sign = ((n + k + 1) % 2 == 0) ? Rat(1) : Rat(-1);
          Tuple drop = w;
          drop.erase(drop.begin() + k);
          std::int64_t rk = wedge_rank(drop, d);
          Tuple args = z;
          args.push_back(w[std::size_t(k)]);
          Mat mu_zx = r.mu_basis(args);
          for (int p = 0; p < dv; ++p)
            if (mu_zx.at(p, v) != 0)
              rho.at(int(rk) * dv + p, col) += sign * mu_zx.at(p, v);
        }
      }
    }
    out.lambda[std::size_t(wi)] = std::move(lam);
    out.rho[std::size_t(wi)] = std::move(rho);
  }
  return out;
}

LeibnizRep rep_on_L_tensor_V(const NLieAlgebra& a, const Representation& r) {
  const int n = a.n, d = a.dim, dv = r.dim_v;
  const std::int64_t dl = binomial(d, n - 1);
  const int dim_space = d * dv;
  LeibnizRep out = LeibnizRep::zero(int(dl), dim_space);
  for (std::int64_t wi = 0; wi < dl; ++wi) {
    Tuple w = wedge_unrank(wi, n - 1, d);
    Mat lam(dim_space, dim_space), rho(dim_space, dim_space);
    Mat mu_w = r.mu_basis(w);
    for (int z = 0; z < d; ++z) {
      Tuple args = w;
      args.push_back(z);
      Vec b = a.bracket_basis(args);  // [x^1..x^{n-1}, z]
      for (int v = 0; v < dv; ++v) {
        const int col = z * dv + v;
        for (int t = 0; t < d; ++t)
          if (b[std::size_t(t)] != 0) lam.at(t * dv + v, col) += b[std::size_t(t)];
        for (int p = 0; p < dv; ++p)
          if (mu_w.at(p, v) != 0) lam.at(z * dv + p, col) += mu_w.at(p, v);
        // (z (x) v) <| x = sum_k (-1)^k x^k (x) mu(z, x drop k)(v)
        for (int k = 0; k < n - 1; ++k) {
          Rat sign = ((k + 1) % 2 == 0) ? Rat(1) : Rat(-1);
          Tuple margs;
          margs.push_back(z);
          for (int kk = 0; kk < n - 1; ++kk)
            if (kk != k) margs.push_back(w[std::size_t(kk)]);
          Mat mu_zx = r.mu_basis(margs);
          for (int p = 0; p < dv; ++p)
            if (mu_zx.at(p, v) != 0)
              rho.at(w[std::size_t(k)] * dv + p, col) += sign * mu_zx.at(p, v);
        }
      }
    }
    out.lambda[std::size_t(wi)] = std::move(lam);
    out.rho[std::size_t(wi)] = std::move(rho);
  }
  return out;
}

LeibnizRep rep_on_cochains(const NLieAlgebra& a, const Representation& r, int m) {
  if (m == 0) {
    LeibnizRep base = rep_on_Ln2_tensor_V(a, r);
    for (std::size_t i = 0; i < base.rho.size(); ++i) base.rho[i] = -base.lambda[i];
    return base;
  }
  const int n = a.n, d = a.dim, dv = r.dim_v;
  const std::int64_t dl = binomial(d, n - 1);
  LeibnizAlgebra lw = induced_leibniz(a);
  BasisDescriptor desc = standard_cochain_desc(n, d, dv, m);
  const std::int64_t dim_space = desc.total();
  LeibnizRep out = LeibnizRep::zero(int(dl), int(dim_space));
  if (dv == 0 || dim_space == 0) return out;
  const std::int64_t ntuples = dim_space / dv;

  for (std::int64_t zi = 0; zi < dl; ++zi) {
    Tuple z = wedge_unrank(zi, n - 1, d);
    Mat mu_z = r.mu_basis(z);
    Mat lam(static_cast<int>(dim_space), static_cast<int>(dim_space));
    // iterate over row argument tuples (x_1..x_{m-1}, y)
    for (std::int64_t si = 0; si < ntuples; ++si) {
      std::int64_t rest = si;
      int y = int(rest % d);
      rest /= d;
      std::vector<std::int64_t> xs(static_cast<std::size_t>(m - 1));
      for (int k = m - 2; k >= 0; --k) {
        xs[std::size_t(k)] = rest % dl;
        rest /= dl;
      }
      auto col_of = [&](const std::vector<std::int64_t>& xranks, int yy) {
        std::int64_t idx = 0;
        for (std::int64_t xr : xranks) idx = idx * dl + xr;
        return (idx * d + yy) * dv;
      };
      const std::int64_t row0 = si * dv;
      // mu(z) on the value
      for (int p = 0; p < dv; ++p)
        for (int q = 0; q < dv; ++q)
          if (mu_z.at(p, q) != 0) lam.at(int(row0) + p, int(col_of(xs, y)) + q) += mu_z.at(p, q);
      // - sum_k f(.., [z, x_k], ..)
      for (int k = 0; k < m - 1; ++k) {
        Vec bvec = lw.bracket_basis(int(zi), int(xs[std::size_t(k)]));
        if (is_zero(bvec)) continue;
        std::vector<std::int64_t> xs2 = xs;
        for (int idx = 0; idx < int(dl); ++idx) {
          if (bvec[std::size_t(idx)] == 0) continue;
          xs2[std::size_t(k)] = idx;
          std::int64_t c0 = col_of(xs2, y);
          for (int q = 0; q < dv; ++q)
            lam.at(int(row0) + q, int(c0) + q) -= bvec[std::size_t(idx)];
        }
      }
      // - f(.., [z^1..z^{n-1}, y])
      {
        Tuple args = z;
        args.push_back(y);
        Vec b = a.bracket_basis(args);
        for (int t = 0; t < d; ++t) {
          if (b[std::size_t(t)] == 0) continue;
          std::int64_t c0 = col_of(xs, t);
          for (int q = 0; q < dv; ++q) lam.at(int(row0) + q, int(c0) + q) -= b[std::size_t(t)];
        }
      }
    }
    out.rho[std::size_t(zi)] = -lam;
    out.lambda[std::size_t(zi)] = std::move(lam);
  }
  return out;
}

}  // namespace nlie
