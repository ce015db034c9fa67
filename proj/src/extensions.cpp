#include "nlie/extensions.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace nlie {

namespace {

template <typename F>
void for_each_increasing(int k, int d, F&& fn) {
  std::int64_t count = binomial(d, k);
  for (std::int64_t r = 0; r < count; ++r) fn(wedge_unrank(r, k, d));
}

}  // namespace

CheckResult is_derivation(const NLieAlgebra& a, const Mat& d) {
  if (d.rows != a.dim || d.cols != a.dim)
    throw std::invalid_argument("derivation matrix shape mismatch");
  CheckResult result;
  for_each_increasing(a.n, a.dim, [&](const Tuple& t) {
    if (result) return;
    Vec lhs = d.apply(a.bracket_basis(t));
    Vec rhs = zero_vec(static_cast<std::size_t>(a.dim));
    for (int k = 0; k < a.n; ++k) {
      Vec dk = d.apply(basis_vec(std::size_t(t[std::size_t(k)]), std::size_t(a.dim)));
      axpy(rhs, Rat(1), a.bracket_with_vec(t, std::size_t(k), dk));
    }
    if (lhs != rhs)
      result = Violation{"derivation", {t}, "lhs=" + vec_str(lhs) + " rhs=" + vec_str(rhs)};
  });
  return result;
}

std::vector<Mat> derivation_space(const NLieAlgebra& a) {
  const int d = a.dim;
  const std::int64_t nt = binomial(d, a.n);
  SparseMatrix sys(nt * d, std::int64_t(d) * d);
  std::int64_t row_block = 0;
  for_each_increasing(a.n, d, [&](const Tuple& t) {
    Vec b = a.bracket_basis(t);
    // D(b) coefficients
    for (int p = 0; p < d; ++p)
      for (int q = 0; q < d; ++q)
        if (b[std::size_t(q)] != 0)
          sys.add(row_block + p, std::int64_t(p) * d + q, b[std::size_t(q)]);
    // - sum_k [.., D(e_{t_k}), ..]
    for (int k = 0; k < a.n; ++k)
      for (int i = 0; i < d; ++i) {
        Tuple repl = t;
        repl[std::size_t(k)] = i;
        Vec br = a.bracket_basis(repl);
        for (int p = 0; p < d; ++p)
          if (br[std::size_t(p)] != 0)
            sys.add(row_block + p, std::int64_t(i) * d + t[std::size_t(k)], -br[std::size_t(p)]);
      }
    row_block += d;
  });
  std::vector<Mat> out;
  for (const Vec& v : kernel_basis(sys)) {
    Mat m(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) m.at(i, j) = v[std::size_t(i) * d + j];
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<Mat> inner_derivation_span(const NLieAlgebra& a) {
  const int d = a.dim;
  EchelonBasis span(std::size_t(d) * d);
  for_each_increasing(a.n - 1, d, [&](const Tuple& w) {
    Tuple args = w;
    args.push_back(0);
    Vec flat(std::size_t(d) * d, Rat(0));
    for (int j = 0; j < d; ++j) {
      args.back() = j;
      Vec col = a.bracket_basis(args);
      for (int i = 0; i < d; ++i) flat[std::size_t(i) * d + j] = col[std::size_t(i)];
    }
    span.insert(std::move(flat));
  });
  std::vector<Mat> out;
  for (const Vec& v : span.rows()) {
    Mat m(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) m.at(i, j) = v[std::size_t(i) * d + j];
    out.push_back(std::move(m));
  }
  return out;
}

Vec GenDer::eval_basis(const Tuple& args) const {
  assert(int(args.size()) == n - 1);
  auto norm = sort_with_sign(args);
  if (!norm) return zero_vec(static_cast<std::size_t>(dim));
  auto it = d.find(norm->first);
  if (it == d.end()) return zero_vec(static_cast<std::size_t>(dim));
  Vec out = it->second;
  if (norm->second < 0)
    for (Rat& x : out) x = -x;
  return out;
}

Vec GenDer::eval_with_vec(Tuple args, std::size_t slot, const Vec& v) const {
  Vec out = zero_vec(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    if (v[std::size_t(i)] == 0) continue;
    args[slot] = i;
    axpy(out, v[std::size_t(i)], eval_basis(args));
  }
  return out;
}

Vec GenDer::coords() const {
  const std::int64_t dl = binomial(dim, n - 1);
  Vec v(std::size_t(dl) * std::size_t(dim), Rat(0));
  for (const auto& [w, val] : d) {
    std::int64_t wr = wedge_rank(w, dim);
    for (int i = 0; i < dim; ++i) v[std::size_t(wr) * std::size_t(dim) + std::size_t(i)] = val[std::size_t(i)];
  }
  return v;
}

GenDer GenDer::from_coords(int n, int dim, const Vec& coords) {
  GenDer g;
  g.n = n;
  g.dim = dim;
  const std::int64_t dl = binomial(dim, n - 1);
  for (std::int64_t wr = 0; wr < dl; ++wr) {
    Vec val(static_cast<std::size_t>(dim));
    bool nonzero = false;
    for (int i = 0; i < dim; ++i) {
      val[std::size_t(i)] = coords[std::size_t(wr) * std::size_t(dim) + std::size_t(i)];
      if (val[std::size_t(i)] != 0) nonzero = true;
    }
    if (nonzero) g.d[wedge_unrank(wr, n - 1, dim)] = std::move(val);
  }
  return g;
}

GenDer inner_gen_der(const NLieAlgebra& a, int y) {
  GenDer g;
  g.n = a.n;
  g.dim = a.dim;
  for_each_increasing(a.n - 1, a.dim, [&](const Tuple& w) {
    Tuple args;
    args.push_back(y);
    args.insert(args.end(), w.begin(), w.end());
    Vec v = a.bracket_basis(args);
    if (!is_zero(v)) g.d[w] = std::move(v);
  });
  return g;
}

namespace {

Vec axiom1_residual(const NLieAlgebra& a, const GenDer& g, const Tuple& z, const Tuple& w) {
  Tuple first = z;
  first.push_back(0);
  Vec lhs = g.eval_with_vec(first, std::size_t(a.n - 2), a.bracket_basis(w));
  Vec rhs = zero_vec(static_cast<std::size_t>(a.dim));
  for (int k = 0; k < a.n; ++k) {
    Tuple inner = z;
    inner.push_back(w[std::size_t(k)]);
    axpy(rhs, Rat(1), a.bracket_with_vec(w, std::size_t(k), g.eval_basis(inner)));
  }
  return lhs - rhs;
}

Vec axiom2_residual(const NLieAlgebra& a, const GenDer& g, const Tuple& u, const Tuple& w) {
  Tuple outer = u;
  outer.push_back(0);
  Vec lhs = a.bracket_with_vec(outer, std::size_t(a.n - 1), g.eval_basis(w));
  Tuple outer2;
  outer2.push_back(0);
  outer2.insert(outer2.end(), w.begin(), w.end());
  Vec second = a.bracket_with_vec(outer2, 0, g.eval_basis(u));
  Rat sgn = (a.n % 2 == 0) ? Rat(1) : Rat(-1);
  axpy(lhs, sgn, second);
  Vec rhs = zero_vec(static_cast<std::size_t>(a.dim));
  for (int k = 0; k < a.n - 1; ++k) {
    Tuple inner = u;
    inner.push_back(w[std::size_t(k)]);
    axpy(rhs, Rat(1), g.eval_with_vec(w, std::size_t(k), a.bracket_basis(inner)));
  }
  return lhs - rhs;
}

Vec axiom3_residual(const NLieAlgebra& a, const GenDer& g, const Tuple& z, const Tuple& w) {
  Tuple first = z;
  first.push_back(0);
  Vec lhs = g.eval_with_vec(first, std::size_t(a.n - 2), g.eval_basis(w));
  Vec rhs = zero_vec(static_cast<std::size_t>(a.dim));
  for (int k = 0; k < a.n - 1; ++k) {
    Tuple inner = z;
    inner.push_back(w[std::size_t(k)]);
    axpy(rhs, Rat(1), g.eval_with_vec(w, std::size_t(k), g.eval_basis(inner)));
  }
  return lhs - rhs;
}

}  // namespace

GenDerReport is_generalized_derivation(const NLieAlgebra& a, const GenDer& g) {
  GenDerReport rep;
  for_each_increasing(a.n - 2, a.dim, [&](const Tuple& z) {
    if (rep.axiom1) return;
    for_each_increasing(a.n, a.dim, [&](const Tuple& w) {
      if (rep.axiom1) return;
      Vec res = axiom1_residual(a, g, z, w);
      if (!is_zero(res))
        rep.axiom1 = Violation{"gen-der-axiom-I", {z, w}, "residual=" + vec_str(res)};
    });
  });
  for_each_increasing(a.n - 1, a.dim, [&](const Tuple& u) {
    if (rep.axiom2) return;
    for_each_increasing(a.n - 1, a.dim, [&](const Tuple& w) {
      if (rep.axiom2) return;
      Vec res = axiom2_residual(a, g, u, w);
      if (!is_zero(res))
        rep.axiom2 = Violation{"gen-der-axiom-II", {u, w}, "residual=" + vec_str(res)};
    });
  });
  for_each_increasing(a.n - 2, a.dim, [&](const Tuple& z) {
    if (rep.axiom3) return;
    for_each_increasing(a.n - 1, a.dim, [&](const Tuple& w) {
      if (rep.axiom3) return;
      Vec res = axiom3_residual(a, g, z, w);
      if (!is_zero(res))
        rep.axiom3 = Violation{"gen-der-axiom-III", {z, w}, "residual=" + vec_str(res)};
    });
  });
  return rep;
}

Representation gl_coefficients(const NLieAlgebra& a) {
  return hom_representation(adjoint_representation(a), a.dim);
}

Cochain d_sharp(const NLieAlgebra& a, const GenDer& g) {
  const int d = a.dim;
  const std::int64_t dz = binomial(d, a.n - 2);
  Cochain c;
  c.kind = ComplexKind::alternate;
  c.degree = 1;
  c.desc = alternate_cochain_desc(a.n, d, d * d, 1);
  c.coeffs = zero_vec(std::size_t(dz) * d * d);
  for (std::int64_t wi = 0; wi < dz; ++wi) {
    Tuple w = wedge_unrank(wi, a.n - 2, d);
    Tuple args = w;
    args.push_back(0);
    for (int col = 0; col < d; ++col) {
      args.back() = col;
      Vec v = g.eval_basis(args);
      for (int row = 0; row < d; ++row)
        c.coeffs[std::size_t(wi) * d * d + std::size_t(row) * d + std::size_t(col)] =
            v[std::size_t(row)];
    }
  }
  return c;
}

CheckResult gen_der_cocycle_check(const NLieAlgebra& a, const GenDer& g) {
  // precondition: axiom II
  CheckResult ax2;
  for_each_increasing(a.n - 1, a.dim, [&](const Tuple& u) {
    if (ax2) return;
    for_each_increasing(a.n - 1, a.dim, [&](const Tuple& w) {
      if (ax2) return;
      Vec res = axiom2_residual(a, g, u, w);
      if (!is_zero(res))
        ax2 = Violation{"gen-der-axiom-II (precondition)", {u, w}, "residual=" + vec_str(res)};
    });
  });
  if (ax2) return ax2;
  SparseMatrix delta1 = delta_alternate(a, gl_coefficients(a), 1);
  Vec image = delta1.apply(d_sharp(a, g).coeffs);
  for (std::size_t i = 0; i < image.size(); ++i)
    if (image[i] != 0) {
      std::ostringstream os;
      os << "delta(D#) nonzero at coordinate " << i << ": " << rat_str(image[i]);
      return Violation{"gen-der-cocycle", {}, os.str()};
    }
  return std::nullopt;
}

NLieAlgebra gen_der_extension(const NLieAlgebra& a, const GenDer& g) {
  NLieAlgebra e;
  e.n = a.n;
  e.dim = a.dim + 1;
  const int last = a.dim;
  for (const auto& [t, v] : a.c) {
    Vec val = zero_vec(static_cast<std::size_t>(e.dim));
    for (int i = 0; i < a.dim; ++i) val[std::size_t(i)] = v[std::size_t(i)];
    e.c[t] = std::move(val);
  }
  Rat sgn = (a.n % 2 == 0) ? Rat(-1) : Rat(1);  // (-1)^{n+1}
  for_each_increasing(a.n - 1, a.dim, [&](const Tuple& w) {
    Vec dv = g.eval_basis(w);
    if (is_zero(dv)) return;
    Tuple t = w;
    t.push_back(last);
    Vec val = zero_vec(static_cast<std::size_t>(e.dim));
    for (int i = 0; i < a.dim; ++i) val[std::size_t(i)] = sgn * dv[std::size_t(i)];
    e.c[t] = std::move(val);
  });
  return e;
}

NLieAlgebra abelian_extension(const NLieAlgebra& a, const Representation& r, const Vec& f) {
  const int n = a.n, d = a.dim, dv = r.dim_v;
  BasisDescriptor f_desc = standard_cochain_desc(n, d, dv, 2);
  if (std::int64_t(f.size()) != f_desc.total())
    throw std::invalid_argument("abelian_extension: cochain has wrong degree-2 shape");
  NLieAlgebra e;
  e.n = n;
  e.dim = dv + d;
  Rat sgn = (n % 2 == 0) ? Rat(-1) : Rat(1);  // (-1)^{n+1}
  for_each_increasing(n, e.dim, [&](const Tuple& t) {
    int nv = 0;
    while (nv < n && t[std::size_t(nv)] < dv) ++nv;
    Vec val = zero_vec(static_cast<std::size_t>(e.dim));
    if (nv == 0) {
      Tuple lt(t);
      for (int& i : lt) i -= dv;
      Vec b = a.bracket_basis(lt);
      for (int i = 0; i < d; ++i) val[std::size_t(dv + i)] = sgn * b[std::size_t(i)];
      // f(x_1 ^ ... ^ x_{n-1}, x_n): wedge = first n-1, final = last
      Tuple w(lt.begin(), lt.end() - 1);
      std::int64_t base = (wedge_rank(w, d) * d + lt.back()) * dv;
      for (int p = 0; p < dv; ++p) val[std::size_t(p)] += sgn * f[std::size_t(base + p)];
    } else if (nv == 1) {
      Tuple lt(t.begin() + 1, t.end());
      for (int& i : lt) i -= dv;
      Mat m = r.mu_basis(lt);
      for (int i = 0; i < dv; ++i) val[std::size_t(i)] = m.at(i, t[0]);
    }
    if (!is_zero(val)) e.c[t] = std::move(val);
  });
  return e;
}

std::optional<Vec> extensions_equivalent(const NLieAlgebra& a, const Representation& r,
                                         const Vec& f, const Vec& g) {
  SparseMatrix d2 = delta_standard(a, r, 2);
  if (!is_zero(d2.apply(f)) || !is_zero(d2.apply(g)))
    throw std::invalid_argument("extensions_equivalent: inputs must be 2-cocycles");
  SparseMatrix d1 = delta_standard(a, r, 1);
  auto h = solve_in_image(d1, f - g);
  if (!h) return std::nullopt;
  // verify H(v + x) = v + h(x) + x intertwines the two brackets
  NLieAlgebra ef = abelian_extension(a, r, f);
  NLieAlgebra eg = abelian_extension(a, r, g);
  const int dv = r.dim_v, dt = ef.dim;
  std::vector<Vec> h_of(static_cast<std::size_t>(dt));
  for (int i = 0; i < dt; ++i) {
    Vec img = basis_vec(std::size_t(i), std::size_t(dt));
    if (i >= dv) {
      int j = i - dv;
      for (int p = 0; p < dv; ++p) img[std::size_t(p)] += (*h)[std::size_t(j) * dv + p];
    }
    h_of[std::size_t(i)] = std::move(img);
  }
  std::int64_t nt = binomial(dt, a.n);
  for (std::int64_t ti = 0; ti < nt; ++ti) {
    Tuple t = wedge_unrank(ti, a.n, dt);
    Vec lhs = ef.bracket_basis(t);
    // H(lhs)
    Vec hl = zero_vec(static_cast<std::size_t>(dt));
    for (int i = 0; i < dt; ++i)
      if (lhs[std::size_t(i)] != 0) axpy(hl, lhs[std::size_t(i)], h_of[std::size_t(i)]);
    std::vector<Vec> args;
    for (int k = 0; k < a.n; ++k) args.push_back(h_of[std::size_t(t[std::size_t(k)])]);
    Vec rhs = eg.bracket(args);
    if (hl != rhs)
      throw std::runtime_error("extensions_equivalent: solved h fails to intertwine");
  }
  return h;
}

CheckResult infinitesimal_deformation_check(const NLieAlgebra& a, const Vec& eta) {
  SparseMatrix d2 = delta_standard(a, adjoint_representation(a), 2);
  Vec img = d2.apply(eta);
  for (std::size_t i = 0; i < img.size(); ++i)
    if (img[i] != 0) {
      std::ostringstream os;
      os << "delta(eta) nonzero at coordinate " << i << ": " << rat_str(img[i]);
      return Violation{"deformation-cocycle", {}, os.str()};
    }
  return std::nullopt;
}

std::optional<Vec> deformations_equivalent(const NLieAlgebra& a, const Vec& eta1,
                                           const Vec& eta2) {
  SparseMatrix d1 = delta_standard(a, adjoint_representation(a), 1);
  return solve_in_image(d1, eta1 - eta2);
}

CheckResult leibniz_derivation_lift_check(const NLieAlgebra& a, const GenDer& g) {
  LeibnizAlgebra lw = induced_leibniz(a);
  LeibnizRep fr = fundamental_rep(a);
  LeibnizAlgebra s = semidirect_sum_leibniz(lw, fr);  // L first, then wedges
  const int d = a.dim, dl = lw.dim, dt = s.dim;
  // lift: D(y + x) = D(x)
  std::vector<Vec> lift(std::size_t(dt), zero_vec(static_cast<std::size_t>(dt)));
  for (int wi = 0; wi < dl; ++wi) {
    Vec v = g.eval_basis(wedge_unrank(wi, a.n - 1, d));
    for (int i = 0; i < d; ++i) lift[std::size_t(d + wi)][std::size_t(i)] = v[std::size_t(i)];
  }
  auto apply_lift = [&](const Vec& x) {
    Vec out = zero_vec(static_cast<std::size_t>(dt));
    for (int i = 0; i < dt; ++i)
      if (x[std::size_t(i)] != 0) axpy(out, x[std::size_t(i)], lift[std::size_t(i)]);
    return out;
  };
  for (int x = 0; x < dt; ++x)
    for (int y = 0; y < dt; ++y) {
      Vec lhs = apply_lift(s.bracket_basis(x, y));
      Vec rhs = s.bracket(lift[std::size_t(x)], basis_vec(std::size_t(y), std::size_t(dt))) +
                s.bracket(basis_vec(std::size_t(x), std::size_t(dt)), lift[std::size_t(y)]);
      if (lhs != rhs)
        return Violation{"leibniz-derivation-lift", {{x, y}},
                         "lhs=" + vec_str(lhs) + " rhs=" + vec_str(rhs)};
    }
  return std::nullopt;
}

std::vector<GenDer> gen_der_family_I_II(const NLieAlgebra& a) {
  const int n = a.n, d = a.dim;
  const std::int64_t dl = binomial(d, n - 1);
  const std::int64_t nvars = dl * d;
  // rows: axiom I over (n-2)-tuples x n-tuples, axiom II over pairs of
  // (n-1)-tuples; columns: basis candidates D = e_{(w,i)}
  std::vector<std::pair<Tuple, Tuple>> combos1, combos2;
  for_each_increasing(n - 2, d, [&](const Tuple& z) {
    for_each_increasing(n, d, [&](const Tuple& w) { combos1.emplace_back(z, w); });
  });
  for_each_increasing(n - 1, d, [&](const Tuple& u) {
    for_each_increasing(n - 1, d, [&](const Tuple& w) { combos2.emplace_back(u, w); });
  });
  const std::int64_t nrows = std::int64_t(combos1.size() + combos2.size()) * d;
  SparseMatrix sys(nrows, nvars);
  for (std::int64_t var = 0; var < nvars; ++var) {
    Vec unit(std::size_t(nvars), Rat(0));
    unit[std::size_t(var)] = 1;
    GenDer basis = GenDer::from_coords(n, d, unit);
    std::int64_t row = 0;
    for (const auto& [z, w] : combos1) {
      Vec res = axiom1_residual(a, basis, z, w);
      for (int p = 0; p < d; ++p)
        if (res[std::size_t(p)] != 0) sys.add(row + p, var, res[std::size_t(p)]);
      row += d;
    }
    for (const auto& [u, w] : combos2) {
      Vec res = axiom2_residual(a, basis, u, w);
      for (int p = 0; p < d; ++p)
        if (res[std::size_t(p)] != 0) sys.add(row + p, var, res[std::size_t(p)]);
      row += d;
    }
  }
  std::vector<GenDer> out;
  for (const Vec& v : kernel_basis(sys)) out.push_back(GenDer::from_coords(n, d, v));
  return out;
}

}  // namespace nlie
