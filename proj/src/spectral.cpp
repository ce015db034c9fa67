#include "nlie/spectral.hpp"

#include <algorithm>
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

std::vector<bool> member_mask(int dim, const std::vector<int>& indices) {
  std::vector<bool> mask(std::size_t(dim), false);
  for (int i : indices) mask[std::size_t(i)] = true;
  return mask;
}

// #K among the flattened arguments of a degree-m standard cochain coordinate
int k_arg_count(const NLieAlgebra& a, int dim_v, const std::vector<bool>& in_k, int m,
                std::int64_t coord) {
  const int n = a.n, d = a.dim;
  const std::int64_t dl = binomial(d, n - 1);
  std::int64_t rest = coord / dim_v;
  int y = int(rest % d);
  rest /= d;
  int cnt = in_k[std::size_t(y)] ? 1 : 0;
  for (int s = 0; s < m - 1; ++s) {
    Tuple w = wedge_unrank(rest % dl, n - 1, d);
    rest /= dl;
    for (int c : w)
      if (in_k[std::size_t(c)]) ++cnt;
  }
  return cnt;
}

}  // namespace

CheckResult validate_subalgebra(const NLieAlgebra& a, const SubalgebraSpec& k) {
  for (int i : k.indices)
    if (i < 0 || i >= a.dim)
      return Violation{"subalgebra-spec", {}, "basis index out of range"};
  if (!strictly_increasing(k.indices) && k.indices.size() > 1)
    return Violation{"subalgebra-spec", {}, "indices must be strictly increasing"};
  std::vector<bool> in_k = member_mask(a.dim, k.indices);
  CheckResult result;
  for (const auto& [t, v] : a.c) {
    int nk = 0;
    for (int i : t)
      if (in_k[std::size_t(i)]) ++nk;
    bool must_close = k.ideal ? (nk >= 1) : (nk == int(t.size()));
    if (!must_close) continue;
    for (int i = 0; i < a.dim; ++i)
      if (v[std::size_t(i)] != 0 && !in_k[std::size_t(i)]) {
        result = Violation{k.ideal ? "ideal-closure" : "subalgebra-closure",
                           {t},
                           "bracket leaves K: " + vec_str(v)};
        return result;
      }
  }
  return result;
}

int filtration_level(const NLieAlgebra& a, const SubalgebraSpec& k, int m, const Vec& f) {
  if (is_zero(f)) return m + 1;
  if (m == 0) return 0;
  const int n = a.n;
  std::vector<bool> in_k = member_mask(a.dim, k.indices);
  BasisDescriptor desc = standard_cochain_desc(n, a.dim, 1, m);
  const int dim_v = int(f.size() / std::size_t(desc.total()));
  int level = m + 1;
  for (std::size_t c = 0; c < f.size(); ++c) {
    if (f[c] == 0) continue;
    int cnt = k_arg_count(a, dim_v, in_k, m, std::int64_t(c));
    int lvl = m - (cnt + n - 2) / (n - 1);  // m - ceil(cnt / (n-1))
    level = std::min(level, lvl);
  }
  return level;
}

std::vector<std::int64_t> band_coords(const NLieAlgebra& a, int dim_v,
                                      const SubalgebraSpec& k, int m, int j) {
  const int n = a.n, i = m - j;
  BasisDescriptor desc = standard_cochain_desc(n, a.dim, dim_v, m);
  std::vector<std::int64_t> out;
  if (i < 0 || j < 0) return out;
  std::vector<bool> in_k = member_mask(a.dim, k.indices);
  for (std::int64_t c = 0; c < desc.total(); ++c) {
    int cnt = (m == 0) ? 0 : k_arg_count(a, dim_v, in_k, m, c);
    if (cnt <= std::int64_t(i) * (n - 1) && cnt > std::int64_t(i - 1) * (n - 1))
      out.push_back(c);
  }
  return out;
}

namespace {

// K_{n-1} as a Leibniz algebra on the pure-K wedges, K-relative indexing.
struct KWedgeAlgebra {
  LeibnizAlgebra lb;
  std::vector<Tuple> wedges;  // actual L index tuples, rank order
};

KWedgeAlgebra k_wedge_algebra(const NLieAlgebra& a, const std::vector<int>& kidx) {
  const int n = a.n;
  const int dk = int(kidx.size());
  KWedgeAlgebra out;
  const std::int64_t dl = binomial(dk, n - 1);
  out.lb.dim = int(dl);
  std::map<int, int> pos;  // L index -> K position
  for (int p = 0; p < dk; ++p) pos[kidx[std::size_t(p)]] = p;
  for (std::int64_t wi = 0; wi < dl; ++wi) {
    Tuple rel = wedge_unrank(wi, n - 1, dk);
    Tuple actual(rel.size());
    for (std::size_t t = 0; t < rel.size(); ++t) actual[t] = kidx[std::size_t(rel[t])];
    out.wedges.push_back(actual);
  }
  for (std::int64_t i = 0; i < dl; ++i)
    for (std::int64_t j = 0; j < dl; ++j) {
      Vec val = zero_vec(static_cast<std::size_t>(dl));
      for (int kslot = 0; kslot < n - 1; ++kslot) {
        Tuple args = out.wedges[std::size_t(i)];
        args.push_back(out.wedges[std::size_t(j)][std::size_t(kslot)]);
        Vec b = a.bracket_basis(args);
        for (int t = 0; t < a.dim; ++t) {
          if (b[std::size_t(t)] == 0) continue;
          auto it = pos.find(t);
          if (it == pos.end())
            throw std::runtime_error("k_wedge_algebra: bracket escapes K");
          Tuple repl(out.wedges[std::size_t(j)].size());
          for (std::size_t s = 0; s < repl.size(); ++s)
            repl[s] = pos.at(out.wedges[std::size_t(j)][s]);
          repl[std::size_t(kslot)] = it->second;
          auto norm = sort_with_sign(repl);
          if (!norm) continue;
          val[std::size_t(wedge_rank(norm->first, dk))] += b[std::size_t(t)] * norm->second;
        }
      }
      if (!is_zero(val)) out.lb.br[{int(i), int(j)}] = std::move(val);
    }
  return out;
}

// Quotient-cochain action: the symmetric cochain action of a pure-K wedge z
// on C^j(L/K, V), arguments projected to the complement M componentwise.
LeibnizRep quotient_cochain_rep(const NLieAlgebra& a, const Representation& r,
                                const KWedgeAlgebra& kw, const std::vector<int>& midx,
                                int j) {
  const int n = a.n, dv = r.dim_v;
  const int dm = int(midx.size());
  std::map<int, int> mpos;
  for (int p = 0; p < dm; ++p) mpos[midx[std::size_t(p)]] = p;
  const std::int64_t dml = binomial(dm, n - 1);

  BasisDescriptor desc = standard_cochain_desc(n, dm, dv, j);
  const std::int64_t dim_space = desc.total();
  LeibnizRep out = LeibnizRep::zero(kw.lb.dim, int(dim_space));
  if (dv == 0 || dim_space == 0) return out;

  // projected bracket of the K-wedge z with a single M basis vector
  auto proj_bracket = [&](const Tuple& z_actual, int m_actual) {
    Tuple args = z_actual;
    args.push_back(m_actual);
    Vec b = a.bracket_basis(args);
    std::vector<std::pair<int, Rat>> out_m;  // (M position, coeff)
    for (int t = 0; t < a.dim; ++t) {
      if (b[std::size_t(t)] == 0) continue;
      auto it = mpos.find(t);
      if (it != mpos.end()) out_m.emplace_back(it->second, b[std::size_t(t)]);
    }
    return out_m;
  };

  for (int zi = 0; zi < kw.lb.dim; ++zi) {
    const Tuple& za = kw.wedges[std::size_t(zi)];
    Mat mu_z = r.mu_basis(za);
    Mat lam(static_cast<int>(dim_space), static_cast<int>(dim_space));

    if (j == 0) {
      // Lambda^{n-2} M (x) V with the wedge-slot action
      const std::int64_t dz = binomial(dm, n - 2);
      for (std::int64_t wi = 0; wi < dz; ++wi) {
        Tuple wrel = wedge_unrank(wi, n - 2, dm);
        for (int v = 0; v < dv; ++v) {
          const int col = int(wi) * dv + v;
          for (int kslot = 0; kslot < n - 2; ++kslot) {
            for (const auto& [mp, coef] : proj_bracket(za, midx[std::size_t(wrel[std::size_t(kslot)])])) {
              Tuple repl = wrel;
              repl[std::size_t(kslot)] = mp;
              auto norm = sort_with_sign(repl);
              if (!norm) continue;
              lam.at(int(wedge_rank(norm->first, dm)) * dv + v, col) += coef * norm->second;
            }
          }
          for (int p = 0; p < dv; ++p)
            if (mu_z.at(p, v) != 0) lam.at(int(wi) * dv + p, col) += mu_z.at(p, v);
        }
      }
    } else {
      const std::int64_t ntuples = dim_space / dv;
      for (std::int64_t si = 0; si < ntuples; ++si) {
        std::int64_t rest = si;
        int y = int(rest % dm);
        rest /= dm;
        std::vector<std::int64_t> xs(static_cast<std::size_t>(j - 1));
        for (int s = j - 2; s >= 0; --s) {
          xs[std::size_t(s)] = rest % dml;
          rest /= dml;
        }
        auto col_of = [&](const std::vector<std::int64_t>& xranks, int yy) {
          std::int64_t idx = 0;
          for (std::int64_t xr : xranks) idx = idx * dml + xr;
          return (idx * dm + yy) * dv;
        };
        const std::int64_t row0 = si * dv;
        // mu(z) on the value
        for (int p = 0; p < dv; ++p)
          for (int q = 0; q < dv; ++q)
            if (mu_z.at(p, q) != 0)
              lam.at(int(row0) + p, int(col_of(xs, y)) + q) += mu_z.at(p, q);
        // - sum_k f(.., pi[z, x_k], ..): wedge slots, componentwise
        for (int kslot = 0; kslot < j - 1; ++kslot) {
          Tuple xw = wedge_unrank(xs[std::size_t(kslot)], n - 1, dm);
          for (int comp = 0; comp < n - 1; ++comp) {
            for (const auto& [mp, coef] : proj_bracket(za, midx[std::size_t(xw[std::size_t(comp)])])) {
              Tuple repl = xw;
              repl[std::size_t(comp)] = mp;
              auto norm = sort_with_sign(repl);
              if (!norm) continue;
              std::vector<std::int64_t> xs2 = xs;
              xs2[std::size_t(kslot)] = wedge_rank(norm->first, dm);
              std::int64_t c0 = col_of(xs2, y);
              for (int q = 0; q < dv; ++q)
                lam.at(int(row0) + q, int(c0) + q) -= coef * norm->second;
            }
          }
        }
        // - f(.., pi[z, y])
        for (const auto& [mp, coef] : proj_bracket(za, midx[std::size_t(y)])) {
          std::int64_t c0 = col_of(xs, mp);
          for (int q = 0; q < dv; ++q) lam.at(int(row0) + q, int(c0) + q) -= coef;
        }
      }
    }
    out.rho[std::size_t(zi)] = -lam;
    out.lambda[std::size_t(zi)] = std::move(lam);
  }
  return out;
}

struct LeibnizCohomology {
  std::int64_t dim_space = 0, dim_z = 0, dim_b = 0, dim_h = 0;
  std::vector<Vec> representatives;
  std::vector<Vec> image_rows;  // echelon basis of the coboundaries
  SparseMatrix d_here;          // differential at this degree
};

LeibnizCohomology leibniz_cohomology(const LeibnizAlgebra& lb, const LeibnizRep& rep,
                                     int i) {
  LeibnizCohomology out;
  out.d_here = leibniz_differential(lb, rep, i);
  out.dim_space = out.d_here.cols();
  std::vector<Vec> z = kernel_basis(out.d_here);
  out.dim_z = std::int64_t(z.size());
  EchelonBasis image(static_cast<std::size_t>(out.dim_space));
  if (i >= 1) {
    SparseMatrix prev = leibniz_differential(lb, rep, i - 1);
    for (std::int64_t c = 0; c < prev.cols(); ++c) {
      Vec col(std::size_t(prev.rows()), Rat(0));
      for (const auto& [rr, v] : prev.column(c)) col[std::size_t(rr)] = v;
      image.insert(std::move(col));
    }
  }
  out.dim_b = image.rank();
  out.dim_h = out.dim_z - out.dim_b;
  out.image_rows = image.rows();
  EchelonBasis seen(static_cast<std::size_t>(out.dim_space));
  for (const Vec& row : out.image_rows) seen.insert(row);
  for (const Vec& zz : z) {
    Vec red = seen.reduce(zz);
    if (is_zero(red)) continue;
    std::size_t p = 0;
    while (red[p] == 0) ++p;
    Rat piv = red[p];
    for (Rat& x : red) x /= piv;
    out.representatives.push_back(red);
    seen.insert(std::move(red));
  }
  return out;
}

}  // namespace

E1Result e1_page(const NLieAlgebra& a, const Representation& r, const SubalgebraSpec& k,
                 int degree_bound) {
  if (auto bad = validate_subalgebra(a, k))
    throw std::invalid_argument("e1_page: " + bad->check + ": " + bad->detail);
  E1Result result;
  result.page.r = 1;
  const int dv = r.dim_v;

  // route (a): associated graded. delta_0 on band (j,i) is the full
  // differential restricted to the band and projected to band (j,i+1).
  std::vector<SparseMatrix> deltas;
  for (int m = 0; m <= degree_bound; ++m) deltas.push_back(delta_standard(a, r, m));
  auto graded_delta = [&](int j, int i) -> SparseMatrix {
    int m = i + j;
    std::vector<std::int64_t> dom = band_coords(a, dv, k, m, j);
    std::vector<std::int64_t> cod = band_coords(a, dv, k, m + 1, j);
    return deltas[std::size_t(m)].select(cod, dom);
  };

  // route (b): HL^i(K_{n-1}, C^j(L/K, V))
  KWedgeAlgebra kw = k_wedge_algebra(a, k.indices);
  std::vector<int> midx;
  {
    std::vector<bool> in_k = member_mask(a.dim, k.indices);
    for (int i = 0; i < a.dim; ++i)
      if (!in_k[std::size_t(i)]) midx.push_back(i);
  }

  for (int j = 0; j <= degree_bound; ++j) {
    LeibnizRep coeff = quotient_cochain_rep(a, r, kw, midx, j);
    std::vector<SparseMatrix> dls;
    for (int i = 0; j + i <= degree_bound; ++i)
      dls.push_back(leibniz_differential(kw.lb, coeff, i));
    for (int i = 0; j + i <= degree_bound; ++i) {
      // graded dimension
      SparseMatrix d_here = graded_delta(j, i);
      std::int64_t z = d_here.cols() - rank(d_here);
      std::int64_t b = 0;
      if (i >= 1) b = rank(graded_delta(j, i - 1));
      std::int64_t dim_graded = z - b;
      // Leibniz dimension
      std::int64_t zl = dls[std::size_t(i)].cols() - rank(dls[std::size_t(i)]);
      std::int64_t bl = (i >= 1) ? rank(dls[std::size_t(i - 1)]) : 0;
      std::int64_t dim_leib = zl - bl;

      result.page.dims[{j, i}] = dim_graded;
      result.routes[{j, i}] = {dim_graded, dim_leib};
      if (dim_graded != dim_leib) {
        result.agree = false;
        std::ostringstream os;
        os << "E1 mismatch at (j,i)=(" << j << "," << i << "): graded " << dim_graded
           << " vs Leibniz " << dim_leib;
        result.page.notes.push_back(os.str());
      }
    }
  }
  return result;
}

E2Result e2_page(const NLieAlgebra& a, const Representation& r, const SubalgebraSpec& k,
                 int degree_bound) {
  E2Result result;
  result.page.r = 2;
  SubalgebraSpec as_ideal = k;
  as_ideal.ideal = true;
  if (auto bad = validate_subalgebra(a, as_ideal)) {
    result.hypothesis = bad;
    return result;
  }
  std::vector<bool> in_k = member_mask(a.dim, k.indices);
  // commuting hypothesis: mixed structure constants vanish
  for (const auto& [t, v] : a.c) {
    int nk = 0;
    for (int i : t)
      if (in_k[std::size_t(i)]) ++nk;
    if (nk != 0 && nk != int(t.size()) && !is_zero(v)) {
      result.hypothesis = Violation{"commuting-ideal", {t}, "mixed bracket nonzero"};
      return result;
    }
  }
  // matching vanishing condition on mu
  const int n = a.n;
  CheckResult mu_bad;
  for_each_increasing(n - 1, a.dim, [&](const Tuple& w) {
    if (mu_bad) return;
    int nk = 0;
    for (int i : w)
      if (in_k[std::size_t(i)]) ++nk;
    if (nk != 0 && nk != n - 1 && !r.mu_basis(w).is_zero())
      mu_bad = Violation{"commuting-ideal-mu", {w}, "mixed mu nonzero"};
  });
  if (mu_bad) {
    result.hypothesis = mu_bad;
    return result;
  }

  std::vector<int> midx;
  for (int i = 0; i < a.dim; ++i)
    if (!in_k[std::size_t(i)]) midx.push_back(i);
  const int dm = int(midx.size());
  std::map<int, int> mpos;
  for (int p = 0; p < dm; ++p) mpos[midx[std::size_t(p)]] = p;

  // quotient algebra L/K on the complement coordinates
  NLieAlgebra q;
  q.n = n;
  q.dim = dm;
  for (const auto& [t, v] : a.c) {
    bool all_m = true;
    for (int i : t)
      if (in_k[std::size_t(i)]) all_m = false;
    if (!all_m) continue;
    Tuple rel(t.size());
    for (std::size_t s = 0; s < t.size(); ++s) rel[s] = mpos.at(t[s]);
    Vec val = zero_vec(static_cast<std::size_t>(dm));
    for (int i = 0; i < a.dim; ++i)
      if (v[std::size_t(i)] != 0 && !in_k[std::size_t(i)]) val[std::size_t(mpos.at(i))] = v[std::size_t(i)];
    if (!is_zero(val)) q.c[rel] = std::move(val);
  }

  // V as a symmetric representation of K_{n-1}
  KWedgeAlgebra kw = k_wedge_algebra(a, k.indices);
  LeibnizRep v_rep = LeibnizRep::zero(kw.lb.dim, r.dim_v);
  for (int wi = 0; wi < kw.lb.dim; ++wi) {
    Mat m = r.mu_basis(kw.wedges[std::size_t(wi)]);
    v_rep.lambda[std::size_t(wi)] = m;
    v_rep.rho[std::size_t(wi)] = -m;
  }

  const std::int64_t dql = binomial(dm, n - 1);

  for (int i = 0; i <= degree_bound; ++i) {
    LeibnizCohomology hl = leibniz_cohomology(kw.lb, v_rep, i);
    const std::int64_t h = hl.dim_h;

    // eta action of a wedge z (any-ambient) on CL^i(K_{n-1}, V):
    // (eta(z)f)(x_1..x_i) = mu(z) f(x_1..x_i) - sum_k f(.., [z,x_k]_K, ..)
    auto eta_matrix = [&](const Tuple& z_actual) {
      const std::int64_t sp = hl.dim_space;
      Mat eta(static_cast<int>(sp), static_cast<int>(sp));
      Mat mu_z = r.mu_basis(z_actual);
      const int dv = r.dim_v, dkl = kw.lb.dim;
      const std::int64_t ntuples = (sp == 0 || dv == 0) ? 0 : sp / dv;
      for (std::int64_t si = 0; si < ntuples; ++si) {
        std::int64_t rest = si;
        std::vector<int> xs(static_cast<std::size_t>(i));
        for (int s = i - 1; s >= 0; --s) {
          xs[std::size_t(s)] = int(rest % dkl);
          rest /= dkl;
        }
        auto col_of = [&](const std::vector<int>& args) {
          std::int64_t idx = 0;
          for (int xr : args) idx = idx * dkl + xr;
          return idx * dv;
        };
        const std::int64_t row0 = si * dv;
        for (int p = 0; p < dv; ++p)
          for (int qq = 0; qq < dv; ++qq)
            if (mu_z.at(p, qq) != 0)
              eta.at(int(row0) + p, int(col_of(xs)) + qq) += mu_z.at(p, qq);
        for (int kslot = 0; kslot < i; ++kslot) {
          // [z, x_k]: bracket each component of x_k with z, keep K part
          const Tuple& xw = kw.wedges[std::size_t(xs[std::size_t(kslot)])];
          for (int comp = 0; comp < n - 1; ++comp) {
            Tuple args = z_actual;
            args.push_back(xw[std::size_t(comp)]);
            Vec b = a.bracket_basis(args);
            for (int t = 0; t < a.dim; ++t) {
              if (b[std::size_t(t)] == 0 || !in_k[std::size_t(t)]) continue;
              Tuple repl = xw;
              repl[std::size_t(comp)] = t;
              auto norm = sort_with_sign(repl);
              if (!norm) continue;
              // re-rank within K
              Tuple rel(norm->first.size());
              bool ok = true;
              for (std::size_t s = 0; s < rel.size(); ++s) {
                if (!in_k[std::size_t(norm->first[s])]) { ok = false; break; }
                rel[s] = int(std::lower_bound(k.indices.begin(), k.indices.end(),
                                              norm->first[s]) - k.indices.begin());
              }
              if (!ok) continue;
              std::vector<int> xs2 = xs;
              xs2[std::size_t(kslot)] = int(wedge_rank(rel, int(k.indices.size())));
              std::int64_t c0 = col_of(xs2);
              for (int qq = 0; qq < dv; ++qq)
                eta.at(int(row0) + qq, int(c0) + qq) -= b[std::size_t(t)] * norm->second;
            }
          }
        }
      }
      return eta;
    };

    // annihilation check on representatives: z in K_{n-1} acts by d(f_z)
    for (int wi = 0; wi < kw.lb.dim && result.annihilation_ok; ++wi) {
      Mat eta = eta_matrix(kw.wedges[std::size_t(wi)]);
      SparseMatrix d_prev =
          (i >= 1) ? leibniz_differential(kw.lb, v_rep, i - 1) : SparseMatrix(0, 0);
      for (const Vec& f : hl.representatives) {
        Vec lhs = eta.apply(f);
        Vec rhs = zero_vec(lhs.size());
        if (i >= 1) {
          // f_z = first-slot contraction at wedge wi
          const std::int64_t dkl = kw.lb.dim;
          const int dv = r.dim_v;
          std::int64_t sub = d_prev.cols();
          Vec fz(std::size_t(sub), Rat(0));
          for (std::int64_t c = 0; c < sub; ++c)
            fz[std::size_t(c)] = f[std::size_t((std::int64_t(wi) * (sub / dv) * dv + c))];
          (void)dkl;
          rhs = d_prev.apply(fz);
        }
        if (lhs != rhs) result.annihilation_ok = false;
      }
    }

    // eta matrices on H^i for the quotient wedges; must be a representation
    Representation eta_rep;
    eta_rep.n = n;
    eta_rep.dim = dm;
    eta_rep.dim_v = int(h);
    if (h > 0) {
      // basis matrix of [representatives | coboundary basis] for coordinates
      const std::int64_t sp = hl.dim_space;
      std::vector<Vec> cols;
      for (const Vec& f : hl.representatives) cols.push_back(f);
      for (const Vec& f : hl.image_rows) cols.push_back(f);
      SparseMatrix basis(sp, std::int64_t(cols.size()));
      for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::int64_t t = 0; t < sp; ++t)
          if (cols[j][std::size_t(t)] != 0) basis.set(t, std::int64_t(j), cols[j][std::size_t(t)]);
      for (std::int64_t zq = 0; zq < dql; ++zq) {
        Tuple zrel = wedge_unrank(zq, n - 1, dm);
        Tuple za(zrel.size());
        for (std::size_t s = 0; s < zrel.size(); ++s) za[s] = midx[std::size_t(zrel[s])];
        Mat eta = eta_matrix(za);
        Mat on_h(static_cast<int>(h), static_cast<int>(h));
        for (std::int64_t col = 0; col < h; ++col) {
          Vec img = eta.apply(hl.representatives[std::size_t(col)]);
          if (!is_zero(hl.d_here.apply(img)))
            throw std::runtime_error("e2_page: eta image is not a cocycle");
          auto sol = solve_in_image(basis, img);
          if (!sol) throw std::runtime_error("e2_page: eta image outside Z^i");
          for (std::int64_t row = 0; row < h; ++row) on_h.at(int(row), int(col)) = (*sol)[std::size_t(row)];
        }
        if (!on_h.is_zero()) eta_rep.mu[zrel] = std::move(on_h);
      }
      if (!result.action_representation)
        result.action_representation = validate_representation(q, eta_rep);
    }

    for (int j = 0; j + i <= degree_bound; ++j) {
      if (h == 0) {
        result.page.dims[{j, i}] = 0;
        continue;
      }
      CohomologyReport rep = cohomology(q, eta_rep, ComplexKind::standard, j);
      result.page.dims[{j, i}] = rep.dim_h;
    }
  }
  return result;
}

Representation restrict_to_base(const NLieAlgebra& a, const Representation& r_ext) {
  if (r_ext.dim != a.dim + 1)
    throw std::invalid_argument("restrict_to_base: expected a representation of L (+) k");
  Representation r;
  r.n = a.n;
  r.dim = a.dim;
  r.dim_v = r_ext.dim_v;
  for (const auto& [w, m] : r_ext.mu) {
    bool in_base = true;
    for (int i : w)
      if (i >= a.dim) in_base = false;
    if (in_base) r.mu[w] = m;
  }
  return r;
}

ExtCohomologyCompare gen_der_ext_cohomology_compare(const NLieAlgebra& a, const GenDer& d,
                                                    const Representation& r_ext,
                                                    int m_max) {
  NLieAlgebra ext = gen_der_extension(a, d);
  Representation r_base = restrict_to_base(a, r_ext);
  ExtCohomologyCompare out;
  for (int m = 0; m <= m_max; ++m) {
    CohomologyReport he = cohomology(ext, r_ext, ComplexKind::standard, m);
    CohomologyReport hb = cohomology(a, r_base, ComplexKind::standard, m);
    out.dims_ext.push_back(he.dim_h);
    out.dims_base.push_back(hb.dim_h);
    if (he.dim_h != hb.dim_h) out.all_equal = false;
  }
  return out;
}

}  // namespace nlie
