#include "nlie/complexes.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace nlie {

std::string kind_name(ComplexKind k) {
  switch (k) {
    case ComplexKind::standard: return "standard";
    case ComplexKind::alternate: return "alternate";
    case ComplexKind::leibniz: return "leibniz";
    case ComplexKind::lie: return "lie";
  }
  return "?";
}

ComplexKind kind_from_name(const std::string& s) {
  if (s == "standard") return ComplexKind::standard;
  if (s == "alternate") return ComplexKind::alternate;
  if (s == "leibniz") return ComplexKind::leibniz;
  if (s == "lie") return ComplexKind::lie;
  throw std::invalid_argument("unknown complex kind: " + s);
}

BasisDescriptor cochain_desc(const NLieAlgebra& a, int dim_v, ComplexKind kind, int m) {
  switch (kind) {
    case ComplexKind::standard: return standard_cochain_desc(a.n, a.dim, dim_v, m);
    case ComplexKind::alternate: return alternate_cochain_desc(a.n, a.dim, dim_v, m);
    case ComplexKind::lie: return lie_cochain_desc(a.dim, dim_v, m);
    case ComplexKind::leibniz:
      return leibniz_cochain_desc(int(binomial(a.dim, a.n - 1)), a.dim, m);
  }
  throw std::logic_error("unreachable");
}

namespace {

// Decodes the argument part of a standard/alternate codomain index:
// m wedge slot ranks followed by the final slot index.
struct ArgTuple {
  std::vector<std::int64_t> x;  // wedge ranks
  std::int64_t y = 0;           // final slot (plain index or wedge rank)
};

ArgTuple decode_args(std::int64_t si, int m, std::int64_t dl, std::int64_t dy) {
  ArgTuple t;
  t.x.resize(static_cast<std::size_t>(m));
  t.y = si % dy;
  si /= dy;
  for (int k = m - 1; k >= 0; --k) {
    t.x[std::size_t(k)] = si % dl;
    si /= dl;
  }
  return t;
}

std::int64_t encode_args(const std::vector<std::int64_t>& x, std::int64_t y,
                         std::int64_t dl, std::int64_t dy) {
  std::int64_t idx = 0;
  for (std::int64_t xr : x) idx = idx * dl + xr;
  return idx * dy + y;
}

}  // namespace

SparseMatrix delta_standard(const NLieAlgebra& a, const Representation& r, int m) {
  const int n = a.n, d = a.dim, dv = r.dim_v;
  const std::int64_t dl = binomial(d, n - 1);
  BasisDescriptor dom = standard_cochain_desc(n, d, dv, m);
  BasisDescriptor cod = standard_cochain_desc(n, d, dv, m + 1);
  SparseMatrix out(cod.total(), dom.total());
  out.domain = dom;
  out.codomain = cod;

  if (m == 0) {
    // delta(z (x) v)(y) = mu(z_1..z_{n-2}, y)(v)
    const std::int64_t dz = binomial(d, n - 2);
    for (int y = 0; y < d; ++y)
      for (std::int64_t zi = 0; zi < dz; ++zi) {
        Tuple args = wedge_unrank(zi, n - 2, d);
        args.push_back(y);
        Mat mu = r.mu_basis(args);
        for (int p = 0; p < dv; ++p)
          for (int q = 0; q < dv; ++q)
            if (mu.at(p, q) != 0)
              out.add(std::int64_t(y) * dv + p, zi * dv + q, mu.at(p, q));
      }
    return out;
  }

  if (dv == 0 || cod.total() == 0) return out;
  LeibnizAlgebra lw = induced_leibniz(a);
  const std::int64_t ntuples = cod.total() / dv;
  std::vector<Tuple> wedges(static_cast<std::size_t>(dl));
  for (std::int64_t i = 0; i < dl; ++i) wedges[std::size_t(i)] = wedge_unrank(i, n - 1, d);

  for (std::int64_t si = 0; si < ntuples; ++si) {
    ArgTuple s = decode_args(si, m, dl, d);
    const std::int64_t row0 = si * dv;
    const int y = int(s.y);

    // f(x_1,..,^x_i,.., [x_i,x_j], .., x_m, y), sign (-1)^i
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        Vec bv = lw.bracket_basis(int(s.x[std::size_t(i)]), int(s.x[std::size_t(j)]));
        if (is_zero(bv)) continue;
        Rat sign = (i % 2 == 0) ? Rat(-1) : Rat(1);
        std::vector<std::int64_t> xs;
        xs.reserve(static_cast<std::size_t>(m - 1));
        for (int k = 0; k < m; ++k)
          if (k != i) xs.push_back(s.x[std::size_t(k)]);
        for (std::int64_t idx = 0; idx < dl; ++idx) {
          if (bv[std::size_t(idx)] == 0) continue;
          xs[std::size_t(j - 1)] = idx;
          std::int64_t c0 = encode_args(xs, y, dl, d) * dv;
          for (int q = 0; q < dv; ++q) out.add(row0 + q, c0 + q, sign * bv[std::size_t(idx)]);
        }
      }

    std::vector<std::vector<std::int64_t>> drop(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      drop[std::size_t(i)].reserve(static_cast<std::size_t>(m - 1));
      for (int k = 0; k < m; ++k)
        if (k != i) drop[std::size_t(i)].push_back(s.x[std::size_t(k)]);
    }

    for (int i = 0; i < m; ++i) {
      const Tuple& xi = wedges[std::size_t(s.x[std::size_t(i)])];
      Rat sign_i = (i % 2 == 0) ? Rat(-1) : Rat(1);  // (-1)^{i+1} 1-based

      // f(.., ^x_i, .., x_m, [x_i^1..x_i^{n-1}, y]), sign (-1)^i
      Tuple args = xi;
      args.push_back(y);
      Vec by = a.bracket_basis(args);
      for (int t = 0; t < d; ++t) {
        if (by[std::size_t(t)] == 0) continue;
        std::int64_t c0 = encode_args(drop[std::size_t(i)], t, dl, d) * dv;
        for (int q = 0; q < dv; ++q) out.add(row0 + q, c0 + q, sign_i * by[std::size_t(t)]);
      }

      // mu(x_i)( f(.., ^x_i, .., y) ), sign (-1)^{i+1}
      Mat mu = r.mu_basis(xi);
      if (!mu.is_zero()) {
        std::int64_t c0 = encode_args(drop[std::size_t(i)], y, dl, d) * dv;
        for (int p = 0; p < dv; ++p)
          for (int q = 0; q < dv; ++q)
            if (mu.at(p, q) != 0) out.add(row0 + p, c0 + q, -sign_i * mu.at(p, q));
      }
    }

    // mu(x_m^1,..,^x_m^i,..,x_m^{n-1}, y)( f(x_1..x_{m-1}, x_m^i) ),
    // sign (-1)^{n-1+m+i}
    {
      const Tuple& xm = wedges[std::size_t(s.x[std::size_t(m - 1)])];
      std::vector<std::int64_t> head(s.x.begin(), s.x.end() - 1);
      for (int i = 0; i < n - 1; ++i) {
        Tuple margs;
        margs.reserve(static_cast<std::size_t>(n - 1));
        for (int k = 0; k < n - 1; ++k)
          if (k != i) margs.push_back(xm[std::size_t(k)]);
        margs.push_back(y);
        Mat mu = r.mu_basis(margs);
        if (mu.is_zero()) continue;
        Rat sign = ((n - 1 + m + i + 1) % 2 == 0) ? Rat(1) : Rat(-1);
        std::int64_t c0 = encode_args(head, xm[std::size_t(i)], dl, d) * dv;
        for (int p = 0; p < dv; ++p)
          for (int q = 0; q < dv; ++q)
            if (mu.at(p, q) != 0) out.add(row0 + p, c0 + q, sign * mu.at(p, q));
      }
    }
  }
  return out;
}

SparseMatrix delta_alternate(const NLieAlgebra& a, const Representation& r, int m) {
  const int n = a.n, d = a.dim, dv = r.dim_v;
  const std::int64_t dl = binomial(d, n - 1);
  const std::int64_t dz = binomial(d, n - 2);
  BasisDescriptor dom = alternate_cochain_desc(n, d, dv, m);
  BasisDescriptor cod = alternate_cochain_desc(n, d, dv, m + 1);
  SparseMatrix out(cod.total(), dom.total());
  out.domain = dom;
  out.codomain = cod;

  if (m == 0) {
    // delta(z (x) v)(y) = mu(z, y^1..y^{n-2})(v)
    for (std::int64_t yi = 0; yi < dz; ++yi) {
      Tuple yw = wedge_unrank(yi, n - 2, d);
      for (int z = 0; z < d; ++z) {
        Tuple args;
        args.push_back(z);
        args.insert(args.end(), yw.begin(), yw.end());
        Mat mu = r.mu_basis(args);
        for (int p = 0; p < dv; ++p)
          for (int q = 0; q < dv; ++q)
            if (mu.at(p, q) != 0)
              out.add(yi * dv + p, std::int64_t(z) * dv + q, mu.at(p, q));
      }
    }
    return out;
  }

  if (dv == 0 || cod.total() == 0) return out;
  LeibnizAlgebra lw = induced_leibniz(a);
  const std::int64_t ntuples = cod.total() / dv;
  std::vector<Tuple> wedges(static_cast<std::size_t>(dl));
  for (std::int64_t i = 0; i < dl; ++i) wedges[std::size_t(i)] = wedge_unrank(i, n - 1, d);

  for (std::int64_t si = 0; si < ntuples; ++si) {
    ArgTuple s = decode_args(si, m, dl, dz);
    const std::int64_t row0 = si * dv;
    Tuple yw = wedge_unrank(s.y, n - 2, d);

    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        Vec bv = lw.bracket_basis(int(s.x[std::size_t(i)]), int(s.x[std::size_t(j)]));
        if (is_zero(bv)) continue;
        Rat sign = (i % 2 == 0) ? Rat(-1) : Rat(1);
        std::vector<std::int64_t> xs;
        xs.reserve(static_cast<std::size_t>(m - 1));
        for (int k = 0; k < m; ++k)
          if (k != i) xs.push_back(s.x[std::size_t(k)]);
        for (std::int64_t idx = 0; idx < dl; ++idx) {
          if (bv[std::size_t(idx)] == 0) continue;
          xs[std::size_t(j - 1)] = idx;
          std::int64_t c0 = encode_args(xs, s.y, dl, dz) * dv;
          for (int q = 0; q < dv; ++q) out.add(row0 + q, c0 + q, sign * bv[std::size_t(idx)]);
        }
      }

    std::vector<std::vector<std::int64_t>> drop(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
      for (int k = 0; k < m; ++k)
        if (k != i) drop[std::size_t(i)].push_back(s.x[std::size_t(k)]);

    for (int i = 0; i < m; ++i) {
      const Tuple& xi = wedges[std::size_t(s.x[std::size_t(i)])];
      Rat sign_i = (i % 2 == 0) ? Rat(-1) : Rat(1);

      // f(.., ^x_i, .., x_m, [x_i, y]) with the wedge-slot action on y
      for (int k = 0; k < n - 2; ++k) {
        Tuple args = xi;
        args.push_back(yw[std::size_t(k)]);
        Vec b = a.bracket_basis(args);
        for (int t = 0; t < d; ++t) {
          if (b[std::size_t(t)] == 0) continue;
          Tuple repl = yw;
          repl[std::size_t(k)] = t;
          auto norm = sort_with_sign(repl);
          if (!norm) continue;
          std::int64_t yrk = wedge_rank(norm->first, d);
          std::int64_t c0 = encode_args(drop[std::size_t(i)], yrk, dl, dz) * dv;
          for (int q = 0; q < dv; ++q)
            out.add(row0 + q, c0 + q, sign_i * b[std::size_t(t)] * norm->second);
        }
      }

      Mat mu = r.mu_basis(xi);
      if (!mu.is_zero()) {
        std::int64_t c0 = encode_args(drop[std::size_t(i)], s.y, dl, dz) * dv;
        for (int p = 0; p < dv; ++p)
          for (int q = 0; q < dv; ++q)
            if (mu.at(p, q) != 0) out.add(row0 + p, c0 + q, -sign_i * mu.at(p, q));
      }
    }

    // mu(x_m^i, y^1..y^{n-2})( f(x_1..x_{m-1}, X_m^i) ), sign (-1)^{m+i+1}
    {
      const Tuple& xm = wedges[std::size_t(s.x[std::size_t(m - 1)])];
      std::vector<std::int64_t> head(s.x.begin(), s.x.end() - 1);
      for (int i = 0; i < n - 1; ++i) {
        Tuple margs;
        margs.push_back(xm[std::size_t(i)]);
        margs.insert(margs.end(), yw.begin(), yw.end());
        Mat mu = r.mu_basis(margs);
        if (mu.is_zero()) continue;
        Rat sign = ((m + i + 1 + 1) % 2 == 0) ? Rat(1) : Rat(-1);  // (-1)^{m+i+1}, i 1-based
        Tuple xdrop = xm;
        xdrop.erase(xdrop.begin() + i);
        std::int64_t c0 = encode_args(head, wedge_rank(xdrop, d), dl, dz) * dv;
        for (int p = 0; p < dv; ++p)
          for (int q = 0; q < dv; ++q)
            if (mu.at(p, q) != 0) out.add(row0 + p, c0 + q, sign * mu.at(p, q));
      }
    }
  }
  return out;
}

SparseMatrix delta_lie(const NLieAlgebra& a, const Representation& r, int m) {
  if (a.n != 2) throw std::invalid_argument("lie complex requires an n = 2 algebra");
  const int d = a.dim, dv = r.dim_v;
  BasisDescriptor dom = lie_cochain_desc(d, dv, m);
  BasisDescriptor cod = lie_cochain_desc(d, dv, m + 1);
  SparseMatrix out(cod.total(), dom.total());
  out.domain = dom;
  out.codomain = cod;

  const std::int64_t nw = binomial(d, m + 1);
  for (std::int64_t wi = 0; wi < nw; ++wi) {
    Tuple w = wedge_unrank(wi, m + 1, d);
    const std::int64_t row0 = wi * dv;
    // sum_{i<j} (-1)^{i+j} f([X_i,X_j], X_1..^i..^j..)
    for (int i = 0; i <= m; ++i)
      for (int j = i + 1; j <= m; ++j) {
        Vec b = a.bracket_basis({w[std::size_t(i)], w[std::size_t(j)]});
        if (is_zero(b)) continue;
        Rat sign = ((i + j + 2) % 2 == 0) ? Rat(1) : Rat(-1);  // (-1)^{i+j} 1-based
        Tuple rest;
        for (int k = 0; k <= m; ++k)
          if (k != i && k != j) rest.push_back(w[std::size_t(k)]);
        for (int t = 0; t < d; ++t) {
          if (b[std::size_t(t)] == 0) continue;
          Tuple arg;
          arg.push_back(t);
          arg.insert(arg.end(), rest.begin(), rest.end());
          auto norm = sort_with_sign(arg);
          if (!norm) continue;
          std::int64_t c0 = wedge_rank(norm->first, d) * dv;
          for (int q = 0; q < dv; ++q)
            out.add(row0 + q, c0 + q, sign * b[std::size_t(t)] * norm->second);
        }
      }
    // sum_k (-1)^{k+1} mu(X_k) f(X_1..^k..)
    for (int k = 0; k <= m; ++k) {
      Mat mu = r.mu_basis({w[std::size_t(k)]});
      if (mu.is_zero()) continue;
      Rat sign = (k % 2 == 0) ? Rat(1) : Rat(-1);
      Tuple rest;
      for (int kk = 0; kk <= m; ++kk)
        if (kk != k) rest.push_back(w[std::size_t(kk)]);
      std::int64_t c0 = wedge_rank(rest, d) * dv;
      for (int p = 0; p < dv; ++p)
        for (int q = 0; q < dv; ++q)
          if (mu.at(p, q) != 0) out.add(row0 + p, c0 + q, sign * mu.at(p, q));
    }
  }
  return out;
}

SparseMatrix delta_of(const NLieAlgebra& a, const Representation& r, ComplexKind kind,
                      int m) {
  switch (kind) {
    case ComplexKind::standard: return delta_standard(a, r, m);
    case ComplexKind::alternate: return delta_alternate(a, r, m);
    case ComplexKind::lie: return delta_lie(a, r, m);
    case ComplexKind::leibniz:
      return leibniz_differential(induced_leibniz(a), fundamental_rep(a), m);
  }
  throw std::logic_error("unreachable");
}

SparseMatrix chain_map_Delta(const NLieAlgebra& a, const Representation& r, int m) {
  const int n = a.n, d = a.dim, dv = r.dim_v;
  const std::int64_t dl = binomial(d, n - 1);
  const std::int64_t dz = binomial(d, n - 2);
  BasisDescriptor dom = standard_cochain_desc(n, d, dv, m);
  BasisDescriptor cod = leibniz_cochain_desc(int(dl), int(dz) * dv, m);
  SparseMatrix out(cod.total(), dom.total());
  out.domain = dom;
  out.codomain = cod;

  if (m == 0) {
    // (-1)^{n+1} Id: the unique scalar making the degree-0 square commute
    // with the displayed delta^0 and the Leibniz differential, for every n
    Rat c = (n % 2 == 0) ? Rat(-1) : Rat(1);
    for (std::int64_t i = 0; i < dom.total(); ++i) out.set(i, i, c);
    return out;
  }

  const std::int64_t ntuples = cod.total() / (dz * dv);
  for (std::int64_t si = 0; si < ntuples; ++si) {
    std::int64_t rest = si;
    std::vector<std::int64_t> zs(static_cast<std::size_t>(m));
    for (int k = m - 1; k >= 0; --k) {
      zs[std::size_t(k)] = rest % dl;
      rest /= dl;
    }
    Tuple zm = wedge_unrank(zs[std::size_t(m - 1)], n - 1, d);
    std::vector<std::int64_t> head(zs.begin(), zs.end() - 1);
    for (int k = 0; k < n - 1; ++k) {
      Rat sign = ((k + 1) % 2 == 0) ? Rat(1) : Rat(-1);  // (-1)^k, k 1-based
      Tuple zdrop = zm;
      zdrop.erase(zdrop.begin() + k);
      std::int64_t drop_rank = wedge_rank(zdrop, d);
      std::int64_t c0 = encode_args(head, zm[std::size_t(k)], dl, d) * dv;
      std::int64_t r0 = (si * dz + drop_rank) * dv;
      for (int q = 0; q < dv; ++q) out.add(r0 + q, c0 + q, sign);
    }
  }
  return out;
}

SparseMatrix chain_map_Theta(const NLieAlgebra& a, const Representation& r, int m) {
  const int n = a.n, d = a.dim, dv = r.dim_v;
  const std::int64_t dl = binomial(d, n - 1);
  const std::int64_t dz = binomial(d, n - 2);
  BasisDescriptor dom = alternate_cochain_desc(n, d, dv, m);
  BasisDescriptor cod = leibniz_cochain_desc(int(dl), d * dv, m);
  SparseMatrix out(cod.total(), dom.total());
  out.domain = dom;
  out.codomain = cod;

  if (m == 0) {
    // +Id: the degree-0 square anticommutes with -Id for every n
    for (std::int64_t i = 0; i < dom.total(); ++i) out.set(i, i, Rat(1));
    return out;
  }

  const std::int64_t ntuples = cod.total() / (std::int64_t(d) * dv);
  for (std::int64_t si = 0; si < ntuples; ++si) {
    std::int64_t rest = si;
    std::vector<std::int64_t> zs(static_cast<std::size_t>(m));
    for (int k = m - 1; k >= 0; --k) {
      zs[std::size_t(k)] = rest % dl;
      rest /= dl;
    }
    Tuple zm = wedge_unrank(zs[std::size_t(m - 1)], n - 1, d);
    std::vector<std::int64_t> head(zs.begin(), zs.end() - 1);
    for (int k = 0; k < n - 1; ++k) {
      Rat sign = (k % 2 == 0) ? Rat(1) : Rat(-1);  // (-1)^{k+1}, k 1-based
      Tuple zdrop = zm;
      zdrop.erase(zdrop.begin() + k);
      std::int64_t drop_rank = wedge_rank(zdrop, d);
      std::int64_t c0 = encode_args(head, drop_rank, dl, dz) * dv;
      std::int64_t r0 = (si * d + zm[std::size_t(k)]) * dv;
      for (int q = 0; q < dv; ++q) out.add(r0 + q, c0 + q, sign);
    }
  }
  return out;
}

CohomologyReport cohomology(const NLieAlgebra& a, const Representation& r,
                            ComplexKind kind, int m) {
  CohomologyReport rep;
  rep.kind = kind;
  rep.degree = m;
  SparseMatrix d_m = delta_of(a, r, kind, m);
  rep.dim_cochains = d_m.cols();
  std::vector<Vec> zbasis = kernel_basis(d_m);
  rep.dim_cocycles = std::int64_t(zbasis.size());

  EchelonBasis image(std::size_t(d_m.cols()));
  if (m >= 1) {
    SparseMatrix d_prev = delta_of(a, r, kind, m - 1);
    for (std::int64_t c = 0; c < d_prev.cols(); ++c) {
      Vec col(std::size_t(d_prev.rows()), Rat(0));
      for (const auto& [rr, v] : d_prev.column(c)) col[std::size_t(rr)] = v;
      image.insert(std::move(col));
    }
  }
  rep.dim_coboundaries = image.rank();
  rep.dim_h = rep.dim_cocycles - rep.dim_coboundaries;

  // representatives: kernel vectors surviving reduction modulo the image,
  // kept in reduced echelon form for reproducibility
  EchelonBasis seen(std::size_t(d_m.cols()));
  for (const Vec& row : image.rows()) seen.insert(row);
  for (const Vec& z : zbasis) {
    Vec red = seen.reduce(z);
    if (is_zero(red)) continue;
    std::size_t p = 0;
    while (red[p] == 0) ++p;
    Rat piv = red[p];
    for (Rat& x : red) x /= piv;
    Cochain c;
    c.kind = kind;
    c.degree = m;
    c.desc = d_m.domain;
    c.coeffs = red;
    rep.representatives.push_back(std::move(c));
    seen.insert(std::move(red));
  }
  assert(std::int64_t(rep.representatives.size()) == rep.dim_h);
  return rep;
}

CoincidenceReport complexes_coincide_check(const NLieAlgebra& a, const Representation& r,
                                           int max_m) {
  std::ostringstream os;
  for (int m = 0; m <= max_m; ++m) {
    SparseMatrix ds = delta_standard(a, r, m);
    SparseMatrix da = delta_alternate(a, r, m);
    if (ds.rows() != da.rows() || ds.cols() != da.cols()) {
      os << "distinct complexes: at degree " << m << " dim C^" << m << " = " << ds.cols()
         << " vs dim alternate C^" << m << " = " << da.cols() << " (codomains " << ds.rows()
         << " vs " << da.rows() << ")";
      return {false, os.str()};
    }
    for (std::int64_t c = 0; c < ds.cols(); ++c)
      if (!(ds.column(c) == da.column(c))) {
        os << "distinct differentials at degree " << m << ", column " << c;
        return {false, os.str()};
      }
  }
  os << "standard and alternate differentials identical for m <= " << max_m;
  return {true, os.str()};
}

}  // namespace nlie
