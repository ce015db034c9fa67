#include "nlie/algebra.hpp"

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

std::string tuple_str(const Tuple& t) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i] + 1;
  os << ")";
  return os.str();
}

std::string vec_str(const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << rat_str(v[i]);
  os << ")";
  return os.str();
}

void NLieAlgebra::set_bracket(const Tuple& args, Vec value) {
  if (int(args.size()) != n) throw std::invalid_argument("bracket arity != n");
  if (!strictly_increasing(args))
    throw std::invalid_argument("structure constants keyed on increasing tuples");
  for (int i : args)
    if (i < 0 || i >= dim) throw std::invalid_argument("basis index out of range");
  if (int(value.size()) != dim) throw std::invalid_argument("value length != dim");
  if (is_zero(value))
    c.erase(args);
  else
    c[args] = std::move(value);
}

Vec NLieAlgebra::bracket_basis(const Tuple& args) const {
  assert(int(args.size()) == n);
  auto norm = sort_with_sign(args);
  if (!norm) return zero_vec(static_cast<std::size_t>(dim));
  auto it = c.find(norm->first);
  if (it == c.end()) return zero_vec(static_cast<std::size_t>(dim));
  Vec out = it->second;
  if (norm->second < 0)
    for (Rat& x : out) x = -x;
  return out;
}

Vec NLieAlgebra::bracket(const std::vector<Vec>& args) const {
  if (int(args.size()) != n) throw std::invalid_argument("bracket arity != n");
  for (const Vec& v : args)
    if (int(v.size()) != dim) throw std::invalid_argument("argument dim mismatch");
  Vec out = zero_vec(static_cast<std::size_t>(dim));
  Tuple idx(static_cast<std::size_t>(n), 0);
  Rat coeff;
  // multilinear expansion over the supports of the arguments
  auto rec = [&](auto&& self, int slot, const Rat& acc) -> void {
    if (slot == n) {
      Vec b = bracket_basis(idx);
      axpy(out, acc, b);
      return;
    }
    for (int i = 0; i < dim; ++i) {
      if (args[std::size_t(slot)][std::size_t(i)] == 0) continue;
      idx[std::size_t(slot)] = i;
      self(self, slot + 1, acc * args[std::size_t(slot)][std::size_t(i)]);
    }
  };
  rec(rec, 0, Rat(1));
  return out;
}

Vec NLieAlgebra::bracket_with_vec(Tuple args, std::size_t slot, const Vec& v) const {
  Vec out = zero_vec(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    if (v[std::size_t(i)] == 0) continue;
    args[slot] = i;
    axpy(out, v[std::size_t(i)], bracket_basis(args));
  }
  return out;
}

void Representation::set_mu(const Tuple& args, Mat m) {
  if (int(args.size()) != n - 1) throw std::invalid_argument("mu arity != n-1");
  if (!strictly_increasing(args))
    throw std::invalid_argument("mu keyed on increasing tuples");
  if (m.rows != dim_v || m.cols != dim_v)
    throw std::invalid_argument("mu matrix shape mismatch");
  if (m.is_zero())
    mu.erase(args);
  else
    mu[args] = std::move(m);
}

Mat Representation::mu_basis(const Tuple& args) const {
  assert(int(args.size()) == n - 1);
  auto norm = sort_with_sign(args);
  if (!norm) return Mat(dim_v, dim_v);
  auto it = mu.find(norm->first);
  if (it == mu.end()) return Mat(dim_v, dim_v);
  return norm->second < 0 ? -it->second : it->second;
}

Mat Representation::mu_vectors(const std::vector<Vec>& args) const {
  Mat out(dim_v, dim_v);
  Tuple idx(args.size());
  auto rec = [&](auto&& self, std::size_t slot, const Rat& acc) -> void {
    if (slot == args.size()) {
      Mat m = mu_basis(idx);
      if (!m.is_zero()) out = out + m.scaled(acc);
      return;
    }
    for (int i = 0; i < dim; ++i) {
      if (args[slot][std::size_t(i)] == 0) continue;
      idx[slot] = i;
      self(self, slot + 1, acc * args[slot][std::size_t(i)]);
    }
  };
  rec(rec, 0, Rat(1));
  return out;
}

Mat Representation::mu_with_vec(Tuple args, std::size_t slot, const Vec& v) const {
  Mat out(dim_v, dim_v);
  for (int i = 0; i < dim; ++i) {
    if (v[std::size_t(i)] == 0) continue;
    args[slot] = i;
    Mat m = mu_basis(args);
    if (!m.is_zero()) out = out + m.scaled(v[std::size_t(i)]);
  }
  return out;
}

CheckResult validate_fundamental_identity(const NLieAlgebra& a) {
  const int n = a.n, d = a.dim;
  CheckResult result;
  for_each_increasing(n - 1, d, [&](const Tuple& u) {
    if (result) return;
    for_each_increasing(n, d, [&](const Tuple& w) {
      if (result) return;
      Tuple outer = u;
      outer.push_back(0);
      Vec lhs = a.bracket_with_vec(outer, std::size_t(n - 1), a.bracket_basis(w));
      Vec rhs = zero_vec(static_cast<std::size_t>(d));
      for (int k = 0; k < n; ++k) {
        Tuple inner = u;
        inner.push_back(w[std::size_t(k)]);
        axpy(rhs, Rat(1), a.bracket_with_vec(w, std::size_t(k), a.bracket_basis(inner)));
      }
      if (lhs != rhs)
        result = Violation{"fundamental-identity",
                           {u, w},
                           "lhs=" + vec_str(lhs) + " rhs=" + vec_str(rhs)};
    });
  });
  return result;
}

CheckResult validate_representation(const NLieAlgebra& a, const Representation& r) {
  const int n = a.n, d = a.dim;
  if (r.n != n || r.dim != d)
    throw std::invalid_argument("representation shape does not match algebra");
  CheckResult result;
  // axiom I: [mu(u), mu(w)] = sum_k mu(w with w_k -> [u..., w_k])
  for_each_increasing(n - 1, d, [&](const Tuple& u) {
    if (result) return;
    Mat mu_u = r.mu_basis(u);
    for_each_increasing(n - 1, d, [&](const Tuple& w) {
      if (result) return;
      Mat mu_w = r.mu_basis(w);
      Mat lhs = mu_u * mu_w - mu_w * mu_u;
      Mat rhs(r.dim_v, r.dim_v);
      for (int k = 0; k < n - 1; ++k) {
        Tuple inner = u;
        inner.push_back(w[std::size_t(k)]);
        rhs = rhs + r.mu_with_vec(w, std::size_t(k), a.bracket_basis(inner));
      }
      if (!(lhs == rhs)) result = Violation{"rep-axiom-I", {u, w}, ""};
    });
  });
  if (result) return result;
  // axiom II: mu([t], s...) = sum_k (-1)^k mu(t\k) mu(s..., t_k)
  for_each_increasing(n, d, [&](const Tuple& t) {
    if (result) return;
    for_each_increasing(n - 2, d, [&](const Tuple& s) {
      if (result) return;
      Tuple first = s;
      first.insert(first.begin(), 0);
      Mat lhs = r.mu_with_vec(first, 0, a.bracket_basis(t));
      Mat rhs(r.dim_v, r.dim_v);
      for (int k = 0; k < n; ++k) {
        Tuple omit = t;
        omit.erase(omit.begin() + k);
        Tuple last = s;
        last.push_back(t[std::size_t(k)]);
        Mat term = r.mu_basis(omit) * r.mu_basis(last);
        rhs = ((k + 1) % 2 == 0) ? rhs + term : rhs - term;
      }
      if (!(lhs == rhs)) result = Violation{"rep-axiom-II", {t, s}, ""};
    });
  });
  return result;
}

CheckResult check_rep_identity(const NLieAlgebra& a, const Representation& r) {
  const int n = a.n, d = a.dim;
  CheckResult result;
  for_each_increasing(n, d, [&](const Tuple& t) {
    if (result) return;
    for_each_increasing(n - 2, d, [&](const Tuple& s) {
      if (result) return;
      Mat f(r.dim_v, r.dim_v);
      for (int k = 0; k < n; ++k) {
        Tuple omit = t;
        omit.erase(omit.begin() + k);
        Tuple last = s;
        last.push_back(t[std::size_t(k)]);
        Mat p = r.mu_basis(omit), q = r.mu_basis(last);
        Mat term = p * q + q * p;
        f = ((k + 1) % 2 == 0) ? f + term : f - term;
      }
      if (!f.is_zero()) result = Violation{"rep-two-sum-identity", {t, s}, ""};
    });
  });
  return result;
}

Representation adjoint_representation(const NLieAlgebra& a) {
  Representation r;
  r.n = a.n;
  r.dim = a.dim;
  r.dim_v = a.dim;
  for_each_increasing(a.n - 1, a.dim, [&](const Tuple& u) {
    Mat m(a.dim, a.dim);
    Tuple args = u;
    args.push_back(0);
    bool nonzero = false;
    for (int j = 0; j < a.dim; ++j) {
      args.back() = j;
      Vec col = a.bracket_basis(args);
      for (int i = 0; i < a.dim; ++i)
        if (col[std::size_t(i)] != 0) {
          m.at(i, j) = col[std::size_t(i)];
          nonzero = true;
        }
    }
    if (nonzero) r.mu[u] = std::move(m);
  });
  return r;
}

Representation hom_representation(const Representation& eta, int dim_w) {
  Representation r;
  r.n = eta.n;
  r.dim = eta.dim;
  r.dim_v = dim_w * eta.dim_v;
  const int dv = eta.dim_v;
  for (const auto& [u, m] : eta.mu) {
    // mu(x)(E_{w,u}) = -sum_v eta(x)[u][v] E_{w,v}
    Mat big(r.dim_v, r.dim_v);
    for (int w = 0; w < dim_w; ++w)
      for (int uu = 0; uu < dv; ++uu)
        for (int v = 0; v < dv; ++v)
          if (m.at(uu, v) != 0) big.at(w * dv + v, w * dv + uu) = -m.at(uu, v);
    if (!big.is_zero()) r.mu[u] = std::move(big);
  }
  return r;
}

NLieAlgebra semidirect_sum_nlie(const NLieAlgebra& a, const Representation& r) {
  NLieAlgebra s;
  s.n = a.n;
  s.dim = r.dim_v + a.dim;
  const int dv = r.dim_v;
  for_each_increasing(a.n, s.dim, [&](const Tuple& t) {
    int nv = 0;
    while (nv < a.n && t[std::size_t(nv)] < dv) ++nv;
    Vec val = zero_vec(static_cast<std::size_t>(s.dim));
    if (nv == 0) {
      Tuple lt(t);
      for (int& i : lt) i -= dv;
      Vec b = a.bracket_basis(lt);
      for (int i = 0; i < a.dim; ++i) val[std::size_t(dv + i)] = b[std::size_t(i)];
    } else if (nv == 1) {
      Tuple lt(t.begin() + 1, t.end());
      for (int& i : lt) i -= dv;
      Mat m = r.mu_basis(lt);
      for (int i = 0; i < dv; ++i) val[std::size_t(i)] = m.at(i, t[0]);
    }
    if (!is_zero(val)) s.c[t] = std::move(val);
  });
  return s;
}

Representation trivial_representation(const NLieAlgebra& a, int dim_v) {
  Representation r;
  r.n = a.n;
  r.dim = a.dim;
  r.dim_v = dim_v;
  return r;
}

NLieAlgebra abelian_algebra(int n, int dim) {
  NLieAlgebra a;
  a.n = n;
  a.dim = dim;
  return a;
}

NLieAlgebra simple_algebra(int n) {
  NLieAlgebra a;
  a.n = n;
  a.dim = n + 1;
  for (int omit = 0; omit <= n; ++omit) {
    Tuple t;
    for (int i = 0; i <= n; ++i)
      if (i != omit) t.push_back(i);
    Vec v = zero_vec(static_cast<std::size_t>(n + 1));
    v[std::size_t(omit)] = (omit % 2 == 0) ? Rat(-1) : Rat(1);  // (-1)^{omit+1}
    a.c[t] = std::move(v);
  }
  return a;
}

NLieAlgebra sl2() {
  NLieAlgebra a;
  a.n = 2;
  a.dim = 3;
  a.c[{0, 1}] = Vec{Rat(0), Rat(0), Rat(1)};    // [e,f] = h
  a.c[{0, 2}] = Vec{Rat(-2), Rat(0), Rat(0)};   // [e,h] = -2e
  a.c[{1, 2}] = Vec{Rat(0), Rat(2), Rat(0)};    // [f,h] = 2f
  return a;
}

}  // namespace nlie
