#include "nlie/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace nlie {

namespace {

Tuple parse_tuple(const json& j, int arity, int dim, const char* what) {
  if (!j.is_array() || (arity >= 0 && int(j.size()) != arity))
    throw std::invalid_argument(std::string(what) + ": expected a tuple of length " +
                                std::to_string(arity));
  Tuple t;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw std::invalid_argument(std::string(what) + ": non-integer index");
    int i = x.get<int>() - 1;
    if (i < 0 || i >= dim) throw std::invalid_argument(std::string(what) + ": index out of range");
    t.push_back(i);
  }
  return t;
}

json emit_tuple(const Tuple& t) {
  json j = json::array();
  for (int i : t) j.push_back(i + 1);
  return j;
}

Vec parse_vec(const json& j, int len, const char* what) {
  if (!j.is_array() || int(j.size()) != len)
    throw std::invalid_argument(std::string(what) + ": expected a vector of length " +
                                std::to_string(len));
  Vec v;
  for (const auto& x : j) {
    if (!x.is_string()) throw std::invalid_argument(std::string(what) + ": rationals must be strings");
    v.push_back(parse_rat(x.get<std::string>()));
  }
  return v;
}

json emit_vec(const Vec& v) {
  json j = json::array();
  for (const Rat& x : v) j.push_back(rat_str(x));
  return j;
}

}  // namespace

NLieAlgebra parse_algebra(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("algebra: expected an object");
  NLieAlgebra a;
  a.n = j.at("n").get<int>();
  a.dim = j.at("dim").get<int>();
  if (a.n < 2) throw std::invalid_argument("algebra: n must be >= 2");
  if (a.dim < 0) throw std::invalid_argument("algebra: dim must be >= 0");
  if (j.contains("brackets")) {
    for (const auto& b : j.at("brackets")) {
      Tuple args = parse_tuple(b.at("args"), a.n, a.dim, "bracket args");
      if (!strictly_increasing(args))
        throw std::invalid_argument("bracket args must be strictly increasing");
      Vec v = zero_vec(static_cast<std::size_t>(a.dim));
      for (const auto& [key, val] : b.at("value").items()) {
        int i = std::stoi(key) - 1;
        if (i < 0 || i >= a.dim) throw std::invalid_argument("bracket value index out of range");
        v[std::size_t(i)] = parse_rat(val.get<std::string>());
      }
      a.set_bracket(args, std::move(v));
    }
  }
  return a;
}

json emit_algebra(const NLieAlgebra& a, const std::vector<std::string>* names) {
  json j;
  j["n"] = a.n;
  j["dim"] = a.dim;
  if (names) j["basis_names"] = *names;
  json brackets = json::array();
  for (const auto& [t, v] : a.c) {
    json b;
    b["args"] = emit_tuple(t);
    json val;
    for (int i = 0; i < a.dim; ++i)
      if (v[std::size_t(i)] != 0) val[std::to_string(i + 1)] = rat_str(v[std::size_t(i)]);
    b["value"] = val;
    brackets.push_back(b);
  }
  j["brackets"] = brackets;
  return j;
}

Representation parse_rep(const json& j, const NLieAlgebra& a) {
  if (!j.is_object()) throw std::invalid_argument("rep: expected an object");
  Representation r;
  r.n = a.n;
  r.dim = a.dim;
  r.dim_v = j.at("dim_v").get<int>();
  if (r.dim_v < 0) throw std::invalid_argument("rep: dim_v must be >= 0");
  if (j.contains("mu")) {
    for (const auto& e : j.at("mu")) {
      Tuple args = parse_tuple(e.at("args"), a.n - 1, a.dim, "mu args");
      if (!strictly_increasing(args))
        throw std::invalid_argument("mu args must be strictly increasing");
      const json& rows = e.at("matrix");
      if (!rows.is_array() || int(rows.size()) != r.dim_v)
        throw std::invalid_argument("mu matrix must be dim_v x dim_v");
      Mat m(r.dim_v, r.dim_v);
      for (int p = 0; p < r.dim_v; ++p) {
        Vec row = parse_vec(rows[std::size_t(p)], r.dim_v, "mu matrix row");
        for (int q = 0; q < r.dim_v; ++q) m.at(p, q) = row[std::size_t(q)];
      }
      r.set_mu(args, std::move(m));
    }
  }
  return r;
}

json emit_rep(const Representation& r) {
  json j;
  j["dim_v"] = r.dim_v;
  json mu = json::array();
  for (const auto& [t, m] : r.mu) {
    json e;
    e["args"] = emit_tuple(t);
    json rows = json::array();
    for (int p = 0; p < r.dim_v; ++p) {
      json row = json::array();
      for (int q = 0; q < r.dim_v; ++q) row.push_back(rat_str(m.at(p, q)));
      rows.push_back(row);
    }
    e["matrix"] = rows;
    mu.push_back(e);
  }
  j["mu"] = mu;
  return j;
}

Cochain parse_cochain(const json& j, const NLieAlgebra& a, int dim_v) {
  if (!j.is_object()) throw std::invalid_argument("cochain: expected an object");
  const std::string kind_s = j.at("complex").get<std::string>();
  if (kind_s == "gen-der")
    throw std::invalid_argument("cochain: gen-der files go through parse_gen_der");
  ComplexKind kind = kind_from_name(kind_s);
  const int m = j.at("degree").get<int>();
  if (m < 0) throw std::invalid_argument("cochain: degree must be >= 0");
  const int n = a.n, d = a.dim;
  const std::int64_t dl = binomial(d, n - 1);

  Cochain c;
  c.kind = kind;
  c.degree = m;
  c.desc = cochain_desc(a, dim_v, kind, m);
  c.coeffs = zero_vec(std::size_t(c.desc.total()));

  const int coeff_len = (kind == ComplexKind::leibniz) ? d : dim_v;
  if (!j.contains("terms")) return c;
  for (const auto& term : j.at("terms")) {
    Vec value = parse_vec(term.at("value"), coeff_len, "cochain value");
    Rat sign(1);
    std::int64_t arg_index = 0;

    auto wedge_part = [&](const json& tup, int k) -> std::int64_t {
      Tuple t = parse_tuple(tup, k, d, "cochain wedge");
      auto norm = sort_with_sign(t);
      if (!norm) return -1;
      sign *= norm->second;
      return wedge_rank(norm->first, d);
    };

    if (kind == ComplexKind::standard || kind == ComplexKind::alternate) {
      const int nx = std::max(0, m - 1);
      if (int(term.contains("x") ? term.at("x").size() : 0) != nx)
        throw std::invalid_argument("cochain: expected " + std::to_string(nx) +
                                    " wedge slots in x");
      std::vector<std::int64_t> xr;
      for (int s = 0; s < nx; ++s) {
        std::int64_t rk = wedge_part(term.at("x")[std::size_t(s)], n - 1);
        if (rk < 0) { sign = 0; break; }
        xr.push_back(rk);
      }
      if (sign == 0) continue;
      std::int64_t y;
      std::int64_t dy;
      if (kind == ComplexKind::standard) {
        if (m == 0) {
          y = wedge_part(term.at("y"), n - 2);
          dy = binomial(d, n - 2);
        } else {
          y = parse_tuple(json::array({term.at("y")}), 1, d, "cochain y")[0];
          dy = d;
        }
      } else {
        if (m == 0) {
          y = parse_tuple(json::array({term.at("y")}), 1, d, "cochain y")[0];
          dy = d;
        } else {
          y = wedge_part(term.at("y"), n - 2);
          dy = binomial(d, n - 2);
        }
      }
      if (y < 0 || sign == 0) continue;
      std::int64_t idx = 0;
      for (std::int64_t r : xr) idx = idx * dl + r;
      idx = idx * dy + y;
      for (int p = 0; p < dim_v; ++p)
        c.coeffs[std::size_t(idx * dim_v + p)] += sign * value[std::size_t(p)];
    } else if (kind == ComplexKind::lie) {
      std::int64_t y = wedge_part(term.at("y"), m);
      if (y < 0) continue;
      for (int p = 0; p < dim_v; ++p)
        c.coeffs[std::size_t(y * dim_v + p)] += sign * value[std::size_t(p)];
    } else {  // leibniz: Hom((Lambda^{n-1} L)^{(x)m}, L)
      if (int(term.contains("x") ? term.at("x").size() : 0) != m)
        throw std::invalid_argument("cochain: leibniz terms need m wedge slots");
      std::int64_t idx = 0;
      for (int s = 0; s < m; ++s) {
        std::int64_t rk = wedge_part(term.at("x")[std::size_t(s)], n - 1);
        if (rk < 0) { sign = 0; break; }
        idx = idx * dl + rk;
      }
      if (sign == 0) continue;
      for (int p = 0; p < d; ++p)
        c.coeffs[std::size_t(idx * d + p)] += sign * value[std::size_t(p)];
    }
  }
  return c;
}

json emit_cochain(const NLieAlgebra& a, int dim_v, const Cochain& c) {
  const int n = a.n, d = a.dim, m = c.degree;
  const std::int64_t dl = binomial(d, n - 1);
  json j;
  j["complex"] = kind_name(c.kind);
  j["degree"] = m;
  json terms = json::array();
  const int coeff_len = (c.kind == ComplexKind::leibniz) ? d : dim_v;
  const std::int64_t ntuples = std::int64_t(c.coeffs.size()) / coeff_len;
  for (std::int64_t t = 0; t < ntuples; ++t) {
    Vec val(static_cast<std::size_t>(coeff_len));
    bool nonzero = false;
    for (int p = 0; p < coeff_len; ++p) {
      val[std::size_t(p)] = c.coeffs[std::size_t(t * coeff_len + p)];
      if (val[std::size_t(p)] != 0) nonzero = true;
    }
    if (!nonzero) continue;
    json term;
    std::int64_t rest = t;
    if (c.kind == ComplexKind::standard || c.kind == ComplexKind::alternate) {
      bool y_is_wedge = (c.kind == ComplexKind::standard) ? (m == 0) : (m != 0);
      std::int64_t dy = y_is_wedge ? binomial(d, n - 2) : d;
      std::int64_t y = rest % dy;
      rest /= dy;
      int nx = std::max(0, m - 1);
      std::vector<std::int64_t> xr(static_cast<std::size_t>(nx));
      for (int k = nx - 1; k >= 0; --k) {
        xr[std::size_t(k)] = rest % dl;
        rest /= dl;
      }
      json xs = json::array();
      for (std::int64_t r : xr) xs.push_back(emit_tuple(wedge_unrank(r, n - 1, d)));
      term["x"] = xs;
      term["y"] = y_is_wedge ? emit_tuple(wedge_unrank(y, n - 2, d)) : json(int(y) + 1);
    } else if (c.kind == ComplexKind::lie) {
      term["y"] = emit_tuple(wedge_unrank(rest, m, d));
    } else {
      std::vector<std::int64_t> xr(static_cast<std::size_t>(m));
      for (int k = m - 1; k >= 0; --k) {
        xr[std::size_t(k)] = rest % dl;
        rest /= dl;
      }
      json xs = json::array();
      for (std::int64_t r : xr) xs.push_back(emit_tuple(wedge_unrank(r, n - 1, d)));
      term["x"] = xs;
    }
    term["value"] = emit_vec(val);
    terms.push_back(term);
  }
  j["terms"] = terms;
  return j;
}

GenDer parse_gen_der(const json& j, const NLieAlgebra& a) {
  if (!j.is_object()) throw std::invalid_argument("gen-der: expected an object");
  if (j.contains("complex") && j.at("complex").get<std::string>() != "gen-der")
    throw std::invalid_argument("gen-der: complex must be \"gen-der\"");
  GenDer g;
  g.n = a.n;
  g.dim = a.dim;
  if (!j.contains("terms")) return g;
  for (const auto& term : j.at("terms")) {
    Tuple t = parse_tuple(term.at("y"), a.n - 1, a.dim, "gen-der wedge");
    auto norm = sort_with_sign(t)
;
    if (!norm) continue;
    Vec v = parse_vec(term.at("value"), a.dim, "gen-der value");
    if (norm->second < 0)
      for (Rat& x : v) x = -x;
    Vec acc = g.d.count(norm->first) ? g.d[norm->first] : zero_vec(static_cast<std::size_t>(a.dim));
    axpy(acc, Rat(1), v);
    if (is_zero(acc))
      g.d.erase(norm->first);
    else
      g.d[norm->first] = std::move(acc);
  }
  return g;
}

json emit_gen_der(const GenDer& g) {
  json j;
  j["complex"] = "gen-der";
  j["degree"] = 1;
  json terms = json::array();
  for (const auto& [t, v] : g.d) {
    json term;
    term["y"] = emit_tuple(t);
    term["value"] = emit_vec(v);
    terms.push_back(term);
  }
  j["terms"] = terms;
  return j;
}

Mat parse_matrix(const json& j, int rows, int cols) {
  const json& rj = j.contains("matrix") ? j.at("matrix") : j;
  if (!rj.is_array() || int(rj.size()) != rows)
    throw std::invalid_argument("matrix: expected " + std::to_string(rows) + " rows");
  Mat m(rows, cols);
  for (int p = 0; p < rows; ++p) {
    Vec row = parse_vec(rj[std::size_t(p)], cols, "matrix row");
    for (int q = 0; q < cols; ++q) m.at(p, q) = row[std::size_t(q)];
  }
  return m;
}

SubalgebraSpec parse_subalgebra(const json& j, const NLieAlgebra& a) {
  SubalgebraSpec k;
  for (const auto& x : j.at("indices")) {
    int i = x.get<int>() - 1;
    if (i < 0 || i >= a.dim) throw std::invalid_argument("subalgebra index out of range");
    k.indices.push_back(i);
  }
  std::sort(k.indices.begin(), k.indices.end());
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "ideal")
    k.ideal = true;
  else if (kind == "subalgebra")
    k.ideal = false;
  else
    throw std::invalid_argument("subalgebra kind must be \"subalgebra\" or \"ideal\"");
  return k;
}

json emit_violation(const Violation& v) {
  json j;
  j["check"] = v.check;
  json args = json::array();
  for (const Tuple& t : v.args) args.push_back(emit_tuple(t));
  j["args"] = args;
  if (!v.detail.empty()) j["detail"] = v.detail;
  return j;
}

json emit_cohomology_report(const NLieAlgebra& a, int dim_v, const CohomologyReport& rep) {
  json j;
  j["complex"] = kind_name(rep.kind);
  j["degree"] = rep.degree;
  j["dim_cochains"] = rep.dim_cochains;
  j["dim_Z"] = rep.dim_cocycles;
  j["dim_B"] = rep.dim_coboundaries;
  j["dim_H"] = rep.dim_h;
  json reps = json::array();
  for (const Cochain& c : rep.representatives) reps.push_back(emit_cochain(a, dim_v, c));
  j["representatives"] = reps;
  return j;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("JSON parse error in " + path + ": " + e.what());
  }
  return j;
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open file for writing: " + path);
  out << dump_canonical(j);
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

}  // namespace nlie
