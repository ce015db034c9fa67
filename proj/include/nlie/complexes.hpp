#pragma once

#include <string>
#include <vector>

#include "nlie/algebra.hpp"
#include "nlie/cochain_spaces.hpp"
#include "nlie/leibniz.hpp"
#include "nlie/sparse.hpp"

namespace nlie {

enum class ComplexKind { standard, alternate, leibniz, lie };

std::string kind_name(ComplexKind k);
ComplexKind kind_from_name(const std::string& s);

// Coefficient vector against the descriptor of its cochain space.
struct Cochain {
  ComplexKind kind = ComplexKind::standard;
  int degree = 0;
  BasisDescriptor desc;
  Vec coeffs;
};

BasisDescriptor cochain_desc(const NLieAlgebra& a, int dim_v, ComplexKind kind, int m);

// delta : C^m -> C^{m+1} of the standard complex (the last-sum sign is
// (-1)^{n-1+m+i}); degree 0 is delta(z_1^...^z_{n-2} (x) v)(y) = mu(z...,y)(v).
SparseMatrix delta_standard(const NLieAlgebra& a, const Representation& r, int m);

// delta of the alternate complex (last-sum sign (-1)^{m+i+1}, final slot in
// Lambda^{n-2} L); degree 0 is delta(z (x) v)(y) = mu(z, y^1..y^{n-2})(v).
SparseMatrix delta_alternate(const NLieAlgebra& a, const Representation& r, int m);

// Chevalley-Eilenberg differential on Hom(Lambda^m g, V); n = 2 only.
SparseMatrix delta_lie(const NLieAlgebra& a, const Representation& r, int m);

// The differential of the complex selected by `kind`; for `leibniz` this is
// the Loday-Pirashvili differential of Lambda^{n-1} L with coefficients L.
SparseMatrix delta_of(const NLieAlgebra& a, const Representation& r, ComplexKind kind, int m);

// Chain map into the Leibniz complex of the fundamental objects:
// Delta^m(f)(x_1..x_m) = sum_k (-1)^k (x_m drop k) (x) f(x_1..x_{m-1}, x_m^k),
// Delta^0 = (-1)^{n+1} Id (the scalar the degree-0 square forces).
// Codomain: CL^m(Lambda^{n-1} L, Lambda^{n-2} L (x) V).
SparseMatrix chain_map_Delta(const NLieAlgebra& a, const Representation& r, int m);

// Theta^m(f)(x_1..x_m) = sum_k (-1)^{k+1} x_m^k (x) f(x_1..x_{m-1}, X_m^k),
// Theta^0 = +Id (the scalar the degree-0 square forces).
// Codomain: CL^m(Lambda^{n-1} L, L (x) V).
SparseMatrix chain_map_Theta(const NLieAlgebra& a, const Representation& r, int m);

struct CohomologyReport {
  ComplexKind kind = ComplexKind::standard;
  int degree = 0;
  std::int64_t dim_cochains = 0, dim_cocycles = 0, dim_coboundaries = 0, dim_h = 0;
  std::vector<Cochain> representatives;  // echelon basis of a complement of B in Z
};

CohomologyReport cohomology(const NLieAlgebra& a, const Representation& r,
                            ComplexKind kind, int m);

// n = 3: asserts the standard and alternate differentials agree entrywise
// under Lambda^1 L = L. Otherwise produces a structural witness (dimension
// mismatch, or the first differing entry).
struct CoincidenceReport {
  bool coincide = false;
  std::string witness;
};
CoincidenceReport complexes_coincide_check(const NLieAlgebra& a, const Representation& r,
                                           int max_m);

}  // namespace nlie
