#pragma once

#include <map>
#include <optional>
#include <vector>

#include "nlie/algebra.hpp"
#include "nlie/complexes.hpp"

namespace nlie {

// Checks D([x_1..x_n]) = sum_k [x_1,..,D(x_k),..,x_n] on increasing tuples.
CheckResult is_derivation(const NLieAlgebra& a, const Mat& d);

// Exact basis of the derivation algebra Der(A), as dim x dim matrices.
std::vector<Mat> derivation_space(const NLieAlgebra& a);

// Echelon basis of the span of the inner derivations ad(w), w a basis wedge.
std::vector<Mat> inner_derivation_span(const NLieAlgebra& a);

// D : Lambda^{n-1} L -> L on increasing (n-1)-tuples, extended
// antisymmetrically. Candidate generalized derivation.
struct GenDer {
  int n = 2, dim = 0;
  std::map<Tuple, Vec> d;

  Vec eval_basis(const Tuple& args) const;
  Vec eval_with_vec(Tuple args, std::size_t slot, const Vec& v) const;
  Vec coords() const;  // against [Lambda^{n-1}(dim), dim], wedge slowest
  static GenDer from_coords(int n, int dim, const Vec& coords);
};

// ad_y(z_1..z_{n-1}) = [y, z_1, .., z_{n-1}].
GenDer inner_gen_der(const NLieAlgebra& a, int y);

struct GenDerReport {
  CheckResult axiom1, axiom2, axiom3;
  bool all_ok() const { return !axiom1 && !axiom2 && !axiom3; }
};
GenDerReport is_generalized_derivation(const NLieAlgebra& a, const GenDer& d);

// D^#(x_1..x_{n-2})(y) = D(x_1..x_{n-2}, y), packaged as a degree-1
// alternate cochain with coefficients in gl(L) (= Hom(L, L), row-major).
Cochain d_sharp(const NLieAlgebra& a, const GenDer& d);

// The gl(L)-valued representation behind d_sharp: hom_representation of the
// adjoint with W = L.
Representation gl_coefficients(const NLieAlgebra& a);

// delta_alternate at degree 1 applied to d_sharp(D); exact zero expected
// whenever axiom II holds.
CheckResult gen_der_cocycle_check(const NLieAlgebra& a, const GenDer& d);

// One-dimensional extension L (+)_D k; the extra generator is the last
// basis vector.
NLieAlgebra gen_der_extension(const NLieAlgebra& a, const GenDer& d);

// V (x)_f L on V (+) L with the (-1)^{n+1}-signed bracket; f is a degree-2
// standard cochain. Never refuses to build: the FI validator is the test.
NLieAlgebra abelian_extension(const NLieAlgebra& a, const Representation& r, const Vec& f);

// Solves delta h = f - g at degree 1 and verifies that v + x -> v + h(x) + x
// intertwines the two extension brackets. Requires both inputs to be
// cocycles.
std::optional<Vec> extensions_equivalent(const NLieAlgebra& a, const Representation& r,
                                         const Vec& f, const Vec& g);

// Infinitesimal deformation eta in C^2(L, L): cocycle check and equivalence
// via delta g.
CheckResult infinitesimal_deformation_check(const NLieAlgebra& a, const Vec& eta);
std::optional<Vec> deformations_equivalent(const NLieAlgebra& a, const Vec& eta1,
                                           const Vec& eta2);

// Lifts D to the semidirect Leibniz algebra L x| Lambda^{n-1} L by
// D(y + x) := D(x) and checks the Leibniz derivation identity.
CheckResult leibniz_derivation_lift_check(const NLieAlgebra& a, const GenDer& d);

// Exact solution space of the linear axioms I and II (axiom III is
// quadratic and is checked pointwise on candidates).
std::vector<GenDer> gen_der_family_I_II(const NLieAlgebra& a);

}  // namespace nlie
