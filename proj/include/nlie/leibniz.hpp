#pragma once

#include <map>
#include <utility>
#include <vector>

#include "nlie/algebra.hpp"
#include "nlie/sparse.hpp"

namespace nlie {

// Bilinear bracket on ordered basis pairs; no symmetry assumed. The left
// Leibniz identity is a property checked by validate_leibniz.
struct LeibnizAlgebra {
  int dim = 0;
  std::map<std::pair<int, int>, Vec> br;

  Vec bracket_basis(int i, int j) const;
  Vec bracket(const Vec& x, const Vec& y) const;
};

// Pair of actions (lambda, rho) = (left, right) on a dim_v-dimensional
// space, one matrix per basis element of the algebra.
struct LeibnizRep {
  int dim_l = 0;
  int dim_v = 0;
  std::vector<Mat> lambda, rho;

  static LeibnizRep zero(int dim_l, int dim_v);
  Mat lam_vec(const Vec& x) const;
  Mat rho_vec(const Vec& x) const;
};

CheckResult validate_leibniz(const LeibnizAlgebra& lb);        // left identity
CheckResult validate_leibniz_right(const LeibnizAlgebra& lb);  // right identity
CheckResult validate_leibniz_rep(const LeibnizAlgebra& lb, const LeibnizRep& r);

// The Leibniz bracket on Lambda^{n-1} L induced by an n-ary algebra:
// [x, y] = sum_k y^1 ^ ... ^ [x^1..x^{n-1}, y^k] ^ ... ^ y^{n-1}.
LeibnizAlgebra induced_leibniz(const NLieAlgebra& a);

// L as a symmetric representation of Lambda^{n-1} L:
// x |> y = [x^1..x^{n-1}, y], y <| x = -x |> y.
LeibnizRep fundamental_rep(const NLieAlgebra& a);

// Adjoint pair (ad^L, ad^R) of a Leibniz algebra on itself.
LeibnizRep adjoint_pair(const LeibnizAlgebra& lb);

// V^sym = { v : x |> v + v <| x = 0 for all x }, with the induced action.
struct SubRepresentation {
  std::vector<Vec> basis;  // vectors in V spanning the subspace
  LeibnizRep rep;          // action in the basis above
};
SubRepresentation sym_subrep(const LeibnizAlgebra& lb, const LeibnizRep& r);

// V_anti = span{ x |> v + v <| x } and the quotient representation on
// V / V_anti (basis: classes of the non-pivot standard basis vectors).
struct QuotientRepresentation {
  std::vector<Vec> anti_basis;             // echelon basis of V_anti
  std::vector<std::size_t> complement;     // standard basis columns spanning V/V_anti
  LeibnizRep anti_rep;                     // action restricted to V_anti
  LeibnizRep quotient_rep;                 // action on V / V_anti
};
QuotientRepresentation antisym_kernel(const LeibnizAlgebra& lb, const LeibnizRep& r);

// V (+) L with [(v,x),(w,y)] = (x |> w + v <| y, [x,y]); V-basis first.
LeibnizAlgebra semidirect_sum_leibniz(const LeibnizAlgebra& lb, const LeibnizRep& r);

// Loday-Pirashvili differential d : CL^m -> CL^{m+1} on Hom(L^{(x)m}, V).
SparseMatrix leibniz_differential(const LeibnizAlgebra& lb, const LeibnizRep& r, int m);

// The two induced representations of Lambda^{n-1} L attached to an n-ary
// representation (V, mu): on Lambda^{n-2} L (x) V and on L (x) V.
LeibnizRep rep_on_Ln2_tensor_V(const NLieAlgebra& a, const Representation& r);
LeibnizRep rep_on_L_tensor_V(const NLieAlgebra& a, const Representation& r);

// Symmetric action of Lambda^{n-1} L on degree-m standard cochains
// (z |> f)(x_1..x_{m-1}, y) =
//     mu(z) f(...) - sum_k f(.., [z, x_k], ..) - f(.., [z, y]),
// with f <| z = -z |> f. Degree 0 carries the wedge-slot action of
// rep_on_Ln2_tensor_V's left half (forced by equivariance of delta^0).
LeibnizRep rep_on_cochains(const NLieAlgebra& a, const Representation& r, int m);

}  // namespace nlie
