#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nlie/rational.hpp"
#include "nlie/wedge.hpp"

namespace nlie {

// First failing instance of a checked identity: which check, on which basis
// tuples, with the two sides that were compared.
struct Violation {
  std::string check;
  std::vector<Tuple> args;
  std::string detail;
};

using CheckResult = std::optional<Violation>;

// n-ary algebra with totally antisymmetric bracket, given by structure
// constants on strictly increasing basis tuples (absent keys are zero).
// Whether the fundamental identity holds is a property to be checked, not an
// invariant of the type.
struct NLieAlgebra {
  int n = 2;
  int dim = 0;
  std::map<Tuple, Vec> c;

  void set_bracket(const Tuple& increasing_args, Vec value);

  // Bracket on basis indices in any order; antisymmetric normalization.
  Vec bracket_basis(const Tuple& args) const;
  // Full multilinear bracket on dense vectors (args.size() == n).
  Vec bracket(const std::vector<Vec>& args) const;
  // Bracket with basis indices except a single vector in one slot.
  Vec bracket_with_vec(Tuple args, std::size_t slot, const Vec& v) const;
};

// Representation (V, mu): mu maps increasing (n-1)-tuples to dim_v x dim_v
// matrices; arbitrary tuples go through sort_with_sign.
struct Representation {
  int n = 2;
  int dim = 0;    // dim of the algebra
  int dim_v = 0;
  std::map<Tuple, Mat> mu;

  void set_mu(const Tuple& increasing_args, Mat m);
  Mat mu_basis(const Tuple& args) const;
  Mat mu_vectors(const std::vector<Vec>& args) const;
  Mat mu_with_vec(Tuple args, std::size_t slot, const Vec& v) const;
};

// Checks Eq. fundamental identity on all increasing (n-1)-tuples x
// increasing n-tuples; first violating pair is returned with both sides.
CheckResult validate_fundamental_identity(const NLieAlgebra& a);

// Checks the two representation axioms on increasing basis tuples.
CheckResult validate_representation(const NLieAlgebra& a, const Representation& r);

// The two-sum commutation identity satisfied by every representation;
// evaluated on all increasing (n)-tuple x (n-2)-tuple pairs.
CheckResult check_rep_identity(const NLieAlgebra& a, const Representation& r);

Representation adjoint_representation(const NLieAlgebra& a);

// Representation on Hom(V, W) via T -> -T . eta(x); W carries no action.
// Flattening of T is row-major over (W index, V index).
Representation hom_representation(const Representation& eta, int dim_w);

// Semidirect sum V (+) L as an n-ary algebra candidate; V-basis first.
NLieAlgebra semidirect_sum_nlie(const NLieAlgebra& a, const Representation& r);

Representation trivial_representation(const NLieAlgebra& a, int dim_v);

// Fixtures.
NLieAlgebra abelian_algebra(int n, int dim);
// (n+1)-dimensional algebra with [e_1,...,^e_i,...,e_{n+1}] = (-1)^i e_i.
NLieAlgebra simple_algebra(int n);
// [e,f]=h, [h,e]=2e, [h,f]=-2f with basis order (e, f, h).
NLieAlgebra sl2();

std::string tuple_str(const Tuple& t);  // 1-based, for witness messages
std::string vec_str(const Vec& v);

}  // namespace nlie
