#pragma once

#include <map>
#include <string>
#include <vector>

#include "nlie/algebra.hpp"
#include "nlie/complexes.hpp"
#include "nlie/extensions.hpp"
#include "nlie/leibniz.hpp"

namespace nlie {

// Coordinate subalgebra/ideal: K is spanned by the listed basis vectors.
struct SubalgebraSpec {
  std::vector<int> indices;  // 0-based, strictly increasing
  bool ideal = false;
};

// Closure check: subalgebra needs all-K brackets inside K; an ideal needs
// every bracket with at least one K argument inside K.
CheckResult validate_subalgebra(const NLieAlgebra& a, const SubalgebraSpec& k);

// Largest j with f in F_j, where a degree-m basis cochain lies in F_j iff
// its argument tuple has at most (m-j)(n-1) flattened arguments in K (each
// wedge slot counts its n-1 components, the final slot counts 1). Returns
// m+1 for f = 0. Degree-0 cochains have no arguments: level 0.
int filtration_level(const NLieAlgebra& a, const SubalgebraSpec& k, int m, const Vec& f);

// Coordinates of C^m in the E_0^{j,i} band, i = m - j:
// (i-1)(n-1) < #K-args <= i(n-1).
std::vector<std::int64_t> band_coords(const NLieAlgebra& a, int dim_v,
                                      const SubalgebraSpec& k, int m, int j);

struct SpectralPage {
  int r = 0;
  std::map<std::pair<int, int>, std::int64_t> dims;  // (j, i) -> dimension
  std::vector<std::string> notes;
};

// E_1 computed two independent ways on the window i + j <= degree_bound:
// (a) homology of the induced differential on the associated graded bands;
// (b) Leibniz cohomology HL^i(K_{n-1}, C^j(L/K, V)) with the quotient-
// cochain action. agree == true iff the dimensions match cellwise.
struct E1Result {
  SpectralPage page;  // graded-route dimensions
  std::map<std::pair<int, int>, std::pair<std::int64_t, std::int64_t>> routes;
  bool agree = true;
};
E1Result e1_page(const NLieAlgebra& a, const Representation& r, const SubalgebraSpec& k,
                 int degree_bound);

// E_2^{j,i} = H^j(L/K, HL^i(K_{n-1}, V)) for a commuting ideal K. The
// hypothesis check (mixed brackets and mixed mu vanish) and the
// K_{n-1}-annihilation identity on representatives are part of the result.
struct E2Result {
  SpectralPage page;
  CheckResult hypothesis;             // nullopt when satisfied
  CheckResult action_representation;  // validate_representation of the eta action
  bool annihilation_ok = true;        // eta(z)f = d(f_z) on representatives, z in K_{n-1}
};
E2Result e2_page(const NLieAlgebra& a, const Representation& r, const SubalgebraSpec& k,
                 int degree_bound);

// Direct per-degree comparison dim H^m(L (+)_D k, V) vs dim H^m(L, V|_L),
// no spectral machinery.
struct ExtCohomologyCompare {
  std::vector<std::int64_t> dims_ext, dims_base;  // index m
  bool all_equal = true;
};
ExtCohomologyCompare gen_der_ext_cohomology_compare(const NLieAlgebra& a, const GenDer& d,
                                                    const Representation& r_ext, int m_max);

// Restriction of a representation of gen_der_extension(a, d) back to a.
Representation restrict_to_base(const NLieAlgebra& a, const Representation& r_ext);

}  // namespace nlie
