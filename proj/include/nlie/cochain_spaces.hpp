#pragma once

#include "nlie/wedge.hpp"

namespace nlie {

// Coordinate layouts of the cochain spaces. All complexes are laid out
// row-major over their factors with the coefficient index fastest, so a
// cochain is a plain vector against its descriptor.
//
// standard:  C^0 = Lambda^{n-2} L (x) V,
//            C^m = Hom( (Lambda^{n-1} L)^{(x)(m-1)} (x) L, V ), m >= 1.
// alternate: C^0 = L (x) V,
//            C^m = Hom( (Lambda^{n-1} L)^{(x)(m-1)} (x) Lambda^{n-2} L, V ).
// lie:       C^m = Hom( Lambda^m g, V )   (n = 2 only).
// leibniz:   CL^m = Hom( A^{(x) m}, W )   for a Leibniz algebra A.
//
// The first m-1 slots of the standard/alternate complexes are unrestricted
// tensor powers of the wedge space: the differential brackets pairs of slots
// in place and is not alternating across them.

inline BasisDescriptor standard_cochain_desc(int n, int d, int dim_v, int m) {
  BasisDescriptor b;
  if (m == 0) {
    b.factors.push_back(Factor::lam(n - 2, d));
  } else {
    for (int i = 0; i < m - 1; ++i) b.factors.push_back(Factor::lam(n - 1, d));
    b.factors.push_back(Factor::plain(d));
  }
  b.factors.push_back(Factor::plain(dim_v));
  return b;
}

inline BasisDescriptor alternate_cochain_desc(int n, int d, int dim_v, int m) {
  BasisDescriptor b;
  if (m == 0) {
    b.factors.push_back(Factor::plain(d));
  } else {
    for (int i = 0; i < m - 1; ++i) b.factors.push_back(Factor::lam(n - 1, d));
    b.factors.push_back(Factor::lam(n - 2, d));
  }
  b.factors.push_back(Factor::plain(dim_v));
  return b;
}

inline BasisDescriptor lie_cochain_desc(int d, int dim_v, int m) {
  BasisDescriptor b;
  b.factors.push_back(Factor::lam(m, d));
  b.factors.push_back(Factor::plain(dim_v));
  return b;
}

inline BasisDescriptor leibniz_cochain_desc(int dim_l, int dim_w, int m) {
  BasisDescriptor b;
  for (int i = 0; i < m; ++i) b.factors.push_back(Factor::plain(dim_l));
  b.factors.push_back(Factor::plain(dim_w));
  return b;
}

}  // namespace nlie
