#include <doctest.h>

#include "nlie/algebra.hpp"

using namespace nlie;

TEST_CASE("bracket evaluation") {
  NLieAlgebra ab = abelian_algebra(3, 4);
  std::vector<Vec> args{basis_vec(0, 4), basis_vec(1, 4), basis_vec(2, 4)};
  CHECK(is_zero(ab.bracket(args)));

  NLieAlgebra s3 = simple_algebra(3);
  CHECK(s3.bracket_basis({0, 1, 2}) == basis_vec(3, 4));
  // antisymmetry: repeated argument kills the bracket
  std::vector<Vec> rep{basis_vec(0, 4), basis_vec(0, 4), basis_vec(1, 4)};
  CHECK(is_zero(s3.bracket(rep)));
  // odd permutation flips sign
  CHECK(s3.bracket_basis({1, 0, 2}) == Rat(-1) * basis_vec(3, 4));
}

TEST_CASE("bracket is multilinear and alternating on random vectors") {
  NLieAlgebra s3 = simple_algebra(3);
  RatSampler rnd(2024);
  for (int trial = 0; trial < 20; ++trial) {
    Vec u = rnd.vec(4), v = rnd.vec(4), w = rnd.vec(4);
    Rat c = rnd();
    // linearity in the first slot
    Vec lhs = s3.bracket({u + c * v, v, w});
    Vec rhs = s3.bracket({u, v, w}) + c * s3.bracket({v, v, w});
    CHECK(lhs == rhs);
    // alternating
    CHECK(is_zero(s3.bracket({u, u, w})));
    CHECK(s3.bracket({u, v, w}) == Rat(-1) * s3.bracket({v, u, w}));
  }
}

TEST_CASE("fundamental identity validators") {
  CHECK_FALSE(validate_fundamental_identity(abelian_algebra(4, 6)));
  CHECK_FALSE(validate_fundamental_identity(simple_algebra(2)));
  CHECK_FALSE(validate_fundamental_identity(simple_algebra(3)));
  CHECK_FALSE(validate_fundamental_identity(simple_algebra(4)));
  CHECK_FALSE(validate_fundamental_identity(sl2()));

  // perturb one constant of simple(3): [e1,e2,e3] = e1 instead of e4
  NLieAlgebra broken = simple_algebra(3);
  broken.c[{0, 1, 2}] = basis_vec(0, 4);
  auto w = validate_fundamental_identity(broken);
  REQUIRE(w);
  CHECK(w->check == "fundamental-identity");
  CHECK(w->args.size() == 2);
}

TEST_CASE("adjoint representation") {
  NLieAlgebra ab = abelian_algebra(3, 4);
  CHECK(adjoint_representation(ab).mu.empty());

  NLieAlgebra s3 = simple_algebra(3);
  Representation ad = adjoint_representation(s3);
  Vec img = ad.mu_basis({0, 1}).apply(basis_vec(2, 4));
  CHECK(img == basis_vec(3, 4));
  CHECK_FALSE(validate_representation(s3, ad));
  CHECK_FALSE(check_rep_identity(s3, ad));

  NLieAlgebra s4 = simple_algebra(4);
  CHECK_FALSE(validate_representation(s4, adjoint_representation(s4)));
  CHECK_FALSE(validate_representation(sl2(), adjoint_representation(sl2())));
}

TEST_CASE("zero representation always validates") {
  NLieAlgebra s3 = simple_algebra(3);
  Representation z = trivial_representation(s3, 3);
  CHECK_FALSE(validate_representation(s3, z));
  CHECK_FALSE(check_rep_identity(s3, z));
}

TEST_CASE("a corrupted mu fails validation") {
  NLieAlgebra s3 = simple_algebra(3);
  Representation ad = adjoint_representation(s3);
  Mat junk(4, 4);
  junk.at(0, 0) = rat(1);
  junk.at(1, 3) = rat(2);
  ad.set_mu({0, 1}, junk);
  CHECK(validate_representation(s3, ad));
}

TEST_CASE("hom representation") {
  NLieAlgebra s3 = simple_algebra(3);
  Representation ad = adjoint_representation(s3);

  Representation zero_eta = trivial_representation(s3, 2);
  CHECK(hom_representation(zero_eta, 3).mu.empty());

  Representation hom = hom_representation(ad, 2);
  CHECK(hom.dim_v == 8);
  CHECK_FALSE(validate_representation(s3, hom));
  CHECK_FALSE(check_rep_identity(s3, hom));

  // dim_w = 1 recovers the dual-type action v* -> -v* . eta(x)
  Representation dual = hom_representation(ad, 1);
  CHECK(dual.dim_v == 4);
  Mat m01 = ad.mu_basis({0, 1});
  Mat d01 = dual.mu_basis({0, 1});
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q) CHECK(d01.at(p, q) == -m01.at(q, p));
}

TEST_CASE("semidirect sum is an n-Lie algebra iff mu is a representation") {
  NLieAlgebra ab = abelian_algebra(3, 2);
  Representation zr = trivial_representation(ab, 3);
  NLieAlgebra sd0 = semidirect_sum_nlie(ab, zr);
  CHECK(sd0.dim == 5);
  CHECK(sd0.c.empty());
  CHECK_FALSE(validate_fundamental_identity(sd0));

  NLieAlgebra s3 = simple_algebra(3);
  CHECK_FALSE(validate_fundamental_identity(semidirect_sum_nlie(s3, adjoint_representation(s3))));

  // corrupt one matrix: the semidirect sum must fail the FI
  Representation bad = adjoint_representation(s3);
  Mat junk(4, 4);
  junk.at(2, 1) = rat(1);
  bad.set_mu({0, 3}, bad.mu_basis({0, 3}) + junk);
  REQUIRE(validate_representation(s3, bad));
  CHECK(validate_fundamental_identity(semidirect_sum_nlie(s3, bad)));
}

TEST_CASE("semidirect sum respects mu and the base bracket") {
  NLieAlgebra s3 = simple_algebra(3);
  Representation ad = adjoint_representation(s3);
  NLieAlgebra sd = semidirect_sum_nlie(s3, ad);
  // [v, x_2, x_3] = mu(x_2, x_3)(v): v = e_0 of V, L indices start at 4
  Vec val = sd.bracket_basis({0, 5, 6});
  Vec expect = zero_vec(8);
  Vec mu_v = ad.mu_basis({1, 2}).apply(basis_vec(0, 4));
  for (int i = 0; i < 4; ++i) expect[std::size_t(i)] = mu_v[std::size_t(i)];
  CHECK(val == expect);
  // pure L part embeds the original bracket
  Vec lv = sd.bracket_basis({4, 5, 6});
  CHECK(lv == Vec{rat(0), rat(0), rat(0), rat(0), rat(0), rat(0), rat(0), rat(1)});
}

TEST_CASE("degenerate dimensions are handled, not rejected") {
  // dim < n: the bracket is necessarily zero
  NLieAlgebra tiny = abelian_algebra(4, 2);
  CHECK_FALSE(validate_fundamental_identity(tiny));
  CHECK_FALSE(validate_representation(tiny, adjoint_representation(tiny)));
  // dim = 0
  NLieAlgebra empty = abelian_algebra(3, 0);
  CHECK_FALSE(validate_fundamental_identity(empty));
}
