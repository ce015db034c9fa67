#include <doctest.h>

#include "nlie/extensions.hpp"

using namespace nlie;

TEST_CASE("derivation checks") {
  NLieAlgebra s3 = simple_algebra(3);
  CHECK_FALSE(is_derivation(s3, Mat(4, 4)));
  // inner derivation ad(e1, e2)
  Representation ad = adjoint_representation(s3);
  CHECK_FALSE(is_derivation(s3, ad.mu_basis({0, 1})));
  // the identity is not a derivation (scales brackets by 1 vs 3)
  CHECK(is_derivation(s3, Mat::identity(4)));
}

TEST_CASE("derivation space dimensions") {
  // every matrix is a derivation of the zero bracket
  CHECK(derivation_space(abelian_algebra(2, 3)).size() == 9);
  // dim Der(sl2) = 3, all inner
  NLieAlgebra a = sl2();
  CHECK(derivation_space(a).size() == 3);
  CHECK(inner_derivation_span(a).size() == 3);
  // simple(3): inner derivations span a subspace of Der
  NLieAlgebra s3 = simple_algebra(3);
  auto der = derivation_space(s3);
  auto inner = inner_derivation_span(s3);
  CHECK(inner.size() <= der.size());
  for (const Mat& m : inner) CHECK_FALSE(is_derivation(s3, m));
  for (const Mat& m : der) CHECK_FALSE(is_derivation(s3, m));
}

TEST_CASE("inner generalized derivations pass all three axioms") {
  NLieAlgebra s3 = simple_algebra(3);
  for (int y = 0; y < 4; ++y) {
    GenDer g = inner_gen_der(s3, y);
    GenDerReport rep = is_generalized_derivation(s3, g);
    CHECK(rep.all_ok());
    CHECK_FALSE(gen_der_cocycle_check(s3, g));
    CHECK_FALSE(leibniz_derivation_lift_check(s3, g));
  }
  GenDer zero;
  zero.n = 3;
  zero.dim = 4;
  CHECK(is_generalized_derivation(s3, zero).all_ok());
  CHECK_FALSE(gen_der_cocycle_check(s3, zero));
  CHECK_FALSE(leibniz_derivation_lift_check(s3, zero));
}

TEST_CASE("a random map typically violates the axioms, reported per axiom") {
  NLieAlgebra s3 = simple_algebra(3);
  GenDer g;
  g.n = 3;
  g.dim = 4;
  g.d[{0, 1}] = Vec{rat(1), rat(0), rat(2), rat(0)};
  g.d[{1, 2}] = Vec{rat(0), rat(1), rat(0), rat(-1)};
  GenDerReport rep = is_generalized_derivation(s3, g);
  CHECK((rep.axiom1 || rep.axiom2 || rep.axiom3));
  if (rep.axiom1) CHECK(rep.axiom1->check == "gen-der-axiom-I");
}

TEST_CASE("d_sharp packages D as a gl(L)-valued alternate 1-cochain") {
  NLieAlgebra s3 = simple_algebra(3);
  GenDer zero;
  zero.n = 3;
  zero.dim = 4;
  CHECK(is_zero(d_sharp(s3, zero).coeffs));

  GenDer g = inner_gen_der(s3, 0);
  Cochain ds = d_sharp(s3, g);
  CHECK(ds.degree == 1);
  // n=3: D#(x)(y) = D(x, y)
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) {
      Vec v = g.eval_with_vec({x, 0}, 1, basis_vec(std::size_t(y), 4));
      for (int r = 0; r < 4; ++r)
        CHECK(ds.coeffs[std::size_t(x * 16 + r * 4 + y)] == v[std::size_t(r)]);
    }
}

TEST_CASE("axiom I holds iff every D#(w) is a derivation") {
  NLieAlgebra s3 = simple_algebra(3);
  auto check_equiv = [&](const GenDer& g) {
    GenDerReport rep = is_generalized_derivation(s3, g);
    bool all_der = true;
    for (std::int64_t wi = 0; wi < binomial(4, 1); ++wi) {
      Tuple w = wedge_unrank(wi, 1, 4);
      Mat m(4, 4);
      Tuple args = w;
      args.push_back(0);
      for (int y = 0; y < 4; ++y) {
        args.back() = y;
        Vec v = g.eval_basis(args);
        for (int r = 0; r < 4; ++r) m.at(r, y) = v[std::size_t(r)];
      }
      if (is_derivation(s3, m)) all_der = false;
    }
    CHECK(bool(rep.axiom1) == !all_der);
  };
  check_equiv(inner_gen_der(s3, 2));
  GenDer junk;
  junk.n = 3;
  junk.dim = 4;
  junk.d[{0, 2}] = Vec{rat(0), rat(3), rat(0), rat(1)};
  check_equiv(junk);
}

TEST_CASE("solved I+II family: every member's D# is an exact cocycle") {
  std::vector<NLieAlgebra> algebras;
  algebras.push_back(simple_algebra(3));
  algebras.push_back(abelian_algebra(3, 3));
  algebras.push_back(abelian_algebra(3, 4));
  for (const NLieAlgebra& a : algebras) {
    auto family = gen_der_family_I_II(a);
    CHECK(!family.empty());
    for (const GenDer& g : family) {
      GenDerReport rep = is_generalized_derivation(a, g);
      CHECK_FALSE(rep.axiom1);
      CHECK_FALSE(rep.axiom2);
      CHECK_FALSE(gen_der_cocycle_check(a, g));
      CHECK_FALSE(leibniz_derivation_lift_check(a, g));
    }
  }
}

TEST_CASE("generalized derivation extension") {
  NLieAlgebra s3 = simple_algebra(3);
  // D = 0: direct sum with a 1-dimensional abelian factor
  GenDer zero;
  zero.n = 3;
  zero.dim = 4;
  NLieAlgebra e0 = gen_der_extension(s3, zero);
  CHECK(e0.dim == 5);
  CHECK_FALSE(validate_fundamental_identity(e0));

  // inner ad_{e1}
  NLieAlgebra e1 = gen_der_extension(s3, inner_gen_der(s3, 0));
  CHECK_FALSE(validate_fundamental_identity(e1));

  // corrupt D: the FI fails with a witness
  GenDer bad = inner_gen_der(s3, 0);
  bad.d[{2, 3}] = Vec{rat(1), rat(1), rat(0), rat(0)};
  REQUIRE_FALSE(is_generalized_derivation(s3, bad).all_ok());
  CHECK(validate_fundamental_identity(gen_der_extension(s3, bad)));
}

TEST_CASE("n = 2 extension reproduces the Lie derivation-extension bracket") {
  NLieAlgebra a = sl2();
  auto ders = derivation_space(a);
  REQUIRE(!ders.empty());
  const Mat& f = ders[0];
  GenDer g;
  g.n = 2;
  g.dim = 3;
  for (int i = 0; i < 3; ++i) {
    Vec col(3);
    for (int r = 0; r < 3; ++r) col[std::size_t(r)] = f.at(r, i);
    if (!is_zero(col)) g.d[{i}] = col;
  }
  NLieAlgebra ext = gen_der_extension(a, g);
  CHECK_FALSE(validate_fundamental_identity(ext));
  // bracket table: [(X, p), (Y, q)] = ([X,Y] + p f(Y) - q f(X), 0);
  // on basis pairs (e_i, k-generator): [e_i + 0, 0 + 1] = -f(e_i) ... with
  // our storage [e_i, e_4] = (-1)^{n+1} D(e_i) = -D(e_i) for n = 2
  for (int i = 0; i < 3; ++i) {
    Vec v = ext.bracket_basis({i, 3});
    Vec expect = zero_vec(4);
    for (int r = 0; r < 3; ++r) expect[std::size_t(r)] = -f.at(r, i);
    CHECK(v == expect);
  }
}

TEST_CASE("abelian extension: FI iff delta f = 0") {
  NLieAlgebra s3 = simple_algebra(3);
  Representation ad = adjoint_representation(s3);
  SparseMatrix d2 = delta_standard(s3, ad, 2);
  SparseMatrix d1 = delta_standard(s3, ad, 1);

  // f = 0: semidirect sum
  Vec zero = zero_vec(std::size_t(d2.cols()));
  CHECK_FALSE(validate_fundamental_identity(abelian_extension(s3, ad, zero)));

  // coboundaries are cocycles
  RatSampler rnd(7);
  for (int t = 0; t < 5; ++t) {
    Vec h = rnd.vec(std::size_t(d1.cols()));
    Vec f = d1.apply(h);
    CHECK(is_zero(d2.apply(f)));
    CHECK_FALSE(validate_fundamental_identity(abelian_extension(s3, ad, f)));
  }

  // kernel cocycles give valid extensions
  auto zbasis = kernel_basis(d2);
  int tested = 0;
  for (const Vec& z : zbasis) {
    if (tested++ > 5) break;
    CHECK_FALSE(validate_fundamental_identity(abelian_extension(s3, ad, z)));
  }

  // random non-cocycles: FI violation and delta f != 0, jointly
  for (int t = 0; t < 5; ++t) {
    Vec f = rnd.vec(std::size_t(d2.cols()));
    if (is_zero(d2.apply(f))) continue;
    CHECK(validate_fundamental_identity(abelian_extension(s3, ad, f)));
  }
}

TEST_CASE("extension equivalence solver round-trips") {
  NLieAlgebra s3 = simple_algebra(3);
  Representation tr = trivial_representation(s3, 2);
  SparseMatrix d2 = delta_standard(s3, tr, 2);
  SparseMatrix d1 = delta_standard(s3, tr, 1);
  auto zbasis = kernel_basis(d2);
  REQUIRE(!zbasis.empty());
  RatSampler rnd(11);

  // f = g: h = 0 works
  const Vec& f = zbasis[0];
  auto h0 = extensions_equivalent(s3, tr, f, f);
  REQUIRE(h0);
  CHECK(is_zero(d1.apply(*h0)));

  // g = f + delta(h0): the recovered h satisfies delta h = f - g = -delta h0
  Vec hh = rnd.vec(std::size_t(d1.cols()));
  Vec g = f + d1.apply(hh);
  auto h = extensions_equivalent(s3, tr, f, g);
  REQUIRE(h);
  CHECK(d1.apply(*h) == Rat(-1) * d1.apply(hh));

  // non-cocycle inputs rejected
  Vec junk = rnd.vec(std::size_t(d2.cols()));
  if (!is_zero(d2.apply(junk)))
    CHECK_THROWS_AS((void)extensions_equivalent(s3, tr, f, junk), std::invalid_argument);
}

TEST_CASE("distinct cohomology classes are not equivalent") {
  // simple(3) with trivial 1-dim coefficients: check a representative class
  NLieAlgebra s3 = simple_algebra(3);
  Representation tr = trivial_representation(s3, 1);
  CohomologyReport h2 = cohomology(s3, tr, ComplexKind::standard, 2);
  if (h2.dim_h > 0) {
    const Vec& f = h2.representatives[0].coeffs;
    Vec zero = zero_vec(f.size());
    CHECK_FALSE(extensions_equivalent(s3, tr, f, zero));
  }
}

TEST_CASE("infinitesimal deformations") {
  NLieAlgebra s3 = simple_algebra(3);
  Representation ad = adjoint_representation(s3);
  SparseMatrix d1 = delta_standard(s3, ad, 1);
  SparseMatrix d2 = delta_standard(s3, ad, 2);

  Vec zero = zero_vec(std::size_t(d2.cols()));
  CHECK_FALSE(infinitesimal_deformation_check(s3, zero));
  auto g0 = deformations_equivalent(s3, zero, zero);
  REQUIRE(g0);
  CHECK(is_zero(d1.apply(*g0)));

  RatSampler rnd(13);
  Vec gg = rnd.vec(std::size_t(d1.cols()));
  Vec eta = d1.apply(gg);
  CHECK_FALSE(infinitesimal_deformation_check(s3, eta));
  auto g = deformations_equivalent(s3, eta, zero_vec(eta.size()));
  REQUIRE(g);
  CHECK(d1.apply(*g) == eta);

  // a single structure-constant perturbation as a basis 2-cochain: the exact
  // delta computation decides
  Vec basis_cochain = zero_vec(std::size_t(d2.cols()));
  basis_cochain[0] = rat(1);
  bool is_cocycle = is_zero(d2.apply(basis_cochain));
  CHECK(bool(infinitesimal_deformation_check(s3, basis_cochain)) == !is_cocycle);
}

TEST_CASE("axiom II violations break the Leibniz derivation lift") {
  NLieAlgebra s3 = simple_algebra(3);
  GenDer bad;
  bad.n = 3;
  bad.dim = 4;
  bad.d[{0, 1}] = Vec{rat(0), rat(0), rat(1), rat(0)};
  GenDerReport rep = is_generalized_derivation(s3, bad);
  REQUIRE(rep.axiom2);
  CHECK(leibniz_derivation_lift_check(s3, bad));
}
