#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "btalg/classify.hpp"
#include "btalg/oracle.hpp"

using namespace btalg;

namespace {

Poly P(std::initializer_list<long> coeffs) {
  std::vector<GaussianRational> v;
  for (long c : coeffs) v.emplace_back(c);
  return Poly(std::move(v));
}

GeneratorSet<PMElement> diagonal_gens(int n, const Poly& p) {
  GeneratorSet<PMElement> gens;
  for (int r = 0; r < p.degree(); ++r) {
    BlockToeplitz<PMElement> g(n, pm_reduce(Poly::zero(), p));
    g.block(0) = pm_reduce(Poly::x_power(r), p);
    gens.push_back(std::move(g));
  }
  return gens;
}

}  // namespace

TEST_CASE("closure_check") {
  Poly p = Poly::x_power(2);
  auto s = make_singly_gen(p, Poly::x(), Poly::one(), Poly::one());
  CHECK(closure_check(bsg_generators(s, 3)));
  CHECK(closure_check(diagonal_gens(3, p)));

  // Two deliberately incompatible order-1 cyclic diagonals over n = 2:
  // A_1 = 1, A_{-1} = 0 against B_1 = 0, B_{-1} = 1 violates the criterion.
  BlockToeplitz<PMElement> a(2, pm_reduce(Poly::zero(), p));
  a.block(1) = pm_reduce(Poly::one(), p);
  BlockToeplitz<PMElement> b(2, pm_reduce(Poly::zero(), p));
  b.block(-1) = pm_reduce(Poly::one(), p);
  CHECK(!closure_check(GeneratorSet<PMElement>{a, b}));
}

TEST_CASE("compute_s_pm worked examples") {
  Poly p = Poly::x_power(2);
  auto s = make_singly_gen(p, Poly::x(), Poly::one(), Poly::one());
  SPMResult res = compute_s_pm(bsg_generators(s, 2));
  CHECK(res.verdict == Genericity::generic);
  CHECK(res.s_plus == Poly::x());
  CHECK(res.s_minus == Poly::one());

  // All generators upper triangular (offsets >= 1 zero, the below-diagonal
  // side populated).
  auto su = make_singly_gen(p, p, Poly::one(), Poly::one());
  SPMResult up = compute_s_pm(bsg_generators(su, 2));
  CHECK(up.verdict == Genericity::upper);

  // d = 1 generators of a nonzero scalar circulant have unit gcds.
  Poly lin = P({-2, 1});  // X - 2
  auto sc = make_singly_gen(lin, Poly::one(), Poly::one(), Poly::constant(GaussianRational(3)));
  SPMResult flat = compute_s_pm(bsg_generators(sc, 3));
  CHECK(flat.verdict == Genericity::generic);
  CHECK(flat.s_plus == Poly::one());
  CHECK(flat.s_minus == Poly::one());
}

TEST_CASE("compute_s_pm rejects mismatched offset gcds") {
  // n = 3 generator set with offset 1 divisible by X but offset 2 a unit.
  Poly p = Poly::x_power(2);
  BlockToeplitz<PMElement> g(3, pm_reduce(Poly::zero(), p));
  g.block(1) = pm_reduce(Poly::x(), p);
  g.block(2) = pm_reduce(Poly::one(), p);
  g.block(-1) = pm_reduce(Poly::one(), p);
  g.block(-2) = pm_reduce(Poly::one(), p);
  CHECK_THROWS_AS(compute_s_pm({g}), OffsetGcdMismatch);
}

TEST_CASE("find_generic_element") {
  Poly p = Poly::x_power(2);
  auto s = make_singly_gen(p, Poly::x(), Poly::one(), Poly::one());
  auto gens = bsg_generators(s, 2);
  auto generic = find_generic_element(gens, Poly::x(), Poly::one());
  // Reduced residues coprime to p on both sides.
  CHECK(poly_coprime(poly_div_exact(generic.block(1).residue, Poly::x()), p));
  CHECK(poly_coprime(generic.block(-1).residue, p));

  // Single generator whose reduced upper residue is X (s_+ = 1): no
  // combination is ever coprime to X^2.
  BlockToeplitz<PMElement> stuck(2, pm_reduce(Poly::zero(), p));
  stuck.block(1) = pm_reduce(Poly::x(), p);
  stuck.block(-1) = pm_reduce(Poly::one(), p);
  CHECK_THROWS_AS(find_generic_element({stuck}, Poly::one(), Poly::one(), 50),
                  NoGenericElement);
}

TEST_CASE("compute_xi worked examples") {
  // B(X,1,1) over p = X^2: the E generator has a~_1 = 1, a~_{-1} = 1, xi = 1.
  Poly p = Poly::x_power(2);
  BlockToeplitz<PMElement> e(2, pm_reduce(Poly::zero(), p));
  e.block(1) = pm_reduce(Poly::x(), p);
  e.block(-1) = pm_reduce(Poly::one(), p);
  CHECK(compute_xi(e, Poly::x(), Poly::one(), p) == Poly::one());

  // d = 1, p = X - lambda, Pi_2 member: t_1 = 1, t_{-1} = 1/2 gives xi = 2.
  Poly lin = P({-4, 1});  // lambda = 4
  BlockToeplitz<PMElement> t(2, pm_reduce(Poly::zero(), lin));
  t.block(1) = pm_reduce(Poly::one(), lin);
  t.block(-1) = pm_reduce(Poly::constant({Rational(1, 2), Rational(0)}), lin);
  CHECK(compute_xi(t, Poly::one(), Poly::one(), lin) ==
        Poly::constant(GaussianRational(2)));

  // a~_{1-n} sharing a factor with p.
  BlockToeplitz<PMElement> bad(2, pm_reduce(Poly::zero(), p));
  bad.block(1) = pm_reduce(Poly::one(), p);
  bad.block(-1) = pm_reduce(Poly::x(), p);
  CHECK_THROWS_AS(compute_xi(bad, Poly::one(), Poly::one(), p), NotCoprime);
}

TEST_CASE("classify_maximal round trips the worked example") {
  Poly p = Poly::x_power(2);
  auto s = make_singly_gen(p, Poly::x(), Poly::one(), Poly::one());
  auto report = classify_maximal(bsg_generators(s, 2));
  CHECK(report.genericity == Genericity::generic);
  const auto& spec = std::get<SinglyGenSpec>(report.spec.family);
  CHECK(bsg_equal(spec, s));
  CHECK(report.s_plus == Poly::x());
  CHECK(report.s_minus == Poly::one());
  CHECK(report.xi == Poly::one());
}

TEST_CASE("classify_maximal upper and lower verdicts") {
  Poly p = Poly::x_power(2);
  auto su = make_singly_gen(p, p, Poly::one(), Poly::one());
  auto report = classify_maximal(bsg_generators(su, 3));
  CHECK(report.genericity == Genericity::upper);
  CHECK(bsg_equal(std::get<SinglyGenSpec>(report.spec.family), su));

  auto sl = make_singly_gen(p, Poly::one(), p, Poly::one());
  auto rl = classify_maximal(bsg_generators(sl, 3));
  CHECK(rl.genericity == Genericity::lower);
  CHECK(bsg_equal(std::get<SinglyGenSpec>(rl.spec.family), sl));
}

TEST_CASE("classify_maximal scalar circulant semantics") {
  // d = 1, p = X - 4. Members satisfy t_{i-n} = alpha t_i with alpha = 2;
  // condition (c) reads t_i = chi(lambda) t_{i-n}, so chi(lambda) = 1/alpha.
  Poly lin = P({-4, 1});
  GeneratorSet<PMElement> gens;
  BlockToeplitz<PMElement> ident(2, pm_reduce(Poly::zero(), lin));
  ident.block(0) = pm_reduce(Poly::one(), lin);
  gens.push_back(ident);
  BlockToeplitz<PMElement> g(2, pm_reduce(Poly::zero(), lin));
  g.block(1) = pm_reduce(Poly::one(), lin);
  g.block(-1) = pm_reduce(Poly::constant(GaussianRational(2)), lin);
  gens.push_back(g);
  auto report = classify_maximal(gens);
  const auto& spec = std::get<SinglyGenSpec>(report.spec.family);
  CHECK(spec.p_plus == Poly::one());
  CHECK(spec.p_minus == Poly::one());
  CHECK(spec.chi.eval(GaussianRational(4)) ==
        GaussianRational(1) / GaussianRational(2));
}

TEST_CASE("classification round trip on random specs") {
  oracle::Rng rng(113);
  for (int t = 0; t < 15; ++t) {
    int n = rng.int_in(2, 4);
    SinglyGenSpec s = rng.singly_gen(4);
    auto report = classify_maximal(bsg_generators(s, n));
    CHECK(bsg_equal(std::get<SinglyGenSpec>(report.spec.family), s));
    // Lemma 7.2(iv): s_+ s_- divides p.
    if (report.genericity == Genericity::generic) {
      CHECK(poly_divides(report.s_plus * report.s_minus, s.p));
    }
  }
}

TEST_CASE("extension_space") {
  Poly p = Poly::x_power(2);
  auto s = make_singly_gen(p, Poly::x(), Poly::one(), Poly::one());
  auto gens = bsg_generators(s, 2);

  // The extension space of the algebra's own generators is its slice.
  auto ext = extension_space(gens, 1);
  CHECK(ext.size() == bsg_slice_basis(s).size());
  AlgebraSpec spec{2, 2, s};
  for (const auto& d : ext) CHECK(membership(spec, d.embed()));

  // Diagonal-only generators leave every cyclic diagonal compatible.
  auto dg = diagonal_gens(3, p);
  CHECK(extension_space(dg, 1).size() == 2 * p.degree());

  CHECK_THROWS_AS(extension_space(gens, 0), OrderOutOfRange);
  CHECK_THROWS_AS(extension_space(gens, 2), OrderOutOfRange);
}

TEST_CASE("is_maximal") {
  Poly p = Poly::x_power(2);
  auto s = make_singly_gen(p, Poly::x(), Poly::one(), Poly::one());
  CHECK(is_maximal(bsg_generators(s, 2)));

  // The diagonal-only algebra is never maximal.
  CHECK(!is_maximal(diagonal_gens(2, p)));

  // A single cyclic diagonal plus the diagonals is not maximal either.
  auto sub = diagonal_gens(2, p);
  BlockToeplitz<PMElement> one_cd(2, pm_reduce(Poly::zero(), p));
  one_cd.block(1) = pm_reduce(Poly::x(), p);
  sub.push_back(one_cd);
  CHECK(!is_maximal(sub));
}

TEST_CASE("enumerate_xm strata counts") {
  for (int m = 1; m <= 3; ++m) {
    auto strata = enumerate_xm(m, 2);
    CHECK(static_cast<int>(strata.size()) == (m + 1) * (m + 2) / 2);
    int rigid = 0;
    for (const auto& st : strata) {
      if (st.rigid) {
        ++rigid;
        CHECK(st.k_plus + st.k_minus == m);
        CHECK(st.param_dim == 0);
      } else {
        CHECK(st.param_dim == m - st.k_plus - st.k_minus);
      }
      CHECK(st.pseudocirculant == (st.k_plus == 0 || st.k_minus == 0));
    }
    CHECK(rigid == m + 1);
  }
  // m = 1 in detail: parametric (0,0) of dimension 1, rigid (1,0) and (0,1).
  auto strata1 = enumerate_xm(1, 2);
  REQUIRE(strata1.size() == 3);
  CHECK_THROWS_AS(enumerate_xm(0, 2), InvalidParameters);
  CHECK_THROWS_AS(enumerate_xm(1, 1), InvalidParameters);
}

TEST_CASE("xm stratum representatives are maximal") {
  for (int m = 1; m <= 2; ++m) {
    for (int n = 2; n <= 3; ++n) {
      for (const auto& st : enumerate_xm(m, n)) {
        auto spec = xm_stratum_spec(st, m);
        CHECK(is_maximal(bsg_generators(spec, n)));
      }
    }
  }
}

TEST_CASE("xm rigid obstruction") {
  CHECK(xm_rigid_obstruction(1, 1, 2, 2));
  CHECK(xm_rigid_obstruction(1, 2, 3, 2));
  CHECK(xm_rigid_obstruction(2, 1, 3, 3));
  CHECK_THROWS_AS(xm_rigid_obstruction(0, 2, 2, 2), InvalidParameters);
  CHECK_THROWS_AS(xm_rigid_obstruction(1, 1, 3, 2), InvalidParameters);
}

TEST_CASE("Schur algebra maximality") {
  CHECK(schur_is_maximal(1, 1, 2));
  CHECK(schur_is_maximal(1, 2, 2));
  // |p - q| = 0 satisfies the hypothesis |p - q| <= 1.
  CHECK(schur_is_maximal(2, 2, 2));
  CHECK_THROWS_AS(schur_is_maximal(1, 3, 2), InvalidSpec);
  // Generators themselves are closed and pass the O_{p,q} membership test.
  auto gens = schur_generators(1, 2, 2);
  CHECK(closure_check(gens));
  AlgebraSpec spec{2, 3, SchurOpqSpec{1, 2}};
  for (const auto& g : gens) {
    BlockToeplitz<MatrixD> m(g.n, MatrixD(3));
    for (int j = -(g.n - 1); j <= g.n - 1; ++j) m.block(j) = entry_realize(g.block(j));
    CHECK(membership(spec, m));
  }
}

TEST_CASE("completeness at desk scale for p = X^2, n = 2") {
  // Every maximal closed algebra found by extending a compatible cyclic
  // diagonal classifies into the B family (or its upper/lower cases).
  Poly p = Poly::x_power(2);
  oracle::Rng rng(127);
  for (int t = 0; t < 20; ++t) {
    // Random order-1 cyclic diagonal with compatible self-products.
    BlockToeplitz<PMElement> seed(2, pm_reduce(Poly::zero(), p));
    seed.block(1) = rng.pm(p);
    seed.block(-1) = rng.pm(p);
    if (!compatible(seed, seed)) continue;
    auto gens = diagonal_gens(2, p);
    gens.push_back(seed);
    if (!closure_check(gens)) continue;
    // Saturate with the extension space.
    for (const auto& d : extension_space(gens, 1)) gens.push_back(d.embed());
    if (!closure_check(gens)) continue;
    auto report = classify_maximal(gens);
    AlgebraSpec spec = report.spec;
    for (const auto& g : gens) CHECK(membership(spec, g));
  }
}
