#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "btalg/oracle.hpp"
#include "btalg/toeplitz.hpp"

using namespace btalg;

namespace {

// n=2, d=1 scalar Toeplitz matrix with given (t_{-1}, t_0, t_1) over p = X - 0.
BlockToeplitz<PMElement> scalar2(long bottom, long diag, long top) {
  Poly p = Poly::x();  // M = (0), P(M) = scalars
  BlockToeplitz<PMElement> t(2, pm_reduce(Poly::zero(), p));
  t.block(-1) = pm_reduce(Poly::constant(GaussianRational(bottom)), p);
  t.block(0) = pm_reduce(Poly::constant(GaussianRational(diag)), p);
  t.block(1) = pm_reduce(Poly::constant(GaussianRational(top)), p);
  return t;
}

}  // namespace

TEST_CASE("to_full layout") {
  auto a = scalar2(1, 5, 2);
  auto full = to_full(a);
  CHECK(full.at(0, 0) == a.block(0));
  CHECK(full.at(0, 1) == a.block(-1));
  CHECK(full.at(1, 0) == a.block(1));
  CHECK(full.at(1, 1) == a.block(0));
  CHECK(is_block_toeplitz(full));
  CHECK(toeplitz_from_full(full) == a);
}

TEST_CASE("is_block_toeplitz detects unequal diagonals") {
  Poly p = Poly::x();
  BlockMatrix<PMElement> m(2, pm_reduce(Poly::zero(), p));
  m.at(1, 0) = pm_reduce(Poly::one(), p);
  CHECK(is_block_toeplitz(m));
  m.at(1, 1) = pm_reduce(Poly::constant(GaussianRational(2)), p);
  CHECK(!is_block_toeplitz(m));
}

TEST_CASE("compatible: n=2 d=1 worked examples") {
  // A1=2, A-1=1; B1=4, B-1=2: 2*2 = 1*4.
  CHECK(compatible(scalar2(1, 0, 2), scalar2(2, 0, 4)));
  // A1=1, A-1=0; B1=0, B-1=1: 1*1 != 0*0.
  CHECK(!compatible(scalar2(0, 0, 1), scalar2(1, 0, 0)));
}

TEST_CASE("diagonal B is compatible with everything") {
  oracle::Rng rng(31);
  for (int t = 0; t < 40; ++t) {
    int n = rng.int_in(2, 5);
    Poly p = rng.monic_poly(rng.int_in(1, 3));
    auto a = rng.toeplitz_pm(n, p);
    BlockToeplitz<PMElement> b(n, pm_reduce(Poly::zero(), p));
    b.block(0) = rng.pm(p);
    CHECK(compatible(a, b));
    CHECK(compatible(b, a));
  }
}

TEST_CASE("compatibility criterion matches dense diagonal scan") {
  oracle::Rng rng(37);
  for (int t = 0; t < 150; ++t) {
    int n = rng.int_in(2, 6);
    int d = rng.int_in(1, 4);
    Poly p = rng.monic_poly(d);
    auto a = rng.toeplitz_pm(n, p);
    auto b = rng.toeplitz_pm(n, p);
    Mat dense = oracle::dense_mul(oracle::realize_scalar(a), oracle::realize_scalar(b));
    CHECK(compatible(a, b) == oracle::dense_block_toeplitz(dense, n, d));
  }
}

TEST_CASE("product returns the Toeplitz reading exactly when compatible") {
  oracle::Rng rng(41);
  for (int t = 0; t < 60; ++t) {
    int n = rng.int_in(2, 4);
    Poly p = rng.monic_poly(rng.int_in(1, 3));
    auto a = rng.toeplitz_pm(n, p);
    auto b = rng.toeplitz_pm(n, p);
    auto res = product(a, b);
    CHECK(oracle::realize_scalar(res.full) ==
          oracle::dense_mul(oracle::realize_scalar(a), oracle::realize_scalar(b)));
    CHECK(res.toeplitz == is_block_toeplitz(res.full));
    if (res.toeplitz) {
      REQUIRE(res.as_toeplitz.has_value());
      CHECK(to_full(*res.as_toeplitz) == res.full);
    }
    // identity
    BlockToeplitz<PMElement> id(n, pm_reduce(Poly::zero(), p));
    id.block(0) = pm_reduce(Poly::one(), p);
    auto ai = product(a, id);
    CHECK(ai.toeplitz);
    CHECK(*ai.as_toeplitz == a);
  }
}

TEST_CASE("cyclic product order law and entries") {
  // n=5, k=2, l=4 -> order 1
  Poly p = Poly::x();
  oracle::Rng rng(43);
  auto a = rng.cyclic_pm(5, 2, p);
  auto b = rng.cyclic_pm(5, 4, p);
  CHECK(cyclic_product(a, b).order == 1);

  // k=0 times order-l stays order l
  auto d0 = rng.cyclic_pm(4, 0, p);
  auto dl = rng.cyclic_pm(4, 3, p);
  CHECK(cyclic_product(d0, dl).order == 3);

  // n=3, d=1, k=l=1, all entries 1
  CyclicDiagonal<PMElement> ones;
  ones.n = 3;
  ones.order = 1;
  ones.top = pm_reduce(Poly::one(), p);
  ones.bottom = pm_reduce(Poly::one(), p);
  auto res = cyclic_product(ones, ones);
  CHECK(res.order == 2);
  CHECK(is_block_toeplitz(res.full));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      int off = i - j;
      if (off == 2 || off == -1) {
        CHECK(res.full.at(i, j).residue == Poly::one());
      } else {
        CHECK(res.full.at(i, j).residue.is_zero());
      }
    }
  }
}

TEST_CASE("cyclic product matches dense oracle") {
  oracle::Rng rng(47);
  for (int t = 0; t < 150; ++t) {
    int n = rng.int_in(2, 6);
    int d = rng.int_in(1, 3);
    Poly p = rng.monic_poly(d);
    auto a = rng.cyclic_pm(n, rng.int_in(0, n - 1), p);
    auto b = rng.cyclic_pm(n, rng.int_in(0, n - 1), p);
    auto res = cyclic_product(a, b);
    CHECK(res.order == (a.order + b.order) % n);
    CHECK(oracle::realize_scalar(res.full) ==
          oracle::dense_mul(oracle::realize_scalar(a.embed()),
                            oracle::realize_scalar(b.embed())));
  }
}

TEST_CASE("projections E_k") {
  oracle::Rng rng(53);
  int n = 4;
  Poly p = rng.monic_poly(2);
  auto a = rng.toeplitz_pm(n, p);

  // E_0 keeps only the main diagonal.
  auto e0 = project_Ek(a, 0);
  CHECK(e0.order == 0);
  CHECK(e0.top == a.block(0));
  CHECK(!e0.bottom.has_value());

  // E_k of an order-k cyclic diagonal is itself.
  auto d = rng.cyclic_pm(n, 2, p);
  CHECK(project_Ek(d.embed(), 2) == d);

  // The E_k partition the matrix.
  BlockToeplitz<PMElement> sum(n, pm_reduce(Poly::zero(), p));
  for (int k = 0; k <= n - 1; ++k) {
    auto ek = project_Ek(a, k);
    sum.block(k) = sum.block(k) + ek.top;
    if (ek.bottom) sum.block(k - n) = sum.block(k - n) + *ek.bottom;
  }
  CHECK(sum == a);

  CHECK_THROWS_AS(project_Ek(a, n), OrderOutOfRange);
  CHECK_THROWS_AS(project_Ek(a, -1), OrderOutOfRange);
}

TEST_CASE("permutation action") {
  oracle::Rng rng(59);
  int n = 3;
  Poly p = rng.monic_poly(2);
  auto a = rng.toeplitz_pm(n, p);

  CHECK(permute(a, {1, 2}) == a);  // identity

  // sigma = (1 2): B_1 = A_2, B_{1-3} = A_{2-3}, B_2 = A_1, B_{2-3} = A_{1-3}.
  auto b = permute(a, {2, 1});
  CHECK(b.block(1) == a.block(2));
  CHECK(b.block(-2) == a.block(-1));
  CHECK(b.block(2) == a.block(1));
  CHECK(b.block(-1) == a.block(-2));
  CHECK(b.block(0) == a.block(0));

  // Diagonal matrices are fixed by every sigma.
  BlockToeplitz<PMElement> diag(n, pm_reduce(Poly::zero(), p));
  diag.block(0) = rng.pm(p);
  CHECK(permute(diag, {2, 1}) == diag);

  CHECK_THROWS_AS(permute(a, {1}), InvalidPermutation);
  CHECK_THROWS_AS(permute(a, std::vector<int>{1, 1}), InvalidPermutation);
  CHECK_THROWS_AS(permute(a, std::vector<int>{0, 2}), InvalidPermutation);
}

TEST_CASE("compatibility is preserved by projections and permutations") {
  oracle::Rng rng(61);
  int found = 0;
  for (int t = 0; t < 400 && found < 30; ++t) {
    int n = rng.int_in(2, 4);
    Poly p = rng.monic_poly(rng.int_in(1, 2));
    auto a = rng.toeplitz_pm(n, p);
    auto b = rng.toeplitz_pm(n, p);
    if (!compatible(a, b)) continue;
    ++found;
    for (int i = 1; i <= n - 1; ++i) {
      for (int j = 1; j <= n - 1; ++j) {
        CHECK(compatible(project_Ek(a, i).embed(), project_Ek(b, j).embed()));
      }
    }
    auto sigma = rng.permutation(n);
    auto tau = rng.permutation(n);
    CHECK(compatible(permute(a, sigma), permute(b, tau)));
  }
  CHECK(found > 0);
}

TEST_CASE("powers_toeplitz") {
  // Diagonal matrices always pass.
  Poly p = Poly::x_power(2);
  BlockToeplitz<PMElement> diag(3, pm_reduce(Poly::zero(), p));
  diag.block(0) = pm_reduce(Poly::one() + Poly::x(), p);
  CHECK(powers_toeplitz(diag));

  // n=2, d=1: upper triangular with t_1 = 1, t_{-1} = 0, t_0 = 1.
  auto u = scalar2(0, 1, 1);
  CHECK(powers_toeplitz(u));

  // Incompatible with itself: pick A with A_1 A_{-1} != A_{-1} A_1 impossible in
  // P(M) (commutative), so test the m >= 1 clauses via a matrix example below.
  CHECK(powers_toeplitz(scalar2(3, 2, 5)));
}

TEST_CASE("powers_toeplitz equivalent to all powers staying Toeplitz") {
  oracle::Rng rng(67);
  for (int t = 0; t < 80; ++t) {
    int n = rng.int_in(2, 4);
    int d = rng.int_in(1, 3);
    Poly p = rng.monic_poly(d);
    auto a = rng.toeplitz_pm(n, p);
    bool structured = powers_toeplitz(a);
    Mat base = oracle::realize_scalar(a);
    Mat power = base;
    bool oracle_ok = true;
    for (int k = 2; k <= n + 1; ++k) {
      power = oracle::dense_mul(power, base);
      if (!oracle::dense_block_toeplitz(power, n, d)) {
        oracle_ok = false;
        break;
      }
    }
    CHECK(structured == oracle_ok);
  }
}

TEST_CASE("powers of Toeplitz cyclic diagonals remain Toeplitz cyclic diagonals") {
  oracle::Rng rng(71);
  for (int t = 0; t < 60; ++t) {
    int n = rng.int_in(2, 5);
    int d = rng.int_in(1, 3);
    Poly p = rng.monic_poly(d);
    auto cd = rng.cyclic_pm(n, rng.int_in(0, n - 1), p);
    Mat base = oracle::realize_scalar(cd.embed());
    Mat power = base;
    for (int k = 2; k <= n + 1; ++k) {
      power = oracle::dense_mul(power, base);
      CHECK(oracle::dense_block_toeplitz(power, n, d));
    }
  }
}
