#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "btalg/json_io.hpp"
#include "btalg/oracle.hpp"

using namespace btalg;

TEST_CASE("dense multiplication sanity") {
  Mat a{{gr_one(), GaussianRational(2)}, {GaussianRational(3), GaussianRational(4)}};
  Mat id{{gr_one(), gr_zero()}, {gr_zero(), gr_one()}};
  CHECK(oracle::dense_mul(a, id) == a);
  CHECK(oracle::dense_mul(id, a) == a);
  Mat sq = oracle::dense_mul(a, a);
  CHECK(sq[0][0] == GaussianRational(7));
  CHECK(sq[0][1] == GaussianRational(10));
  CHECK(sq[1][0] == GaussianRational(15));
  CHECK(sq[1][1] == GaussianRational(22));
}

TEST_CASE("dense toeplitz scan") {
  oracle::Rng rng(131);
  auto t = rng.toeplitz_pm(3, rng.monic_poly(2));
  Mat m = oracle::realize_scalar(t);
  CHECK(oracle::dense_block_toeplitz(m, 3, 2));
  m[4][4] = m[4][4] + gr_one();  // break one diagonal block
  CHECK(!oracle::dense_block_toeplitz(m, 3, 2));
}

TEST_CASE("rng determinism") {
  oracle::Rng a(42), b(42);
  for (int t = 0; t < 50; ++t) {
    CHECK(a.int_in(0, 1000) == b.int_in(0, 1000));
  }
  oracle::Rng c(42), d(42);
  CHECK(c.poly(5) == d.poly(5));
  CHECK(c.monic_poly(3) == d.monic_poly(3));
  CHECK(c.singly_gen(4) == d.singly_gen(4));
}

TEST_CASE("random coefficients stay small integers") {
  oracle::Rng rng(7);
  for (int t = 0; t < 200; ++t) {
    GaussianRational x = rng.scalar();
    CHECK(boost::multiprecision::denominator(x.re) == 1);
    CHECK(boost::multiprecision::denominator(x.im) == 1);
    CHECK(boost::multiprecision::numerator(x.re) <= 9);
    CHECK(boost::multiprecision::numerator(x.re) >= -9);
    CHECK(boost::multiprecision::numerator(x.im) <= 9);
    CHECK(boost::multiprecision::numerator(x.im) >= -9);
  }
}

TEST_CASE("random_member always passes membership, deterministically") {
  oracle::Rng rng(137);
  for (int t = 0; t < 20; ++t) {
    int n = rng.int_in(2, 4);
    SinglyGenSpec s = rng.singly_gen(4);
    AlgebraSpec spec{n, s.p.degree(), s};
    uint64_t seed = rng.int_in(1, 1 << 30);
    auto m1 = oracle::random_member_pm(spec, seed);
    auto m2 = oracle::random_member_pm(spec, seed);
    CHECK(m1 == m2);
    CHECK(membership(spec, m1));
  }
  // DiagonalTuple sampling honors t_{i-n} = alpha t_i.
  GaussianRational alpha(3);
  AlgebraSpec dt{3, 2,
                 DiagonalTupleSpec{{ExtScalar::finite(alpha), ExtScalar::inf()}}};
  auto v = oracle::random_member(dt, 99);
  const auto& m = std::get<BlockToeplitz<MatrixD>>(v);
  CHECK(membership(dt, m));
  for (int i = 1; i <= 2; ++i) {
    CHECK(m.block(i - 3).at(0, 0) == alpha * m.block(i).at(0, 0));
    CHECK(m.block(i).at(1, 1).is_zero());
  }
}

TEST_CASE("every suite passes on a modest budget") {
  for (const auto& name : oracle::suite_names()) {
    oracle::TrialConfig config;
    config.suite = name;
    config.trials = 25;
    config.seed = 2024;
    config.n_max = 4;
    config.d_max = 3;
    auto report = oracle::run_suite(config);
    CHECK(report.passed());
    if (!report.passed()) {
      MESSAGE(name, ": ", report.failures[0].description);
    }
    CHECK(report.trials == 25);
    // Reports serialize to JSON.
    auto j = io::verification_report_to_json(report);
    CHECK(j.at("suite").get<std::string>() == name);
  }
  CHECK_THROWS_AS(oracle::run_suite({1, 10, 2, 4, 1, 2, "nonsense"}), UnknownSuite);
}

TEST_CASE("mutation self-test: a corrupted compatibility check is caught") {
  oracle::TrialConfig config;
  config.suite = "prod";
  config.trials = 120;
  config.seed = 31337;
  config.n_max = 4;
  config.d_max = 2;

  // The honest check passes.
  auto honest = oracle::run_prod_suite_with(
      config, [](const auto& a, const auto& b) { return compatible(a, b); });
  CHECK(honest.passed());

  // Always-true and always-false stand-ins both fail.
  auto always_true =
      oracle::run_prod_suite_with(config, [](const auto&, const auto&) { return true; });
  CHECK(!always_true.passed());
  auto always_false =
      oracle::run_prod_suite_with(config, [](const auto&, const auto&) { return false; });
  CHECK(!always_false.passed());

  // An off-by-one corruption (skipping the i = 1 row of the criterion) fails.
  auto skewed = oracle::run_prod_suite_with(config, [](const auto& a, const auto& b) {
    for (int i = 2; i < a.n; ++i) {
      for (int j = 1; j < b.n; ++j) {
        if (!(a.block(i) * b.block(j - a.n) == a.block(i - a.n) * b.block(j))) return false;
      }
    }
    return true;
  });
  CHECK(!skewed.passed());

  // Counterexamples carry replayable JSON.
  REQUIRE(!always_true.failures.empty());
  auto j = io::json::parse(always_true.failures[0].counterexample_json);
  auto a = io::toeplitz_from_json(j.at("A"));
  auto b = io::toeplitz_from_json(j.at("B"));
  const auto& ta = std::get<BlockToeplitz<PMElement>>(a);
  const auto& tb = std::get<BlockToeplitz<PMElement>>(b);
  Mat dense = oracle::dense_mul(oracle::realize_scalar(ta), oracle::realize_scalar(tb));
  CHECK(compatible(ta, tb) == oracle::dense_block_toeplitz(dense, ta.n, ta.d()));
  CHECK(!compatible(ta, tb));  // the always-true stand-in failed on it
}
