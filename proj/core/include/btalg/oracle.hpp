#ifndef BTALG_ORACLE_HPP
#define BTALG_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "btalg/algebras.hpp"
#include "btalg/classify.hpp"

namespace btalg {
namespace oracle {

// ---- independent dense verification path ----
// These routines work on flat scalar matrices and never touch the
// offset-indexed implementation they are used to check.

// Realize as an (n*d) x (n*d) scalar matrix.
template <typename E>
Mat realize_scalar(const BlockToeplitz<E>& t) {
  int n = t.n;
  int d = t.d();
  Mat out(static_cast<size_t>(n) * d, Vec(static_cast<size_t>(n) * d, gr_zero()));
  for (int bi = 0; bi < n; ++bi) {
    for (int bj = 0; bj < n; ++bj) {
      MatrixD block = entry_realize(t.block(bi - bj));
      for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) out[bi * d + i][bj * d + j] = block.at(i, j);
      }
    }
  }
  return out;
}

template <typename E>
Mat realize_scalar(const BlockMatrix<E>& t) {
  int n = t.n;
  int d = entry_dim(t.proto());
  Mat out(static_cast<size_t>(n) * d, Vec(static_cast<size_t>(n) * d, gr_zero()));
  for (int bi = 0; bi < n; ++bi) {
    for (int bj = 0; bj < n; ++bj) {
      MatrixD block = entry_realize(t.at(bi, bj));
      for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) out[bi * d + i][bj * d + j] = block.at(i, j);
      }
    }
  }
  return out;
}

Mat dense_mul(const Mat& a, const Mat& b);

// Scan of the scalar product: every block diagonal constant.
bool dense_block_toeplitz(const Mat& m, int n, int d);

// Scalar block at position (bi, bj).
MatrixD dense_block_at(const Mat& m, int d, int bi, int bj);

// ---- deterministic random instances ----

class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  int int_in(int lo, int hi);  // inclusive
  // Small integer scalar, |value| <= 9; Gaussian part appears half the time.
  GaussianRational scalar(bool allow_imaginary = true);
  Poly poly(int max_degree, bool allow_imaginary = true);
  Poly monic_poly(int degree, bool allow_imaginary = true);
  PMElement pm(const Poly& p);
  BlockToeplitz<PMElement> toeplitz_pm(int n, const Poly& p);
  CyclicDiagonal<PMElement> cyclic_pm(int n, int order, const Poly& p);
  SinglyGenSpec singly_gen(int max_total_degree);
  std::vector<int> permutation(int n);

 private:
  std::mt19937_64 engine_;
};

// Random member of a spec; constraint satisfaction via the slice basis,
// so the result always passes membership. Identical seed, identical member.
std::variant<BlockToeplitz<MatrixD>, BlockToeplitz<PMElement>> random_member(
    const AlgebraSpec& spec, uint64_t seed);

BlockToeplitz<PMElement> random_member_pm(const AlgebraSpec& spec, uint64_t seed);

// ---- property suites ----

struct TrialConfig {
  uint64_t seed = 1;
  int trials = 100;
  int n_min = 2, n_max = 6;
  int d_min = 1, d_max = 4;
  std::string suite;
};

struct Failure {
  int trial = 0;
  std::string description;
  std::string counterexample_json;
};

struct VerificationReport {
  std::string suite;
  int trials = 0;
  std::vector<Failure> failures;
  double elapsed_seconds = 0.0;

  bool passed() const { return failures.empty(); }
};

const std::vector<std::string>& suite_names();

VerificationReport run_suite(const TrialConfig& config);

// Hook used by the harness self-test: replaces the structured compatibility
// check inside the "prod" suite.
using CompatibleFn =
    std::function<bool(const BlockToeplitz<PMElement>&, const BlockToeplitz<PMElement>&)>;
VerificationReport run_prod_suite_with(const TrialConfig& config, const CompatibleFn& fn);

}  // namespace oracle
}  // namespace btalg

#endif  // BTALG_ORACLE_HPP
