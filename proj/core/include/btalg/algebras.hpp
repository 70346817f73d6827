#ifndef BTALG_ALGEBRAS_HPP
#define BTALG_ALGEBRAS_HPP

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "btalg/toeplitz.hpp"

namespace btalg {

// Scalar parameter of a generalized circulant; infinity marks the upper
// triangular algebra.
struct ExtScalar {
  bool infinite = false;
  GaussianRational value;

  static ExtScalar inf() { return {true, gr_zero()}; }
  static ExtScalar finite(GaussianRational v) { return {false, std::move(v)}; }

  friend bool operator==(const ExtScalar&, const ExtScalar&) = default;
};

struct PseudocirculantSpec {
  MatrixD a;
  MatrixD b;
};

// The singly generated family B(p_+, p_-, chi): p_+ p_- divides p,
// chi coprime to p, q = p / (p_+ p_-). chi matters only modulo q; the
// reduced residue is kept as the equality witness.
struct SinglyGenSpec {
  Poly p;
  Poly p_plus;
  Poly p_minus;
  Poly chi;          // as supplied, validated coprime to p
  Poly q;            // derived
  Poly chi_residue;  // chi mod q when deg q >= 1, else the unit

  friend bool operator==(const SinglyGenSpec&, const SinglyGenSpec&) = default;
};

struct DiagonalTupleSpec {
  std::vector<ExtScalar> alphas;  // one per diagonal slot
};

struct SchurOpqSpec {
  int p = 0;
  int q = 0;
};

struct UpperTriSpec {};
struct LowerTriSpec {};

struct ScalarCirculantSpec {
  ExtScalar alpha;
};

using AlgebraFamily = std::variant<PseudocirculantSpec, SinglyGenSpec, DiagonalTupleSpec,
                                   SchurOpqSpec, UpperTriSpec, LowerTriSpec,
                                   ScalarCirculantSpec>;

struct AlgebraSpec {
  int n = 0;
  int d = 0;
  AlgebraFamily family;
};

// Validating constructor; rejects non-monic p_plus/p_minus, inexact
// divisor pairs, and chi sharing a factor with p.
SinglyGenSpec make_singly_gen(const Poly& p, const Poly& p_plus, const Poly& p_minus,
                              const Poly& chi);

// Validates the kernel condition ker A \cap ker B = {0}.
PseudocirculantSpec make_pseudocirculant(const MatrixD& a, const MatrixD& b);

template <typename E>
using GeneratorSet = std::vector<BlockToeplitz<E>>;

// Exact membership test, dispatched on the spec variant. When `witness`
// is non-null and the test fails, it receives the first violated clause.
bool membership(const AlgebraSpec& spec, const BlockToeplitz<MatrixD>& t,
                std::string* witness = nullptr);
bool membership(const AlgebraSpec& spec, const BlockToeplitz<PMElement>& t,
                std::string* witness = nullptr);

// F_{A,B} = F_{A',B'} iff AB' = A'B (both pairs must satisfy the kernel
// condition).
bool fab_equal(const MatrixD& a, const MatrixD& b, const MatrixD& a2, const MatrixD& b2);

// Under the monic normalization: equal divisor pairs and q | chi - chi'.
bool bsg_equal(const SinglyGenSpec& s, const SinglyGenSpec& s2);

// Basis of the order-k slice {(p_+ a, p_- b) : q | a - chi b}; the slice is
// the same for every k >= 1.
std::vector<std::pair<PMElement, PMElement>> bsg_slice_basis(const SinglyGenSpec& s);

// Spanning family: diagonal monomials M^r, and per order the E- and J-type
// cyclic diagonals plus a slice basis.
GeneratorSet<PMElement> bsg_generators(const SinglyGenSpec& s, int n);

// Recover the d-tuple (alpha_1, ..., alpha_d) from generators with diagonal
// entries; throws Inconsistent when no single alpha fits a slot.
DiagonalTupleSpec diagonal_tuple_classify(const GeneratorSet<MatrixD>& gens);

}  // namespace btalg

#endif  // BTALG_ALGEBRAS_HPP
