#ifndef BTALG_CLASSIFY_HPP
#define BTALG_CLASSIFY_HPP

#include <optional>
#include <vector>

#include "btalg/algebras.hpp"

namespace btalg {

enum class Genericity { generic, upper, lower };

// Pairwise compatibility of the generators; by linearity this settles the
// whole generated algebra.
template <typename E>
bool closure_check(const GeneratorSet<E>& gens) {
  if (gens.empty()) throw InvalidSpec("empty generator set");
  for (size_t i = 0; i < gens.size(); ++i) {
    for (size_t j = i; j < gens.size(); ++j) {
      if (!compatible(gens[i], gens[j]) || !compatible(gens[j], gens[i])) return false;
    }
  }
  return true;
}

struct SPMResult {
  Genericity verdict = Genericity::generic;
  Poly s_plus;
  Poly s_minus;
};

// s_+ / s_- as the monic gcd of the generator residues (and p) per side.
// Per-offset gcds must agree, else OffsetGcdMismatch: the input cannot span
// a maximal algebra and repairing it would mask that.
SPMResult compute_s_pm(const GeneratorSet<PMElement>& gens);

// Deterministic integer-coefficient combination search for an element with
// every reduced residue coprime to p. bound <= 0 selects the default
// |gens| * d * 8.
BlockToeplitz<PMElement> find_generic_element(const GeneratorSet<PMElement>& gens,
                                              const Poly& s_plus, const Poly& s_minus,
                                              int bound = 0);

// xi = a~_1 * gamma_1 reduced mod d^ = p/(s_+ s_-), cross-checked across all
// offsets (XiInconsistent on failure). Normalized to 1 when d^ is constant.
Poly compute_xi(const BlockToeplitz<PMElement>& generic, const Poly& s_plus,
                const Poly& s_minus, const Poly& p);

struct ClassificationReport {
  AlgebraSpec spec;  // SinglyGen family
  Poly s_plus;
  Poly s_minus;
  Poly xi;
  std::optional<BlockToeplitz<PMElement>> generic_element;
  Genericity genericity = Genericity::generic;
};

// The full pipeline: closure, s_+/s_-, generic element, xi, canonical spec.
ClassificationReport classify_maximal(const GeneratorSet<PMElement>& gens);

namespace detail {

// Linear constraints on the coordinates of an order-k cyclic diagonal D
// forced by compatibility against one generator, appended to `rows`.
// Unknown layout: cd coordinates of D_k then cd of D_{k-n}.
template <typename E>
void append_compatibility_rows(const BlockToeplitz<E>& gen, int k, Mat& rows) {
  int n = gen.n;
  const E& proto = gen.proto();
  int cd = entry_coord_dim(proto);
  std::vector<E> basis;
  for (int r = 0; r < cd; ++r) {
    Vec coords(cd, gr_zero());
    coords[r] = gr_one();
    basis.push_back(entry_from_coords(proto, coords));
  }
  auto add_rows = [&](auto&& top_factor, auto&& bottom_factor) {
    // top_factor(r) and bottom_factor(r) are the products of the generator
    // entry with the r-th basis element of D_k resp. D_{k-n}; the equation
    // is top - bottom = 0, expanded coordinate-wise.
    Mat block(cd, Vec(2 * cd, gr_zero()));
    for (int r = 0; r < cd; ++r) {
      Vec t = entry_coords(top_factor(basis[r]));
      Vec b = entry_coords(bottom_factor(basis[r]));
      for (int c = 0; c < cd; ++c) {
        block[c][r] = block[c][r] + t[c];
        block[c][cd + r] = block[c][cd + r] - b[c];
      }
    }
    for (auto& row : block) rows.push_back(std::move(row));
  };
  for (int i = 1; i <= n - 1; ++i) {
    // Generator as left factor: T_{i-n} D_k = T_i D_{k-n}.
    const E& ti = gen.block(i);
    const E& tin = gen.block(i - n);
    add_rows([&](const E& e) { return tin * e; }, [&](const E& e) { return ti * e; });
    // Generator as right factor: D_k T_{i-n} = D_{k-n} T_i.
    add_rows([&](const E& e) { return e * tin; }, [&](const E& e) { return e * ti; });
  }
}

}  // namespace detail

// Basis of the order-k cyclic diagonals compatible with every generator.
template <typename E>
std::vector<CyclicDiagonal<E>> extension_space(const GeneratorSet<E>& gens, int k) {
  if (gens.empty()) throw InvalidSpec("empty generator set");
  int n = gens[0].n;
  if (k < 1 || k > n - 1) throw OrderOutOfRange("extension order must be in 1..n-1");
  if (!closure_check(gens)) throw NotClosed();
  const E& proto = gens[0].proto();
  int cd = entry_coord_dim(proto);
  Mat rows;
  for (const auto& g : gens) detail::append_compatibility_rows(g, k, rows);
  std::vector<Vec> sols = nullspace(rows, 2 * cd);
  std::vector<CyclicDiagonal<E>> out;
  for (const auto& v : sols) {
    CyclicDiagonal<E> d;
    d.n = n;
    d.order = k;
    d.top = entry_from_coords(proto, Vec(v.begin(), v.begin() + cd));
    d.bottom = entry_from_coords(proto, Vec(v.begin() + cd, v.end()));
    out.push_back(std::move(d));
  }
  return out;
}

// Maximal iff every order-k extension space is exactly the span of the
// generators' order-k slices and the diagonal slice fills the whole
// coefficient algebra.
template <typename E>
bool is_maximal(const GeneratorSet<E>& gens) {
  if (gens.empty()) throw InvalidSpec("empty generator set");
  if (!closure_check(gens)) throw NotClosed();
  int n = gens[0].n;
  const E& proto = gens[0].proto();
  int cd = entry_coord_dim(proto);

  std::vector<Vec> diag;
  for (const auto& g : gens) diag.push_back(entry_coords(g.block(0)));
  Mat diag_rows(diag.begin(), diag.end());
  if (rank(std::move(diag_rows)) != cd) return false;

  for (int k = 1; k <= n - 1; ++k) {
    auto ext = extension_space(gens, k);
    std::vector<Vec> ext_vecs;
    for (const auto& d : ext) {
      Vec v = entry_coords(d.top);
      Vec b = entry_coords(*d.bottom);
      v.insert(v.end(), b.begin(), b.end());
      ext_vecs.push_back(std::move(v));
    }
    std::vector<Vec> slice_vecs;
    for (const auto& g : gens) {
      Vec v = entry_coords(g.block(k));
      Vec b = entry_coords(g.block(k - n));
      v.insert(v.end(), b.begin(), b.end());
      slice_vecs.push_back(std::move(v));
    }
    if (!same_span(ext_vecs, slice_vecs)) return false;
  }
  return true;
}

// One stratum of the p = X^m classification.
struct XmStratum {
  int k_plus = 0;
  int k_minus = 0;
  bool rigid = false;       // k_+ + k_- = m, chi forced to 1
  int param_dim = 0;        // free chi coefficients for parametric strata
  bool pseudocirculant = false;
};

// All strata of maximal algebras over p = X^m.
std::vector<XmStratum> enumerate_xm(int m, int n);

// Canonical representative (chi = 1).
SinglyGenSpec xm_stratum_spec(const XmStratum& stratum, int m);

// Confirms the non-pseudocirculant flag of a rigid stratum with
// 0 < k_+, k_- < m: the one-sided Y matrices are members and force any
// candidate pair (A, B) into a common kernel.
bool xm_rigid_obstruction(int k_plus, int k_minus, int m, int n);

// Spanning family of the Schur algebra S in T_{n,d}[O_{p,q}].
GeneratorSet<OpqElement> schur_generators(int p, int q, int n);

// Maximality of S; the |p-q| <= 1 hypothesis is a hard precondition.
bool schur_is_maximal(int p, int q, int n);

}  // namespace btalg

#endif  // BTALG_CLASSIFY_HPP
