#include "btalg/algebras.hpp"

#include <sstream>

namespace btalg {

SinglyGenSpec make_singly_gen(const Poly& p, const Poly& p_plus, const Poly& p_minus,
                              const Poly& chi) {
  if (!p.is_monic() || p.degree() < 1) throw NotMonic("p must be monic of degree >= 1");
  if (!p_plus.is_monic()) throw NotMonic("p_plus must be monic");
  if (!p_minus.is_monic()) throw NotMonic("p_minus must be monic");
  Poly prod = p_plus * p_minus;
  if (!poly_divides(prod, p)) throw InvalidSpec("p_plus * p_minus must divide p");
  if (chi.is_zero() || !poly_coprime(chi, p)) {
    throw NotCoprime("chi must be relatively prime to p");
  }
  SinglyGenSpec s;
  s.p = p;
  s.p_plus = p_plus;
  s.p_minus = p_minus;
  s.chi = chi;
  s.q = poly_div_exact(p, prod);
  s.chi_residue = s.q.degree() >= 1 ? poly_divmod(chi, s.q).second : Poly::one();
  return s;
}

PseudocirculantSpec make_pseudocirculant(const MatrixD& a, const MatrixD& b) {
  if (a.dim() != b.dim()) throw ShapeMismatch("pseudocirculant pair");
  if (!kernels_intersect_trivially(a, b)) {
    throw InvalidSpec("ker A and ker B intersect nontrivially");
  }
  return {a, b};
}

namespace {

void set_witness(std::string* witness, const std::string& text) {
  if (witness) *witness = text;
}

bool upper_tri_check(int n, auto block_is_zero, std::string* witness) {
  for (int i = 1; i <= n - 1; ++i) {
    if (!block_is_zero(i)) {
      set_witness(witness, "nonzero block at offset i=" + std::to_string(i));
      return false;
    }
  }
  return true;
}

bool lower_tri_check(int n, auto block_is_zero, std::string* witness) {
  for (int i = 1; i <= n - 1; ++i) {
    if (!block_is_zero(i - n)) {
      set_witness(witness, "nonzero block at offset i=" + std::to_string(i - n));
      return false;
    }
  }
  return true;
}

bool circulant_slot_check(int n, const ExtScalar& alpha, auto top, auto bottom,
                          const std::string& slot, std::string* witness) {
  for (int i = 1; i <= n - 1; ++i) {
    if (alpha.infinite) {
      if (!top(i).is_zero()) {
        set_witness(witness, "alpha=inf" + slot + " requires t_i=0 at i=" + std::to_string(i));
        return false;
      }
    } else if (!(bottom(i) == alpha.value * top(i))) {
      set_witness(witness, "t_{i-n} != alpha t_i" + slot + " at i=" + std::to_string(i));
      return false;
    }
  }
  return true;
}

bool membership_matrix(const AlgebraSpec& spec, const BlockToeplitz<MatrixD>& t,
                       std::string* witness) {
  int n = spec.n;
  if (const auto* f = std::get_if<PseudocirculantSpec>(&spec.family)) {
    if (!kernels_intersect_trivially(f->a, f->b)) {
      throw InvalidSpec("ker A and ker B intersect nontrivially");
    }
    for (int j = 1; j <= n - 1; ++j) {
      if (!(f->a * t.block(j) == f->b * t.block(j - n))) {
        set_witness(witness, "A T_j != B T_{j-n} at j=" + std::to_string(j));
        return false;
      }
    }
    return true;
  }
  if (const auto* f = std::get_if<DiagonalTupleSpec>(&spec.family)) {
    if (static_cast<int>(f->alphas.size()) != spec.d) throw InvalidSpec("alpha tuple size");
    for (int j = -(n - 1); j <= n - 1; ++j) {
      if (!t.block(j).is_diagonal()) {
        set_witness(witness, "non-diagonal entry at offset " + std::to_string(j));
        return false;
      }
    }
    for (int s = 0; s < spec.d; ++s) {
      bool ok = circulant_slot_check(
          n, f->alphas[s], [&](int i) { return t.block(i).at(s, s); },
          [&](int i) { return t.block(i - n).at(s, s); },
          " in slot " + std::to_string(s), witness);
      if (!ok) return false;
    }
    return true;
  }
  if (const auto* f = std::get_if<SchurOpqSpec>(&spec.family)) {
    if (f->p + f->q != spec.d) throw InvalidSpec("p + q must equal d");
    for (int j = -(n - 1); j <= n - 1; ++j) {
      OpqElement e;
      if (!matrix_to_opq(t.block(j), f->p, f->q, &e)) {
        set_witness(witness, "entry at offset " + std::to_string(j) + " not in O_{p,q}");
        return false;
      }
      if (j != 0 && !e.lambda.is_zero()) {
        set_witness(witness,
                    "invertible off-diagonal entry at offset " + std::to_string(j));
        return false;
      }
    }
    return true;
  }
  if (std::holds_alternative<UpperTriSpec>(spec.family)) {
    return upper_tri_check(n, [&](int j) { return t.block(j).is_zero(); }, witness);
  }
  if (std::holds_alternative<LowerTriSpec>(spec.family)) {
    return lower_tri_check(n, [&](int j) { return t.block(j).is_zero(); }, witness);
  }
  if (const auto* f = std::get_if<ScalarCirculantSpec>(&spec.family)) {
    if (spec.d != 1) throw InvalidSpec("scalar circulant requires d = 1");
    return circulant_slot_check(
        n, f->alpha, [&](int i) { return t.block(i).at(0, 0); },
        [&](int i) { return t.block(i - n).at(0, 0); }, "", witness);
  }
  throw ShapeMismatch("spec variant requires entries in P(M)");
}

bool membership_pm(const AlgebraSpec& spec, const BlockToeplitz<PMElement>& t,
                   std::string* witness) {
  int n = spec.n;
  if (const auto* f = std::get_if<SinglyGenSpec>(&spec.family)) {
    if (t.proto().modulus != f->p) throw ShapeMismatch("modulus differs from spec p");
    for (int i = 1; i <= n - 1; ++i) {
      auto [ai, r_plus] = poly_divmod(t.block(i).residue, f->p_plus);
      if (!r_plus.is_zero()) {
        set_witness(witness, "condition (b) at offset i=" + std::to_string(i) +
                                 ": not a multiple of p_plus");
        return false;
      }
      auto [ain, r_minus] = poly_divmod(t.block(i - n).residue, f->p_minus);
      if (!r_minus.is_zero()) {
        set_witness(witness, "condition (b) at offset i=" + std::to_string(i - n) +
                                 ": not a multiple of p_minus");
        return false;
      }
      if (f->q.degree() >= 1) {
        Poly delta = ai - f->chi_residue * ain;
        if (!poly_divmod(delta, f->q).second.is_zero()) {
          set_witness(witness, "condition (c) at offset i=" + std::to_string(i));
          return false;
        }
      }
    }
    return true;
  }
  if (std::holds_alternative<UpperTriSpec>(spec.family)) {
    return upper_tri_check(n, [&](int j) { return entry_is_zero(t.block(j)); }, witness);
  }
  if (std::holds_alternative<LowerTriSpec>(spec.family)) {
    return lower_tri_check(n, [&](int j) { return entry_is_zero(t.block(j)); }, witness);
  }
  throw ShapeMismatch("spec variant requires dense matrix entries");
}

}  // namespace

bool membership(const AlgebraSpec& spec, const BlockToeplitz<MatrixD>& t,
                std::string* witness) {
  if (t.n != spec.n || t.d() != spec.d) throw ShapeMismatch("membership shape");
  return membership_matrix(spec, t, witness);
}

bool membership(const AlgebraSpec& spec, const BlockToeplitz<PMElement>& t,
                std::string* witness) {
  if (t.n != spec.n || t.d() != spec.d) throw ShapeMismatch("membership shape");
  return membership_pm(spec, t, witness);
}

bool fab_equal(const MatrixD& a, const MatrixD& b, const MatrixD& a2, const MatrixD& b2) {
  make_pseudocirculant(a, b);
  make_pseudocirculant(a2, b2);
  return a * b2 == a2 * b;
}

bool bsg_equal(const SinglyGenSpec& s, const SinglyGenSpec& s2) {
  if (s.p != s2.p) throw ModulusMismatch("specs live over different p");
  if (s.p_plus != s2.p_plus || s.p_minus != s2.p_minus) return false;
  if (s.q.degree() < 1) return true;  // chi immaterial when p_+ p_- = p
  return poly_divmod(s.chi - s2.chi, s.q).second.is_zero();
}

std::vector<std::pair<PMElement, PMElement>> bsg_slice_basis(const SinglyGenSpec& s) {
  int m = s.p.degree();
  int da = m - s.p_plus.degree();   // free coefficients of a
  int db = m - s.p_minus.degree();  // free coefficients of b
  int dq = s.q.degree();

  // Linear condition: (a - chi b) mod q = 0, dq equations in da + db unknowns.
  Mat constraints(dq, Vec(da + db, gr_zero()));
  for (int j = 0; j < da; ++j) {
    Poly r = poly_divmod(Poly::x_power(j), s.q).second;
    for (int c = 0; c < dq; ++c) constraints[c][j] = r.coeff(c);
  }
  for (int j = 0; j < db; ++j) {
    Poly r = poly_divmod(s.chi_residue * Poly::x_power(j), s.q).second;
    for (int c = 0; c < dq; ++c) constraints[c][da + j] = -r.coeff(c);
  }
  std::vector<Vec> basis =
      dq > 0 ? nullspace(constraints, da + db) : nullspace(Mat{}, da + db);

  std::vector<std::pair<PMElement, PMElement>> out;
  for (const auto& v : basis) {
    Poly a(std::vector<GaussianRational>(v.begin(), v.begin() + da));
    Poly b(std::vector<GaussianRational>(v.begin() + da, v.end()));
    out.emplace_back(pm_reduce(s.p_plus * a, s.p), pm_reduce(s.p_minus * b, s.p));
  }
  return out;
}

GeneratorSet<PMElement> bsg_generators(const SinglyGenSpec& s, int n) {
  if (n < 2) throw InvalidSpec("generator sets need n >= 2");
  int d = s.p.degree();
  PMElement proto = pm_reduce(Poly::zero(), s.p);
  GeneratorSet<PMElement> gens;

  for (int r = 0; r < d; ++r) {
    BlockToeplitz<PMElement> diag(n, proto);
    diag.block(0) = pm_reduce(Poly::x_power(r), s.p);
    gens.push_back(std::move(diag));
  }

  auto slice = bsg_slice_basis(s);
  for (int k = 1; k <= n - 1; ++k) {
    BlockToeplitz<PMElement> e(n, proto);
    e.block(k) = pm_reduce(s.p_plus * s.chi, s.p);
    e.block(k - n) = pm_reduce(s.p_minus, s.p);
    gens.push_back(std::move(e));

    BlockToeplitz<PMElement> j(n, proto);
    j.block(k) = pm_reduce(s.q * s.p_plus * s.chi, s.p);
    j.block(k - n) = pm_reduce(s.q * s.p_minus, s.p);
    gens.push_back(std::move(j));

    for (const auto& [top, bottom] : slice) {
      BlockToeplitz<PMElement> g(n, proto);
      g.block(k) = top;
      g.block(k - n) = bottom;
      gens.push_back(std::move(g));
    }
  }
  return gens;
}

DiagonalTupleSpec diagonal_tuple_classify(const GeneratorSet<MatrixD>& gens) {
  if (gens.empty()) throw InvalidSpec("empty generator set");
  int n = gens[0].n;
  int d = gens[0].d();
  for (const auto& g : gens) {
    if (g.n != n || g.d() != d) throw ShapeMismatch("generator shapes differ");
    for (int j = -(n - 1); j <= n - 1; ++j) {
      if (!g.block(j).is_diagonal()) throw InvalidSpec("generator entry not diagonal");
    }
  }
  DiagonalTupleSpec spec;
  for (int s = 0; s < d; ++s) {
    bool found = false;
    GaussianRational alpha;
    // The first generator with a nonzero t_i fixes alpha; the rest validate.
    for (const auto& g : gens) {
      for (int i = 1; i <= n - 1 && !found; ++i) {
        const GaussianRational& top = g.block(i).at(s, s);
        if (!top.is_zero()) {
          alpha = g.block(i - n).at(s, s) / top;
          found = true;
        }
      }
      if (found) break;
    }
    ExtScalar a = found ? ExtScalar::finite(alpha) : ExtScalar::inf();
    for (const auto& g : gens) {
      for (int i = 1; i <= n - 1; ++i) {
        const GaussianRational& top = g.block(i).at(s, s);
        const GaussianRational& bottom = g.block(i - n).at(s, s);
        if (a.infinite) {
          if (!top.is_zero()) throw Inconsistent("slot mixes alpha values");
        } else if (!(bottom == a.value * top)) {
          throw Inconsistent("slot mixes alpha values");
        }
      }
    }
    spec.alphas.push_back(a);
  }
  return spec;
}

}  // namespace btalg
