#include "btalg/classify.hpp"

namespace btalg {

namespace {

// Monic gcd of the residues at one offset across the generators, together
// with p. Returns p itself when the offset is identically zero.
Poly offset_gcd(const GeneratorSet<PMElement>& gens, int offset, const Poly& p) {
  Poly g = p;
  for (const auto& gen : gens) {
    const Poly& r = gen.block(offset).residue;
    if (r.is_zero()) continue;
    g = poly_gcd(g, r);
  }
  return g;
}

bool offset_side_zero(const GeneratorSet<PMElement>& gens, int lo, int hi) {
  for (const auto& gen : gens) {
    for (int j = lo; j <= hi; ++j) {
      if (!entry_is_zero(gen.block(j))) return false;
    }
  }
  return true;
}

}  // namespace

SPMResult compute_s_pm(const GeneratorSet<PMElement>& gens) {
  if (gens.empty()) throw InvalidSpec("empty generator set");
  int n = gens[0].n;
  const Poly& p = gens[0].proto().modulus;

  SPMResult res;
  if (offset_side_zero(gens, 1, n - 1)) {
    res.verdict = Genericity::upper;
    return res;
  }
  if (offset_side_zero(gens, -(n - 1), -1)) {
    res.verdict = Genericity::lower;
    return res;
  }

  res.s_plus = offset_gcd(gens, 1, p);
  for (int j = 2; j <= n - 1; ++j) {
    if (offset_gcd(gens, j, p) != res.s_plus) {
      throw OffsetGcdMismatch("upper offsets disagree; not a maximal algebra's span");
    }
  }
  res.s_minus = offset_gcd(gens, 1 - n, p);
  for (int j = 2 - n; j <= -1; ++j) {
    if (offset_gcd(gens, j, p) != res.s_minus) {
      throw OffsetGcdMismatch("lower offsets disagree; not a maximal algebra's span");
    }
  }
  // An offset with gcd p would mean an identically zero cyclic order on a
  // generic side, which the side-zero checks above already excluded.
  if (res.s_plus == p || res.s_minus == p) {
    throw OffsetGcdMismatch("zero offset on a generic side");
  }
  return res;
}

BlockToeplitz<PMElement> find_generic_element(const GeneratorSet<PMElement>& gens,
                                              const Poly& s_plus, const Poly& s_minus,
                                              int bound) {
  if (gens.empty()) throw InvalidSpec("empty generator set");
  int n = gens[0].n;
  const Poly& p = gens[0].proto().modulus;
  int d = p.degree();
  if (bound <= 0) bound = static_cast<int>(gens.size()) * d * 8;

  for (int t = 1; t <= bound; ++t) {
    BlockToeplitz<PMElement> cand(n, gens[0].proto());
    GaussianRational coeff = gr_one();
    GaussianRational ramp{Rational(t), Rational(0)};
    for (const auto& g : gens) {
      for (int j = -(n - 1); j <= n - 1; ++j) {
        cand.block(j) = cand.block(j) + entry_scale(g.block(j), coeff);
      }
      coeff = coeff * ramp;
    }
    bool ok = true;
    for (int j = 1; j <= n - 1 && ok; ++j) {
      for (int sign = 0; sign < 2 && ok; ++sign) {
        int offset = sign == 0 ? j : j - n;
        const Poly& divisor = sign == 0 ? s_plus : s_minus;
        const Poly& r = cand.block(offset).residue;
        if (r.is_zero() || !poly_divides(divisor, r)) {
          ok = false;
          break;
        }
        Poly reduced = poly_div_exact(r, divisor);
        if (!poly_coprime(reduced, p)) ok = false;
      }
    }
    if (ok) return cand;
  }
  throw NoGenericElement("no combination found within the bound; input rejected");
}

Poly compute_xi(const BlockToeplitz<PMElement>& generic, const Poly& s_plus,
                const Poly& s_minus, const Poly& p) {
  Poly d_hat = poly_div_exact(p, s_plus * s_minus);
  int n = generic.n;
  Poly xi;
  for (int i = 1; i <= n - 1; ++i) {
    Poly a_i = poly_div_exact(generic.block(i).residue, s_plus);
    Poly a_in = poly_div_exact(generic.block(i - n).residue, s_minus);
    Poly gamma_i = poly_mod_inverse(a_in, p);
    Poly xi_i = d_hat.degree() >= 1 ? poly_divmod(a_i * gamma_i, d_hat).second : Poly::one();
    if (i == 1) {
      xi = xi_i;
    } else if (xi_i != xi) {
      throw XiInconsistent("xi_i differ mod p/(s_+ s_-); input not from a maximal algebra");
    }
  }
  return xi;
}

namespace {

// chi must be coprime to p and congruent to xi mod d^; a small scalar shift
// always works because each irreducible factor of p rules out only finitely
// many shifts.
Poly lift_chi(const Poly& xi, const Poly& d_hat, const Poly& p) {
  if (d_hat.degree() < 1) return Poly::one();
  for (long c = 0; c <= 2L * p.degree() + 2; ++c) {
    Poly cand = xi + GaussianRational(c) * d_hat;
    if (!cand.is_zero() && poly_coprime(cand, p)) return cand;
  }
  throw NotMaximalInput("no coprime lift of xi");  // unreachable over Q(i)
}

}  // namespace

ClassificationReport classify_maximal(const GeneratorSet<PMElement>& gens) {
  if (gens.empty()) throw InvalidSpec("empty generator set");
  int n = gens[0].n;
  if (n < 2) throw InvalidSpec("classification needs n >= 2");
  if (!closure_check(gens)) throw NotClosed();
  const Poly& p = gens[0].proto().modulus;

  ClassificationReport report;
  try {
    SPMResult spm = compute_s_pm(gens);
    report.genericity = spm.verdict;
    if (spm.verdict == Genericity::upper) {
      report.s_plus = p;
      report.s_minus = Poly::one();
      report.xi = Poly::one();
      report.spec = {n, p.degree(), make_singly_gen(p, p, Poly::one(), Poly::one())};
    } else if (spm.verdict == Genericity::lower) {
      report.s_plus = Poly::one();
      report.s_minus = p;
      report.xi = Poly::one();
      report.spec = {n, p.degree(), make_singly_gen(p, Poly::one(), p, Poly::one())};
    } else {
      report.s_plus = spm.s_plus;
      report.s_minus = spm.s_minus;
      report.generic_element = find_generic_element(gens, spm.s_plus, spm.s_minus);
      report.xi = compute_xi(*report.generic_element, spm.s_plus, spm.s_minus, p);
      Poly d_hat = poly_div_exact(p, spm.s_plus * spm.s_minus);
      Poly chi = lift_chi(report.xi, d_hat, p);
      report.spec = {n, p.degree(), make_singly_gen(p, spm.s_plus, spm.s_minus, chi)};
    }
  } catch (const NotClosed&) {
    throw;
  } catch (const Error& e) {
    throw NotMaximalInput(e.what());
  }

  for (const auto& g : gens) {
    std::string witness;
    if (!membership(report.spec, g, &witness)) {
      throw NotMaximalInput("generator outside the classified algebra: " + witness);
    }
  }
  return report;
}

std::vector<XmStratum> enumerate_xm(int m, int n) {
  if (m < 1 || n < 2) throw InvalidParameters("need m >= 1 and n >= 2");
  std::vector<XmStratum> out;
  for (int kp = 0; kp <= m; ++kp) {
    for (int km = 0; kp + km <= m; ++km) {
      XmStratum s;
      s.k_plus = kp;
      s.k_minus = km;
      s.rigid = (kp + km == m);
      s.param_dim = s.rigid ? 0 : m - kp - km;
      s.pseudocirculant = (kp == 0 || km == 0);
      out.push_back(s);
    }
  }
  return out;
}

SinglyGenSpec xm_stratum_spec(const XmStratum& stratum, int m) {
  return make_singly_gen(Poly::x_power(m), Poly::x_power(stratum.k_plus),
                         Poly::x_power(stratum.k_minus), Poly::one());
}

bool xm_rigid_obstruction(int k_plus, int k_minus, int m, int n) {
  if (k_plus + k_minus != m || k_plus <= 0 || k_minus <= 0 || k_plus >= m || k_minus >= m) {
    throw InvalidParameters("obstruction applies to rigid strata with 0 < k_+, k_- < m");
  }
  Poly p = Poly::x_power(m);
  SinglyGenSpec spec = xm_stratum_spec({k_plus, k_minus, true, 0, false}, m);
  AlgebraSpec aspec{n, m, spec};

  PMElement proto = pm_reduce(Poly::zero(), p);
  // Y has M^{k_+} on the diagonal and every upper offset, zeros below.
  BlockToeplitz<PMElement> y(n, proto);
  for (int i = 0; i <= n - 1; ++i) y.block(i) = pm_reduce(Poly::x_power(k_plus), p);
  // Y' mirrors it on the lower side with M^{k_-}.
  BlockToeplitz<PMElement> y_prime(n, proto);
  for (int i = 0; i >= -(n - 1); --i) y_prime.block(i) = pm_reduce(Poly::x_power(k_minus), p);
  if (!membership(aspec, y) || !membership(aspec, y_prime)) return false;

  // Any F_{A,B} containing Y forces A M^{k_+} = 0, i.e. A lies in the
  // annihilator of M^{k_+}; check every annihilator element is a multiple
  // of M, hence noninvertible. Same for B via Y'.
  auto annihilator_in_radical = [&](int k) {
    for (int r = 0; r + (m - k) < m; ++r) {
      Poly a = Poly::x_power(m - k + r);
      if (!poly_divmod(a * Poly::x_power(k), p).second.is_zero()) return false;
      if (pm_is_invertible(pm_reduce(a, p))) return false;
    }
    // The annihilator is exactly (X^{m-k}); anything killing M^k must be in
    // it, and m - k >= 1 places it inside (X).
    return m - k >= 1;
  };
  if (!annihilator_in_radical(k_plus) || !annihilator_in_radical(k_minus)) return false;

  // Both A and B then share ker M, which is nonzero.
  MatrixD mmat = companion(p);
  return !is_invertible(mmat);
}

GeneratorSet<OpqElement> schur_generators(int p, int q, int n) {
  if (p < 1 || q < 1 || n < 2) throw InvalidParameters("need p, q >= 1 and n >= 2");
  OpqElement proto(p, q);
  GeneratorSet<OpqElement> gens;

  BlockToeplitz<OpqElement> ident(n, proto);
  ident.block(0) = entry_identity(proto);
  gens.push_back(std::move(ident));

  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < q; ++j) {
      OpqElement corner(p, q);
      corner.x_at(i, j) = gr_one();
      BlockToeplitz<OpqElement> diag(n, proto);
      diag.block(0) = corner;
      gens.push_back(std::move(diag));
      for (int k = 1; k <= n - 1; ++k) {
        BlockToeplitz<OpqElement> top(n, proto);
        top.block(k) = corner;
        gens.push_back(std::move(top));
        BlockToeplitz<OpqElement> bottom(n, proto);
        bottom.block(k - n) = corner;
        gens.push_back(std::move(bottom));
      }
    }
  }
  return gens;
}

bool schur_is_maximal(int p, int q, int n) {
  if (p < 1 || q < 1) throw InvalidParameters("need p, q >= 1");
  if (p - q > 1 || q - p > 1) {
    throw InvalidSpec("maximality of the Schur algebra requires |p - q| <= 1");
  }
  return is_maximal(schur_generators(p, q, n));
}

}  // namespace btalg
