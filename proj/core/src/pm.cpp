#include "btalg/pm.hpp"

#include "btalg/errors.hpp"

namespace btalg {

PMElement pm_reduce(const Poly& a, const Poly& p) {
  if (!p.is_monic() || p.degree() < 1) {
    throw NotMonic("P(M) modulus must be monic of degree >= 1");
  }
  return {p, poly_divmod(a, p).second};
}

bool pm_is_invertible(const PMElement& e) {
  if (e.residue.is_zero()) return false;
  return poly_coprime(e.residue, e.modulus);
}

PMElement pm_inverse(const PMElement& e) {
  return {e.modulus, poly_mod_inverse(e.residue, e.modulus)};
}

namespace {
void check_same_modulus(const PMElement& a, const PMElement& b) {
  if (a.modulus != b.modulus) throw ModulusMismatch();
}
}  // namespace

PMElement operator+(const PMElement& a, const PMElement& b) {
  check_same_modulus(a, b);
  return {a.modulus, a.residue + b.residue};
}

PMElement operator-(const PMElement& a, const PMElement& b) {
  check_same_modulus(a, b);
  return {a.modulus, a.residue - b.residue};
}

PMElement operator*(const PMElement& a, const PMElement& b) {
  check_same_modulus(a, b);
  return {a.modulus, poly_divmod(a.residue * b.residue, a.modulus).second};
}

Vec entry_coords(const PMElement& e) {
  Vec v(e.modulus.degree(), gr_zero());
  for (int i = 0; i <= e.residue.degree(); ++i) v[i] = e.residue.coeff(i);
  return v;
}

PMElement entry_from_coords(const PMElement& proto, const Vec& coords) {
  return {proto.modulus, Poly(std::vector<GaussianRational>(coords.begin(), coords.end()))};
}

MatrixD entry_realize(const PMElement& e) {
  return eval_poly_at_matrix(e.residue, companion(e.modulus));
}

}  // namespace btalg
