#ifndef BTALG_PM_HPP
#define BTALG_PM_HPP

#include "btalg/matrix.hpp"
#include "btalg/poly.hpp"

namespace btalg {

// Element of the singly generated algebra P(M), stored as the canonical
// residue modulo the (monic) minimal polynomial of M. Elements over the
// same modulus are equal iff their residues are.
struct PMElement {
  Poly modulus;  // monic, degree >= 1
  Poly residue;  // degree < degree of modulus

  friend bool operator==(const PMElement&, const PMElement&) = default;
};

// Reduce a modulo p. Throws NotMonic when p is not monic of degree >= 1.
PMElement pm_reduce(const Poly& a, const Poly& p);

// Invertible iff gcd(residue, modulus) is constant.
bool pm_is_invertible(const PMElement& e);
PMElement pm_inverse(const PMElement& e);

PMElement operator+(const PMElement& a, const PMElement& b);
PMElement operator-(const PMElement& a, const PMElement& b);
PMElement operator*(const PMElement& a, const PMElement& b);

// ---- entry interface ----

inline PMElement entry_zero(const PMElement& proto) {
  return {proto.modulus, Poly::zero()};
}
inline PMElement entry_identity(const PMElement& proto) {
  return {proto.modulus, Poly::one()};
}
inline bool entry_is_zero(const PMElement& e) { return e.residue.is_zero(); }
inline PMElement entry_scale(const PMElement& e, const GaussianRational& c) {
  return {e.modulus, c * e.residue};
}
inline int entry_dim(const PMElement& proto) { return proto.modulus.degree(); }
inline int entry_coord_dim(const PMElement& proto) { return proto.modulus.degree(); }
Vec entry_coords(const PMElement& e);
PMElement entry_from_coords(const PMElement& proto, const Vec& coords);
// Realization as a polynomial in the companion matrix of the modulus.
MatrixD entry_realize(const PMElement& e);
inline bool entry_shape_match(const PMElement& a, const PMElement& b) {
  return a.modulus == b.modulus;
}

}  // namespace btalg

#endif  // BTALG_PM_HPP
