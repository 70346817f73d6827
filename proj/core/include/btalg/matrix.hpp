#ifndef BTALG_MATRIX_HPP
#define BTALG_MATRIX_HPP

#include <vector>

#include "btalg/linalg.hpp"
#include "btalg/poly.hpp"
#include "btalg/scalars.hpp"

namespace btalg {

// Dense square matrix over the Gaussian rationals.
class MatrixD {
 public:
  MatrixD() : dim_(0) {}
  explicit MatrixD(int d) : dim_(d), e_(static_cast<size_t>(d) * d, gr_zero()) {}

  static MatrixD identity(int d);

  int dim() const { return dim_; }
  const GaussianRational& at(int i, int j) const { return e_[i * dim_ + j]; }
  GaussianRational& at(int i, int j) { return e_[i * dim_ + j]; }

  bool is_zero() const;
  bool is_diagonal() const;

  friend bool operator==(const MatrixD&, const MatrixD&) = default;

  MatrixD operator-() const;
  friend MatrixD operator+(const MatrixD& a, const MatrixD& b);
  friend MatrixD operator-(const MatrixD& a, const MatrixD& b);
  friend MatrixD operator*(const MatrixD& a, const MatrixD& b);
  friend MatrixD operator*(const GaussianRational& c, const MatrixD& a);

 private:
  int dim_;
  std::vector<GaussianRational> e_;
};

// Companion matrix of a monic polynomial of degree >= 1: subdiagonal ones,
// last column the negated coefficients. Throws NotMonic.
MatrixD companion(const Poly& p);

// Horner evaluation of a at M, exact.
MatrixD eval_poly_at_matrix(const Poly& a, const MatrixD& m);

// Monic minimal polynomial, found as the first linear dependency among
// I, M, M^2, ...
Poly minimal_polynomial(const MatrixD& m);

// Minimal polynomial equals the characteristic polynomial (degree d).
bool is_nonderogatory(const MatrixD& m);

bool is_invertible(const MatrixD& m);

// ker A and ker B intersect trivially.
bool kernels_intersect_trivially(const MatrixD& a, const MatrixD& b);

// ---- entry interface used by the block Toeplitz templates ----

inline MatrixD entry_zero(const MatrixD& proto) { return MatrixD(proto.dim()); }
inline MatrixD entry_identity(const MatrixD& proto) {
  return MatrixD::identity(proto.dim());
}
inline bool entry_is_zero(const MatrixD& m) { return m.is_zero(); }
inline MatrixD entry_scale(const MatrixD& m, const GaussianRational& c) { return c * m; }
inline int entry_dim(const MatrixD& proto) { return proto.dim(); }
inline int entry_coord_dim(const MatrixD& proto) { return proto.dim() * proto.dim(); }
Vec entry_coords(const MatrixD& m);
MatrixD entry_from_coords(const MatrixD& proto, const Vec& coords);
inline MatrixD entry_realize(const MatrixD& m) { return m; }
inline bool entry_shape_match(const MatrixD& a, const MatrixD& b) {
  return a.dim() == b.dim();
}

}  // namespace btalg

#endif  // BTALG_MATRIX_HPP
