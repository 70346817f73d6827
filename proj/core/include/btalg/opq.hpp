#ifndef BTALG_OPQ_HPP
#define BTALG_OPQ_HPP

#include <vector>

#include "btalg/matrix.hpp"

namespace btalg {

// Element of the coefficient algebra O_{p,q}: with respect to the splitting
// C^d = C^p (+) C^q it is the block matrix with lambda*I on the diagonal and
// an arbitrary p x q corner X.
struct OpqElement {
  int p = 0;
  int q = 0;
  GaussianRational lambda;
  std::vector<GaussianRational> x;  // row-major p x q

  OpqElement() = default;
  OpqElement(int p_, int q_)
      : p(p_), q(q_), lambda(gr_zero()), x(static_cast<size_t>(p_) * q_, gr_zero()) {}

  const GaussianRational& x_at(int i, int j) const { return x[i * q + j]; }
  GaussianRational& x_at(int i, int j) { return x[i * q + j]; }

  friend bool operator==(const OpqElement&, const OpqElement&) = default;
};

OpqElement operator+(const OpqElement& a, const OpqElement& b);
OpqElement operator-(const OpqElement& a, const OpqElement& b);
OpqElement operator*(const OpqElement& a, const OpqElement& b);

MatrixD opq_to_matrix(const OpqElement& e);
// Recognize a d x d matrix of O_{p,q} shape; returns false if it is not.
bool matrix_to_opq(const MatrixD& m, int p, int q, OpqElement* out);

// ---- entry interface ----

inline OpqElement entry_zero(const OpqElement& proto) {
  return OpqElement(proto.p, proto.q);
}
inline OpqElement entry_identity(const OpqElement& proto) {
  OpqElement e(proto.p, proto.q);
  e.lambda = gr_one();
  return e;
}
bool entry_is_zero(const OpqElement& e);
OpqElement entry_scale(const OpqElement& e, const GaussianRational& c);
inline int entry_dim(const OpqElement& proto) { return proto.p + proto.q; }
inline int entry_coord_dim(const OpqElement& proto) { return 1 + proto.p * proto.q; }
Vec entry_coords(const OpqElement& e);
OpqElement entry_from_coords(const OpqElement& proto, const Vec& coords);
inline MatrixD entry_realize(const OpqElement& e) { return opq_to_matrix(e); }
inline bool entry_shape_match(const OpqElement& a, const OpqElement& b) {
  return a.p == b.p && a.q == b.q;
}

}  // namespace btalg

#endif  // BTALG_OPQ_HPP
