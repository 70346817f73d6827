#include "btalg/opq.hpp"

#include "btalg/errors.hpp"

namespace btalg {

namespace {
void check_shape(const OpqElement& a, const OpqElement& b) {
  if (a.p != b.p || a.q != b.q) throw ShapeMismatch("O_{p,q} shapes differ");
}
}  // namespace

OpqElement operator+(const OpqElement& a, const OpqElement& b) {
  check_shape(a, b);
  OpqElement out(a.p, a.q);
  out.lambda = a.lambda + b.lambda;
  for (size_t i = 0; i < a.x.size(); ++i) out.x[i] = a.x[i] + b.x[i];
  return out;
}

OpqElement operator-(const OpqElement& a, const OpqElement& b) {
  check_shape(a, b);
  OpqElement out(a.p, a.q);
  out.lambda = a.lambda - b.lambda;
  for (size_t i = 0; i < a.x.size(); ++i) out.x[i] = a.x[i] - b.x[i];
  return out;
}

OpqElement operator*(const OpqElement& a, const OpqElement& b) {
  check_shape(a, b);
  OpqElement out(a.p, a.q);
  out.lambda = a.lambda * b.lambda;
  for (size_t i = 0; i < a.x.size(); ++i) {
    out.x[i] = a.lambda * b.x[i] + b.lambda * a.x[i];
  }
  return out;
}

MatrixD opq_to_matrix(const OpqElement& e) {
  int d = e.p + e.q;
  MatrixD m(d);
  for (int i = 0; i < d; ++i) m.at(i, i) = e.lambda;
  for (int i = 0; i < e.p; ++i) {
    for (int j = 0; j < e.q; ++j) m.at(i, e.p + j) = e.x_at(i, j);
  }
  return m;
}

bool matrix_to_opq(const MatrixD& m, int p, int q, OpqElement* out) {
  if (m.dim() != p + q) return false;
  GaussianRational lambda = m.at(0, 0);
  int d = p + q;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      bool corner = i < p && j >= p;
      if (i == j) {
        if (!(m.at(i, j) == lambda)) return false;
      } else if (!corner && !m.at(i, j).is_zero()) {
        return false;
      }
    }
  }
  if (out) {
    *out = OpqElement(p, q);
    out->lambda = lambda;
    for (int i = 0; i < p; ++i) {
      for (int j = 0; j < q; ++j) out->x_at(i, j) = m.at(i, p + j);
    }
  }
  return true;
}

bool entry_is_zero(const OpqElement& e) {
  if (!e.lambda.is_zero()) return false;
  for (const auto& c : e.x) {
    if (!c.is_zero()) return false;
  }
  return true;
}

OpqElement entry_scale(const OpqElement& e, const GaussianRational& c) {
  OpqElement out(e.p, e.q);
  out.lambda = c * e.lambda;
  for (size_t i = 0; i < e.x.size(); ++i) out.x[i] = c * e.x[i];
  return out;
}

Vec entry_coords(const OpqElement& e) {
  Vec v;
  v.reserve(1 + e.x.size());
  v.push_back(e.lambda);
  for (const auto& c : e.x) v.push_back(c);
  return v;
}

OpqElement entry_from_coords(const OpqElement& proto, const Vec& coords) {
  OpqElement out(proto.p, proto.q);
  out.lambda = coords[0];
  for (size_t i = 0; i < out.x.size(); ++i) out.x[i] = coords[i + 1];
  return out;
}

}  // namespace btalg
