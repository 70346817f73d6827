#include "btalg/matrix.hpp"

#include "btalg/errors.hpp"

namespace btalg {

MatrixD MatrixD::identity(int d) {
  MatrixD m(d);
  for (int i = 0; i < d; ++i) m.at(i, i) = gr_one();
  return m;
}

bool MatrixD::is_zero() const {
  for (const auto& x : e_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool MatrixD::is_diagonal() const {
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      if (i != j && !at(i, j).is_zero()) return false;
    }
  }
  return true;
}

MatrixD MatrixD::operator-() const {
  MatrixD out(dim_);
  for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = -e_[i];
  return out;
}

MatrixD operator+(const MatrixD& a, const MatrixD& b) {
  if (a.dim_ != b.dim_) throw ShapeMismatch("matrix addition");
  MatrixD out(a.dim_);
  for (size_t i = 0; i < a.e_.size(); ++i) out.e_[i] = a.e_[i] + b.e_[i];
  return out;
}

MatrixD operator-(const MatrixD& a, const MatrixD& b) {
  if (a.dim_ != b.dim_) throw ShapeMismatch("matrix subtraction");
  MatrixD out(a.dim_);
  for (size_t i = 0; i < a.e_.size(); ++i) out.e_[i] = a.e_[i] - b.e_[i];
  return out;
}

MatrixD operator*(const MatrixD& a, const MatrixD& b) {
  if (a.dim_ != b.dim_) throw ShapeMismatch("matrix product");
  int d = a.dim_;
  MatrixD out(d);
  for (int i = 0; i < d; ++i) {
    for (int k = 0; k < d; ++k) {
      const GaussianRational& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < d; ++j) {
        out.at(i, j) = out.at(i, j) + aik * b.at(k, j);
      }
    }
  }
  return out;
}

MatrixD operator*(const GaussianRational& c, const MatrixD& a) {
  MatrixD out(a.dim_);
  for (size_t i = 0; i < a.e_.size(); ++i) out.e_[i] = c * a.e_[i];
  return out;
}

MatrixD companion(const Poly& p) {
  if (!p.is_monic()) throw NotMonic("companion matrix needs a monic polynomial");
  int d = p.degree();
  if (d < 1) throw NotMonic("companion matrix needs degree >= 1");
  MatrixD m(d);
  for (int i = 0; i + 1 < d; ++i) m.at(i + 1, i) = gr_one();
  for (int i = 0; i < d; ++i) m.at(i, d - 1) = -p.coeff(i);
  return m;
}

MatrixD eval_poly_at_matrix(const Poly& a, const MatrixD& m) {
  MatrixD acc(m.dim());
  for (int i = a.degree(); i >= 0; --i) {
    acc = acc * m;
    for (int k = 0; k < m.dim(); ++k) {
      acc.at(k, k) = acc.at(k, k) + a.coeff(i);
    }
  }
  return acc;
}

Vec entry_coords(const MatrixD& m) {
  Vec v;
  v.reserve(static_cast<size_t>(m.dim()) * m.dim());
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) v.push_back(m.at(i, j));
  }
  return v;
}

MatrixD entry_from_coords(const MatrixD& proto, const Vec& coords) {
  MatrixD m(proto.dim());
  int d = proto.dim();
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) m.at(i, j) = coords[i * d + j];
  }
  return m;
}

Poly minimal_polynomial(const MatrixD& m) {
  int d = m.dim();
  // Rows of `powers` are vec(M^k) for k = 0, 1, ...; the first k whose power
  // is a combination of the previous ones yields the minimal polynomial.
  std::vector<Vec> powers;
  MatrixD cur = MatrixD::identity(d);
  for (int k = 0; k <= d; ++k) {
    Vec vk = entry_coords(cur);
    // Solve powers^T x = vk if possible.
    Mat system;
    int cols = static_cast<int>(powers.size());
    if (cols > 0) {
      system.resize(vk.size(), Vec(cols + 1, gr_zero()));
      for (size_t r = 0; r < vk.size(); ++r) {
        for (int c = 0; c < cols; ++c) system[r][c] = powers[c][r];
        system[r][cols] = vk[r];
      }
      Mat reduced = system;
      std::vector<int> pivots = rref(reduced);
      bool solvable = true;
      for (int c : pivots) {
        if (c == cols) {
          solvable = false;
          break;
        }
      }
      if (solvable) {
        // Read the combination coefficients back off the echelon form.
        std::vector<GaussianRational> combo(cols, gr_zero());
        for (size_t r = 0; r < pivots.size(); ++r) combo[pivots[r]] = reduced[r][cols];
        std::vector<GaussianRational> coeffs(k + 1, gr_zero());
        for (int c = 0; c < cols; ++c) coeffs[c] = -combo[c];
        coeffs[k] = gr_one();
        return Poly(std::move(coeffs));
      }
    }
    powers.push_back(std::move(vk));
    cur = cur * m;
  }
  throw Inconsistent("minimal polynomial search failed");  // unreachable
}

bool is_nonderogatory(const MatrixD& m) {
  return minimal_polynomial(m).degree() == m.dim();
}

bool is_invertible(const MatrixD& m) {
  Mat rows;
  for (int i = 0; i < m.dim(); ++i) {
    Vec row;
    for (int j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j));
    rows.push_back(std::move(row));
  }
  return rank(std::move(rows)) == m.dim();
}

bool kernels_intersect_trivially(const MatrixD& a, const MatrixD& b) {
  if (a.dim() != b.dim()) throw ShapeMismatch("kernel intersection");
  int d = a.dim();
  Mat stacked;
  for (int i = 0; i < d; ++i) {
    Vec row;
    for (int j = 0; j < d; ++j) row.push_back(a.at(i, j));
    stacked.push_back(std::move(row));
  }
  for (int i = 0; i < d; ++i) {
    Vec row;
    for (int j = 0; j < d; ++j) row.push_back(b.at(i, j));
    stacked.push_back(std::move(row));
  }
  return rank(std::move(stacked)) == d;
}

}  // namespace btalg
