#include "btalg/linalg.hpp"

namespace btalg {

std::vector<int> rref(Mat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  int rows = static_cast<int>(m.size());
  int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i) {
      if (!m[i][c].is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[r], m[pivot]);
    GaussianRational inv = m[r][c].inverse();
    for (int j = c; j < cols; ++j) m[r][j] = inv * m[r][j];
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      GaussianRational f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(Mat m) { return static_cast<int>(rref(m).size()); }

std::vector<Vec> nullspace(const Mat& m, int ncols) {
  Mat work = m;
  for (auto& row : work) row.resize(ncols, gr_zero());
  std::vector<int> pivots = rref(work);
  std::vector<bool> is_pivot(ncols, false);
  for (int c : pivots) is_pivot[c] = true;

  std::vector<Vec> basis;
  for (int free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(ncols, gr_zero());
    v[free] = gr_one();
    for (size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = -work[r][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

bool in_span(const std::vector<Vec>& basis, const Vec& v) {
  bool all_zero = true;
  for (const auto& x : v) {
    if (!x.is_zero()) {
      all_zero = false;
      break;
    }
  }
  if (all_zero) return true;
  if (basis.empty()) return false;
  Mat m(basis.begin(), basis.end());
  int before = rank(m);
  m.push_back(v);
  return rank(std::move(m)) == before;
}

bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b) {
  Mat ma(a.begin(), a.end());
  Mat mb(b.begin(), b.end());
  int ra = ma.empty() ? 0 : rank(ma);
  int rb = mb.empty() ? 0 : rank(mb);
  if (ra != rb) return false;
  Mat all = ma;
  all.insert(all.end(), mb.begin(), mb.end());
  int ru = all.empty() ? 0 : rank(std::move(all));
  return ru == ra;
}

}  // namespace btalg
