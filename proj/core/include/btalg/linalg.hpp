#ifndef BTALG_LINALG_HPP
#define BTALG_LINALG_HPP

#include <vector>

#include "btalg/scalars.hpp"

namespace btalg {

// Row-major exact matrices for the internal elimination routines.
using Vec = std::vector<GaussianRational>;
using Mat = std::vector<Vec>;

// Reduced row echelon form, in place. Returns the pivot columns.
std::vector<int> rref(Mat& m);

int rank(Mat m);

// Basis of {x : m x = 0}, where every row of m has length ncols.
std::vector<Vec> nullspace(const Mat& m, int ncols);

bool in_span(const std::vector<Vec>& basis, const Vec& v);

// The two families span the same subspace.
bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b);

}  // namespace btalg

#endif  // BTALG_LINALG_HPP
