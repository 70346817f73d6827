#ifndef BTALG_TOEPLITZ_HPP
#define BTALG_TOEPLITZ_HPP

#include <optional>
#include <vector>

#include "btalg/errors.hpp"
#include "btalg/matrix.hpp"
#include "btalg/opq.hpp"
#include "btalg/pm.hpp"

namespace btalg {

// n x n block Toeplitz matrix, stored as its 2n-1 blocks indexed by the
// offset j = row - column, j in [-(n-1), n-1]. Zero blocks are stored
// explicitly so equality stays structural.
template <typename E>
struct BlockToeplitz {
  int n = 0;
  std::vector<E> blocks;  // index j + n - 1

  BlockToeplitz() = default;
  BlockToeplitz(int n_, const E& proto)
      : n(n_), blocks(2 * static_cast<size_t>(n_) - 1, entry_zero(proto)) {
    if (n_ < 1) throw ShapeMismatch("block order must be >= 1");
  }

  const E& block(int offset) const { return blocks[offset + n - 1]; }
  E& block(int offset) { return blocks[offset + n - 1]; }
  const E& proto() const { return blocks[0]; }
  int d() const { return entry_dim(proto()); }

  friend bool operator==(const BlockToeplitz&, const BlockToeplitz&) = default;
};

// Full n x n block matrix; product results live here until Toeplitzness
// is established.
template <typename E>
struct BlockMatrix {
  int n = 0;
  std::vector<E> cells;  // row-major

  BlockMatrix() = default;
  BlockMatrix(int n_, const E& proto)
      : n(n_), cells(static_cast<size_t>(n_) * n_, entry_zero(proto)) {}

  const E& at(int i, int j) const { return cells[i * n + j]; }
  E& at(int i, int j) { return cells[i * n + j]; }
  const E& proto() const { return cells[0]; }

  friend bool operator==(const BlockMatrix&, const BlockMatrix&) = default;
};

// Block Toeplitz cyclic diagonal of order k: the block pair (A_k, A_{k-n}).
// For k = 0 only the single block A_0 is carried.
template <typename E>
struct CyclicDiagonal {
  int n = 0;
  int order = 0;
  E top;                    // A_k
  std::optional<E> bottom;  // A_{k-n}, absent when order = 0

  BlockToeplitz<E> embed() const {
    BlockToeplitz<E> t(n, top);
    t.block(order) = top;
    if (order >= 1 && bottom) t.block(order - n) = *bottom;
    return t;
  }

  friend bool operator==(const CyclicDiagonal&, const CyclicDiagonal&) = default;
};

template <typename E>
void check_shapes(const BlockToeplitz<E>& a, const BlockToeplitz<E>& b) {
  if (a.n != b.n || !entry_shape_match(a.proto(), b.proto())) {
    throw ShapeMismatch("block Toeplitz shapes differ");
  }
}

// Entry (i, j) is the block at offset i - j.
template <typename E>
BlockMatrix<E> to_full(const BlockToeplitz<E>& a) {
  BlockMatrix<E> out(a.n, a.proto());
  for (int i = 0; i < a.n; ++i) {
    for (int j = 0; j < a.n; ++j) out.at(i, j) = a.block(i - j);
  }
  return out;
}

// Every diagonal constant.
template <typename E>
bool is_block_toeplitz(const BlockMatrix<E>& c) {
  for (int i = 1; i < c.n; ++i) {
    for (int j = 1; j < c.n; ++j) {
      if (!(c.at(i, j) == c.at(i - 1, j - 1))) return false;
    }
  }
  return true;
}

// Read a block Toeplitz matrix off a full one; first row and column carry
// all 2n-1 offsets.
template <typename E>
BlockToeplitz<E> toeplitz_from_full(const BlockMatrix<E>& c) {
  BlockToeplitz<E> out(c.n, c.proto());
  for (int j = 0; j < c.n; ++j) out.block(-j) = c.at(0, j);
  for (int i = 1; i < c.n; ++i) out.block(i) = c.at(i, 0);
  return out;
}

// The compatibility criterion: A_i B_{j-n} = A_{i-n} B_j for all
// i, j in 1..n-1; holds iff AB is block Toeplitz.
template <typename E>
bool compatible(const BlockToeplitz<E>& a, const BlockToeplitz<E>& b) {
  check_shapes(a, b);
  for (int i = 1; i < a.n; ++i) {
    for (int j = 1; j < b.n; ++j) {
      if (!(a.block(i) * b.block(j - a.n) == a.block(i - a.n) * b.block(j))) {
        return false;
      }
    }
  }
  return true;
}

template <typename E>
struct ProductResult {
  BlockMatrix<E> full;
  bool toeplitz = false;
  std::optional<BlockToeplitz<E>> as_toeplitz;
};

// Full block product (structured entry sums), plus the Toeplitz reading
// when the factors are compatible.
template <typename E>
ProductResult<E> product(const BlockToeplitz<E>& a, const BlockToeplitz<E>& b) {
  check_shapes(a, b);
  ProductResult<E> res;
  res.full = BlockMatrix<E>(a.n, a.proto());
  for (int i = 0; i < a.n; ++i) {
    for (int j = 0; j < a.n; ++j) {
      E acc = entry_zero(a.proto());
      for (int k = 0; k < a.n; ++k) {
        acc = acc + a.block(i - k) * b.block(k - j);
      }
      res.full.at(i, j) = acc;
    }
  }
  res.toeplitz = compatible(a, b);
  if (res.toeplitz) res.as_toeplitz = toeplitz_from_full(res.full);
  return res;
}

template <typename E>
struct CyclicProductResult {
  int order = 0;
  BlockMatrix<E> full;  // cyclic-diagonal shaped, generally not Toeplitz
};

// Product of two Toeplitz cyclic diagonals, entries written case by case.
template <typename E>
CyclicProductResult<E> cyclic_product(const CyclicDiagonal<E>& a, const CyclicDiagonal<E>& b) {
  if (a.n != b.n || !entry_shape_match(a.top, b.top)) {
    throw ShapeMismatch("cyclic diagonal shapes differ");
  }
  int n = a.n;
  int k = a.order;
  int l = b.order;
  const E zero = entry_zero(a.top);
  const E& ak = a.top;
  const E akn = a.bottom ? *a.bottom : zero;  // A_{k-n}, zero at order 0
  const E& bl = b.top;
  const E bln = b.bottom ? *b.bottom : zero;

  CyclicProductResult<E> res;
  res.order = (k + l) % n;
  res.full = BlockMatrix<E>(n, a.top);
  for (int j = 0; j < n; ++j) {
    if (k + l <= n - 1) {
      if (j + k + l <= n - 1) {
        res.full.at(j + k + l, j) = ak * bl;
      } else if (j + l <= n - 1) {
        res.full.at(j + k + l - n, j) = akn * bl;
      } else {
        res.full.at(j + k + l - n, j) = ak * bln;
      }
    } else {
      if (j + l <= n - 1) {
        res.full.at(j + k + l - n, j) = akn * bl;
      } else if (j + k + l <= 2 * n - 1) {
        res.full.at(j + k + l - n, j) = ak * bln;
      } else {
        res.full.at(j + k + l - 2 * n, j) = akn * bln;
      }
    }
  }
  return res;
}

// Projection E_k: keep offsets k and k-n, zero elsewhere.
template <typename E>
CyclicDiagonal<E> project_Ek(const BlockToeplitz<E>& a, int k) {
  if (k < 0 || k > a.n - 1) throw OrderOutOfRange();
  CyclicDiagonal<E> d;
  d.n = a.n;
  d.order = k;
  d.top = a.block(k);
  if (k >= 1) d.bottom = a.block(k - a.n);
  return d;
}

template <typename E>
BlockMatrix<E> project_Ek(const BlockMatrix<E>& a, int k) {
  if (k < 0 || k > a.n - 1) throw OrderOutOfRange();
  BlockMatrix<E> out(a.n, a.proto());
  for (int i = 0; i < a.n; ++i) {
    for (int j = 0; j < a.n; ++j) {
      if (i - j == k || i - j == k - a.n) out.at(i, j) = a.at(i, j);
    }
  }
  return out;
}

// Action of the symmetric group on the cyclic diagonals of order 1..n-1:
// B_k = A_{sigma^{-1}(k)}, B_{k-n} = A_{sigma^{-1}(k)-n}; the main diagonal
// is left unchanged. sigma[k-1] = sigma(k) for k = 1..n-1.
template <typename E>
BlockToeplitz<E> permute(const BlockToeplitz<E>& a, const std::vector<int>& sigma) {
  int n = a.n;
  if (static_cast<int>(sigma.size()) != n - 1) throw InvalidPermutation();
  std::vector<int> inverse(n, 0);
  std::vector<bool> seen(n, false);
  for (int k = 1; k <= n - 1; ++k) {
    int image = sigma[k - 1];
    if (image < 1 || image > n - 1 || seen[image]) throw InvalidPermutation();
    seen[image] = true;
    inverse[image] = k;
  }
  BlockToeplitz<E> out(n, a.proto());
  out.block(0) = a.block(0);
  for (int k = 1; k <= n - 1; ++k) {
    out.block(k) = a.block(inverse[k]);
    out.block(k - n) = a.block(inverse[k] - n);
  }
  return out;
}

// A_i A_0^m A_{j-n} = A_{i-n} A_0^m A_j for i, j in 1..n-1 and
// m in 0..d-1; equivalent to all powers of A staying block Toeplitz.
template <typename E>
bool powers_toeplitz(const BlockToeplitz<E>& a) {
  int d = a.d();
  E a0m = entry_identity(a.proto());
  for (int m = 0; m < d; ++m) {
    for (int i = 1; i < a.n; ++i) {
      for (int j = 1; j < a.n; ++j) {
        if (!(a.block(i) * a0m * a.block(j - a.n) ==
              a.block(i - a.n) * a0m * a.block(j))) {
          return false;
        }
      }
    }
    a0m = a0m * a.block(0);
  }
  return true;
}

}  // namespace btalg

#endif  // BTALG_TOEPLITZ_HPP
