#pragma once

#include <cstddef>
#include <vector>

#include "novk/error.hpp"
#include "novk/numeric.hpp"

namespace novk {

// Dense integer matrix, row-major, exact arithmetic.
struct IntMatrix {
  size_t rows = 0;
  size_t cols = 0;
  std::vector<Int> entries;

  IntMatrix() = default;
  IntMatrix(size_t r, size_t c) : rows(r), cols(c), entries(r * c, Int(0)) {}
  IntMatrix(size_t r, size_t c, std::vector<Int> e);

  static IntMatrix identity(size_t n);

  Int& at(size_t r, size_t c) { return entries[r * cols + c]; }
  const Int& at(size_t r, size_t c) const { return entries[r * cols + c]; }

  bool operator==(const IntMatrix& o) const = default;
};

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
IntMatrix transpose(const IntMatrix& a);

// U * M * V = diag(d) with U, V unimodular and d_i | d_{i+1}, d_i >= 0.
struct SNFResult {
  std::vector<Int> d; // length min(rows, cols)
  IntMatrix U;
  IntMatrix V;

  size_t rank() const;
  IntMatrix diagonal(size_t rows, size_t cols) const;
};

SNFResult smith_normal_form(const IntMatrix& m);

// rank over Q, computed by fraction-free (Bareiss) elimination; this is a
// code path independent of smith_normal_form and is used as its cross-check
size_t rank_over_q(const IntMatrix& m);

// The sublattice of Z^cols spanned by the rows of a matrix. Membership is
// decided exactly through the Smith form.
class RowLattice {
 public:
  explicit RowLattice(const IntMatrix& a);

  size_t ambient_dim() const { return cols_; }
  bool contains(const std::vector<Int>& v) const;
  bool contains_rows(const IntMatrix& b) const;

 private:
  SNFResult snf_;
  size_t cols_;
  size_t rows_;
};

bool same_row_lattice(const IntMatrix& a, const IntMatrix& b);

} // namespace novk
