#include "novk/intmat.hpp"

#include <algorithm>

namespace novk {

IntMatrix::IntMatrix(size_t r, size_t c, std::vector<Int> e) : rows(r), cols(c), entries(std::move(e)) {
  if (entries.size() != rows * cols)
    fail(ErrKind::InvalidArgument, "entry count does not match matrix shape");
}

IntMatrix IntMatrix::identity(size_t n) {
  IntMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows) fail(ErrKind::InvalidArgument, "matrix shape mismatch in product");
  IntMatrix c(a.rows, b.cols);
  for (size_t i = 0; i < a.rows; ++i)
    for (size_t k = 0; k < a.cols; ++k) {
      if (a.at(i, k) == 0) continue;
      for (size_t j = 0; j < b.cols; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return c;
}

IntMatrix transpose(const IntMatrix& a) {
  IntMatrix t(a.cols, a.rows);
  for (size_t i = 0; i < a.rows; ++i)
    for (size_t j = 0; j < a.cols; ++j) t.at(j, i) = a.at(i, j);
  return t;
}

size_t SNFResult::rank() const {
  size_t r = 0;
  for (const auto& x : d)
    if (x != 0) ++r;
  return r;
}

IntMatrix SNFResult::diagonal(size_t rows, size_t cols) const {
  IntMatrix m(rows, cols);
  for (size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

namespace {

struct SnfWork {
  IntMatrix a, u, v;

  void swap_rows(size_t i, size_t j) {
    if (i == j) return;
    for (size_t c = 0; c < a.cols; ++c) std::swap(a.at(i, c), a.at(j, c));
    for (size_t c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
  }
  void swap_cols(size_t i, size_t j) {
    if (i == j) return;
    for (size_t r = 0; r < a.rows; ++r) std::swap(a.at(r, i), a.at(r, j));
    for (size_t r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
  }
  // row_i -= q * row_k
  void row_sub(size_t i, size_t k, const Int& q) {
    if (q == 0) return;
    for (size_t c = 0; c < a.cols; ++c) a.at(i, c) -= q * a.at(k, c);
    for (size_t c = 0; c < u.cols; ++c) u.at(i, c) -= q * u.at(k, c);
  }
  // col_j -= q * col_k
  void col_sub(size_t j, size_t k, const Int& q) {
    if (q == 0) return;
    for (size_t r = 0; r < a.rows; ++r) a.at(r, j) -= q * a.at(r, k);
    for (size_t r = 0; r < v.rows; ++r) v.at(r, j) -= q * v.at(r, k);
  }
  void negate_row(size_t i) {
    for (size_t c = 0; c < a.cols; ++c) a.at(i, c) = -a.at(i, c);
    for (size_t c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
  }
};

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

} // namespace

SNFResult smith_normal_form(const IntMatrix& m) {
  SnfWork w{m, IntMatrix::identity(m.rows), IntMatrix::identity(m.cols)};
  const size_t n = std::min(m.rows, m.cols);

  for (size_t t = 0; t < n; ++t) {
    // pick the remaining entry of least absolute value as the pivot
    size_t pi = t, pj = t;
    Int best(0);
    for (size_t i = t; i < m.rows; ++i)
      for (size_t j = t; j < m.cols; ++j) {
        const Int& x = w.a.at(i, j);
        if (x == 0) continue;
        if (best == 0 || abs_int(x) < best) {
          best = abs_int(x);
          pi = i;
          pj = j;
        }
      }
    if (best == 0) break; // submatrix is zero
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);

    for (;;) {
      bool clean = true;
      for (size_t i = t + 1; i < m.rows; ++i) {
        if (w.a.at(i, t) == 0) continue;
        Int q = w.a.at(i, t) / w.a.at(t, t); // truncated division
        w.row_sub(i, t, q);
        if (w.a.at(i, t) != 0) {
          // remainder is smaller than the pivot; promote it
          w.swap_rows(t, i);
          clean = false;
        }
      }
      for (size_t j = t + 1; j < m.cols; ++j) {
        if (w.a.at(t, j) == 0) continue;
        Int q = w.a.at(t, j) / w.a.at(t, t);
        w.col_sub(j, t, q);
        if (w.a.at(t, j) != 0) {
          w.swap_cols(t, j);
          clean = false;
        }
      }
      if (!clean) continue;

      // enforce pivot | every remaining entry (divisibility chain)
      bool divides_all = true;
      for (size_t i = t + 1; i < m.rows && divides_all; ++i)
        for (size_t j = t + 1; j < m.cols; ++j)
          if (w.a.at(i, j) % w.a.at(t, t) != 0) {
            w.row_sub(t, i, Int(-1)); // row_t += row_i, exposes the bad entry
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }
    if (w.a.at(t, t) < 0) w.negate_row(t);
  }

  SNFResult res;
  res.d.reserve(n);
  for (size_t t = 0; t < n; ++t) res.d.push_back(w.a.at(t, t));
  res.U = std::move(w.u);
  res.V = std::move(w.v);
  return res;
}

size_t rank_over_q(const IntMatrix& m) {
  IntMatrix a = m;
  size_t rank = 0;
  Int prev(1);
  for (size_t col = 0; col < a.cols && rank < a.rows; ++col) {
    size_t pivot = rank;
    while (pivot < a.rows && a.at(pivot, col) == 0) ++pivot;
    if (pivot == a.rows) continue;
    if (pivot != rank)
      for (size_t c = 0; c < a.cols; ++c) std::swap(a.at(pivot, c), a.at(rank, c));
    const Int p = a.at(rank, col);
    for (size_t i = rank + 1; i < a.rows; ++i) {
      const Int head = a.at(i, col);
      for (size_t c = 0; c < a.cols; ++c)
        a.at(i, c) = (a.at(i, c) * p - head * a.at(rank, c)) / prev; // Bareiss: exact division
      a.at(i, col) = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

RowLattice::RowLattice(const IntMatrix& a)
    : snf_(smith_normal_form(a)), cols_(a.cols), rows_(a.rows) {}

bool RowLattice::contains(const std::vector<Int>& v) const {
  if (v.size() != cols_) fail(ErrKind::InvalidArgument, "vector dimension mismatch");
  // x*A = v solvable over Z iff w = v*V has w_j = d_j * (integer) in the
  // Smith coordinates and vanishes past the diagonal
  for (size_t j = 0; j < cols_; ++j) {
    Int w(0);
    for (size_t k = 0; k < cols_; ++k) w += v[k] * snf_.V.at(k, j);
    if (j < snf_.d.size() && snf_.d[j] != 0) {
      if (w % snf_.d[j] != 0) return false;
    } else {
      if (w != 0) return false;
    }
  }
  return true;
}

bool RowLattice::contains_rows(const IntMatrix& b) const {
  for (size_t i = 0; i < b.rows; ++i) {
    std::vector<Int> row(b.entries.begin() + static_cast<long>(i * b.cols),
                         b.entries.begin() + static_cast<long>((i + 1) * b.cols));
    if (!contains(row)) return false;
  }
  return true;
}

bool same_row_lattice(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.cols) fail(ErrKind::InvalidArgument, "ambient dimension mismatch");
  return RowLattice(a).contains_rows(b) && RowLattice(b).contains_rows(a);
}

} // namespace novk
