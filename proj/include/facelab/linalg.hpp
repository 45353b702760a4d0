#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "facelab/field.hpp"

namespace facelab {

/** Sparse vector entry over a fixed column universe. */
struct Ent {
  int col;
  std::uint32_t val;
};
using SparseRow = std::vector<Ent>;  // sorted by col, values nonzero

/**
 * Incremental row-echelon pool over a finite field.
 *
 * Rows are inserted one at a time and reduced against existing pivot rows.
 * The pivot of a row is its least column.  In reduced mode the pool is kept
 * fully back-substituted, so every stored row is (pivot) + (tail supported on
 * the current non-pivot columns); that keeps tails short, which matters when
 * pool rows are themselves used to spawn new generators.
 */
class RrefPool {
 public:
  RrefPool(const Gf& field, int ncols, bool keep_reduced)
      : F_(&field), ncols_(ncols), keep_reduced_(keep_reduced) {
    pivot_row_of_col_.assign(ncols, -1);
    if (keep_reduced_) tail_rows_of_col_.assign(ncols, {});
    scratch_.assign(ncols, 0);
  }

  int ncols() const { return ncols_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  std::vector<int> nonpivot_cols() const {
    std::vector<int> out;
    for (int c = 0; c < ncols_; ++c)
      if (pivot_row_of_col_[c] < 0) out.push_back(c);
    return out;
  }

  const std::vector<SparseRow>& rows() const { return rows_; }

  /** Inserts a row; returns its pivot column, or -1 if it reduced to zero. */
  int insert(const SparseRow& row) {
    SparseRow rem = reduce(row);
    if (rem.empty()) return -1;
    const int pc = rem.front().col;
    // Normalize so the pivot coefficient is 1.
    const std::uint32_t s = F_->inv(rem.front().val);
    if (s != 1)
      for (auto& e : rem) e.val = F_->mul(e.val, s);
    const int rid = static_cast<int>(rows_.size());
    if (keep_reduced_) {
      // Back-substitute the new pivot column out of existing tails.
      auto& holders = tail_rows_of_col_[pc];
      for (int h : holders) {
        SparseRow& hr = rows_[h];
        auto it = std::lower_bound(hr.begin(), hr.end(), pc,
                                   [](const Ent& e, int c) { return e.col < c; });
        if (it == hr.end() || it->col != pc) continue;  // stale index entry
        axpy_into(hr, F_->neg(it->val), rem, h);
      }
      holders.clear();
      for (std::size_t i = 1; i < rem.size(); ++i) tail_rows_of_col_[rem[i].col].push_back(rid);
    }
    rows_.push_back(std::move(rem));
    pivot_row_of_col_[pc] = rid;
    return pc;
  }

  /** Remainder of a row modulo the pool; supported on non-pivot columns. */
  SparseRow reduce(const SparseRow& row) const {
    for (const Ent& e : row) {
      scratch_[e.col] = F_->add(scratch_[e.col], e.val);
      touched_.push_back(e.col);
    }
    SparseRow rem;
    std::sort(touched_.begin(), touched_.end());
    for (std::size_t t = 0; t < touched_.size(); ++t) {
      const int c = touched_[t];
      const std::uint32_t v = scratch_[c];
      if (v == 0) continue;
      const int pr = pivot_row_of_col_[c];
      if (pr < 0) {
        rem.push_back({c, v});
        scratch_[c] = 0;
        continue;
      }
      // Cancel with the pivot row; its other entries live at larger columns.
      const std::uint32_t coef = F_->neg(v);
      const SparseRow& prow = rows_[pr];
      for (std::size_t i = 1; i < prow.size(); ++i) {
        const int cc = prow[i].col;
        if (scratch_[cc] == 0) touched_.push_back(cc);
        scratch_[cc] = F_->add(scratch_[cc], F_->mul(coef, prow[i].val));
      }
      scratch_[c] = 0;
      // Keep the scan ordered after appending new columns.
      std::sort(touched_.begin() + static_cast<std::ptrdiff_t>(t) + 1, touched_.end());
    }
    for (int c : touched_) scratch_[c] = 0;
    touched_.clear();
    return rem;
  }

 private:
  // rows_[rid] += coef * src, keeping sortedness; updates the tail index.
  void axpy_into(SparseRow& dst, std::uint32_t coef, const SparseRow& src, int rid) {
    SparseRow out;
    out.reserve(dst.size() + src.size());
    std::size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
      if (j == src.size() || (i < dst.size() && dst[i].col < src[j].col)) {
        out.push_back(dst[i++]);
      } else if (i == dst.size() || src[j].col < dst[i].col) {
        const std::uint32_t v = F_->mul(coef, src[j].val);
        if (v) {
          out.push_back({src[j].col, v});
          if (keep_reduced_ && src[j].col != out.front().col)
            tail_rows_of_col_[src[j].col].push_back(rid);
        }
        ++j;
      } else {
        const std::uint32_t v = F_->add(dst[i].val, F_->mul(coef, src[j].val));
        if (v) out.push_back({dst[i].col, v});
        ++i, ++j;
      }
    }
    dst = std::move(out);
  }

  const Gf* F_;
  int ncols_;
  bool keep_reduced_;
  std::vector<SparseRow> rows_;
  std::vector<int> pivot_row_of_col_;
  std::vector<std::vector<int>> tail_rows_of_col_;  // lazy, may hold stale ids
  mutable std::vector<std::uint32_t> scratch_;
  mutable std::vector<int> touched_;
};

/** Rank of a sparse matrix given as rows. */
inline int sparse_rank(const Gf& field, int ncols, const std::vector<SparseRow>& rows) {
  RrefPool pool(field, ncols, /*keep_reduced=*/false);
  for (const auto& r : rows) pool.insert(r);
  return pool.rank();
}

/** Dense matrix over a finite field; used for the small quotient-space maps. */
class DenseMat {
 public:
  DenseMat() = default;
  DenseMat(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * cols, 0) {}

  int rows() const { return r_; }
  int cols() const { return c_; }
  std::uint32_t& at(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
  std::uint32_t at(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }

  /** Stacks blocks vertically; all must share the column count. */
  static DenseMat vstack(const std::vector<DenseMat>& blocks) {
    int rows = 0;
    const int cols = blocks.empty() ? 0 : blocks.front().cols();
    for (const auto& b : blocks) rows += b.rows();
    DenseMat out(rows, cols);
    int off = 0;
    for (const auto& b : blocks) {
      for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < cols; ++j) out.at(off + i, j) = b.at(i, j);
      off += b.rows();
    }
    return out;
  }

  DenseMat scaled_add(const Gf& F, std::uint32_t self_coef, const DenseMat& other,
                      std::uint32_t other_coef) const {
    DenseMat out(r_, c_);
    for (std::size_t i = 0; i < a_.size(); ++i)
      out.a_[i] = F.add(F.mul(a_[i], self_coef), F.mul(other.a_[i], other_coef));
    return out;
  }

  std::vector<std::uint32_t> apply(const Gf& F, const std::vector<std::uint32_t>& v) const {
    std::vector<std::uint32_t> out(r_, 0);
    for (int i = 0; i < r_; ++i) {
      std::uint32_t acc = 0;
      for (int j = 0; j < c_; ++j)
        if (v[j]) acc = F.add(acc, F.mul(at(i, j), v[j]));
      out[i] = acc;
    }
    return out;
  }

  int rank(const Gf& F) const {
    DenseMat m = *this;
    int rank = 0;
    for (int col = 0; col < c_ && rank < r_; ++col) {
      int piv = -1;
      for (int i = rank; i < r_; ++i)
        if (m.at(i, col)) { piv = i; break; }
      if (piv < 0) continue;
      for (int j = 0; j < c_; ++j) std::swap(m.at(piv, j), m.at(rank, j));
      const std::uint32_t s = F.inv(m.at(rank, col));
      for (int j = col; j < c_; ++j) m.at(rank, j) = F.mul(m.at(rank, j), s);
      for (int i = 0; i < r_; ++i) {
        if (i == rank || !m.at(i, col)) continue;
        const std::uint32_t f = F.neg(m.at(i, col));
        for (int j = col; j < c_; ++j)
          m.at(i, j) = F.add(m.at(i, j), F.mul(f, m.at(rank, j)));
      }
      ++rank;
    }
    return rank;
  }

  /** Basis of the right null space, as rows of a (nullity x cols) matrix. */
  DenseMat nullspace(const Gf& F) const {
    DenseMat m = *this;
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < c_ && rank < r_; ++col) {
      int piv = -1;
      for (int i = rank; i < r_; ++i)
        if (m.at(i, col)) { piv = i; break; }
      if (piv < 0) continue;
      for (int j = 0; j < c_; ++j) std::swap(m.at(piv, j), m.at(rank, j));
      const std::uint32_t s = F.inv(m.at(rank, col));
      for (int j = col; j < c_; ++j) m.at(rank, j) = F.mul(m.at(rank, j), s);
      for (int i = 0; i < r_; ++i) {
        if (i == rank || !m.at(i, col)) continue;
        const std::uint32_t f = F.neg(m.at(i, col));
        for (int j = col; j < c_; ++j)
          m.at(i, j) = F.add(m.at(i, j), F.mul(f, m.at(rank, j)));
      }
      pivot_col.push_back(col);
      ++rank;
    }
    std::vector<bool> is_pivot(c_, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < c_; ++c)
      if (!is_pivot[c]) free_cols.push_back(c);
    DenseMat ns(static_cast<int>(free_cols.size()), c_);
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
      const int fc = free_cols[k];
      ns.at(static_cast<int>(k), fc) = 1;
      for (int r = 0; r < rank; ++r)
        ns.at(static_cast<int>(k), pivot_col[r]) = F.neg(m.at(r, fc));
    }
    return ns;
  }

 private:
  int r_ = 0, c_ = 0;
  std::vector<std::uint32_t> a_;
};

/**
 * Coordinates on a complement of a subspace: given a basis of S inside k^n,
 * reduce(v) returns the class of v expressed on the non-pivot coordinates.
 */
class SubspaceReducer {
 public:
  SubspaceReducer(const Gf& F, int n, const DenseMat& basis_rows) : F_(&F), n_(n) {
    DenseMat m = basis_rows;
    int rank = 0;
    for (int col = 0; col < n && rank < m.rows(); ++col) {
      int piv = -1;
      for (int i = rank; i < m.rows(); ++i)
        if (m.at(i, col)) { piv = i; break; }
      if (piv < 0) continue;
      for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(rank, j));
      const std::uint32_t s = F.inv(m.at(rank, col));
      for (int j = col; j < n; ++j) m.at(rank, j) = F.mul(m.at(rank, j), s);
      for (int i = 0; i < m.rows(); ++i) {
        if (i == rank || !m.at(i, col)) continue;
        const std::uint32_t f = F.neg(m.at(i, col));
        for (int j = col; j < n; ++j)
          m.at(i, j) = F.add(m.at(i, j), F.mul(f, m.at(rank, j)));
      }
      pivots_.push_back(col);
      ++rank;
    }
    rref_ = std::move(m);
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots_) is_pivot[c] = true;
    for (int c = 0; c < n; ++c)
      if (!is_pivot[c]) complement_.push_back(c);
  }

  int dim() const { return static_cast<int>(complement_.size()); }
  const std::vector<int>& complement_coords() const { return complement_; }

  std::vector<std::uint32_t> reduce(const std::vector<std::uint32_t>& v) const {
    std::vector<std::uint32_t> w = v;
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
      const std::uint32_t coef = w[pivots_[r]];
      if (!coef) continue;
      const std::uint32_t f = F_->neg(coef);
      for (int j = 0; j < n_; ++j)
        w[j] = F_->add(w[j], F_->mul(f, rref_.at(static_cast<int>(r), j)));
    }
    std::vector<std::uint32_t> out(complement_.size());
    for (std::size_t k = 0; k < complement_.size(); ++k) out[k] = w[complement_[k]];
    return out;
  }

 private:
  const Gf* F_;
  int n_;
  DenseMat rref_;
  std::vector<int> pivots_;
  std::vector<int> complement_;
};

}  // namespace facelab
