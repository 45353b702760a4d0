#pragma once

#include <map>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "facelab/complex.hpp"
#include "facelab/linalg.hpp"
#include "facelab/manifold.hpp"

namespace facelab {

struct LsopFailure : std::runtime_error {
  explicit LsopFailure(const std::string& w) : std::runtime_error(w) {}
};
struct FieldTooSmall : std::runtime_error {
  explicit FieldTooSmall(const std::string& w) : std::runtime_error(w) {}
};

struct ArtinianOptions {
  unsigned long long seed = 0;
  int max_attempts = 8;  // distinct linear-system draws before giving up
};

/** A monomial is its sorted multiset of variables (size = degree). */
using Monomial = std::vector<Vertex>;

/**
 * Exact-arithmetic Artinian reduction of the face ring by a random linear
 * system of parameters.
 *
 * Per degree j the relation space W_j (the degree-j part of the ideal
 * generated by the linear system, inside the span of the face-supported
 * monomials) is held as a fully back-substituted echelon pool.  The next
 * degree is generated from
 *
 *     W_{j+1} = Theta * (standard monomials of degree j)  +  sum_v x_v * W_j,
 *
 * which spans the same space as Theta * (all degree-j monomials): each
 * theta_t * w with w in W_j expands to a combination of x_v * w.  Because
 * stored rows are pivot + short tail on standard monomials, every generated
 * row stays sparse and the elimination remains cheap at this scale.
 *
 * Quantities exposed: graded dimensions (Hilbert function of the quotient),
 * dimensions of the socle per degree, multiplication maps by arbitrary
 * linear forms on the standard-monomial bases, and the same maps on the
 * quotient by the below-top socle.
 */
class GradedQuotient {
 public:
  GradedQuotient(const SimplicialComplex& K, const Gf& field, ArtinianOptions opts = {})
      : K_(K), F_(&field) {
    init_common();
    for (int attempt = 0; attempt < opts.max_attempts; ++attempt) {
      seed_used_ = opts.seed + static_cast<unsigned long long>(attempt);
      std::mt19937_64 rng(seed_used_);
      theta_.assign(static_cast<std::size_t>(d_), std::vector<std::uint32_t>(n_, 0));
      for (auto& row : theta_)
        for (auto& c : row) c = F_->sample(rng);
      build();
      if (valid_) break;
    }
    if (!valid_)
      throw LsopFailure("no valid linear system of parameters after " +
                        std::to_string(opts.max_attempts) + " attempts (seed " +
                        std::to_string(opts.seed) + ")");
    finish();
  }

  /** Test hook: explicit linear forms (d rows of n coefficients), no retry. */
  GradedQuotient(const SimplicialComplex& K, const Gf& field,
                 std::vector<std::vector<std::uint32_t>> theta)
      : K_(K), F_(&field) {
    init_common();
    if (static_cast<int>(theta.size()) != d_)
      throw std::invalid_argument("expected one linear form per facet vertex count");
    for (const auto& row : theta)
      if (static_cast<int>(row.size()) != n_)
        throw std::invalid_argument("linear form has wrong coefficient count");
    theta_ = std::move(theta);
    build();
    if (valid_) finish();
  }

  bool lsop_valid() const { return valid_; }
  int top_degree() const { return d_; }
  unsigned long long seed_used() const { return seed_used_; }
  const Gf& field() const { return *F_; }
  const std::vector<std::vector<std::uint32_t>>& theta() const { return theta_; }

  /** Graded dimensions of the quotient, degrees 0..top. */
  const std::vector<long long>& hilbert() const {
    require_valid();
    return hilbert_;
  }

  /** Socle dimensions per degree 0..top (at the top the whole space). */
  const std::vector<long long>& socle_dims() const {
    require_valid();
    return socle_;
  }

  /** Dimensions after killing the socle below the top degree. */
  std::vector<long long> socle_free_dims() const {
    require_valid();
    std::vector<long long> out(hilbert_);
    for (int j = 0; j < d_; ++j) out[static_cast<std::size_t>(j)] -= socle_[static_cast<std::size_t>(j)];
    return out;
  }

  /**
   * Matrix of multiplication by the linear form with the given coefficients,
   * from degree j to j+1, on the standard-monomial bases (rows x cols =
   * dim_{j+1} x dim_j).
   */
  DenseMat linear_map(const std::vector<std::uint32_t>& coeffs, int j) const {
    require_valid();
    check_degree(j);
    const auto& src = std_cols_[static_cast<std::size_t>(j)];
    const long long rows = j + 1 <= d_ ? hilbert_[static_cast<std::size_t>(j) + 1] : 0;
    DenseMat M(static_cast<int>(rows), static_cast<int>(src.size()));
    for (std::size_t k = 0; k < src.size(); ++k) {
      const Monomial& m = mons_[static_cast<std::size_t>(j)][static_cast<std::size_t>(src[k])];
      SparseRow acc;
      for (Vertex v = 0; v < n_; ++v) {
        if (!coeffs[static_cast<std::size_t>(v)]) continue;
        int col = times_var(j, m, v);
        if (col >= 0) acc.push_back({col, coeffs[static_cast<std::size_t>(v)]});
      }
      std::sort(acc.begin(), acc.end(), [](const Ent& a, const Ent& b) { return a.col < b.col; });
      const SparseRow rem = pools_[static_cast<std::size_t>(j) + 1]->reduce(acc);
      for (const Ent& e : rem)
        M.at(std_pos_[static_cast<std::size_t>(j) + 1][static_cast<std::size_t>(e.col)],
             static_cast<int>(k)) = e.val;
    }
    return M;
  }

  /** The same multiplication on the socle-free quotient. */
  DenseMat linear_map_socle_free(const std::vector<std::uint32_t>& coeffs, int j) const {
    require_valid();
    check_degree(j);
    const DenseMat M = linear_map(coeffs, j);
    const auto& rj = *reducers_[static_cast<std::size_t>(j)];
    const auto& rj1 = *reducers_[static_cast<std::size_t>(j) + 1];
    DenseMat out(rj1.dim(), rj.dim());
    std::vector<std::uint32_t> col(static_cast<std::size_t>(M.rows()), 0);
    const auto& lift = rj.complement_coords();
    for (std::size_t k = 0; k < lift.size(); ++k) {
      for (int i = 0; i < M.rows(); ++i) col[static_cast<std::size_t>(i)] = M.at(i, lift[k]);
      const auto w = rj1.reduce(col);
      for (int i = 0; i < out.rows(); ++i) out.at(i, static_cast<int>(k)) = w[static_cast<std::size_t>(i)];
    }
    return out;
  }

  /** Socle dimensions of the socle-free quotient (level/Gorenstein tests). */
  std::vector<long long> socle_free_socle_dims() const {
    require_valid();
    std::vector<long long> out;
    const auto dims = socle_free_dims();
    for (int j = 0; j <= d_; ++j) {
      const long long cols = dims[static_cast<std::size_t>(j)];
      if (cols == 0) {
        out.push_back(0);
        continue;
      }
      std::vector<DenseMat> blocks;
      for (Vertex v = 0; v < n_; ++v) {
        std::vector<std::uint32_t> unit(static_cast<std::size_t>(n_), 0);
        unit[static_cast<std::size_t>(v)] = 1;
        blocks.push_back(j < d_ ? linear_map_socle_free(unit, j)
                                : DenseMat(0, static_cast<int>(cols)));
      }
      const DenseMat X = DenseMat::vstack(blocks);
      out.push_back(cols - X.rank(*F_));
    }
    return out;
  }

 private:
  void init_common() {
    if (K_.is_void() || K_.is_empty_face_only())
      throw EmptyInput("artinian reduction: complex has no vertices");
    if (F_->order() < (1ull << 14))
      throw FieldTooSmall("need field order >= 2^14 for reliable generic draws, got " +
                          std::to_string(F_->order()));
    n_ = K_.num_vertices();
    d_ = K_.dim() + 1;
  }

  // Column id of m * x_v in degree deg+1, or -1 when the product vanishes
  // because its support is not a face.
  int times_var(int deg, const Monomial& m, Vertex v) const {
    Monomial prod;
    prod.reserve(m.size() + 1);
    bool placed = false;
    for (Vertex w : m) {
      if (!placed && v < w) {
        prod.push_back(v);
        placed = true;
      }
      prod.push_back(w);
    }
    if (!placed) prod.push_back(v);
    Face supp;
    for (Vertex w : prod)
      if (supp.empty() || supp.back() != w) supp.push_back(w);
    if (!K_.contains(supp)) return -1;
    const auto& idx = mon_index_[static_cast<std::size_t>(deg) + 1];
    const auto it = idx.find(prod);
    return it == idx.end() ? -1 : it->second;
  }

  void build() {
    const std::size_t levels = static_cast<std::size_t>(d_) + 2;  // degrees 0..d+1
    mons_.assign(levels, {});
    mon_index_.assign(levels, {});
    pools_.clear();
    std_cols_.assign(levels, {});
    std_pos_.assign(levels, {});
    hilbert_.assign(static_cast<std::size_t>(d_) + 1, 0);

    mons_[0] = {Monomial{}};
    mon_index_[0][Monomial{}] = 0;
    for (std::size_t lvl = 0; lvl < levels; ++lvl)
      pools_.push_back(nullptr);
    pools_[0] = std::make_unique<RrefPool>(*F_, 1, /*keep_reduced=*/true);
    std_cols_[0] = {0};
    std_pos_[0] = {0};
    hilbert_[0] = 1;

    long long top_plus_dim = -1;
    for (int j = 0; j < d_ + 1; ++j) {
      // Enumerate degree j+1 monomials via the unique factorization
      // m' = m * x_max(m'); keeps each product supported on a face.
      auto& mons = mons_[static_cast<std::size_t>(j) + 1];
      auto& idx = mon_index_[static_cast<std::size_t>(j) + 1];
      for (const Monomial& m : mons_[static_cast<std::size_t>(j)]) {
        const Vertex lo = m.empty() ? 0 : m.back();
        Face supp;
        for (Vertex w : m)
          if (supp.empty() || supp.back() != w) supp.push_back(w);
        for (Vertex v = lo; v < n_; ++v) {
          Face s = supp;
          if (s.empty() || s.back() != v) s.push_back(v);
          if (!K_.contains(s)) continue;
          Monomial prod = m;
          prod.push_back(v);
          idx[prod] = static_cast<int>(mons.size());
          mons.push_back(std::move(prod));
        }
      }
      // Keep column order lexicographic for a deterministic pivot choice.
      std::vector<int> order(mons.size());
      for (std::size_t t = 0; t < order.size(); ++t) order[t] = static_cast<int>(t);
      std::sort(order.begin(), order.end(),
                [&](int a, int b) { return mons[static_cast<std::size_t>(a)] < mons[static_cast<std::size_t>(b)]; });
      std::vector<Monomial> sorted;
      sorted.reserve(mons.size());
      for (int t : order) sorted.push_back(mons[static_cast<std::size_t>(t)]);
      mons = std::move(sorted);
      idx.clear();
      for (std::size_t t = 0; t < mons.size(); ++t) idx[mons[t]] = static_cast<int>(t);

      auto& pool = pools_[static_cast<std::size_t>(j) + 1];
      pool = std::make_unique<RrefPool>(*F_, static_cast<int>(mons.size()), /*keep_reduced=*/true);

      // Generators of W_{j+1}: theta_t * (standard monomials) ...
      for (int c : std_cols_[static_cast<std::size_t>(j)]) {
        const Monomial& m = mons_[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)];
        for (int t = 0; t < d_; ++t) {
          SparseRow row;
          for (Vertex v = 0; v < n_; ++v) {
            const std::uint32_t cf = theta_[static_cast<std::size_t>(t)][static_cast<std::size_t>(v)];
            if (!cf) continue;
            const int col = times_var(j, m, v);
            if (col >= 0) row.push_back({col, cf});
          }
          std::sort(row.begin(), row.end(), [](const Ent& a, const Ent& b) { return a.col < b.col; });
          pool->insert(row);
        }
      }
      // ... and x_v * (reduced basis rows of W_j).
      for (const SparseRow& b : pools_[static_cast<std::size_t>(j)]->rows()) {
        for (Vertex v = 0; v < n_; ++v) {
          SparseRow row;
          for (const Ent& e : b) {
            const Monomial& m = mons_[static_cast<std::size_t>(j)][static_cast<std::size_t>(e.col)];
            const int col = times_var(j, m, v);
            if (col >= 0) row.push_back({col, e.val});
          }
          std::sort(row.begin(), row.end(), [](const Ent& a, const Ent& b) { return a.col < b.col; });
          pool->insert(row);
        }
      }

      auto& stdc = std_cols_[static_cast<std::size_t>(j) + 1];
      stdc = pool->nonpivot_cols();
      auto& pos = std_pos_[static_cast<std::size_t>(j) + 1];
      pos.assign(mons.size(), -1);
      for (std::size_t t = 0; t < stdc.size(); ++t) pos[static_cast<std::size_t>(stdc[t])] = static_cast<int>(t);
      if (j + 1 <= d_)
        hilbert_[static_cast<std::size_t>(j) + 1] = static_cast<long long>(stdc.size());
      else
        top_plus_dim = static_cast<long long>(stdc.size());
    }
    valid_ = top_plus_dim == 0;
  }

  // Socle and socle-free structure; only meaningful for a valid system.
  void finish() {
    socle_.assign(static_cast<std::size_t>(d_) + 1, 0);
    reducers_.clear();
    reducers_.resize(static_cast<std::size_t>(d_) + 1);
    std::vector<DenseMat> socle_basis(static_cast<std::size_t>(d_) + 1);
    for (int j = 0; j <= d_; ++j) {
      const long long cols = hilbert_[static_cast<std::size_t>(j)];
      if (cols == 0) {
        socle_basis[static_cast<std::size_t>(j)] = DenseMat(0, 0);
        reducers_[static_cast<std::size_t>(j)] =
            std::make_unique<SubspaceReducer>(*F_, 0, DenseMat(0, 0));
        continue;
      }
      std::vector<DenseMat> blocks;
      for (Vertex v = 0; v < n_; ++v) {
        std::vector<std::uint32_t> unit(static_cast<std::size_t>(n_), 0);
        unit[static_cast<std::size_t>(v)] = 1;
        blocks.push_back(linear_map_raw(unit, j));
      }
      const DenseMat X = DenseMat::vstack(blocks);
      const DenseMat ker = X.nullspace(*F_);
      socle_[static_cast<std::size_t>(j)] = ker.rows();
      socle_basis[static_cast<std::size_t>(j)] = ker;
      // The quotient keeps the top degree whole.
      reducers_[static_cast<std::size_t>(j)] = std::make_unique<SubspaceReducer>(
          *F_, static_cast<int>(cols),
          j < d_ ? ker : DenseMat(0, static_cast<int>(cols)));
    }
  }

  // linear_map without the validity gate (used while finishing construction).
  DenseMat linear_map_raw(const std::vector<std::uint32_t>& coeffs, int j) const {
    const auto& src = std_cols_[static_cast<std::size_t>(j)];
    const long long rows = j + 1 <= d_ ? hilbert_[static_cast<std::size_t>(j) + 1] : 0;
    DenseMat M(static_cast<int>(rows), static_cast<int>(src.size()));
    for (std::size_t k = 0; k < src.size(); ++k) {
      const Monomial& m = mons_[static_cast<std::size_t>(j)][static_cast<std::size_t>(src[k])];
      SparseRow acc;
      for (Vertex v = 0; v < n_; ++v) {
        if (!coeffs[static_cast<std::size_t>(v)]) continue;
        const int col = times_var(j, m, v);
        if (col >= 0) acc.push_back({col, coeffs[static_cast<std::size_t>(v)]});
      }
      std::sort(acc.begin(), acc.end(), [](const Ent& a, const Ent& b) { return a.col < b.col; });
      const SparseRow rem = pools_[static_cast<std::size_t>(j) + 1]->reduce(acc);
      for (const Ent& e : rem)
        M.at(std_pos_[static_cast<std::size_t>(j) + 1][static_cast<std::size_t>(e.col)],
             static_cast<int>(k)) = e.val;
    }
    return M;
  }

  void require_valid() const {
    if (!valid_) throw std::logic_error("quotient is infinite-dimensional; no data available");
  }
  void check_degree(int j) const {
    if (j < 0 || j > d_) throw std::out_of_range("degree outside 0..top");
  }

  SimplicialComplex K_;
  const Gf* F_;
  int n_ = 0, d_ = 0;
  unsigned long long seed_used_ = 0;
  bool valid_ = false;
  std::vector<std::vector<std::uint32_t>> theta_;
  std::vector<std::vector<Monomial>> mons_;
  std::vector<std::map<Monomial, int>> mon_index_;
  std::vector<std::unique_ptr<RrefPool>> pools_;
  std::vector<std::vector<int>> std_cols_;
  std::vector<std::vector<int>> std_pos_;
  std::vector<long long> hilbert_;
  std::vector<long long> socle_;
  std::vector<std::unique_ptr<SubspaceReducer>> reducers_;
};

/** True when the given forms cut the face ring down to finite dimension. */
inline bool lsop_validate(const SimplicialComplex& K, const Gf& field,
                          std::vector<std::vector<std::uint32_t>> theta) {
  GradedQuotient q(K, field, std::move(theta));
  return q.lsop_valid();
}

// ---------------------------------------------------------------------------
// Structure checks driven by the oracle
// ---------------------------------------------------------------------------

struct GorensteinReport {
  std::vector<long long> hilbert, socle, socle_free, socle_free_socle;
  int top_degree = 0;
  bool symmetric = false;   // socle-free dimensions form a palindrome
  bool level = false;       // socle of the socle-free quotient sits on top
  bool gorenstein = false;  // ... and is one-dimensional
  unsigned long long seed_used = 0;
};

inline GorensteinReport gorenstein_check(const SimplicialComplex& K, const Gf& field,
                                         ArtinianOptions opts = {}) {
  GradedQuotient q(K, field, opts);
  GorensteinReport rep;
  rep.hilbert = q.hilbert();
  rep.socle = q.socle_dims();
  rep.socle_free = q.socle_free_dims();
  rep.socle_free_socle = q.socle_free_socle_dims();
  rep.seed_used = q.seed_used();
  int top = 0;
  for (int j = 0; j <= q.top_degree(); ++j)
    if (rep.socle_free[static_cast<std::size_t>(j)] > 0) top = j;
  rep.top_degree = top;
  rep.symmetric = true;
  for (int j = 0; j <= top; ++j)
    rep.symmetric = rep.symmetric && rep.socle_free[static_cast<std::size_t>(j)] ==
                                         rep.socle_free[static_cast<std::size_t>(top - j)];
  long long below = 0, total = 0;
  for (int j = 0; j <= q.top_degree(); ++j) {
    total += rep.socle_free_socle[static_cast<std::size_t>(j)];
    if (j < top) below += rep.socle_free_socle[static_cast<std::size_t>(j)];
  }
  rep.level = below == 0 && total > 0;
  rep.gorenstein = rep.level && total == 1;
  return rep;
}

struct WlpReport {
  int degree_from = 0;  // middle degree floor(top/2)
  long long dim_from = 0, dim_to = 0, rank = 0;
  bool full_rank_middle = false;
  int attempts = 0;
  unsigned long long quotient_seed = 0;
};

/**
 * Weak-Lefschetz test for homology spheres and balls: a generic linear form
 * must have full rank from the middle degree up.
 */
inline WlpReport wlp_check(const SimplicialComplex& K, const Gf& field,
                           ArtinianOptions opts = {}) {
  const auto rep = classify(K, field);
  if (rep.status != ManifoldStatus::sphere && rep.status != ManifoldStatus::ball)
    throw PreconditionFailed("wlp_check: complex is not a homology sphere or ball");
  GradedQuotient q(K, field, opts);
  WlpReport out;
  out.quotient_seed = q.seed_used();
  const int j = q.top_degree() / 2;
  out.degree_from = j;
  out.dim_from = q.hilbert()[static_cast<std::size_t>(j)];
  out.dim_to = j + 1 <= q.top_degree() ? q.hilbert()[static_cast<std::size_t>(j) + 1] : 0;
  const long long want = std::min(out.dim_from, out.dim_to);
  for (int attempt = 0; attempt < opts.max_attempts; ++attempt) {
    std::mt19937_64 rng(q.seed_used() + 0x9E3779B97F4A7C15ull * (attempt + 1));
    std::vector<std::uint32_t> omega(static_cast<std::size_t>(K.num_vertices()), 0);
    for (auto& c : omega) c = field.sample(rng);
    const long long r = q.linear_map(omega, j).rank(field);
    out.attempts = attempt + 1;
    if (r > out.rank) out.rank = r;
    if (out.rank == want) break;
  }
  out.full_rank_middle = out.rank == want;
  return out;
}

struct LefschetzEntry {
  int degree = 0;  // the map goes degree -> degree + 1
  long long dim_from = 0, dim_to = 0, rank = 0;
  bool expect_injective = false, expect_surjective = false;
  bool ok = true;
};

struct LefschetzReport {
  bool informational = false;  // facet size below 4: ranges reported, not binding
  bool pass = true;            // all binding expectations met
  std::vector<LefschetzEntry> entries;
  std::vector<long long> socle_free_dims;
  unsigned long long quotient_seed = 0;
  int attempts = 0;
};

/**
 * Rank test for generic linear-form multiplication on the socle-free
 * quotient of the completion: injective in low degrees and surjective in
 * high ones.  Without the Lefschetz assumption only degrees <= 1 resp.
 * >= top-2 are binding; with it the ranges meet in the middle.
 */
inline LefschetzReport lefschetz_maps_check(const SimplicialComplex& K, const Gf& field,
                                            bool assume_wlp, ArtinianOptions opts = {}) {
  const auto rep = classify(K, field);
  if (!status_is_manifold(rep.status))
    throw NotAManifold("lefschetz_maps_check: not a homology manifold");
  if (!rep.connected) throw NotConnected("lefschetz_maps_check: disconnected");
  if (!rep.orientable)
    throw NotOrientable("lefschetz_maps_check: not orientable over this field");
  const SimplicialComplex hat =
      status_has_boundary(rep.status) ? completion(K, field).complex : K;
  GradedQuotient q(hat, field, opts);
  const int d = q.top_degree();
  LefschetzReport out;
  out.quotient_seed = q.seed_used();
  out.socle_free_dims = q.socle_free_dims();
  out.informational = d < 4;

  std::vector<LefschetzEntry> best;
  int best_fails = -1;
  for (int attempt = 0; attempt < opts.max_attempts; ++attempt) {
    std::mt19937_64 rng(q.seed_used() + 0x9E3779B97F4A7C15ull * (attempt + 1));
    std::vector<std::uint32_t> omega(static_cast<std::size_t>(hat.num_vertices()), 0);
    for (auto& c : omega) c = field.sample(rng);
    std::vector<LefschetzEntry> cur;
    int fails = 0;
    for (int i = 0; i < d; ++i) {
      LefschetzEntry e;
      e.degree = i;
      e.dim_from = out.socle_free_dims[static_cast<std::size_t>(i)];
      e.dim_to = out.socle_free_dims[static_cast<std::size_t>(i) + 1];
      e.rank = q.linear_map_socle_free(omega, i).rank(field);
      e.expect_injective = assume_wlp ? i < d / 2 : i <= 1;
      e.expect_surjective = assume_wlp ? i >= (d + 1) / 2 : i >= d - 2;
      e.ok = (!e.expect_injective || e.rank == e.dim_from) &&
             (!e.expect_surjective || e.rank == e.dim_to);
      if (!e.ok) ++fails;
      cur.push_back(e);
    }
    out.attempts = attempt + 1;
    if (best_fails < 0 || fails < best_fails) {
      best_fails = fails;
      best = cur;
    }
    if (fails == 0) break;
  }
  out.entries = std::move(best);
  out.pass = best_fails == 0;
  return out;
}

}  // namespace facelab
