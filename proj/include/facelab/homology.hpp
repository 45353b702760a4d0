#pragma once

#include <algorithm>
#include <string>
#include <unordered_map>
#include <vector>

#include "facelab/complex.hpp"
#include "facelab/field.hpp"
#include "facelab/linalg.hpp"

namespace facelab {

struct NotASubcomplex : std::runtime_error {
  explicit NotASubcomplex(const std::string& w) : std::runtime_error(w) {}
};

/** Reduced (or relative) Betti numbers over a fixed field, degrees -1..top. */
struct BettiTable {
  std::vector<long long> reduced;  // reduced[k] is the Betti number in degree k-1
  int top_dim = -2;
  FieldSpec field;

  long long at(int degree) const {
    const int idx = degree + 1;
    if (idx < 0 || idx >= static_cast<int>(reduced.size())) return 0;
    return reduced[idx];
  }
  long long alternating_sum() const {
    long long s = 0;
    for (int d = -1; d <= top_dim; ++d) s += (d % 2 == 0 ? 1 : -1) * at(d);
    return s;
  }
};

namespace detail {

/** Chain-complex ranks for K, optionally relative to a subcomplex L. */
inline BettiTable chain_betti(const SimplicialComplex& K, const SimplicialComplex* L,
                              const Gf& field) {
  BettiTable out;
  out.field = field.spec();
  out.top_dim = K.dim();
  if (K.is_void()) {
    out.reduced = {0};
    return out;
  }
  const int d = K.dim();
  const bool drop_empty = L != nullptr && !L->is_void();  // L contains the empty face

  // Per-cardinality bases: faces of K not in L, with dense indices.
  std::vector<std::vector<Face>> basis(static_cast<std::size_t>(d) + 2);
  std::vector<std::unordered_map<Face, int, detail::FaceHash>> index(
      static_cast<std::size_t>(d) + 2);
  for (int k = 1; k <= d + 1; ++k) {
    for (const auto& f : K.faces_of_card(k)) {
      if (L != nullptr && !L->is_void()) {
        auto lf = L->face_of_tokens(K.tokens_of(f));
        if (lf && L->contains(*lf)) continue;
      }
      index[static_cast<std::size_t>(k)][f] = static_cast<int>(basis[static_cast<std::size_t>(k)].size());
      basis[static_cast<std::size_t>(k)].push_back(f);
    }
  }

  // rank of the boundary map from cardinality k to k-1 chains.
  std::vector<int> bd_rank(static_cast<std::size_t>(d) + 3, 0);
  for (int k = 1; k <= d + 1; ++k) {
    const auto& cols = basis[static_cast<std::size_t>(k)];
    std::vector<SparseRow> rows;
    rows.reserve(cols.size());
    int nrows = 0;
    if (k == 1) {
      nrows = drop_empty ? 0 : 1;  // boundary to the empty face
      if (!drop_empty)
        for (std::size_t j = 0; j < cols.size(); ++j)
          rows.push_back({{0, field.one()}});
    } else {
      nrows = static_cast<int>(basis[static_cast<std::size_t>(k) - 1].size());
      const auto& idx = index[static_cast<std::size_t>(k) - 1];
      for (const auto& f : cols) {
        SparseRow col;
        for (std::size_t drop = 0; drop < f.size(); ++drop) {
          Face sub;
          sub.reserve(f.size() - 1);
          for (std::size_t i = 0; i < f.size(); ++i)
            if (i != drop) sub.push_back(f[i]);
          auto it = idx.find(sub);
          if (it == idx.end()) continue;  // face lies in L
          col.push_back({it->second, field.from_int(drop % 2 == 0 ? 1 : -1)});
        }
        std::sort(col.begin(), col.end(), [](const Ent& a, const Ent& b) { return a.col < b.col; });
        if (!col.empty()) rows.push_back(std::move(col));
      }
    }
    bd_rank[static_cast<std::size_t>(k)] =
        nrows == 0 ? 0 : sparse_rank(field, nrows, rows);
  }

  out.reduced.assign(static_cast<std::size_t>(d) + 2, 0);
  // degree -1: C_{-1} is spanned by the empty face when present.
  const long long c_minus1 = drop_empty ? 0 : 1;
  out.reduced[0] = c_minus1 - bd_rank[1];
  for (int deg = 0; deg <= d; ++deg) {
    const long long dim_c = static_cast<long long>(basis[static_cast<std::size_t>(deg) + 1].size());
    out.reduced[static_cast<std::size_t>(deg) + 1] =
        dim_c - bd_rank[static_cast<std::size_t>(deg) + 1] - bd_rank[static_cast<std::size_t>(deg) + 2];
  }
  return out;
}

}  // namespace detail

/** Reduced Betti numbers of K over the field. */
inline BettiTable betti(const SimplicialComplex& K, const Gf& field) {
  return detail::chain_betti(K, nullptr, field);
}

/**
 * Betti numbers of the pair (K, L).  L must be a subcomplex of K (checked on
 * facets; throws NotASubcomplex).  A void L gives the reduced homology of K.
 */
inline BettiTable relative_betti(const SimplicialComplex& K, const SimplicialComplex& L,
                                 const Gf& field) {
  if (!L.is_void() && !L.is_empty_face_only()) {
    for (const auto& fac : L.facets()) {
      auto kf = K.face_of_tokens(L.tokens_of(fac));
      if (!kf || !K.contains(*kf))
        throw NotASubcomplex("relative_betti: second complex is not a subcomplex");
    }
  }
  return detail::chain_betti(K, &L, field);
}

/** Reduced Euler characteristic (the empty face contributes -1). */
inline long long reduced_euler(const SimplicialComplex& K) {
  if (K.is_void()) return 0;
  const auto f = K.f_vector();
  long long chi = -1;
  for (std::size_t i = 1; i < f.size(); ++i) chi += (i % 2 ? 1 : -1) * f[i];
  return chi;
}

}  // namespace facelab
