#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "facelab/complex.hpp"
#include "facelab/enumerative.hpp"
#include "facelab/field.hpp"
#include "facelab/homology.hpp"
#include "facelab/manifold.hpp"
#include "facelab/shapes.hpp"

namespace facelab {

struct NotAFacet : std::runtime_error {
  explicit NotAFacet(const std::string& w) : std::runtime_error(w) {}
};
struct VertexClash : std::runtime_error {
  explicit VertexClash(const std::string& w) : std::runtime_error(w) {}
};
struct ManifoldViolation : std::runtime_error {
  explicit ManifoldViolation(const std::string& w) : std::runtime_error(w) {}
};
struct DistanceTooSmall : std::runtime_error {
  explicit DistanceTooSmall(const std::string& w) : std::runtime_error(w) {}
};
struct NotMissingFacet : std::runtime_error {
  explicit NotMissingFacet(const std::string& w) : std::runtime_error(w) {}
};
struct DimensionTooSmall : std::runtime_error {
  explicit DimensionTooSmall(const std::string& w) : std::runtime_error(w) {}
};
struct PieceNotManifold : std::runtime_error {
  explicit PieceNotManifold(const std::string& w) : std::runtime_error(w) {}
};
struct UnexpectedBase : std::runtime_error {
  explicit UnexpectedBase(const std::string& w) : std::runtime_error(w) {}
};
struct InvalidParams : std::runtime_error {
  explicit InvalidParams(const std::string& w) : std::runtime_error(w) {}
};

/** Facet identification: a bijection from source-facet to target-facet tokens. */
struct GlueMap {
  TokenFace source_facet;
  TokenFace target_facet;
  std::map<std::string, std::string> bijection;  // source token -> target token
};

/** Pairs source[i] with target[i] in the order given (order fixes the parity). */
inline GlueMap positional_glue(const TokenFace& source, const TokenFace& target) {
  if (source.size() != target.size())
    throw InvalidParams("positional_glue: facet sizes differ");
  GlueMap g;
  g.source_facet = source;
  g.target_facet = target;
  for (std::size_t i = 0; i < source.size(); ++i) g.bijection[source[i]] = target[i];
  if (g.bijection.size() != source.size())
    throw InvalidParams("positional_glue: repeated source vertex");
  return g;
}

enum class StepKind {
  base_stacked,
  base_no_interior_edges,
  connected_sum,
  handle_addition,
  vertex_split_reversal,
};

inline const char* to_string(StepKind k) {
  switch (k) {
    case StepKind::base_stacked: return "base_stacked";
    case StepKind::base_no_interior_edges: return "base_no_interior_edges";
    case StepKind::connected_sum: return "connected_sum";
    case StepKind::handle_addition: return "handle_addition";
    case StepKind::vertex_split_reversal: return "vertex_split_reversal";
  }
  return "?";
}

/** One move of a decomposition transcript. */
struct DecompositionStep {
  StepKind kind;
  TokenFace witness;                      // cut facet / replaced star; empty for bases
  std::vector<SimplicialComplex> pieces;  // complexes produced by the move
};

/** Codimension indices of a pseudo-handle decomposition, weakest-first. */
struct HandleSequence {
  std::vector<int> indices;
  std::string note = "valid under PL hypothesis";
};

namespace detail {

inline std::string face_text(const TokenFace& tf) {
  std::string out = "{";
  for (std::size_t i = 0; i < tf.size(); ++i) {
    if (i) out += ",";
    out += tf[i];
  }
  out += "}";
  return out;
}

inline void check_glue(const GlueMap& g) {
  if (g.source_facet.empty() || g.target_facet.empty())
    throw InvalidParams("glue map: empty facet");
  std::set<std::string> src(g.source_facet.begin(), g.source_facet.end());
  std::set<std::string> dst(g.target_facet.begin(), g.target_facet.end());
  if (src.size() != g.source_facet.size() || dst.size() != g.target_facet.size())
    throw InvalidParams("glue map: facet with repeated vertices");
  if (src.size() != dst.size()) throw InvalidParams("glue map: facet sizes differ");
  if (g.bijection.size() != src.size())
    throw InvalidParams("glue map: bijection is not total on the source facet");
  std::set<std::string> image;
  for (const auto& [a, b] : g.bijection) {
    if (!src.count(a)) throw InvalidParams("glue map: '" + a + "' is not a source vertex");
    if (!dst.count(b)) throw InvalidParams("glue map: '" + b + "' is not a target vertex");
    image.insert(b);
  }
  if (image.size() != dst.size()) throw InvalidParams("glue map: bijection is not injective");
}

/** Resolves a token face that must be a facet of K. */
inline Face require_facet(const SimplicialComplex& K, const TokenFace& tf, const std::string& who) {
  auto f = K.face_of_tokens(tf);
  if (!f || !K.contains(*f) || static_cast<int>(f->size()) != K.dim() + 1 ||
      f->size() != tf.size())
    throw NotAFacet(who + ": " + face_text(tf) + " is not a facet");
  return *f;
}

/** Vertex tokens lying on the boundary subcomplex (empty when closed). */
inline std::set<std::string> boundary_vertex_tokens(const ManifoldReport& rep) {
  std::set<std::string> out;
  if (!rep.boundary.is_void())
    out.insert(rep.boundary.labels().begin(), rep.boundary.labels().end());
  return out;
}

/** 1-skeleton adjacency lists over vertex ids. */
inline std::vector<std::vector<Vertex>> skeleton_adjacency(const SimplicialComplex& K) {
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(K.num_vertices()));
  for (const auto& e : K.faces_of_card(2)) {
    adj[static_cast<std::size_t>(e[0])].push_back(e[1]);
    adj[static_cast<std::size_t>(e[1])].push_back(e[0]);
  }
  return adj;
}

/** BFS distances from a source vertex (-1 where unreachable). */
inline std::vector<int> vertex_distances(const std::vector<std::vector<Vertex>>& adj, Vertex s) {
  std::vector<int> dist(adj.size(), -1);
  std::deque<Vertex> q{s};
  dist[static_cast<std::size_t>(s)] = 0;
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop_front();
    for (Vertex w : adj[static_cast<std::size_t>(v)])
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
        q.push_back(w);
      }
  }
  return dist;
}

/**
 * Connected components of the facet dual graph, where facets are adjacent when
 * they share a ridge for which skip_ridge is false.  Components are listed in
 * order of their least facet index; facet indices within are ascending.
 */
template <typename SkipRidge>
inline std::vector<std::vector<int>> dual_components(const SimplicialComplex& K,
                                                     SkipRidge skip_ridge) {
  const auto& facets = K.facets();
  std::map<Face, std::vector<int>> cofacets;
  for (int i = 0; i < static_cast<int>(facets.size()); ++i) {
    const Face& f = facets[static_cast<std::size_t>(i)];
    for (std::size_t drop = 0; drop < f.size(); ++drop) {
      Face r = f;
      r.erase(r.begin() + static_cast<std::ptrdiff_t>(drop));
      cofacets[r].push_back(i);
    }
  }
  std::vector<std::vector<int>> adj(facets.size());
  for (const auto& [ridge, cof] : cofacets) {
    if (cof.size() < 2 || skip_ridge(ridge)) continue;
    for (std::size_t a = 0; a < cof.size(); ++a)
      for (std::size_t b = a + 1; b < cof.size(); ++b) {
        adj[static_cast<std::size_t>(cof[a])].push_back(cof[b]);
        adj[static_cast<std::size_t>(cof[b])].push_back(cof[a]);
      }
  }
  std::vector<int> comp(facets.size(), -1);
  std::vector<std::vector<int>> out;
  for (int i = 0; i < static_cast<int>(facets.size()); ++i) {
    if (comp[static_cast<std::size_t>(i)] >= 0) continue;
    std::vector<int> members;
    std::deque<int> q{i};
    comp[static_cast<std::size_t>(i)] = static_cast<int>(out.size());
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      members.push_back(x);
      for (int y : adj[static_cast<std::size_t>(x)])
        if (comp[static_cast<std::size_t>(y)] < 0) {
          comp[static_cast<std::size_t>(y)] = static_cast<int>(out.size());
          q.push_back(y);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

/** Relabels K so that every vertex token becomes base + its old position. */
inline SimplicialComplex relabel_offset(const SimplicialComplex& K, long long base) {
  std::map<std::string, std::string> m;
  for (int v = 0; v < K.num_vertices(); ++v)
    m[K.token_of(v)] = std::to_string(base + v);
  return relabel_vertices(K, m);
}

inline long long max_numeric_label(const SimplicialComplex& K) {
  long long mx = 0;
  for (const auto& t : K.labels()) {
    bool numeric = !t.empty() && t.size() <= 18;
    for (char c : t) numeric = numeric && std::isdigit(static_cast<unsigned char>(c));
    if (numeric) mx = std::max(mx, std::stoll(t));
  }
  return mx;
}

}  // namespace detail

/**
 * All d-element vertex sets that are not faces although each of their
 * (d-1)-element subsets is, for a pure complex with facets of size d.
 * Sorted lexicographically in the complex's vertex order.
 */
inline std::vector<TokenFace> missing_facets(const SimplicialComplex& K) {
  if (K.is_void() || K.is_empty_face_only()) throw EmptyInput("missing_facets: no vertices");
  if (!K.is_pure()) throw NotPure("missing_facets: complex is not pure");
  const int d = K.dim() + 1;
  std::set<Face> found;
  if (d >= 2) {
    for (const auto& r : K.faces_of_card(d - 1)) {
      for (Vertex v = 0; v < K.num_vertices(); ++v) {
        if (std::binary_search(r.begin(), r.end(), v)) continue;
        Face cand = r;
        cand.insert(std::lower_bound(cand.begin(), cand.end(), v), v);
        if (K.contains(cand) || found.count(cand)) continue;
        bool all_subfaces = true;
        for (std::size_t drop = 0; drop < cand.size() && all_subfaces; ++drop) {
          Face sub = cand;
          sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
          all_subfaces = K.contains(sub);
        }
        if (all_subfaces) found.insert(cand);
      }
    }
  }
  std::vector<TokenFace> out;
  out.reserve(found.size());
  for (const auto& f : found) out.push_back(K.tokens_of(f));
  return out;
}

/**
 * Glues K2 onto K1 by identifying the target facet with the source facet and
 * removing the identified facet.  Vertex sets must be disjoint, and each
 * identified pair needs at least one member off its boundary; the result keeps
 * K1's labels on the seam and is re-verified as a homology manifold.
 */
inline SimplicialComplex connected_sum(const SimplicialComplex& K1, const SimplicialComplex& K2,
                                       const GlueMap& glue, const Gf& field) {
  detail::check_glue(glue);
  detail::require_facet(K1, glue.source_facet, "connected_sum");
  detail::require_facet(K2, glue.target_facet, "connected_sum");
  for (const auto& t : K1.labels())
    if (K2.id_of(t)) throw VertexClash("connected_sum: vertex '" + t + "' appears in both inputs");
  const auto rep1 = classify(K1, field);
  const auto rep2 = classify(K2, field);
  if (!status_is_manifold(rep1.status) || !status_is_manifold(rep2.status))
    throw ManifoldViolation("connected_sum: an input is not a homology manifold");
  const auto bd1 = detail::boundary_vertex_tokens(rep1);
  const auto bd2 = detail::boundary_vertex_tokens(rep2);
  for (const auto& [a, b] : glue.bijection)
    if (bd1.count(a) && bd2.count(b))
      throw ManifoldViolation("connected_sum: identified pair (" + a + "," + b +
                              ") lies on both boundaries");
  std::map<std::string, std::string> back;  // target token -> source token
  for (const auto& [a, b] : glue.bijection) back[b] = a;
  const std::set<std::string> seam(glue.source_facet.begin(), glue.source_facet.end());
  std::vector<TokenFace> facets;
  auto push_unless_seam = [&](TokenFace tf) {
    std::set<std::string> s(tf.begin(), tf.end());
    if (s != seam) facets.push_back(std::move(tf));
  };
  for (const auto& f : K1.facets()) push_unless_seam(K1.tokens_of(f));
  for (const auto& f : K2.facets()) {
    TokenFace tf;
    for (Vertex v : f) {
      const std::string& t = K2.token_of(v);
      auto it = back.find(t);
      tf.push_back(it == back.end() ? t : it->second);
    }
    push_unless_seam(std::move(tf));
  }
  SimplicialComplex out = SimplicialComplex::from_facets(facets);
  if (!status_is_manifold(classify(out, field).status))
    throw ManifoldViolation("connected_sum: result failed homology-manifold recognition");
  return out;
}

/**
 * Identifies two vertex-disjoint facets of one complex and removes the
 * identified facet.  Every identified pair must be at graph distance >= 3 and
 * have at least one member off the boundary; the facets must lie in the same
 * connected component.  Boundary is unchanged; the count of missing facets
 * strictly increases.
 */
inline SimplicialComplex handle_addition(const SimplicialComplex& K, const GlueMap& glue,
                                         const Gf& field) {
  detail::check_glue(glue);
  const Face f1 = detail::require_facet(K, glue.source_facet, "handle_addition");
  const Face f2 = detail::require_facet(K, glue.target_facet, "handle_addition");
  Face overlap;
  std::set_intersection(f1.begin(), f1.end(), f2.begin(), f2.end(), std::back_inserter(overlap));
  if (!overlap.empty()) throw VertexClash("handle_addition: facets share a vertex");
  const auto rep = classify(K, field);
  if (!status_is_manifold(rep.status))
    throw ManifoldViolation("handle_addition: input is not a homology manifold");
  const auto adj = detail::skeleton_adjacency(K);
  {
    const auto dist = detail::vertex_distances(adj, f1[0]);
    if (dist[static_cast<std::size_t>(f2[0])] < 0)
      throw ManifoldViolation("handle_addition: facets lie in different components");
  }
  const auto bd = detail::boundary_vertex_tokens(rep);
  for (const auto& [a, b] : glue.bijection) {
    if (bd.count(a) && bd.count(b))
      throw ManifoldViolation("handle_addition: identified pair (" + a + "," + b +
                              ") lies on the boundary twice");
    const Vertex va = *K.id_of(a);
    const Vertex vb = *K.id_of(b);
    const auto dist = detail::vertex_distances(adj, va);
    const int dab = dist[static_cast<std::size_t>(vb)];
    if (dab >= 0 && dab < 3)
      throw DistanceTooSmall("handle_addition: vertices " + a + " and " + b +
                             " are at graph distance " + std::to_string(dab));
  }
  std::map<std::string, std::string> back;  // target token -> source token
  for (const auto& [a, b] : glue.bijection) back[b] = a;
  const std::set<std::string> seam(glue.source_facet.begin(), glue.source_facet.end());
  std::vector<TokenFace> facets;
  for (const auto& f : K.facets()) {
    TokenFace tf;
    for (Vertex v : f) {
      const std::string& t = K.token_of(v);
      auto it = back.find(t);
      tf.push_back(it == back.end() ? t : it->second);
    }
    std::set<std::string> s(tf.begin(), tf.end());
    if (s != seam) facets.push_back(std::move(tf));
  }
  SimplicialComplex out = SimplicialComplex::from_facets(facets);
  if (!status_is_manifold(classify(out, field).status))
    throw ManifoldViolation("handle_addition: result failed homology-manifold recognition");
  return out;
}

namespace detail {

/** Side data of a non-separating cut: local two-sidedness around each cut vertex. */
struct LocalSides {
  SimplicialComplex link_complex;
  std::vector<int> comp_of_link_facet;  // component id per link facet index
  int side1_comp = -1;                  // which local component counts as side 1
};

inline int local_component(const LocalSides& ls, const SimplicialComplex& omega, const Face& facet,
                           Vertex v) {
  Face rest = facet;
  rest.erase(std::find(rest.begin(), rest.end(), v));
  auto lf = ls.link_complex.face_of_tokens(omega.tokens_of(rest));
  if (!lf)
    throw PieceNotManifold("cut: link bookkeeping failed at vertex " + omega.token_of(v));
  const auto& lfacets = ls.link_complex.facets();
  auto it = std::lower_bound(lfacets.begin(), lfacets.end(), *lf);
  if (it == lfacets.end() || *it != *lf)
    throw PieceNotManifold("cut: link bookkeeping failed at vertex " + omega.token_of(v));
  return ls.comp_of_link_facet[static_cast<std::size_t>(it - lfacets.begin())];
}

}  // namespace detail

/**
 * Reverses the surgery that created a missing facet F: facets are split along
 * the sphere that F spans, each side is filled with its own copy of F, and the
 * resulting pieces are re-verified as homology manifolds.  When the complex has
 * a boundary the operation runs on its completion, and pieces containing the
 * completion apex have it removed again.  Two sides give back the summands of a
 * connected sum; one side undoes a handle addition.
 */
inline DecompositionStep cut_along_missing_facet(const SimplicialComplex& K,
                                                 const TokenFace& missing, const Gf& field) {
  const int d = K.dim() + 1;
  if (d < 4)
    throw DimensionTooSmall("cut_along_missing_facet: facets must have at least 4 vertices");
  const auto rep = classify(K, field);
  if (!status_is_manifold(rep.status))
    throw NotAManifold("cut_along_missing_facet: input is not a homology manifold");
  SimplicialComplex omega = K;
  std::optional<std::string> apex;
  if (status_has_boundary(rep.status)) {
    auto comp = completion(K, field);
    omega = comp.complex;
    apex = comp.cone_vertex;
    if (!status_is_manifold(classify(omega, field).status))
      throw NotAManifold("cut_along_missing_facet: completion is not a homology manifold");
  }
  auto fopt = omega.face_of_tokens(missing);
  if (!fopt || static_cast<int>(fopt->size()) != d || fopt->size() != missing.size())
    throw NotMissingFacet("cut_along_missing_facet: " + detail::face_text(missing) +
                          " is not a missing facet");
  const Face F = *fopt;
  if (omega.contains(F))
    throw NotMissingFacet("cut_along_missing_facet: " + detail::face_text(missing) +
                          " is a face of the complex");
  for (std::size_t drop = 0; drop < F.size(); ++drop) {
    Face sub = F;
    sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
    if (!omega.contains(sub))
      throw NotMissingFacet("cut_along_missing_facet: a ridge of " + detail::face_text(missing) +
                            " is absent");
  }
  const TokenFace F_tokens = omega.tokens_of(F);
  auto inside_F = [&F](const Face& r) { return face_subset(r, F); };
  const auto comps = detail::dual_components(omega, inside_F);

  auto strip_apex = [&](SimplicialComplex piece) {
    if (apex && piece.id_of(*apex)) piece = costar(piece, {*apex});
    return piece;
  };
  auto check_piece = [&](const SimplicialComplex& piece, const char* what) {
    if (!status_is_manifold(classify(piece, field).status))
      throw PieceNotManifold(std::string("cut_along_missing_facet: ") + what +
                             " failed homology-manifold recognition");
  };

  DecompositionStep step;
  step.witness = F_tokens;
  if (comps.size() == 2) {
    step.kind = StepKind::connected_sum;
    for (const auto& members : comps) {
      std::vector<TokenFace> facets;
      facets.reserve(members.size() + 1);
      for (int idx : members)
        facets.push_back(omega.tokens_of(omega.facets()[static_cast<std::size_t>(idx)]));
      facets.push_back(F_tokens);
      SimplicialComplex piece = strip_apex(SimplicialComplex::from_facets(facets));
      check_piece(piece, "a separated piece");
      step.pieces.push_back(std::move(piece));
    }
    return step;
  }
  if (comps.size() != 1)
    throw PieceNotManifold("cut_along_missing_facet: cut produced more than two sides");

  // Non-separating cut: decide, per facet meeting F, which side of the local
  // sphere around each cut vertex it lies on, then split F's vertices in two.
  if (apex && std::find(F_tokens.begin(), F_tokens.end(), *apex) != F_tokens.end())
    throw PieceNotManifold(
        "cut_along_missing_facet: non-separating cut through the boundary apex");
  std::map<Vertex, detail::LocalSides> sides;
  for (Vertex v : F) {
    detail::LocalSides ls;
    ls.link_complex = link(omega, {omega.token_of(v)});
    Face local_missing;  // F minus v, in link-local ids
    {
      Face rest = F;
      rest.erase(std::find(rest.begin(), rest.end(), v));
      auto lm = ls.link_complex.face_of_tokens(omega.tokens_of(rest));
      if (!lm)
        throw PieceNotManifold("cut_along_missing_facet: cut face misses the link of " +
                               omega.token_of(v));
      local_missing = *lm;
    }
    auto inside_local = [&local_missing](const Face& r) { return face_subset(r, local_missing); };
    const auto local_comps = detail::dual_components(ls.link_complex, inside_local);
    if (local_comps.size() != 2)
      throw PieceNotManifold("cut_along_missing_facet: cut is not two-sided at vertex " +
                             omega.token_of(v));
    ls.comp_of_link_facet.assign(ls.link_complex.facets().size(), -1);
    for (std::size_t c = 0; c < local_comps.size(); ++c)
      for (int idx : local_comps[c])
        ls.comp_of_link_facet[static_cast<std::size_t>(idx)] = static_cast<int>(c);
    sides.emplace(v, std::move(ls));
  }

  // Align the per-vertex side labels: walk the ridges of F, forcing the two
  // cofacets of each ridge onto opposite sides consistently at every vertex.
  const auto& ofacets = omega.facets();
  auto cofacets_of = [&](const Face& ridge) {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(ofacets.size()); ++i)
      if (face_subset(ridge, ofacets[static_cast<std::size_t>(i)])) out.push_back(i);
    return out;
  };
  std::set<Vertex> assigned;
  {
    Face seed_ridge = F;
    seed_ridge.pop_back();  // drop the largest cut vertex
    const auto cof = cofacets_of(seed_ridge);
    if (cof.size() != 2)
      throw PieceNotManifold("cut_along_missing_facet: a cut ridge is not two-sided");
    const Face& X = ofacets[static_cast<std::size_t>(cof[0])];
    for (Vertex v : seed_ridge) {
      auto& ls = sides.at(v);
      ls.side1_comp = detail::local_component(ls, omega, X, v);
      assigned.insert(v);
    }
  }
  while (assigned.size() < F.size()) {
    bool progressed = false;
    for (std::size_t drop = 0; drop < F.size() && assigned.size() < F.size(); ++drop) {
      Face ridge = F;
      ridge.erase(ridge.begin() + static_cast<std::ptrdiff_t>(drop));
      bool has_assigned = false, has_unassigned = false;
      for (Vertex v : ridge) (assigned.count(v) ? has_assigned : has_unassigned) = true;
      if (!has_assigned || !has_unassigned) continue;
      const auto cof = cofacets_of(ridge);
      if (cof.size() != 2)
        throw PieceNotManifold("cut_along_missing_facet: a cut ridge is not two-sided");
      std::optional<bool> x_on_side1;
      for (Vertex v : ridge) {
        if (!assigned.count(v)) continue;
        const auto& ls = sides.at(v);
        bool s = detail::local_component(ls, omega, ofacets[static_cast<std::size_t>(cof[0])], v) ==
                 ls.side1_comp;
        if (!x_on_side1) x_on_side1 = s;
        else if (*x_on_side1 != s)
          throw PieceNotManifold("cut_along_missing_facet: sides disagree along ridge");
      }
      const Face& X = ofacets[static_cast<std::size_t>(cof[*x_on_side1 ? 0 : 1])];
      for (Vertex v : ridge) {
        if (assigned.count(v)) continue;
        auto& ls = sides.at(v);
        ls.side1_comp = detail::local_component(ls, omega, X, v);
        assigned.insert(v);
        progressed = true;
      }
    }
    if (!progressed)
      throw PieceNotManifold("cut_along_missing_facet: could not align sides around the cut");
  }
  // Validation pass: every ridge of F must have its two cofacets on opposite,
  // consistently-labelled sides at every cut vertex it contains.
  for (std::size_t drop = 0; drop < F.size(); ++drop) {
    Face ridge = F;
    ridge.erase(ridge.begin() + static_cast<std::ptrdiff_t>(drop));
    const auto cof = cofacets_of(ridge);
    if (cof.size() != 2)
      throw PieceNotManifold("cut_along_missing_facet: a cut ridge is not two-sided");
    for (int which = 0; which < 2; ++which) {
      std::optional<bool> side;
      for (Vertex v : ridge) {
        const auto& ls = sides.at(v);
        bool s = detail::local_component(ls, omega, ofacets[static_cast<std::size_t>(cof[which])],
                                         v) == ls.side1_comp;
        if (!side) side = s;
        else if (*side != s)
          throw PieceNotManifold("cut_along_missing_facet: sides disagree along ridge");
      }
    }
    const auto& ls0 = sides.at(ridge[0]);
    const bool s0 = detail::local_component(ls0, omega, ofacets[static_cast<std::size_t>(cof[0])],
                                            ridge[0]) == ls0.side1_comp;
    const bool s1 = detail::local_component(ls0, omega, ofacets[static_cast<std::size_t>(cof[1])],
                                            ridge[0]) == ls0.side1_comp;
    if (s0 == s1)
      throw PieceNotManifold("cut_along_missing_facet: cofacets of a cut ridge on one side");
  }

  // Fresh labels for the side-1 copies of the cut vertices.
  std::set<std::string> used(omega.labels().begin(), omega.labels().end());
  std::map<std::string, std::string> copy_of;
  for (Vertex v : F) {
    std::string t = omega.token_of(v) + "@cut";
    while (used.count(t)) t += "0";
    used.insert(t);
    copy_of[omega.token_of(v)] = t;
  }
  std::vector<TokenFace> facets;
  facets.reserve(ofacets.size() + 2);
  for (const auto& G : ofacets) {
    std::vector<Vertex> meet;
    for (Vertex v : G)
      if (std::binary_search(F.begin(), F.end(), v)) meet.push_back(v);
    if (meet.empty()) {
      facets.push_back(omega.tokens_of(G));
      continue;
    }
    std::optional<bool> on_side1;
    for (Vertex v : meet) {
      const auto& ls = sides.at(v);
      bool s = detail::local_component(ls, omega, G, v) == ls.side1_comp;
      if (!on_side1) on_side1 = s;
      else if (*on_side1 != s)
        throw PieceNotManifold("cut_along_missing_facet: facet " +
                               detail::face_text(omega.tokens_of(G)) + " straddles the cut");
    }
    TokenFace tf;
    for (Vertex v : G) {
      const std::string& t = omega.token_of(v);
      const bool is_cut_vertex = std::binary_search(F.begin(), F.end(), v);
      tf.push_back(is_cut_vertex && *on_side1 ? copy_of.at(t) : t);
    }
    facets.push_back(std::move(tf));
  }
  facets.push_back(F_tokens);
  {
    TokenFace tf;
    for (const auto& t : F_tokens) tf.push_back(copy_of.at(t));
    facets.push_back(std::move(tf));
  }
  SimplicialComplex piece = strip_apex(SimplicialComplex::from_facets(facets));
  check_piece(piece, "the handle-reversal piece");
  step.kind = StepKind::handle_addition;
  step.pieces.push_back(std::move(piece));
  return step;
}

namespace detail {

/** Structural test for the boundary of a d-simplex. */
inline bool is_simplex_boundary(const SimplicialComplex& K) {
  const int d = K.dim() + 1;
  return K.is_pure() && K.num_vertices() == d + 1 &&
         static_cast<int>(K.facets().size()) == d + 1;
}

/**
 * Lexicographically least vertex whose link is the boundary of a simplex on
 * its neighbours, together with that neighbour facet.  Such a star can be
 * replaced by the facet (reversing a vertex split).
 */
inline std::optional<std::pair<Vertex, Face>> find_contractible_vertex(
    const SimplicialComplex& K) {
  const int d = K.dim() + 1;
  const auto& facets = K.facets();
  for (Vertex v = 0; v < K.num_vertices(); ++v) {
    std::vector<const Face*> at_v;
    for (const auto& f : facets)
      if (std::binary_search(f.begin(), f.end(), v)) at_v.push_back(&f);
    if (static_cast<int>(at_v.size()) != d) continue;
    Face closure;
    for (const Face* f : at_v) closure = face_union(closure, *f);
    if (static_cast<int>(closure.size()) != d + 1) continue;
    bool ok = true;
    std::set<Vertex> omitted;
    for (const Face* f : at_v) {
      if (static_cast<int>(f->size()) != d || !face_subset(*f, closure)) { ok = false; break; }
      omitted.insert(face_minus(closure, *f)[0]);
    }
    if (!ok || static_cast<int>(omitted.size()) != d || omitted.count(v)) continue;
    return std::make_pair(v, face_minus(closure, Face{v}));
  }
  return std::nullopt;
}

inline SimplicialComplex contract_vertex(const SimplicialComplex& K, Vertex v, const Face& nbrs) {
  std::vector<TokenFace> facets;
  for (const auto& f : K.facets())
    if (!std::binary_search(f.begin(), f.end(), v)) facets.push_back(K.tokens_of(f));
  facets.push_back(K.tokens_of(nbrs));
  return SimplicialComplex::from_facets(facets);
}

enum class DecomposeMode { g2, gtilde2 };

inline void verify_still_minimal(const SimplicialComplex& X, const Gf& field, DecomposeMode mode,
                                 const char* when) {
  try {
    const bool ok = mode == DecomposeMode::g2 ? minimal_g2(X, field) : minimal_g_tilde2(X, field);
    if (!ok)
      throw UnexpectedBase(std::string("decompose: minimality lost ") + when +
                           "; this contradicts the decomposition theory");
  } catch (const UnexpectedBase&) {
    throw;
  } catch (const std::runtime_error& e) {
    throw UnexpectedBase(std::string("decompose: piece became ineligible ") + when + " (" +
                         e.what() + ")");
  }
}

/** Base test for pieces with boundary; closed pieces only accept simplex boundaries. */
inline std::optional<StepKind> base_kind(const SimplicialComplex& X, const ManifoldReport& rep,
                                         const Gf& field, DecomposeMode mode) {
  if (!status_has_boundary(rep.status))
    return is_simplex_boundary(X) ? std::optional<StepKind>(StepKind::base_stacked)
                                  : std::nullopt;
  if (mode == DecomposeMode::g2) {
    if (relative_f_vector(X, field).at(2) == 0) return StepKind::base_no_interior_edges;
    return std::nullopt;
  }
  // gtilde2 base: stacked manifold - no interior faces of codimension >= 2,
  // and every vertex link is itself a stacked ball.
  if (!is_i_stacked(X, 1, field)) return std::nullopt;
  for (const auto& vf : X.faces_of_card(1)) {
    const auto lk = link(X, X.tokens_of(vf));
    const auto lrep = classify(lk, field);
    if (!status_is_manifold(lrep.status) || !status_has_boundary(lrep.status)) return std::nullopt;
    if (!is_i_stacked(lk, 1, field)) return std::nullopt;
  }
  return StepKind::base_stacked;
}

inline std::vector<DecompositionStep> decompose_driver(const SimplicialComplex& K, const Gf& field,
                                                       DecomposeMode mode) {
  const char* me = mode == DecomposeMode::g2 ? "decompose_minimal_g2" : "decompose_minimal_g_tilde2";
  if (K.dim() + 1 < 4)
    throw PreconditionFailed(std::string(me) + ": facets must have at least 4 vertices");
  const auto rep = classify(K, field);
  if (!status_is_manifold(rep.status))
    throw PreconditionFailed(std::string(me) + ": input is not a homology manifold");
  if (!status_has_boundary(rep.status))
    throw PreconditionFailed(std::string(me) + ": input must have nonempty boundary");
  if (!rep.connected) throw PreconditionFailed(std::string(me) + ": input is disconnected");
  if (mode == DecomposeMode::gtilde2 && !rep.orientable)
    throw PreconditionFailed(std::string(me) + ": input is not orientable");
  try {
    const bool ok = mode == DecomposeMode::g2 ? minimal_g2(K, field) : minimal_g_tilde2(K, field);
    if (!ok) throw PreconditionFailed(std::string(me) + ": input is not minimal");
  } catch (const PreconditionFailed&) {
    throw;
  } catch (const std::runtime_error& e) {
    throw PreconditionFailed(std::string(me) + ": minimality test failed (" + e.what() + ")");
  }

  std::vector<DecompositionStep> steps;
  const std::size_t budget = 64 + 8 * K.facets().size();
  std::deque<SimplicialComplex> queue{K};
  while (!queue.empty()) {
    SimplicialComplex X = std::move(queue.front());
    queue.pop_front();
    for (;;) {
      if (steps.size() > budget)
        throw UnexpectedBase(std::string(me) +
                             ": step budget exceeded; decomposition failed to terminate");
      const auto xrep = classify(X, field);
      const bool closed = !status_has_boundary(xrep.status);
      if (closed && is_simplex_boundary(X)) {
        steps.push_back({StepKind::base_stacked, {}, {X}});
        break;
      }
      if (auto c = find_contractible_vertex(X)) {
        SimplicialComplex Y = contract_vertex(X, c->first, c->second);
        verify_still_minimal(Y, field, mode, "after a vertex-split reversal");
        steps.push_back({StepKind::vertex_split_reversal, X.tokens_of(c->second), {Y}});
        X = std::move(Y);
        continue;
      }
      if (auto bk = base_kind(X, xrep, field, mode)) {
        steps.push_back({*bk, {}, {X}});
        break;
      }
      SimplicialComplex omega = X;
      if (status_has_boundary(xrep.status)) omega = completion(X, field).complex;
      const auto mf = missing_facets(omega);
      if (mf.empty())
        throw UnexpectedBase(std::string(me) +
                             ": stuck at a complex with no contraction, no missing facet, and no "
                             "base form; this contradicts the decomposition theory");
      DecompositionStep cut = cut_along_missing_facet(X, mf.front(), field);
      for (const auto& piece : cut.pieces)
        verify_still_minimal(piece, field, mode, "after a cut");
      for (auto& piece : cut.pieces) queue.push_back(piece);
      steps.push_back(std::move(cut));
      break;
    }
  }
  return steps;
}

}  // namespace detail

/**
 * Decomposition transcript of a minimal-g2 manifold with boundary: reverse
 * vertex splits, then repeatedly cut the least missing facet, ending in base
 * complexes without interior edges (or simplex boundaries, for closed
 * summands).  Every intermediate complex is re-verified minimal.
 */
inline std::vector<DecompositionStep> decompose_minimal_g2(const SimplicialComplex& K,
                                                           const Gf& field) {
  return detail::decompose_driver(K, field, detail::DecomposeMode::g2);
}

/** Same transcript driver under the boundary-corrected minimality notion. */
inline std::vector<DecompositionStep> decompose_minimal_g_tilde2(const SimplicialComplex& K,
                                                                 const Gf& field) {
  return detail::decompose_driver(K, field, detail::DecomposeMode::gtilde2);
}

/**
 * Barycentric subdivision, applied `times` rounds.  The vertex created for a
 * face is labelled by that face's tokens joined with '|'.
 */
inline SimplicialComplex barycentric_subdivision(const SimplicialComplex& K, int times = 1) {
  if (times < 1) throw InvalidParams("barycentric_subdivision: times must be >= 1");
  if (K.is_void() || K.is_empty_face_only())
    throw EmptyInput("barycentric_subdivision: no vertices");
  SimplicialComplex cur = K;
  for (int round = 0; round < times; ++round) {
    auto label_of = [&](const std::vector<std::string>& tokens) {
      std::vector<std::string> s = tokens;
      std::sort(s.begin(), s.end(), detail::natural_less);
      std::string out;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += "|";
        out += s[i];
      }
      return out;
    };
    std::vector<TokenFace> out;
    for (const auto& f : cur.facets()) {
      TokenFace tokens = cur.tokens_of(f);
      std::sort(tokens.begin(), tokens.end());
      do {
        TokenFace chain;
        std::vector<std::string> prefix;
        for (const auto& t : tokens) {
          prefix.push_back(t);
          chain.push_back(label_of(prefix));
        }
        out.push_back(std::move(chain));
      } while (std::next_permutation(tokens.begin(), tokens.end()));
    }
    cur = SimplicialComplex::from_facets(out);
  }
  return cur;
}

/**
 * Codimension sequence of the interior faces of a manifold with boundary,
 * weakest handles first.  Collapsibility of the complement is a PL statement,
 * hence the note on the result.
 */
inline HandleSequence pl_handle_sequence(const SimplicialComplex& K, const Gf& field) {
  const auto rep = classify(K, field);
  if (!status_is_manifold(rep.status))
    throw NotAManifold("pl_handle_sequence: input is not a homology manifold");
  if (!status_has_boundary(rep.status))
    throw ClosedManifold("pl_handle_sequence: input has no boundary");
  const int d = K.dim() + 1;
  auto interior = interior_faces(K, field);  // cardinality ascending
  HandleSequence seq;
  seq.indices.reserve(interior.size());
  for (auto it = interior.rbegin(); it != interior.rend(); ++it)
    seq.indices.push_back(d - static_cast<int>(it->size()));
  std::sort(seq.indices.begin(), seq.indices.end());
  return seq;
}

/**
 * Stacked sphere with facets of size d on n vertices: starting from the
 * boundary of a d-simplex, repeatedly replace a seeded-random facet by the
 * cone over its boundary from a fresh vertex.  Same seed, same complex.
 */
inline SimplicialComplex stacked_sphere(int d, int n, std::uint64_t seed) {
  if (d < 2) throw InvalidParams("stacked_sphere: facet size must be >= 2");
  if (n < d + 1) throw InvalidParams("stacked_sphere: need at least d+1 vertices");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<long long>> facets;
  for (long long skip = 1; skip <= d + 1; ++skip) {
    std::vector<long long> f;
    for (long long v = 1; v <= d + 1; ++v)
      if (v != skip) f.push_back(v);
    facets.push_back(std::move(f));
  }
  for (long long fresh = d + 2; fresh <= n; ++fresh) {
    const std::size_t pick = static_cast<std::size_t>(rng() % facets.size());
    const std::vector<long long> G = facets[pick];
    facets.erase(facets.begin() + static_cast<std::ptrdiff_t>(pick));
    for (std::size_t drop = 0; drop < G.size(); ++drop) {
      std::vector<long long> f;
      for (std::size_t i = 0; i < G.size(); ++i)
        if (i != drop) f.push_back(G[i]);
      f.push_back(fresh);
      facets.push_back(std::move(f));
    }
  }
  std::vector<TokenFace> tokens;
  for (const auto& f : facets) {
    TokenFace tf;
    for (long long v : f) tf.push_back(std::to_string(v));
    tokens.push_back(std::move(tf));
  }
  return SimplicialComplex::from_facets(tokens);
}

/**
 * Stacked ball with facets of size d built by gluing k facets tree-like:
 * each new facet is attached to a seeded-random free ridge.  Same seed, same
 * complex.
 */
inline SimplicialComplex stacked_ball(int d, int k_facets, std::uint64_t seed) {
  if (d < 2) throw InvalidParams("stacked_ball: facet size must be >= 2");
  if (k_facets < 1) throw InvalidParams("stacked_ball: need at least one facet");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<long long>> facets;
  {
    std::vector<long long> f;
    for (long long v = 1; v <= d; ++v) f.push_back(v);
    facets.push_back(std::move(f));
  }
  for (int step = 2; step <= k_facets; ++step) {
    std::map<std::vector<long long>, int> ridge_count;
    for (const auto& f : facets)
      for (std::size_t drop = 0; drop < f.size(); ++drop) {
        std::vector<long long> r;
        for (std::size_t i = 0; i < f.size(); ++i)
          if (i != drop) r.push_back(f[i]);
        ridge_count[r] += 1;
      }
    std::vector<std::vector<long long>> free_ridges;
    for (const auto& [r, c] : ridge_count)
      if (c == 1) free_ridges.push_back(r);
    const std::size_t pick = static_cast<std::size_t>(rng() % free_ridges.size());
    std::vector<long long> f = free_ridges[pick];
    f.push_back(static_cast<long long>(d + step - 1));
    facets.push_back(std::move(f));
  }
  std::vector<TokenFace> tokens;
  for (const auto& f : facets) {
    TokenFace tf;
    for (long long v : f) tf.push_back(std::to_string(v));
    tokens.push_back(std::move(tf));
  }
  return SimplicialComplex::from_facets(tokens);
}

/**
 * Path-shaped stacked sphere with facets of size d on n vertices: boundary of
 * the chain of (d+1)-vertex simplices {i+1,...,i+d+1}.  Unlike the seeded
 * generator, consecutive simplices always retire the oldest vertex, so the two
 * end facets {1..d} and {n-d+1..n} sit at graph distance >= 3 once n >= 4d
 * and can be identified by a handle.
 */
inline SimplicialComplex long_stacked_sphere(int d, int n) {
  if (d < 2) throw InvalidParams("long_stacked_sphere: facet size must be >= 2");
  if (n < d + 1) throw InvalidParams("long_stacked_sphere: need at least d+1 vertices");
  const int k = n - d;  // number of chain simplices
  std::map<std::vector<long long>, int> count;
  for (int i = 0; i < k; ++i)
    for (int drop = 0; drop <= d; ++drop) {
      std::vector<long long> f;
      for (int j = 0; j <= d; ++j)
        if (j != drop) f.push_back(i + j + 1);
      count[f] += 1;
    }
  std::vector<TokenFace> facets;
  for (const auto& [f, c] : count) {
    if (c != 1) continue;
    TokenFace tf;
    for (long long v : f) tf.push_back(std::to_string(v));
    facets.push_back(std::move(tf));
  }
  return SimplicialComplex::from_facets(facets);
}

/** Path-shaped stacked ball: the chain of d-vertex facets {i+1,...,i+d}. */
inline SimplicialComplex long_stacked_ball(int d, int k_facets) {
  if (d < 2) throw InvalidParams("long_stacked_ball: facet size must be >= 2");
  if (k_facets < 1) throw InvalidParams("long_stacked_ball: need at least one facet");
  std::vector<TokenFace> facets;
  for (int i = 0; i < k_facets; ++i) {
    TokenFace f;
    for (int j = 0; j < d; ++j) f.push_back(std::to_string(i + j + 1));
    facets.push_back(std::move(f));
  }
  return SimplicialComplex::from_facets(facets);
}

/**
 * Seeded build scripts for handle-and-sum constructions.  A script is a
 * ';'-separated list of operations:
 *
 *   ball:d:k         start from stacked_ball(d, k)         (first op only)
 *   sphere:d:n       start from stacked_sphere(d, n)       (first op only)
 *   long_ball:d:k    start from long_stacked_ball(d, k)    (first op only)
 *   long_sphere:d:n  start from long_stacked_sphere(d, n)  (first op only)
 *   sum_sphere:n     connected sum with a stacked sphere on n fresh vertices
 *   sum_simplex      connected sum with a simplex boundary on fresh vertices
 *   handle           handle addition over a seeded admissible facet pair
 *
 * Facet choices are seeded; the handle search scans facet pairs from a seeded
 * starting point and tries identification bijections in lexicographic order,
 * keeping only admissible ones (distance and interior-vertex conditions).
 * With require_orientable, bijections whose result loses orientability are
 * rejected.  Same seed, same complex.
 */
inline SimplicialComplex walkup_complex(const std::string& script, std::uint64_t seed,
                                        const Gf& field, bool require_orientable = true) {
  std::vector<std::vector<std::string>> ops;
  {
    std::stringstream ss(script);
    std::string item;
    while (std::getline(ss, item, ';')) {
      std::vector<std::string> parts;
      std::stringstream ps(item);
      std::string p;
      while (std::getline(ps, p, ':')) {
        p.erase(0, p.find_first_not_of(" \t"));
        p.erase(p.find_last_not_of(" \t") + 1);
        parts.push_back(p);
      }
      if (!parts.empty() && !parts[0].empty()) ops.push_back(std::move(parts));
    }
  }
  if (ops.empty()) throw InvalidParams("walkup_complex: empty script");
  auto num = [](const std::vector<std::string>& op, std::size_t i) {
    if (i >= op.size()) throw InvalidParams("walkup_complex: missing argument in '" + op[0] + "'");
    try {
      return std::stoll(op[i]);
    } catch (const std::exception&) {
      throw InvalidParams("walkup_complex: bad number '" + op[i] + "'");
    }
  };
  std::mt19937_64 rng(seed);
  SimplicialComplex X;
  if (ops[0][0] == "ball")
    X = stacked_ball(static_cast<int>(num(ops[0], 1)), static_cast<int>(num(ops[0], 2)), rng());
  else if (ops[0][0] == "sphere")
    X = stacked_sphere(static_cast<int>(num(ops[0], 1)), static_cast<int>(num(ops[0], 2)), rng());
  else if (ops[0][0] == "long_ball")
    X = long_stacked_ball(static_cast<int>(num(ops[0], 1)), static_cast<int>(num(ops[0], 2)));
  else if (ops[0][0] == "long_sphere")
    X = long_stacked_sphere(static_cast<int>(num(ops[0], 1)), static_cast<int>(num(ops[0], 2)));
  else
    throw InvalidParams(
        "walkup_complex: script must start with ball, sphere, long_ball or long_sphere");

  auto random_facet = [&rng](const SimplicialComplex& C) {
    return C.tokens_of(C.facets()[static_cast<std::size_t>(rng() % C.facets().size())]);
  };
  for (std::size_t i = 1; i < ops.size(); ++i) {
    const auto& op = ops[i];
    const int d = X.dim() + 1;
    if (op[0] == "sum_sphere" || op[0] == "sum_simplex") {
      SimplicialComplex S =
          op[0] == "sum_simplex"
              ? stacked_sphere(d, d + 1, rng())
              : stacked_sphere(d, static_cast<int>(num(op, 1)), rng());
      S = detail::relabel_offset(S, detail::max_numeric_label(X) + 1);
      const TokenFace at_x = random_facet(X);  // fixed draw order keeps seeds reproducible
      const TokenFace at_s = random_facet(S);
      X = connected_sum(X, S, positional_glue(at_x, at_s), field);
    } else if (op[0] == "handle") {
      const auto rep = classify(X, field);
      const auto bd = detail::boundary_vertex_tokens(rep);
      const auto adj = detail::skeleton_adjacency(X);
      const auto& facets = X.facets();
      const std::size_t nf = facets.size();
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (std::size_t a = 0; a < nf; ++a)
        for (std::size_t b = a + 1; b < nf; ++b) pairs.emplace_back(a, b);
      const std::size_t rot = pairs.empty() ? 0 : static_cast<std::size_t>(rng() % pairs.size());
      bool done = false;
      for (std::size_t t = 0; t < pairs.size() && !done; ++t) {
        const auto [a, b] = pairs[(t + rot) % pairs.size()];
        const Face& fa = facets[a];
        const Face& fb = facets[b];
        if ([&] {
              for (Vertex v : fa)
                for (Vertex w : fb)
                  if (v == w) return true;
              return false;
            }())
          continue;
        const std::size_t card = fa.size();
        // Distance matrix src x dst; one BFS per source vertex.
        std::vector<std::vector<int>> D(card);
        for (std::size_t i = 0; i < card; ++i) {
          const auto dist = detail::vertex_distances(adj, fa[i]);
          D[i].resize(card);
          for (std::size_t j = 0; j < card; ++j)
            D[i][j] = dist[static_cast<std::size_t>(fb[j])];
        }
        if (D[0][0] < 0) continue;  // facets in different components
        const TokenFace src = X.tokens_of(fa);
        const TokenFace dst = X.tokens_of(fb);
        auto admissible = [&](std::size_t i, std::size_t j) {
          return D[i][j] >= 3 && !(bd.count(src[i]) && bd.count(dst[j]));
        };
        std::vector<std::size_t> perm(card);
        for (std::size_t i = 0; i < card; ++i) perm[i] = i;
        do {
          bool ok = true;
          for (std::size_t i = 0; i < card && ok; ++i) ok = admissible(i, perm[i]);
          if (!ok) continue;
          TokenFace d2(card);
          for (std::size_t i = 0; i < card; ++i) d2[i] = dst[perm[i]];
          try {
            SimplicialComplex Y = handle_addition(X, positional_glue(src, d2), field);
            if (require_orientable) {
              const auto yrep = classify(Y, field);
              if (!yrep.connected || !yrep.orientable) continue;
            }
            X = std::move(Y);
            done = true;
          } catch (const DistanceTooSmall&) {
          } catch (const VertexClash&) {
          } catch (const ManifoldViolation&) {
          }
        } while (!done && std::next_permutation(perm.begin(), perm.end()));
      }
      if (!done)
        throw DistanceTooSmall("walkup_complex: no admissible handle pair in this complex");
    } else {
      throw InvalidParams("walkup_complex: unknown operation '" + op[0] + "'");
    }
  }
  return X;
}

/** The 5-vertex Moebius band, exposed under its generator name. */
inline SimplicialComplex kuhnel_d3_mobius() { return shapes::kuhnel_mobius(); }

}  // namespace facelab
