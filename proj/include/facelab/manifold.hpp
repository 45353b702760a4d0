#pragma once

#include <optional>
#include <string>
#include <vector>

#include "facelab/complex.hpp"
#include "facelab/field.hpp"
#include "facelab/homology.hpp"

namespace facelab {

struct NotAManifold : std::runtime_error {
  explicit NotAManifold(const std::string& w) : std::runtime_error(w) {}
};
struct NotConnected : std::runtime_error {
  explicit NotConnected(const std::string& w) : std::runtime_error(w) {}
};
struct ClosedManifold : std::runtime_error {
  explicit ClosedManifold(const std::string& w) : std::runtime_error(w) {}
};
struct NotOrientable : std::runtime_error {
  explicit NotOrientable(const std::string& w) : std::runtime_error(w) {}
};
struct PreconditionFailed : std::runtime_error {
  explicit PreconditionFailed(const std::string& w) : std::runtime_error(w) {}
};

enum class ManifoldStatus {
  not_pure,
  not_manifold,
  closed_manifold,
  manifold_with_boundary,
  sphere,  // refines closed_manifold
  ball,    // refines manifold_with_boundary
};

inline const char* to_string(ManifoldStatus s) {
  switch (s) {
    case ManifoldStatus::not_pure: return "not_pure";
    case ManifoldStatus::not_manifold: return "not_manifold";
    case ManifoldStatus::closed_manifold: return "closed_manifold";
    case ManifoldStatus::manifold_with_boundary: return "manifold_with_boundary";
    case ManifoldStatus::sphere: return "sphere";
    case ManifoldStatus::ball: return "ball";
  }
  return "?";
}

inline bool status_is_manifold(ManifoldStatus s) {
  return s != ManifoldStatus::not_pure && s != ManifoldStatus::not_manifold;
}
inline bool status_has_boundary(ManifoldStatus s) {
  return s == ManifoldStatus::manifold_with_boundary || s == ManifoldStatus::ball;
}

struct ManifoldReport {
  ManifoldStatus status = ManifoldStatus::not_manifold;
  FieldSpec field;
  bool connected = false;
  bool orientable = false;       // top relative homology has rank 1
  BettiTable betti_table;
  SimplicialComplex boundary;    // void complex when closed or not a manifold
};

namespace detail {

/** Betti pattern of a sphere of the given dimension? (all other degrees 0) */
inline bool sphere_pattern(const BettiTable& b, int dim) {
  for (int d = -1; d <= b.top_dim; ++d)
    if (b.at(d) != (d == dim ? 1 : 0)) return false;
  return dim <= b.top_dim;
}
inline bool zero_pattern(const BettiTable& b) {
  for (int d = -1; d <= b.top_dim; ++d)
    if (b.at(d) != 0) return false;
  return true;
}

}  // namespace detail

/**
 * Full homology-manifold recognition over a field.
 *
 * Purity is checked first; then the link of every nonempty face must have the
 * Betti pattern of a sphere of complementary dimension (interior face) or be
 * acyclic (boundary face).  When boundary faces exist they must form a
 * subcomplex that recognizes as a closed homology manifold one dimension down.
 * sphere/ball refine the closed/with-boundary statuses via the Betti pattern
 * of the complex itself.
 */
inline ManifoldReport classify(const SimplicialComplex& K, const Gf& field) {
  if (K.is_void() || K.is_empty_face_only())
    throw EmptyInput("classify: complex has no vertices");
  ManifoldReport rep;
  rep.field = field.spec();
  rep.betti_table = betti(K, field);
  rep.connected = rep.betti_table.at(0) == 0;
  rep.boundary = SimplicialComplex::void_complex();
  if (!K.is_pure()) {
    rep.status = ManifoldStatus::not_pure;
    return rep;
  }
  const int dim = K.dim();

  std::vector<Face> boundary_faces;
  bool ok = true;
  for (int card = 1; card <= dim + 1 && ok; ++card) {
    for (const auto& f : K.faces_of_card(card)) {
      const auto lk = link(K, K.tokens_of(f));
      const auto lb = betti(lk, field);
      const int target = dim - card;
      if (detail::sphere_pattern(lb, target)) continue;
      if (detail::zero_pattern(lb)) {
        boundary_faces.push_back(f);
        continue;
      }
      ok = false;
      break;
    }
  }
  if (!ok) {
    rep.status = ManifoldStatus::not_manifold;
    return rep;
  }

  if (boundary_faces.empty()) {
    rep.status = detail::sphere_pattern(rep.betti_table, dim) ? ManifoldStatus::sphere
                                                              : ManifoldStatus::closed_manifold;
    if (rep.connected)
      rep.orientable = rep.betti_table.at(dim) == 1;
    return rep;
  }

  // Assemble the boundary and check it is a subcomplex of boundary faces that
  // recognizes as a closed homology manifold one dimension down.
  std::vector<TokenFace> btoks;
  btoks.reserve(boundary_faces.size());
  for (const auto& f : boundary_faces) btoks.push_back(K.tokens_of(f));
  SimplicialComplex B = SimplicialComplex::from_token_facets_allow_degenerate(btoks, false);
  {
    std::set<Face> bset(boundary_faces.begin(), boundary_faces.end());
    bool closed_down = B.dim() == dim - 1;
    for (int card = 1; card <= B.dim() + 1 && closed_down; ++card)
      for (const auto& bf : B.faces_of_card(card)) {
        auto kf = K.face_of_tokens(B.tokens_of(bf));
        if (!kf || !bset.count(*kf)) { closed_down = false; break; }
      }
    if (closed_down) {
      const auto brep = classify(B, field);
      closed_down = status_is_manifold(brep.status) && !status_has_boundary(brep.status);
      if (closed_down) {
        rep.status = ManifoldStatus::manifold_with_boundary;
        if (detail::zero_pattern(rep.betti_table) && brep.status == ManifoldStatus::sphere)
          rep.status = ManifoldStatus::ball;
      }
    }
    if (!closed_down) {
      rep.status = ManifoldStatus::not_manifold;
      return rep;
    }
  }
  rep.boundary = std::move(B);
  if (rep.connected) {
    const auto rel = relative_betti(K, rep.boundary, field);
    rep.orientable = rel.at(dim) == 1;
  }
  return rep;
}

/** Boundary subcomplex (void when closed).  Throws NotAManifold. */
inline SimplicialComplex boundary_complex(const SimplicialComplex& K, const Gf& field) {
  const auto rep = classify(K, field);
  if (!status_is_manifold(rep.status))
    throw NotAManifold("boundary_complex: not a homology manifold");
  return rep.boundary;
}

/** Orientability for connected homology manifolds. */
inline bool is_orientable(const SimplicialComplex& K, const Gf& field) {
  const auto rep = classify(K, field);
  if (!status_is_manifold(rep.status)) throw NotAManifold("is_orientable: not a manifold");
  if (!rep.connected) throw NotConnected("is_orientable: complex is disconnected");
  return rep.orientable;
}

/** A manifold together with the cone closing off its boundary. */
struct Completion {
  SimplicialComplex complex;                 // the completed complex
  SimplicialComplex base;                    // the input manifold
  SimplicialComplex boundary;                // boundary of the base (void if closed)
  std::optional<std::string> cone_vertex;    // absent when the input was closed
};

/**
 * Closes off the boundary with a cone over a fresh vertex (token "@v0",
 * extended with '0's until fresh).  Closed inputs complete to themselves.
 */
inline Completion completion(const SimplicialComplex& K, const Gf& field) {
  const auto rep = classify(K, field);
  if (!status_is_manifold(rep.status))
    throw NotAManifold("completion: not a homology manifold");
  Completion out;
  out.base = K;
  out.boundary = rep.boundary;
  if (!status_has_boundary(rep.status)) {
    out.complex = K;
    return out;
  }
  const std::string apex = fresh_token(K, "@v0");
  std::vector<TokenFace> facets;
  for (const auto& f : K.facets()) facets.push_back(K.tokens_of(f));
  for (const auto& bf : rep.boundary.facets()) {
    TokenFace tf = rep.boundary.tokens_of(bf);
    tf.push_back(apex);
    facets.push_back(std::move(tf));
  }
  out.complex = SimplicialComplex::from_facets(facets);
  out.cone_vertex = apex;
  return out;
}

/** Interior faces (not in the boundary subcomplex), by cardinality then lex. */
inline std::vector<TokenFace> interior_faces(const SimplicialComplex& K, const Gf& field) {
  const auto rep = classify(K, field);
  if (!status_is_manifold(rep.status))
    throw NotAManifold("interior_faces: not a homology manifold");
  std::vector<TokenFace> out;
  for (int card = 1; card <= K.dim() + 1; ++card)
    for (const auto& f : K.faces_of_card(card)) {
      bool in_boundary = false;
      if (!rep.boundary.is_void()) {
        auto bf = rep.boundary.face_of_tokens(K.tokens_of(f));
        in_boundary = bf && rep.boundary.contains(*bf);
      }
      if (!in_boundary) out.push_back(K.tokens_of(f));
    }
  return out;
}

/**
 * Relative face numbers f_i(K, boundary): counts of interior i-faces, indexed
 * like f_vector (entry 0 is f_{-1}, which is 1 exactly when K is closed).
 */
inline std::vector<long long> relative_f_vector(const SimplicialComplex& K, const Gf& field) {
  const auto rep = classify(K, field);
  if (!status_is_manifold(rep.status))
    throw NotAManifold("relative_f_vector: not a homology manifold");
  std::vector<long long> f(static_cast<std::size_t>(K.dim()) + 2, 0);
  f[0] = status_has_boundary(rep.status) ? 0 : 1;
  for (const auto& tf : interior_faces(K, field)) f[tf.size()] += 1;
  return f;
}

/**
 * i-stackedness: no interior face of codimension >= i+1.  Requires a homology
 * manifold with nonempty boundary.
 */
inline bool is_i_stacked(const SimplicialComplex& K, int i, const Gf& field) {
  const auto rep = classify(K, field);
  if (!status_is_manifold(rep.status))
    throw NotAManifold("is_i_stacked: not a homology manifold");
  if (!status_has_boundary(rep.status))
    throw ClosedManifold("is_i_stacked: requires nonempty boundary");
  const int d = K.dim() + 1;
  for (const auto& tf : interior_faces(K, field)) {
    const int codim = d - static_cast<int>(tf.size());
    if (codim >= i + 1) return false;
  }
  return true;
}

/** Vertices whose link fails both the sphere and the acyclic Betti pattern. */
inline std::vector<std::string> singular_vertices(const SimplicialComplex& K, const Gf& field) {
  std::vector<std::string> out;
  for (const auto& vf : K.faces_of_card(1)) {
    const auto lb = betti(link(K, K.tokens_of(vf)), field);
    if (!detail::sphere_pattern(lb, K.dim() - 1) && !detail::zero_pattern(lb))
      out.push_back(K.token_of(vf[0]));
  }
  return out;
}

}  // namespace facelab
