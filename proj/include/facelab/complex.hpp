#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace facelab {

struct EmptyInput : std::runtime_error {
  explicit EmptyInput(const std::string& w) : std::runtime_error(w) {}
};
struct MalformedToken : std::runtime_error {
  explicit MalformedToken(const std::string& w) : std::runtime_error(w) {}
};
struct FaceNotInComplex : std::runtime_error {
  explicit FaceNotInComplex(const std::string& w) : std::runtime_error(w) {}
};
struct ApexCollision : std::runtime_error {
  explicit ApexCollision(const std::string& w) : std::runtime_error(w) {}
};

using Vertex = int;                    // id interned within one complex
using Face = std::vector<Vertex>;      // strictly increasing vertex ids
using TokenFace = std::vector<std::string>;

namespace detail {

/** Natural token order: numeric tokens first (by value), then lexicographic. */
inline bool natural_less(const std::string& a, const std::string& b) {
  auto as_number = [](const std::string& s) -> std::optional<unsigned long long> {
    if (s.empty() || s.size() > 18) return std::nullopt;
    unsigned long long v = 0;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
      v = v * 10 + static_cast<unsigned long long>(c - '0');
    }
    return v;
  };
  const auto na = as_number(a), nb = as_number(b);
  if (na && nb) return *na != *nb ? *na < *nb : a < b;
  if (na != nb) return na.has_value();  // numbers sort before words
  return a < b;
}

struct FaceHash {
  std::size_t operator()(const Face& f) const {
    std::size_t h = 1469598103934665603ull;
    for (Vertex v : f) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace detail

inline bool face_subset(const Face& a, const Face& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}
inline Face face_union(const Face& a, const Face& b) {
  Face out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}
inline Face face_minus(const Face& a, const Face& b) {
  Face out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

/**
 * Finite abstract simplicial complex stored by its inclusion-maximal faces.
 *
 * Vertices carry string tokens; internally they are interned to dense ids in
 * natural token order, so equal inputs produce identical objects regardless of
 * facet or token order.  Instances are immutable; per-dimension face lists are
 * produced on demand and memoized behind a lock, so concurrent reads are safe.
 *
 * Degenerate complexes: the void complex has no faces at all, while the
 * empty-face-only complex has just the face {}.  Both report dimension -1 and
 * are distinguished by f_vector()/is_void().
 */
class SimplicialComplex {
 public:
  SimplicialComplex() : cache_(std::make_shared<Cache>()) {}

  /** Builds a complex from facet token lists, subsuming dominated faces. */
  static SimplicialComplex from_facets(const std::vector<TokenFace>& facets) {
    if (facets.empty()) throw EmptyInput("no facets given");
    std::set<std::string> tokens;
    for (const auto& f : facets) {
      if (f.empty()) throw EmptyInput("empty facet in input");
      for (const auto& t : f) {
        validate_token(t);
        tokens.insert(t);
      }
    }
    std::vector<std::string> labels(tokens.begin(), tokens.end());
    std::sort(labels.begin(), labels.end(), detail::natural_less);
    std::map<std::string, Vertex> id;
    for (std::size_t i = 0; i < labels.size(); ++i) id[labels[i]] = static_cast<Vertex>(i);
    std::vector<Face> raw;
    raw.reserve(facets.size());
    for (const auto& f : facets) {
      Face face;
      for (const auto& t : f) face.push_back(id[t]);
      std::sort(face.begin(), face.end());
      face.erase(std::unique(face.begin(), face.end()), face.end());
      raw.push_back(std::move(face));
    }
    return SimplicialComplex(prune_to_maximal(std::move(raw)), std::move(labels));
  }

  /** The complex whose only face is the empty set. */
  static SimplicialComplex empty_face_only() {
    SimplicialComplex k;
    k.has_empty_face_ = true;
    return k;
  }
  /** The complex with no faces whatsoever. */
  static SimplicialComplex void_complex() { return SimplicialComplex(); }

  bool is_void() const { return facets_.empty() && !has_empty_face_; }
  bool is_empty_face_only() const { return facets_.empty() && has_empty_face_; }

  int dim() const {
    int d = -1;
    for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
  }
  bool is_pure() const {
    for (const auto& f : facets_)
      if (static_cast<int>(f.size()) != dim() + 1) return false;
    return true;
  }

  int num_vertices() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Face>& facets() const { return facets_; }

  const std::string& token_of(Vertex v) const { return labels_.at(static_cast<std::size_t>(v)); }
  std::optional<Vertex> id_of(const std::string& token) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), token, detail::natural_less);
    if (it == labels_.end() || *it != token) return std::nullopt;
    return static_cast<Vertex>(it - labels_.begin());
  }

  TokenFace tokens_of(const Face& f) const {
    TokenFace out;
    out.reserve(f.size());
    for (Vertex v : f) out.push_back(token_of(v));
    return out;
  }
  /** Translates a token face; returns nullopt if some token is unknown. */
  std::optional<Face> face_of_tokens(const TokenFace& tf) const {
    Face f;
    for (const auto& t : tf) {
      auto v = id_of(t);
      if (!v) return std::nullopt;
      f.push_back(*v);
    }
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    return f;
  }

  /** All faces with k vertices, sorted lexicographically (k >= 1). */
  const std::vector<Face>& faces_of_card(int k) const {
    std::scoped_lock lock(cache_->mu);
    auto it = cache_->faces_by_card.find(k);
    if (it != cache_->faces_by_card.end()) return it->second;
    std::set<Face> acc;
    Face sub;
    for (const auto& fac : facets_)
      if (static_cast<int>(fac.size()) >= k) enumerate_subsets(fac, k, 0, sub, acc);
    auto& slot = cache_->faces_by_card[k];
    slot.assign(acc.begin(), acc.end());
    return slot;
  }

  bool contains(const Face& f) const {
    if (f.empty()) return !is_void();
    const int k = static_cast<int>(f.size());
    std::scoped_lock lock(cache_->mu);
    auto it = cache_->sets_by_card.find(k);
    if (it == cache_->sets_by_card.end()) {
      std::unordered_set<Face, detail::FaceHash> s;
      Face sub;
      std::set<Face> acc;
      for (const auto& fac : facets_)
        if (static_cast<int>(fac.size()) >= k) enumerate_subsets(fac, k, 0, sub, acc);
      s.insert(acc.begin(), acc.end());
      it = cache_->sets_by_card.emplace(k, std::move(s)).first;
    }
    return it->second.count(f) > 0;
  }

  /** f_{-1}..f_{d-1} where f_{i} counts i-dimensional faces. */
  std::vector<long long> f_vector() const {
    if (is_void()) return {0};
    std::vector<long long> f{1};
    for (int k = 1; k <= dim() + 1; ++k)
      f.push_back(static_cast<long long>(faces_of_card(k).size()));
    return f;
  }

  /** Canonical equality: same tokens and same facet sets. */
  bool operator==(const SimplicialComplex& o) const {
    return labels_ == o.labels_ && facets_ == o.facets_ && has_empty_face_ == o.has_empty_face_;
  }

  /** Builder used by derived-complex operations: facets given as token lists,
      but tolerating an empty list (yielding the empty-face-only complex). */
  static SimplicialComplex from_token_facets_allow_degenerate(const std::vector<TokenFace>& facets,
                                                              bool keep_empty_face) {
    std::vector<TokenFace> nonempty;
    for (const auto& f : facets)
      if (!f.empty()) nonempty.push_back(f);
    if (nonempty.empty())
      return keep_empty_face ? empty_face_only() : void_complex();
    return from_facets(nonempty);
  }

 private:
  struct Cache {
    std::mutex mu;
    std::map<int, std::vector<Face>> faces_by_card;
    std::map<int, std::unordered_set<Face, detail::FaceHash>> sets_by_card;
  };

  SimplicialComplex(std::vector<Face> facets, std::vector<std::string> labels)
      : facets_(std::move(facets)), labels_(std::move(labels)),
        cache_(std::make_shared<Cache>()) {}

  static void validate_token(const std::string& t) {
    if (t.empty()) throw MalformedToken("empty vertex token");
    for (char c : t)
      if (std::isspace(static_cast<unsigned char>(c)) || c == '#')
        throw MalformedToken("token '" + t + "' contains whitespace or '#'");
  }

  static std::vector<Face> prune_to_maximal(std::vector<Face> raw) {
    std::sort(raw.begin(), raw.end(), [](const Face& a, const Face& b) {
      return a.size() != b.size() ? a.size() > b.size() : a < b;
    });
    std::vector<Face> maximal;
    for (const auto& f : raw) {
      bool dominated = false;
      for (const auto& m : maximal)
        if (face_subset(f, m)) { dominated = true; break; }
      if (!dominated) maximal.push_back(f);
    }
    std::sort(maximal.begin(), maximal.end());
    return maximal;
  }

  static void enumerate_subsets(const Face& fac, int k, std::size_t start, Face& cur,
                                std::set<Face>& out) {
    if (static_cast<int>(cur.size()) == k) {
      out.insert(cur);
      return;
    }
    const int need = k - static_cast<int>(cur.size());
    for (std::size_t i = start; i + static_cast<std::size_t>(need) <= fac.size(); ++i) {
      cur.push_back(fac[i]);
      enumerate_subsets(fac, k, i + 1, cur, out);
      cur.pop_back();
    }
  }

  std::vector<Face> facets_;
  std::vector<std::string> labels_;
  bool has_empty_face_ = false;
  std::shared_ptr<Cache> cache_;  // memoized face lists; complexes are immutable
};

/** lk_K(F) = { G : G cap F = {}, G cup F in K }; F must be a face of K. */
inline SimplicialComplex link(const SimplicialComplex& K, const TokenFace& face_tokens) {
  auto f = K.face_of_tokens(face_tokens);
  if (!f || !K.contains(*f)) throw FaceNotInComplex("link: face not in complex");
  std::vector<TokenFace> out;
  for (const auto& fac : K.facets()) {
    if (!face_subset(*f, fac)) continue;
    out.push_back(K.tokens_of(face_minus(fac, *f)));
  }
  return SimplicialComplex::from_token_facets_allow_degenerate(out, /*keep_empty_face=*/true);
}

/** st_K(F): all faces contained in a facet containing F. */
inline SimplicialComplex star(const SimplicialComplex& K, const TokenFace& face_tokens) {
  auto f = K.face_of_tokens(face_tokens);
  if (!f || !K.contains(*f)) throw FaceNotInComplex("star: face not in complex");
  std::vector<TokenFace> out;
  for (const auto& fac : K.facets())
    if (face_subset(*f, fac)) out.push_back(K.tokens_of(fac));
  return SimplicialComplex::from_token_facets_allow_degenerate(out, true);
}

/** cost_K(F): faces of K that do not contain F. */
inline SimplicialComplex costar(const SimplicialComplex& K, const TokenFace& face_tokens) {
  auto f = K.face_of_tokens(face_tokens);
  if (!f || !K.contains(*f)) throw FaceNotInComplex("costar: face not in complex");
  std::vector<TokenFace> out;
  for (int k = 1; k <= K.dim() + 1; ++k)
    for (const auto& face : K.faces_of_card(k))
      if (!face_subset(*f, face)) out.push_back(K.tokens_of(face));
  return SimplicialComplex::from_token_facets_allow_degenerate(out, true);
}

/** Cone apex * K with a fresh apex token. */
inline SimplicialComplex cone(const SimplicialComplex& K, const std::string& apex) {
  if (K.is_void()) throw EmptyInput("cone over the void complex");
  if (K.id_of(apex)) throw ApexCollision("apex token '" + apex + "' already a vertex");
  std::vector<TokenFace> out;
  if (K.is_empty_face_only()) {
    out.push_back({apex});
  } else {
    for (const auto& fac : K.facets()) {
      TokenFace tf = K.tokens_of(fac);
      tf.push_back(apex);
      out.push_back(std::move(tf));
    }
  }
  return SimplicialComplex::from_facets(out);
}

/** True when every j-subset of the vertex set is a face. */
inline bool is_j_neighborly(const SimplicialComplex& K, int j) {
  if (j < 0) throw std::invalid_argument("neighborliness index must be >= 0");
  if (j == 0) return true;
  const int n = K.num_vertices();
  if (j > n) return false;
  // C(n, j) candidate faces; desk scale keeps this enumerable.
  std::vector<long long> expected{1};
  for (int i = 1; i <= j; ++i) expected.push_back(expected.back() * (n - i + 1) / i);
  return static_cast<long long>(K.faces_of_card(j).size()) == expected[j];
}

/** Renames vertices via a token map; unmapped tokens are kept. */
inline SimplicialComplex relabel_vertices(const SimplicialComplex& K,
                                          const std::map<std::string, std::string>& token_map) {
  std::vector<TokenFace> out;
  for (const auto& fac : K.facets()) {
    TokenFace tf;
    for (Vertex v : fac) {
      const std::string& t = K.token_of(v);
      auto it = token_map.find(t);
      tf.push_back(it == token_map.end() ? t : it->second);
    }
    out.push_back(std::move(tf));
  }
  return SimplicialComplex::from_token_facets_allow_degenerate(out, K.is_empty_face_only());
}

/** Picks a token with the given prefix that is fresh for K (appends '0's). */
inline std::string fresh_token(const SimplicialComplex& K, std::string prefix) {
  while (K.id_of(prefix)) prefix += "0";
  return prefix;
}

}  // namespace facelab
