#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "facelab/homology.hpp"
#include "facelab/manifold.hpp"

namespace facelab {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

struct NotPure : std::runtime_error {
  explicit NotPure(const std::string& w) : std::runtime_error(w) {}
};
struct ProfileMismatch : std::runtime_error {
  explicit ProfileMismatch(const std::string& w) : std::runtime_error(w) {}
};
struct OddDimension : std::runtime_error {
  explicit OddDimension(const std::string& w) : std::runtime_error(w) {}
};
struct NotStartingAtOne : std::runtime_error {
  explicit NotStartingAtOne(const std::string& w) : std::runtime_error(w) {}
};
struct Overflow : std::runtime_error {
  explicit Overflow(const std::string& w) : std::runtime_error(w) {}
};

/** Binomial coefficient with the usual zero conventions outside 0<=k<=n. */
inline cpp_int binom(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  cpp_int r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline long long to_ll(const cpp_int& v) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
    throw Overflow("value exceeds 64-bit range");
  return static_cast<long long>(v);
}

/** h-vector of a pure complex: h_i = sum_j (-1)^(i-j) C(d-j, d-i) f_{j-1}. */
inline std::vector<long long> h_vector(const SimplicialComplex& K) {
  if (K.is_void() || K.is_empty_face_only()) throw EmptyInput("h_vector: no faces");
  if (!K.is_pure()) throw NotPure("h_vector: complex is not pure");
  const int d = K.dim() + 1;
  const auto f = K.f_vector();
  std::vector<long long> h(static_cast<std::size_t>(d) + 1, 0);
  for (int i = 0; i <= d; ++i) {
    cpp_int acc = 0;
    for (int j = 0; j <= i; ++j) {
      const cpp_int term = binom(d - j, d - i) * f[static_cast<std::size_t>(j)];
      acc += ((i - j) % 2 == 0) ? term : -term;
    }
    h[static_cast<std::size_t>(i)] = to_ll(acc);
  }
  return h;
}

/** Successive differences of the h-vector (g_0 = 1). */
inline std::vector<long long> g_vector(const SimplicialComplex& K) {
  const auto h = h_vector(K);
  std::vector<long long> g{1};
  for (std::size_t i = 1; i < h.size(); ++i) g.push_back(h[i] - h[i - 1]);
  return g;
}

enum class HPrimeProfile { sphere_ball, manifold, one_singular };

namespace detail {

inline long long alt_betti_sum(const BettiTable& b, int lo_j, int hi_j, int parity_anchor) {
  // sum_{j=lo..hi} (-1)^(anchor - j) * betti_{j-1}
  long long acc = 0;
  for (int j = lo_j; j <= hi_j; ++j) {
    const long long term = b.at(j - 1);
    acc += ((parity_anchor - j) % 2 == 0) ? term : -term;
  }
  return acc;
}

}  // namespace detail

/**
 * Hilbert function of a generic Artinian reduction, computed by closed
 * formula under one of three verified structure profiles:
 *  - sphere_ball:   h' = h;
 *  - manifold:      h'_i = h_i - C(d,i) * sum_{j<i} (-1)^(i-j) b_{j-1};
 *  - one_singular:  correction split between the complex and the costar of
 *                   the singular vertex u (u defaults to the detected one).
 * The profile is verified against the complex; ProfileMismatch otherwise.
 */
inline std::vector<long long> h_prime(const SimplicialComplex& K, const Gf& field,
                                      HPrimeProfile profile,
                                      std::optional<std::string> singular = std::nullopt) {
  const auto h = h_vector(K);
  const int d = K.dim() + 1;
  const auto b = betti(K, field);
  std::vector<long long> out(h.size());
  switch (profile) {
    case HPrimeProfile::sphere_ball: {
      const auto rep = classify(K, field);
      if (rep.status != ManifoldStatus::sphere && rep.status != ManifoldStatus::ball)
        throw ProfileMismatch("h_prime: complex is not a homology sphere or ball");
      return h;
    }
    case HPrimeProfile::manifold: {
      const auto rep = classify(K, field);
      if (!status_is_manifold(rep.status))
        throw ProfileMismatch("h_prime: complex is not a homology manifold");
      for (int i = 0; i <= d; ++i)
        out[static_cast<std::size_t>(i)] =
            h[static_cast<std::size_t>(i)] -
            to_ll(binom(d, i) * detail::alt_betti_sum(b, 1, i - 1, i));
      return out;
    }
    case HPrimeProfile::one_singular: {
      auto sing = singular_vertices(K, field);
      if (sing.size() > 1)
        throw ProfileMismatch("h_prime: more than one singular vertex");
      std::string u;
      if (singular) {
        u = *singular;
        if (!K.id_of(u)) throw ProfileMismatch("h_prime: vertex '" + u + "' not in complex");
        if (!sing.empty() && sing[0] != u)
          throw ProfileMismatch("h_prime: designated vertex is not the singular one");
      } else if (sing.size() == 1) {
        u = sing[0];
      } else {
        throw ProfileMismatch("h_prime: no singular vertex; designate one explicitly");
      }
      // Links of all larger faces must still look like spheres or balls.
      if (!K.is_pure()) throw ProfileMismatch("h_prime: not pure");
      for (int card = 2; card <= K.dim() + 1; ++card)
        for (const auto& f : K.faces_of_card(card)) {
          const auto lb = betti(link(K, K.tokens_of(f)), field);
          if (!detail::sphere_pattern(lb, K.dim() - card) && !detail::zero_pattern(lb))
            throw ProfileMismatch("h_prime: singularity not isolated at one vertex");
        }
      const auto bc = betti(costar(K, {u}), field);
      for (int i = 0; i <= d; ++i) {
        cpp_int corr = 0;
        for (int j = 1; j <= i - 1; ++j) {
          const cpp_int term =
              binom(d - 1, i - 1) * b.at(j - 1) + binom(d - 1, i) * bc.at(j - 1);
          corr += ((i - j) % 2 == 0) ? term : -term;
        }
        out[static_cast<std::size_t>(i)] = h[static_cast<std::size_t>(i)] - to_ll(corr);
      }
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

namespace detail {

struct OrientedManifoldData {
  ManifoldReport rep;
  int d;                     // number of vertices per facet
  std::vector<long long> h;  // h-vector of K
  BettiTable b;              // Betti numbers of K
};

inline OrientedManifoldData oriented_manifold_data(const SimplicialComplex& K, const Gf& field,
                                                   const char* who) {
  OrientedManifoldData out;
  out.rep = classify(K, field);
  if (!status_is_manifold(out.rep.status))
    throw NotAManifold(std::string(who) + ": not a homology manifold");
  if (!out.rep.connected) throw NotConnected(std::string(who) + ": disconnected");
  if (!out.rep.orientable)
    throw NotOrientable(std::string(who) + ": not orientable over this field");
  out.d = K.dim() + 1;
  out.h = h_vector(K);
  out.b = betti(K, field);
  return out;
}

}  // namespace detail

/**
 * h''-vector of the completion, by closed formula.  For a closed manifold the
 * completion is the complex itself and the classical interior-socle formula
 * applies; with boundary, the correction mixes Betti numbers of K in
 * complementary degrees against h-numbers of K and of its boundary.
 */
inline std::vector<long long> h_dprime_completion(const SimplicialComplex& K, const Gf& field) {
  const auto md = detail::oriented_manifold_data(K, field, "h_dprime_completion");
  const int d = md.d;
  std::vector<long long> out(static_cast<std::size_t>(d) + 1, 0);
  if (!status_has_boundary(md.rep.status)) {
    for (int i = 0; i <= d - 1; ++i)
      out[static_cast<std::size_t>(i)] =
          md.h[static_cast<std::size_t>(i)] -
          to_ll(binom(d, i) * detail::alt_betti_sum(md.b, 1, i, i));
    out[static_cast<std::size_t>(d)] = md.b.at(d - 1);
    return out;
  }
  const auto hb = h_vector(md.rep.boundary);
  for (int i = 0; i <= d - 1; ++i) {
    cpp_int acc = md.h[static_cast<std::size_t>(i)];
    if (i >= 1) acc += hb[static_cast<std::size_t>(i) - 1];
    for (int j = 2; j <= i; ++j) {
      const cpp_int term =
          binom(d - 1, i) * md.b.at(j - 1) + binom(d - 1, i - 1) * md.b.at(d - j);
      acc -= (((i - j) % 2 == 0) ? term : -term);
    }
    out[static_cast<std::size_t>(i)] = to_ll(acc);
  }
  out[static_cast<std::size_t>(d)] = 1;
  return out;
}

/**
 * Interior-socle dimensions of the completion's reduction in degrees 0..d-1,
 * by formula: with boundary, C(d-1,i) b_{i-1}(K) + C(d-1,i-1) b_{d-i}(K);
 * closed, C(d,i) b_{i-1}(K).
 */
inline std::vector<long long> socle_dims_formula(const SimplicialComplex& K, const Gf& field) {
  const auto md = detail::oriented_manifold_data(K, field, "socle_dims_formula");
  const int d = md.d;
  std::vector<long long> out(static_cast<std::size_t>(d), 0);
  for (int i = 0; i <= d - 1; ++i) {
    const cpp_int v = status_has_boundary(md.rep.status)
                          ? binom(d - 1, i) * md.b.at(i - 1) + binom(d - 1, i - 1) * md.b.at(d - i)
                          : binom(d, i) * md.b.at(i - 1);
    out[static_cast<std::size_t>(i)] = to_ll(v);
  }
  return out;
}

/**
 * The with-boundary analogue of the interior-socle-corrected h-vector:
 * entries h_i - C(d,i) sum_{j<=i} (-1)^(i-j) b_{j-1}(K) for 0 <= i <= d-1.
 * Vanishing at index i is equivalent to (i-1)-stackedness.
 */
inline std::vector<long long> h_bar_dprime(const SimplicialComplex& K, const Gf& field) {
  const auto rep = classify(K, field);
  if (!status_is_manifold(rep.status)) throw NotAManifold("h_bar_dprime: not a manifold");
  const int d = K.dim() + 1;
  const auto h = h_vector(K);
  const auto b = betti(K, field);
  std::vector<long long> out(static_cast<std::size_t>(d), 0);
  for (int i = 0; i <= d - 1; ++i)
    out[static_cast<std::size_t>(i)] =
        h[static_cast<std::size_t>(i)] - to_ll(binom(d, i) * detail::alt_betti_sum(b, 1, i, i));
  return out;
}

/**
 * Corrected g-numbers of the completion, entries r = 1..floor(d/2).
 * With boundary:
 *   g~_r = g_r(K) + g_{r-1}(bd K)
 *          - sum_{j=2}^r (-1)^(r-j) [C(d,r) b_{j-1}(K) + C(d,r-1) b_{d-j}(K)];
 * closed:
 *   g~_r = g_r(K) - C(d+1,r) sum_{j=1}^r (-1)^(r-j) b_{j-1}(K).
 */
inline std::vector<long long> g_tilde(const SimplicialComplex& K, const Gf& field) {
  const auto md = detail::oriented_manifold_data(K, field, "g_tilde");
  const int d = md.d;
  std::vector<long long> out;
  if (status_has_boundary(md.rep.status)) {
    const auto hb = h_vector(md.rep.boundary);
    for (int r = 1; r <= d / 2; ++r) {
      cpp_int acc = md.h[static_cast<std::size_t>(r)] - md.h[static_cast<std::size_t>(r) - 1];
      acc += hb[static_cast<std::size_t>(r) - 1] - (r >= 2 ? hb[static_cast<std::size_t>(r) - 2] : 0);
      for (int j = 2; j <= r; ++j) {
        const cpp_int term = binom(d, r) * md.b.at(j - 1) + binom(d, r - 1) * md.b.at(d - j);
        acc -= (((r - j) % 2 == 0) ? term : -term);
      }
      out.push_back(to_ll(acc));
    }
  } else {
    for (int r = 1; r <= d / 2; ++r) {
      cpp_int acc = md.h[static_cast<std::size_t>(r)] - md.h[static_cast<std::size_t>(r) - 1];
      acc -= binom(d + 1, r) * detail::alt_betti_sum(md.b, 1, r, r);
      out.push_back(to_ll(acc));
    }
  }
  return out;
}

/** Same quantity via the completion's h'' differences minus the socle term. */
inline std::vector<long long> g_tilde_via_completion(const SimplicialComplex& K, const Gf& field) {
  const auto md = detail::oriented_manifold_data(K, field, "g_tilde_via_completion");
  const int d = md.d;
  const auto hpp = h_dprime_completion(K, field);
  std::vector<long long> out;
  for (int r = 1; r <= d / 2; ++r) {
    cpp_int acc = hpp[static_cast<std::size_t>(r)] - hpp[static_cast<std::size_t>(r) - 1];
    acc -= binom(d - 1, r - 1) * md.b.at(r - 1) + binom(d - 1, r - 2) * md.b.at(d - r);
    out.push_back(to_ll(acc));
  }
  return out;
}

/** Relative g-numbers from interior face counts. */
struct RelativeHg {
  std::vector<long long> f_rel;  // f_{-1}(K,bd)..f_{d-1}(K,bd)
  long long g1 = 0, g2 = 0;
};

inline RelativeHg relative_hg(const SimplicialComplex& K, const Gf& field) {
  RelativeHg out;
  out.f_rel = relative_f_vector(K, field);
  const int d = K.dim() + 1;
  out.g1 = out.f_rel[1] - (d + 1) * out.f_rel[0];
  out.g2 = to_ll(cpp_int(out.f_rel[2]) - cpp_int(d) * out.f_rel[1] +
                 binom(d + 1, 2) * out.f_rel[0]);
  return out;
}

/** Macaulay upper-shadow bound: a^<i> via the i-binomial expansion of a. */
inline long long macaulay_pow(long long a, int i) {
  if (i < 1) throw std::invalid_argument("macaulay_pow: index must be positive");
  if (a < 0) throw std::invalid_argument("macaulay_pow: negative argument");
  if (a == 0) return 0;
  cpp_int rest = a, result = 0;
  int level = i;
  while (rest > 0 && level >= 1) {
    long long top = level;
    while (binom(top + 1, level) <= rest) ++top;
    result += binom(top + 1, level + 1);
    rest -= binom(top, level);
    --level;
  }
  return to_ll(result);
}

/** Macaulay's criterion for Hilbert functions of standard graded algebras. */
inline bool is_M_vector(const std::vector<long long>& b) {
  if (b.empty() || b[0] != 1) throw NotStartingAtOne("is_M_vector: sequence must start at 1");
  for (std::size_t i = 1; i < b.size(); ++i) {
    if (b[i] < 0) return false;
    if (i >= 2 && b[i] > macaulay_pow(b[i - 1], static_cast<int>(i) - 1)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Bound reports
// ---------------------------------------------------------------------------

struct Inequality {
  std::string name;
  std::string lhs, rhs;       // exact values, decimal or rational text
  bool holds = false;
  bool equality = false;
  bool informational = false; // stated hypotheses (e.g. d >= 4) not met
  std::vector<std::pair<std::string, bool>> consequences;  // checked on equality
};

struct BoundsReport {
  std::vector<Inequality> items;
  bool all_hold = true;  // informational items included
  void add(Inequality ineq) {
    all_hold = all_hold && (ineq.holds || ineq.informational);
    items.push_back(std::move(ineq));
  }
};

struct SequenceCheck {
  std::string name;
  std::vector<long long> seq;
  bool is_M = false;
};

struct GTheoremReport {
  int d = 0;
  bool informational = false;  // d < 4
  std::vector<SequenceCheck> checks;
  bool all_pass = true;
};

/**
 * M-vector tests for the corrected g-sequences of the completion: the plain
 * length-3 prefixes, and under the weak Lefschetz assumption the prefixes up
 * to floor(d/2) plus the socle-strengthened variants.
 */
inline GTheoremReport check_g_theorems(const SimplicialComplex& K, const Gf& field,
                                       bool assume_wlp) {
  const auto md = detail::oriented_manifold_data(K, field, "check_g_theorems");
  const int d = md.d;
  GTheoremReport rep;
  rep.d = d;
  rep.informational = d < 4;
  const auto hpp = h_dprime_completion(K, field);
  const auto gt = g_tilde(K, field);
  auto gpp = [&](int r) {
    return hpp[static_cast<std::size_t>(r)] - hpp[static_cast<std::size_t>(r) - 1];
  };
  auto push = [&](std::string name, std::vector<long long> seq) {
    SequenceCheck c{std::move(name), std::move(seq), false};
    c.is_M = is_M_vector(c.seq);
    rep.all_pass = rep.all_pass && c.is_M;
    rep.checks.push_back(std::move(c));
  };

  const int reach = assume_wlp ? d / 2 : std::min(2, d / 2);
  std::vector<long long> s{1};
  for (int r = 1; r <= reach; ++r) s.push_back(gpp(r));
  push("g_dprime_prefix", s);
  std::vector<long long> t{1};
  for (int r = 1; r <= reach && r <= static_cast<int>(gt.size()); ++r)
    t.push_back(gt[static_cast<std::size_t>(r) - 1]);
  push("g_tilde_prefix", t);

  if (assume_wlp) {
    for (int ell = 1; ell + 1 <= d / 2; ++ell) {
      std::vector<long long> q{1};
      for (int r = 1; r <= ell; ++r) q.push_back(gpp(r));
      const cpp_int soc =
          binom(d - 1, ell + 1) * md.b.at(ell) + binom(d - 1, ell) * md.b.at(d - ell - 1);
      q.push_back(gpp(ell + 1) + to_ll(soc));
      push("g_dprime_socle_strengthened_l" + std::to_string(ell), q);
    }
  }
  return rep;
}

/**
 * Individual-Betti upper bounds: C(d,r+1) b_r + C(d,r) b_{d-r-1} against
 * C(n-d+r, r+1), for r = 1 and (under WLP) r < floor(d/2); plus the derived
 * single-Betti and vertex-count thresholds.  Equality consequences
 * (neighborliness, absence of small interior faces) are verified when hit.
 */
inline BoundsReport check_kuhnel_bounds(const SimplicialComplex& K, const Gf& field,
                                        bool assume_wlp) {
  const auto md = detail::oriented_manifold_data(K, field, "check_kuhnel_bounds");
  const int d = md.d;
  const long long n = K.num_vertices();
  BoundsReport rep;
  const int rmax = assume_wlp ? std::max(1, d / 2 - 1) : 1;
  for (int r = 1; r <= rmax; ++r) {
    const bool informational = (r == 1 ? d < 4 : false);
    const cpp_int lhs = binom(d, r + 1) * md.b.at(r) + binom(d, r) * md.b.at(d - r - 1);
    const cpp_int rhs = binom(n - d + r, r + 1);
    Inequality ineq;
    ineq.name = "betti_pair_bound_r" + std::to_string(r);
    ineq.lhs = lhs.str();
    ineq.rhs = rhs.str();
    ineq.holds = lhs <= rhs;
    ineq.equality = lhs == rhs;
    ineq.informational = informational;
    if (ineq.equality && ineq.holds) {
      bool nb = is_j_neighborly(K, r + 1);
      bool no_small_interior = true;
      for (const auto& tf : interior_faces(K, field))
        if (static_cast<int>(tf.size()) <= r) no_small_interior = false;
      ineq.consequences.push_back({"(r+1)-neighborly", nb});
      ineq.consequences.push_back({"no_interior_faces_dim_le_r-1", no_small_interior});
    }
    rep.add(std::move(ineq));

    // Derived single-Betti bound: C(d,r+1) b_r <= C(n-d+r, r+1).
    Inequality single;
    single.name = "betti_single_bound_r" + std::to_string(r);
    const cpp_int slhs = binom(d, r + 1) * md.b.at(r);
    single.lhs = slhs.str();
    single.rhs = rhs.str();
    single.holds = slhs <= rhs;
    single.equality = slhs == rhs;
    single.informational = informational;
    rep.add(std::move(single));

    if (md.b.at(r) != 0) {
      Inequality verts;
      verts.name = "vertex_threshold_r" + std::to_string(r);
      verts.lhs = std::to_string(2 * d - r);
      verts.rhs = std::to_string(n);
      verts.holds = n >= 2 * d - r;
      verts.equality = n == 2 * d - r;
      verts.informational = informational;
      rep.add(std::move(verts));
      if (md.b.at(d - r - 1) != 0) {
        Inequality both;
        both.name = "vertex_threshold_both_r" + std::to_string(r);
        both.lhs = std::to_string(2 * d - r + 1);
        both.rhs = std::to_string(n);
        both.holds = n >= 2 * d - r + 1;
        both.equality = n == 2 * d - r + 1;
        both.informational = informational;
        rep.add(std::move(both));
      }
    }
  }
  return rep;
}

/**
 * Middle-Betti bound for even-dimensional manifolds, with exact rational
 * weights on the lower Betti numbers.  dim K = 2k is required.
 */
inline BoundsReport check_weighted_betti(const SimplicialComplex& K, const Gf& field) {
  if (K.dim() % 2 != 0) throw OddDimension("check_weighted_betti: dimension must be even");
  const auto md = detail::oriented_manifold_data(K, field, "check_weighted_betti");
  const int k = K.dim() / 2;
  const long long n = K.num_vertices();
  const cpp_rational cap(binom(n - k - 1, k + 1), binom(2 * k + 1, k + 1));
  cpp_rational lhs = md.b.at(k);
  for (int i = 2; i <= k; ++i) {
    const cpp_rational w = cap / cpp_rational(binom(n - 2 * k - 1 + i, i));
    lhs += w * cpp_rational(binom(2 * k, i) * md.b.at(i - 1) +
                            binom(2 * k, i - 1) * md.b.at(2 * k + 1 - i));
  }
  BoundsReport rep;
  Inequality ineq;
  ineq.name = "weighted_middle_betti_k" + std::to_string(k);
  auto rat_str = [](const cpp_rational& q) {
    return denominator(q) == 1 ? numerator(q).str() : numerator(q).str() + "/" + denominator(q).str();
  };
  ineq.lhs = rat_str(lhs);
  ineq.rhs = rat_str(cap);
  ineq.holds = lhs <= cap;
  ineq.equality = lhs == cap;
  if (ineq.equality) {
    bool nb = is_j_neighborly(K, k + 1);
    bool no_small_interior = true;
    for (const auto& tf : interior_faces(K, field))
      if (static_cast<int>(tf.size()) <= k) no_small_interior = false;
    ineq.consequences.push_back({"(k+1)-neighborly", nb});
    ineq.consequences.push_back({"no_interior_faces_dim_le_k-1", no_small_interior});
  }
  rep.add(std::move(ineq));

  // Plain middle-Betti consequence: b_k <= cap.
  Inequality mid;
  mid.name = "middle_betti_bound_k" + std::to_string(k);
  mid.lhs = std::to_string(md.b.at(k));
  mid.rhs = rat_str(cap);
  mid.holds = cpp_rational(md.b.at(k)) <= cap;
  mid.equality = cpp_rational(md.b.at(k)) == cap;
  rep.add(std::move(mid));
  if (md.b.at(k) != 0) {
    Inequality verts;
    verts.name = "vertex_threshold_middle";
    verts.lhs = std::to_string(3 * k + 2);
    verts.rhs = std::to_string(n);
    verts.holds = n >= 3 * k + 2;
    verts.equality = n == 3 * k + 2;
    rep.add(std::move(verts));
  }
  return rep;
}

/** Equality in the relative lower bound: g_2(K,bd) = C(d+1,2)(b_1 - b_0) rel. */
inline bool minimal_g2(const SimplicialComplex& K, const Gf& field) {
  const auto rep = classify(K, field);
  if (!status_is_manifold(rep.status)) throw NotAManifold("minimal_g2: not a manifold");
  const auto hg = relative_hg(K, field);
  const auto rel = relative_betti(K, rep.boundary, field);
  const cpp_int rhs = binom(K.dim() + 2, 2) * (rel.at(1) - rel.at(0));
  return cpp_int(hg.g2) == rhs;
}

/** Vanishing of the corrected second g-number of the completion. */
inline bool minimal_g_tilde2(const SimplicialComplex& K, const Gf& field) {
  const auto gt = g_tilde(K, field);
  return gt.size() >= 2 ? gt[1] == 0 : true;
}

}  // namespace facelab
