#pragma once

/**
 * Acceptance battery: ten self-contained correctness gates over the reference
 * suite, each with a pinned wall-time limit.  Every gate re-derives its
 * expectations from closed formulas or frozen classical values; nothing is
 * read from disk.  `run_all` returns one result per gate, in order.
 */

#include <algorithm>
#include <chrono>
#include <exception>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "facelab/artinian.hpp"
#include "facelab/complex.hpp"
#include "facelab/enumerative.hpp"
#include "facelab/homology.hpp"
#include "facelab/manifold.hpp"
#include "facelab/shapes.hpp"
#include "facelab/suite.hpp"
#include "facelab/surgery.hpp"

namespace facelab::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  double seconds = 0.0;
  double limit_seconds = 0.0;  // pinned wall-time budget for the criterion
  std::string detail;          // check count, or the first failing check
};

namespace detail {

using LL = std::vector<long long>;

inline const Gf& field_for(const FieldSpec& spec) {
  static const Gf big(suite::kBigPrime);
  static const Gf two(suite::kChar2);
  return spec.characteristic == 2 ? two : big;
}

/** Accumulates named boolean checks; remembers the first failure. */
class Checker {
 public:
  void require(bool ok, const std::string& what) {
    ++total_;
    if (!ok) {
      ++failed_;
      if (first_.empty()) first_ = what;
    }
  }
  [[nodiscard]] bool pass() const { return failed_ == 0 && total_ > 0; }
  [[nodiscard]] std::string summary() const {
    if (total_ == 0) return "no checks ran";
    if (failed_ == 0) return std::to_string(total_) + " checks";
    return std::to_string(failed_) + " of " + std::to_string(total_) +
           " checks failed; first: " + first_;
  }

 private:
  int total_ = 0;
  int failed_ = 0;
  std::string first_;
};

/** Hilbert functions computed by gate 3 (seed 1), re-tested by gate 10. */
struct Context {
  std::vector<std::pair<std::string, LL>> hilberts;
};

// --- gate 1: frozen h- and f-vectors of the smallest classical complexes ---

inline void criterion_1(Checker& c, Context&) {
  c.require(h_vector(shapes::simplex_boundary(4)) == LL{1, 1, 1, 1, 1},
            "h-vector of the boundary 3-sphere on 5 vertices");
  c.require(h_vector(shapes::simplex(2)) == LL{1, 0, 0, 0},
            "h-vector of the solid triangle");
  c.require(shapes::simplex_boundary(3).f_vector() == LL{1, 4, 6, 4},
            "f-vector of the boundary 2-sphere on 4 vertices");
}

// --- gate 2: the five-vertex Moebius band, with its sharp bounds ---

inline void criterion_2(Checker& c, Context&) {
  const auto M5 = shapes::kuhnel_mobius();
  const Gf& F2 = field_for(suite::kChar2);
  const Gf& Fp = field_for(suite::kBigPrime);

  const auto rep = classify(M5, F2);
  c.require(rep.status == ManifoldStatus::manifold_with_boundary,
            "Moebius band classifies as a manifold with boundary");
  c.require(rep.connected, "Moebius band is connected");

  const auto bd = boundary_complex(M5, F2);
  c.require(bd.f_vector() == LL{1, 5, 5}, "boundary has 5 vertices and 5 edges");
  const auto bdb = betti(bd, F2);
  c.require(bdb.at(0) == 0 && bdb.at(1) == 1, "boundary is a single cycle");

  c.require(is_j_neighborly(M5, 2), "Moebius band is 2-neighborly");
  c.require(betti(M5, F2).at(1) == 1, "first Betti number is 1 over the size-2^16 field");
  c.require(is_orientable(M5, F2), "orientable in characteristic two");
  c.require(!is_orientable(M5, Fp), "non-orientable over the odd prime field");

  const auto kb = check_kuhnel_bounds(M5, F2, false);
  c.require(kb.items.size() >= 2, "bound report has the expected items");
  if (kb.items.size() >= 2) {
    const auto& single = kb.items[1];
    c.require(single.name == "betti_single_bound_r1", "single-Betti bound present");
    c.require(single.holds && single.equality, "single-Betti bound attained with equality");
  }

  const auto wb = check_weighted_betti(M5, F2);
  c.require(!wb.items.empty(), "weighted bound report nonempty");
  if (!wb.items.empty()) {
    const auto& w = wb.items[0];
    c.require(w.name == "weighted_middle_betti_k1", "weighted middle-Betti bound present");
    c.require(w.holds && w.equality, "weighted bound attained with equality");
    bool cons = !w.consequences.empty();
    for (const auto& [name, ok] : w.consequences) cons = cons && ok;
    c.require(cons, "equality consequences all verified");
  }
}

// --- gate 3: the Artinian oracle reproduces every closed formula ---

inline void criterion_3(Checker& c, Context& ctx) {
  for (const auto& m : suite::core_members()) {
    const Gf& F = field_for(m.field);
    const auto comp = completion(m.complex, F);
    const int d = m.complex.dim() + 1;

    const auto hp = comp.cone_vertex
                        ? h_prime(comp.complex, F, HPrimeProfile::one_singular, comp.cone_vertex)
                        : h_prime(comp.complex, F, HPrimeProfile::manifold);
    const auto hpp = h_dprime_completion(m.complex, F);
    const auto soc = socle_dims_formula(m.complex, F);

    for (unsigned long long seed : {1ull, 7ull, 12345ull}) {
      GradedQuotient q(comp.complex, F, ArtinianOptions{seed, 8});
      const std::string tag = m.name + " seed " + std::to_string(seed);
      c.require(LL(q.hilbert()) == hp, tag + ": oracle Hilbert function = h' formula");
      bool soc_ok = true;
      for (int j = 0; j < d; ++j)
        soc_ok = soc_ok && q.socle_dims()[static_cast<std::size_t>(j)] ==
                               soc[static_cast<std::size_t>(j)];
      c.require(soc_ok, tag + ": socle dimensions below the top = Betti formula");
      c.require(LL(q.socle_free_dims()) == hpp, tag + ": socle-free dimensions = h'' formula");
      bool sym = true;
      for (int i = 0; i <= d; ++i)
        sym = sym && hpp[static_cast<std::size_t>(i)] == hpp[static_cast<std::size_t>(d - i)];
      c.require(sym, tag + ": h'' symmetry");
      if (seed == 1ull) ctx.hilberts.emplace_back(m.name, q.hilbert());
    }
  }
}

// --- gate 4: Gorenstein completions and generic linear-form ranks ---

inline void criterion_4(Checker& c, Context&) {
  for (const auto& m : suite::core_members()) {
    const Gf& F = field_for(m.field);
    const auto comp = completion(m.complex, F);
    const auto g = gorenstein_check(comp.complex, F, ArtinianOptions{1, 8});
    c.require(g.gorenstein, m.name + ": completion is Gorenstein");
    if (m.complex.dim() + 1 >= 4) {
      const auto lef = lefschetz_maps_check(m.complex, F, false, ArtinianOptions{1, 8});
      c.require(lef.pass, m.name + ": generic linear-form ranks in the binding ranges");
    }
  }
  c.require(wlp_check(shapes::octahedron(), field_for(suite::kBigPrime), ArtinianOptions{1, 8})
                .full_rank_middle,
            "octahedron has the weak Lefschetz property");
  for (unsigned long long seed = 1; seed <= 5; ++seed) {
    const auto S = stacked_sphere(4, 8, seed);
    c.require(wlp_check(S, field_for(suite::kBigPrime), ArtinianOptions{1, 8}).full_rank_middle,
              "stacked 3-sphere seed " + std::to_string(seed) +
                  " has the weak Lefschetz property");
  }
}

// --- gate 5: vanishing of the relative invariant = stackedness, both ways ---

inline void criterion_5(Checker& c, Context&) {
  for (const auto& m : suite::stackedness_members()) {
    const Gf& F = field_for(m.field);
    const int d = m.complex.dim() + 1;
    const auto hb = h_bar_dprime(m.complex, F);
    for (int i = 1; i <= d - 1; ++i) {
      const bool vanish = hb[static_cast<std::size_t>(i)] == 0;
      const bool stacked = is_i_stacked(m.complex, i - 1, F);
      c.require(vanish == stacked, m.name + ": degree " + std::to_string(i) +
                                       " vanishing matches (i-1)-stackedness");
    }
  }
}

// --- gate 6: corrected g-sequences are M-vectors; the g/h duality identity ---

inline void criterion_6(Checker& c, Context&) {
  for (const auto& m : suite::core_members()) {
    const int d = m.complex.dim() + 1;
    if (d < 4) continue;
    const Gf& F = field_for(m.field);
    const auto rep = classify(m.complex, F);
    if (!rep.connected || !rep.orientable) continue;

    const auto gth = check_g_theorems(m.complex, F, false);
    c.require(gth.checks.size() >= 2 && gth.checks[0].is_M,
              m.name + ": (1, g''_1, g''_2) is an M-vector");
    c.require(gth.checks.size() >= 2 && gth.checks[1].is_M,
              m.name + ": (1, g~_1, g~_2) is an M-vector");

    const auto comp = completion(m.complex, F);
    const auto hp = comp.cone_vertex
                        ? h_prime(comp.complex, F, HPrimeProfile::one_singular, comp.cone_vertex)
                        : h_prime(comp.complex, F, HPrimeProfile::manifold);
    const auto hpp = h_dprime_completion(m.complex, F);
    const auto gt = g_tilde(m.complex, F);
    for (int r = 1; r <= d / 2; ++r) {
      const bool ok = gt[static_cast<std::size_t>(r) - 1] ==
                      hpp[static_cast<std::size_t>(d - r)] -
                          hp[static_cast<std::size_t>(d - r) + 1];
      c.require(ok, m.name + ": g~_r = h''_{d-r} - h'_{d-r+1} at r = " + std::to_string(r));
    }
  }
}

// --- gate 7: Euler, h-additivity, duality, and costar identities ---

inline void criterion_7(Checker& c, Context&) {
  for (const auto& m : suite::core_members()) {
    const Gf& F = field_for(m.field);
    const int d = m.complex.dim() + 1;
    const auto comp = completion(m.complex, F);

    c.require(reduced_euler(comp.boundary) ==
                  reduced_euler(m.complex) - reduced_euler(comp.complex),
              m.name + ": reduced Euler characteristic additivity");

    const auto h = h_vector(m.complex);
    const auto hhat = h_vector(comp.complex);
    LL hb(static_cast<std::size_t>(d), 0);
    if (!comp.boundary.facets().empty()) hb = h_vector(comp.boundary);
    bool hsum = true;
    for (int i = 0; i <= d; ++i) {
      const long long from_boundary = i >= 1 ? hb[static_cast<std::size_t>(i) - 1] : 0;
      hsum = hsum && hhat[static_cast<std::size_t>(i)] ==
                         h[static_cast<std::size_t>(i)] + from_boundary;
    }
    c.require(hsum, m.name + ": h-vector additivity under completion");

    const auto bK = betti(m.complex, F);
    const auto bH = betti(comp.complex, F);
    if (comp.cone_vertex) {
      // The degree pairing relates the completed complex to the bounded one;
      // for closed inputs the two coincide and the pairing is not in play.
      bool dual = true;
      for (int j = 1; j < d; ++j) dual = dual && bH.at(j - 1) == bK.at(d - j);
      c.require(dual, m.name + ": top-bottom Betti pairing of the completion");
    }

    const std::string drop = comp.cone_vertex ? *comp.cone_vertex : comp.complex.labels()[0];
    const auto bC = betti(costar(comp.complex, {drop}), F);
    bool cs = true;
    for (int j = 0; j <= d - 3; ++j) cs = cs && bC.at(j) == bH.at(j);
    c.require(cs, m.name + ": low-degree Betti numbers survive deleting one vertex star");
  }
}

// --- gate 8: surgery round trips and the two decomposition transcripts ---

inline void criterion_8(Checker& c, Context&) {
  const Gf& F = field_for(suite::kBigPrime);

  const auto S1 = shapes::simplex_boundary(4);
  const auto S2 = facelab::detail::relabel_offset(shapes::simplex_boundary(4), 6);
  const TokenFace src{"1", "2", "3", "4"};
  const TokenFace dst{"7", "8", "9", "10"};
  const auto sum = connected_sum(S1, S2, positional_glue(src, dst), F);
  const auto mf = missing_facets(sum);
  c.require(mf.size() == 1, "sum of two boundary 3-spheres has exactly one missing facet");
  if (mf.size() == 1) {
    const auto cutstep = cut_along_missing_facet(sum, mf.front(), F);
    c.require(cutstep.kind == StepKind::connected_sum, "cut recognizes a connected sum");
    c.require(cutstep.pieces.size() == 2, "cut yields two pieces");
    bool both = cutstep.pieces.size() == 2;
    for (const auto& p : cutstep.pieces)
      both = both && p.f_vector() == LL{1, 5, 10, 10, 5} &&
             classify(p, F).status == ManifoldStatus::sphere;
    c.require(both, "both pieces are boundary 4-simplices up to relabeling");
  }

  for (const auto& s : suite::decomposition_scripts()) {
    const auto K = walkup_complex(s.script, s.seed, F);
    const auto t1 = decompose_minimal_g2(K, F);
    const auto t2 = decompose_minimal_g_tilde2(K, F);
    c.require(t1.size() == t2.size(), s.name + ": both transcripts have the same move count");

    auto verify = [&](const std::vector<DecompositionStep>& steps, bool tilde,
                      const std::string& label) {
      bool minimal = true, bases = true;
      int base_count = 0;
      for (const auto& step : steps) {
        for (const auto& piece : step.pieces) {
          minimal = minimal && (tilde ? minimal_g_tilde2(piece, F) : minimal_g2(piece, F));
          const bool is_base = step.kind == StepKind::base_stacked ||
                               step.kind == StepKind::base_no_interior_edges;
          if (!is_base) continue;
          ++base_count;
          const auto prep = classify(piece, F);
          if (!status_has_boundary(prep.status)) {
            bases = bases && facelab::detail::is_simplex_boundary(piece);
          } else if (tilde) {
            bases = bases && is_i_stacked(piece, 1, F);
          } else {
            bases = bases && relative_f_vector(piece, F).at(2) == 0;
          }
        }
      }
      c.require(minimal, s.name + ": every " + label + " intermediate is minimal");
      c.require(bases && base_count > 0, s.name + ": " + label + " bases have the stated form");
    };
    verify(t1, false, "g2-mode");
    verify(t2, true, "corrected-mode");
  }
}

// --- gate 9: interior-face handle sequences and the vanishing bound ---

inline void criterion_9(Checker& c, Context&) {
  const Gf& F = field_for(suite::kBigPrime);
  c.require(pl_handle_sequence(shapes::two_tetra_ball(), F).indices == std::vector<int>{0, 0, 1},
            "two-tetrahedron ball builds from two 0-handles and one 1-handle");
  c.require(pl_handle_sequence(shapes::kuhnel_mobius(), F).indices ==
                std::vector<int>{0, 0, 0, 0, 0, 1, 1, 1, 1, 1},
            "Moebius band builds from five 0-handles and five 1-handles");

  for (const auto& m : suite::core_members()) {
    const Gf& Fm = field_for(m.field);
    if (!status_has_boundary(classify(m.complex, Fm).status)) continue;
    const auto hb = h_bar_dprime(m.complex, Fm);
    const auto hs = pl_handle_sequence(m.complex, Fm);
    const int max_index = hs.indices.empty() ? -1 : hs.indices.back();
    bool ok = true;
    for (std::size_t i = 0; i < hb.size(); ++i)
      if (hb[i] == 0) ok = ok && max_index < static_cast<int>(i);
    c.require(ok, m.name + ": vanishing degrees bound the handle indices");
  }
}

// --- gate 10: Macaulay pseudopower arithmetic and M-vector growth ---

inline void criterion_10(Checker& c, Context& ctx) {
  bool zeros = true;
  for (int i = 1; i <= 6; ++i) zeros = zeros && macaulay_pow(0, i) == 0;
  c.require(zeros, "pseudopowers of 0 vanish");
  c.require(macaulay_pow(4, 2) == 5, "4 to the bracket-2 pseudopower is 5");
  c.require(is_M_vector({1, 2, 3}), "(1,2,3) is an M-vector");
  c.require(!is_M_vector({1, 2, 4}), "(1,2,4) is not an M-vector");

  if (ctx.hilberts.empty()) {
    // Standalone run: recompute the seed-1 oracle Hilbert functions.
    Context fresh;
    Checker scratch;
    criterion_3(scratch, fresh);
    ctx.hilberts = std::move(fresh.hilberts);
  }
  c.require(!ctx.hilberts.empty(), "oracle Hilbert functions available");
  for (const auto& [name, hf] : ctx.hilberts)
    c.require(is_M_vector(hf), name + ": oracle Hilbert function satisfies Macaulay growth");
}

}  // namespace detail

/** Runs the ten gates in order; wall-time budgets are part of the pass/fail. */
inline std::vector<CriterionResult> run_all() {
  using Fn = void (*)(detail::Checker&, detail::Context&);
  struct Gate {
    int id;
    const char* title;
    double limit;
    Fn fn;
  };
  const std::vector<Gate> gates = {
      {1, "classical h- and f-vectors", 0.1, detail::criterion_1},
      {2, "five-vertex Moebius band invariants and sharp bounds", 1.0, detail::criterion_2},
      {3, "Artinian oracle matches the closed formulas", 60.0, detail::criterion_3},
      {4, "Gorenstein completions and Lefschetz rank checks", 30.0, detail::criterion_4},
      {5, "relative-invariant vanishing equals stackedness", 60.0, detail::criterion_5},
      {6, "corrected g-sequences and the g/h duality identity", 10.0, detail::criterion_6},
      {7, "Euler, h-additivity, duality, and costar identities", 10.0, detail::criterion_7},
      {8, "surgery round trips and decomposition transcripts", 120.0, detail::criterion_8},
      {9, "handle sequences and vanishing bounds", 5.0, detail::criterion_9},
      {10, "Macaulay pseudopowers and M-vector growth", 1.0, detail::criterion_10},
  };

  detail::Context ctx;
  std::vector<CriterionResult> results;
  for (const auto& g : gates) {
    CriterionResult r;
    r.id = g.id;
    r.title = g.title;
    r.limit_seconds = g.limit;
    detail::Checker c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      g.fn(c, ctx);
      r.pass = c.pass();
      r.detail = c.summary();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    const auto t1 = std::chrono::steady_clock::now();
    r.seconds = std::chrono::duration<double>(t1 - t0).count();
    if (r.seconds > r.limit_seconds) {
      r.pass = false;
      r.detail += " [over time budget]";
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace facelab::acceptance
