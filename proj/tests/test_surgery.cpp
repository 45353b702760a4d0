#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "facelab/enumerative.hpp"
#include "facelab/manifold.hpp"
#include "facelab/shapes.hpp"
#include "facelab/surgery.hpp"

using namespace facelab;

namespace {
const Gf& F0() {
  static Gf f(FieldSpec{32003, 1});
  return f;
}

TokenFace tf(std::initializer_list<const char*> xs) {
  TokenFace out;
  for (const char* x : xs) out.push_back(x);
  return out;
}

std::vector<long long> fv(const SimplicialComplex& K) { return K.f_vector(); }

/** Second summand of a connected sum, on fresh numeric labels 6.. */
SimplicialComplex second_sphere() {
  return detail::relabel_offset(shapes::simplex_boundary(4), 6);
}

std::vector<StepKind> kinds(const std::vector<DecompositionStep>& steps) {
  std::vector<StepKind> out;
  for (const auto& s : steps) out.push_back(s.kind);
  return out;
}
}  // namespace

TEST_CASE("missing facets of small fixtures", "[surgery]") {
  const auto mf = missing_facets(shapes::kuhnel_mobius());
  REQUIRE(mf.size() == 5);
  CHECK(mf[0] == tf({"1", "2", "4"}));
  CHECK(mf[1] == tf({"1", "3", "4"}));
  CHECK(mf[2] == tf({"1", "3", "5"}));
  CHECK(mf[3] == tf({"2", "3", "5"}));
  CHECK(mf[4] == tf({"2", "4", "5"}));

  CHECK(missing_facets(shapes::octahedron()).empty());
  CHECK(missing_facets(shapes::simplex_boundary(4)).empty());

  const auto B3hat = completion(shapes::two_tetra_ball(), F0()).complex;
  const auto mb = missing_facets(B3hat);
  REQUIRE(mb.size() == 1);
  CHECK(mb[0] == tf({"2", "3", "4", "@v0"}));

  // a path ball's internal ridges are exactly the missing facets of its boundary
  CHECK(missing_facets(long_stacked_sphere(4, 16)).size() == 11);

  const auto impure = SimplicialComplex::from_facets({tf({"1", "2"}), tf({"3", "4", "5"})});
  CHECK_THROWS_AS(missing_facets(impure), NotPure);
}

TEST_CASE("connected sum of two simplex boundaries", "[surgery]") {
  const auto S1 = shapes::simplex_boundary(4);
  const auto S2 = second_sphere();
  const TokenFace src = tf({"1", "2", "3", "4"});
  const TokenFace dst = tf({"6", "7", "8", "9"});
  const auto sum = connected_sum(S1, S2, positional_glue(src, dst), F0());

  CHECK(fv(sum) == std::vector<long long>{1, 6, 14, 16, 8});
  CHECK(classify(sum, F0()).status == ManifoldStatus::sphere);

  const auto mf = missing_facets(sum);
  REQUIRE(mf.size() == 1);  // strictly more than either summand's zero
  CHECK(mf[0] == src);

  SECTION("cut recovers the summands up to relabeling of the glued facet") {
    const auto step = cut_along_missing_facet(sum, src, F0());
    CHECK(step.kind == StepKind::connected_sum);
    REQUIRE(step.pieces.size() == 2);
    for (const auto& p : step.pieces) {
      CHECK(fv(p) == std::vector<long long>{1, 5, 10, 10, 5});
      CHECK(classify(p, F0()).status == ManifoldStatus::sphere);
    }
    // reglue: relabel the second piece off the shared tokens, then search the
    // d! identifications of the glued facet for one reproducing the input
    const auto P2 = detail::relabel_offset(step.pieces[1], 6);
    TokenFace psrc, pdst;
    for (const auto& t : step.pieces[0].labels())
      if (std::find(src.begin(), src.end(), t) != src.end()) psrc.push_back(t);
    REQUIRE(psrc == src);
    // the relabeled image of the cut facet inside P2: positions follow the
    // sorted label order of piece 1
    {
      const auto& lab1 = step.pieces[1].labels();
      for (std::size_t i = 0; i < lab1.size(); ++i)
        if (std::find(src.begin(), src.end(), lab1[i]) != src.end())
          pdst.push_back(P2.labels()[i]);
    }
    REQUIRE(pdst.size() == 4);
    bool matched = false;
    TokenFace perm = pdst;
    std::sort(perm.begin(), perm.end());
    do {
      try {
        if (connected_sum(step.pieces[0], P2, positional_glue(psrc, perm), F0()) == sum) {
          matched = true;
          break;
        }
      } catch (const ManifoldViolation&) {
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(matched);
  }
}

TEST_CASE("connected sum with a ball and error cases", "[surgery]") {
  const auto B3 = shapes::two_tetra_ball();
  const auto S2 = second_sphere();
  const TokenFace at_b = tf({"1", "2", "3", "4"});
  const TokenFace at_s = tf({"6", "7", "8", "9"});

  SECTION("ball # sphere stays a ball with the same boundary") {
    const auto sum = connected_sum(B3, S2, positional_glue(at_b, at_s), F0());
    CHECK(fv(sum) == std::vector<long long>{1, 6, 13, 13, 5});
    CHECK(classify(sum, F0()).status == ManifoldStatus::ball);
    CHECK(boundary_complex(sum, F0()) == boundary_complex(B3, F0()));
    CHECK(missing_facets(sum).size() == 1);
  }

  SECTION("ball # ball along boundary-touching pairs is rejected") {
    const auto B2 = detail::relabel_offset(shapes::two_tetra_ball(), 6);
    CHECK_THROWS_AS(
        connected_sum(B3, B2, positional_glue(at_b, tf({"6", "7", "8", "9"})), F0()),
        ManifoldViolation);
  }

  SECTION("shared vertex tokens are rejected") {
    CHECK_THROWS_AS(connected_sum(B3, shapes::simplex_boundary(4),
                                  positional_glue(at_b, tf({"1", "2", "3", "4"})), F0()),
                    VertexClash);
  }

  SECTION("non-facet glue faces are rejected") {
    CHECK_THROWS_AS(connected_sum(B3, S2, positional_glue(tf({"1", "2", "3", "5"}), at_s), F0()),
                    NotAFacet);
  }
}

TEST_CASE("handle addition on a long stacked sphere", "[surgery]") {
  const auto S = long_stacked_sphere(4, 16);
  CHECK(fv(S) == std::vector<long long>{1, 16, 54, 76, 38});
  CHECK(classify(S, F0()).status == ManifoldStatus::sphere);

  const TokenFace src = tf({"1", "2", "3", "4"});
  const TokenFace dst0 = tf({"13", "14", "15", "16"});
  TokenFace dst1 = dst0;
  std::swap(dst1[0], dst1[1]);  // opposite identification parity

  const auto H0 = handle_addition(S, positional_glue(src, dst0), F0());
  const auto rep0 = classify(H0, F0());
  CHECK(rep0.status == ManifoldStatus::closed_manifold);
  CHECK(rep0.orientable);
  CHECK(rep0.betti_table.at(1) == 1);
  CHECK(missing_facets(H0).size() == 12);  // strictly above the input's 11

  const auto H1 = handle_addition(S, positional_glue(src, dst1), F0());
  const auto rep1 = classify(H1, F0());
  CHECK(rep1.status == ManifoldStatus::closed_manifold);
  CHECK_FALSE(rep1.orientable);
  CHECK(rep1.betti_table.at(1) == 1);

  SECTION("cutting the identified facet undoes the handle exactly") {
    for (const auto* H : {&H0, &H1}) {
      const auto step = cut_along_missing_facet(*H, src, F0());
      CHECK(step.kind == StepKind::handle_addition);
      REQUIRE(step.pieces.size() == 1);
      const auto& P = step.pieces[0];
      CHECK(fv(P) == fv(S));
      CHECK(classify(P, F0()).status == ManifoldStatus::sphere);
      GlueMap g;
      g.source_facet = src;
      for (const auto& v : src) {
        const std::string w = v + "@cut";
        REQUIRE(P.id_of(w).has_value());
        g.target_facet.push_back(w);
        g.bijection[v] = w;
      }
      CHECK(handle_addition(P, g, F0()) == *H);
    }
  }
}

TEST_CASE("handle addition error cases", "[surgery]") {
  SECTION("close facets are rejected with the observed distance") {
    CHECK_THROWS_AS(handle_addition(shapes::octahedron(),
                                    positional_glue(tf({"1", "2", "3"}), tf({"4", "5", "6"})),
                                    F0()),
                    DistanceTooSmall);
  }
  SECTION("facets sharing a vertex are rejected") {
    const auto S = long_stacked_sphere(4, 16);
    CHECK_THROWS_AS(
        handle_addition(S, positional_glue(tf({"1", "2", "3", "4"}), tf({"1", "2", "3", "5"})),
                        F0()),
        VertexClash);
  }
  SECTION("pairs lying on the boundary twice are rejected") {
    const auto B = long_stacked_ball(4, 12);  // every vertex of a path ball is on the boundary
    CHECK_THROWS_AS(
        handle_addition(B, positional_glue(tf({"1", "2", "3", "4"}), tf({"9", "10", "11", "12"})),
                        F0()),
        ManifoldViolation);
  }
}

TEST_CASE("cut preconditions", "[surgery]") {
  const auto S = shapes::simplex_boundary(4);
  // a facet is not a missing facet, and neither is a lower face
  CHECK_THROWS_AS(cut_along_missing_facet(S, tf({"1", "2", "3", "4"}), F0()), NotMissingFacet);
  CHECK_THROWS_AS(cut_along_missing_facet(S, tf({"1", "2", "3"}), F0()), NotMissingFacet);
  CHECK_THROWS_AS(cut_along_missing_facet(shapes::kuhnel_mobius(), tf({"1", "2", "4"}), F0()),
                  DimensionTooSmall);
}

TEST_CASE("cutting the completion of the two-tetra ball", "[surgery]") {
  const auto B3hat = completion(shapes::two_tetra_ball(), F0()).complex;
  const auto step = cut_along_missing_facet(B3hat, tf({"2", "3", "4", "@v0"}), F0());
  CHECK(step.kind == StepKind::connected_sum);
  REQUIRE(step.pieces.size() == 2);
  const std::vector<std::vector<std::string>> expect = {{"1", "2", "3", "4", "@v0"},
                                                        {"2", "3", "4", "5", "@v0"}};
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(step.pieces[i].labels() == expect[i]);
    CHECK(step.pieces[i].facets().size() == 5);
    CHECK(classify(step.pieces[i], F0()).status == ManifoldStatus::sphere);
  }
}

TEST_CASE("cutting a three-summand stacked sphere", "[surgery]") {
  const auto S = stacked_sphere(4, 7, 1);
  const auto mf = missing_facets(S);
  REQUIRE(mf.size() == 2);
  CHECK(mf[0] == tf({"1", "2", "3", "5"}));
  CHECK(mf[1] == tf({"1", "2", "5", "6"}));
  const auto step = cut_along_missing_facet(S, mf[0], F0());
  CHECK(step.kind == StepKind::connected_sum);
  REQUIRE(step.pieces.size() == 2);
  std::vector<std::size_t> sizes = {step.pieces[0].labels().size(),
                                    step.pieces[1].labels().size()};
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{5, 6});  // one simplex boundary splits off
  for (const auto& p : step.pieces) CHECK(classify(p, F0()).status == ManifoldStatus::sphere);
}

TEST_CASE("decomposition of minimal fixtures", "[surgery]") {
  const auto B3 = shapes::two_tetra_ball();

  SECTION("the two-tetra ball is already a base in both modes") {
    const auto g2 = decompose_minimal_g2(B3, F0());
    REQUIRE(g2.size() == 1);
    CHECK(g2[0].kind == StepKind::base_no_interior_edges);
    const auto gt = decompose_minimal_g_tilde2(B3, F0());
    REQUIRE(gt.size() == 1);
    CHECK(gt[0].kind == StepKind::base_stacked);
  }

  SECTION("summing a simplex boundary adds one reversible vertex split") {
    const auto sum = connected_sum(
        B3, second_sphere(),
        positional_glue(tf({"1", "2", "3", "4"}), tf({"6", "7", "8", "9"})), F0());
    const auto g2 = decompose_minimal_g2(sum, F0());
    REQUIRE(g2.size() == 2);
    CHECK(g2[0].kind == StepKind::vertex_split_reversal);
    CHECK(g2[0].witness == tf({"1", "2", "3", "4"}));
    CHECK(g2[1].kind == StepKind::base_no_interior_edges);
    const auto gt = decompose_minimal_g_tilde2(sum, F0());
    REQUIRE(gt.size() == 2);
    CHECK(gt[0].kind == StepKind::vertex_split_reversal);
    CHECK(gt[1].kind == StepKind::base_stacked);
  }
}

TEST_CASE("decomposition of a seeded handlebody", "[surgery]") {
  const std::string prefix = "long_ball:4:12;sum_sphere:7;sum_sphere:7";
  const auto W = walkup_complex(prefix + ";handle", 4, F0());
  const auto rep = classify(W, F0());
  CHECK(rep.status == ManifoldStatus::manifold_with_boundary);
  CHECK(rep.orientable);
  CHECK(rep.betti_table.at(1) == 1);
  REQUIRE(minimal_g2(W, F0()));
  REQUIRE(minimal_g_tilde2(W, F0()));

  const auto g2 = decompose_minimal_g2(W, F0());
  const auto gt = decompose_minimal_g_tilde2(W, F0());
  CHECK(g2.size() == gt.size());

  const std::vector<StepKind> expect_g2 = {
      StepKind::vertex_split_reversal, StepKind::handle_addition,
      StepKind::vertex_split_reversal, StepKind::vertex_split_reversal,
      StepKind::vertex_split_reversal, StepKind::vertex_split_reversal,
      StepKind::vertex_split_reversal, StepKind::base_no_interior_edges};
  CHECK(kinds(g2) == expect_g2);
  auto expect_gt = expect_g2;
  expect_gt.back() = StepKind::base_stacked;
  CHECK(kinds(gt) == expect_gt);

  SECTION("the handle left the boundary untouched in a label-preserving build") {
    const auto W1 = walkup_complex(prefix + ";handle", 1, F0());
    const auto P1 = walkup_complex(prefix, 1, F0());
    CHECK(boundary_complex(W1, F0()) == boundary_complex(P1, F0()));
  }
}

TEST_CASE("decomposition preconditions", "[surgery]") {
  CHECK_THROWS_AS(decompose_minimal_g2(shapes::simplex_boundary(4), F0()), PreconditionFailed);
  CHECK_THROWS_AS(decompose_minimal_g2(shapes::kuhnel_mobius(), F0()), PreconditionFailed);
  // the cone over the octahedron is a ball with interior structure above the
  // minimal count, so both modes must refuse it
  const auto C = cone(shapes::octahedron(), "a");
  REQUIRE_FALSE(minimal_g2(C, F0()));
  CHECK_THROWS_AS(decompose_minimal_g2(C, F0()), PreconditionFailed);
  CHECK_THROWS_AS(decompose_minimal_g_tilde2(C, F0()), PreconditionFailed);
}

TEST_CASE("barycentric subdivision", "[surgery]") {
  CHECK(fv(barycentric_subdivision(shapes::simplex(1))) == std::vector<long long>{1, 3, 2});
  CHECK(fv(barycentric_subdivision(shapes::simplex(2))) == std::vector<long long>{1, 7, 12, 6});
  CHECK(fv(barycentric_subdivision(shapes::two_tetra_ball(), 2)) ==
        std::vector<long long>{1, 273, 1532, 2412, 1152});
  CHECK_THROWS_AS(barycentric_subdivision(shapes::simplex(2), 0), InvalidParams);

  SECTION("homology is a subdivision invariant") {
    const auto M5 = shapes::kuhnel_mobius();
    const auto sd = barycentric_subdivision(M5);
    const auto b0 = betti(M5, F0());
    const auto b1 = betti(sd, F0());
    REQUIRE(b1.top_dim == b0.top_dim);
    for (int k = -1; k <= b0.top_dim; ++k) CHECK(b1.at(k) == b0.at(k));
    CHECK(b1.alternating_sum() == b0.alternating_sum());
  }
}

TEST_CASE("interior-face handle sequences", "[surgery]") {
  const auto hs_b3 = pl_handle_sequence(shapes::two_tetra_ball(), F0());
  CHECK(hs_b3.indices == std::vector<int>{0, 0, 1});
  CHECK(hs_b3.note == "valid under PL hypothesis");

  CHECK(pl_handle_sequence(shapes::kuhnel_mobius(), F0()).indices ==
        std::vector<int>{0, 0, 0, 0, 0, 1, 1, 1, 1, 1});
  CHECK(pl_handle_sequence(shapes::simplex(3), F0()).indices == std::vector<int>{0});
  CHECK(pl_handle_sequence(shapes::annulus6(), F0()).indices ==
        std::vector<int>{0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1});
  CHECK_THROWS_AS(pl_handle_sequence(shapes::octahedron(), F0()), ClosedManifold);
}

TEST_CASE("vanishing relative invariants bound the handle indices", "[surgery]") {
  std::vector<SimplicialComplex> fixtures = {
      shapes::two_tetra_ball(), shapes::kuhnel_mobius(), shapes::annulus6(),
      walkup_complex("long_ball:4:12;sum_sphere:7;sum_sphere:7;handle", 4, F0())};
  for (const auto& K : fixtures) {
    const auto hb = h_bar_dprime(K, F0());
    const auto hs = pl_handle_sequence(K, F0());
    const int max_index = hs.indices.empty() ? -1 : hs.indices.back();
    for (std::size_t i = 0; i < hb.size(); ++i)
      if (hb[i] == 0) CHECK(max_index < static_cast<int>(i));
  }
}

TEST_CASE("stackedness matches the vanishing pattern on handle fixtures", "[surgery]") {
  // frozen relative invariant vectors for the bound fixtures
  CHECK(h_bar_dprime(shapes::two_tetra_ball(), F0()) == std::vector<long long>{1, 1, 0, 0});
  CHECK(h_bar_dprime(shapes::kuhnel_mobius(), F0()) == std::vector<long long>{1, 2, 0});
  CHECK(h_bar_dprime(shapes::annulus6(), F0()) == std::vector<long long>{1, 3, 0});
  const auto W = walkup_complex("long_ball:4:12;sum_sphere:7;sum_sphere:7;handle", 4, F0());
  CHECK(h_bar_dprime(W, F0()) == std::vector<long long>{1, 13, 6, 2});

  for (const auto& K : {shapes::two_tetra_ball(), W}) {
    const auto hb = h_bar_dprime(K, F0());
    const int d = K.dim() + 1;
    for (int i = 1; i <= d - 1; ++i)
      CHECK((hb[static_cast<std::size_t>(i)] == 0) == is_i_stacked(K, i - 1, F0()));
  }
}

TEST_CASE("seeded stacked generators", "[surgery]") {
  SECTION("stacked spheres carry the linear h-vector") {
    for (std::uint64_t s : {1, 2, 3}) {
      const auto S = stacked_sphere(4, 7, s);
      CHECK(h_vector(S) == std::vector<long long>{1, 3, 3, 3, 1});
      CHECK(classify(S, F0()).status == ManifoldStatus::sphere);
      CHECK(S == stacked_sphere(4, 7, s));  // same seed, same complex
    }
  }
  SECTION("stacked balls are one-stacked with concentrated h-vector") {
    const auto B = stacked_ball(4, 6, 1);
    CHECK(B.num_vertices() == 9);
    CHECK(h_vector(B) == std::vector<long long>{1, 5, 0, 0, 0});
    CHECK(classify(B, F0()).status == ManifoldStatus::ball);
    CHECK(is_i_stacked(B, 1, F0()));
    CHECK(B == stacked_ball(4, 6, 1));
  }
  SECTION("path generators agree with the basic shapes at minimal size") {
    CHECK(long_stacked_sphere(4, 5) == shapes::simplex_boundary(4));
    CHECK(long_stacked_ball(4, 1) == shapes::simplex(3));
    CHECK(long_stacked_ball(4, 2) == shapes::two_tetra_ball());
  }
  SECTION("parameter validation") {
    CHECK_THROWS_AS(stacked_sphere(1, 5, 0), InvalidParams);
    CHECK_THROWS_AS(stacked_sphere(4, 3, 0), InvalidParams);
    CHECK_THROWS_AS(stacked_ball(4, 0, 0), InvalidParams);
    CHECK_THROWS_AS(long_stacked_sphere(4, 4), InvalidParams);
    CHECK_THROWS_AS(long_stacked_ball(4, 0), InvalidParams);
  }
}

TEST_CASE("seeded build scripts", "[surgery]") {
  SECTION("script validation") {
    CHECK_THROWS_AS(walkup_complex("", 0, F0()), InvalidParams);
    CHECK_THROWS_AS(walkup_complex("handle", 0, F0()), InvalidParams);
    CHECK_THROWS_AS(walkup_complex("ball:4", 0, F0()), InvalidParams);
    CHECK_THROWS_AS(walkup_complex("ball:x:3", 0, F0()), InvalidParams);
    CHECK_THROWS_AS(walkup_complex("ball:4:3;twist", 0, F0()), InvalidParams);
  }
  SECTION("deterministic replay") {
    const std::string s = "ball:4:5;sum_sphere:6;sum_simplex";
    CHECK(walkup_complex(s, 9, F0()) == walkup_complex(s, 9, F0()));
  }
  SECTION("handles need room: the short path sphere admits none") {
    CHECK_THROWS_AS(walkup_complex("long_sphere:4:12;handle", 1, F0()), DistanceTooSmall);
    CHECK_THROWS_AS(walkup_complex("long_sphere:4:12;handle", 1, F0(), false),
                    DistanceTooSmall);
    // one notch longer, the only admissible identification reverses parity
    CHECK_THROWS_AS(walkup_complex("long_sphere:4:13;handle", 1, F0()), DistanceTooSmall);
    const auto N = walkup_complex("long_sphere:4:13;handle", 1, F0(), false);
    const auto rn = classify(N, F0());
    CHECK(rn.status == ManifoldStatus::closed_manifold);
    CHECK_FALSE(rn.orientable);
    CHECK(rn.betti_table.at(1) == 1);
  }
  SECTION("orientable handles over long path spheres") {
    for (const std::string s : {"long_sphere:4:14;handle", "long_sphere:5:20;handle"}) {
      const auto W = walkup_complex(s, 1, F0());
      const auto rep = classify(W, F0());
      CHECK(rep.status == ManifoldStatus::closed_manifold);
      CHECK(rep.connected);
      CHECK(rep.orientable);
      CHECK(rep.betti_table.at(1) == 1);
    }
  }
  SECTION("the five-vertex Moebius generator matches the fixed shape") {
    CHECK(kuhnel_d3_mobius() == shapes::kuhnel_mobius());
    CHECK(fv(kuhnel_d3_mobius()) == std::vector<long long>{1, 5, 10, 5});
  }
}
