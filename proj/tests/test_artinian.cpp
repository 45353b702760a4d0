#include <catch2/catch_amalgamated.hpp>

#include "facelab/artinian.hpp"
#include "facelab/enumerative.hpp"
#include "facelab/shapes.hpp"

using namespace facelab;

namespace {
const Gf kP(FieldSpec{32003, 1});
const Gf kB(FieldSpec{2, 16});

using LL = std::vector<long long>;

std::vector<std::vector<std::uint32_t>> zero_forms(int d, int n) {
  return std::vector<std::vector<std::uint32_t>>(static_cast<std::size_t>(d),
                                                 std::vector<std::uint32_t>(n, 0));
}
}  // namespace

TEST_CASE("graded quotient of the four-sphere boundary", "[artinian]") {
  GradedQuotient q(shapes::simplex_boundary(4), kP);
  CHECK(q.lsop_valid());
  CHECK(q.top_degree() == 4);
  CHECK(q.hilbert() == LL{1, 1, 1, 1, 1});
  CHECK(q.socle_dims() == LL{0, 0, 0, 0, 1});
  CHECK(q.socle_free_dims() == LL{1, 1, 1, 1, 1});
}

TEST_CASE("graded quotient of the completed annulus", "[artinian]") {
  const auto hat = completion(shapes::annulus6(), kP).complex;
  GradedQuotient q(hat, kP);
  CHECK(q.hilbert() == LL{1, 4, 7, 1});
  CHECK(q.socle_dims() == LL{0, 0, 3, 1});
  CHECK(q.socle_free_dims() == LL{1, 4, 4, 1});
}

TEST_CASE("graded quotient of the completed Moebius band in char 2", "[artinian]") {
  const auto hat = completion(shapes::kuhnel_mobius(), kB).complex;
  GradedQuotient q(hat, kB);
  CHECK(q.hilbert() == LL{1, 3, 6, 1});
  CHECK(q.socle_dims() == LL{0, 0, 3, 1});
  CHECK(q.socle_free_dims() == LL{1, 3, 3, 1});
}

TEST_CASE("graded quotient of the completed two-tetra ball", "[artinian]") {
  const auto hat = completion(shapes::two_tetra_ball(), kP).complex;
  GradedQuotient q(hat, kP);
  CHECK(q.hilbert() == LL{1, 2, 2, 2, 1});
  CHECK(q.socle_dims() == LL{0, 0, 0, 0, 1});
}

TEST_CASE("oracle agrees with closed formulas across seeds", "[artinian]") {
  struct Case {
    SimplicialComplex base;
    const Gf* F;
  };
  const std::vector<Case> cases = {{shapes::annulus6(), &kP},
                                   {shapes::two_tetra_ball(), &kP},
                                   {shapes::kuhnel_mobius(), &kB}};
  for (const auto& c : cases) {
    const auto comp = completion(c.base, *c.F);
    const auto hpp_formula = h_dprime_completion(c.base, *c.F);
    const auto soc_formula = socle_dims_formula(c.base, *c.F);
    const auto hp_formula =
        h_prime(comp.complex, *c.F, HPrimeProfile::one_singular, comp.cone_vertex);
    for (unsigned long long seed : {1ull, 7ull, 12345ull}) {
      GradedQuotient q(comp.complex, *c.F, ArtinianOptions{seed, 8});
      const int d = q.top_degree();
      // Hilbert function of the reduction = structural h-prime.
      CHECK(LL(q.hilbert()) == hp_formula);
      // Socle dimensions below the top degree match the Betti formula.
      for (int j = 0; j < d; ++j)
        CHECK(q.socle_dims()[static_cast<std::size_t>(j)] ==
              soc_formula[static_cast<std::size_t>(j)]);
      // Socle-free dimensions match the completion h-double-prime formula.
      CHECK(q.socle_free_dims() == hpp_formula);
    }
  }
}

TEST_CASE("closed manifolds are their own completion for the oracle", "[artinian]") {
  const auto m5hat = completion(shapes::kuhnel_mobius(), kB).complex;
  GradedQuotient q(m5hat, kB, ArtinianOptions{42, 8});
  CHECK(LL(q.hilbert()) == h_prime(m5hat, kB, HPrimeProfile::manifold));
  CHECK(q.socle_free_dims() == h_dprime_completion(m5hat, kB));
}

TEST_CASE("hilbert functions are M-vectors", "[artinian]") {
  for (const auto& K :
       {shapes::octahedron(), shapes::simplex_boundary(4), shapes::simplex(3),
        completion(shapes::annulus6(), kP).complex,
        completion(shapes::two_tetra_ball(), kP).complex}) {
    GradedQuotient q(K, kP);
    CHECK(is_M_vector(q.hilbert()));
  }
}

TEST_CASE("seed determinism and attempt accounting", "[artinian]") {
  GradedQuotient a(shapes::octahedron(), kP, ArtinianOptions{5, 8});
  GradedQuotient b(shapes::octahedron(), kP, ArtinianOptions{5, 8});
  CHECK(a.seed_used() == b.seed_used());
  CHECK(a.hilbert() == b.hilbert());
  CHECK(a.theta() == b.theta());
  GradedQuotient c(shapes::octahedron(), kP, ArtinianOptions{99, 8});
  CHECK(a.hilbert() == c.hilbert());  // generic quantities do not depend on the draw
  CHECK(a.socle_dims() == c.socle_dims());
}

TEST_CASE("degenerate linear systems are rejected", "[artinian]") {
  const auto oct = shapes::octahedron();
  CHECK_FALSE(lsop_validate(oct, kP, zero_forms(3, 6)));
  // Rank-deficient: one form short of a full system.
  auto forms = zero_forms(3, 6);
  std::mt19937_64 rng(2);
  for (int t = 0; t < 2; ++t)
    for (auto& v : forms[static_cast<std::size_t>(t)]) v = kP.sample(rng);
  CHECK_FALSE(lsop_validate(oct, kP, forms));
  // A full random draw works.
  for (auto& v : forms[2]) v = kP.sample(rng);
  CHECK(lsop_validate(oct, kP, forms));
  // Data access on an invalid quotient is refused.
  GradedQuotient bad(oct, kP, zero_forms(3, 6));
  CHECK_FALSE(bad.lsop_valid());
  CHECK_THROWS_AS(bad.hilbert(), std::logic_error);
}

TEST_CASE("small fields and empty complexes are rejected", "[artinian]") {
  CHECK_THROWS_AS(GradedQuotient(shapes::octahedron(), Gf(FieldSpec{2, 8})), FieldTooSmall);
  CHECK_THROWS_AS(GradedQuotient(shapes::octahedron(), Gf(FieldSpec{101, 1})), FieldTooSmall);
  CHECK_THROWS_AS(GradedQuotient(SimplicialComplex::empty_face_only(), kP), EmptyInput);
}

TEST_CASE("level and Gorenstein recognition", "[artinian]") {
  SECTION("spheres") {
    const auto rep = gorenstein_check(shapes::octahedron(), kP);
    CHECK(rep.hilbert == LL{1, 3, 3, 1});
    CHECK(rep.top_degree == 3);
    CHECK(rep.symmetric);
    CHECK(rep.level);
    CHECK(rep.gorenstein);
    const auto hat = completion(shapes::two_tetra_ball(), kP).complex;
    CHECK(gorenstein_check(hat, kP).gorenstein);
  }
  SECTION("closed orientable manifold: socle-free quotient is Gorenstein") {
    const auto m5hat = completion(shapes::kuhnel_mobius(), kB).complex;
    const auto rep = gorenstein_check(m5hat, kB);
    CHECK(rep.socle_free == LL{1, 3, 3, 1});
    CHECK(rep.socle_free_socle == LL{0, 0, 0, 1});
    CHECK(rep.symmetric);
    CHECK(rep.gorenstein);
  }
  SECTION("completion with one singular vertex") {
    const auto hat = completion(shapes::annulus6(), kP).complex;
    const auto rep = gorenstein_check(hat, kP);
    CHECK(rep.socle_free == LL{1, 4, 4, 1});
    CHECK(rep.symmetric);
    CHECK(rep.gorenstein);
  }
}

TEST_CASE("weak Lefschetz middle maps for spheres and balls", "[artinian]") {
  CHECK(wlp_check(shapes::octahedron(), kP).full_rank_middle);
  CHECK(wlp_check(shapes::simplex_boundary(4), kP).full_rank_middle);
  CHECK(wlp_check(shapes::simplex_boundary(4), kB).full_rank_middle);
  CHECK(wlp_check(completion(shapes::two_tetra_ball(), kP).complex, kP).full_rank_middle);
  CHECK(wlp_check(shapes::two_tetra_ball(), kP).full_rank_middle);
  CHECK_THROWS_AS(wlp_check(shapes::kuhnel_mobius(), kB), PreconditionFailed);
}

TEST_CASE("generic linear-form rank ranges on the socle-free quotient", "[artinian]") {
  SECTION("stacked sphere from the ball completion, binding at facet size 4") {
    const auto rep = lefschetz_maps_check(shapes::two_tetra_ball(), kP, false);
    CHECK_FALSE(rep.informational);
    CHECK(rep.pass);
    CHECK(rep.socle_free_dims == LL{1, 2, 2, 2, 1});
    REQUIRE(rep.entries.size() == 4);
    CHECK(rep.entries[0].rank == 1);
    CHECK(rep.entries[1].rank == 2);
    CHECK(rep.entries[3].rank == 1);
    const auto strong = lefschetz_maps_check(shapes::two_tetra_ball(), kP, true);
    CHECK(strong.pass);
  }
  SECTION("low facet size is informational") {
    const auto rep = lefschetz_maps_check(shapes::kuhnel_mobius(), kB, false);
    CHECK(rep.informational);
    CHECK(rep.entries.size() == 3);
    const auto rep2 = lefschetz_maps_check(shapes::annulus6(), kP, false);
    CHECK(rep2.informational);
    CHECK(rep2.socle_free_dims == LL{1, 4, 4, 1});
  }
  SECTION("preconditions") {
    CHECK_THROWS_AS(lefschetz_maps_check(shapes::kuhnel_mobius(), kP, false), NotOrientable);
    const auto necklace =
        SimplicialComplex::from_facets({{"1", "2", "3"}, {"3", "4", "5"}, {"1", "5", "6"}});
    CHECK_THROWS_AS(lefschetz_maps_check(necklace, kP, false), NotAManifold);
  }
}
