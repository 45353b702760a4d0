#include <catch2/catch_amalgamated.hpp>

#include "facelab/homology.hpp"
#include "facelab/manifold.hpp"
#include "facelab/shapes.hpp"

using namespace facelab;

namespace {
const Gf& F0() {  // large odd-characteristic surrogate
  static Gf f(FieldSpec{32003, 1});
  return f;
}
const Gf& F2() {
  static Gf f(FieldSpec{2, 16});
  return f;
}
std::vector<long long> degrees_0_up(const BettiTable& b) {
  std::vector<long long> v;
  for (int d = 0; d <= b.top_dim; ++d) v.push_back(b.at(d));
  return v;
}
}  // namespace

TEST_CASE("spheres and degenerate complexes", "[homology]") {
  CHECK(degrees_0_up(betti(shapes::simplex_boundary(3), F0())) ==
        std::vector<long long>{0, 0, 1});
  CHECK(degrees_0_up(betti(shapes::simplex_boundary(3), F2())) ==
        std::vector<long long>{0, 0, 1});
  CHECK(degrees_0_up(betti(shapes::simplex(3), F0())) == std::vector<long long>{0, 0, 0, 0});

  auto pt = SimplicialComplex::from_facets({{"p"}});
  CHECK(degrees_0_up(betti(pt, F0())) == std::vector<long long>{0});
  CHECK(betti(pt, F0()).at(-1) == 0);
  CHECK(betti(SimplicialComplex::empty_face_only(), F0()).at(-1) == 1);
  CHECK(betti(SimplicialComplex::void_complex(), F0()).at(-1) == 0);

  auto two_pts = SimplicialComplex::from_facets({{"a"}, {"b"}});
  CHECK(degrees_0_up(betti(two_pts, F0())) == std::vector<long long>{1});
}

TEST_CASE("Moebius band and its completion", "[homology]") {
  auto M5 = shapes::kuhnel_mobius();
  CHECK(degrees_0_up(betti(M5, F2())) == std::vector<long long>{0, 1, 0});
  CHECK(degrees_0_up(betti(M5, F0())) == std::vector<long long>{0, 1, 0});

  const auto comp = completion(M5, F2()).complex;  // 6-vertex projective plane
  CHECK(comp.f_vector() == std::vector<long long>{1, 6, 15, 10});
  CHECK(degrees_0_up(betti(comp, F0())) == std::vector<long long>{0, 0, 0});
  CHECK(degrees_0_up(betti(comp, F2())) == std::vector<long long>{0, 1, 1});
}

TEST_CASE("relative homology of pairs", "[homology]") {
  auto D2 = shapes::simplex(2);
  auto S1 = shapes::simplex_boundary(2);
  const auto rel = relative_betti(D2, S1, F0());
  CHECK(degrees_0_up(rel) == std::vector<long long>{0, 0, 1});

  auto M5 = shapes::kuhnel_mobius();
  auto bd = boundary_complex(M5, F0());
  CHECK(degrees_0_up(relative_betti(M5, bd, F0())) == std::vector<long long>{0, 0, 0});
  // Over characteristic 2 the boundary circle maps to twice the core circle,
  // so both middle and top relative groups are one-dimensional.
  CHECK(degrees_0_up(relative_betti(M5, bd, F2())) == std::vector<long long>{0, 1, 1});

  CHECK_THROWS_AS(relative_betti(D2, shapes::octahedron(), F0()), NotASubcomplex);
  // Relative to the void complex: plain reduced homology.
  CHECK(degrees_0_up(relative_betti(D2, SimplicialComplex::void_complex(), F0())) ==
        std::vector<long long>{0, 0, 0});
}

TEST_CASE("Euler characteristic equals the alternating Betti sum", "[homology]") {
  for (const auto& K :
       {shapes::kuhnel_mobius(), shapes::two_tetra_ball(), shapes::annulus6(),
        shapes::octahedron(), shapes::simplex_boundary(4), shapes::simplex(3),
        SimplicialComplex::from_facets({{"a", "b"}, {"c"}})}) {
    const auto b = betti(K, F0());
    long long alt = 0;
    for (int d = 0; d <= b.top_dim; ++d) alt += (d % 2 ? -1 : 1) * b.at(d);
    alt -= b.at(-1);
    CHECK(reduced_euler(K) == alt);
  }
  CHECK(reduced_euler(shapes::kuhnel_mobius()) == -1);
  CHECK(reduced_euler(shapes::simplex_boundary(3)) == 1);
}
