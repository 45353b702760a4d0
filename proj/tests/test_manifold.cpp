#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "facelab/manifold.hpp"
#include "facelab/shapes.hpp"

using namespace facelab;

namespace {
const Gf& F0() {
  static Gf f(FieldSpec{32003, 1});
  return f;
}
const Gf& F2() {
  static Gf f(FieldSpec{2, 16});
  return f;
}
}  // namespace

TEST_CASE("sphere and ball recognition", "[manifold]") {
  auto s2 = classify(shapes::simplex_boundary(3), F0());
  CHECK(s2.status == ManifoldStatus::sphere);
  CHECK(s2.connected);
  CHECK(s2.orientable);
  CHECK(s2.boundary.is_void());

  auto b3 = classify(shapes::two_tetra_ball(), F0());
  CHECK(b3.status == ManifoldStatus::ball);
  CHECK(b3.orientable);
  CHECK(b3.boundary.f_vector() == std::vector<long long>{1, 5, 9, 6});

  auto oct = classify(shapes::octahedron(), F0());
  CHECK(oct.status == ManifoldStatus::sphere);
}

TEST_CASE("Moebius band classification", "[manifold]") {
  auto M5 = shapes::kuhnel_mobius();
  auto rep0 = classify(M5, F0());
  CHECK(rep0.status == ManifoldStatus::manifold_with_boundary);
  CHECK_FALSE(rep0.orientable);
  auto rep2 = classify(M5, F2());
  CHECK(rep2.status == ManifoldStatus::manifold_with_boundary);
  CHECK(rep2.orientable);

  // Boundary is the pentagon on chords {i, i+2}.
  auto bd = boundary_complex(M5, F0());
  std::set<TokenFace> expect{{"1", "3"}, {"2", "4"}, {"3", "5"}, {"1", "4"}, {"2", "5"}};
  std::set<TokenFace> got;
  for (const auto& f : bd.facets()) got.insert(bd.tokens_of(f));
  CHECK(got == expect);

  CHECK(is_orientable(M5, F2()));
  CHECK_FALSE(is_orientable(M5, F0()));
}

TEST_CASE("defective complexes", "[manifold]") {
  auto wedge = SimplicialComplex::from_facets({{"1", "2", "3"}, {"3", "4", "5"}});
  CHECK(classify(wedge, F0()).status == ManifoldStatus::not_manifold);
  auto impure = SimplicialComplex::from_facets({{"1", "2", "3"}, {"4", "5"}});
  CHECK(classify(impure, F0()).status == ManifoldStatus::not_pure);
  CHECK_THROWS_AS(boundary_complex(wedge, F0()), NotAManifold);
  auto disc = classify(SimplicialComplex::from_facets({{"1", "2"}, {"3", "4"}}), F0());
  CHECK(disc.status == ManifoldStatus::manifold_with_boundary);
  CHECK_FALSE(disc.connected);
  CHECK_THROWS_AS(is_orientable(SimplicialComplex::from_facets({{"1", "2"}, {"3", "4"}}), F0()),
                  NotConnected);
}

TEST_CASE("completion construction", "[manifold]") {
  auto M5 = shapes::kuhnel_mobius();
  auto comp = completion(M5, F2());
  REQUIRE(comp.cone_vertex.has_value());
  CHECK(*comp.cone_vertex == "@v0");
  CHECK(comp.complex.f_vector() == std::vector<long long>{1, 6, 15, 10});
  // The completed Moebius band is the 6-vertex projective plane: an honest
  // closed surface, so no vertex is singular.
  CHECK(singular_vertices(comp.complex, F2()).empty());
  CHECK(classify(comp.complex, F2()).status == ManifoldStatus::closed_manifold);
  CHECK(classify(comp.complex, F2()).orientable);
  CHECK_FALSE(classify(comp.complex, F0()).orientable);

  auto a6 = shapes::annulus6();
  auto ca = completion(a6, F0());
  CHECK(ca.complex.f_vector() == std::vector<long long>{1, 7, 18, 12});
  CHECK(classify(ca.complex, F0()).status == ManifoldStatus::not_manifold);
  CHECK(singular_vertices(ca.complex, F0()) == std::vector<std::string>{"@v0"});

  // Closed inputs complete to themselves.
  auto sp = completion(shapes::simplex_boundary(4), F0());
  CHECK_FALSE(sp.cone_vertex.has_value());
  CHECK(sp.complex == shapes::simplex_boundary(4));

  // The completion of the two-tetra ball is a stacked 3-sphere.
  auto cb = completion(shapes::two_tetra_ball(), F0());
  CHECK(cb.complex.f_vector() == std::vector<long long>{1, 6, 14, 16, 8});
  CHECK(classify(cb.complex, F0()).status == ManifoldStatus::sphere);
  CHECK(singular_vertices(cb.complex, F0()).empty());

  // Fresh-token extension when "@v0" is taken.
  auto tricky = SimplicialComplex::from_facets({{"@v0", "a"}, {"a", "b"}});
  auto ct = completion(tricky, F0());
  REQUIRE(ct.cone_vertex.has_value());
  CHECK(*ct.cone_vertex == "@v00");
}

TEST_CASE("completion face counts add shifted boundary counts", "[manifold]") {
  for (const auto& K : {shapes::kuhnel_mobius(), shapes::annulus6(), shapes::two_tetra_ball()}) {
    auto comp = completion(K, F2());
    const auto f = K.f_vector(), fb = comp.boundary.f_vector(), fc = comp.complex.f_vector();
    REQUIRE(fc.size() == f.size());
    for (std::size_t i = 1; i < fc.size(); ++i)
      CHECK(fc[i] == f[i] + fb[i - 1]);
    CHECK(reduced_euler(comp.boundary) == reduced_euler(K) - reduced_euler(comp.complex));
  }
}

TEST_CASE("interior faces and relative face counts", "[manifold]") {
  auto B3 = shapes::two_tetra_ball();
  const auto ifaces = interior_faces(B3, F0());
  std::set<TokenFace> got(ifaces.begin(), ifaces.end());
  std::set<TokenFace> expect{{"2", "3", "4"}, {"1", "2", "3", "4"}, {"2", "3", "4", "5"}};
  CHECK(got == expect);
  CHECK(relative_f_vector(B3, F0()) == std::vector<long long>{0, 0, 0, 1, 2});

  CHECK(relative_f_vector(shapes::kuhnel_mobius(), F2()) ==
        std::vector<long long>{0, 0, 5, 5});
  CHECK(relative_f_vector(shapes::simplex(2), F0()) == std::vector<long long>{0, 0, 0, 1});
  CHECK(relative_f_vector(shapes::simplex_boundary(3), F0()) ==
        std::vector<long long>{1, 4, 6, 4});
}

TEST_CASE("stackedness detection", "[manifold]") {
  auto B3 = shapes::two_tetra_ball();
  CHECK(is_i_stacked(B3, 1, F0()));
  CHECK_FALSE(is_i_stacked(B3, 0, F0()));
  CHECK(is_i_stacked(B3, 2, F0()));  // monotone in i
  CHECK_THROWS_AS(is_i_stacked(shapes::simplex_boundary(3), 1, F0()), ClosedManifold);
  CHECK_THROWS_AS(is_i_stacked(SimplicialComplex::from_facets({{"1", "2", "3"}, {"3", "4", "5"}}),
                               1, F0()),
                  NotAManifold);
}

TEST_CASE("boundary of a boundary is empty", "[manifold]") {
  for (const auto& K : {shapes::kuhnel_mobius(), shapes::two_tetra_ball(), shapes::annulus6()}) {
    auto bd = boundary_complex(K, F2());
    CHECK(boundary_complex(bd, F2()).is_void());
  }
}
