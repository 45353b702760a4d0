#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "facelab/complex.hpp"
#include "facelab/io.hpp"
#include "facelab/shapes.hpp"

using namespace facelab;

namespace {

// Independent face counter: expands every subset of every facet into a set.
std::vector<long long> brute_f_vector(const SimplicialComplex& K) {
  std::set<Face> faces;
  for (const auto& fac : K.facets()) {
    const std::size_t n = fac.size();
    for (std::size_t mask = 1; mask < (1ull << n); ++mask) {
      Face f;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) f.push_back(fac[i]);
      faces.insert(f);
    }
  }
  std::vector<long long> f(static_cast<std::size_t>(K.dim()) + 2, 0);
  f[0] = 1;
  for (const auto& face : faces) f[face.size()] += 1;
  return f;
}

}  // namespace

TEST_CASE("construction interns tokens in natural order", "[complex]") {
  auto K = SimplicialComplex::from_facets({{"10", "2"}, {"2", "alpha"}});
  CHECK(K.labels() == std::vector<std::string>{"2", "10", "alpha"});
  CHECK(K.dim() == 1);
  CHECK(K.num_vertices() == 3);
}

TEST_CASE("subsumed and duplicate facets are pruned", "[complex]") {
  auto K = SimplicialComplex::from_facets({{"1", "2"}, {"1", "2", "3"}, {"3", "2", "1"}});
  REQUIRE(K.facets().size() == 1);
  CHECK(K.tokens_of(K.facets()[0]) == TokenFace{"1", "2", "3"});
}

TEST_CASE("input validation", "[complex]") {
  CHECK_THROWS_AS(SimplicialComplex::from_facets({}), EmptyInput);
  CHECK_THROWS_AS(SimplicialComplex::from_facets({{}}), EmptyInput);
  CHECK_THROWS_AS(SimplicialComplex::from_facets({{"a b"}}), MalformedToken);
  CHECK_THROWS_AS(SimplicialComplex::from_facets({{""}}), MalformedToken);
}

TEST_CASE("f-vectors of reference complexes", "[complex]") {
  CHECK(shapes::kuhnel_mobius().f_vector() == std::vector<long long>{1, 5, 10, 5});
  CHECK(shapes::two_tetra_ball().f_vector() == std::vector<long long>{1, 5, 9, 7, 2});
  CHECK(shapes::simplex_boundary(3).f_vector() == std::vector<long long>{1, 4, 6, 4});
  CHECK(shapes::simplex_boundary(4).f_vector() == std::vector<long long>{1, 5, 10, 10, 5});
  CHECK(shapes::annulus6().f_vector() == std::vector<long long>{1, 6, 12, 6});
  CHECK(shapes::octahedron().f_vector() == std::vector<long long>{1, 6, 12, 8});
  CHECK(shapes::simplex(3).f_vector() == std::vector<long long>{1, 4, 6, 4, 1});
}

TEST_CASE("f-vector agrees with brute-force subset expansion", "[complex]") {
  for (const auto& K : {shapes::kuhnel_mobius(), shapes::two_tetra_ball(), shapes::annulus6(),
                        shapes::octahedron(), shapes::simplex_boundary(4)})
    CHECK(K.f_vector() == brute_f_vector(K));
}

TEST_CASE("downward closure and idempotence", "[complex]") {
  auto K = shapes::two_tetra_ball();
  for (const auto& fac : K.facets()) {
    const std::size_t n = fac.size();
    for (std::size_t mask = 1; mask < (1ull << n); ++mask) {
      Face f;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) f.push_back(fac[i]);
      CHECK(K.contains(f));
    }
  }
  std::vector<TokenFace> toks;
  for (const auto& fac : K.facets()) toks.push_back(K.tokens_of(fac));
  CHECK(SimplicialComplex::from_facets(toks) == K);
}

TEST_CASE("link of an edge in the Moebius band", "[complex]") {
  auto M5 = shapes::kuhnel_mobius();
  auto L = link(M5, {"1", "3"});
  REQUIRE(L.num_vertices() == 1);
  CHECK(L.labels()[0] == "2");
  auto Lv = link(M5, {"3"});
  CHECK(Lv.f_vector() == std::vector<long long>{1, 4, 3});  // path 1-2-4-5
  CHECK(link(M5, {"1", "2", "3"}).is_empty_face_only());
  CHECK_THROWS_AS(link(M5, {"1", "4", "9"}), FaceNotInComplex);
}

TEST_CASE("star and costar partition the facets", "[complex]") {
  auto K = shapes::two_tetra_ball();
  auto st = star(K, {"1"});
  auto co = costar(K, {"1"});
  CHECK(st.f_vector() == std::vector<long long>{1, 4, 6, 4, 1});
  CHECK(co.f_vector() == std::vector<long long>{1, 4, 6, 4, 1});
  // Every face lies in the star or the costar.
  for (int card = 1; card <= K.dim() + 1; ++card)
    for (const auto& f : K.faces_of_card(card)) {
      const auto tf = K.tokens_of(f);
      auto in = [&](const SimplicialComplex& S) {
        auto sf = S.face_of_tokens(tf);
        return sf && S.contains(*sf);
      };
      CHECK((in(st) || in(co)));
    }
}

TEST_CASE("cone obeys the face-count recursion", "[complex]") {
  auto M5 = shapes::kuhnel_mobius();
  auto C = cone(M5, "apex");
  const auto f = M5.f_vector(), g = C.f_vector();
  REQUIRE(g.size() == f.size() + 1);
  for (std::size_t i = 1; i < g.size(); ++i)
    CHECK(g[i] == (i < f.size() ? f[i] : 0) + f[i - 1]);
  CHECK_THROWS_AS(cone(M5, "3"), ApexCollision);
}

TEST_CASE("neighborliness", "[complex]") {
  CHECK(is_j_neighborly(shapes::kuhnel_mobius(), 2));
  CHECK_FALSE(is_j_neighborly(shapes::kuhnel_mobius(), 3));
  CHECK(is_j_neighborly(shapes::simplex_boundary(4), 4));
  CHECK_FALSE(is_j_neighborly(shapes::simplex_boundary(4), 5));
  CHECK_FALSE(is_j_neighborly(shapes::octahedron(), 2));
}

TEST_CASE("text format round trip", "[io]") {
  const std::string text = "# sample\n1 2 3\n\n2 3 4  # trailing comment\n";
  auto K = parse_sc(text);
  CHECK(K.f_vector() == std::vector<long long>{1, 4, 5, 2});
  std::ostringstream out;
  write_sc(out, K);
  CHECK(parse_sc(out.str()) == K);
  CHECK_THROWS_AS(parse_sc("# only comments\n"), EmptyInput);
}

TEST_CASE("relabeling and fresh tokens", "[complex]") {
  auto K = shapes::two_tetra_ball();
  auto R = relabel_vertices(K, {{"5", "9"}});
  CHECK(R.id_of("9").has_value());
  CHECK_FALSE(R.id_of("5").has_value());
  CHECK(R.f_vector() == K.f_vector());
  CHECK(fresh_token(K, "@v0") == "@v0");
  auto W = SimplicialComplex::from_facets({{"@v0", "x"}});
  CHECK(fresh_token(W, "@v0") == "@v00");
}
