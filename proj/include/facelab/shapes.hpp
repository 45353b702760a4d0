#pragma once

#include <string>
#include <vector>

#include "facelab/complex.hpp"

namespace facelab::shapes {

/** Full simplex on d+1 vertices labeled "1".."d+1". */
inline SimplicialComplex simplex(int d) {
  if (d < 0) throw std::invalid_argument("simplex: dimension must be >= 0");
  TokenFace f;
  for (int i = 1; i <= d + 1; ++i) f.push_back(std::to_string(i));
  return SimplicialComplex::from_facets({f});
}

/** Boundary of the d-simplex: all d-subsets of d+1 vertices. */
inline SimplicialComplex simplex_boundary(int d) {
  if (d < 1) throw std::invalid_argument("simplex_boundary: dimension must be >= 1");
  std::vector<TokenFace> facets;
  for (int skip = 1; skip <= d + 1; ++skip) {
    TokenFace f;
    for (int i = 1; i <= d + 1; ++i)
      if (i != skip) f.push_back(std::to_string(i));
    facets.push_back(std::move(f));
  }
  return SimplicialComplex::from_facets(facets);
}

/** The 5-vertex Moebius band: cyclic triangles {i, i+1, i+2} on Z/5. */
inline SimplicialComplex kuhnel_mobius() {
  std::vector<TokenFace> facets;
  for (int i = 0; i < 5; ++i) {
    auto lbl = [](int k) { return std::to_string(k % 5 + 1); };
    facets.push_back({lbl(i), lbl(i + 1), lbl(i + 2)});
  }
  return SimplicialComplex::from_facets(facets);
}

/** Two tetrahedra glued along a triangle: the smallest stacked 3-ball. */
inline SimplicialComplex two_tetra_ball() {
  return SimplicialComplex::from_facets({{"1", "2", "3", "4"}, {"2", "3", "4", "5"}});
}

/** A 6-vertex triangulated annulus with boundary cycles {1,2,3} and {4,5,6}. */
inline SimplicialComplex annulus6() {
  return SimplicialComplex::from_facets({{"1", "2", "4"},
                                         {"2", "4", "5"},
                                         {"2", "3", "5"},
                                         {"3", "5", "6"},
                                         {"1", "3", "6"},
                                         {"1", "4", "6"}});
}

/** Octahedron: triangles on {1..6} avoiding the pairs 16, 25, 34. */
inline SimplicialComplex octahedron() {
  std::vector<TokenFace> facets;
  const int opposite[7] = {0, 6, 5, 4, 3, 2, 1};
  for (int a = 1; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b)
      for (int c = b + 1; c <= 6; ++c) {
        if (opposite[a] == b || opposite[a] == c || opposite[b] == c) continue;
        facets.push_back({std::to_string(a), std::to_string(b), std::to_string(c)});
      }
  return SimplicialComplex::from_facets(facets);
}

}  // namespace facelab::shapes
