#pragma once

/**
 * Shared fixture collections for the acceptance battery and the CLI
 * verify-suite run.  Every member is reproducible: named shapes are fixed,
 * seeded members record their build script and seed, and identical calls
 * return identical complexes.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "facelab/complex.hpp"
#include "facelab/field.hpp"
#include "facelab/shapes.hpp"
#include "facelab/surgery.hpp"

namespace facelab::suite {

struct Member {
  std::string name;
  SimplicialComplex complex;
  FieldSpec field;  // field for this member's homology and oracle runs
};

inline const FieldSpec kBigPrime{32003, 1};
inline const FieldSpec kChar2{2, 16};

namespace detail {
inline const Gf& build_field() {
  static const Gf f(kBigPrime);
  return f;
}
}  // namespace detail

/**
 * The reference collection: five named complexes plus ten small seeded
 * boundary manifolds (facet sizes 4 and 5, at most twelve vertices).  The
 * five-vertex Moebius band runs over GF(2^16) where it is orientable; all
 * other members run over GF(32003).
 */
inline std::vector<Member> core_members() {
  std::vector<Member> out;
  out.push_back({"m5", shapes::kuhnel_mobius(), kChar2});
  out.push_back({"a6", shapes::annulus6(), kBigPrime});
  out.push_back({"b3", shapes::two_tetra_ball(), kBigPrime});
  out.push_back({"dd4", shapes::simplex_boundary(4), kBigPrime});
  out.push_back({"dd5", shapes::simplex_boundary(5), kBigPrime});
  struct Spec {
    const char* name;
    const char* script;
    std::uint64_t seed;
  };
  const Spec specs[] = {
      {"w01", "ball:4:5", 11},
      {"w02", "ball:4:8", 12},
      {"w03", "ball:4:5;sum_sphere:6", 13},
      {"w04", "ball:4:3;sum_simplex", 14},
      {"w05", "ball:4:4;sum_sphere:7", 15},
      {"w06", "ball:5:4", 16},
      {"w07", "ball:5:6", 17},
      {"w08", "ball:5:4;sum_sphere:7", 18},
      {"w09", "ball:5:3;sum_simplex", 19},
      {"w10", "ball:5:5;sum_sphere:8", 20},
  };
  for (const auto& s : specs)
    out.push_back({s.name, walkup_complex(s.script, s.seed, detail::build_field()), kBigPrime});
  return out;
}

/**
 * Twenty seeded boundary manifolds with facet sizes 4 and 5 mixing stacked
 * balls, sphere connected sums, and handle additions; used to exercise the
 * equivalence between vanishing relative invariants and stackedness.
 */
inline std::vector<Member> stackedness_members() {
  struct Spec {
    const char* name;
    const char* script;
    std::uint64_t seed;
  };
  const Spec specs[] = {
      {"s01", "ball:4:3", 21},
      {"s02", "ball:4:6", 22},
      {"s03", "ball:4:10", 23},
      {"s04", "ball:4:14", 24},
      {"s05", "ball:5:3", 25},
      {"s06", "ball:5:5", 26},
      {"s07", "ball:5:8", 27},
      {"s08", "ball:5:12", 28},
      {"s09", "ball:4:5;sum_sphere:6", 29},
      {"s10", "ball:4:7;sum_sphere:7;sum_simplex", 30},
      {"s11", "ball:4:4;sum_simplex;sum_simplex", 31},
      {"s12", "ball:5:4;sum_sphere:7", 32},
      {"s13", "ball:5:6;sum_simplex", 33},
      {"s14", "ball:5:5;sum_sphere:8;sum_sphere:7", 34},
      {"s15", "long_ball:4:12;sum_sphere:7;sum_sphere:7;handle", 1},
      {"s16", "long_ball:4:12;sum_sphere:7;sum_sphere:7;handle", 4},
      {"s17", "long_ball:4:12;sum_sphere:7;sum_sphere:7;handle", 8},
      {"s18", "long_ball:4:14;sum_sphere:7;sum_sphere:7;handle", 1},
      {"s19", "long_ball:5:12;sum_sphere:8;sum_sphere:8;handle", 1},
      {"s20", "long_ball:5:14;sum_sphere:8;sum_sphere:8;handle", 2},
  };
  std::vector<Member> out;
  for (const auto& s : specs)
    out.push_back({s.name, walkup_complex(s.script, s.seed, detail::build_field()), kBigPrime});
  return out;
}

struct Script {
  std::string name;
  std::string script;
  std::uint64_t seed;
};

/**
 * Ten bounded build scripts (at most four sums or handles each) whose results
 * must decompose identically under both minimality notions.
 */
inline std::vector<Script> decomposition_scripts() {
  return {
      {"base-ball", "ball:4:10", 31},
      {"one-sum", "ball:4:6;sum_sphere:6", 32},
      {"two-sums", "ball:4:8;sum_sphere:6;sum_sphere:7", 33},
      {"three-simplex-sums", "ball:4:4;sum_simplex;sum_simplex;sum_simplex", 34},
      {"d5-sum", "ball:5:5;sum_sphere:7", 35},
      {"d5-two-sums", "ball:5:4;sum_sphere:7;sum_simplex", 36},
      {"handlebody-a", "long_ball:4:12;sum_sphere:7;sum_sphere:7;handle", 1},
      {"handlebody-b", "long_ball:4:12;sum_sphere:7;sum_sphere:7;handle", 4},
      {"handlebody-c", "long_ball:4:12;sum_sphere:7;sum_sphere:7;handle", 8},
      {"d5-handlebody", "long_ball:5:12;sum_sphere:8;sum_sphere:8;handle", 1},
  };
}

}  // namespace facelab::suite
