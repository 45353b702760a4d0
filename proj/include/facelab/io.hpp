#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "facelab/complex.hpp"

namespace facelab {

struct IoError : std::runtime_error {
  explicit IoError(const std::string& w) : std::runtime_error(w) {}
};

/**
 * Reads the facet-list text format: one facet per line as whitespace-separated
 * vertex tokens; '#' starts a comment; blank lines are ignored.
 */
inline SimplicialComplex read_sc(std::istream& in) {
  std::vector<TokenFace> facets;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    TokenFace face;
    std::string tok;
    while (ls >> tok) face.push_back(tok);
    if (!face.empty()) facets.push_back(std::move(face));
  }
  if (facets.empty()) throw EmptyInput("no facets in input");
  return SimplicialComplex::from_facets(facets);
}

inline SimplicialComplex read_sc_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return read_sc(in);
}

inline void write_sc(std::ostream& out, const SimplicialComplex& K) {
  for (const auto& fac : K.facets()) {
    const auto toks = K.tokens_of(fac);
    for (std::size_t i = 0; i < toks.size(); ++i) out << (i ? " " : "") << toks[i];
    out << "\n";
  }
}

inline void write_sc_file(const std::string& path, const SimplicialComplex& K) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path + "'");
  write_sc(out, K);
}

inline SimplicialComplex parse_sc(const std::string& text) {
  std::istringstream in(text);
  return read_sc(in);
}

}  // namespace facelab
