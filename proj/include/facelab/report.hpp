#pragma once

/**
 * Machine-readable reports: a versioned JSON envelope with stable key order,
 * a content digest for the input, and serializers for the analysis results.
 * Reports are deterministic except for the "timing" block, so reruns can be
 * compared byte-for-byte after stripping timings.
 */

#include <cstdint>
#include <iomanip>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "facelab/artinian.hpp"
#include "facelab/complex.hpp"
#include "facelab/enumerative.hpp"
#include "facelab/homology.hpp"
#include "facelab/manifold.hpp"
#include "facelab/surgery.hpp"

namespace facelab::report {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

/** 64-bit FNV-1a digest of a byte string, for input fingerprints. */
inline std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << std::setfill('0') << std::setw(16) << v;
  return os.str();
}

inline json to_json(const std::vector<long long>& v) { return json(v); }

inline json to_json(const BettiTable& b) {
  json j;
  j["field"] = {{"characteristic", b.field.characteristic},
                {"extension_degree", b.field.extension_degree}};
  std::vector<long long> dims;
  for (int k = 0; k <= b.top_dim; ++k) dims.push_back(b.at(k));
  j["reduced_dims"] = dims;  // degree 0 .. top dimension
  return j;
}

inline json to_json(const ManifoldReport& r) {
  json j;
  j["status"] = to_string(r.status);
  j["connected"] = r.connected;
  j["orientable"] = r.orientable;
  j["betti"] = to_json(r.betti_table);
  j["boundary_facets"] = static_cast<long long>(r.boundary.facets().size());
  return j;
}

inline json to_json(const Inequality& q) {
  json j;
  j["name"] = q.name;
  j["lhs"] = q.lhs;
  j["rhs"] = q.rhs;
  j["holds"] = q.holds;
  j["equality"] = q.equality;
  j["informational"] = q.informational;
  if (!q.consequences.empty()) {
    json cs = json::array();
    for (const auto& [name, ok] : q.consequences) cs.push_back({{"name", name}, {"holds", ok}});
    j["consequences"] = cs;
  }
  return j;
}

inline json to_json(const BoundsReport& r) {
  json j;
  json items = json::array();
  for (const auto& q : r.items) items.push_back(to_json(q));
  j["items"] = items;
  j["all_hold"] = r.all_hold;
  return j;
}

inline json to_json(const GTheoremReport& r) {
  json j;
  j["facet_size"] = r.d;
  j["informational"] = r.informational;
  json cs = json::array();
  for (const auto& c : r.checks)
    cs.push_back({{"name", c.name}, {"sequence", c.seq}, {"is_M_vector", c.is_M}});
  j["checks"] = cs;
  j["all_pass"] = r.all_pass;
  return j;
}

inline json to_json(const GorensteinReport& r) {
  json j;
  j["hilbert"] = r.hilbert;
  j["socle"] = r.socle;
  j["socle_free"] = r.socle_free;
  j["socle_free_socle"] = r.socle_free_socle;
  j["top_degree"] = r.top_degree;
  j["symmetric"] = r.symmetric;
  j["level"] = r.level;
  j["gorenstein"] = r.gorenstein;
  j["seed_used"] = r.seed_used;
  return j;
}

inline json to_json(const WlpReport& r) {
  json j;
  j["degree_from"] = r.degree_from;
  j["dim_from"] = r.dim_from;
  j["dim_to"] = r.dim_to;
  j["rank"] = r.rank;
  j["full_rank_middle"] = r.full_rank_middle;
  j["attempts"] = r.attempts;
  j["quotient_seed"] = r.quotient_seed;
  return j;
}

inline json to_json(const LefschetzReport& r) {
  json j;
  j["informational"] = r.informational;
  j["pass"] = r.pass;
  json es = json::array();
  for (const auto& e : r.entries)
    es.push_back({{"degree", e.degree},
                  {"dim_from", e.dim_from},
                  {"dim_to", e.dim_to},
                  {"rank", e.rank},
                  {"expect_injective", e.expect_injective},
                  {"expect_surjective", e.expect_surjective},
                  {"ok", e.ok}});
  j["entries"] = es;
  j["socle_free_dims"] = r.socle_free_dims;
  j["quotient_seed"] = r.quotient_seed;
  j["attempts"] = r.attempts;
  return j;
}

inline json to_json(const DecompositionStep& s) {
  json j;
  j["kind"] = to_string(s.kind);
  std::vector<std::string> w(s.witness.begin(), s.witness.end());
  j["witness"] = w;
  json ps = json::array();
  for (const auto& p : s.pieces)
    ps.push_back({{"vertices", static_cast<long long>(p.labels().size())},
                  {"facets", static_cast<long long>(p.facets().size())}});
  j["pieces"] = ps;
  return j;
}

inline json to_json(const HandleSequence& s) {
  json j;
  j["indices"] = s.indices;
  j["note"] = s.note;
  return j;
}

/** Envelope shared by every command: version, command echo, input digest. */
inline json make_envelope(const std::string& command, std::string_view input_text,
                          json config) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["tool"] = "facelab";
  j["command"] = command;
  j["input"] = {{"digest_fnv1a64", hex64(fnv1a64(input_text))},
                {"bytes", static_cast<long long>(input_text.size())}};
  j["config"] = std::move(config);
  return j;
}

}  // namespace facelab::report
