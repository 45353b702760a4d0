// facelab: exact face-number invariants of simplicial homology manifolds.
//
// Subcommands: analyze | complete | oracle | bounds | decompose | generate |
// subdivide | handles | verify-suite.  Input is the facet-list `.sc` format
// (one facet per line, whitespace-separated vertex tokens, '#' comments).
// Reports go to standard output: JSON with --json, a flat key table
// otherwise.  Exit codes: 0 success, 1 a checked verdict failed, 2 usage or
// input error.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "facelab/acceptance.hpp"
#include "facelab/artinian.hpp"
#include "facelab/complex.hpp"
#include "facelab/enumerative.hpp"
#include "facelab/homology.hpp"
#include "facelab/io.hpp"
#include "facelab/manifold.hpp"
#include "facelab/report.hpp"
#include "facelab/shapes.hpp"
#include "facelab/surgery.hpp"

namespace {

using facelab::report::json;

struct CommonOpts {
  std::string input;
  std::string output;
  std::string field = "32003";
  std::uint64_t seed = 0;
  bool json_out = false;
  bool no_timing = false;
};

facelab::FieldSpec parse_field(const std::string& text) {
  facelab::FieldSpec spec{0, 1};
  const auto colon = text.find(':');
  try {
    spec.characteristic = std::stoll(text.substr(0, colon));
    if (colon != std::string::npos)
      spec.extension_degree = std::stoi(text.substr(colon + 1));
  } catch (const std::exception&) {
    throw facelab::InvalidParams("--field expects P or P:K, got '" + text + "'");
  }
  return spec;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw facelab::IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json facets_json(const facelab::SimplicialComplex& K) {
  json out = json::array();
  for (const auto& fac : K.facets()) out.push_back(K.tokens_of(fac));
  return out;
}

json config_json(const CommonOpts& o) {
  json cfg;
  cfg["field"] = o.field;
  cfg["seed"] = o.seed;
  cfg["json"] = o.json_out;
  if (!o.output.empty()) cfg["output"] = o.output;
  return cfg;
}

void flatten(const json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items())
      flatten(v, prefix.empty() ? k : prefix + "." + k, os);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    std::size_t i = 0;
    for (const auto& v : j) flatten(v, prefix + "[" + std::to_string(i++) + "]", os);
  } else {
    os << prefix << " = " << j.dump() << "\n";
  }
}

/** Assembles the envelope, appends timing, prints, and returns the verdict. */
int emit(const std::string& command, const std::string& input_text, const CommonOpts& o,
         json config, json result, bool verdict_ok,
         std::chrono::steady_clock::time_point t0) {
  json env = facelab::report::make_envelope(command, input_text, std::move(config));
  env["result"] = std::move(result);
  if (!o.no_timing) {
    const auto secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    env["timing"] = {{"seconds", secs}};
  }
  if (o.json_out) {
    std::cout << env.dump(2) << "\n";
  } else {
    std::cout << "# facelab " << command << "\n";
    flatten(env["result"], "", std::cout);
  }
  return verdict_ok ? 0 : 1;
}

/** Writes a complex to -o, or embeds/prints it depending on the output mode. */
void deliver_complex(const facelab::SimplicialComplex& K, const CommonOpts& o, json& result) {
  if (!o.output.empty()) {
    facelab::write_sc_file(o.output, K);
    result["written_to"] = o.output;
  } else if (o.json_out) {
    result["facets"] = facets_json(K);
  }
}

int cmd_analyze(const CommonOpts& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::string text = slurp(o.input);
  const auto K = facelab::parse_sc(text);
  const facelab::Gf F(parse_field(o.field));
  const auto rep = facelab::classify(K, F);

  json result;
  result["vertices"] = static_cast<long long>(K.labels().size());
  result["facet_size"] = K.dim() + 1;
  result["f_vector"] = K.f_vector();
  result["h_vector"] = facelab::h_vector(K);
  result["classification"] = facelab::report::to_json(rep);
  result["singular_vertices"] = facelab::singular_vertices(K, F);
  result["missing_facets"] = static_cast<long long>(facelab::missing_facets(K).size());
  return emit("analyze", text, o, config_json(o), std::move(result), true, t0);
}

int cmd_complete(const CommonOpts& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::string text = slurp(o.input);
  const auto K = facelab::parse_sc(text);
  const facelab::Gf F(parse_field(o.field));
  const auto comp = facelab::completion(K, F);

  json result;
  result["cone_vertex"] = comp.cone_vertex ? json(*comp.cone_vertex) : json(nullptr);
  result["base_f_vector"] = comp.base.f_vector();
  result["completion_f_vector"] = comp.complex.f_vector();
  result["boundary_facets"] = static_cast<long long>(comp.boundary.facets().size());
  deliver_complex(comp.complex, o, result);
  if (o.output.empty() && !o.json_out) {
    facelab::write_sc(std::cout, comp.complex);
    return 0;
  }
  return emit("complete", text, o, config_json(o), std::move(result), true, t0);
}

int cmd_oracle(const CommonOpts& o, int max_attempts) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::string text = slurp(o.input);
  const auto K = facelab::parse_sc(text);
  const facelab::Gf F(parse_field(o.field));
  facelab::GradedQuotient q(K, F, facelab::ArtinianOptions{o.seed, max_attempts});

  json cfg = config_json(o);
  cfg["max_attempts"] = max_attempts;
  json result;
  result["hilbert"] = q.hilbert();
  result["socle"] = q.socle_dims();
  result["socle_free"] = q.socle_free_dims();
  result["socle_free_socle"] = q.socle_free_socle_dims();
  result["top_degree"] = q.top_degree();
  result["seed_used"] = q.seed_used();
  result["hilbert_is_M_vector"] = facelab::is_M_vector(q.hilbert());
  return emit("oracle", text, o, std::move(cfg), std::move(result), true, t0);
}

int cmd_bounds(const CommonOpts& o, bool assume_wlp) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::string text = slurp(o.input);
  const auto K = facelab::parse_sc(text);
  const facelab::Gf F(parse_field(o.field));

  json cfg = config_json(o);
  cfg["assume_wlp"] = assume_wlp;
  json result;
  bool ok = true;

  const auto kb = facelab::check_kuhnel_bounds(K, F, assume_wlp);
  result["betti_bounds"] = facelab::report::to_json(kb);
  ok = ok && kb.all_hold;

  try {
    const auto wb = facelab::check_weighted_betti(K, F);
    result["weighted_betti"] = facelab::report::to_json(wb);
    ok = ok && wb.all_hold;
  } catch (const facelab::OddDimension& e) {
    result["weighted_betti"] = {{"skipped", e.what()}};
  }

  const auto gt = facelab::check_g_theorems(K, F, assume_wlp);
  result["g_sequences"] = facelab::report::to_json(gt);
  ok = ok && gt.all_pass;

  result["all_hold"] = ok;
  return emit("bounds", text, o, std::move(cfg), std::move(result), ok, t0);
}

int cmd_decompose(const CommonOpts& o, const std::string& mode) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::string text = slurp(o.input);
  const auto K = facelab::parse_sc(text);
  const facelab::Gf F(parse_field(o.field));
  if (mode != "g2" && mode != "gtilde2")
    throw facelab::InvalidParams("--mode expects g2 or gtilde2");
  const auto steps = mode == "g2" ? facelab::decompose_minimal_g2(K, F)
                                  : facelab::decompose_minimal_g_tilde2(K, F);

  json cfg = config_json(o);
  cfg["mode"] = mode;
  json result;
  result["move_count"] = static_cast<long long>(steps.size());
  json transcript = json::array();
  for (const auto& s : steps) transcript.push_back(facelab::report::to_json(s));
  result["transcript"] = transcript;
  return emit("decompose", text, o, std::move(cfg), std::move(result), true, t0);
}

int cmd_generate(const CommonOpts& o, const std::string& kind, int dim, int vertices,
                 int facets, const std::string& script, bool allow_nonorientable) {
  const auto t0 = std::chrono::steady_clock::now();
  const facelab::Gf F(parse_field(o.field));

  std::optional<facelab::SimplicialComplex> K;
  if (kind == "simplex") K = facelab::shapes::simplex(dim);
  else if (kind == "simplex_boundary") K = facelab::shapes::simplex_boundary(dim);
  else if (kind == "moebius") K = facelab::shapes::kuhnel_mobius();
  else if (kind == "annulus") K = facelab::shapes::annulus6();
  else if (kind == "octahedron") K = facelab::shapes::octahedron();
  else if (kind == "two_tetra_ball") K = facelab::shapes::two_tetra_ball();
  else if (kind == "stacked_sphere") K = facelab::stacked_sphere(dim, vertices, o.seed);
  else if (kind == "stacked_ball") K = facelab::stacked_ball(dim, facets, o.seed);
  else if (kind == "long_stacked_sphere") K = facelab::long_stacked_sphere(dim, vertices);
  else if (kind == "long_stacked_ball") K = facelab::long_stacked_ball(dim, facets);
  else if (kind == "walkup") {
    if (script.empty()) throw facelab::InvalidParams("generate walkup needs --script");
    K = facelab::walkup_complex(script, o.seed, F, !allow_nonorientable);
  } else {
    throw facelab::InvalidParams("unknown generator kind '" + kind + "'");
  }

  json cfg = config_json(o);
  cfg["kind"] = kind;
  cfg["dim"] = dim;
  cfg["vertices"] = vertices;
  cfg["facets"] = facets;
  if (!script.empty()) cfg["script"] = script;
  json result;
  result["f_vector"] = K->f_vector();
  deliver_complex(*K, o, result);
  if (o.output.empty() && !o.json_out) {
    facelab::write_sc(std::cout, *K);
    return 0;
  }
  return emit("generate", "", o, std::move(cfg), std::move(result), true, t0);
}

int cmd_subdivide(const CommonOpts& o, int times) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::string text = slurp(o.input);
  const auto K = facelab::parse_sc(text);
  const auto sd = facelab::barycentric_subdivision(K, times);

  json cfg = config_json(o);
  cfg["times"] = times;
  json result;
  result["f_vector"] = sd.f_vector();
  deliver_complex(sd, o, result);
  if (o.output.empty() && !o.json_out) {
    facelab::write_sc(std::cout, sd);
    return 0;
  }
  return emit("subdivide", text, o, std::move(cfg), std::move(result), true, t0);
}

int cmd_handles(const CommonOpts& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::string text = slurp(o.input);
  const auto K = facelab::parse_sc(text);
  const facelab::Gf F(parse_field(o.field));
  const auto hs = facelab::pl_handle_sequence(K, F);

  json result = facelab::report::to_json(hs);
  result["max_index"] = hs.indices.empty() ? -1 : hs.indices.back();
  return emit("handles", text, o, config_json(o), std::move(result), true, t0);
}

int cmd_verify_suite(const CommonOpts& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto results = facelab::acceptance::run_all();
  bool all = true;
  json arr = json::array();
  for (const auto& r : results) {
    all = all && r.pass;
    json c;
    c["id"] = r.id;
    c["title"] = r.title;
    c["pass"] = r.pass;
    c["limit_seconds"] = r.limit_seconds;
    if (!o.no_timing) c["seconds"] = r.seconds;
    c["detail"] = r.detail;
    arr.push_back(std::move(c));
  }
  if (!o.json_out) {
    for (const auto& r : results)
      std::printf("[%s] %2d %s (%.2fs, limit %gs) — %s\n", r.pass ? "PASS" : "FAIL", r.id,
                  r.title.c_str(), r.seconds, r.limit_seconds, r.detail.c_str());
    std::printf("%s: %zu criteria\n", all ? "ALL PASS" : "FAILURES PRESENT", results.size());
    return all ? 0 : 1;
  }
  json result;
  result["criteria"] = std::move(arr);
  result["all_pass"] = all;
  return emit("verify-suite", "", o, config_json(o), std::move(result), all, t0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact face-number invariants of simplicial homology manifolds"};
  app.require_subcommand(1);

  CommonOpts o;
  int max_attempts = 8;
  bool assume_wlp = false;
  std::string mode = "g2";
  std::string kind, script;
  int dim = 3, vertices = 0, facets = 0, times = 1;
  bool allow_nonorientable = false;

  auto add_common = [&](CLI::App* sub, bool needs_input) {
    if (needs_input)
      sub->add_option("input", o.input, "facet-list .sc file")->required();
    sub->add_option("--field", o.field, "coefficient field as P or P:K")
        ->capture_default_str();
    sub->add_option("--seed", o.seed, "random seed")->capture_default_str();
    sub->add_flag("--json", o.json_out, "emit a JSON report");
    sub->add_flag("--no-timing", o.no_timing, "omit timing fields (for diffing runs)");
    sub->add_option("-o,--output", o.output, "write the resulting complex to this file");
  };

  auto* analyze = app.add_subcommand("analyze", "classify a complex and report invariants");
  add_common(analyze, true);
  auto* complete = app.add_subcommand("complete", "cone the boundary with a fresh vertex");
  add_common(complete, true);
  auto* oracle = app.add_subcommand("oracle", "exact Artinian reduction of the face ring");
  add_common(oracle, true);
  oracle->add_option("--max-attempts", max_attempts, "linear-system draws before giving up")
      ->capture_default_str();
  auto* bounds = app.add_subcommand("bounds", "Betti-number bounds and g-sequence checks");
  add_common(bounds, true);
  bounds->add_flag("--assume-wlp", assume_wlp, "treat the weak Lefschetz ranges as binding");
  auto* decompose = app.add_subcommand("decompose", "transcript down to base complexes");
  add_common(decompose, true);
  decompose->add_option("--mode", mode, "minimality notion: g2 or gtilde2")
      ->capture_default_str();
  auto* generate = app.add_subcommand("generate", "build a named family member");
  generate->add_option("kind", kind,
                       "simplex | simplex_boundary | moebius | annulus | octahedron | "
                       "two_tetra_ball | stacked_sphere | stacked_ball | "
                       "long_stacked_sphere | long_stacked_ball | walkup")
      ->required();
  add_common(generate, false);
  generate->add_option("--dim", dim, "facet size for stacked families, dimension for simplices")
      ->capture_default_str();
  generate->add_option("--vertices", vertices, "vertex count for sphere generators");
  generate->add_option("--facets", facets, "facet count for ball generators");
  generate->add_option("--script", script, "build script for the walkup kind");
  generate->add_flag("--allow-nonorientable", allow_nonorientable,
                     "accept non-orientable results of handle additions");
  auto* subdivide = app.add_subcommand("subdivide", "barycentric subdivision rounds");
  add_common(subdivide, true);
  subdivide->add_option("--times", times, "number of rounds")->capture_default_str();
  auto* handles = app.add_subcommand("handles", "interior-face handle sequence");
  add_common(handles, true);
  auto* verify = app.add_subcommand("verify-suite", "run the acceptance battery");
  add_common(verify, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(o);
    if (complete->parsed()) return cmd_complete(o);
    if (oracle->parsed()) return cmd_oracle(o, max_attempts);
    if (bounds->parsed()) return cmd_bounds(o, assume_wlp);
    if (decompose->parsed()) return cmd_decompose(o, mode);
    if (generate->parsed())
      return cmd_generate(o, kind, dim, vertices, facets, script, allow_nonorientable);
    if (subdivide->parsed()) return cmd_subdivide(o, times);
    if (handles->parsed()) return cmd_handles(o);
    if (verify->parsed()) return cmd_verify_suite(o);
  } catch (const std::exception& e) {
    std::cerr << "facelab: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
