#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "flipforge/errors.h"
#include "flipforge/flips.h"
#include "flipforge/graphs.h"
#include "flipforge/heawood.h"
#include "flipforge/json_io.h"
#include "flipforge/phi.h"
#include "flipforge/signing.h"
#include "flipforge/svg.h"
#include "flipforge/words.h"

using namespace flipforge;

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::size_t max_states = kDefaultMaxStates;
  std::string format = "json";
  std::string output;
};

// Size caps, overridable through FLIPFORGE_MAX_N.
int size_cap(int fallback) {
  if (const char* env = std::getenv("FLIPFORGE_MAX_N")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw DomainError("FLIPFORGE_MAX_N must be an integer");
    }
  }
  return fallback;
}

void emit(const Options& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
  } else {
    write_file(opt.output, text);
  }
}

void emit_json(const Options& opt, const json& j) { emit(opt, j.dump() + "\n"); }

void emit_doc(const Options& opt, const TriangulationDoc& doc, const std::string& title = "") {
  if (opt.format == "svg") {
    emit(opt, render_svg({Panel{doc.triangulation, doc.colors, doc.signs, title}}));
  } else {
    emit_json(opt, to_json(doc));
  }
}

TriangulationDoc load_triangulation(const std::string& path) {
  return triangulation_from_json(parse_json(read_file(path)));
}

WordStyle style_for(int n) { return n <= 9 ? WordStyle::Digits : WordStyle::Commas; }

Permutation parse_permutation(const std::string& text) {
  Permutation p = parse_word(text).word;
  if (!is_permutation(p)) throw DomainError("\"" + text + "\" is not a permutation");
  return p;
}

json signs_json(const Coloring& c) { return c.values(); }

json diagonals_with_signs(const DiagonalSigning& ds) {
  json out = json::array();
  for (const auto& [d, s] : ds.signs) out.push_back({d.lo, d.hi, s});
  return out;
}

json graph_json(const CombGraph& g) {
  json edges = json::array();
  for (std::size_t v = 0; v < g.adjacency.size(); ++v) {
    for (int u : g.adjacency[v]) {
      if (static_cast<std::size_t>(u) > v) edges.push_back({v, u});
    }
  }
  return json{{"kind", to_string(g.kind)},
              {"vertices", g.keys},
              {"edges", edges},
              {"vertex_count", g.vertex_count()},
              {"edge_count", g.edge_count()},
              {"connected", g.connected()}};
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

json run_suite(const std::string& suite, int n, const Options& opt) {
  const auto start = std::chrono::steady_clock::now();
  json report{{"suite", suite}, {"n", n}};
  bool pass = true;
  if (suite == "ref1") {
    const Ref1Report r = verify_ref1(n, opt.threads, size_cap(7));
    pass = r.ok();
    json missing = json::array();
    for (auto [a, b] : r.missing) missing.push_back({a, b});
    report["triangulations"] = r.triangulations;
    report["signed_states"] = r.signed_states;
    report["components"] = r.components;
    report["conflicts"] = r.conflicts;
    report["missing"] = missing;
  } else if (suite == "fibers") {
    const FiberReport r = fiber_audit(n, size_cap(7));
    pass = r.ok();
    report["permutations"] = r.permutations;
    report["classes"] = r.classes;
    report["expected_classes"] = r.expected_classes;
    report["mismatched_fibers"] = r.mismatched_fibers;
    const MorphismReport m = phi_morphism_check(n, size_cap(7));
    pass = pass && m.ok();
    report["cayley_edges"] = m.edges;
    report["contracted"] = m.contracted;
    report["mapped"] = m.mapped;
    report["morphism_violations"] = m.violations + m.criterion_mismatches;
  } else if (suite == "homogeneous") {
    // Every triangulation with every coloring over at most three colors.
    const int cap = size_cap(6);
    if (n > cap) throw DomainError("homogeneous suite: n exceeds the limit " + std::to_string(cap));
    std::size_t checked = 0;
    json failures = json::array();
    const auto all = enumerate_triangulations(n, cap);
    Word w(n, 1);
    for (;;) {
      for (const Triangulation& t : all) {
        const HomogeneousReport r = homogeneous_components(t, Coloring(w));
        ++checked;
        if (!r.ok() && failures.size() < 20) {
          failures.push_back({{"triangulation", to_json(t)}, {"colors", w}, {"reachable", r.reachable},
                              {"product", r.product}});
        }
        pass = pass && r.ok();
      }
      int i = n - 1;
      while (i >= 0 && w[i] == 3) w[i--] = 1;
      if (i < 0) break;
      ++w[i];
    }
    report["colored_triangulations"] = checked;
    report["failures"] = failures;
  } else if (suite == "switched" || suite == "diagram") {
    json rows = json::array();
    for (const auto& mu : compositions(n)) {
      json row{{"mu", mu}};
      if (suite == "switched") {
        const SwitchedReport r = switched_graph(mu, size_cap(8));
        row["vertices"] = r.graph.vertex_count();
        row["edges"] = r.graph.edge_count();
        row["connected"] = r.connected;
        row["morphism_violations"] = r.morphism_violations;
        row["onto"] = r.onto;
        pass = pass && r.ok();
      } else {
        const DiagramReport r = commuting_diagram_check(mu, size_cap(7));
        row["words"] = r.words;
        row["square_violations"] = r.square_violations;
        row["insertion_mismatches"] = r.insertion_mismatches;
        row["std_edge_violations"] = r.std_edge_violations;
        row["phi_edge_violations"] = r.phi_edge_violations;
        pass = pass && r.ok();
      }
      rows.push_back(row);
    }
    report["compositions"] = rows;
  } else if (suite == "all") {
    json parts = json::array();
    for (const char* s : {"ref1", "fibers", "homogeneous", "switched", "diagram"}) {
      json part = run_suite(s, n, opt);
      pass = pass && part["pass"].get<bool>();
      parts.push_back(part);
    }
    report["suites"] = parts;
  } else {
    throw DomainError("unknown suite " + suite);
  }
  report["pass"] = pass;
  report["seconds"] = seconds_since(start);
  return report;
}

std::string format_signed(const SignedWord& w) { return format_word(w, WordStyle::Commas); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polygon triangulations, sylvester classes, signed flips and Heawood signings"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--threads", opt.threads, "Worker threads for exhaustive checks")->check(CLI::PositiveNumber);
  app.add_option("--max-states", opt.max_states, "State cap for signed searches");
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "svg"}));
  app.add_option("-o,--output", opt.output, "Write output to FILE");

  std::string word_arg, file_arg, second_arg, mu_arg, d_arg, mode = "plain", kind, suite;
  std::string north_file, south_file, cert_file;
  int n_arg = 0;

  auto* phi_cmd = app.add_subcommand("phi", "Triangulation of a permutation");
  phi_cmd->add_option("perm", word_arg)->required();
  auto* readings_cmd = app.add_subcommand("readings", "All readings of a triangulation");
  readings_cmd->add_option("file", file_arg)->required();
  auto* canonical_cmd = app.add_subcommand("canonical", "Greatest reading of a triangulation");
  canonical_cmd->add_option("file", file_arg)->required();
  auto* bigphi_cmd = app.add_subcommand("bigphi", "Simple colored triangulation of a word");
  bigphi_cmd->add_option("word", word_arg)->required();
  auto* trace_cmd = app.add_subcommand("insert-trace", "Insertion states of a word, one per line");
  trace_cmd->add_option("word", word_arg)->required();
  auto* std_cmd = app.add_subcommand("std", "Standardization of a word");
  std_cmd->add_option("word", word_arg)->required();
  auto* dstd_cmd = app.add_subcommand("dstd", "Destandardization of a permutation");
  dstd_cmd->add_option("perm", word_arg)->required();
  dstd_cmd->add_option("--mu", mu_arg, "Evaluation, e.g. 2,3,2,1")->required();
  auto* class_cmd = app.add_subcommand("class", "Sylvester class of a word");
  class_cmd->add_option("word", word_arg)->required();
  auto* flip_cmd = app.add_subcommand("flip", "Flip one diagonal (signed when the file has signs)");
  flip_cmd->add_option("file", file_arg)->required();
  flip_cmd->add_option("--d", d_arg, "Diagonal i,j")->required();
  auto* neighbors_cmd = app.add_subcommand("neighbors", "Neighbors under one kind of flip");
  neighbors_cmd->add_option("file", file_arg)->required();
  neighbors_cmd->add_option("--mode", mode)->check(CLI::IsMember({"plain", "signed", "homogeneous", "switched"}));
  auto* path_cmd = app.add_subcommand("signed-path", "Signed flip path between two triangulations");
  path_cmd->add_option("perm1", word_arg)->required();
  path_cmd->add_option("perm2", second_arg)->required();
  path_cmd->add_option("--emit-cert", cert_file, "Write a word certificate");
  auto* check_cmd = app.add_subcommand("check-cert", "Validate a word certificate");
  check_cmd->add_option("file", file_arg)->required();
  auto* spd_cmd = app.add_subcommand("sign-path-diagonals", "Diagonal signing of a flip path");
  spd_cmd->add_option("file", file_arg)->required();
  auto* glue_cmd = app.add_subcommand("glue", "Glue two triangulations into a sphere");
  glue_cmd->add_option("--north", north_file)->required();
  glue_cmd->add_option("--south", south_file)->required();
  auto* heawood_cmd = app.add_subcommand("heawood-check", "Check the mod-3 condition of a signed sphere");
  heawood_cmd->add_option("file", file_arg)->required();
  auto* color_cmd = app.add_subcommand("four-color", "Proper four coloring of a sphere");
  color_cmd->add_option("file", file_arg)->required();
  auto* graph_cmd = app.add_subcommand("graph", "Build a combinatorial graph");
  graph_cmd->add_option("--kind", kind)->required()->check(CLI::IsMember({"flip", "cayley", "switched", "signed"}));
  graph_cmd->add_option("--n", n_arg);
  graph_cmd->add_option("--mu", mu_arg);
  auto* verify_cmd = app.add_subcommand("verify", "Run an exhaustive verification suite");
  verify_cmd->add_option("--suite", suite)
      ->required()
      ->check(CLI::IsMember({"ref1", "fibers", "homogeneous", "switched", "diagram", "all"}));
  verify_cmd->add_option("--n", n_arg)->required();
  auto* render_cmd = app.add_subcommand("render", "Render a triangulation, sphere or certificate as SVG");
  render_cmd->add_option("file", file_arg)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*phi_cmd) {
      const Permutation p = parse_permutation(word_arg);
      emit_doc(opt, {phi(p), std::nullopt, std::nullopt}, word_arg);
    } else if (*readings_cmd) {
      const Triangulation t = load_triangulation(file_arg).triangulation;
      json out = json::array();
      for (const Permutation& r : readings(t)) out.push_back(format_word(r, style_for(t.n())));
      emit_json(opt, out);
    } else if (*canonical_cmd) {
      const Triangulation t = load_triangulation(file_arg).triangulation;
      emit_json(opt, format_word(canonical_reading(t), style_for(t.n())));
    } else if (*bigphi_cmd) {
      const ColoredTriangulation ct = big_phi(parse_word(word_arg).word);
      emit_doc(opt, {ct.triangulation, ct.coloring, std::nullopt}, word_arg);
    } else if (*trace_cmd) {
      std::string lines;
      for (const ColoredTriangulation& st : insertion_trace(parse_word(word_arg).word)) {
        lines += to_json(TriangulationDoc{st.triangulation, st.coloring, std::nullopt}).dump() + "\n";
      }
      emit(opt, lines);
    } else if (*std_cmd) {
      const Permutation s = standardize(parse_word(word_arg).word);
      emit_json(opt, format_word(s, style_for(static_cast<int>(s.size()))));
    } else if (*dstd_cmd) {
      const Word w = destandardize(parse_permutation(word_arg), parse_int_list(mu_arg));
      emit_json(opt, format_word(w, WordStyle::Letters));
    } else if (*class_cmd) {
      const ParsedWord w = parse_word(word_arg);
      json out = json::array();
      for (const Word& u : sylvester_class(w.word)) out.push_back(format_word(u, w.style));
      emit_json(opt, out);
    } else if (*flip_cmd) {
      const TriangulationDoc doc = load_triangulation(file_arg);
      const std::vector<int> ij = parse_int_list(d_arg);
      if (ij.size() != 2) throw DomainError("--d expects i,j");
      const Diagonal d = make_diagonal(ij[0], ij[1]);
      TriangulationDoc out = doc;
      if (doc.signs) {
        auto next = signed_flip({doc.triangulation, *doc.signs}, d);
        if (!next) {
          std::cerr << "signed flip refused: the two faces at the diagonal have different signs\n";
          return kExitCheckFailed;
        }
        out.triangulation = next->triangulation;
        out.signs = next->coloring;
      } else {
        out.triangulation = flip(doc.triangulation, d).triangulation;
      }
      emit_doc(opt, out);
    } else if (*neighbors_cmd) {
      const TriangulationDoc doc = load_triangulation(file_arg);
      std::string lines;
      auto line = [&](const TriangulationDoc& d) { lines += to_json(d).dump() + "\n"; };
      if (mode == "plain") {
        for (const Diagonal& d : doc.triangulation.diagonals()) {
          line({flip(doc.triangulation, d).triangulation, std::nullopt, std::nullopt});
        }
      } else if (mode == "signed") {
        if (!doc.signs) throw DomainError("signed neighbors need \"signs\"");
        for (const Diagonal& d : doc.triangulation.diagonals()) {
          if (auto next = signed_flip({doc.triangulation, *doc.signs}, d)) {
            line({next->triangulation, std::nullopt, next->coloring});
          }
        }
      } else {
        if (!doc.colors) throw DomainError(mode + " neighbors need \"colors\"");
        const ColoredTriangulation ct{doc.triangulation, *doc.colors};
        const auto next = mode == "homogeneous" ? homogeneous_neighbors(ct) : switched_neighbors(ct);
        for (const auto& s : next) line({s.triangulation, s.coloring, std::nullopt});
      }
      emit(opt, lines);
    } else if (*path_cmd) {
      const Triangulation from = phi(parse_permutation(word_arg));
      const Triangulation to = phi(parse_permutation(second_arg));
      auto path = signable_path_search(from, to, opt.max_states);
      if (!path) {
        std::cerr << "no signed path within the searched space\n";
        return kExitCheckFailed;
      }
      json flips = json::array();
      for (const Diagonal& d : path->flips) flips.push_back({d.lo, d.hi});
      json out{{"from", to_json(from)},
               {"to", to_json(to)},
               {"start_signs", signs_json(path->start_signs())},
               {"end_signs", signs_json(path->end_signs())},
               {"flips", flips}};
      if (!cert_file.empty()) {
        const Certificate cert = emit_word_certificate(*path);
        write_file(cert_file, certificate_to_jsonl(cert));
        out["certificate_steps"] = cert.kinds.size();
      }
      emit_json(opt, out);
    } else if (*check_cmd) {
      const Certificate cert = certificate_from_jsonl(read_file(file_arg));
      const CertificateCheck c = validate_certificate(cert);
      json out{{"ok", c.ok},
               {"steps", cert.kinds.size()},
               {"start", format_word(c.start, style_for(static_cast<int>(c.start.size())))},
               {"end", format_word(c.end, style_for(static_cast<int>(c.end.size())))}};
      if (!c.ok) {
        out["bad_step"] = c.bad_step;
        out["reason"] = c.reason;
        if (c.bad_step + 1 < cert.chain.size()) {
          out["from"] = format_signed(cert.chain[c.bad_step]);
          out["to"] = format_signed(cert.chain[c.bad_step + 1]);
        }
      }
      emit_json(opt, out);
      if (!c.ok) return kExitCheckFailed;
    } else if (*spd_cmd) {
      const auto path = path_from_json(parse_json(read_file(file_arg)));
      const PathSigning r = sign_path_diagonals(path);
      json out{{"signable", r.signable}, {"length", path.size()}};
      if (r.signable) {
        json signings = json::array();
        for (const DiagonalSigning& ds : r.signings) {
          signings.push_back({{"triangulation", to_json(ds.base)}, {"signs", diagonals_with_signs(ds)}});
        }
        json completed = json::array();
        for (const Diagonal& d : r.completed) completed.push_back({d.lo, d.hi});
        out["signings"] = signings;
        out["completed_plus"] = completed;
      } else {
        out["failed_step"] = r.failed_step;
      }
      emit_json(opt, out);
      if (!r.signable) return kExitCheckFailed;
    } else if (*glue_cmd) {
      const TriangulationDoc north = load_triangulation(north_file);
      const TriangulationDoc south = load_triangulation(south_file);
      SphereTriangulation s = glue(north.triangulation, south.triangulation);
      if (north.signs && south.signs) s.signs = SphereSigning{*north.signs, *south.signs};
      if (opt.format == "svg") {
        emit(opt, render_svg(sphere_panels(s)));
      } else {
        emit_json(opt, to_json(s));
      }
    } else if (*heawood_cmd) {
      const SphereTriangulation s = sphere_from_json(parse_json(read_file(file_arg)));
      const auto bad = heawood_violations(s);
      emit_json(opt, json{{"heawood", bad.empty()}, {"violations", bad}});
      if (!bad.empty()) return kExitCheckFailed;
    } else if (*color_cmd) {
      const SphereTriangulation s = sphere_from_json(parse_json(read_file(file_arg)));
      auto colors = four_color(s);
      if (!colors) {
        std::cerr << "no proper four coloring\n";
        return kExitCheckFailed;
      }
      SphereTriangulation signed_sphere = s;
      signed_sphere.signs = heawood_signing_from_coloring(s, *colors);
      emit_json(opt, json{{"colors", *colors},
                          {"verified", verify_coloring(s, *colors)},
                          {"heawood_signing", to_json(signed_sphere)["signs"]}});
    } else if (*graph_cmd) {
      CombGraph g;
      if (kind == "switched") {
        if (mu_arg.empty()) throw DomainError("--kind switched needs --mu");
        g = build_switched_graph(parse_int_list(mu_arg), size_cap(8));
      } else if (kind == "flip") {
        g = build_flip_graph(n_arg, size_cap(8));
      } else if (kind == "cayley") {
        g = mu_arg.empty() ? build_cayley_graph(n_arg, size_cap(8))
                           : build_word_cayley_graph(parse_int_list(mu_arg), size_cap(8));
      } else {
        g = build_signed_state_graph(n_arg, size_cap(7));
      }
      emit_json(opt, graph_json(g));
    } else if (*verify_cmd) {
      const json report = run_suite(suite, n_arg, opt);
      emit_json(opt, report);
      if (!report["pass"].get<bool>()) return kExitCheckFailed;
    } else if (*render_cmd) {
      const std::string text = read_file(file_arg);
      std::vector<Panel> panels;
      const auto first_line = text.substr(0, text.find('\n'));
      const json head = parse_json(first_line.find("\"word\"") != std::string::npos ? first_line : text);
      if (head.contains("word")) {
        panels = certificate_panels(certificate_from_jsonl(text));
      } else if (head.contains("north")) {
        panels = sphere_panels(sphere_from_json(head));
      } else if (head.contains("diagonals")) {
        const TriangulationDoc doc = triangulation_from_json(head);
        panels.push_back({doc.triangulation, doc.colors, doc.signs, ""});
      } else {
        throw DomainError("unsupported object: expected a triangulation, sphere or certificate");
      }
      emit(opt, render_svg(panels));
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return 0;
}
