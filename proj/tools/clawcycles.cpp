// Command-line front end. Graph output is graph6, reports are JSON lines.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <thread>

#include "clawcycles/audit.hpp"
#include "clawcycles/correspondence.hpp"
#include "clawcycles/enumerate.hpp"
#include "clawcycles/graph6.hpp"
#include "clawcycles/recognizers.hpp"
#include "clawcycles/scan.hpp"
#include "clawcycles/witnesses.hpp"

using namespace clawcycles;
using nlohmann::json;

namespace {

constexpr int kFinding = 1;
constexpr int kInputError = 2;

json error_json(const Error& e) {
  return json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}, {"evidence", e.evidence()}};
}

// Feeds each non-blank graph6 line of `path` ("-" for stdin) to fn. Parse
// failures become JSON error lines on `errors`. Returns false if any line
// was malformed or the file could not be opened.
template <class Fn>
bool for_each_graph(const std::string& path, std::ostream& errors, Fn&& fn) {
  std::ifstream file;
  if (path != "-") {
    file.open(path);
    if (!file) {
      errors << json{{"error", "io"}, {"message", "cannot open " + path}}.dump() << '\n';
      return false;
    }
  }
  std::istream& in = path == "-" ? std::cin : file;
  bool clean = true;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    Graph g;
    try {
      g = parse_graph6(line);
    } catch (const Error& e) {
      json j = error_json(e);
      j["line"] = number;
      errors << j.dump() << '\n';
      clean = false;
      continue;
    }
    fn(number, line, g);
  }
  return clean;
}

json check_report(const Graph& g) {
  const GraphFlags f = graph_flags(g);
  json j{{"n", g.order()},
         {"m", g.size()},
         {"connected", f.connected},
         {"cubic", f.cubic},
         {"claw_free", f.claw_free},
         {"c4_free", f.c4_free},
         {"min_degree", f.min_degree},
         {"max_degree", g.max_degree()}};
  const auto gi = girth(g);
  j["girth"] = gi ? json(*gi) : json(nullptr);
  if (auto claw = find_claw(g)) {
    j["claw"] = {claw->center, claw->leaves[0], claw->leaves[1], claw->leaves[2]};
  }
  if (auto c4 = find_c4(g)) j["c4"] = to_json(*c4);
  j["cut_vertices"] = cut_vertices(g);
  return j;
}

json witness_json(const EGWitness& w) {
  return json{{"length", w.cycle.length()}, {"k", w.k}, {"form", std::string(to_string(w.form))}, {"cycle", to_json(w.cycle)}};
}

json audit_json(const AuditReport& r) {
  json levels = json::array();
  for (std::size_t i = 0; i < r.profile.levels.size(); ++i) {
    levels.push_back({{"size", r.profile.level_size(i)}, {"induced_edges", r.profile.edges_in(i)}});
  }
  json entries = json::array();
  for (const AuditEntry& e : r.entries) {
    entries.push_back({{"claim", std::string(to_string(e.claim))},
                       {"holds", e.holds},
                       {"fallback", e.fallback ? to_json(*e.fallback) : json(nullptr)}});
  }
  return json{{"root", r.profile.root},
              {"levels", levels},
              {"forbidden_cycle_free", r.forbidden_free},
              {"entries", entries},
              {"verdict", std::string(to_string(r.verdict))}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cycle-length tools for claw-free and cubic graphs"};
  app.require_subcommand(1);

  std::string input = "-";
  std::optional<std::size_t> max_len;
  int theorem = 1;
  std::optional<Vertex> vertex;
  std::size_t order = 0;
  bool connected = false;
  std::string check = "all";
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  std::optional<Vertex> root;

  auto* check_cmd = app.add_subcommand("check", "Recognizer flags per graph");
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Cycle-length spectrum with one witness per length");
  auto* witness_cmd = app.add_subcommand("witness", "Constructive power-of-2 style cycle witness");
  auto* contract_cmd = app.add_subcommand("contract", "Shrink the triangles of a cubic claw-free C4-free graph");
  auto* expand_cmd = app.add_subcommand("expand", "Replace every vertex of a cubic graph by a triangle");
  auto* gen_cmd = app.add_subcommand("gen", "All cubic graphs on N vertices up to isomorphism");
  auto* scan_cmd = app.add_subcommand("scan", "Batch checks over a graph6 corpus");
  auto* audit_cmd = app.add_subcommand("audit", "Breadth-first level audit of a cubic graph");

  for (auto* cmd : {check_cmd, spectrum_cmd, witness_cmd, contract_cmd, expand_cmd, scan_cmd, audit_cmd}) {
    cmd->add_option("input", input, "graph6 file, or - for standard input")->capture_default_str();
  }
  spectrum_cmd->add_option("--max", max_len, "Largest cycle length to look for")->check(CLI::PositiveNumber);
  witness_cmd->add_option("--theorem", theorem, "1: claw-free, min degree 3; 5: 4-regular through a vertex")
      ->check(CLI::IsMember({1, 5}))
      ->capture_default_str();
  witness_cmd->add_option("--vertex", vertex, "Vertex for --theorem 5 (default: every vertex)");
  gen_cmd->add_option("--n", order, "Number of vertices (even, >= 4)")->required();
  gen_cmd->add_flag("--connected", connected, "Connected graphs only");
  scan_cmd->add_option("--check", check, "Checks to run")
      ->check(CLI::IsMember({"power2", "conjecture8", "theorem9", "all"}))
      ->capture_default_str();
  scan_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  audit_cmd->add_option("--root", root, "BFS root (default: every vertex)");

  CLI11_PARSE(app, argc, argv);

  int status = 0;
  const auto raise = [&](int code) { status = std::max(status, code); };
  std::ostream& out = std::cout;

  try {
    if (*check_cmd) {
      if (!for_each_graph(input, out, [&](std::size_t line, const std::string& text, const Graph& g) {
            json j = check_report(g);
            j["line"] = line;
            j["graph6"] = text;
            out << j.dump() << '\n';
          }))
        raise(kInputError);
    } else if (*spectrum_cmd) {
      if (!for_each_graph(input, out, [&](std::size_t line, const std::string& text, const Graph& g) {
            json j{{"line", line}, {"graph6", text}};
            const std::size_t cap = std::min(max_len.value_or(g.order()), g.order());
            const CycleSpectrum s = cycle_spectrum(g, cap);
            j["max"] = cap;
            j["lengths"] = s.lengths();
            json w = json::object();
            for (const auto& [len, c] : s.witnesses) w[std::to_string(len)] = to_json(c);
            j["witnesses"] = w;
            out << j.dump() << '\n';
          }))
        raise(kInputError);
    } else if (*witness_cmd) {
      if (!for_each_graph(input, out, [&](std::size_t line, const std::string& text, const Graph& g) {
            std::vector<Vertex> targets;
            if (theorem == 5) {
              if (vertex) {
                targets.push_back(*vertex);
              } else {
                for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) targets.push_back(v);
              }
            } else {
              targets.push_back(-1);
            }
            for (Vertex v : targets) {
              json j{{"line", line}, {"graph6", text}, {"theorem", theorem}};
              if (theorem == 5) j["vertex"] = v;
              try {
                j.update(witness_json(theorem == 1 ? theorem1_witness(g) : theorem5_witness(g, v)));
              } catch (const Error& e) {
                j.update(error_json(e));
                raise(e.kind() == ErrorKind::StructureViolation || e.kind() == ErrorKind::TargetMissing ? kFinding
                                                                                                      : kInputError);
              }
              out << j.dump() << '\n';
            }
          }))
        raise(kInputError);
    } else if (*contract_cmd || *expand_cmd) {
      const bool contracting = static_cast<bool>(*contract_cmd);
      if (!for_each_graph(input, std::cerr, [&](std::size_t line, const std::string&, const Graph& g) {
            try {
              out << write_graph6(contracting ? contract(g).quotient : expand(g)) << '\n';
            } catch (const Error& e) {
              json j = error_json(e);
              j["line"] = line;
              std::cerr << j.dump() << '\n';
              raise(kInputError);
            }
          }))
        raise(kInputError);
    } else if (*gen_cmd) {
      for_each_cubic_graph(order, connected, [&](const Graph& g) { out << write_graph6(g) << '\n'; });
    } else if (*scan_cmd) {
      std::ifstream file;
      if (input != "-") {
        file.open(input);
        if (!file) {
          out << json{{"error", "io"}, {"message", "cannot open " + input}}.dump() << '\n';
          return kInputError;
        }
      }
      std::istream& in = input == "-" ? std::cin : file;
      const ScanSummary s = scan_corpus(in, ScanChecks::parse(check), jobs,
                                        [&](const ScanRecord& r) { out << to_json(r).dump() << '\n'; });
      out << to_json(s).dump() << '\n';
      raise(s.exit_code());
    } else if (*audit_cmd) {
      if (!for_each_graph(input, out, [&](std::size_t line, const std::string& text, const Graph& g) {
            std::vector<Vertex> roots;
            if (root) {
              roots.push_back(*root);
            } else {
              for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) roots.push_back(v);
            }
            for (Vertex r : roots) {
              json j{{"line", line}, {"graph6", text}};
              try {
                if (!g.contains(r)) throw Error(ErrorKind::OutOfRange, "root not in graph", {r});
                const AuditReport rep = theorem9_audit(g, r);
                j.update(audit_json(rep));
                if (rep.verdict == Verdict::Contradiction) raise(kFinding);
              } catch (const Error& e) {
                j["root"] = r;
                j.update(error_json(e));
                raise(kInputError);
              }
              out << j.dump() << '\n';
            }
          }))
        raise(kInputError);
    }
  } catch (const Error& e) {
    std::cerr << error_json(e).dump() << '\n';
    return kInputError;
  }
  return status;
}
