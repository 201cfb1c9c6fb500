// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero
// when any criterion fails.
#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <string>

#include "clawcycles/audit.hpp"
#include "clawcycles/canonical.hpp"
#include "clawcycles/correspondence.hpp"
#include "clawcycles/enumerate.hpp"
#include "clawcycles/fixtures.hpp"
#include "clawcycles/graph6.hpp"
#include "clawcycles/holes.hpp"
#include "clawcycles/recognizers.hpp"
#include "clawcycles/witnesses.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace clawcycles;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
  std::printf("%s  criterion %d: %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

bool valid_cycle_of(const Graph& g, const Cycle& c, std::size_t len) {
  return c.length() == len && oracle::is_valid_cycle(g, c.vertices);
}

std::set<std::string> certs(const std::vector<Graph>& gs) {
  std::set<std::string> out;
  for (const Graph& g : gs) out.insert(canonical_cert(g).graph6);
  return out;
}

// Connected cubic classes by order, shared by several criteria.
std::map<std::size_t, std::vector<Graph>> connected_cubic;
double enumeration_seconds = 0;

void criterion1() {
  const auto t0 = Clock::now();
  for (std::size_t n = 4; n <= 14; n += 2) connected_cubic[n] = enumerate_cubic_graphs(n, true);
  enumeration_seconds = seconds_since(t0);

  bool oracle_ok = true;
  for (std::size_t n : {4u, 6u, 8u}) {
    oracle_ok &= certs(connected_cubic[n]) == oracle::cubic_classes(n, true);
    oracle_ok &= certs(enumerate_cubic_graphs(n, false)) == oracle::cubic_classes(n, false);
  }
  std::size_t graphs = 0, missing = 0, invalid = 0;
  std::string counts;
  for (const auto& [n, gs] : connected_cubic) {
    counts += (counts.empty() ? "" : ",") + std::to_string(gs.size());
    for (const Graph& g : gs) {
      ++graphs;
      const auto p = power_of_two_cycle(g);
      if (!p) {
        ++missing;
      } else if (!valid_cycle_of(g, p->cycle, std::size_t{1} << p->exponent)) {
        ++invalid;
      }
    }
  }
  const double secs = seconds_since(t0);
  report(1, oracle_ok && missing == 0 && invalid == 0 && secs < 600,
         fmt("%zu connected cubic graphs n<=14 (counts %s), %zu without a power-of-2 cycle, %zu invalid "
             "witnesses, oracle counts n=4,6,8 %s, %.1fs",
             graphs, counts.c_str(), missing, invalid, oracle_ok ? "match" : "DIFFER", secs));
}

struct WitnessTally {
  std::size_t graphs = 0, c4_branch = 0, hole_branch = 0, structure_violations = 0, bad = 0;
  std::vector<std::string> findings;

  void run(const Graph& g) {
    ++graphs;
    try {
      const EGWitness w = theorem1_witness(g);
      const std::size_t len = w.cycle.length();
      const bool shape = std::has_single_bit(len) ? w.form == CycleForm::Pow2
                                                  : (len % 3 == 0 && std::has_single_bit(len / 3) &&
                                                     w.form == CycleForm::ThreePow2);
      if (!shape || len != w.expected_length() || !oracle::is_valid_cycle(g, w.cycle.vertices)) ++bad;
      ++(len == 4 && w.k == 2 ? c4_branch : hole_branch);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::StructureViolation) {
        ++structure_violations;
        findings.push_back(write_graph6(g));
      } else {
        ++bad;
      }
    }
  }
};

void criterion2() {
  const auto t0 = Clock::now();
  WitnessTally exhaustive;
  const auto levels = gen::claw_free_classes(9);
  for (const auto& level : levels)
    for (const Graph& g : level)
      if (g.min_degree() >= 3 && is_connected(g)) exhaustive.run(g);

  WitnessTally random;
  gen::Rng rng(20240601);
  std::uniform_int_distribution<std::size_t> order(6, 20);
  std::uniform_real_distribution<double> density(0.1, 0.6);
  std::size_t attempts = 0;
  while (random.graphs < 1000) {
    ++attempts;
    Graph g;
    switch (attempts % 5) {
      case 0: g = gen::claw_repaired(order(rng), density(rng) / 2, rng); break;
      case 1: g = gen::co_triangle_free(order(rng), density(rng), rng); break;
      case 2: g = gen::random_line_graph(7 + attempts % 4, 10 + attempts % 11, rng); break;
      case 3: g = gen::shuffled(expand(gen::random_cubic(attempts % 2 ? 4 : 6, rng)), rng); break;
      default: {
        const Graph h = gen::random_cubic(attempts % 2 ? 10 : 12, rng);
        if (girth(h).value_or(0) < 5) continue;
        g = gen::shuffled(line_graph(h), rng);
      }
    }
    if (g.order() > 20 || g.order() == 0 || g.min_degree() < 3 || !is_claw_free(g)) continue;
    random.run(g);
  }
  for (const auto& f : exhaustive.findings) std::printf("  structure violation (exhaustive): %s\n", f.c_str());
  for (const auto& f : random.findings) std::printf("  structure violation (random): %s\n", f.c_str());
  report(2, exhaustive.bad == 0 && random.bad == 0,
         fmt("exhaustive n<=9: %zu graphs (%zu C4, %zu hole), random n<=20: %zu graphs (%zu C4, %zu hole); "
             "invalid %zu, structure violations %zu, %.1fs",
             exhaustive.graphs, exhaustive.c4_branch, exhaustive.hole_branch, random.graphs, random.c4_branch,
             random.hole_branch, exhaustive.bad + random.bad,
             exhaustive.structure_violations + random.structure_violations, seconds_since(t0)));
}

void criterion3() {
  std::size_t graphs = 0, failed = 0;
  for (const auto& [n, gs] : connected_cubic) {
    if (n > 12) break;
    for (const Graph& h : gs) {
      ++graphs;
      const Graph g = expand(h);
      const bool shape = g.order() == 3 * n && g.is_cubic() && is_claw_free(g) && !find_c4(g);
      if (!shape || canonical_cert(contract(g).quotient) != canonical_cert(h)) ++failed;
    }
  }
  report(3, failed == 0, fmt("%zu connected cubic graphs n<=12 round-tripped, %zu failures", graphs, failed));
}

void criterion4() {
  std::size_t graphs = 0, lengths = 0, failed = 0;
  for (const auto& [n, gs] : connected_cubic) {
    if (n > 10) break;
    for (const Graph& h : gs) {
      ++graphs;
      const Graph g = expand(h);
      const CycleSpectrum big = cycle_spectrum(g);
      const ContractionResult r = contract(g);
      for (const auto& [k, c] : cycle_spectrum(r.quotient).witnesses) {
        for (std::size_t len = 2 * k; len <= 3 * k; ++len) failed += !big.contains(len);
        const auto lifted = lift_cycle(r, c);
        if (lifted.size() != k + 1) ++failed;
        for (std::size_t j = 0; j < lifted.size(); ++j) {
          ++lengths;
          failed += !valid_cycle_of(g, lifted[j], 2 * k + j);
        }
      }
    }
  }
  report(4, failed == 0,
         fmt("%zu connected cubic graphs n<=10, %zu lifted cycles checked, %zu failures", graphs, lengths, failed));
}

void criterion5() {
  const auto forbidden = [](std::size_t len) {
    return std::find(kForbiddenLengths.begin(), kForbiddenLengths.end(), len) != kForbiddenLengths.end();
  };
  std::size_t graphs = 0, audits = 0, free_graphs = 0, unsound = 0, contradictions = 0;
  for (const auto& [n, gs] : connected_cubic) {
    for (const Graph& g : gs) {
      ++graphs;
      const auto f = find_forbidden_cycle(g);
      if (!f || !forbidden(f->length()) || !oracle::is_valid_cycle(g, f->vertices)) ++free_graphs;
      for (Vertex root = 0; root < static_cast<Vertex>(n); ++root) {
        ++audits;
        const AuditReport rep = theorem9_audit(g, root);
        contradictions += rep.verdict == Verdict::Contradiction;
        for (const AuditEntry& e : rep.entries) {
          const bool ok = e.holds || (e.fallback && forbidden(e.fallback->length()) &&
                                      oracle::is_valid_cycle(g, e.fallback->vertices));
          unsound += !ok;
        }
      }
    }
  }
  report(5, free_graphs == 0 && unsound == 0 && contradictions == 0,
         fmt("%zu connected cubic graphs n<=14, %zu without a {3,4,6,7,8}-cycle; %zu audits, %zu unsound entries, "
             "%zu contradictions",
             graphs, free_graphs, audits, unsound, contradictions));
}

void criterion6() {
  const Graph lp = fixtures::l_petersen();
  const bool shape = lp.order() == 15 && lp.is_regular(4) && is_claw_free(lp) && !find_c4(lp) &&
                     cut_vertices(lp).empty();
  std::size_t ok = 0;
  std::map<std::size_t, std::size_t> by_length;
  for (Vertex v = 0; v < 15; ++v) {
    try {
      const EGWitness w = theorem5_witness(lp, v);
      const bool has_v = std::find(w.cycle.vertices.begin(), w.cycle.vertices.end(), v) != w.cycle.vertices.end();
      if (has_v && w.k >= 3 && w.form == CycleForm::Pow2 && valid_cycle_of(lp, w.cycle, w.expected_length())) {
        ++ok;
        ++by_length[w.cycle.length()];
      }
    } catch (const Error& e) {
      std::printf("  vertex %d: %s\n", v, e.what());
    }
  }
  std::string lengths;
  for (auto [len, count] : by_length) lengths += fmt(" %zux%zu", count, len);
  report(6, shape && ok == 15, fmt("L_PETERSEN witnesses for %zu/15 vertices, lengths:%s", ok, lengths.c_str()));
}

void criterion7() {
  std::size_t graphs = 0, absent = 0, invalid = 0;
  for (const auto& [n, gs] : connected_cubic) {
    for (const Graph& g : gs) {
      ++graphs;
      const auto hit = conjecture8_check(g);
      if (!hit) {
        ++absent;
        std::printf("  conjecture check absent (research finding): %s\n", write_graph6(g).c_str());
        continue;
      }
      const std::uint64_t p = std::uint64_t{1} << hit->k;
      if (!(2 * hit->length <= p && p < 3 * hit->length) || !valid_cycle_of(g, hit->cycle, hit->length)) ++invalid;
    }
  }
  report(7, absent == 0 && invalid == 0,
         fmt("%zu connected cubic graphs n<=14, %zu absent, %zu invalid", graphs, absent, invalid));
}

void criterion8() {
  const auto as_set = [](const CycleSpectrum& s) {
    const auto l = s.lengths();
    return std::set<std::size_t>(l.begin(), l.end());
  };
  std::size_t spectra = 0, spectrum_mismatch = 0, holes = 0, hole_mismatch = 0;
  auto hole_check = [&](const Graph& g) {
    ++holes;
    const auto h = smallest_hole(g);
    const auto expected = oracle::smallest_hole_length(g);
    const bool same = h ? (expected && h->length() == *expected && is_hole(g, h->cycle())) : !expected;
    hole_mismatch += !same;
  };
  for (auto name : fixtures::names()) {
    const Graph g = fixtures::by_name(name);
    if (g.order() > 10) continue;
    ++spectra;
    spectrum_mismatch += as_set(cycle_spectrum(g)) != oracle::spectrum(g);
    hole_check(g);
  }
  gen::Rng rng(8);
  std::uniform_int_distribution<std::size_t> small(3, 8);
  std::uniform_real_distribution<double> density(0.2, 0.7);
  for (int i = 0; i < 100; ++i) {
    const Graph g = gen::random_graph(small(rng), density(rng), rng);
    ++spectra;
    spectrum_mismatch += as_set(cycle_spectrum(g)) != oracle::spectrum(g);
  }
  std::uniform_int_distribution<std::size_t> upto10(4, 10);
  for (int i = 0; i < 200; ++i) hole_check(gen::random_graph(upto10(rng), density(rng) * 0.7, rng));
  for (const auto& [n, gs] : connected_cubic) {
    if (n > 10) break;
    for (const Graph& g : gs) hole_check(g);
  }
  report(8, spectrum_mismatch == 0 && hole_mismatch == 0,
         fmt("spectrum: %zu graphs, %zu mismatches; smallest hole: %zu graphs, %zu mismatches", spectra,
             spectrum_mismatch, holes, hole_mismatch));
}

void criterion9() {
  const auto t0 = Clock::now();
  constexpr std::uint64_t limit = std::uint64_t{1} << 20;
  std::size_t gaps = 0, pow2_gaps = 0;
  for (std::uint64_t s = 4; s <= limit; s += 2) gaps += !target_in_interval(s, 3 * s / 2);
  for (std::uint64_t s = 5; s <= limit; ++s) {
    const auto p = power_of_two_in_interval(s, 2 * s);
    pow2_gaps += !p || p->k < 3 || p->value < s || p->value > 2 * s;
  }
  const double secs = seconds_since(t0);
  report(9, gaps == 0 && pow2_gaps == 0 && secs < 5,
         fmt("even s in [4,2^20]: %zu gaps in [s,3s/2]; s in [5,2^20]: %zu without a power of 2 in [s,2s]; %.3fs",
             gaps, pow2_gaps, secs));
}

void criterion10() {
  std::size_t graphs = 0, mismatches = 0;
  for (std::size_t n = 4; n <= 12; n += 2) {
    for (bool connected : {true, false}) {
      for (const Graph& g : enumerate_cubic_graphs(n, connected)) {
        ++graphs;
        mismatches += parse_graph6(write_graph6(g)) != g;
      }
    }
  }
  const bool vectors = parse_graph6("@") == Graph(1) && parse_graph6("A?") == Graph(2) &&
                       parse_graph6("A_") == Graph::from_edges(2, {{0, 1}}) && write_graph6(Graph(1)) == "@" &&
                       write_graph6(Graph(2)) == "A?" && write_graph6(Graph::from_edges(2, {{0, 1}})) == "A_";
  report(10, mismatches == 0 && vectors,
         fmt("%zu enumerated graphs n<=12 round-tripped, %zu mismatches; vectors @, A?, A_ %s", graphs, mismatches,
             vectors ? "ok" : "WRONG"));
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  std::printf("%s: %d criteria failed (cubic enumeration n<=14 took %.1fs)\n", failures ? "FAILED" : "ALL PASSED",
              failures, enumeration_seconds);
  return failures ? 1 : 0;
}
