#include "clawcycles/scan.hpp"

#include <atomic>
#include <thread>
#include <vector>

#include "clawcycles/graph6.hpp"

namespace clawcycles {

ScanChecks ScanChecks::parse(std::string_view name) {
  if (name == "power2") return {true, false, false};
  if (name == "conjecture8") return {false, true, false};
  if (name == "theorem9") return {false, false, true};
  if (name == "all") return {true, true, true};
  throw Error(ErrorKind::InvalidArgument, "unknown check '" + std::string(name) + "'");
}

bool ScanRecord::counterexample_candidate() const {
  if (error) return false;
  if (power2_checked && !power2 && flags.min_degree >= 3) return true;
  if (conjecture8_checked && !conjecture8) return true;
  return audit_checked && audit_verdict == Verdict::Contradiction;
}

void ScanSummary::add(const ScanRecord& r) {
  if (r.error) {
    ++malformed;
    return;
  }
  ++graphs;
  connected += r.flags.connected;
  cubic += r.flags.cubic;
  claw_free += r.flags.claw_free;
  c4_free += r.flags.c4_free;
  if (r.power2_checked) ++(r.power2 ? power2_found : power2_missing);
  if (r.conjecture8_checked) ++(r.conjecture8 ? conjecture8_found : conjecture8_missing);
  if (r.audit_checked) {
    ++audits;
    contradictions += r.audit_verdict == Verdict::Contradiction;
  }
  if (r.counterexample_candidate()) candidate_lines.push_back(r.line);
}

int ScanSummary::exit_code() const {
  if (!candidate_lines.empty()) return 1;
  return malformed > 0 ? 2 : 0;
}

GraphFlags graph_flags(const Graph& g) {
  return GraphFlags{is_connected(g), g.is_cubic(), is_claw_free(g), !find_c4(g), g.min_degree()};
}

ScanRecord scan_line(std::size_t line_number, const std::string& text, const ScanChecks& checks) {
  ScanRecord r;
  r.line = line_number;
  r.graph6 = text;
  Graph g;
  try {
    g = parse_graph6(text);
  } catch (const Error& e) {
    r.error = e.what();
    return r;
  }
  r.n = g.order();
  r.flags = graph_flags(g);
  if (checks.power2) {
    r.power2_checked = true;
    r.power2 = power_of_two_cycle(g);
  }
  if (checks.conjecture8 && r.flags.cubic) {
    r.conjecture8_checked = true;
    r.conjecture8 = conjecture8_check(g);
  }
  if (checks.theorem9 && r.flags.cubic && r.flags.connected) {
    r.audit_checked = true;
    for (Vertex root = 0; root < static_cast<Vertex>(g.order()); ++root) {
      if (theorem9_audit(g, root).verdict == Verdict::Contradiction) {
        r.audit_verdict = Verdict::Contradiction;
        break;
      }
    }
  }
  return r;
}

ScanSummary scan_corpus(std::istream& in, const ScanChecks& checks, unsigned jobs,
                        const std::function<void(const ScanRecord&)>& sink) {
  constexpr std::size_t kBatch = 512;
  jobs = std::max(1u, jobs);
  ScanSummary summary;
  std::size_t line_number = 0;
  std::string line;
  bool more = true;
  while (more) {
    std::vector<std::pair<std::size_t, std::string>> batch;
    while (batch.size() < kBatch && (more = static_cast<bool>(std::getline(in, line)))) {
      ++line_number;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      batch.emplace_back(line_number, line);
    }
    std::vector<ScanRecord> records(batch.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < batch.size();) {
        records[i] = scan_line(batch[i].first, batch[i].second, checks);
      }
    };
    if (jobs == 1 || batch.size() < 2) {
      work();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(work);
    }
    for (const auto& r : records) {
      summary.add(r);
      sink(r);
    }
  }
  return summary;
}

nlohmann::json to_json(const Cycle& c) { return c.vertices; }

nlohmann::json to_json(const ScanRecord& r) {
  nlohmann::json j;
  j["line"] = r.line;
  j["graph6"] = r.graph6;
  if (r.error) {
    j["error"] = *r.error;
    return j;
  }
  j["n"] = r.n;
  j["flags"] = {{"connected", r.flags.connected},
                {"cubic", r.flags.cubic},
                {"claw_free", r.flags.claw_free},
                {"c4_free", r.flags.c4_free},
                {"min_degree", r.flags.min_degree}};
  if (r.power2_checked) {
    j["power2"] = r.power2 ? nlohmann::json{{"length", r.power2->cycle.length()},
                                            {"k", r.power2->exponent},
                                            {"cycle", to_json(r.power2->cycle)}}
                           : nlohmann::json(nullptr);
  }
  if (r.conjecture8_checked) {
    j["conjecture8"] = r.conjecture8 ? nlohmann::json{{"l", r.conjecture8->length},
                                                      {"k", r.conjecture8->k},
                                                      {"cycle", to_json(r.conjecture8->cycle)}}
                                     : nlohmann::json(nullptr);
  }
  if (r.audit_checked) j["audit"] = std::string(to_string(r.audit_verdict));
  j["candidate"] = r.counterexample_candidate();
  return j;
}

nlohmann::json to_json(const ScanSummary& s) {
  return nlohmann::json{{"summary",
                         {{"graphs", s.graphs},
                          {"malformed", s.malformed},
                          {"connected", s.connected},
                          {"cubic", s.cubic},
                          {"claw_free", s.claw_free},
                          {"c4_free", s.c4_free},
                          {"power2_found", s.power2_found},
                          {"power2_missing", s.power2_missing},
                          {"conjecture8_found", s.conjecture8_found},
                          {"conjecture8_missing", s.conjecture8_missing},
                          {"audits", s.audits},
                          {"contradictions", s.contradictions},
                          {"candidates", s.candidate_lines},
                          {"exit_code", s.exit_code()}}}};
}

}  // namespace clawcycles
