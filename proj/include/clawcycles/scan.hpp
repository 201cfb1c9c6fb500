#ifndef CLAWCYCLES_SCAN_HPP
#define CLAWCYCLES_SCAN_HPP

#include <cstddef>
#include <functional>
#include <istream>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "clawcycles/audit.hpp"
#include "clawcycles/recognizers.hpp"
#include "clawcycles/witnesses.hpp"

namespace clawcycles {

struct ScanChecks {
  bool power2 = false;
  bool conjecture8 = false;
  bool theorem9 = false;

  /// "power2", "conjecture8", "theorem9" or "all".
  static ScanChecks parse(std::string_view name);
};

struct GraphFlags {
  bool connected = false;
  bool cubic = false;
  bool claw_free = false;
  bool c4_free = false;
  std::size_t min_degree = 0;
};

struct ScanRecord {
  std::size_t line = 0;  // 1-based input line
  std::string graph6;
  std::optional<std::string> error;  // set for malformed lines; nothing else is then filled
  std::size_t n = 0;
  GraphFlags flags;

  bool power2_checked = false;
  std::optional<PowerOfTwoCycle> power2;

  bool conjecture8_checked = false;  // only for cubic graphs
  std::optional<Conjecture8Hit> conjecture8;

  bool audit_checked = false;  // only for connected cubic graphs, every root
  Verdict audit_verdict = Verdict::Consistent;

  /// Power-of-two cycle missing with min degree >= 3, conjecture check
  /// failing on a cubic graph, or an audit contradiction.
  bool counterexample_candidate() const;
};

/// Commutative counts over records.
struct ScanSummary {
  std::size_t graphs = 0;
  std::size_t malformed = 0;
  std::size_t connected = 0;
  std::size_t cubic = 0;
  std::size_t claw_free = 0;
  std::size_t c4_free = 0;
  std::size_t power2_found = 0;
  std::size_t power2_missing = 0;
  std::size_t conjecture8_found = 0;
  std::size_t conjecture8_missing = 0;
  std::size_t audits = 0;
  std::size_t contradictions = 0;
  std::vector<std::size_t> candidate_lines;

  void add(const ScanRecord& r);
  /// 0 clean, 1 counterexample candidate, 2 malformed input only.
  int exit_code() const;
};

GraphFlags graph_flags(const Graph& g);

/// Runs the selected checks on one graph6 line.
ScanRecord scan_line(std::size_t line_number, const std::string& text, const ScanChecks& checks);

/// Reads graph6 lines (blank lines skipped), evaluates them on `jobs`
/// threads and hands records to `sink` in input order.
ScanSummary scan_corpus(std::istream& in, const ScanChecks& checks, unsigned jobs,
                        const std::function<void(const ScanRecord&)>& sink);

nlohmann::json to_json(const Cycle& c);
nlohmann::json to_json(const ScanRecord& r);
nlohmann::json to_json(const ScanSummary& s);

}  // namespace clawcycles

#endif  // CLAWCYCLES_SCAN_HPP
