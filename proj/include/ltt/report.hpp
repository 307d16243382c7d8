#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ltt/dfa.hpp"
#include "ltt/ltt_check.hpp"

namespace ltt {

inline constexpr int kReportSchemaVersion = 1;

/// One algorithm's result inside a run report. outcome is empty when the
/// algorithm could not run (budget exceeded); error then carries the reason.
struct AlgoVerdict {
  std::string algorithm;
  std::optional<bool> outcome;
  Verdict verdict;
  PhaseTimes times;
  std::optional<std::size_t> semigroup_size;
  std::string error;
};

struct RunReport {
  std::string command;  // "check" or "witness"
  std::string mode;     // "ltt" or "lt" (check only)
  std::uint64_t digest = 0;
  std::vector<AlgoVerdict> verdicts;
  std::optional<bool> agreement;  // set when more than one verdict ran
  double parse_ms = 0;
  double total_ms = 0;
  // witness command
  std::optional<std::pair<int, int>> found;
  bool one_sided = false;
  std::vector<std::pair<int, int>> skipped;
};

std::string word_to_string(const Dfa& d, const Word& w);

nlohmann::json witness_to_json(const Witness& w, const Dfa& d);

nlohmann::json report_to_json(const RunReport& r, const Dfa& d);

}  // namespace ltt
