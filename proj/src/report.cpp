#include "ltt/report.hpp"

#include <iomanip>
#include <sstream>

namespace ltt {

std::string word_to_string(const Dfa& d, const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += d.alphabet[w[i]];
  }
  return out;
}

nlohmann::json witness_to_json(const Witness& w, const Dfa& d) {
  nlohmann::json j;
  j["states"] = w.states;
  j["letters"] = nlohmann::json::array();
  for (int a : w.letters) j["letters"].push_back(d.alphabet[a]);
  j["components"] = w.components;
  j["words"] = nlohmann::json::array();
  for (const Word& word : w.words) j["words"].push_back(word_to_string(d, word));
  j["note"] = w.note;
  return j;
}

namespace {

nlohmann::json times_to_json(const PhaseTimes& t) {
  nlohmann::json j;
  for (const auto& [name, ms] : t.phases) j[name] = ms;
  j["total"] = t.total_ms;
  return j;
}

std::string hex_digest(std::uint64_t v) {
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << v;
  return out.str();
}

}  // namespace

nlohmann::json report_to_json(const RunReport& r, const Dfa& d) {
  nlohmann::json j;
  j["schema_version"] = kReportSchemaVersion;
  j["digest"] = hex_digest(r.digest);
  j["command"] = r.command;
  if (!r.mode.empty()) j["mode"] = r.mode;

  nlohmann::json verdicts = nlohmann::json::array();
  std::optional<std::size_t> semigroup_size;
  for (const AlgoVerdict& av : r.verdicts) {
    nlohmann::json v;
    v["algorithm"] = av.algorithm;
    if (av.outcome)
      v["outcome"] = *av.outcome;
    else
      v["outcome"] = nullptr;
    v["reason"] = av.outcome ? violation_name(av.verdict.reason) : "budget_exceeded";
    if (av.outcome && !*av.outcome)
      v["witness"] = witness_to_json(av.verdict.witness, d);
    else
      v["witness"] = nullptr;
    v["timing_ms"] = times_to_json(av.times);
    if (!av.error.empty()) v["error"] = av.error;
    if (av.semigroup_size) {
      v["semigroup_size"] = *av.semigroup_size;
      semigroup_size = av.semigroup_size;
    }
    verdicts.push_back(std::move(v));
  }
  j["verdicts"] = std::move(verdicts);
  if (semigroup_size)
    j["semigroup_size"] = *semigroup_size;
  else
    j["semigroup_size"] = nullptr;
  if (r.agreement)
    j["agreement"] = *r.agreement;

  nlohmann::json t;
  t["parse"] = r.parse_ms;
  t["total"] = r.total_ms;
  j["timing_ms"] = std::move(t);

  if (r.command == "witness") {
    j["one_sided"] = r.one_sided;
    if (r.found) {
      j["found"] = true;
      j["k"] = r.found->first;
      j["l"] = r.found->second;
    } else {
      j["found"] = false;
    }
    nlohmann::json skipped = nlohmann::json::array();
    for (auto [k, l] : r.skipped) skipped.push_back({k, l});
    j["skipped"] = std::move(skipped);
  }
  return j;
}

}  // namespace ltt
