// lttcheck: decide local (threshold) testability of DFA transition graphs.
//
// Exit codes: 0 ok, 1 input/usage error, 2 budget exceeded (or filter
// starvation), 3 checker disagreement in --algorithm all runs.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ltt/dfa.hpp"
#include "ltt/lt_check.hpp"
#include "ltt/ltt_check.hpp"
#include "ltt/profile.hpp"
#include "ltt/random_dfa.hpp"
#include "ltt/report.hpp"
#include "ltt/semigroup.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct CheckArgs {
  std::string input;
  std::string mode = "ltt";
  std::string algorithm = "all";
  bool complete_with_sink = false;
  std::size_t budget_elements = ltt::kDefaultSemigroupBudget;
  int workers = 1;
  bool json = true;
};

struct RandomArgs {
  int states = 1;
  int letters = 1;
  std::uint64_t seed = 0;
  int count = 1;
  std::string filter = "none";
};

struct WitnessArgs {
  std::string input;
  int kmax = 3;
  int lmax = 3;
  bool complete_with_sink = false;
  bool json = true;
};

ltt::ParsedDfa load_dfa(const std::string& path, bool complete) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ltt::ParseError(0, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  ltt::ParseOptions opts;
  opts.complete_with_sink = complete;
  ltt::ParsedDfa parsed = ltt::parse_dfa(buf.str(), opts);
  if (ltt::Verdict v = ltt::validate(parsed.dfa); !v.ok)
    throw ltt::ParseError(0, "invalid automaton: " + v.witness.note);
  return parsed;
}

ltt::PhaseTimes single_phase(const char* name, double ms) {
  ltt::PhaseTimes t;
  t.add(name, ms);
  t.total_ms = ms;
  return t;
}

int cmd_check(const CheckArgs& args) {
  const auto t0 = Clock::now();
  ltt::ParsedDfa parsed;
  try {
    parsed = load_dfa(args.input, args.complete_with_sink);
  } catch (const ltt::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  const ltt::Dfa& d = parsed.dfa;
  const double parse_ms = ms_since(t0);

  const bool all = args.algorithm == "all";
  bool budget_hit = false;

  ltt::RunReport report;
  report.command = "check";
  report.mode = args.mode;
  report.digest = ltt::dfa_digest(d);
  report.parse_ms = parse_ms;

  ltt::CheckOptions opts;
  opts.workers = args.workers;

  auto run_algo = [&](const std::string& name) {
    ltt::AlgoVerdict av;
    av.algorithm = name;
    try {
      if (args.mode == "ltt") {
        if (name == "graph") {
          ltt::LttRun run = ltt::run_ltt_check(d, opts);
          av.outcome = run.verdict.ok;
          av.verdict = std::move(run.verdict);
          av.times = std::move(run.times);
        } else {  // semigroup
          ltt::OracleRun run = ltt::run_oracle_ltt(d, args.budget_elements);
          av.outcome = run.verdict.ok;
          av.verdict = std::move(run.verdict);
          av.times.add("generate", run.generate_ms);
          av.times.add("scan", run.scan_ms);
          av.times.total_ms = run.total_ms;
          av.semigroup_size = run.semigroup_size;
        }
      } else {  // lt
        if (name == "graph") {
          ltt::LtRun run = ltt::run_lt_fast(d, opts);
          av.outcome = run.verdict.ok;
          av.verdict = std::move(run.verdict);
          av.times = std::move(run.times);
        } else if (name == "direct") {
          const auto t = Clock::now();
          ltt::Verdict v = ltt::is_locally_testable_direct(d, opts);
          av.outcome = v.ok;
          av.verdict = std::move(v);
          av.times = single_phase("scan", ms_since(t));
        } else {  // semigroup
          const auto t = Clock::now();
          ltt::TransitionSemigroup s = ltt::generate_semigroup(d, args.budget_elements);
          av.semigroup_size = static_cast<std::size_t>(s.size());
          ltt::Verdict v = ltt::is_locally_testable_semigroup(d, s, opts);
          av.outcome = v.ok;
          av.verdict = std::move(v);
          av.times = single_phase("scan", ms_since(t));
        }
      }
    } catch (const ltt::CapacityError& e) {
      av.outcome = std::nullopt;
      av.error = e.what();
      budget_hit = true;
    }
    report.verdicts.push_back(std::move(av));
  };

  if (all || args.algorithm == "graph") run_algo("graph");
  if (args.mode == "lt" && (all || args.algorithm == "direct")) run_algo("direct");
  if (all || args.algorithm == "semigroup") run_algo("semigroup");

  bool disagree = false;
  if (report.verdicts.size() > 1) {
    std::optional<bool> first;
    bool any_pair = false;
    for (const auto& av : report.verdicts) {
      if (!av.outcome) continue;
      if (!first) {
        first = av.outcome;
      } else {
        any_pair = true;
        if (*first != *av.outcome) disagree = true;
      }
    }
    if (any_pair) report.agreement = !disagree;
  }
  report.total_ms = ms_since(t0);

  std::cout << ltt::report_to_json(report, d).dump(2) << "\n";
  for (const auto& av : report.verdicts) {
    std::cerr << args.mode << " " << av.algorithm << ": "
              << (av.outcome ? (*av.outcome ? "true" : "false") : "budget exceeded")
              << "\n";
  }
  if (budget_hit) return 2;
  if (disagree) return 3;
  return 0;
}

int cmd_random(const RandomArgs& args) {
  if (args.states < 1 || args.letters < 1) {
    std::cerr << "error: --states and --letters must be at least 1\n";
    return 1;
  }
  ltt::SplitMix64 rng(args.seed);
  constexpr int kMaxDraws = 1000000;
  int emitted = 0;
  int draws = 0;
  std::ostringstream out;
  while (emitted < args.count) {
    if (draws >= kMaxDraws) {
      std::cerr << "error: filter starvation, no match in " << kMaxDraws
                << " draws\n";
      return 2;
    }
    ++draws;
    ltt::Dfa d = ltt::random_dfa(args.states, args.letters, rng);
    if (args.filter != "none") {
      const bool is_ltt = ltt::is_locally_threshold_testable(d).ok;
      if (args.filter == "ltt" && !is_ltt) continue;
      if (args.filter == "not-ltt" && is_ltt) continue;
    }
    out << "# dfa " << emitted << "\n" << ltt::serialize(d) << "\n";
    ++emitted;
  }
  std::cout << out.str();
  std::cerr << "emitted " << emitted << " automata after " << draws << " draws\n";
  return 0;
}

int cmd_witness(const WitnessArgs& args) {
  const auto t0 = Clock::now();
  ltt::ParsedDfa parsed;
  try {
    parsed = load_dfa(args.input, args.complete_with_sink);
  } catch (const ltt::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  const ltt::Dfa& d = parsed.dfa;
  if (!d.initial || !d.accepting) {
    std::cerr << "error: witness requires initial/accepting\n";
    return 1;
  }

  ltt::RunReport report;
  report.command = "witness";
  report.digest = ltt::dfa_digest(d);
  report.parse_ms = ms_since(t0);
  report.one_sided = true;

  ltt::WitnessSearch search = ltt::search_witness(d, args.kmax, args.lmax);
  report.found = search.found;
  report.skipped = search.skipped;
  report.total_ms = ms_since(t0);

  std::cout << ltt::report_to_json(report, d).dump(2) << "\n";
  if (report.found)
    std::cerr << "testable with k=" << report.found->first
              << " l=" << report.found->second << "\n";
  else
    std::cerr << "no witness within bounds (one-sided: proves nothing)\n";
  if (!report.found && !search.skipped.empty()) return 2;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"local threshold testability checkers for DFA transition graphs"};
  app.require_subcommand(1);

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "run testability checkers on a DFA file");
  check->add_option("--input", check_args.input, "DFA file")->required();
  check->add_option("--mode", check_args.mode, "ltt or lt")
      ->check(CLI::IsMember({"ltt", "lt"}));
  check->add_option("--algorithm", check_args.algorithm,
                    "graph, semigroup, direct (lt only), or all")
      ->check(CLI::IsMember({"graph", "semigroup", "direct", "all"}));
  check->add_flag("--complete-with-sink", check_args.complete_with_sink,
                  "complete a partial table with a sink state");
  check->add_option("--budget-elements", check_args.budget_elements,
                    "semigroup element budget");
  check->add_option("--workers", check_args.workers, "worker threads");
  check->add_flag("--json", check_args.json, "JSON report on stdout (default)");

  RandomArgs random_args;
  auto* random = app.add_subcommand("random", "emit seeded random DFA files");
  random->add_option("--states", random_args.states, "state count")->required();
  random->add_option("--letters", random_args.letters, "alphabet size")->required();
  random->add_option("--seed", random_args.seed, "generator seed");
  random->add_option("--count", random_args.count, "number of automata");
  random->add_option("--filter", random_args.filter, "none, ltt, or not-ltt")
      ->check(CLI::IsMember({"none", "ltt", "not-ltt"}));

  WitnessArgs witness_args;
  auto* witness =
      app.add_subcommand("witness", "search for an explicit (k,l) the language is testable for");
  witness->add_option("--input", witness_args.input, "DFA file")->required();
  witness->add_option("--kmax", witness_args.kmax, "maximum k");
  witness->add_option("--lmax", witness_args.lmax, "maximum l");
  witness->add_flag("--complete-with-sink", witness_args.complete_with_sink,
                    "complete a partial table with a sink state");
  witness->add_flag("--json", witness_args.json, "JSON report on stdout (default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (check->parsed()) {
    if (check_args.mode == "ltt" && check_args.algorithm == "direct") {
      std::cerr << "error: --algorithm direct applies to --mode lt only\n";
      return 1;
    }
    return cmd_check(check_args);
  }
  if (random->parsed()) return cmd_random(random_args);
  return cmd_witness(witness_args);
}
