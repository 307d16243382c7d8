#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ltt {

/// A word over a DFA alphabet, stored as letter indices.
using Word = std::vector<int>;

/// Complete deterministic finite automaton.
///
/// States are dense indices 0..n-1. The transition table is stored row-major
/// as delta[state * |alphabet| + letter]. An entry of kMissing marks a hole
/// in a partial table; every checker requires a validated (complete) DFA,
/// holes are only legal on the way into complete_with_sink().
///
/// initial/accepting are optional: the testability checkers work on the bare
/// transition graph, only the language-level witness search needs them.
///
/// Values are immutable by convention after validate(); all operations in
/// this library treat them as read-only and are safe to run concurrently.
struct Dfa {
  static constexpr int kMissing = -1;

  int n = 0;
  std::vector<std::string> alphabet;
  std::vector<int> delta;
  std::optional<int> initial;
  std::optional<std::vector<int>> accepting;

  int letters() const { return static_cast<int>(alphabet.size()); }

  int next(int state, int letter) const {
    return delta[static_cast<std::size_t>(state) * alphabet.size() +
                 static_cast<std::size_t>(letter)];
  }

  int& next(int state, int letter) {
    return delta[static_cast<std::size_t>(state) * alphabet.size() +
                 static_cast<std::size_t>(letter)];
  }

  /// State reached from `state` by reading `w` left to right.
  int apply_word(int state, const Word& w) const {
    for (int a : w) state = next(state, a);
    return state;
  }

  bool is_accepting(int state) const {
    if (!accepting) return false;
    for (int s : *accepting)
      if (s == state) return true;
    return false;
  }

  bool operator==(const Dfa&) const = default;
};

enum class Violation {
  none,
  // validate()
  empty_alphabet,
  duplicate_letter,
  bad_state_count,
  bad_table_size,
  missing_transition,
  state_out_of_range,
  initial_out_of_range,
  accepting_out_of_range,
  // checkers
  pair_collapse,
  tscc_inconsistent,
  tscc_mismatch,
  lt_reachable_marked_node,
  lt_letter_condition,
  lt_element_condition,
  not_aperiodic,
  identity_violation,
  profile_conflict,
};

/// Structured evidence for a failed check. Field use depends on the
/// violation kind; each checker documents its layout. The contract is that
/// replaying the witness against the same DFA (walking the stored words,
/// recomputing the stored flags) reproduces the violation.
struct Witness {
  std::vector<int> states;
  std::vector<int> letters;
  std::vector<int> components;
  std::vector<Word> words;
  std::string note;
};

struct Verdict {
  bool ok = true;
  Violation reason = Violation::none;
  Witness witness;

  static Verdict pass() { return {}; }
  static Verdict fail(Violation reason, Witness w) {
    return Verdict{false, reason, std::move(w)};
  }
  explicit operator bool() const { return ok; }
};

const char* violation_name(Violation v);

struct ParseError : std::runtime_error {
  ParseError(int line_, const std::string& msg)
      : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ": " + msg
                                     : msg),
        line(line_) {}
  int line;  // 0 when the error is not tied to a single line
};

/// Thrown when a computation would exceed a configured budget
/// (graph memory, semigroup element count, profile state count).
struct CapacityError : std::runtime_error {
  CapacityError(const std::string& what_, std::size_t required_, std::size_t budget_)
      : std::runtime_error(what_ + " (required " + std::to_string(required_) +
                           ", budget " + std::to_string(budget_) + ")"),
        required(required_),
        budget(budget_) {}
  std::size_t required;
  std::size_t budget;
};

struct ParseOptions {
  bool complete_with_sink = false;
};

/// Parse result: the automaton plus the file-name of each dense state index.
struct ParsedDfa {
  Dfa dfa;
  std::vector<std::string> state_names;
};

/// Parses the line-oriented DFA format:
///
///   alphabet <sym> <sym> ...
///   states <n>                  (or: states <name> <name> ...)
///   initial <state>             (optional)
///   accepting <state> ...       (optional)
///   trans <src> <letter> <dst>  (one per line)
///
/// '#' starts a comment. State names are mapped to dense indices in
/// declaration order. Throws ParseError on syntax errors, unknown
/// state/letter references, duplicate transitions, and (unless
/// opts.complete_with_sink) missing transitions.
ParsedDfa parse_dfa(std::string_view text, const ParseOptions& opts = {});

/// If any transition is missing, appends one fresh sink state with all
/// self-loops and routes every hole to it; otherwise returns d unchanged.
Dfa complete_with_sink(Dfa d);

/// Checks all structural invariants; the witness names the first violation.
Verdict validate(const Dfa& d);

/// Deterministic serialization (states as indices, transitions sorted).
/// parse_dfa(serialize(d)).dfa == d for every validated d.
std::string serialize(const Dfa& d);

/// FNV-1a over serialize(d); used as the input digest in run reports.
std::uint64_t dfa_digest(const Dfa& d);

}  // namespace ltt
