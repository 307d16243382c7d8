#include "ltt/dfa.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace ltt {

const char* violation_name(Violation v) {
  switch (v) {
    case Violation::none: return "none";
    case Violation::empty_alphabet: return "empty alphabet";
    case Violation::duplicate_letter: return "duplicate letter";
    case Violation::bad_state_count: return "bad state count";
    case Violation::bad_table_size: return "bad table size";
    case Violation::missing_transition: return "missing transition";
    case Violation::state_out_of_range: return "state out of range";
    case Violation::initial_out_of_range: return "initial out of range";
    case Violation::accepting_out_of_range: return "accepting out of range";
    case Violation::pair_collapse: return "pair collapse";
    case Violation::tscc_inconsistent: return "tscc inconsistent";
    case Violation::tscc_mismatch: return "tscc mismatch";
    case Violation::lt_reachable_marked_node: return "lt reachable marked node";
    case Violation::lt_letter_condition: return "lt letter condition";
    case Violation::lt_element_condition: return "lt element condition";
    case Violation::not_aperiodic: return "not aperiodic";
    case Violation::identity_violation: return "identity violation";
    case Violation::profile_conflict: return "profile conflict";
  }
  return "unknown";
}

namespace {

std::vector<std::string> split_tokens(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_int(const std::string& tok, int& out) {
  const char* b = tok.data();
  const char* e = b + tok.size();
  auto [p, ec] = std::from_chars(b, e, out);
  return ec == std::errc() && p == e;
}

}  // namespace

ParsedDfa parse_dfa(std::string_view text, const ParseOptions& opts) {
  Dfa d;
  std::vector<std::string> state_names;
  std::unordered_map<std::string, int> letter_index;
  std::unordered_map<std::string, int> state_index;
  bool have_alphabet = false;
  bool have_states = false;
  bool count_mode = false;

  auto resolve_state = [&](const std::string& tok, int line) -> int {
    if (count_mode) {
      int v = 0;
      if (!parse_int(tok, v) || v < 0 || v >= d.n)
        throw ParseError(line, "unknown state '" + tok + "'");
      return v;
    }
    auto it = state_index.find(tok);
    if (it == state_index.end())
      throw ParseError(line, "unknown state '" + tok + "'");
    return it->second;
  };
  auto resolve_letter = [&](const std::string& tok, int line) -> int {
    auto it = letter_index.find(tok);
    if (it == letter_index.end())
      throw ParseError(line, "unknown letter '" + tok + "'");
    return it->second;
  };

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos
                                                 ? text.size() - pos
                                                 : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    auto tok = split_tokens(line);
    if (tok.empty()) continue;
    const std::string& kw = tok[0];

    if (kw == "alphabet") {
      if (have_alphabet) throw ParseError(line_no, "duplicate alphabet line");
      if (tok.size() < 2) throw ParseError(line_no, "alphabet needs at least one symbol");
      for (std::size_t i = 1; i < tok.size(); ++i) {
        if (!letter_index.emplace(tok[i], d.letters()).second)
          throw ParseError(line_no, "duplicate letter '" + tok[i] + "'");
        d.alphabet.push_back(tok[i]);
      }
      have_alphabet = true;
    } else if (kw == "states") {
      if (have_states) throw ParseError(line_no, "duplicate states line");
      if (tok.size() < 2) throw ParseError(line_no, "states needs a count or names");
      int count = 0;
      if (tok.size() == 2 && parse_int(tok[1], count)) {
        if (count < 1) throw ParseError(line_no, "state count must be at least 1");
        d.n = count;
        count_mode = true;
        for (int i = 0; i < count; ++i) state_names.push_back(std::to_string(i));
      } else {
        for (std::size_t i = 1; i < tok.size(); ++i) {
          if (!state_index.emplace(tok[i], d.n).second)
            throw ParseError(line_no, "duplicate state name '" + tok[i] + "'");
          state_names.push_back(tok[i]);
          ++d.n;
        }
      }
      have_states = true;
    } else if (kw == "initial") {
      if (!have_states) throw ParseError(line_no, "initial before states");
      if (tok.size() != 2) throw ParseError(line_no, "initial needs exactly one state");
      if (d.initial) throw ParseError(line_no, "duplicate initial line");
      d.initial = resolve_state(tok[1], line_no);
    } else if (kw == "accepting") {
      if (!have_states) throw ParseError(line_no, "accepting before states");
      if (d.accepting) throw ParseError(line_no, "duplicate accepting line");
      std::vector<int> acc;
      std::unordered_set<int> seen;
      for (std::size_t i = 1; i < tok.size(); ++i) {
        int s = resolve_state(tok[i], line_no);
        if (seen.insert(s).second) acc.push_back(s);
      }
      std::sort(acc.begin(), acc.end());
      d.accepting = std::move(acc);
    } else if (kw == "trans") {
      if (!have_alphabet || !have_states)
        throw ParseError(line_no, "trans before alphabet/states");
      if (tok.size() != 4) throw ParseError(line_no, "trans needs <src> <letter> <dst>");
      if (d.delta.empty())
        d.delta.assign(static_cast<std::size_t>(d.n) * d.letters(), Dfa::kMissing);
      int src = resolve_state(tok[1], line_no);
      int a = resolve_letter(tok[2], line_no);
      int dst = resolve_state(tok[3], line_no);
      if (d.next(src, a) != Dfa::kMissing)
        throw ParseError(line_no, "duplicate transition for state " + tok[1] +
                                      " letter " + tok[2]);
      d.next(src, a) = dst;
    } else {
      throw ParseError(line_no, "unknown directive '" + kw + "'");
    }
  }

  if (!have_alphabet) throw ParseError(0, "missing alphabet line");
  if (!have_states) throw ParseError(0, "missing states line");
  if (d.delta.empty())
    d.delta.assign(static_cast<std::size_t>(d.n) * d.letters(), Dfa::kMissing);

  bool partial = std::find(d.delta.begin(), d.delta.end(), Dfa::kMissing) != d.delta.end();
  if (partial) {
    if (!opts.complete_with_sink) {
      for (int s = 0; s < d.n; ++s)
        for (int a = 0; a < d.letters(); ++a)
          if (d.next(s, a) == Dfa::kMissing)
            throw ParseError(0, "missing transition for state " + state_names[s] +
                                    " letter " + d.alphabet[a]);
    } else {
      d = complete_with_sink(std::move(d));
      state_names.push_back("sink");
    }
  }
  return ParsedDfa{std::move(d), std::move(state_names)};
}

Dfa complete_with_sink(Dfa d) {
  const int m = d.letters();
  bool partial = std::find(d.delta.begin(), d.delta.end(), Dfa::kMissing) != d.delta.end();
  if (!partial) return d;
  const int sink = d.n;
  d.delta.resize(static_cast<std::size_t>(d.n + 1) * m, sink);
  ++d.n;
  for (int s = 0; s < d.n; ++s)
    for (int a = 0; a < m; ++a)
      if (d.next(s, a) == Dfa::kMissing) d.next(s, a) = sink;
  return d;
}

Verdict validate(const Dfa& d) {
  auto fail = [](Violation v, std::string note, std::vector<int> states = {}) {
    Witness w;
    w.note = std::move(note);
    w.states = std::move(states);
    return Verdict::fail(v, std::move(w));
  };
  if (d.n < 1) return fail(Violation::bad_state_count, "state count must be at least 1");
  if (d.alphabet.empty()) return fail(Violation::empty_alphabet, "empty alphabet");
  {
    std::unordered_set<std::string> seen;
    for (int a = 0; a < d.letters(); ++a)
      if (!seen.insert(d.alphabet[a]).second)
        return fail(Violation::duplicate_letter, "duplicate letter " + d.alphabet[a], {a});
  }
  if (d.delta.size() != static_cast<std::size_t>(d.n) * d.letters())
    return fail(Violation::bad_table_size, "transition table size mismatch");
  for (int s = 0; s < d.n; ++s)
    for (int a = 0; a < d.letters(); ++a) {
      int t = d.next(s, a);
      if (t == Dfa::kMissing)
        return fail(Violation::missing_transition, "missing transition", {s, a});
      if (t < 0 || t >= d.n)
        return fail(Violation::state_out_of_range, "state out of range", {s, a, t});
    }
  if (d.initial && (*d.initial < 0 || *d.initial >= d.n))
    return fail(Violation::initial_out_of_range, "initial out of range", {*d.initial});
  if (d.accepting)
    for (int s : *d.accepting)
      if (s < 0 || s >= d.n)
        return fail(Violation::accepting_out_of_range, "accepting out of range", {s});
  return Verdict::pass();
}

std::string serialize(const Dfa& d) {
  std::ostringstream out;
  out << "alphabet";
  for (const auto& sym : d.alphabet) out << ' ' << sym;
  out << "\nstates " << d.n << '\n';
  if (d.initial) out << "initial " << *d.initial << '\n';
  if (d.accepting) {
    out << "accepting";
    std::vector<int> acc = *d.accepting;
    std::sort(acc.begin(), acc.end());
    for (int s : acc) out << ' ' << s;
    out << '\n';
  }
  for (int s = 0; s < d.n; ++s)
    for (int a = 0; a < d.letters(); ++a)
      out << "trans " << s << ' ' << d.alphabet[a] << ' ' << d.next(s, a) << '\n';
  return out.str();
}

std::uint64_t dfa_digest(const Dfa& d) {
  std::string text = serialize(d);
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace ltt
