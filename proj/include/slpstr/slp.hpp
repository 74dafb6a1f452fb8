#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "slpstr/errors.hpp"
#include "slpstr/num.hpp"

namespace slpstr {

struct Terminal {
  char ch = 0;
  bool operator==(const Terminal&) const = default;
};
struct Concat {
  int left = 0;
  int right = 0;
  bool operator==(const Concat&) const = default;
};
using Rule = std::variant<Terminal, Concat>;

// A straight-line program: rules X_i -> 'c' or X_i -> X_p X_q with p, q < i,
// plus a distinguished root. Generates exactly one nonempty string. Immutable
// after construction; safe to share across threads.
class Slp {
 public:
  Slp(std::vector<Rule> rules, int root);

  int size() const { return static_cast<int>(rules_.size()); }
  int root() const { return root_; }
  const Rule& rule(int i) const { return rules_[static_cast<std::size_t>(i) - 1]; }
  bool is_terminal(int i) const { return std::holds_alternative<Terminal>(rule(i)); }
  char terminal_char(int i) const { return std::get<Terminal>(rule(i)).ch; }
  const Concat& concat(int i) const { return std::get<Concat>(rule(i)); }

  bool operator==(const Slp&) const = default;

 private:
  std::vector<Rule> rules_;
  int root_;
};

// Per-symbol precomputation: generated length, cut position (left-part length
// for concatenations, 0 for terminals), first and last character.
struct SymbolMeta {
  Num length;
  Num cut;
  char first_char = 0;
  char last_char = 0;
};

// One pass in rule order; entry 0 is unused padding.
std::vector<SymbolMeta> analyze(const Slp& slp);

// Symbols reachable from the root; entry 0 unused.
std::vector<bool> reachable(const Slp& slp);

// Characters of terminal rules in first-appearance (rule-index) order.
std::vector<char> alphabet(const Slp& slp);

// Longest symbol chain from the root down to a terminal.
int derivation_depth(const Slp& slp);

// The generated string. Refuses with TooLongError (carrying the exact length)
// instead of attempting oversized expansion.
std::string expand(const Slp& slp, const Num& max_len);

// An SLP generating exactly the substring [start, end) of the generated
// string. Output has at most 4n + 2 rules for an n-rule input.
Slp substring_slp(const Slp& slp, const Num& start, const Num& end);

// Text format: '<index> -> '<char>'' or '<index> -> <index> <index>' lines,
// '#' comments, optional 'root <index>' line (default: highest index).
Slp parse_slp(std::string_view text);
std::string serialize_slp(const Slp& slp);

// Deterministic generator families.
Slp gen_doubling(int k, char c);          // c^(2^(k-1)), exactly k rules
Slp gen_fibonacci(int k);                 // k-th member of the ab-family
Slp gen_unary_run(const Num& len, char c);  // c^len, O(log len) rules

// Incremental rule-list builder used by generators and compressors. Runs of a
// repeated character are built once per length via a shared doubling ladder.
class SlpBuilder {
 public:
  int terminal(char c);
  int concat(int left, int right);
  // Either side may be 0 (absent); returns the other side in that case.
  int concat_opt(int left, int right);
  // Rule index for c^len; len == 0 yields 0 (absent).
  int run(char c, const Num& len);
  int size() const { return static_cast<int>(rules_.size()); }
  Slp finish(int root) && { return Slp(std::move(rules_), root); }

 private:
  std::vector<Rule> rules_;
  std::map<char, int> terminals_;
  std::map<char, std::vector<int>> ladders_;  // ladders_[c][i] generates c^(2^i)
  std::map<std::pair<char, Num>, int> runs_;
};

}  // namespace slpstr
