#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "slpstr/num.hpp"
#include "slpstr/slp.hpp"

namespace slpstr {

// Character set of a substring, as a bitset over alphabet indices.
struct CharSet {
  std::array<std::uint64_t, 4> words{};

  void set(int idx) { words[static_cast<std::size_t>(idx >> 6)] |= std::uint64_t(1) << (idx & 63); }
  bool test(int idx) const {
    return (words[static_cast<std::size_t>(idx >> 6)] >> (idx & 63)) & 1;
  }
  CharSet united(const CharSet& other) const {
    CharSet out;
    for (std::size_t w = 0; w < words.size(); ++w) out.words[w] = words[w] | other.words[w];
    return out;
  }
  int popcount() const;
  bool operator==(const CharSet&) const = default;
  bool operator<(const CharSet& other) const { return words < other.words; }
};

struct FpChainEntry {
  Num boundary;  // smallest prefix (suffix) length realizing the set
  CharSet chars;
};

// Prefix and suffix fingerprint chains of one symbol: strictly increasing in
// both boundary and set inclusion, at most |alphabet| entries each.
struct FpChains {
  std::vector<FpChainEntry> prefix;
  std::vector<FpChainEntry> suffix;
};

struct FingerprintTable {
  std::vector<char> alpha;     // alphabet index -> character
  std::vector<CharSet> sets;   // deduplicated, sorted canonically

  // Each set as its characters in increasing byte order; list sorted
  // lexicographically.
  std::vector<std::string> to_strings() const;
};

// Bottom-up pass over the reachable symbols: per-character first and last
// occurrence positions combine in O(|alphabet|) per concatenation, and each
// concatenation contributes the unions of its left suffix chain with its
// right prefix chain (the fingerprints of its cut-crossing substrings).
class FingerprintAnalysis {
 public:
  explicit FingerprintAnalysis(const Slp& text);

  const std::vector<char>& alpha() const { return alpha_; }
  FpChains chains(int symbol) const;
  FingerprintTable table() const;

 private:
  struct PerSymbol {
    std::vector<Num> first_pos;  // position of first occurrence, -1 if absent
    std::vector<Num> last_pos;
    Num length;
  };

  const Slp& slp_;
  std::vector<char> alpha_;
  std::vector<int> char_index_;
  std::vector<bool> reach_;
  std::vector<PerSymbol> per_symbol_;
};

// The set of character sets of all substrings of the generated string.
FingerprintTable fingerprint_table(const Slp& text);

}  // namespace slpstr
