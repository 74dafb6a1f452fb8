#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace slpstr::oracle {

// Reference implementations on plain expanded strings, used to cross-check
// every compressed algorithm. All are definitional scans on purpose: they
// must not share ideas (or bugs) with the compressed side.

inline constexpr std::size_t kMaxOracleLength = 1'000'000;

// Start positions p with text[p .. p+|pattern|) == pattern.
std::vector<std::size_t> naive_occurrences(std::string_view pattern, std::string_view text);

// Proper border lengths u in [1, |text|-1]: prefix of length u == suffix.
std::vector<std::size_t> naive_borders(std::string_view text);

// Period lengths w in [1, |text|]: text is a prefix of some power of its
// length-w prefix.
std::vector<std::size_t> naive_periods(std::string_view text);

// Cover lengths c in [1, |text|]: every character lies inside an occurrence
// of the length-c prefix.
std::vector<std::size_t> naive_covers(std::string_view text);

// Distinct character sets over all substrings, each rendered as a string of
// its characters in increasing byte order.
std::set<std::string> naive_fingerprints(std::string_view text);

}  // namespace slpstr::oracle
