#pragma once

#include <vector>

#include "slpstr/ap_table.hpp"
#include "slpstr/progression.hpp"
#include "slpstr/slp.hpp"

namespace slpstr {

// Lengths found in one dyadic interval [lo, hi] (after preferring smaller k
// at overlaps), as a single progression or Empty.
struct IntervalCell {
  int k = 0;
  Num lo;
  Num hi;
  ProgCell lengths;
};

// Border lengths of the generated string, grouped by dyadic interval with
// half-length L_k = ceil(t / 2^(k+1)); interval k holds lengths in
// [L_k, min(2 L_k, t-1)] clipped against smaller k. Excludes 0 and t.
struct BorderSet {
  Num text_length;
  std::vector<IntervalCell> intervals;  // ascending k, descending lengths

  Num largest() const;  // 0 when there is no proper border
};

// Period lengths: t - u over the borders u, plus the trivial period t.
struct PeriodSet {
  Num text_length;
  std::vector<IntervalCell> intervals;  // ascending k, ascending lengths

  Num shortest() const;
  // Canonical sorted progression list of every period length including t.
  ProgList as_sorted_progs() const;
  std::vector<Num> to_lengths(std::size_t cap) const;
};

// Cover lengths: within each interval the covering borders form a prefix of
// the border progression; plus the trivial cover t.
struct CoverSet {
  Num text_length;
  std::vector<IntervalCell> intervals;  // ascending k, descending lengths

  Num shortest() const;
  ProgList as_sorted_progs() const;
  std::vector<Num> to_lengths(std::size_t cap) const;
};

// Border lengths in [L_k, min(2 L_k, t-1)]: prefix occurrences near the end
// and suffix occurrences near the start, one window query each, intersected.
ProgCell borders_in_interval(const Slp& text, int k);

BorderSet all_borders(const Slp& text);
PeriodSet all_periods(const Slp& text);

// Is the generated string of `cover` a cover of the generated string of
// `text`? Checks, per reachable text symbol, that the cut neighbourhood is
// covered by local occurrences, plus the |C|-prefix and |C|-suffix of the
// whole text. Requires 1 <= |C| <= |T|.
bool cover_check(const Slp& cover, const Slp& text);

// Binary search with cover_check over each interval's border progression
// (covers are downward-closed among an interval's borders). Distinct
// intervals are processed in parallel.
CoverSet all_covers(const Slp& text);

}  // namespace slpstr
