#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "slpstr/progression.hpp"
#include "slpstr/slp.hpp"

namespace slpstr {

// Instrumentation of the table construction and of every window query, used
// by the structural-invariant tests and the scaling checks.
struct ApStats {
  std::atomic<std::uint64_t> cells_computed{0};
  std::atomic<std::uint64_t> general_cells{0};
  std::atomic<std::uint64_t> local_pm_calls{0};
  std::atomic<std::uint64_t> crawl_calls{0};
  std::atomic<std::uint64_t> intersections{0};
};

// Dense m x n table: cell (i, j) holds the occurrences of pattern symbol P_i
// in text symbol T_j that touch T_j's cut position, always a single
// progression (or Empty, or Undefined when |T_j| < |P_i|). Built column by
// column; each general cell costs exactly five window queries. Immutable once
// built; queries are read-only and safe to run concurrently.
class ApTable {
 public:
  static ApTable build(Slp pattern, Slp text);

  const Slp& pattern() const { return pattern_; }
  const Slp& text() const { return text_; }
  const std::vector<SymbolMeta>& pattern_meta() const { return pmeta_; }
  const std::vector<SymbolMeta>& text_meta() const { return tmeta_; }
  const Num& pattern_length() const { return pmeta_[static_cast<std::size_t>(pattern_.root())].length; }
  const Num& text_length() const { return tmeta_[static_cast<std::size_t>(text_.root())].length; }

  const ProgCell& cell(int i, int j) const {
    return cells_[static_cast<std::size_t>(j - 1) * static_cast<std::size_t>(pattern_.size()) +
                  static_cast<std::size_t>(i - 1)];
  }

  // All occurrences of P_i in T_j lying inside [lo, hi], reported as at most
  // two progressions. Requires hi - lo <= 3|P_i| (IntervalTooWideError).
  ProgList local_pm(int i, int j, const Num& lo, const Num& hi) const;

  // Whole-pattern queries against the whole text.
  bool decide() const;
  Num count() const;
  std::optional<Num> first_occurrence() const;
  bool check_at(const Num& pos) const;

  const ApStats& stats() const { return *stats_; }

 private:
  ApTable(Slp pattern, Slp text);

  ProgCell& cell_mut(int i, int j) {
    return cells_[static_cast<std::size_t>(j - 1) * static_cast<std::size_t>(pattern_.size()) +
                  static_cast<std::size_t>(i - 1)];
  }
  void build_cells();
  ProgCell terminal_pattern_cell(int i, int j) const;
  ProgCell general_cell(int i, int j);
  void crawl(int i, int j, const Num& lo, const Num& hi, const Num& offset,
             ProgList& out, std::uint64_t& calls) const;

  Slp pattern_;
  Slp text_;
  std::vector<SymbolMeta> pmeta_;
  std::vector<SymbolMeta> tmeta_;
  std::vector<bool> text_reachable_;
  std::vector<ProgCell> cells_;
  std::unique_ptr<ApStats> stats_;
};

// Generated strings equal? Length comparison plus one table decision.
bool equal_slp(const Slp& a, const Slp& b);

}  // namespace slpstr
