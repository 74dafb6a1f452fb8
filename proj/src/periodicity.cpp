#include "slpstr/periodicity.hpp"

#include <algorithm>
#include <exception>
#include <utility>

namespace slpstr {

namespace {

struct IntervalPlan {
  int k = 0;
  Num half;     // L_k = ceil(t / 2^(k+1))
  Num hi_eff;   // upper bound after preferring smaller k at overlaps
};

// Dyadic interval plan covering every candidate length in [1, t-1].
std::vector<IntervalPlan> plan_intervals(const Num& t) {
  std::vector<IntervalPlan> plan;
  for (int k = 0;; ++k) {
    Num half = ceil_div(t, Num(1) << static_cast<unsigned>(k + 1));
    Num hi = min_num(2 * half, t - 1);
    if (!plan.empty()) hi = min_num(hi, plan.back().half - 1);
    if (hi < half) break;  // the remaining intervals are empty
    plan.push_back({k, half, hi});
    if (half == 1) break;
  }
  return plan;
}

// Runs a loop body over [0, n) in parallel, propagating the first exception.
template <typename Fn>
void parallel_for(int n, Fn&& body) {
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i) {
    try {
      body(i);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

// Single progression of all border lengths in [half, hi]: positions of the
// half-length prefix near the end give candidate lengths, positions of the
// half-length suffix near the start give second candidates, and for lengths
// up to twice the probe the two conditions together are exact.
ProgCell border_probe(const Slp& text, const Num& t, const Num& half, const Num& hi) {
  Slp prefix = substring_slp(text, 0, half);
  ApTable near_end = ApTable::build(std::move(prefix), text);
  ProgList occ1 = near_end.local_pm(near_end.pattern().root(), near_end.text().root(),
                                    clamp0(t - 2 * half), t);
  SLPSTR_CHECK(occ1.size() <= 1, "prefix probe occurrences must form one progression");
  ProgCell candidates =
      occ1.empty() ? ProgCell::empty() : reflect(ProgCell::of(occ1[0]), t);

  Slp suffix = substring_slp(text, t - half, t);
  ApTable near_start = ApTable::build(std::move(suffix), text);
  ProgList occ2 = near_start.local_pm(near_start.pattern().root(), near_start.text().root(),
                                      0, min_num(t, 2 * half));
  SLPSTR_CHECK(occ2.size() <= 1, "suffix probe occurrences must form one progression");
  ProgCell second = occ2.empty() ? ProgCell::empty()
                                 : ProgCell::of(shift(occ2[0], half));

  return truncate(intersect(candidates, second), half, hi, 0);
}

std::vector<Num> lengths_from_progs(const ProgList& progs, std::size_t cap) {
  Num total = 0;
  for (const Prog& p : progs) total += p.count;
  SLPSTR_CHECK(total <= Num(cap), "length set too large to enumerate");
  std::vector<Num> out;
  out.reserve(to_size(total));
  for (const Prog& p : progs) {
    Num x = p.first;
    for (Num i = 0; i < p.count; ++i, x += p.step) out.push_back(x);
  }
  return out;
}

}  // namespace

Num BorderSet::largest() const {
  for (const IntervalCell& ic : intervals) {  // ascending k holds the largest lengths first
    if (ic.lengths.is_prog()) return ic.lengths.prog().last();
  }
  return 0;
}

Num PeriodSet::shortest() const {
  for (const IntervalCell& ic : intervals) {
    if (ic.lengths.is_prog()) return ic.lengths.prog().first;
  }
  return text_length;
}

ProgList PeriodSet::as_sorted_progs() const {
  ProgList items;
  for (const IntervalCell& ic : intervals) {
    if (ic.lengths.is_prog()) items.push_back(ic.lengths.prog());
  }
  items.push_back(make_prog(text_length, 0, 1));
  return merge_sorted(items);
}

std::vector<Num> PeriodSet::to_lengths(std::size_t cap) const {
  return lengths_from_progs(as_sorted_progs(), cap);
}

Num CoverSet::shortest() const {
  for (auto it = intervals.rbegin(); it != intervals.rend(); ++it) {
    if (it->lengths.is_prog()) return it->lengths.prog().first;
  }
  return text_length;
}

ProgList CoverSet::as_sorted_progs() const {
  ProgList items;
  for (auto it = intervals.rbegin(); it != intervals.rend(); ++it) {
    if (it->lengths.is_prog()) items.push_back(it->lengths.prog());
  }
  items.push_back(make_prog(text_length, 0, 1));
  return merge_sorted(items);
}

std::vector<Num> CoverSet::to_lengths(std::size_t cap) const {
  return lengths_from_progs(as_sorted_progs(), cap);
}

ProgCell borders_in_interval(const Slp& text, int k) {
  if (k < 0) throw BadParamsError("interval index must be >= 0");
  auto meta = analyze(text);
  const Num& t = meta[static_cast<std::size_t>(text.root())].length;
  Num half = ceil_div(t, Num(1) << static_cast<unsigned>(k + 1));
  if (half < 1) throw BadParamsError("interval below one character");
  Num hi = min_num(2 * half, t - 1);
  if (hi < half) return ProgCell::empty();
  return border_probe(text, t, half, hi);
}

BorderSet all_borders(const Slp& text) {
  auto meta = analyze(text);
  const Num t = meta[static_cast<std::size_t>(text.root())].length;
  auto plan = plan_intervals(t);
  BorderSet out{t, std::vector<IntervalCell>(plan.size())};
  parallel_for(static_cast<int>(plan.size()), [&](int idx) {
    const IntervalPlan& p = plan[static_cast<std::size_t>(idx)];
    out.intervals[static_cast<std::size_t>(idx)] =
        IntervalCell{p.k, p.half, p.hi_eff, border_probe(text, t, p.half, p.hi_eff)};
  });
  return out;
}

PeriodSet all_periods(const Slp& text) {
  BorderSet borders = all_borders(text);
  PeriodSet out{borders.text_length, {}};
  out.intervals.reserve(borders.intervals.size());
  for (const IntervalCell& ic : borders.intervals) {
    out.intervals.push_back(IntervalCell{ic.k, borders.text_length - ic.hi,
                                         borders.text_length - ic.lo,
                                         reflect(ic.lengths, borders.text_length)});
  }
  return out;
}

namespace {

// Character intervals [start, end) covered by length-c occurrences from the
// progressions, restricted to [window_lo, window_hi).
void add_covered(const ProgList& occs, const Num& c, const Num& window_lo,
                 const Num& window_hi, std::vector<std::pair<Num, Num>>& out) {
  for (const Prog& p : occs) {
    if (p.step == 0 || p.step <= c) {
      out.emplace_back(p.first, p.last() + c);  // gaps close: contiguous block
      continue;
    }
    // Isolated chunks; only a bounded handful can meet the window.
    Num k_lo = p.first + c > window_lo ? Num(0) : ceil_div(window_lo - c - p.first + 1, p.step);
    if (p.first >= window_hi) continue;
    Num k_hi = min_num(p.count - 1, floor_div(window_hi - 1 - p.first, p.step));
    for (Num k = max_num(k_lo, Num(0)); k <= k_hi; ++k) {
      Num s = p.first + k * p.step;
      out.emplace_back(s, s + c);
    }
  }
}

bool covers_window(std::vector<std::pair<Num, Num>>& pieces, const Num& lo, const Num& hi) {
  std::sort(pieces.begin(), pieces.end());
  Num reached = lo;
  for (const auto& [s, e] : pieces) {
    if (s > reached) return false;
    if (e > reached) reached = e;
    if (reached >= hi) return true;
  }
  return reached >= hi;
}

}  // namespace

bool cover_check(const Slp& cover, const Slp& text) {
  ApTable table = ApTable::build(cover, text);
  const Num& c = table.pattern_length();
  const Num& t = table.text_length();
  if (c < 1 || c > t) throw BadParamsError("cover length must be within the text length");
  const int cr = table.pattern().root();
  const int tr = table.text().root();
  auto reach = reachable(table.text());
  const auto& tmeta = table.text_meta();

  std::vector<std::pair<Num, Num>> pieces;
  auto window_covered = [&](int j, const Num& lo, const Num& hi, const Num& check_lo,
                            const Num& check_hi) {
    pieces.clear();
    add_covered(table.local_pm(cr, j, lo, hi), c, check_lo, check_hi, pieces);
    return covers_window(pieces, check_lo, check_hi);
  };

  for (int j = 1; j <= table.text().size(); ++j) {
    if (!reach[static_cast<std::size_t>(j)] || table.text().is_terminal(j)) continue;
    const Num& len = tmeta[static_cast<std::size_t>(j)].length;
    const Num& cut = tmeta[static_cast<std::size_t>(j)].cut;
    // Characters near the cut but not near the symbol's own ends; the ends
    // are re-examined inside every ancestor and by the whole-text step.
    Num lo = max_num(c, cut - c);
    Num hi = min_num(len - c, cut + c);
    if (lo >= hi) continue;
    pieces.clear();
    add_covered(table.local_pm(cr, j, clamp0(cut - 2 * c), min_num(len, cut + c)), c, lo, hi,
                pieces);
    add_covered(table.local_pm(cr, j, clamp0(cut - c), min_num(len, cut + 2 * c)), c, lo, hi,
                pieces);
    if (!covers_window(pieces, lo, hi)) return false;
  }

  if (!window_covered(tr, 0, min_num(t, 2 * c), 0, c)) return false;
  if (!window_covered(tr, clamp0(t - 2 * c), t, t - c, t)) return false;
  return true;
}

CoverSet all_covers(const Slp& text) {
  BorderSet borders = all_borders(text);
  CoverSet out{borders.text_length, std::vector<IntervalCell>(borders.intervals.size())};
  parallel_for(static_cast<int>(borders.intervals.size()), [&](int idx) {
    const IntervalCell& bi = borders.intervals[static_cast<std::size_t>(idx)];
    IntervalCell ci{bi.k, bi.lo, bi.hi, ProgCell::empty()};
    if (bi.lengths.is_prog()) {
      const Prog& p = bi.lengths.prog();
      auto passes = [&](const Num& element) {
        return cover_check(substring_slp(text, 0, p.first + element * p.step), text);
      };
      if (passes(0)) {
        // Covers are downward-closed among this interval's borders: find the
        // largest passing element by binary search.
        Num lo = 0;
        Num hi = p.count - 1;
        if (hi > 0 && passes(hi)) {
          lo = hi;
        } else {
          while (hi - lo > 1) {
            Num mid = (lo + hi) / 2;
            (passes(mid) ? lo : hi) = mid;
          }
        }
        ci.lengths = ProgCell::of(make_prog(p.first, p.step, lo + 1));
      }
    }
    out.intervals[static_cast<std::size_t>(idx)] = std::move(ci);
  });
  return out;
}

}  // namespace slpstr
