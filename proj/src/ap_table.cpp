#include "slpstr/ap_table.hpp"

#include <utility>

namespace slpstr {

ApTable::ApTable(Slp pattern, Slp text)
    : pattern_(std::move(pattern)),
      text_(std::move(text)),
      pmeta_(analyze(pattern_)),
      tmeta_(analyze(text_)),
      text_reachable_(reachable(text_)),
      cells_(static_cast<std::size_t>(pattern_.size()) * static_cast<std::size_t>(text_.size())),
      stats_(std::make_unique<ApStats>()) {}

ApTable ApTable::build(Slp pattern, Slp text) {
  ApTable table(std::move(pattern), std::move(text));
  table.build_cells();
  return table;
}

void ApTable::build_cells() {
  for (int j = 1; j <= text_.size(); ++j) {
    for (int i = 1; i <= pattern_.size(); ++i) {
      const Num& plen = pmeta_[static_cast<std::size_t>(i)].length;
      const Num& tlen = tmeta_[static_cast<std::size_t>(j)].length;
      ProgCell result;
      if (plen > tlen) {
        result = ProgCell::undefined();
      } else if (plen == 1) {
        result = terminal_pattern_cell(i, j);
      } else {
        result = general_cell(i, j);
        stats_->general_cells.fetch_add(1, std::memory_order_relaxed);
      }
      cell_mut(i, j) = std::move(result);
      stats_->cells_computed.fetch_add(1, std::memory_order_relaxed);
    }
  }
}

// |P_i| == 1: the only starts touching the cut are cut-1 and cut, and those
// characters are known from the precomputed child metadata.
ProgCell ApTable::terminal_pattern_cell(int i, int j) const {
  char c = pattern_.terminal_char(i);
  if (text_.is_terminal(j)) {
    return text_.terminal_char(j) == c ? ProgCell::single(0) : ProgCell::empty();
  }
  const Concat& tc = text_.concat(j);
  const Num& cut = tmeta_[static_cast<std::size_t>(j)].cut;
  bool before = tmeta_[static_cast<std::size_t>(tc.left)].last_char == c;
  bool after = tmeta_[static_cast<std::size_t>(tc.right)].first_char == c;
  if (before && after) return ProgCell::of(make_prog(cut - 1, 1, 2));
  if (before) return ProgCell::single(cut - 1);
  if (after) return ProgCell::single(cut);
  return ProgCell::empty();
}

// P_i = left * right with |P_i| >= 2 and |T_j| >= |P_i|. Finds the starts of
// the longer part near the cut (one window query), then validates the shorter
// part: within each candidate progression the endings far enough from its
// last element all precede identical windows, so one exact check settles them
// all ("bulk"); the few endings near the last element ("tail") fall inside a
// single short window and are matched by one intersection. Exactly five
// window queries per cell, padding with zero-length windows when a candidate
// group is absent.
ProgCell ApTable::general_cell(int i, int j) {
  const Concat& pc = pattern_.concat(i);
  const Num& len_i = pmeta_[static_cast<std::size_t>(i)].length;
  const Num& cut = tmeta_[static_cast<std::size_t>(j)].cut;
  const Num& tlen = tmeta_[static_cast<std::size_t>(j)].length;

  const bool mirrored = pmeta_[static_cast<std::size_t>(pc.left)].length <
                        pmeta_[static_cast<std::size_t>(pc.right)].length;
  const int big = mirrored ? pc.right : pc.left;
  const int small = mirrored ? pc.left : pc.right;
  const Num& big_len = pmeta_[static_cast<std::size_t>(big)].length;
  const Num& small_len = pmeta_[static_cast<std::size_t>(small)].length;

  int queries = 0;
  auto query = [&](int sym, const Num& lo, const Num& hi) {
    ++queries;
    return local_pm(sym, j, lo, hi);
  };
  auto blank_query = [&](int sym) {
    ++queries;
    local_pm(sym, j, cut, cut);
  };

  ProgList pieces;

  ProgList cand =
      mirrored ? query(big, clamp0(cut - big_len), min_num(tlen, cut + small_len + big_len))
               : query(big, clamp0(cut - len_i), min_num(tlen, cut + big_len));

  for (std::size_t slot = 0; slot < 2; ++slot) {
    if (slot >= cand.size()) {
      blank_query(small);
      blank_query(small);
      continue;
    }
    if (!mirrored) {
      // Candidate whole-occurrence starts equal the big-part starts; the
      // small part must occur at each ending.
      Prog endings = shift(cand[slot], big_len);
      const Num e_last = endings.last();
      auto [bulk, tail] = split_at_most(endings, e_last - small_len);
      if (bulk.is_prog()) {
        const Num& e1 = bulk.prog().first;
        if (!query(small, e1, e1 + small_len).empty()) {
          pieces.push_back(shift(bulk.prog(), -big_len));
        }
      } else {
        blank_query(small);
      }
      ProgList near = query(small, clamp0(e_last - small_len), min_num(tlen, e_last + small_len));
      SLPSTR_CHECK(near.size() <= 1, "tail window must yield one progression");
      if (!near.empty() && tail.is_prog()) {
        stats_->intersections.fetch_add(1, std::memory_order_relaxed);
        ProgCell ok = intersect(tail, ProgCell::of(near[0]));
        if (ok.is_prog()) pieces.push_back(shift(ok.prog(), -big_len));
      }
    } else {
      // The longer part sits on the right; candidates are its starts q, and
      // the short part must end exactly at q.
      const Prog& starts = cand[slot];
      const Num q_first = starts.first;
      auto [tail, bulk] = split_at_most(starts, q_first + small_len - 1);
      ProgCell tail_ok = ProgCell::empty();
      ProgList near =
          query(small, clamp0(q_first - small_len), min_num(tlen, q_first + small_len));
      SLPSTR_CHECK(near.size() <= 1, "tail window must yield one progression");
      if (!near.empty() && tail.is_prog()) {
        stats_->intersections.fetch_add(1, std::memory_order_relaxed);
        tail_ok = intersect(tail, ProgCell::of(shift(near[0], small_len)));
      }
      if (tail_ok.is_prog()) pieces.push_back(shift(tail_ok.prog(), -small_len));
      if (bulk.is_prog()) {
        const Num& q_c = bulk.prog().first;
        if (!query(small, q_c - small_len, q_c).empty()) {
          pieces.push_back(shift(bulk.prog(), -small_len));
        }
      } else {
        blank_query(small);
      }
    }
  }

  SLPSTR_CHECK(queries == 5, "general cell must issue exactly five window queries");
  ProgList merged = merge_sorted(pieces);
  SLPSTR_CHECK(merged.size() <= 1, "cut-touching occurrences must form one progression");
  return merged.empty() ? ProgCell::empty() : ProgCell::of(merged[0]);
}

void ApTable::crawl(int i, int j, const Num& lo, const Num& hi, const Num& offset,
                    ProgList& out, std::uint64_t& calls) const {
  ++calls;
  const ProgCell& c = cell(i, j);
  if (c.is_undefined()) return;  // symbol shorter than the pattern
  const Num& plen = pmeta_[static_cast<std::size_t>(i)].length;
  const bool is_concat = !text_.is_terminal(j);
  if (is_concat) {
    const Num& cut = tmeta_[static_cast<std::size_t>(j)].cut;
    Num left_hi = min_num(hi, cut);
    if (left_hi - lo >= plen) {
      crawl(i, text_.concat(j).left, lo, left_hi, offset, out, calls);
    }
  }
  ProgCell center = truncate(c, lo, hi, plen);
  if (center.is_prog()) out.push_back(shift(center.prog(), offset));
  if (is_concat) {
    const Num& cut = tmeta_[static_cast<std::size_t>(j)].cut;
    Num right_lo = max_num(lo, cut);
    if (hi - right_lo >= plen) {
      crawl(i, text_.concat(j).right, right_lo - cut, hi - cut, offset + cut, out, calls);
    }
  }
}

ProgList ApTable::local_pm(int i, int j, const Num& lo, const Num& hi) const {
  stats_->local_pm_calls.fetch_add(1, std::memory_order_relaxed);
  const Num& plen = pmeta_[static_cast<std::size_t>(i)].length;
  SLPSTR_CHECK(lo >= 0 && lo <= hi && hi <= tmeta_[static_cast<std::size_t>(j)].length,
               "window outside the text symbol");
  if (hi - lo > 3 * plen) {
    throw IntervalTooWideError("window of length " + Num(hi - lo).str() +
                               " exceeds three pattern lengths");
  }
  ProgList collected;
  std::uint64_t calls = 0;
  if (hi - lo >= plen) crawl(i, j, lo, hi, 0, collected, calls);
  stats_->crawl_calls.fetch_add(calls, std::memory_order_relaxed);
  SLPSTR_CHECK(calls <= 3 * static_cast<std::uint64_t>(j), "crawl recursion exceeded the 3j bound");
  ProgList merged = merge_sorted(collected);
  SLPSTR_CHECK(merged.size() <= 2, "window query produced more than two progressions");
  return merged;
}

bool ApTable::decide() const {
  for (int j = 1; j <= text_.size(); ++j) {
    if (text_reachable_[static_cast<std::size_t>(j)] && cell(pattern_.root(), j).is_prog()) {
      return true;
    }
  }
  return false;
}

Num ApTable::count() const {
  const int pr = pattern_.root();
  const Num& plen = pattern_length();
  std::vector<Num> memo(tmeta_.size());
  for (int j = 1; j <= text_.size(); ++j) {
    if (!text_reachable_[static_cast<std::size_t>(j)]) continue;
    const ProgCell& cl = cell(pr, j);
    Num total;
    if (text_.is_terminal(j)) {
      total = cl.cardinality();
    } else {
      const Concat& tc = text_.concat(j);
      const Num& cut = tmeta_[static_cast<std::size_t>(j)].cut;
      total = memo[static_cast<std::size_t>(tc.left)] + memo[static_cast<std::size_t>(tc.right)];
      // Strictly cut-straddling starts; an occurrence ending exactly at the
      // cut belongs to the left child, one starting at it to the right child.
      total += truncate(cl, cut - plen + 1, cut + plen - 1, plen).cardinality();
    }
    memo[static_cast<std::size_t>(j)] = std::move(total);
  }
  return memo[static_cast<std::size_t>(text_.root())];
}

std::optional<Num> ApTable::first_occurrence() const {
  const int pr = pattern_.root();
  std::vector<std::optional<Num>> memo(tmeta_.size());
  auto consider = [](std::optional<Num>& best, Num candidate) {
    if (!best || candidate < *best) best = std::move(candidate);
  };
  for (int j = 1; j <= text_.size(); ++j) {
    if (!text_reachable_[static_cast<std::size_t>(j)]) continue;
    std::optional<Num> best;
    const ProgCell& cl = cell(pr, j);
    if (cl.is_prog()) best = cl.prog().first;
    if (!text_.is_terminal(j)) {
      const Concat& tc = text_.concat(j);
      const Num& cut = tmeta_[static_cast<std::size_t>(j)].cut;
      if (const auto& l = memo[static_cast<std::size_t>(tc.left)]) consider(best, *l);
      if (const auto& r = memo[static_cast<std::size_t>(tc.right)]) consider(best, cut + *r);
    }
    memo[static_cast<std::size_t>(j)] = std::move(best);
  }
  return memo[static_cast<std::size_t>(text_.root())];
}

bool ApTable::check_at(const Num& pos) const {
  const Num& plen = pattern_length();
  if (pos < 0 || pos + plen > text_length()) return false;
  int j = text_.root();
  Num p = pos;
  while (true) {
    const Num& cut = tmeta_[static_cast<std::size_t>(j)].cut;
    if (p <= cut && cut <= p + plen) {
      const ProgCell& cl = cell(pattern_.root(), j);
      SLPSTR_CHECK(!cl.is_undefined(), "descent reached an undersized symbol");
      return cl.contains(p);
    }
    const Concat& tc = text_.concat(j);  // terminals always pass the touch test
    if (p + plen < cut) {
      j = tc.left;
    } else {
      p -= cut;
      j = tc.right;
    }
  }
}

bool equal_slp(const Slp& a, const Slp& b) {
  auto am = analyze(a);
  auto bm = analyze(b);
  if (am[static_cast<std::size_t>(a.root())].length !=
      bm[static_cast<std::size_t>(b.root())].length) {
    return false;
  }
  return ApTable::build(a, b).decide();
}

}  // namespace slpstr
