#include "slpstr/fingerprints.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "slpstr/errors.hpp"

namespace slpstr {

int CharSet::popcount() const {
  int n = 0;
  for (std::uint64_t w : words) n += std::popcount(w);
  return n;
}

FingerprintAnalysis::FingerprintAnalysis(const Slp& text)
    : slp_(text),
      alpha_(alphabet(text)),
      char_index_(256, -1),
      reach_(reachable(text)),
      per_symbol_(static_cast<std::size_t>(text.size()) + 1) {
  for (int a = 0; a < static_cast<int>(alpha_.size()); ++a) {
    char_index_[static_cast<unsigned char>(alpha_[static_cast<std::size_t>(a)])] = a;
  }
  const std::size_t sigma = alpha_.size();
  for (int i = 1; i <= slp_.size(); ++i) {
    if (!reach_[static_cast<std::size_t>(i)]) continue;
    PerSymbol& ps = per_symbol_[static_cast<std::size_t>(i)];
    ps.first_pos.assign(sigma, Num(-1));
    ps.last_pos.assign(sigma, Num(-1));
    if (slp_.is_terminal(i)) {
      int a = char_index_[static_cast<unsigned char>(slp_.terminal_char(i))];
      ps.first_pos[static_cast<std::size_t>(a)] = 0;
      ps.last_pos[static_cast<std::size_t>(a)] = 0;
      ps.length = 1;
      continue;
    }
    const Concat& c = slp_.concat(i);
    const PerSymbol& l = per_symbol_[static_cast<std::size_t>(c.left)];
    const PerSymbol& r = per_symbol_[static_cast<std::size_t>(c.right)];
    ps.length = l.length + r.length;
    for (std::size_t a = 0; a < sigma; ++a) {
      ps.first_pos[a] = l.first_pos[a] >= 0
                            ? l.first_pos[a]
                            : (r.first_pos[a] >= 0 ? Num(l.length + r.first_pos[a]) : Num(-1));
      ps.last_pos[a] = r.last_pos[a] >= 0
                           ? Num(l.length + r.last_pos[a])
                           : (l.last_pos[a] >= 0 ? l.last_pos[a] : Num(-1));
    }
  }
}

FpChains FingerprintAnalysis::chains(int symbol) const {
  SLPSTR_CHECK(symbol >= 1 && symbol <= slp_.size() && reach_[static_cast<std::size_t>(symbol)],
               "chains of an unreachable symbol");
  const PerSymbol& ps = per_symbol_[static_cast<std::size_t>(symbol)];
  FpChains out;

  std::vector<std::pair<Num, int>> order;  // (position, alphabet index)
  for (std::size_t a = 0; a < ps.first_pos.size(); ++a) {
    if (ps.first_pos[a] >= 0) order.emplace_back(ps.first_pos[a], static_cast<int>(a));
  }
  std::sort(order.begin(), order.end());
  CharSet acc;
  for (const auto& [pos, a] : order) {
    acc.set(a);
    out.prefix.push_back({pos + 1, acc});  // first prefix length containing a
  }

  order.clear();
  for (std::size_t a = 0; a < ps.last_pos.size(); ++a) {
    if (ps.last_pos[a] >= 0) order.emplace_back(ps.length - ps.last_pos[a], static_cast<int>(a));
  }
  std::sort(order.begin(), order.end());
  acc = CharSet{};
  for (const auto& [boundary, a] : order) {
    acc.set(a);
    out.suffix.push_back({boundary, acc});
  }
  return out;
}

FingerprintTable FingerprintAnalysis::table() const {
  std::set<CharSet> found;
  std::vector<CharSet> left_suffixes, right_prefixes;
  for (int i = 1; i <= slp_.size(); ++i) {
    if (!reach_[static_cast<std::size_t>(i)]) continue;
    if (slp_.is_terminal(i)) {
      CharSet single;
      single.set(char_index_[static_cast<unsigned char>(slp_.terminal_char(i))]);
      found.insert(single);
      continue;
    }
    // Substrings fully inside a child are that child's business; here only
    // the cut-crossing ones, with both sides nonempty.
    const Concat& c = slp_.concat(i);
    FpChains lc = chains(c.left);
    FpChains rc = chains(c.right);
    left_suffixes.clear();
    for (const FpChainEntry& e : lc.suffix) left_suffixes.push_back(e.chars);
    right_prefixes.clear();
    for (const FpChainEntry& e : rc.prefix) right_prefixes.push_back(e.chars);
    for (const CharSet& ls : left_suffixes) {
      for (const CharSet& rp : right_prefixes) {
        found.insert(ls.united(rp));
      }
    }
  }
  FingerprintTable out;
  out.alpha = alpha_;
  out.sets.assign(found.begin(), found.end());
  return out;
}

std::vector<std::string> FingerprintTable::to_strings() const {
  std::vector<std::string> out;
  out.reserve(sets.size());
  for (const CharSet& s : sets) {
    std::string chars;
    for (int a = 0; a < static_cast<int>(alpha.size()); ++a) {
      if (s.test(a)) chars.push_back(alpha[static_cast<std::size_t>(a)]);
    }
    std::sort(chars.begin(), chars.end(),
              [](char x, char y) { return static_cast<unsigned char>(x) < static_cast<unsigned char>(y); });
    out.push_back(std::move(chars));
  }
  std::sort(out.begin(), out.end());
  return out;
}

FingerprintTable fingerprint_table(const Slp& text) {
  return FingerprintAnalysis(text).table();
}

}  // namespace slpstr
