#include "slpstr/compress.hpp"

#include <map>
#include <utility>
#include <vector>

#include "slpstr/errors.hpp"

namespace slpstr {

Slp compress_digram_pairs(std::string_view text) {
  if (text.empty()) throw BadParamsError("cannot compress an empty string");
  SlpBuilder b;
  std::vector<int> seq;
  seq.reserve(text.size());
  for (char c : text) seq.push_back(b.terminal(c));

  while (seq.size() > 1) {
    std::map<std::pair<int, int>, std::size_t> freq;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
      ++freq[{seq[i], seq[i + 1]}];
    }
    std::pair<int, int> best{};
    std::size_t best_count = 0;
    for (const auto& [digram, count] : freq) {  // map order breaks ties low
      if (count > best_count) {
        best = digram;
        best_count = count;
      }
    }
    if (best_count < 2) break;
    int rule = b.concat(best.first, best.second);
    std::vector<int> next;
    next.reserve(seq.size());
    for (std::size_t i = 0; i < seq.size();) {
      if (i + 1 < seq.size() && seq[i] == best.first && seq[i + 1] == best.second) {
        next.push_back(rule);
        i += 2;
      } else {
        next.push_back(seq[i]);
        ++i;
      }
    }
    seq = std::move(next);
  }

  int root = seq[0];
  for (std::size_t i = 1; i < seq.size(); ++i) root = b.concat(root, seq[i]);
  return std::move(b).finish(root);
}

Slp compress_lz78(std::string_view text) {
  if (text.empty()) throw BadParamsError("cannot compress an empty string");
  SlpBuilder b;
  std::map<std::pair<int, char>, int> trie;  // (phrase id, char) -> phrase id
  std::vector<int> phrase_rule{0};           // phrase id -> rule index; 0 = empty phrase
  std::vector<int> seq;

  int cur = 0;
  for (char c : text) {
    auto it = trie.find({cur, c});
    if (it != trie.end()) {
      cur = it->second;
      continue;
    }
    int rule = cur == 0 ? b.terminal(c) : b.concat(phrase_rule[static_cast<std::size_t>(cur)], b.terminal(c));
    phrase_rule.push_back(rule);
    trie.emplace(std::make_pair(cur, c), static_cast<int>(phrase_rule.size()) - 1);
    seq.push_back(rule);
    cur = 0;
  }
  if (cur != 0) seq.push_back(phrase_rule[static_cast<std::size_t>(cur)]);

  int root = seq[0];
  for (std::size_t i = 1; i < seq.size(); ++i) root = b.concat(root, seq[i]);
  return std::move(b).finish(root);
}

}  // namespace slpstr
