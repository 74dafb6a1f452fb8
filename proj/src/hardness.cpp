#include "slpstr/hardness.hpp"

#include <utility>
#include <variant>

#include "slpstr/errors.hpp"

namespace slpstr {

SubsetSumInstance SubsetSumInstance::make(std::vector<Num> weights, Num target) {
  Num total = 0;
  for (const Num& w : weights) {
    if (w < 1) throw BadParamsError("weights must be positive");
    total += w;
  }
  if (target < 0 || target > total) {
    throw BadParamsError("target " + target.str() + " outside [0, " + total.str() + "]");
  }
  return SubsetSumInstance{std::move(weights), std::move(target)};
}

Num SubsetSumInstance::sum() const {
  Num total = 0;
  for (const Num& w : weights) total += w;
  return total;
}

// Doubling recursion over the weights: with S_0 = 1 0^s and U_0 = 1,
//   S_k = S_{k-1} 0^{w_k} U_{k-1} 0^{s - (w_1+..+w_k)}
//   U_k = S_{k-1} 0^{w_k} U_{k-1}
// S_k enumerates the blocks for all settings of the first k bit positions;
// appending 0^{w_k} shifts every block of the upper half by w_k.
Slp lohrey_text(const SubsetSumInstance& inst) {
  const Num s = inst.sum();
  SlpBuilder b;
  int one = b.terminal('1');
  int full = b.concat_opt(one, b.run('0', s));   // S_0
  int open = one;                                // U_0
  Num partial = 0;
  for (const Num& w : inst.weights) {
    partial += w;
    int shifted = b.concat_opt(full, b.run('0', w));
    int next_open = b.concat_opt(shifted, open);
    full = b.concat_opt(next_open, b.run('0', s - partial));
    open = next_open;
  }
  return std::move(b).finish(full);
}

Slp lohrey_pattern(const SubsetSumInstance& inst) {
  const Num s = inst.sum();
  SlpBuilder b;
  int block = b.concat_opt(b.run('0', inst.target),
                           b.concat_opt(b.terminal('1'), b.run('0', s - inst.target)));
  int power = block;
  for (int k = 0; k < inst.n(); ++k) power = b.concat(power, power);
  return std::move(b).finish(power);
}

Slp invert_bits(const Slp& slp) {
  std::vector<Rule> rules;
  rules.reserve(static_cast<std::size_t>(slp.size()));
  for (int i = 1; i <= slp.size(); ++i) {
    if (slp.is_terminal(i)) {
      char c = slp.terminal_char(i);
      if (c != '0' && c != '1') {
        throw BadParamsError("bit inversion needs a {0,1} alphabet");
      }
      rules.push_back(Terminal{c == '0' ? '1' : '0'});
    } else {
      rules.push_back(slp.rule(i));
    }
  }
  return Slp(std::move(rules), slp.root());
}

Num hamming_naive(const Slp& a, const Slp& b, const Num& max_len) {
  Num la = analyze(a)[static_cast<std::size_t>(a.root())].length;
  Num lb = analyze(b)[static_cast<std::size_t>(b.root())].length;
  if (la != lb) {
    throw LengthMismatchError("lengths differ: " + la.str() + " vs " + lb.str());
  }
  std::string sa = expand(a, max_len);
  std::string sb = expand(b, max_len);
  Num differ = 0;
  for (std::size_t i = 0; i < sa.size(); ++i) {
    if (sa[i] != sb[i]) ++differ;
  }
  return differ;
}

}  // namespace slpstr
