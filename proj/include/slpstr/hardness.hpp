#pragma once

#include <vector>

#include "slpstr/num.hpp"
#include "slpstr/slp.hpp"

namespace slpstr {

// A subset-sum instance: positive weights and a target not exceeding their
// sum (larger targets have no encoding with nonnegative runs and are
// rejected up front).
struct SubsetSumInstance {
  std::vector<Num> weights;
  Num target;

  static SubsetSumInstance make(std::vector<Num> weights, Num target);
  Num sum() const;
  int n() const { return static_cast<int>(weights.size()); }
};

// Counter string over {0,1}: the concatenation over all n-bit vectors x
// (ascending counter, last weight most significant) of the block
// 0^(x.w) 1 0^(s - x.w). Length 2^n * (s+1), O(n log s) rules.
Slp lohrey_text(const SubsetSumInstance& inst);

// (0^target 1 0^(s-target)) repeated 2^n times by doubling.
Slp lohrey_pattern(const SubsetSumInstance& inst);

// Swaps the '0' and '1' terminals; any other terminal is rejected.
Slp invert_bits(const Slp& slp);

// Expands both inputs (refusing past max_len) and counts differing
// positions. The inputs must generate equal-length strings.
Num hamming_naive(const Slp& a, const Slp& b, const Num& max_len);

}  // namespace slpstr
