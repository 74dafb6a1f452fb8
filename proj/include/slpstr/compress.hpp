#pragma once

#include <string_view>

#include "slpstr/slp.hpp"

namespace slpstr {

// Repeated most-frequent-digram replacement, then a left-leaning chain over
// the remaining sequence. Ties pick the smallest symbol pair, so output is
// deterministic. Input must be nonempty.
Slp compress_digram_pairs(std::string_view text);

// LZ78 parse with one rule per phrase (phrase = previous phrase + one
// character), chained left to right.
Slp compress_lz78(std::string_view text);

}  // namespace slpstr
