#pragma once

#include <cstddef>
#include <boost/multiprecision/cpp_int.hpp>

#include "slpstr/errors.hpp"

namespace slpstr {

// Positions, lengths and occurrence counts are unbounded integers: generated
// strings routinely have lengths like 2^60 that never fit machine words.
// Expression templates are off so that std::min/max and auto behave.
using Num = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;

// Floor/ceil division for b > 0 and any sign of a.
inline Num floor_div(const Num& a, const Num& b) {
  Num q = a / b;
  if (a % b != 0 && (a < 0) != (b < 0)) --q;
  return q;
}

inline Num ceil_div(const Num& a, const Num& b) {
  return floor_div(a + b - 1, b);
}

inline Num clamp0(Num a) { return a < 0 ? Num(0) : a; }

inline const Num& min_num(const Num& a, const Num& b) { return b < a ? b : a; }
inline const Num& max_num(const Num& a, const Num& b) { return a < b ? b : a; }

inline std::size_t to_size(const Num& n) {
  SLPSTR_CHECK(n >= 0 && n <= Num(SIZE_MAX), "value does not fit std::size_t");
  return static_cast<std::size_t>(n);
}

}  // namespace slpstr
