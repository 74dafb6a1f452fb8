#include "slpstr/oracle.hpp"

#include <array>

#include "slpstr/errors.hpp"

namespace slpstr::oracle {

namespace {

void check_cap(std::string_view s) {
  SLPSTR_CHECK(s.size() <= kMaxOracleLength, "oracle input exceeds the cap");
}

}  // namespace

std::vector<std::size_t> naive_occurrences(std::string_view pattern, std::string_view text) {
  check_cap(text);
  SLPSTR_CHECK(!pattern.empty(), "oracle pattern must be nonempty");
  std::vector<std::size_t> out;
  if (pattern.size() > text.size()) return out;
  for (std::size_t p = 0; p + pattern.size() <= text.size(); ++p) {
    bool match = true;
    for (std::size_t i = 0; i < pattern.size(); ++i) {
      if (text[p + i] != pattern[i]) {
        match = false;
        break;
      }
    }
    if (match) out.push_back(p);
  }
  return out;
}

std::vector<std::size_t> naive_borders(std::string_view text) {
  check_cap(text);
  std::vector<std::size_t> out;
  for (std::size_t u = 1; u + 1 <= text.size(); ++u) {
    bool border = true;
    for (std::size_t i = 0; i < u; ++i) {
      if (text[i] != text[text.size() - u + i]) {
        border = false;
        break;
      }
    }
    if (border) out.push_back(u);
  }
  return out;
}

std::vector<std::size_t> naive_periods(std::string_view text) {
  check_cap(text);
  std::vector<std::size_t> out;
  for (std::size_t w = 1; w <= text.size(); ++w) {
    bool period = true;
    for (std::size_t i = w; i < text.size(); ++i) {
      if (text[i] != text[i - w]) {
        period = false;
        break;
      }
    }
    if (period) out.push_back(w);
  }
  return out;
}

std::vector<std::size_t> naive_covers(std::string_view text) {
  check_cap(text);
  std::vector<std::size_t> out;
  std::vector<bool> covered;
  for (std::size_t c = 1; c <= text.size(); ++c) {
    covered.assign(text.size(), false);
    for (std::size_t p : naive_occurrences(text.substr(0, c), text)) {
      for (std::size_t i = p; i < p + c; ++i) covered[i] = true;
    }
    bool all = true;
    for (bool b : covered) {
      if (!b) {
        all = false;
        break;
      }
    }
    if (all) out.push_back(c);
  }
  return out;
}

std::set<std::string> naive_fingerprints(std::string_view text) {
  check_cap(text);
  std::set<std::string> out;
  for (std::size_t begin = 0; begin < text.size(); ++begin) {
    std::array<bool, 256> present{};
    for (std::size_t end = begin; end < text.size(); ++end) {
      unsigned char c = static_cast<unsigned char>(text[end]);
      if (present[c]) continue;  // same character set as the previous span
      present[c] = true;
      std::string fp;
      for (int b = 0; b < 256; ++b) {
        if (present[static_cast<std::size_t>(b)]) fp.push_back(static_cast<char>(b));
      }
      out.insert(std::move(fp));
    }
  }
  return out;
}

}  // namespace slpstr::oracle
