#pragma once

#include <string>
#include <utility>
#include <vector>

#include "slpstr/errors.hpp"
#include "slpstr/num.hpp"

namespace slpstr {

// Arithmetic progression {first + k*step : 0 <= k < count} in canonical form:
// count == 1 forces step == 0 and count >= 2 forces step >= 1, so two
// progressions denote the same set iff they compare equal.
struct Prog {
  Num first;
  Num step;
  Num count;

  Num last() const { return first + (count - 1) * step; }
  bool contains(const Num& x) const;
  bool operator==(const Prog&) const = default;
};

Prog make_prog(Num first, Num step, Num count);
Prog shift(const Prog& p, const Num& delta);

// Sorted progression list: last element of item k <= first element of item
// k+1; adjacent items may share at most that boundary element.
using ProgList = std::vector<Prog>;

// One table cell: Undefined when the text is shorter than the pattern, Empty
// when the text is long enough but nothing occurs, otherwise one progression
// of occurrence start positions.
class ProgCell {
 public:
  enum class Kind { Undefined, Empty, Prog };

  ProgCell() = default;

  static ProgCell undefined() { return ProgCell(Kind::Undefined); }
  static ProgCell empty() { return ProgCell(Kind::Empty); }
  static ProgCell of(Prog p) {
    ProgCell c(Kind::Prog);
    c.prog_ = std::move(p);
    return c;
  }
  static ProgCell single(Num x) { return of(make_prog(std::move(x), 0, 1)); }

  Kind kind() const { return kind_; }
  bool is_undefined() const { return kind_ == Kind::Undefined; }
  bool is_empty() const { return kind_ == Kind::Empty; }
  bool is_prog() const { return kind_ == Kind::Prog; }
  const Prog& prog() const {
    SLPSTR_CHECK(is_prog(), "cell has no progression");
    return prog_;
  }
  bool contains(const Num& x) const { return is_prog() && prog_.contains(x); }
  Num cardinality() const { return is_prog() ? prog_.count : Num(0); }

  bool operator==(const ProgCell&) const = default;

 private:
  explicit ProgCell(Kind k) : kind_(k) {}

  Kind kind_ = Kind::Empty;
  Prog prog_{0, 0, 1};  // fixed placeholder unless kind_ == Kind::Prog
};

// Elements x of p with lo <= x and x + occ_len <= hi. Undefined passes
// through unchanged.
ProgCell truncate(const ProgCell& p, const Num& lo, const Num& hi, const Num& occ_len);

// Set intersection. Neither argument may be Undefined. Costs O(log step)
// arithmetic operations (extended Euclid), independent of the counts.
ProgCell intersect(const ProgCell& a, const ProgCell& b);

// {pivot - x : x in p}; pivot must dominate every element.
ProgCell reflect(const ProgCell& p, const Num& pivot);

// Deduplicates shared boundary elements and fuses consecutive progressions
// whose gap matches both steps (singletons adopt any gap). Throws
// MalformedListError if the input is not sorted.
ProgList merge_sorted(const ProgList& list);

// Elements <= bound and elements > bound, in order.
std::pair<ProgCell, ProgCell> split_at_most(const Prog& p, const Num& bound);

std::string to_string(const Prog& p);
std::string to_string(const ProgCell& c);

}  // namespace slpstr
