#include "slpstr/progression.hpp"

namespace slpstr {

namespace {

// g = gcd(a, b) and x, y with a*x + b*y = g; a, b > 0.
void extended_gcd(const Num& a, const Num& b, Num& g, Num& x, Num& y) {
  Num old_r = a, r = b;
  Num old_x = 1, cur_x = 0;
  Num old_y = 0, cur_y = 1;
  while (r != 0) {
    Num q = old_r / r;
    Num tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_x - q * cur_x;
    old_x = cur_x;
    cur_x = tmp;
    tmp = old_y - q * cur_y;
    old_y = cur_y;
    cur_y = tmp;
  }
  g = old_r;
  x = old_x;
  y = old_y;
}

}  // namespace

bool Prog::contains(const Num& x) const {
  if (x < first) return false;
  Num d = x - first;
  if (step == 0) return d == 0;
  return d % step == 0 && d / step < count;
}

Prog make_prog(Num first, Num step, Num count) {
  SLPSTR_CHECK(count >= 1, "progression needs at least one element");
  if (count == 1) step = 0;
  SLPSTR_CHECK(count == 1 || step >= 1, "multi-element progression needs step >= 1");
  return Prog{std::move(first), std::move(step), std::move(count)};
}

Prog shift(const Prog& p, const Num& delta) {
  return Prog{p.first + delta, p.step, p.count};
}

ProgCell truncate(const ProgCell& c, const Num& lo, const Num& hi, const Num& occ_len) {
  if (!c.is_prog()) return c;
  const Prog& p = c.prog();
  Num upper = hi - occ_len;  // largest admissible element
  if (upper < lo || p.last() < lo || p.first > upper) return ProgCell::empty();
  if (p.step == 0) return c;  // single element, already inside
  Num k_lo = p.first >= lo ? Num(0) : ceil_div(lo - p.first, p.step);
  Num k_hi = p.last() <= upper ? Num(p.count - 1) : floor_div(upper - p.first, p.step);
  if (k_lo > k_hi) return ProgCell::empty();
  return ProgCell::of(make_prog(p.first + k_lo * p.step, p.step, k_hi - k_lo + 1));
}

ProgCell intersect(const ProgCell& a, const ProgCell& b) {
  SLPSTR_CHECK(!a.is_undefined() && !b.is_undefined(), "intersect on Undefined cell");
  if (a.is_empty() || b.is_empty()) return ProgCell::empty();
  const Prog& pa = a.prog();
  const Prog& pb = b.prog();
  if (pa.count == 1) return pb.contains(pa.first) ? a : ProgCell::empty();
  if (pb.count == 1) return pa.contains(pb.first) ? b : ProgCell::empty();

  Num lo = max_num(pa.first, pb.first);
  Num hi = min_num(pa.last(), pb.last());
  if (lo > hi) return ProgCell::empty();

  Num g, x, y;
  extended_gcd(pa.step, pb.step, g, x, y);
  Num diff = pb.first - pa.first;
  if (diff % g != 0) return ProgCell::empty();
  Num mod = pb.step / g;
  Num lcm = pa.step / g * pb.step;
  // x inverts pa.step/g modulo mod; smallest common point >= pa.first.
  Num k = ((diff / g) % mod) * (x % mod) % mod;
  if (k < 0) k += mod;
  Num x0 = pa.first + k * pa.step;
  if (x0 < lo) x0 += ceil_div(lo - x0, lcm) * lcm;
  if (x0 > hi) return ProgCell::empty();
  return ProgCell::of(make_prog(x0, lcm, floor_div(hi - x0, lcm) + 1));
}

ProgCell reflect(const ProgCell& c, const Num& pivot) {
  if (!c.is_prog()) return c;
  const Prog& p = c.prog();
  SLPSTR_CHECK(pivot >= p.last(), "reflect pivot below an element");
  return ProgCell::of(make_prog(pivot - p.last(), p.step, p.count));
}

ProgList merge_sorted(const ProgList& list) {
  for (std::size_t k = 0; k + 1 < list.size(); ++k) {
    if (list[k].last() > list[k + 1].first) {
      throw MalformedListError("progression list not sorted at item " + std::to_string(k));
    }
  }
  ProgList out;
  out.reserve(list.size());
  for (Prog p : list) {
    if (!out.empty()) {
      Prog& cur = out.back();
      if (p.first == cur.last()) {  // shared boundary element
        if (p.count == 1) continue;
        p = make_prog(p.first + p.step, p.step, p.count - 1);
      }
      Num gap = p.first - cur.last();
      bool fuse = false;
      Num step;
      if (cur.count == 1 && p.count == 1) {
        fuse = true;
        step = gap;
      } else if (cur.count == 1) {
        fuse = gap == p.step;
        step = p.step;
      } else if (p.count == 1) {
        fuse = gap == cur.step;
        step = cur.step;
      } else {
        fuse = gap == cur.step && gap == p.step;
        step = gap;
      }
      if (fuse) {
        cur = make_prog(cur.first, step, cur.count + p.count);
        continue;
      }
    }
    out.push_back(p);
  }
  return out;
}

std::pair<ProgCell, ProgCell> split_at_most(const Prog& p, const Num& bound) {
  Num n_le;  // how many elements are <= bound
  if (p.first > bound) {
    n_le = 0;
  } else if (p.step == 0) {
    n_le = 1;
  } else {
    n_le = min_num(p.count, floor_div(bound - p.first, p.step) + 1);
  }
  ProgCell low = n_le == 0 ? ProgCell::empty()
                           : ProgCell::of(make_prog(p.first, p.step, n_le));
  ProgCell high = n_le == p.count
                      ? ProgCell::empty()
                      : ProgCell::of(make_prog(p.first + n_le * p.step, p.step, p.count - n_le));
  return {low, high};
}

std::string to_string(const Prog& p) {
  return p.first.str() + ":" + p.step.str() + ":" + p.count.str();
}

std::string to_string(const ProgCell& c) {
  switch (c.kind()) {
    case ProgCell::Kind::Undefined:
      return "?";
    case ProgCell::Kind::Empty:
      return "-";
    case ProgCell::Kind::Prog:
      return to_string(c.prog());
  }
  return "?";
}

}  // namespace slpstr
