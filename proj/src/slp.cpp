#include "slpstr/slp.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace slpstr {

Slp::Slp(std::vector<Rule> rules, int root) : rules_(std::move(rules)), root_(root) {
  if (rules_.empty()) throw SyntaxError("grammar has no rules");
  for (int i = 1; i <= size(); ++i) {
    if (const auto* c = std::get_if<Concat>(&rule(i))) {
      if (c->left < 1 || c->right < 1 || c->left >= i || c->right >= i) {
        throw ForwardReferenceError("rule " + std::to_string(i) +
                                    " must reference smaller rule indices");
      }
    }
  }
  if (root_ < 1 || root_ > size()) {
    throw MissingRootError("root index " + std::to_string(root_) + " is not a rule");
  }
}

std::vector<SymbolMeta> analyze(const Slp& slp) {
  std::vector<SymbolMeta> meta(static_cast<std::size_t>(slp.size()) + 1);
  for (int i = 1; i <= slp.size(); ++i) {
    SymbolMeta& m = meta[static_cast<std::size_t>(i)];
    if (slp.is_terminal(i)) {
      m.length = 1;
      m.cut = 0;
      m.first_char = m.last_char = slp.terminal_char(i);
    } else {
      const Concat& c = slp.concat(i);
      const SymbolMeta& l = meta[static_cast<std::size_t>(c.left)];
      const SymbolMeta& r = meta[static_cast<std::size_t>(c.right)];
      m.length = l.length + r.length;
      m.cut = l.length;
      m.first_char = l.first_char;
      m.last_char = r.last_char;
    }
  }
  return meta;
}

std::vector<bool> reachable(const Slp& slp) {
  std::vector<bool> seen(static_cast<std::size_t>(slp.size()) + 1, false);
  std::vector<int> stack{slp.root()};
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    if (seen[static_cast<std::size_t>(i)]) continue;
    seen[static_cast<std::size_t>(i)] = true;
    if (!slp.is_terminal(i)) {
      stack.push_back(slp.concat(i).left);
      stack.push_back(slp.concat(i).right);
    }
  }
  return seen;
}

std::vector<char> alphabet(const Slp& slp) {
  std::vector<char> alpha;
  for (int i = 1; i <= slp.size(); ++i) {
    if (!slp.is_terminal(i)) continue;
    char c = slp.terminal_char(i);
    if (std::find(alpha.begin(), alpha.end(), c) == alpha.end()) alpha.push_back(c);
  }
  return alpha;
}

int derivation_depth(const Slp& slp) {
  std::vector<int> depth(static_cast<std::size_t>(slp.size()) + 1, 1);
  for (int i = 1; i <= slp.size(); ++i) {
    if (!slp.is_terminal(i)) {
      const Concat& c = slp.concat(i);
      depth[static_cast<std::size_t>(i)] =
          1 + std::max(depth[static_cast<std::size_t>(c.left)],
                       depth[static_cast<std::size_t>(c.right)]);
    }
  }
  return depth[static_cast<std::size_t>(slp.root())];
}

std::string expand(const Slp& slp, const Num& max_len) {
  Num len = analyze(slp)[static_cast<std::size_t>(slp.root())].length;
  if (len > max_len) {
    throw TooLongError("generated string has length " + len.str() +
                           " exceeding the expansion bound " + max_len.str(),
                       len.str());
  }
  std::string out;
  out.reserve(to_size(len));
  std::vector<int> stack{slp.root()};
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    if (slp.is_terminal(i)) {
      out.push_back(slp.terminal_char(i));
    } else {
      stack.push_back(slp.concat(i).right);
      stack.push_back(slp.concat(i).left);
    }
  }
  return out;
}

namespace {

// Appends rules generating the suffix of `sym` from position `from`; at most
// one new rule per descent level.
int build_suffix(const Slp& slp, const std::vector<SymbolMeta>& meta,
                 std::vector<Rule>& rules, int sym, Num from) {
  while (true) {
    if (from == 0) return sym;
    SLPSTR_CHECK(!slp.is_terminal(sym), "suffix descent hit a terminal");
    const Concat& c = slp.concat(sym);
    const Num& cut = meta[static_cast<std::size_t>(sym)].cut;
    if (from >= cut) {
      sym = c.right;
      from -= cut;
      continue;
    }
    int left_part = build_suffix(slp, meta, rules, c.left, std::move(from));
    rules.push_back(Concat{left_part, c.right});
    return static_cast<int>(rules.size());
  }
}

int build_prefix(const Slp& slp, const std::vector<SymbolMeta>& meta,
                 std::vector<Rule>& rules, int sym, Num upto) {
  while (true) {
    if (upto == meta[static_cast<std::size_t>(sym)].length) return sym;
    SLPSTR_CHECK(!slp.is_terminal(sym), "prefix descent hit a terminal");
    const Concat& c = slp.concat(sym);
    const Num& cut = meta[static_cast<std::size_t>(sym)].cut;
    if (upto <= cut) {
      sym = c.left;
      continue;
    }
    int right_part = build_prefix(slp, meta, rules, c.right, upto - cut);
    rules.push_back(Concat{c.left, right_part});
    return static_cast<int>(rules.size());
  }
}

}  // namespace

Slp substring_slp(const Slp& slp, const Num& start, const Num& end) {
  auto meta = analyze(slp);
  const Num& total = meta[static_cast<std::size_t>(slp.root())].length;
  if (start < 0 || end > total || start > end) {
    throw OutOfRangeError("interval [" + start.str() + ", " + end.str() +
                          ") outside string of length " + total.str());
  }
  if (end == start) throw EmptyIntervalError("substring interval is empty");
  if (start == 0 && end == total) return slp;

  // Deepest symbol whose expansion contains the interval.
  int sym = slp.root();
  Num a = start, b = end;
  while (!slp.is_terminal(sym)) {
    const Concat& c = slp.concat(sym);
    const Num& cut = meta[static_cast<std::size_t>(sym)].cut;
    if (b <= cut) {
      sym = c.left;
    } else if (a >= cut) {
      a -= cut;
      b -= cut;
      sym = c.right;
    } else {
      break;
    }
  }

  std::vector<Rule> rules(slp.size());
  for (int i = 1; i <= slp.size(); ++i) rules[static_cast<std::size_t>(i) - 1] = slp.rule(i);
  if (slp.is_terminal(sym)) return Slp(std::move(rules), sym);

  const Concat& c = slp.concat(sym);
  const Num& cut = meta[static_cast<std::size_t>(sym)].cut;
  int left_part = build_suffix(slp, meta, rules, c.left, std::move(a));
  int right_part = build_prefix(slp, meta, rules, c.right, b - cut);
  rules.push_back(Concat{left_part, right_part});
  return Slp(std::move(rules), static_cast<int>(rules.size()));
}

// --- text format ------------------------------------------------------------

namespace {

struct LineScanner {
  std::string_view line;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= line.size();
  }
  bool literal(std::string_view tok) {
    skip_ws();
    if (line.substr(pos, tok.size()) != tok) return false;
    pos += tok.size();
    return true;
  }
  bool integer(long long& out) {
    skip_ws();
    std::size_t begin = pos;
    while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) ++pos;
    if (pos == begin) return false;
    out = 0;
    for (std::size_t i = begin; i < pos; ++i) {
      out = out * 10 + (line[i] - '0');
      if (out > (1LL << 31)) return false;
    }
    return true;
  }
  // 'x' with \' \\ \n \t escapes.
  bool quoted_char(char& out) {
    skip_ws();
    if (pos >= line.size() || line[pos] != '\'') return false;
    ++pos;
    if (pos >= line.size()) return false;
    char c = line[pos];
    if (c == '\\') {
      ++pos;
      if (pos >= line.size()) return false;
      switch (line[pos]) {
        case '\'': c = '\''; break;
        case '\\': c = '\\'; break;
        case 'n': c = '\n'; break;
        case 't': c = '\t'; break;
        default: return false;
      }
    } else if (c == '\'') {
      return false;  // empty quotes
    }
    ++pos;
    if (pos >= line.size() || line[pos] != '\'') return false;
    ++pos;
    return true;
  }
};

// Truncates at the first '#' that is not inside a quoted character.
std::string_view strip_comment(std::string_view line) {
  bool in_quote = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (in_quote) {
      if (c == '\\') {
        ++i;
      } else if (c == '\'') {
        in_quote = false;
      }
    } else if (c == '\'') {
      in_quote = true;
    } else if (c == '#') {
      return line.substr(0, i);
    }
  }
  return line;
}

}  // namespace

Slp parse_slp(std::string_view text) {
  std::map<long long, Rule> by_index;
  long long root = -1;
  bool have_root_line = false;
  std::size_t line_no = 0;
  std::size_t cursor = 0;
  while (cursor <= text.size()) {
    std::size_t eol = text.find('\n', cursor);
    std::string_view raw = eol == std::string_view::npos
                               ? text.substr(cursor)
                               : text.substr(cursor, eol - cursor);
    cursor = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    LineScanner scan{strip_comment(raw)};
    if (scan.done()) continue;
    auto fail = [&](const std::string& what) -> SyntaxError {
      return SyntaxError("line " + std::to_string(line_no) + ": " + what);
    };

    if (scan.literal("root")) {
      long long r;
      if (!scan.integer(r) || !scan.done()) throw fail("expected 'root <index>'");
      if (have_root_line) throw fail("duplicate root line");
      have_root_line = true;
      root = r;
      continue;
    }

    long long index;
    if (!scan.integer(index)) throw fail("expected a rule index");
    if (index < 1) throw fail("rule indices are 1-based");
    if (!scan.literal("->")) throw fail("expected '->'");
    Rule rule;
    char ch;
    long long left, right;
    if (scan.quoted_char(ch)) {
      rule = Terminal{ch};
    } else if (scan.integer(left)) {
      if (!scan.integer(right)) throw fail("expected a second rule index");
      if (left >= index || right >= index) {
        throw ForwardReferenceError("line " + std::to_string(line_no) + ": rule " +
                                    std::to_string(index) +
                                    " references an index not smaller than itself");
      }
      rule = Concat{static_cast<int>(left), static_cast<int>(right)};
    } else {
      throw fail("expected a quoted character or two rule indices");
    }
    if (!scan.done()) throw fail("trailing characters");
    if (!by_index.emplace(index, rule).second) {
      throw fail("duplicate rule index " + std::to_string(index));
    }
  }

  if (by_index.empty()) throw MissingRootError("no rules in input");
  long long n = by_index.rbegin()->first;
  std::vector<Rule> rules;
  rules.reserve(static_cast<std::size_t>(n));
  long long expected = 1;
  for (const auto& [idx, rule] : by_index) {
    if (idx != expected) {
      throw SyntaxError("rule " + std::to_string(expected) + " is missing");
    }
    rules.push_back(rule);
    ++expected;
  }
  if (!have_root_line) root = n;
  if (root < 1 || root > n) {
    throw MissingRootError("root " + std::to_string(root) + " is not a defined rule");
  }
  return Slp(std::move(rules), static_cast<int>(root));
}

std::string serialize_slp(const Slp& slp) {
  std::ostringstream out;
  for (int i = 1; i <= slp.size(); ++i) {
    out << i << " -> ";
    if (slp.is_terminal(i)) {
      char c = slp.terminal_char(i);
      out << '\'';
      switch (c) {
        case '\'': out << "\\'"; break;
        case '\\': out << "\\\\"; break;
        case '\n': out << "\\n"; break;
        case '\t': out << "\\t"; break;
        default: out << c;
      }
      out << '\'';
    } else {
      out << slp.concat(i).left << ' ' << slp.concat(i).right;
    }
    out << '\n';
  }
  out << "root " << slp.root() << '\n';
  return out.str();
}

// --- generators ---------------------------------------------------------

Slp gen_doubling(int k, char c) {
  if (k < 1) throw BadParamsError("doubling needs k >= 1");
  std::vector<Rule> rules{Terminal{c}};
  for (int i = 2; i <= k; ++i) rules.push_back(Concat{i - 1, i - 1});
  return Slp(std::move(rules), k);
}

Slp gen_fibonacci(int k) {
  if (k < 1) throw BadParamsError("fibonacci needs k >= 1");
  std::vector<Rule> rules{Terminal{'b'}};
  if (k >= 2) rules.push_back(Terminal{'a'});
  for (int i = 3; i <= k; ++i) rules.push_back(Concat{i - 1, i - 2});
  return Slp(std::move(rules), k);
}

Slp gen_unary_run(const Num& len, char c) {
  if (len < 1) throw BadParamsError("run length must be >= 1");
  SlpBuilder b;
  int root = b.run(c, len);
  return std::move(b).finish(root);
}

// --- builder ------------------------------------------------------------

int SlpBuilder::terminal(char c) {
  auto it = terminals_.find(c);
  if (it != terminals_.end()) return it->second;
  rules_.push_back(Terminal{c});
  int idx = size();
  terminals_.emplace(c, idx);
  return idx;
}

int SlpBuilder::concat(int left, int right) {
  SLPSTR_CHECK(left >= 1 && right >= 1 && left <= size() && right <= size(),
               "concat of unknown rules");
  rules_.push_back(Concat{left, right});
  return size();
}

int SlpBuilder::concat_opt(int left, int right) {
  if (left == 0) return right;
  if (right == 0) return left;
  return concat(left, right);
}

int SlpBuilder::run(char c, const Num& len) {
  SLPSTR_CHECK(len >= 0, "negative run length");
  if (len == 0) return 0;
  auto it = runs_.find({c, len});
  if (it != runs_.end()) return it->second;
  auto& ladder = ladders_[c];
  if (ladder.empty()) ladder.push_back(terminal(c));
  std::size_t bits = 0;
  for (Num v = len; v > 1; v >>= 1) ++bits;
  while (ladder.size() <= bits) {
    ladder.push_back(concat(ladder.back(), ladder.back()));
  }
  int acc = 0;
  for (std::size_t bit = 0; bit <= bits; ++bit) {
    if (boost::multiprecision::bit_test(len, static_cast<unsigned>(bit))) {
      acc = concat_opt(acc, ladder[bit]);
    }
  }
  runs_.emplace(std::make_pair(c, len), acc);
  return acc;
}

}  // namespace slpstr
