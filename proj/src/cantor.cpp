#include "zdext/cantor.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace zdext {

// ---------------------------------------------------------------- Word

Word Word::from_string(std::string_view s) {
  if (s == "e" || s == "\xCE\xB5") return {};
  if (static_cast<int>(s.size()) > kMaxLen) throw CapacityError("word longer than 64 letters");
  Word w;
  for (char ch : s) {
    if (ch != '0' && ch != '1') throw ParseError("invalid letter in word '" + std::string(s) + "'");
    w = w.append(ch - '0');
  }
  return w;
}

std::string Word::to_string() const {
  if (len == 0) return "e";
  std::string s;
  s.reserve(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) s.push_back(static_cast<char>('0' + letter(i)));
  return s;
}

Word Word::prefix(int n) const {
  if (n >= len) return *this;
  Word w{n == 0 ? 0 : (bits & (n == 64 ? ~0ull : ((1ull << n) - 1ull))), n};
  return w;
}

Word Word::drop(int n) const {
  if (n >= len) return {};
  return Word{bits >> n, len - n};
}

Word Word::append(int l) const {
  if (len >= kMaxLen) throw CapacityError("word longer than 64 letters");
  Word w = *this;
  if (l) w.bits |= (1ull << len);
  ++w.len;
  return w;
}

Word Word::concat(const Word& tail) const {
  if (len + tail.len > kMaxLen) throw CapacityError("word longer than 64 letters");
  if (tail.len == 0) return *this;
  return Word{bits | (tail.bits << len), len + tail.len};
}

bool Word::is_prefix_of(const Word& other) const {
  return len <= other.len && other.prefix(len) == *this;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  const int n = std::min(a.len, b.len);
  for (int i = 0; i < n; ++i) {
    if (a.letter(i) != b.letter(i)) return a.letter(i) <=> b.letter(i);
  }
  return a.len <=> b.len;
}

// ---------------------------------------------------------------- Point

namespace {

Word rotate_left(const Word& w, int k) {
  k %= w.len;
  if (k == 0) return w;
  return w.drop(k).concat(w.prefix(k));
}

bool is_primitive_with(const Word& w, int d) {
  for (int i = 0; i < w.len; ++i) {
    if (w.letter(i) != w.letter(i % d)) return false;
  }
  return true;
}

}  // namespace

Point::Point(Word preperiod, Word period) : pre_(preperiod), per_(period) {
  if (per_.len == 0) throw DomainError("point period must be nonempty");
  for (int d = 1; d < per_.len; ++d) {
    if (per_.len % d == 0 && is_primitive_with(per_, d)) {
      per_ = per_.prefix(d);
      break;
    }
  }
  while (pre_.len > 0 && pre_.letter(pre_.len - 1) == per_.letter(per_.len - 1)) {
    pre_ = pre_.prefix(pre_.len - 1);
    per_ = rotate_left(per_, per_.len - 1);
  }
}

int Point::letter(std::int64_t i) const {
  if (i < pre_.len) return pre_.letter(static_cast<int>(i));
  return per_.letter(static_cast<int>((i - pre_.len) % per_.len));
}

Word Point::prefix(int n) const {
  if (n > Word::kMaxLen) throw CapacityError("prefix longer than 64 letters");
  Word w;
  for (int i = 0; i < n; ++i) w = w.append(letter(i));
  return w;
}

Point Point::drop(int n) const {
  if (n <= pre_.len) return Point(pre_.drop(n), per_);
  return Point(Word{}, rotate_left(per_, (n - pre_.len) % per_.len));
}

Point Point::prepend(const Word& v) const { return Point(v.concat(pre_), per_); }

std::optional<int> Point::first_difference(const Point& other) const {
  if (*this == other) return std::nullopt;
  const long bound = std::max(pre_.len, other.pre_.len) +
                     std::lcm(static_cast<long>(per_.len), static_cast<long>(other.per_.len));
  for (long i = 0; i <= bound; ++i) {
    if (letter(i) != other.letter(i)) return static_cast<int>(i);
  }
  throw InvariantError("distinct canonical points agree beyond their joint period");
}

std::string Point::to_string() const {
  return (pre_.len == 0 ? std::string() : pre_.to_string()) + "(" + per_.to_string() + ")";
}

std::strong_ordering operator<=>(const Point& a, const Point& b) {
  if (auto c = a.pre_ <=> b.pre_; c != 0) return c;
  return a.per_ <=> b.per_;
}

// ---------------------------------------------------------------- ClopenSet

struct ClopenAccess {
  static ClopenSet make(std::vector<Word> w) { return ClopenSet(std::move(w)); }
};

namespace {

using Words = std::vector<Word>;

bool full_words(const Words& w) { return w.size() == 1 && w[0].len == 0; }

void split(const Words& in, Words& zero, Words& one) {
  for (const Word& w : in) {
    const Word rest = w.drop(1);
    (w.letter(0) == 0 ? zero : one).push_back(rest);
  }
}

void prefix_into(Words& out, int l, const Words& in) {
  for (const Word& w : in) {
    if (w.len + 1 > Word::kMaxLen) throw CapacityError("cylinder depth exceeds 64");
    out.push_back(Word{(w.bits << 1) | static_cast<std::uint64_t>(l), w.len + 1});
  }
}

// Range algorithms on canonical antichains. Canonical lists are in
// preorder, so the words below a node form a contiguous range and the ones
// continuing with 0 precede the ones continuing with 1. Every word in a
// range shares the node's prefix of length k.
struct Range {
  const Word* b;
  const Word* e;
  bool empty() const { return b == e; }
  bool full(int k) const { return e - b == 1 && b->len == k; }
};

Range whole(const Words& w) { return {w.data(), w.data() + w.size()}; }

void halves(Range r, int k, Range& r0, Range& r1) {
  const Word* mid = std::partition_point(r.b, r.e, [k](const Word& w) { return w.letter(k) == 0; });
  r0 = {r.b, mid};
  r1 = {mid, r.e};
}

Word child(const Word& prefix, int l) { return prefix.append(l); }

// Replaces the two children [prefix0, prefix1] by prefix when both came out full.
void collapse(Words& out, std::size_t start, const Word& prefix) {
  if (out.size() == start + 2 && out[start].len == prefix.len + 1 && out[start + 1].len == prefix.len + 1) {
    out.resize(start);
    out.push_back(prefix);
  }
}

void copy_range(Words& out, Range r) { out.insert(out.end(), r.b, r.e); }

void meet_rec(Range a, Range b, const Word& prefix, Words& out) {
  const int k = prefix.len;
  if (a.empty() || b.empty()) return;
  if (a.full(k)) return copy_range(out, b);
  if (b.full(k)) return copy_range(out, a);
  Range a0, a1, b0, b1;
  halves(a, k, a0, a1);
  halves(b, k, b0, b1);
  const std::size_t start = out.size();
  meet_rec(a0, b0, child(prefix, 0), out);
  meet_rec(a1, b1, child(prefix, 1), out);
  collapse(out, start, prefix);
}

void join_rec(Range a, Range b, const Word& prefix, Words& out) {
  const int k = prefix.len;
  if (a.full(k) || b.full(k)) return out.push_back(prefix);
  if (a.empty()) return copy_range(out, b);
  if (b.empty()) return copy_range(out, a);
  Range a0, a1, b0, b1;
  halves(a, k, a0, a1);
  halves(b, k, b0, b1);
  const std::size_t start = out.size();
  join_rec(a0, b0, child(prefix, 0), out);
  join_rec(a1, b1, child(prefix, 1), out);
  collapse(out, start, prefix);
}

void complement_rec(Range a, const Word& prefix, Words& out) {
  const int k = prefix.len;
  if (a.empty()) return out.push_back(prefix);
  if (a.full(k)) return;
  Range a0, a1;
  halves(a, k, a0, a1);
  const std::size_t start = out.size();
  complement_rec(a0, child(prefix, 0), out);
  complement_rec(a1, child(prefix, 1), out);
  collapse(out, start, prefix);
}

void minus_rec(Range a, Range b, const Word& prefix, Words& out) {
  const int k = prefix.len;
  if (a.empty() || b.full(k)) return;
  if (b.empty()) return copy_range(out, a);
  if (a.full(k)) return complement_rec(b, prefix, out);
  Range a0, a1, b0, b1;
  halves(a, k, a0, a1);
  halves(b, k, b0, b1);
  const std::size_t start = out.size();
  minus_rec(a0, b0, child(prefix, 0), out);
  minus_rec(a1, b1, child(prefix, 1), out);
  collapse(out, start, prefix);
}

bool subset_rec(Range a, Range b, int k) {
  if (a.empty() || b.full(k)) return true;
  if (b.empty() || a.full(k)) return false;
  Range a0, a1, b0, b1;
  halves(a, k, a0, a1);
  halves(b, k, b0, b1);
  return subset_rec(a0, b0, k + 1) && subset_rec(a1, b1, k + 1);
}

bool intersects_rec(Range a, Range b, int k) {
  if (a.empty() || b.empty()) return false;
  if (a.full(k) || b.full(k)) return true;
  Range a0, a1, b0, b1;
  halves(a, k, a0, a1);
  halves(b, k, b0, b1);
  return intersects_rec(a0, b0, k + 1) || intersects_rec(a1, b1, k + 1);
}

Words meet_words(const Words& a, const Words& b) {
  Words out;
  meet_rec(whole(a), whole(b), Word{}, out);
  return out;
}

Words join_words(const Words& a, const Words& b) {
  Words out;
  out.reserve(a.size() + b.size());
  join_rec(whole(a), whole(b), Word{}, out);
  return out;
}

Words complement_words(const Words& a) {
  Words out;
  complement_rec(whole(a), Word{}, out);
  return out;
}

bool intersects_words(const Words& a, const Words& b) { return intersects_rec(whole(a), whole(b), 0); }

}  // namespace

ClopenSet ClopenSet::full() { return ClopenSet(Words{Word{}}); }

ClopenSet ClopenSet::cylinder(const Word& w) { return ClopenSet(Words{w}); }

ClopenSet ClopenSet::from_words(const std::vector<Word>& words, const Limits& limits) {
  Words acc;
  for (const Word& w : words) {
    if (w.len > limits.max_depth) {
      throw CapacityError("cylinder word '" + w.to_string() + "' exceeds depth bound " +
                          std::to_string(limits.max_depth));
    }
    acc = join_words(acc, Words{w});
  }
  return ClopenSet(std::move(acc));
}

int ClopenSet::depth() const {
  int d = 0;
  for (const Word& w : words_) d = std::max(d, w.len);
  return d;
}

ClopenSet ClopenSet::complement() const { return ClopenSet(complement_words(words_)); }
ClopenSet ClopenSet::meet(const ClopenSet& o) const { return ClopenSet(meet_words(words_, o.words_)); }
ClopenSet ClopenSet::join(const ClopenSet& o) const { return ClopenSet(join_words(words_, o.words_)); }
bool ClopenSet::disjoint(const ClopenSet& o) const { return !intersects_words(words_, o.words_); }

ClopenSet ClopenSet::minus(const ClopenSet& o) const {
  Words out;
  minus_rec(whole(words_), whole(o.words_), Word{}, out);
  return ClopenSet(std::move(out));
}

bool ClopenSet::subset_of(const ClopenSet& o) const { return subset_rec(whole(words_), whole(o.words_), 0); }

bool ClopenSet::contains(const Point& p) const {
  return std::any_of(words_.begin(), words_.end(), [&](const Word& w) { return p.starts_with(w); });
}

ClopenSet ClopenSet::quotient(const Word& v) const {
  Words cur = words_;
  for (int i = 0; i < v.len; ++i) {
    if (cur.empty() || full_words(cur)) break;
    Words c0, c1;
    split(cur, c0, c1);
    cur = v.letter(i) == 0 ? std::move(c0) : std::move(c1);
  }
  return ClopenSet(std::move(cur));
}

ClopenSet ClopenSet::prefixed(const Word& w) const {
  if (words_.empty()) return {};
  Words cur = words_;
  for (int i = w.len - 1; i >= 0; --i) {
    Words next;
    prefix_into(next, w.letter(i), cur);
    cur = std::move(next);
  }
  return ClopenSet(std::move(cur));
}

std::string ClopenSet::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (i) s += ", ";
    s += words_[i].to_string();
  }
  return s + "}";
}

// ---------------------------------------------------------------- World

World::World(std::vector<Point> punctures) : punctures_(std::move(punctures)) {
  if (punctures_.size() > 32) throw CapacityError("a world holds at most 32 punctures");
  for (std::size_t i = 0; i < punctures_.size(); ++i) {
    for (std::size_t j = i + 1; j < punctures_.size(); ++j) {
      if (punctures_[i] == punctures_[j]) {
        throw DomainError("duplicate puncture " + punctures_[i].to_string());
      }
    }
  }
}

std::optional<int> World::puncture_index(const Point& p) const {
  for (std::size_t i = 0; i < punctures_.size(); ++i) {
    if (punctures_[i] == p) return static_cast<int>(i);
  }
  return std::nullopt;
}

PunctureSet World::punctures_in(const ClopenSet& c) const {
  PunctureSet s = 0;
  for (std::size_t i = 0; i < punctures_.size(); ++i) {
    if (c.contains(punctures_[i])) s |= PunctureSet{1} << i;
  }
  return s;
}

// ---------------------------------------------------------------- free functions

bool contains_point(const ClopenSet& a, const Point& p) { return a.contains(p); }

ClopenSet separating_cylinder(const Point& p, const std::vector<Point>& avoid, const Limits& limits) {
  int depth = 0;
  for (const Point& q : avoid) {
    auto diff = p.first_difference(q);
    if (!diff) throw DomainError("point " + p.to_string() + " lies in the avoid set");
    depth = std::max(depth, *diff + 1);
  }
  if (depth > limits.max_depth) {
    throw CapacityError("separating cylinder for " + p.to_string() + " exceeds depth bound");
  }
  return ClopenSet::cylinder(p.prefix(depth));
}

TraceClosure trace_closure(const ClopenSet& f, const World& w) { return {f, w.punctures_in(f)}; }

ClopenSet puncture_neighbourhood(const World& w, PunctureSet which, const std::vector<Point>& extra_avoid,
                                 int min_depth, const Limits& limits) {
  ClopenSet out;
  for (int i = 0; i < w.size(); ++i) {
    if (!((which >> i) & 1u)) continue;
    std::vector<Point> avoid = extra_avoid;
    for (int j = 0; j < w.size(); ++j) {
      if (j != i) avoid.push_back(w.puncture(j));
    }
    const ClopenSet sep = separating_cylinder(w.puncture(i), avoid, limits);
    const int d = std::max(sep.words().front().len, min_depth);
    out = out.join(cylinder_around(w.puncture(i), d));
  }
  return out;
}

std::vector<Word> words_of_length(int len) {
  std::vector<Word> out;
  if (len > 20) throw CapacityError("refusing to enumerate words longer than 20");
  std::vector<Word> cur{Word{}};
  for (int i = 0; i < len; ++i) {
    std::vector<Word> next;
    for (const Word& w : cur) {
      next.push_back(w.append(0));
      next.push_back(w.append(1));
    }
    cur = std::move(next);
  }
  std::sort(cur.begin(), cur.end());
  return cur;
}

std::uint64_t to_mask(const ClopenSet& c, int d) {
  if (d > 6) throw CapacityError("mask depth above 6");
  if (c.depth() > d) throw DomainError("clopen set deeper than mask depth");
  std::uint64_t mask = 0;
  for (const Word& w : c.words()) {
    const int free = d - w.len;
    for (std::uint64_t t = 0; t < (1ull << free); ++t) mask |= 1ull << (w.bits | (t << w.len));
  }
  return mask;
}

ClopenSet from_mask(std::uint64_t mask, int d) {
  if (d > 6) throw CapacityError("mask depth above 6");
  std::vector<Word> words;
  for (std::uint64_t i = 0; i < (1ull << d); ++i) {
    if ((mask >> i) & 1ull) words.push_back(Word{i, d});
  }
  return ClopenSet::from_words(words);
}

}  // namespace zdext
