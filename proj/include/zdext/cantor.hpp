#pragma once

// Clopen-set calculus on Cantor space 2^omega and the punctured worlds
// X = 2^omega \ {p_1, ..., p_m} built on it.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zdext/error.hpp"

namespace zdext {

/// A finite binary word. Letter i lives in bit i of `bits`.
struct Word {
  std::uint64_t bits = 0;
  int len = 0;

  static constexpr int kMaxLen = 64;

  static Word from_string(std::string_view s);  // "" or "e" is the empty word
  std::string to_string() const;                // empty word prints as "e"

  int letter(int i) const { return static_cast<int>((bits >> i) & 1u); }
  Word prefix(int n) const;
  Word drop(int n) const;
  Word append(int letter) const;
  Word concat(const Word& tail) const;
  bool is_prefix_of(const Word& other) const;

  friend bool operator==(const Word&, const Word&) = default;
  /// Lexicographic on letters; a proper prefix sorts first.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);
};

/// An eventually periodic point preperiod . period^omega, kept canonical
/// (shortest preperiod, primitive period) so equality is structural.
class Point {
 public:
  Point() : Point(Word{}, Word{0, 1}) {}
  Point(Word preperiod, Word period);

  const Word& preperiod() const { return pre_; }
  const Word& period() const { return per_; }

  int letter(std::int64_t i) const;
  Word prefix(int n) const;
  /// The point with its first n letters removed.
  Point drop(int n) const;
  /// v . this
  Point prepend(const Word& v) const;
  bool starts_with(const Word& w) const { return prefix(w.len) == w; }

  /// Index of the first letter where the two points differ; nullopt when equal.
  std::optional<int> first_difference(const Point& other) const;

  std::string to_string() const;  // "01(10)"

  friend bool operator==(const Point&, const Point&) = default;
  friend std::strong_ordering operator<=>(const Point& a, const Point& b);

 private:
  Word pre_;
  Word per_;
};

/// A clopen subset of 2^omega as a canonical antichain of cylinder words:
/// no word is a prefix of another and no sibling pair w0, w1 survives.
class ClopenSet {
 public:
  ClopenSet() = default;  // empty set

  static ClopenSet empty() { return {}; }
  static ClopenSet full();
  static ClopenSet cylinder(const Word& w);
  /// Union of the given cylinders, normalized. Words longer than the depth
  /// bound are rejected.
  static ClopenSet from_words(const std::vector<Word>& words,
                              const Limits& limits = default_limits());

  const std::vector<Word>& words() const { return words_; }
  bool is_empty() const { return words_.empty(); }
  bool is_full() const { return words_.size() == 1 && words_[0].len == 0; }
  int depth() const;  ///< longest word

  ClopenSet complement() const;
  ClopenSet meet(const ClopenSet& other) const;
  ClopenSet join(const ClopenSet& other) const;
  ClopenSet minus(const ClopenSet& other) const;
  bool subset_of(const ClopenSet& other) const;
  bool disjoint(const ClopenSet& other) const;

  bool contains(const Point& p) const;

  /// { y : v.y in this }.
  ClopenSet quotient(const Word& v) const;
  /// w . this
  ClopenSet prefixed(const Word& w) const;

  std::string to_string() const;  // "{00, 010}", empty "{}", full "{e}"

  friend bool operator==(const ClopenSet&, const ClopenSet&) = default;
  friend bool operator<(const ClopenSet& a, const ClopenSet& b) { return a.words_ < b.words_; }

 private:
  explicit ClopenSet(std::vector<Word> canonical) : words_(std::move(canonical)) {}
  friend struct ClopenAccess;

  std::vector<Word> words_;
};

/// Bitmask over puncture indices (bit i = p_{i+1}).
using PunctureSet = std::uint32_t;

/// Cantor space pierced at finitely many eventually periodic points.
class World {
 public:
  World() = default;
  explicit World(std::vector<Point> punctures);

  int size() const { return static_cast<int>(punctures_.size()); }
  const std::vector<Point>& punctures() const { return punctures_; }
  const Point& puncture(int i) const { return punctures_.at(static_cast<std::size_t>(i)); }
  PunctureSet all() const { return size() == 0 ? 0u : (PunctureSet{1} << size()) - 1u; }

  std::optional<int> puncture_index(const Point& p) const;
  bool is_puncture(const Point& p) const { return puncture_index(p).has_value(); }
  /// Punctures lying in the clopen set.
  PunctureSet punctures_in(const ClopenSet& c) const;

  friend bool operator==(const World&, const World&) = default;

 private:
  std::vector<Point> punctures_;
};

bool contains_point(const ClopenSet& a, const Point& p);

/// Minimal-depth cylinder around p containing no point of `avoid`.
ClopenSet separating_cylinder(const Point& p, const std::vector<Point>& avoid,
                              const Limits& limits = default_limits());

struct TraceClosure {
  ClopenSet set;
  PunctureSet punctures = 0;  ///< punctures in the closure of the trace F cap X
};

/// The closure in 2^omega of the trace F cap X: F itself, plus the
/// punctures it contains (no puncture is isolated).
TraceClosure trace_closure(const ClopenSet& f, const World& w);

/// Cylinder [p|depth] around a point.
inline ClopenSet cylinder_around(const Point& p, int depth) {
  return ClopenSet::cylinder(p.prefix(depth));
}

/// Union of minimal cylinders around each puncture in `which`, each one
/// avoiding every other puncture and every point of `extra_avoid`.
ClopenSet puncture_neighbourhood(const World& w, PunctureSet which,
                                 const std::vector<Point>& extra_avoid = {},
                                 int min_depth = 0, const Limits& limits = default_limits());

/// All words of exactly the given length, in lexicographic order.
std::vector<Word> words_of_length(int len);

/// A clopen set of depth <= d as a 2^d bitmask (bit i = cylinder of the
/// length-d word whose letters are the bits of i). Requires d <= 6.
std::uint64_t to_mask(const ClopenSet& c, int d);
ClopenSet from_mask(std::uint64_t mask, int d);

}  // namespace zdext
