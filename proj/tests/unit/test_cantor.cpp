#include <random>

#include "doctest.h"
#include "zdext/ba_core.hpp"
#include "zdext/cantor.hpp"
#include "zdext/region.hpp"

using namespace zdext;

namespace {

ClopenSet cs(std::initializer_list<const char*> ws) {
  std::vector<Word> out;
  for (const char* w : ws) out.push_back(Word::from_string(w));
  return ClopenSet::from_words(out);
}

Point pt(const char* pre, const char* per) { return Point(Word::from_string(pre), Word::from_string(per)); }

// Brute-force semantics: a set of depth <= d is its set of length-d words.
std::vector<bool> expand(const ClopenSet& c, int d) {
  std::vector<bool> out(std::size_t{1} << d);
  for (const Word& w : c.words()) {
    for (std::size_t i = 0; i < out.size(); ++i) {
      Word v{static_cast<std::uint64_t>(i), d};
      if (w.is_prefix_of(v)) out[i] = true;
    }
  }
  return out;
}

ClopenSet random_clopen(std::mt19937_64& rng, int d) {
  std::vector<Word> ws;
  for (const Word& w : words_of_length(d)) {
    if (rng() & 1u) ws.push_back(w);
  }
  return ClopenSet::from_words(ws);
}

}  // namespace

TEST_CASE("clopen examples") {
  CHECK(cs({"0"}).join(cs({"1"})) == ClopenSet::full());
  CHECK(cs({"01"}).meet(cs({"0"})) == cs({"01"}));
  CHECK(cs({"00", "01"}).complement() == cs({"1"}));
  CHECK(cs({"00", "01"}).words().size() == 1);
  CHECK(ClopenSet::full().to_string() == "{e}");
  CHECK(ClopenSet::empty().to_string() == "{}");
  CHECK(cs({"010", "00"}).to_string() == "{00, 010}");
}

TEST_CASE("points and containment") {
  CHECK(contains_point(cs({"0"}), pt("", "0")));
  CHECK_FALSE(contains_point(cs({"1"}), pt("", "0")));
  CHECK(contains_point(cs({"0101"}), pt("", "01")));
  CHECK(pt("0", "00") == pt("", "0"));
  CHECK(pt("01", "01") == pt("", "01"));
  CHECK(pt("", "0101").to_string() == "(01)");
  CHECK(pt("01", "10").to_string() == "01(10)");
  CHECK(pt("011", "01") == pt("01", "10"));
  CHECK(pt("1", "0").prepend(Word::from_string("0")) == pt("01", "0"));
  CHECK(pt("", "01").drop(1) == pt("", "10"));
  CHECK(pt("", "0").first_difference(pt("0001", "1")) == 3);
}

TEST_CASE("separating cylinders") {
  CHECK(separating_cylinder(pt("", "0"), {pt("", "1")}) == cs({"0"}));
  CHECK(separating_cylinder(pt("", "0"), {}) == ClopenSet::full());
  CHECK(separating_cylinder(pt("", "01"), {pt("", "0"), pt("", "1")}) == cs({"01"}));
  CHECK_THROWS_AS(separating_cylinder(pt("", "0"), {pt("", "0")}), DomainError);
}

TEST_CASE("trace closure flags") {
  World w1({pt("", "0")});
  CHECK(trace_closure(cs({"0"}), w1).punctures == 1u);
  CHECK(trace_closure(cs({"1"}), w1).punctures == 0u);
  World w2({pt("", "0"), pt("", "1")});
  CHECK(trace_closure(cs({"00", "1"}), w2).punctures == 3u);
}

TEST_CASE("boolean laws on random triples agree with truncation semantics") {
  std::mt19937_64 rng(12345);
  const int d = 6;
  int checked = 0;
  for (int t = 0; t < 10000; ++t) {
    ClopenSet a = random_clopen(rng, 1 + static_cast<int>(rng() % d));
    ClopenSet b = random_clopen(rng, 1 + static_cast<int>(rng() % d));
    ClopenSet c = random_clopen(rng, 1 + static_cast<int>(rng() % d));
    auto ea = expand(a, d), eb = expand(b, d), ec = expand(c, d);
    auto em = expand(a.meet(b), d), ej = expand(a.join(b), d), en = expand(a.complement(), d);
    for (std::size_t i = 0; i < ea.size(); ++i) {
      REQUIRE(em[i] == (ea[i] && eb[i]));
      REQUIRE(ej[i] == (ea[i] || eb[i]));
      REQUIRE(en[i] == !ea[i]);
    }
    REQUIRE(a.complement().complement() == a);
    REQUIRE(a.meet(b).complement() == a.complement().join(b.complement()));
    REQUIRE(a.meet(b.join(c)) == a.meet(b).join(a.meet(c)));
    REQUIRE(a.join(b.meet(c)) == a.join(b).meet(a.join(c)));
    REQUIRE(a.subset_of(b) == (a.meet(b) == a));
    REQUIRE(a.disjoint(b) == a.meet(b).is_empty());
    REQUIRE(from_mask(to_mask(a, d), d) == a);
    ++checked;
  }
  CHECK(checked == 10000);
}

TEST_CASE("canonical forms are unique") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 2000; ++t) {
    ClopenSet a = random_clopen(rng, 8);
    // the same set written with every word split one level deeper
    std::vector<Word> split;
    for (const Word& w : a.words()) {
      split.push_back(w.append(0));
      split.push_back(w.append(1));
    }
    REQUIRE(ClopenSet::from_words(split) == a);
    REQUIRE(ClopenSet::from_words(a.words()) == a);
  }
}

TEST_CASE("contains_point matches prefix semantics") {
  std::mt19937_64 rng(5);
  std::vector<Point> pts;
  for (int t = 0; t < 60; ++t) {
    Word pre{rng() & 7u, static_cast<int>(rng() % 4)};
    Word per{rng() & 7u, 1 + static_cast<int>(rng() % 3)};
    pts.emplace_back(pre, per);
  }
  for (int t = 0; t < 300; ++t) {
    ClopenSet a = random_clopen(rng, 5);
    for (const Point& p : pts) {
      const Word w = p.prefix(5);
      REQUIRE(a.contains(p) == a.contains(Point(w, Word{0, 1})));
      for (int k = 0; k < 12; ++k) REQUIRE(p.letter(k) == p.prefix(12).letter(k));
    }
  }
}

TEST_CASE("quotients and prefixing") {
  ClopenSet a = cs({"00", "101", "11"});
  CHECK(a.quotient(Word::from_string("1")) == cs({"01", "1"}));
  CHECK(a.quotient(Word::from_string("0")) == cs({"0"}));
  CHECK(a.quotient(Word::from_string("00")) == ClopenSet::full());
  CHECK(cs({"0", "1"}).prefixed(Word::from_string("10")) == cs({"10"}));
}

TEST_CASE("puncture neighbourhoods avoid the other punctures") {
  World w({pt("", "0"), pt("", "01"), pt("1", "0")});
  for (PunctureSet s = 0; s < 8; ++s) {
    ClopenSet n = puncture_neighbourhood(w, s);
    CHECK(w.punctures_in(n) == s);
  }
}

TEST_CASE("compact closure iff no puncture") {
  // Ground truth for compactness of a trace closure inside X.
  World w({pt("", "0")});
  CHECK(trace_closure(cs({"1"}), w).punctures == 0u);
  CHECK(trace_closure(cs({"01"}), w).punctures == 0u);
  CHECK(trace_closure(cs({"00"}), w).punctures != 0u);
}

TEST_CASE("regions") {
  World w({pt("", "0")});
  Region a{cs({"0"}), {pt("01", "0")}, {pt("1", "0")}};
  CHECK(a.contains(w, pt("0", "1")));
  CHECK_FALSE(a.contains(w, pt("01", "0")));
  CHECK(a.contains(w, pt("1", "0")));
  CHECK_FALSE(a.contains(w, pt("", "0")));
  CHECK(a.closure().is_closed());
  CHECK(a.interior().is_open());
  Region c = region_complement(w, a);
  CHECK(c.contains(w, pt("01", "0")));
  CHECK_FALSE(c.contains(w, pt("1", "0")));
  CHECK(region_union(w, a, c) == Region::of(ClopenSet::full()));
  CHECK(region_meet(w, a, c).is_empty());
}

TEST_CASE("cantor algebra satisfies the interface laws") {
  std::vector<ClopenSet> xs = {ClopenSet::empty(), ClopenSet::full(), cs({"0"}), cs({"01", "1"}),
                               cs({"001"}), cs({"10", "000"})};
  CHECK_FALSE(first_law_violation(CantorAlgebra{}, std::span<const ClopenSet>(xs)).has_value());
}
