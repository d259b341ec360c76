#include "doctest.h"
#include "helpers.hpp"
#include "zdext/extensions.hpp"
#include "zdext/maps.hpp"
#include "zdext/suite.hpp"

using namespace zdext;
using namespace testutil;

namespace {

Word wd(const char* s) { return Word::from_string(s); }

PresentedMap drop_first(const World& w) {
  return PresentedMap(w, w, {Piece::replace(wd("0"), wd("")), Piece::replace(wd("1"), wd(""))});
}

Zlba two_point(const World& w) { return Zlba::top(w); }

// Block-level reading of the conditions, worked out by hand from where f
// sends the punctures. Used only as a second opinion on the shape-family
// evaluation.
struct ClosedForm {
  bool zo, zp, zi, density, inclusion;
};

ClosedForm closed_form(const PresentedMap& f, const Zlba& z1, const Zlba& z2) {
  const World& w1 = f.domain();
  const World& w2 = f.codomain();
  auto t = [&](PunctureSet s) {
    PunctureSet out = 0;
    for (int p = 0; p < w1.size(); ++p) {
      if (!((s >> p) & 1u)) continue;
      if (auto q = w2.puncture_index(f.apply(w1.puncture(p)))) out |= PunctureSet{1} << *q;
    }
    return out;
  };
  auto bc = [&](PunctureSet s) {
    PunctureSet out = 0;
    for (PunctureSet b : z2.blocks()) {
      if (b & s) out |= b;
    }
    return out;
  };
  const bool injective = !f.has_const_pieces() && f.targets_disjoint();
  ClosedForm c{!f.has_const_pieces(), true, injective, f.targets_cover(), injective};
  std::vector<PunctureSet> filled;
  for (int b = 0; b < z1.block_count(); ++b) {
    if (z1.filled()[static_cast<std::size_t>(b)]) filled.push_back(z1.blocks()[static_cast<std::size_t>(b)]);
  }
  for (PunctureSet b : filled) {
    if (!z2.constant_on_blocks(t(b))) c.zo = false;
    if (bc(t(b)) & t(w1.all() & ~b)) c.inclusion = false;
    for (PunctureSet b2 : filled) {
      if (b != b2 && (bc(t(b)) & bc(t(b2)))) c.zi = false;
    }
  }
  for (int p = 0; p < w1.size(); ++p) {
    if (!((z1.unfilled_punctures() >> p) & 1u)) continue;
    const auto q = w2.puncture_index(f.apply(w1.puncture(p)));
    if (!q || !((z2.unfilled_punctures() >> *q) & 1u)) c.zp = false;
  }
  return c;
}

}  // namespace

TEST_CASE("presented maps: construction") {
  CHECK_NOTHROW(PresentedMap::identity(w1(), w1()));
  CHECK_THROWS_AS(PresentedMap::identity(w1(), w2()), DomainError);
  CHECK_THROWS_AS(PresentedMap(w0(), w0(), {Piece::replace(wd("0"), wd(""))}), DomainError);
  CHECK_THROWS_AS(PresentedMap(w0(), w0(), {Piece::replace(wd(""), wd("")), Piece::replace(wd("1"), wd(""))}),
                  DomainError);
  CHECK_THROWS_AS(PresentedMap::constant(w1(), w1(), pt("", "0")), DomainError);
  for (const auto& r : rejected_maps()) {
    CHECK_THROWS_AS(PresentedMap(suite_world(r.world1), suite_world(r.world2), r.pieces), DomainError);
  }
  CHECK(map_suite().size() >= 10);
  CHECK(drop_first(w0()).to_string() == "pieces=[0->e, 1->e]");
  CHECK(PresentedMap::constant(w1(), w1(), pt("0", "01")).to_string() == "const=0(01)");
  CHECK(suite_map("halfconst").map.to_string() == "pieces=[0->const:(01), 1->1]");
}

TEST_CASE("preimage_hom examples") {
  CHECK(preimage_hom(drop_first(w0()), cs({"01"})) == cs({"001", "101"}));
  CHECK(preimage_hom(PresentedMap::identity(w2(), w2()), cs({"0", "11"})) == cs({"0", "11"}));
  CHECK(preimage_hom(PresentedMap::constant(w0(), w0(), pt("", "1")), cs({"0"})).is_empty());
  // Boolean homomorphism on a probe
  const PresentedMap f = suite_map("fold").map;
  for (std::uint64_t a = 0; a < 16; ++a) {
    for (std::uint64_t b = 0; b < 16; b += 3) {
      const ClopenSet A = from_mask(a, 2), B = from_mask(b, 2);
      CHECK(f.preimage(A.meet(B)) == f.preimage(A).meet(f.preimage(B)));
      CHECK(f.preimage(A.complement()) == f.preimage(A).complement());
    }
  }
}

TEST_CASE("region images and preimages agree with pointwise evaluation") {
  for (const auto& m : map_suite()) {
    const PresentedMap& f = m.map;
    const auto pts1 = sample_points(f.domain());
    const auto pts2 = sample_points(f.codomain());
    for (std::uint64_t mask : {0x1ull, 0x6ull, 0x9ull, 0xEull, 0xFull}) {
      const ClopenSet c = from_mask(mask, 2);
      const Region r{c, {pts1[0]}, {pts1[5]}};
      const Region img = f.image(r.normalized(f.domain()));
      for (const Point& x : pts1) {
        if (r.normalized(f.domain()).contains(f.domain(), x)) CHECK(img.contains(f.codomain(), f.apply(x)));
      }
      const Region s{c, {pts2[1]}, {pts2[4]}};
      const Region pre = f.preimage(s.normalized(f.codomain()));
      for (const Point& x : pts1) {
        CHECK(pre.contains(f.domain(), x) == s.normalized(f.codomain()).contains(f.codomain(), f.apply(x)));
      }
    }
  }
}

TEST_CASE("composition of presented maps") {
  for (const auto& [i, j] : composable_pairs()) {
    const PresentedMap& f = map_suite()[i].map;
    const PresentedMap& h = map_suite()[j].map;
    const PresentedMap hf = compose(f, h);
    for (const Point& x : sample_points(f.domain())) CHECK(hf.apply(x) == h.apply(f.apply(x)));
  }
}

TEST_CASE("check_zeq examples") {
  const PresentedMap id1 = PresentedMap::identity(w1(), w1());
  auto r = check_zeq(id1, Zlba::trivial(w1()), Zlba::top(w1()));
  CHECK(r.zeq1);
  CHECK(r.zeq2);
  r = check_zeq(id1, Zlba::top(w1()), Zlba::trivial(w1()));
  CHECK(r.zeq1);
  CHECK_FALSE(r.zeq2);
  REQUIRE(r.f_witness);
  CHECK(r.f_witness->is_full());
  CHECK(verify_zeq_witnesses(id1, Zlba::top(w1()), Zlba::trivial(w1()), r));

  const World wb = suite_world("W2b");
  r = check_zeq(suite_map("swap").map, two_point(wb), two_point(wb));
  CHECK(r.ok());

  const PresentedMap id2 = PresentedMap::identity(w2(), w2());
  r = check_zeq(id2, glued(w2(), true), two_point(w2()));
  CHECK_FALSE(r.zeq1);
  REQUIRE(r.g_witness);
  CHECK(verify_zeq_witnesses(id2, glued(w2(), true), two_point(w2()), r));
  CHECK_THROWS_AS(extend(id2, glued(w2(), true), two_point(w2())), ZeqViolation);
  try {
    extend(id2, glued(w2(), true), two_point(w2()));
  } catch (const ZeqViolation& e) {
    CHECK_FALSE(e.result().zeq1);
  }
}

TEST_CASE("extend examples") {
  const PresentedMap id2 = PresentedMap::identity(w2(), w2());
  const ExtensionMap g = extend(id2, two_point(w2()), glued(w2(), true));
  REQUIRE(g.remainder.size() == 2);
  CHECK(g.remainder[0] == YPoint::infinity(0));
  CHECK(g.remainder[1] == YPoint::infinity(0));

  const PresentedMap c = suite_map("const01").map;
  for (const Zlba& z1 : partial_partitions(w1())) {
    for (const Zlba& z2 : partial_partitions(w1())) {
      const ExtensionMap h = extend(c, z1, z2);
      for (const YPoint& u : h.remainder) CHECK(u == YPoint::principal(pt("", "01")));
    }
  }
  // g after f1 equals f2 after f on samples
  const ExtensionMap e = extend(id2, Zlba::trivial(w2()), Zlba::top(w2()));
  for (const Point& x : sample_points(w2())) CHECK(e.apply(YPoint::principal(x)) == YPoint::principal(x));
}

TEST_CASE("existence: extend succeeds iff ZEQ1 and ZEQ2, witnesses check") {
  int ok = 0, bad = 0;
  for (const auto& m : map_suite()) {
    for (const Zlba& z1 : partial_partitions(m.map.domain())) {
      for (const Zlba& z2 : partial_partitions(m.map.codomain())) {
        const ZeqResult r = check_zeq(m.map, z1, z2);
        const ExtendAttempt a = try_extend(m.map, z1, z2);
        CHECK_MESSAGE(r.ok() == a.map.has_value(), m.name, " ", z1.label(), " ", z2.label());
        CHECK(verify_zeq_witnesses(m.map, z1, z2, r));
        if (r.ok()) {
          CHECK_NOTHROW(extend(m.map, z1, z2));
          ++ok;
        } else {
          CHECK_THROWS_AS(extend(m.map, z1, z2), ZeqViolation);
          ++bad;
        }
      }
    }
  }
  CHECK(ok > 0);
  CHECK(bad > 0);
}

TEST_CASE("tampered witnesses are refused") {
  const PresentedMap id2 = PresentedMap::identity(w2(), w2());
  ZeqResult r = check_zeq(id2, glued(w2(), true), two_point(w2()));
  r.g_witness = ClopenSet::full();
  CHECK_FALSE(verify_zeq_witnesses(id2, glued(w2(), true), two_point(w2()), r));
  const PresentedMap id1 = PresentedMap::identity(w1(), w1());
  r = check_zeq(id1, Zlba::top(w1()), Zlba::trivial(w1()));
  r.f_witness = cs({"1"});
  CHECK_FALSE(verify_zeq_witnesses(id1, Zlba::top(w1()), Zlba::trivial(w1()), r));
}

TEST_CASE("topology of Y") {
  const DualSpace y = theta_a(Zlba::top(w1()));
  const YSubset s{Region::of(cs({"0"})), {false}};
  CHECK(closure(y, s).flags[0]);
  CHECK_FALSE(is_closed(y, s));
  CHECK(is_open(y, s));
  const YSubset t{Region::of(cs({"0"})), {true}};
  CHECK(is_closed(y, t));
  CHECK(is_open(y, t));
  CHECK(is_compact(y, t));
  const YSubset u{Region::of(cs({"1"})), {true}};
  CHECK_FALSE(is_open(y, u));
  CHECK(same(y, complement(y, complement(y, u)), u));
  const DualSpace x = theta_a(Zlba::trivial(w1()));
  CHECK_FALSE(is_compact(x, whole(x)));
  CHECK(is_compact(x, YSubset{Region::of(cs({"1"})), {}}));
}

TEST_CASE("skeletal examples") {
  CHECK(is_skeletal(PresentedMap::identity(w1(), w1())));
  CHECK_FALSE(is_skeletal(PresentedMap::constant(w0(), w0(), pt("", "1"))));
  CHECK(is_skeletal(drop_first(w0())));
  for (const auto& m : map_suite()) {
    const SkeletalVerdict v = skeletal_triple(m.map);
    CHECK_MESSAGE(v.agree(), m.name);
    CHECK(is_skeletal(m.map) == !m.map.has_const_pieces());
  }
}

TEST_CASE("property condition examples") {
  auto c = check_property_conditions(PresentedMap::identity(w2(), w2()), two_point(w2()), glued(w2(), true));
  CHECK_FALSE(c.zo);
  CHECK(c.zp);
  CHECK(c.density);
  auto rep = verify_main_theorem(PresentedMap::identity(w2(), w2()), two_point(w2()), glued(w2(), true));
  CHECK(rep.all_agree());
  CHECK(rep.rows[7].clause == "h");
  CHECK(rep.rows[7].actual);
  CHECK_FALSE(rep.rows[1].actual);

  c = check_property_conditions(PresentedMap::identity(w1(), w1()), Zlba::trivial(w1()), Zlba::top(w1()));
  CHECK(c.ideal_inclusion);
  CHECK(c.density);
  rep = verify_main_theorem(PresentedMap::identity(w1(), w1()), Zlba::trivial(w1()), Zlba::top(w1()));
  CHECK(rep.rows[8].clause == "i");
  CHECK(rep.rows[8].actual);
  CHECK(rep.all_agree());

  c = check_property_conditions(suite_map("const01").map, Zlba::top(w1()), Zlba::top(w1()));
  CHECK_FALSE(c.zi);
  rep = verify_main_theorem(suite_map("const01").map, Zlba::top(w1()), Zlba::top(w1()));
  CHECK_FALSE(rep.rows[0].predicted);
  CHECK_FALSE(rep.rows[0].actual);
}

TEST_CASE("main theorem over the suite, with a block-level second opinion") {
  int instances = 0;
  for (const auto& m : map_suite()) {
    for (const Zlba& z1 : partial_partitions(m.map.domain())) {
      for (const Zlba& z2 : partial_partitions(m.map.codomain())) {
        if (!check_zeq(m.map, z1, z2).ok()) continue;
        ++instances;
        const TheoremReport rep = verify_main_theorem(m.map, z1, z2);
        CHECK_MESSAGE(rep.all_agree(), m.name, " ", z1.label(), " ", z2.label(), "\n", rep.to_string());
        const PropertyConditions c = check_property_conditions(m.map, z1, z2);
        const ClosedForm cf = closed_form(m.map, z1, z2);
        const std::string where = m.name + " " + z1.label() + " " + z2.label();
        CHECK_MESSAGE(c.zo == cf.zo, where);
        CHECK_MESSAGE(c.zp == cf.zp, where);
        CHECK_MESSAGE(c.zi == cf.zi, where);
        CHECK_MESSAGE(c.density == cf.density, where);
        CHECK_MESSAGE(c.ideal_inclusion == cf.inclusion, where);
        // skeletal transfers both ways
        CHECK(skeletal_triple(extend(m.map, z1, z2)).interior_rule == is_skeletal(m.map));
      }
    }
  }
  CHECK(instances > 100);
}

TEST_CASE("quasi-open iff skeletal for closed extensions") {
  for (const auto& m : map_suite()) {
    for (const Zlba& z1 : partial_partitions(m.map.domain())) {
      for (const Zlba& z2 : partial_partitions(m.map.codomain())) {
        if (!check_zeq(m.map, z1, z2).ok()) continue;
        const ActualProperties a = inspect(extend(m.map, z1, z2));
        if (a.closed) CHECK_MESSAGE(a.quasi_open == a.skeletal, m.name, " ", z1.label(), " ", z2.label());
      }
    }
  }
}

TEST_CASE("Banaschewski functor and the compact-target variant") {
  const ExtensionMap b = banaschewski_functor(PresentedMap::identity(w1(), w1())).map;
  CHECK(b.remainder == std::vector<YPoint>{YPoint::infinity(0)});
  const auto d = banaschewski_functor(drop_first(w0()));
  CHECK(d.clauses.all_agree());
  CHECK(d.clauses.rows[1].actual);
  CHECK(d.clauses.rows[2].actual);
  const auto c = banaschewski_functor(PresentedMap::constant(w1(), w1(), pt("", "1")));
  CHECK_FALSE(c.clauses.rows[0].predicted);
  CHECK_FALSE(c.clauses.rows[0].actual);
  for (const auto& m : map_suite()) {
    if (m.map.domain().size() > 2 || m.map.codomain().size() > 2) continue;
    CHECK_MESSAGE(banaschewski_functor(m.map).clauses.all_agree(), m.name);
    for (const Zlba& z2 : partial_partitions(m.map.codomain())) {
      if (!z2.is_compact()) continue;
      const auto r = compact_target_corollary(m.map, z2);
      CHECK_MESSAGE(r.clauses.all_agree(), m.name, " ", z2.label(), "\n", r.clauses.to_string());
    }
  }
  CHECK_THROWS_AS(compact_target_corollary(PresentedMap::identity(w1(), w1()), Zlba::trivial(w1())), DomainError);
}

TEST_CASE("functor laws") {
  long checked = 0;
  for (const auto& [i, j] : composable_pairs()) {
    const PresentedMap& f = map_suite()[i].map;
    const PresentedMap& h = map_suite()[j].map;
    if (f.domain().size() > 2 || f.codomain().size() > 2 || h.codomain().size() > 2) continue;
    const PresentedMap hf = compose(f, h);
    for (const Zlba& z1 : partial_partitions(f.domain())) {
      for (const Zlba& z2 : partial_partitions(f.codomain())) {
        if (!check_zeq(f, z1, z2).ok()) continue;
        const ExtensionMap g1 = extend(f, z1, z2);
        // the ultrafilter route gives the same map
        CHECK(theta_a_morphism(ZlbaMorphism{f, z2, z1}).remainder == g1.remainder);
        for (const ClopenSet& c : algebra_probe(z2, 2)) CHECK(theta_t_morphism(g1, c) == f.preimage(c));
        for (const Zlba& z3 : partial_partitions(h.codomain())) {
          if (!check_zeq(h, z2, z3).ok()) continue;
          const ExtensionMap g2 = extend(h, z2, z3);
          REQUIRE(check_zeq(hf, z1, z3).ok());
          const ExtensionMap g = extend(hf, z1, z3);
          CHECK(g.remainder == compose(g1, g2).remainder);
          for (const ClopenSet& c : algebra_probe(z3, 2)) {
            CHECK(theta_t_morphism(g, c) == theta_t_morphism(g1, theta_t_morphism(g2, c)));
          }
          const ExtensionMap a = theta_a_morphism(ZlbaMorphism{hf, z3, z1});
          const ExtensionMap b = compose(theta_a_morphism(ZlbaMorphism{f, z2, z1}), theta_a_morphism(ZlbaMorphism{h, z3, z2}));
          CHECK(a.remainder == b.remainder);
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("skeletal verdict is stable under the exhaustive depth-3 open family") {
  for (const auto& m : map_suite()) {
    const PresentedMap& f = m.map;
    std::vector<Point> marks;
    for (const Piece& p : f.pieces()) {
      if (p.is_const) marks.push_back(p.value);
    }
    bool interior_rule = true;
    for (std::uint64_t mask = 0; mask < 256; ++mask) {
      for (bool punch : {false, true}) {
        const Region v = Region{from_mask(mask, 3), punch ? marks : std::vector<Point>{}, {}}.normalized(f.codomain());
        if (!region_subset(f.domain(), f.preimage(v.closure()).interior(), f.preimage(v).closure())) interior_rule = false;
      }
    }
    CHECK_MESSAGE(interior_rule == is_skeletal(f), m.name);
  }
}
