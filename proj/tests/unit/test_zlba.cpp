#include "doctest.h"
#include "helpers.hpp"
#include "zdext/oracles.hpp"
#include "zdext/zlba.hpp"

using namespace zdext;
using namespace testutil;

TEST_CASE("admissibility") {
  CHECK(check_admissible(Zlba::top(w0())).ok);
  CHECK(check_admissible(Zlba::trivial(w1())).ok);
  CHECK(check_admissible(glued(w2(), false)).ok);
  // an ideal stuck inside [0] is not a base at points of [1]
  MembershipPresentation bad{w0(), [](const ClopenSet&) { return true; },
                             [](const ClopenSet& c) { return c.subset_of(cs({"0"})); }, 3};
  auto r = check_admissible(bad);
  CHECK_FALSE(r.ok);
  CHECK(r.clause == "base");
  REQUIRE(r.witness_point.has_value());
  CHECK(r.witness_point->starts_with(Word::from_string("1")));
  // not closed under complement
  MembershipPresentation nosub{w0(), [](const ClopenSet& c) { return !(c == cs({"0"})); },
                               [](const ClopenSet&) { return true; }, 2};
  CHECK(check_admissible(nosub).clause == "subalgebra");
}

TEST_CASE("check_zlba examples and certificates") {
  CHECK(check_zlba(Zlba::top(w0())).valid);
  CHECK(check_zlba(glued(w2(), true)).valid);
  auto bad = check_zlba(glued(w2(), false));
  REQUIRE_FALSE(bad.valid);
  REQUIRE(bad.certificate.has_value());
  CHECK(bad.certificate->p_out == 1);
  CHECK(bad.certificate->d == cs({"1"}));
  CHECK(verify_certificate(glued(w2(), false), *bad.certificate).ok);
  // tampering is caught
  auto forged = *bad.certificate;
  forged.upper2 = cs({"0"});
  CHECK_FALSE(verify_certificate(glued(w2(), false), forged).ok);
  forged = *bad.certificate;
  forged.d = ClopenSet::full();
  CHECK_FALSE(verify_certificate(glued(w2(), false), forged).ok);
}

TEST_CASE("validity criterion agrees with exhaustive bounded join search") {
  for (const World& w : {w0(), w1(), w2(), w3(), World({pt("", "0"), pt("1", "0")})}) {
    for (const Zlba& z : all_presentations(w)) {
      const auto res = check_zlba(z);
      const auto oracle_res = oracle::join_search(z);
      INFO(z.label());
      CHECK(res.valid == oracle_res.all_joins);
      if (!res.valid) CHECK(verify_certificate(z, *res.certificate).ok);
    }
  }
}

TEST_CASE("presentation counts") {
  // sum over partitions of 2^blocks
  CHECK(all_presentations(w0()).size() == 1);
  CHECK(all_presentations(w1()).size() == 2);
  CHECK(all_presentations(w2()).size() == 6);
  CHECK(all_presentations(w3()).size() == 22);
}

TEST_CASE("leq0 examples") {
  const Zlba glue = glued(w2(), true), two = Zlba::top(w2());
  CHECK(leq0(glue, two));
  CHECK_FALSE(leq0(two, glue));
  for (const Zlba& z : all_presentations(w3())) CHECK(leq0(z, z));
  CHECK(leq0(Zlba::top(w1()), Zlba::trivial(w1())));
  CHECK_FALSE(leq0(Zlba::trivial(w1()), Zlba::top(w1())));
}

TEST_CASE("dual spaces") {
  auto y1 = theta_a(Zlba::top(w1()));
  CHECK(y1.is_compact());
  CHECK(y1.infinity_count() == 1);
  auto y0 = theta_a(Zlba::trivial(w1()));
  CHECK(y0.infinity_count() == 0);
  CHECK(y0.missing == 1u);
  auto yg = theta_a(glued(w2(), true));
  CHECK(yg.infinity_count() == 1);
  CHECK(yg.infinity_blocks[0] == 3u);
  CHECK_THROWS_AS(theta_a(glued(w2(), false)), DomainError);

  CHECK(theta_t(y1) == Zlba::top(w1()));
  CHECK(theta_t(y0) == Zlba::trivial(w1()));
  CHECK(theta_t(yg) == glued(w2(), true));
}

TEST_CASE("theta_t after theta_a is the identity exactly on valid presentations") {
  for (const World& w : {w0(), w1(), w2(), w3()}) {
    for (const Zlba& z : all_presentations(w)) {
      const bool valid = check_zlba(z).valid;
      if (valid) {
        CHECK(theta_t(theta_a(z)) == z);
      } else {
        // the dual of the filled part loses the glue of the unfilled block
        DualSpace y{w, {}, z.unfilled_punctures()};
        for (std::size_t b = 0; b < z.blocks().size(); ++b) {
          if (z.filled()[b]) y.infinity_blocks.push_back(z.blocks()[b]);
        }
        CHECK_FALSE(theta_t(y) == z);
      }
    }
  }
}

TEST_CASE("lambda and t^C on the m <= 2 catalogs") {
  for (const World& w : {w0(), w1(), w2()}) {
    for (const Zlba& z : all_presentations(w)) {
      if (!check_zlba(z).valid) continue;
      INFO(z.label());
      auto l = verify_lambda(z);
      CHECK(l.ok);
      CHECK(l.failure == "");
      auto t = verify_t_naturality(z);
      CHECK(t.ok);
      CHECK(t.failure == "");
    }
  }
}

TEST_CASE("ultrafilters of points") {
  const Zlba z = Zlba::trivial(w1());
  CHECK(point_to_ultrafilter(z, pt("", "1")) == YPoint::principal(pt("", "1")));
  CHECK_THROWS_AS(point_to_ultrafilter(z, pt("", "0")), DomainError);
  const Zlba t = Zlba::top(w1());
  CHECK(contains(theta_a(t), lambda(t, cs({"0"})), YPoint::principal(pt("0", "1"))));
  CHECK(ultrafilter_contains(t, YPoint::infinity(0), cs({"00"})));
  CHECK_FALSE(ultrafilter_contains(t, YPoint::infinity(0), cs({"01"})));
  CHECK(check_admissible(MembershipPresentation{w0(), [](const ClopenSet&) { return true; },
                                                [](const ClopenSet& c) { return !c.contains(pt("", "0")); }, 3})
            .clause == "base");
}
