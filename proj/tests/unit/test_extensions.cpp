#include "doctest.h"
#include "helpers.hpp"
#include "zdext/extensions.hpp"

using namespace zdext;
using namespace testutil;

TEST_CASE("alpha0 and beta0 examples") {
  CHECK(alpha0(beta0(Zlba::top(w1()))) == Zlba::top(w1()));
  CHECK(alpha0(beta0(Zlba::trivial(w1()))) == Zlba::trivial(w1()));
  CHECK(alpha0(beta0(glued(w2(), true))) == glued(w2(), true));
  CHECK(beta0(Zlba::top(w0())).space.infinity_count() == 0);
  CHECK(beta0(Zlba::trivial(w1())).space.infinity_count() == 0);
  CHECK(beta0(Zlba::top(w2())).space.infinity_count() == 2);
  CHECK(beta0(Zlba::top(w2())).is_compact());
  CHECK_THROWS_AS(beta0(glued(w2(), false)), DomainError);
}

TEST_CASE("catalog sizes are Bell numbers") {
  CHECK(bell(0) == 1);
  CHECK(bell(1) == 1);
  CHECK(bell(2) == 2);
  CHECK(bell(3) == 5);
  CHECK(bell(4) == 15);
  CHECK(bell(5) == 52);
  CHECK(partial_partitions(w0()).size() == 1);
  CHECK(partial_partitions(w1()).size() == 2);
  CHECK(partial_partitions(w2()).size() == 5);
  CHECK(partial_partitions(w3()).size() == 15);
  World w4({pt("", "0"), pt("", "1"), pt("", "01"), pt("", "10")});
  CHECK(partial_partitions(w4).size() == 52);
  World w5({pt("", "0"), pt("", "1"), pt("", "01"), pt("", "10"), pt("", "001")});
  CHECK_THROWS_AS(partial_partitions(w5), CapacityError);
}

TEST_CASE("catalog equals the valid presentations") {
  for (const World& w : {w0(), w1(), w2(), w3()}) {
    std::vector<Zlba> valid;
    for (const Zlba& z : all_presentations(w)) {
      if (check_zlba(z).valid) valid.push_back(z);
    }
    CHECK(partial_partitions(w) == valid);
  }
}

TEST_CASE("extension order examples") {
  const Extension two = beta0(Zlba::top(w2())), glue = beta0(glued(w2(), true));
  const auto same = extension_leq(two, two);
  CHECK(same.holds);
  CHECK(same.witness->image == std::vector<YPoint>{YPoint::infinity(0), YPoint::infinity(1)});
  // the two-point compactification maps onto the glued one ...
  const auto down = extension_leq(glue, two);
  CHECK(down.holds);
  CHECK(down.witness->image == std::vector<YPoint>{YPoint::infinity(0), YPoint::infinity(0)});
  // ... but not back
  CHECK_FALSE(extension_leq(two, glue).holds);
  // X itself is above every extension: the inclusion X -> Y
  const Extension x = beta0(Zlba::trivial(w2()));
  for (const Zlba& z : partial_partitions(w2())) CHECK(extension_leq(beta0(z), x).holds);
}

TEST_CASE("order isomorphism and compactness on the m <= 3 catalogs") {
  for (const World& w : {w0(), w1(), w2(), w3()}) {
    const Catalog c = enumerate_catalog(w);
    CHECK(c.leq0_matrix == c.extension_matrix);
    for (std::size_t i = 0; i < c.size(); ++i) {
      CHECK(c.compact[i] == c.zlbas[i].is_compact());
      CHECK(equivalent(beta0(alpha0(c.extensions[i])), c.extensions[i]));
      CHECK(alpha0(beta0(c.zlbas[i])) == c.zlbas[i]);
    }
  }
}

TEST_CASE("banaschewski is the maximum of the compact part") {
  for (const World& w : {w0(), w1(), w2(), w3()}) {
    const Catalog c = enumerate_catalog(w);
    const Extension b = banaschewski(w);
    int tops = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (!c.compact[i]) continue;
      bool top = true;
      for (std::size_t j = 0; j < c.size(); ++j) {
        if (c.compact[j]) top = top && c.extension_matrix[j][i];
      }
      if (top) {
        ++tops;
        CHECK(equivalent(c.extensions[i], b));
      }
    }
    CHECK(tops == 1);
  }
}

TEST_CASE("hasse diagram") {
  const Catalog c = enumerate_catalog(w2());
  const auto covers = hasse_covers(c.leq0_matrix);
  // transitive reduction: no cover is implied by two others
  for (const auto& [a, b] : covers) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      const int kk = static_cast<int>(k);
      if (kk == a || kk == b) continue;
      CHECK_FALSE((c.leq0_matrix[a][k] && c.leq0_matrix[k][b]));
    }
  }
  const std::string dot = catalog_dot(c);
  CHECK(dot.rfind("digraph catalog {", 0) == 0);
  CHECK(dot.find("({1},{2}|{1,2})") != std::string::npos);
}
