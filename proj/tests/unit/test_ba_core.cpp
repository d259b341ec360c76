#include <random>

#include "doctest.h"
#include "zdext/ba_core.hpp"
#include "zdext/oracles.hpp"

using namespace zdext;

TEST_CASE("generate_subalgebra examples") {
  const FiniteBA p4(4);
  std::vector<FiniteBA::Element> g1 = {0b0011};
  auto s1 = generate_subalgebra(p4, g1);
  CHECK(s1.ambient_elements() == std::vector<FiniteBA::Element>{0, 0b0011, 0b1100, 0b1111});

  const FiniteBA p3(3);
  std::vector<FiniteBA::Element> g2 = {1, 2, 4};
  CHECK(generate_subalgebra(p3, g2).algebra.size() == 8);

  const FiniteBA p6(6);
  std::vector<FiniteBA::Element> g3 = {0b000111, 0b001100};
  auto s3 = generate_subalgebra(p6, g3);
  auto atoms = s3.atom_images;
  std::sort(atoms.begin(), atoms.end());
  CHECK(atoms == std::vector<FiniteBA::Element>{0b000011, 0b000100, 0b001000, 0b110000});
  CHECK(s3.ambient_elements() == oracle::closure_subalgebra(6, {0b000111, 0b001100}));
  CHECK(ultrafilters(s3.algebra).size() == 4);
}

TEST_CASE("generate_subalgebra agrees with fixpoint closure, is idempotent and monotone") {
  std::mt19937_64 rng(3);
  const FiniteBA p6(6);
  for (int t = 0; t < 300; ++t) {
    std::vector<FiniteBA::Element> gens;
    const int k = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < k; ++i) gens.push_back(rng() & 63u);
    const auto sub = generate_subalgebra(p6, gens);
    const auto els = sub.ambient_elements();
    REQUIRE(els == oracle::closure_subalgebra(6, gens));
    REQUIRE(generate_subalgebra(p6, els).ambient_elements() == els);
    auto more = gens;
    more.push_back(rng() & 63u);
    const auto bigger = generate_subalgebra(p6, more).ambient_elements();
    REQUIRE(std::includes(bigger.begin(), bigger.end(), els.begin(), els.end()));
  }
}

TEST_CASE("capacity bound on atoms") {
  Limits small;
  small.max_atoms = 3;
  CHECK_THROWS_AS(FiniteBA(4, small), CapacityError);
  const FiniteBA p4(4);
  std::vector<FiniteBA::Element> gens = {1, 2, 4};
  CHECK_THROWS_AS(generate_subalgebra(p4, gens, small), CapacityError);
  CHECK_THROWS_AS(generate_subalgebra(p4, std::span<const FiniteBA::Element>{}), DomainError);
}

TEST_CASE("pseudocomplements") {
  const FiniteBA p3(3);
  CHECK(ideal_pseudocomplement(p3, FiniteIdeal::principal(p3, 0b001)).bound() == 0b110);
  CHECK(ideal_pseudocomplement(p3, FiniteIdeal::principal(p3, 0)).bound() == p3.top());
  const FiniteBA p4(4);
  const FiniteIdeal j(p4, {0b0001, 0b0010});
  const auto neg = ideal_pseudocomplement(p4, j);
  for (FiniteBA::Element x = 0; x < 16; ++x) {
    bool oracle_member = true;
    for (FiniteBA::Element y = 0; y < 16; ++y) {
      if (j.contains(y) && (x & y)) oracle_member = false;
    }
    CHECK(neg.contains(x) == oracle_member);
  }
  CHECK(neg.bound() == 0b1100);
}

TEST_CASE("simplicity") {
  const FiniteBA p4(4);
  auto r = is_simple_ideal(p4, FiniteIdeal::principal(p4, 0b0101));
  CHECK(r.simple);
  CHECK(r.certificate.witness->first == 0b0101);
  CHECK(r.certificate.witness->second == 0b1010);
  auto whole = is_simple_ideal(p4, FiniteIdeal::principal(p4, p4.top()));
  CHECK(whole.simple);
  CHECK(whole.certificate.witness->second == 0);
}

TEST_CASE("ultrafilters are atoms") {
  CHECK(ultrafilters(FiniteBA(1)).size() == 1);
  CHECK(ultrafilters(FiniteBA(3)).size() == 3);
  for (const auto& u : ultrafilters(FiniteBA(3))) CHECK(u.contains(FiniteBA(3).top()));
}

TEST_CASE("local Boolean algebras on the finite tier") {
  const FiniteBA b(3);
  CHECK(check_lba(b, FiniteIdeal::principal(b, b.top())).ok);
  const FiniteBA p2(2);
  auto bad = check_lba(p2, FiniteIdeal::principal(p2, 0));
  CHECK_FALSE(bad.ok);
  CHECK(bad.counterexample.has_value());
  // A dense ideal of a finite algebra is the whole algebra.
  for (int n = 0; n <= 4; ++n) {
    const FiniteBA a(n);
    for (FiniteBA::Element g = 0; g <= a.top(); ++g) {
      CHECK(check_lba(a, FiniteIdeal::principal(a, g)).ok == (g == a.top()));
    }
  }
}

TEST_CASE("exhaustive ideal oracle up to four atoms") {
  auto r = oracle::check_simple_ideals(4);
  CHECK(r.failure == "");
  CHECK(r.algebras == 5);
  // every ideal of a finite algebra is principal: 1 + 2 + 4 + 8 + 16
  CHECK(r.ideals == 31);
  CHECK(r.simple == 31);
}

TEST_CASE("finite algebra laws and dump") {
  const FiniteBA a(3);
  auto els = a.elements();
  CHECK_FALSE(first_law_violation(a, std::span<const FiniteBA::Element>(els)).has_value());
  CHECK(FiniteBA(2).dump() == "[{}, {1}, {2}, {1,2}]");
}
