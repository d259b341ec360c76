#pragma once

// Zero-dimensional local proximities on a pierced world: Leader's proximity
// of an extension, the conversions to and from ZLBAs, axiom checks over a
// seeded sample family, and equicontinuity of presented maps.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "zdext/extensions.hpp"
#include "zdext/maps.hpp"
#include "zdext/region.hpp"

namespace zdext {

/// (X, delta, B) on representable subsets (regions of X). `structure` is the
/// ZLBA the proximity was built from; it only feeds the constructive parts of
/// the axiom checks (interpolants), which are then verified with the
/// predicates alone.
struct LocalProximity {
  World world;
  Zlba structure;
  std::function<bool(const Region&, const Region&)> near;
  std::function<bool(const Region&)> bounded;

  /// a << b: a is far from X \ b.
  bool well_inside(const Region& a, const Region& b) const;
};

/// Closures in Y meet; bounded iff the closure in Y is compact.
LocalProximity lambda_from_extension(const Extension& e);

/// The quantifier formulas over I: B = subsets of members of I; for bounded
/// M, N: M near N iff every F in I above M meets N; in general K near L iff
/// some bounded M in K, N in L are near.
LocalProximity L_X(const Zlba& z);

/// A = { F : F << F }, I = A cap B, read back in (pi, S) form and checked on
/// the depth-3 probe.
Zlba l_X(const LocalProximity& lp);

/// A member F of I with M inside F and F disjoint from N, when one exists.
/// M, N are regions of z's world. The construction widens M by cylinders of
/// growing depth around its added points and the punctures of its blocks,
/// and cuts out N's closure and every other puncture.
std::optional<ClopenSet> ideal_separator(const Zlba& z, const Region& m, const Region& n);

/// Cylinders to depth 3, neighbourhoods of every puncture set, singletons
/// of a few sample points, and `random_count` clopens of depth 6 drawn from
/// raw mt19937_64 words.
std::vector<Region> sample_family(const World& w, std::uint64_t seed, int random_count = 500);

struct AxiomLine {
  std::string axiom;
  long checked = 0;
  long failed = 0;
  std::string witness;  ///< first failure
};

struct AxiomReport {
  std::vector<AxiomLine> lines;
  bool ok() const;
  std::string to_string() const;
};

/// P1, P2, P3, symmetry, separatedness, ideal laws of B, BC1 and BC2 on the
/// sample family: every pair among the structured part, the structured part
/// against each random set, consecutive random pairs, and triples over the
/// structured part plus seeded random triples.
AxiomReport check_axioms(const LocalProximity& lp, std::uint64_t seed, int random_count = 500);

struct Interpolant {
  Region a, b, c;
};

struct ZeroDimResult {
  bool ok = true;
  std::vector<Interpolant> interpolants;
  std::string failure;
};

/// For sampled bounded a << b (the pair scheme of check_axioms), c with a in c
/// in b and c << c.
ZeroDimResult is_zero_dimensional(const LocalProximity& lp, std::uint64_t seed, int random_count = 100);

struct EquicontinuityResult {
  bool eq1 = true;
  bool eq2 = true;
  std::optional<std::pair<Region, Region>> eq1_witness;
  std::optional<Region> eq2_witness;
  bool ok() const { return eq1 && eq2; }
};

/// EQ1 and EQ2 on the sample family of the domain (without random sets).
EquicontinuityResult is_equicontinuous(const PresentedMap& f, const LocalProximity& lp1,
                                       const LocalProximity& lp2, std::uint64_t seed = 7);

/// lp1 <= lp2 in Leader's order on the samples: delta2 inside delta1, B2 inside B1.
bool proximity_leq(const LocalProximity& lp1, const LocalProximity& lp2, const std::vector<Region>& samples);

}  // namespace zdext
