#pragma once

// ZLB-algebras of a pierced world presented by a partial gluing of its
// punctures, their dual spaces, and the two duality functors on objects.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "zdext/cantor.hpp"
#include "zdext/region.hpp"

namespace zdext {

/// (A(pi), I(pi, S)): pi partitions the punctures into blocks, S marks the
/// filled blocks. A = clopens constant on every block; I = members of A with
/// no puncture of an unfilled block.
class Zlba {
 public:
  /// Blocks must partition the punctures of `world`; they are reordered by
  /// lowest puncture index, `filled` travels with its block.
  Zlba(World world, std::vector<PunctureSet> blocks, std::vector<bool> filled);

  /// Discrete partition, every block filled: (CO(X), CO(X)) restricted to traces.
  static Zlba top(const World& w);
  /// Discrete partition, nothing filled: the extension X itself.
  static Zlba trivial(const World& w);

  const World& world() const { return world_; }
  const std::vector<PunctureSet>& blocks() const { return blocks_; }
  const std::vector<bool>& filled() const { return filled_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  int block_of(int puncture) const;

  PunctureSet filled_punctures() const;
  PunctureSet unfilled_punctures() const { return world_.all() & ~filled_punctures(); }
  /// I = A.
  bool is_compact() const { return unfilled_punctures() == 0; }

  bool constant_on_blocks(PunctureSet s) const;
  bool in_algebra(const ClopenSet& c) const { return constant_on_blocks(world_.punctures_in(c)); }
  bool in_ideal(const ClopenSet& c) const;

  /// "({1,2},{3}|{1})": blocks by 1-based puncture index, then filled block ids.
  std::string label() const;

  friend bool operator==(const Zlba&, const Zlba&) = default;
  friend bool operator<(const Zlba& a, const Zlba& b);

 private:
  World world_;
  std::vector<PunctureSet> blocks_;
  std::vector<bool> filled_;
};

std::string puncture_set_to_string(PunctureSet s);

// ------------------------------------------------------------ admissibility

/// An algebra and an ideal of clopen traces given by membership tests. This
/// is how presentations other than (pi, S) reach check_admissible.
struct MembershipPresentation {
  World world;
  std::function<bool(const ClopenSet&)> in_algebra;
  std::function<bool(const ClopenSet&)> in_ideal;
  int probe_depth = 3;
};

MembershipPresentation presentation_of(const Zlba& z, int probe_depth = 3);

struct AdmissibilityResult {
  bool ok = true;
  std::string clause;  ///< "subalgebra", "ideal", "dense", "base"
  std::optional<ClopenSet> witness_set;
  std::optional<Point> witness_point;
};

/// Checks, on the probe family (every clopen of depth <= probe_depth plus
/// the separating cylinders of the sample points): A is closed under the
/// Boolean operations, I is an ideal of A, I is dense in A, and every sample
/// point of X has members of I inside each of its probe-depth cylinders.
AdmissibilityResult check_admissible(const MembershipPresentation& p);
AdmissibilityResult check_admissible(const Zlba& z);

/// Deterministic sample of points of X used by the base-property probe and
/// the point checks throughout: the punctures' immediate neighbours plus a
/// fixed spread of short eventually periodic points.
std::vector<Point> sample_points(const World& w);

// ------------------------------------------------------------ ZLBA axiom

/// Evidence that an unfilled non-singleton block kills the ZLBA axiom.
///
/// J = { C in I : C cap D = empty } is a simple ideal of I (split any C into
/// C \ D and C cap D). Its upper bounds in A are exactly the members of A
/// containing 2^omega \ D; each of them contains p_in, hence p_out by block
/// constancy, hence a cylinder around p_out. Shrinking that cylinder always
/// yields a strictly smaller upper bound, so J has no least one.
struct NonJoinCertificate {
  int block = 0;
  int p_in = 0;   ///< puncture kept outside D
  int p_out = 0;  ///< puncture isolated by D
  ClopenSet d;
  ClopenSet upper1;  ///< (2^omega \ D) cup [p_out | depth(D)+1]
  ClopenSet upper2;  ///< (2^omega \ D) cup [p_out | depth(D)+2], strictly below upper1
};

struct ZlbaCheck {
  bool valid = false;
  std::optional<NonJoinCertificate> certificate;
};

ZlbaCheck check_zlba(const Zlba& z);

/// Strictly smaller upper bound of the certificate's J below a given one.
ClopenSet descend(const Zlba& z, const NonJoinCertificate& c, const ClopenSet& upper);

struct CertificateCheck {
  bool ok = false;
  std::string reason;  ///< first failed step when !ok
};

/// Re-verifies a certificate by direct evaluation: D isolates p_out, the
/// simplicity split works on every probe member of I, both bounds are upper
/// bounds lying in A, upper2 is strictly below upper1, and descent produces
/// strictly smaller upper bounds from each of them.
CertificateCheck verify_certificate(const Zlba& z, const NonJoinCertificate& c);

// ------------------------------------------------------------ order

/// (A1, I1) <=0 (A2, I2): A1 is a subalgebra of A2 and every member of I2 is
/// below some member of I1.
bool leq0(const Zlba& z1, const Zlba& z2);

// ------------------------------------------------------------ dual spaces

/// Y = X plus one point per filled block; unfilled punctures stay out.
struct DualSpace {
  World world;
  std::vector<PunctureSet> infinity_blocks;
  PunctureSet missing = 0;

  int infinity_count() const { return static_cast<int>(infinity_blocks.size()); }
  bool is_compact() const { return missing == 0; }
  std::optional<int> infinity_of(int puncture) const;

  friend bool operator==(const DualSpace&, const DualSpace&) = default;
};

/// A point of Y: principal(x) for x in X or the remainder point of a filled block.
struct YPoint {
  enum class Kind { principal, infinity };
  Kind kind = Kind::principal;
  Point x;
  int index = 0;  ///< infinity point index when kind == infinity

  static YPoint principal(Point p) { return {Kind::principal, std::move(p), 0}; }
  static YPoint infinity(int i) { return {Kind::infinity, Point{}, i}; }
  bool is_infinity() const { return kind == Kind::infinity; }
  std::string to_string() const;

  friend bool operator==(const YPoint&, const YPoint&) = default;
  friend bool operator<(const YPoint& a, const YPoint& b);
};

/// A clopen subset of Y: its trace on X (as a Cantor clopen) and the
/// remainder points it contains.
struct YClopen {
  ClopenSet base;
  std::vector<bool> flags;

  friend bool operator==(const YClopen&, const YClopen&) = default;
};

/// Finitely describable subsets of Y: a region of X together with a set of
/// remainder points.
struct YSubset {
  Region region;
  std::vector<bool> flags;

  friend bool operator==(const YSubset&, const YSubset&) = default;
};

DualSpace theta_a(const Zlba& z);
Zlba theta_t(const DualSpace& y);

/// lambda(C) for C in A.
YClopen lambda(const Zlba& z, const ClopenSet& c);
/// The clopen of Y with this trace on X; requires constancy on the remainder blocks.
YClopen yclopen(const DualSpace& y, const ClopenSet& c);
bool is_yclopen(const DualSpace& y, const ClopenSet& c);
/// Compact clopens of Y: closed clopens whose trace avoids the missing punctures.
bool is_compact_yclopen(const DualSpace& y, const YClopen& v);

bool contains(const DualSpace& y, const YClopen& v, const YPoint& u);
bool contains(const DualSpace& y, const YSubset& s, const YPoint& u);
YSubset as_subset(const YClopen& v);

/// The ultrafilter named by u contains C (C in A).
bool ultrafilter_contains(const Zlba& z, const YPoint& u, const ClopenSet& c);

/// principal(x); a puncture is a domain error.
YPoint point_to_ultrafilter(const Zlba& z, const Point& x);

struct DualityCheck {
  bool ok = true;
  std::string failure;
  long checked = 0;
};

/// lambda is an injective Boolean homomorphism on the probe family of A,
/// lambda(A) = CO(Y) and lambda(I) = CK(Y) by double inclusion, and its
/// membership rule for remainder points holds for every base element of
/// depth <= 4.
DualityCheck verify_lambda(const Zlba& z);

/// t^C: the preimage of lambda(C) under point_to_ultrafilter is C cap X on
/// the sample points, and distinct sample points give distinct ultrafilters.
DualityCheck verify_t_naturality(const Zlba& z);

/// Members of the probe family (depth <= d) lying in A, resp. I.
std::vector<ClopenSet> algebra_probe(const Zlba& z, int depth);
std::vector<ClopenSet> ideal_probe(const Zlba& z, int depth);

/// All (pi, S) pairs of a world, valid or not; used by the validity sweeps.
std::vector<Zlba> all_presentations(const World& w);

}  // namespace zdext
