#pragma once

// Presented continuous maps between pierced worlds, their extensions over
// the dual spaces, and the property calculus relating the two.

#include <optional>
#include <string>
#include <vector>

#include "zdext/extensions.hpp"
#include "zdext/region.hpp"
#include "zdext/zlba.hpp"

namespace zdext {

/// One cylinder of the domain and what happens on it.
struct Piece {
  Word domain;
  bool is_const = false;
  Word target;  ///< replace: domain.y -> target.y
  Point value;  ///< const

  static Piece replace(Word w, Word v) { return Piece{w, false, v, Point{}}; }
  static Piece constant(Word w, Point p) { return Piece{w, true, Word{}, std::move(p)}; }
  friend bool operator==(const Piece&, const Piece&) = default;
};

/// f: X1 -> X2 given by pieces partitioning 2^omega. The constructor checks
/// the partition and that no point of X1 lands on a puncture of X2.
class PresentedMap {
 public:
  PresentedMap(World domain, World codomain, std::vector<Piece> pieces);

  static PresentedMap identity(const World& domain, const World& codomain);
  static PresentedMap constant(const World& domain, const World& codomain, const Point& value);

  const World& domain() const { return dom_; }
  const World& codomain() const { return cod_; }
  const std::vector<Piece>& pieces() const { return pieces_; }

  /// The underlying map of 2^omega (punctures go wherever the pieces send them).
  Point apply(const Point& x) const;
  /// Exact preimage of a clopen of 2^omega.
  ClopenSet preimage(const ClopenSet& g) const;
  /// f^-1(R) for a region of X2, as a region of X1.
  Region preimage(const Region& r) const;
  /// f(R) for a region of X1, as a region of X2.
  Region image(const Region& r) const;

  bool has_const_pieces() const;
  /// No two replace targets overlap (then the map is injective on 2^omega
  /// unless it has constant pieces).
  bool targets_disjoint() const;
  /// Replace targets cover 2^omega.
  bool targets_cover() const;

  /// "pieces=[00->0, 01->10, 1->1]" or "const=0(01)".
  std::string to_string() const;

  friend bool operator==(const PresentedMap&, const PresentedMap&) = default;

 private:
  const Piece& piece_of(const Point& x) const;

  World dom_, cod_;
  std::vector<Piece> pieces_;
};

/// h after f.
PresentedMap compose(const PresentedMap& f, const PresentedMap& h);

/// psi_f(G) = f^-1(G).
inline ClopenSet preimage_hom(const PresentedMap& f, const ClopenSet& g) { return f.preimage(g); }

// ------------------------------------------------------------ existence

struct ZeqResult {
  bool zeq1 = true;
  bool zeq2 = true;
  std::optional<ClopenSet> g_witness;  ///< G in A2 with f^-1(G) outside A1
  std::optional<ClopenSet> f_witness;  ///< F in I1 with no G in I2 above f(F)
  bool ok() const { return zeq1 && zeq2; }
};

ZeqResult check_zeq(const PresentedMap& f, const Zlba& z1, const Zlba& z2);

/// Re-checks the witnesses by direct evaluation: the G witness is in A2 and
/// pulls back outside A1; the F witness is in I1 and the closure of f(F)
/// holds an unfilled puncture of X2, which no member of I2 contains.
bool verify_zeq_witnesses(const PresentedMap& f, const Zlba& z1, const Zlba& z2, const ZeqResult& r);

/// An extension precondition failure, carrying the ZEQ verdict and witnesses.
class ZeqViolation : public DomainError {
 public:
  explicit ZeqViolation(ZeqResult r);
  const ZeqResult& result() const { return result_; }

 private:
  ZeqResult result_;
};

/// g: Y1 -> Y2 with g(principal x) = principal f(x).
struct ExtensionMap {
  PresentedMap f;
  Zlba z1, z2;
  DualSpace y1, y2;
  std::vector<YPoint> remainder;  ///< image of each remainder point of Y1

  YPoint apply(const YPoint& u) const;
  YSubset image(const YSubset& s) const;
  YSubset preimage(const YSubset& s) const;
  /// g^-1 of a clopen of Y2 as a clopen of Y1 (continuity makes it one).
  YClopen preimage(const YClopen& v) const;
};

/// g = Theta^a(psi_f): remainder points follow the blocks' images.
/// Throws ZeqViolation when ZEQ1 or ZEQ2 fails.
ExtensionMap extend(const PresentedMap& f, const Zlba& z1, const Zlba& z2);

struct ExtendAttempt {
  std::optional<ExtensionMap> map;
  std::string failure;
};

/// Construction that does not consult check_zeq: each remainder point of Y1
/// goes to the limit in Y2 of f along sequences of X1 running into its
/// punctures; the attempt fails if the limit escapes Y2 or differs between
/// punctures of one block, or if some clopen of Y2 pulls back to a set that
/// is not clopen in Y1.
ExtendAttempt try_extend(const PresentedMap& f, const Zlba& z1, const Zlba& z2);

/// g2 after g1 (pointwise on remainders, pieces composed on X).
ExtensionMap compose(const ExtensionMap& g1, const ExtensionMap& g2);

// ------------------------------------------------------------ topology of Y

YSubset whole(const DualSpace& y);
YSubset normalize(const DualSpace& y, const YSubset& s);
YSubset closure(const DualSpace& y, const YSubset& s);
YSubset interior(const DualSpace& y, const YSubset& s);
YSubset complement(const DualSpace& y, const YSubset& s);
YSubset meet(const DualSpace& y, const YSubset& a, const YSubset& b);
bool same(const DualSpace& y, const YSubset& a, const YSubset& b);
bool is_open(const DualSpace& y, const YSubset& s);
bool is_closed(const DualSpace& y, const YSubset& s);
bool is_compact(const DualSpace& y, const YSubset& s);
bool is_empty(const YSubset& s);

// ------------------------------------------------------------ properties

struct PropertyConditions {
  bool zo = false;
  bool zp = false;
  bool zi = false;
  bool density = false;
  bool ideal_inclusion = false;  ///< I1 inside f^-1(I2)
  bool ideal_equality = false;   ///< f^-1(I2) = I1
  std::vector<std::string> witnesses;  ///< one line per failed condition
};

/// The f-side conditions, each evaluated literally over a finite family of
/// members of I1 (resp. I2) with exact images and preimages. The family
/// holds the depth-2 probe members, puncture-free sub-cylinders of every
/// piece, neighbourhoods of every union of filled blocks, and the largest
/// member avoiding the unfilled punctures.
PropertyConditions check_property_conditions(const PresentedMap& f, const Zlba& z1, const Zlba& z2);

struct ActualProperties {
  bool skeletal = false;
  bool quasi_open = false;
  bool open = false;
  bool closed = false;
  bool perfect = false;
  bool injective = false;
  bool surjective = false;
  bool dense = false;
  bool embedding = false;
};

/// Direct inspection of g on the dual spaces.
ActualProperties inspect(const ExtensionMap& g);

struct SkeletalVerdict {
  bool interior_rule = false;  ///< int f^-1(cl V) inside cl f^-1(V)
  bool image_rule = false;     ///< int cl f(U) nonempty
  bool dense_rule = false;     ///< cl f^-1(V) = whole domain for dense open V
  bool agree() const { return interior_rule == image_rule && image_rule == dense_rule; }
};

/// The three characterizations on the definable open family of X1 -> X2:
/// clopen traces and clopens minus finitely many points.
SkeletalVerdict skeletal_triple(const PresentedMap& f);
/// The same three on Y1 -> Y2.
SkeletalVerdict skeletal_triple(const ExtensionMap& g);
/// Common verdict; disagreement is an InvariantError.
bool is_skeletal(const PresentedMap& f);

struct ClauseRow {
  std::string clause;
  std::string statement;
  bool predicted = false;
  bool actual = false;
  bool agrees() const { return predicted == actual; }
};

struct TheoremReport {
  std::vector<ClauseRow> rows;
  bool all_agree() const;
  std::string to_string() const;
};

/// Clauses (a)-(i): predicted from the f-side conditions, actual from
/// inspecting g. Requires ZEQ1 and ZEQ2.
TheoremReport verify_main_theorem(const PresentedMap& f, const Zlba& z1, const Zlba& z2);

struct BanaschewskiReport {
  ExtensionMap map;
  TheoremReport clauses;
};

/// beta0 f = extend(f, top, top) with the four clauses of its corollary
/// (quasi-open, ZOB, surjection, injection).
BanaschewskiReport banaschewski_functor(const PresentedMap& f);
/// The variant into a compact catalog member c X2 (ZOC).
BanaschewskiReport compact_target_corollary(const PresentedMap& f, const Zlba& compact_z2);

// ------------------------------------------------------------ functor action

/// phi: A_source -> A_target, phi(G) = f^-1(G), with f: X_target -> X_source.
struct ZlbaMorphism {
  PresentedMap f;
  Zlba source;
  Zlba target;

  ClopenSet operator()(const ClopenSet& g) const { return f.preimage(g); }
};

struct MorphismCheck {
  bool ok = true;
  std::optional<ClopenSet> witness;  ///< b in I_target below no phi(a), a in I_source; or G with phi(G) outside A_target
};

/// phi maps A_source into A_target and every b in I_target lies below some phi(a), a in I_source.
MorphismCheck check_morphism(const ZlbaMorphism& phi);

/// Theta^a(phi): Theta^a(target) -> Theta^a(source), u -> phi^-1(u), with
/// each remainder ultrafilter identified by testing membership on the
/// clopen shapes of A_source.
ExtensionMap theta_a_morphism(const ZlbaMorphism& phi);

/// Theta^t(g): G -> g^-1(lambda2(G)) read back as a clopen trace of X1.
ClopenSet theta_t_morphism(const ExtensionMap& g, const ClopenSet& c);

}  // namespace zdext
