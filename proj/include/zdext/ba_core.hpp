#pragma once

// Explicit finite Boolean algebras, their ideals and ultrafilters, and the
// algebra interface shared with the symbolic (Cantor clopen) tier.

#include <concepts>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zdext/cantor.hpp"
#include "zdext/error.hpp"

namespace zdext {

/// What both tiers provide: a carrier with the Boolean operations.
template <class A>
concept BooleanAlgebra = requires(const A& alg, const typename A::Element& x,
                                  const typename A::Element& y) {
  { alg.bottom() } -> std::convertible_to<typename A::Element>;
  { alg.top() } -> std::convertible_to<typename A::Element>;
  { alg.meet(x, y) } -> std::convertible_to<typename A::Element>;
  { alg.join(x, y) } -> std::convertible_to<typename A::Element>;
  { alg.complement(x) } -> std::convertible_to<typename A::Element>;
  { alg.leq(x, y) } -> std::convertible_to<bool>;
};

/// P(atoms) for a finite atom set; an element is the set of atoms below it.
class FiniteBA {
 public:
  using Element = std::uint64_t;

  explicit FiniteBA(int atom_count, const Limits& limits = default_limits());

  int atom_count() const { return atoms_; }
  std::size_t size() const { return std::size_t{1} << atoms_; }

  Element bottom() const { return 0; }
  Element top() const { return atoms_ == 64 ? ~Element{0} : (Element{1} << atoms_) - 1; }
  Element atom(int i) const { return Element{1} << i; }
  Element meet(Element a, Element b) const { return a & b; }
  Element join(Element a, Element b) const { return a | b; }
  Element complement(Element a) const { return top() & ~a; }
  bool leq(Element a, Element b) const { return (a & ~b) == 0; }
  bool contains(Element a) const { return (a & ~top()) == 0; }

  /// Every element, ascending. Bounded by Limits::max_elements.
  std::vector<Element> elements(const Limits& limits = default_limits()) const;
  /// Sorted element list in the CLI text format, e.g. "[{}, {1}, {2}, {1,2}]".
  std::string dump() const;

  friend bool operator==(const FiniteBA&, const FiniteBA&) = default;

 private:
  int atoms_;
};

std::string element_to_string(FiniteBA::Element e);

/// A subalgebra of a finite ambient algebra, with each of its atoms named by
/// the ambient element it denotes.
struct Subalgebra {
  FiniteBA algebra;
  std::vector<FiniteBA::Element> atom_images;

  FiniteBA::Element embed(FiniteBA::Element e) const;
  std::vector<FiniteBA::Element> ambient_elements() const;
};

/// Smallest subalgebra of `ambient` containing `gens`. Its atoms are the
/// nonempty Boolean combinations of the generators.
Subalgebra generate_subalgebra(const FiniteBA& ambient, std::span<const FiniteBA::Element> gens,
                               const Limits& limits = default_limits());

/// Ideal generated by finitely many elements: downward closure plus finite
/// joins. In a finite algebra this is the principal ideal below the join.
class FiniteIdeal {
 public:
  FiniteIdeal(const FiniteBA& carrier, std::vector<FiniteBA::Element> generators);
  static FiniteIdeal principal(const FiniteBA& carrier, FiniteBA::Element a) { return {carrier, {a}}; }

  const std::vector<FiniteBA::Element>& generators() const { return gens_; }
  FiniteBA::Element bound() const { return bound_; }
  bool contains(FiniteBA::Element a) const { return (a & ~bound_) == 0; }

 private:
  std::vector<FiniteBA::Element> gens_;
  FiniteBA::Element bound_ = 0;
};

/// not J = { a : a meet j = 0 for all j in J }.
FiniteIdeal ideal_pseudocomplement(const FiniteBA& a, const FiniteIdeal& j);

struct SimplicityCertificate {
  /// a in J, b in not J, a join b = 1.
  std::optional<std::pair<FiniteBA::Element, FiniteBA::Element>> witness;
  /// when not simple: an element of A outside J join not J.
  std::optional<FiniteBA::Element> refutation;
};

struct SimplicityResult {
  bool simple = false;
  SimplicityCertificate certificate;
};

SimplicityResult is_simple_ideal(const FiniteBA& a, const FiniteIdeal& j);

/// On the finite tier an ultrafilter is named by its atom.
struct Ultrafilter {
  int atom = 0;
  bool contains(FiniteBA::Element e) const { return (e >> atom) & 1u; }
  friend bool operator==(const Ultrafilter&, const Ultrafilter&) = default;
};

std::vector<Ultrafilter> ultrafilters(const FiniteBA& a);

struct LbaCheck {
  bool ok = false;
  /// a nonzero element with no nonzero element of I below it
  std::optional<FiniteBA::Element> counterexample;
};

/// (A, I) is a local Boolean algebra iff I is dense in A.
LbaCheck check_lba(const FiniteBA& a, const FiniteIdeal& i);

/// The Cantor clopen algebra as a model of the interface.
struct CantorAlgebra {
  using Element = ClopenSet;
  Element bottom() const { return ClopenSet::empty(); }
  Element top() const { return ClopenSet::full(); }
  Element meet(const Element& a, const Element& b) const { return a.meet(b); }
  Element join(const Element& a, const Element& b) const { return a.join(b); }
  Element complement(const Element& a) const { return a.complement(); }
  bool leq(const Element& a, const Element& b) const { return a.subset_of(b); }
};

static_assert(BooleanAlgebra<FiniteBA>);
static_assert(BooleanAlgebra<CantorAlgebra>);

/// First violated Boolean-algebra law over all pairs/triples of the sample,
/// or nullopt. Used by the tests of both tiers.
template <BooleanAlgebra A>
std::optional<std::string> first_law_violation(const A& alg, std::span<const typename A::Element> xs) {
  for (const auto& x : xs) {
    if (!(alg.join(x, alg.complement(x)) == alg.top())) return "complement join";
    if (!(alg.meet(x, alg.complement(x)) == alg.bottom())) return "complement meet";
    if (!(alg.complement(alg.complement(x)) == x)) return "involution";
    for (const auto& y : xs) {
      if (!(alg.complement(alg.meet(x, y)) == alg.join(alg.complement(x), alg.complement(y)))) {
        return "de morgan";
      }
      if (alg.leq(x, y) != (alg.meet(x, y) == x)) return "order";
      for (const auto& z : xs) {
        if (!(alg.meet(x, alg.join(y, z)) == alg.join(alg.meet(x, y), alg.meet(x, z)))) {
          return "distributivity";
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace zdext
