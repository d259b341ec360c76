#pragma once

// Brute-force reference computations. Nothing here calls the structured
// decision procedures it is compared against; the acceptance suite and the
// unit tests pit the two against each other.

#include <cstdint>
#include <string>
#include <vector>

#include "zdext/ba_core.hpp"

namespace zdext::oracle {

/// A subset of the elements of P(n), as a bitset indexed by element.
using ElementSet = std::vector<bool>;

/// All ideals of P(n), found by testing every subset of elements.
std::vector<ElementSet> all_ideals(int atoms);

/// not J, J join K and J meet K computed straight from the definitions.
ElementSet pseudocomplement(int atoms, const ElementSet& j);
ElementSet ideal_join(int atoms, const ElementSet& j, const ElementSet& k);
ElementSet ideal_meet(const ElementSet& j, const ElementSet& k);
bool is_simple(int atoms, const ElementSet& j);
/// Has a largest element.
bool is_principal(int atoms, const ElementSet& j);
ElementSet down_set(int atoms, std::uint64_t a);

struct SimpleIdealReport {
  int algebras = 0;
  long ideals = 0;
  long simple = 0;
  std::string failure;  ///< empty on success
};

/// For every P(n) with n <= max_atoms: simple = principal, Si(A) with the
/// operations of Idl(A) is a Boolean algebra isomorphic to A via a -> down a,
/// not not J contains J, J meet not J = {0}, and the library agrees on every
/// principal ideal.
SimpleIdealReport check_simple_ideals(int max_atoms);

/// Subalgebra generated by `gens`, by closing under the operations until a
/// fixpoint.
std::vector<std::uint64_t> closure_subalgebra(int atoms, const std::vector<std::uint64_t>& gens);

}  // namespace zdext::oracle

#include "zdext/zlba.hpp"

namespace zdext::oracle {

struct JoinSearch {
  bool all_joins = true;
  /// the first D whose simple ideal {C in I : C cap D = empty} has no join
  std::optional<ClopenSet> failing_d;
  int simple_ideals = 0;
};

/// Bounded-depth join search for (pi, S) presentations whose punctures are
/// separated at depth 2. For every clopen D of depth <= 2 it decides on
/// depth-3/4 bitmasks whether J_D = {C in I : C cap D = empty} is simple and,
/// if so, whether the least upper bound of J_D among depth-2 members of A
/// agrees with the least one among depth-3 members. A shrinking bound means
/// the join in A does not exist.
JoinSearch join_search(const Zlba& z);

}  // namespace zdext::oracle
