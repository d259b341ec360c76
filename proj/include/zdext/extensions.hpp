#pragma once

// Zero-dimensional locally compact extensions with finite remainder, the
// maps alpha0 / beta0 between them and ZLBAs, their order, and catalogs.

#include <optional>
#include <string>
#include <vector>

#include "zdext/zlba.hpp"

namespace zdext {

/// (Y, f): Y = theta_a(z) and f the principal-point embedding.
struct Extension {
  Zlba structure;
  DualSpace space;

  const World& world() const { return space.world; }
  bool is_compact() const { return space.is_compact(); }
  /// "extension E infinity={{1,2}} missing={3}" without the keyword and name.
  std::string describe() const;

  /// Extensions are equivalent iff their remainder structures agree.
  friend bool equivalent(const Extension& a, const Extension& b) { return a.space == b.space; }
};

/// beta0(z): requires a valid z; an invalid one is rejected with the
/// certificate's description in the message.
Extension beta0(const Zlba& z);
/// alpha0(Y, f) = (f^-1(CO(Y)), f^-1(CK(Y))), read back through theta_t and
/// checked against the trace of every probe clopen of Y.
Zlba alpha0(const Extension& e);

/// Continuous h: Y2 -> Y1 that is the identity on X, described by where it
/// sends the remainder points of Y2.
struct RemainderMap {
  std::vector<YPoint> image;  ///< per remainder point of Y2
};

struct LeqResult {
  bool holds = false;
  std::optional<RemainderMap> witness;
  long candidates_tried = 0;
};

/// [(Y1, f1)] <= [(Y2, f2)]: searches every assignment of Y2's remainder
/// points to Y1's remainder points and a few principal points, and keeps
/// one whose preimages of the clopens of Y1 are open in Y2.
LeqResult extension_leq(const Extension& e1, const Extension& e2);

/// Is the given assignment continuous (preimages of every clopen shape of Y1 open in Y2)?
bool remainder_map_continuous(const Extension& e1, const Extension& e2, const RemainderMap& h);

struct Catalog {
  World world;
  std::vector<Zlba> zlbas;
  std::vector<Extension> extensions;
  std::vector<std::vector<bool>> leq0_matrix;     ///< [i][j] = leq0(z_i, z_j)
  std::vector<std::vector<bool>> extension_matrix;  ///< [i][j] = extension_leq(e_i, e_j)
  std::vector<bool> compact;

  std::size_t size() const { return zlbas.size(); }
};

/// Every partial partition of the punctures: a filled set S, a partition of
/// S, and singletons outside S. Sorted canonically.
std::vector<Zlba> partial_partitions(const World& w, const Limits& limits = default_limits());

/// Builds the catalog with both order matrices. `with_orders = false` skips
/// the (quadratic) matrices.
Catalog enumerate_catalog(const World& w, bool with_orders = true, const Limits& limits = default_limits());

/// Bell numbers by the Bell triangle.
unsigned long long bell(int n);

/// Cover pairs (i, j) with i < j in the order, nothing strictly between.
std::vector<std::pair<int, int>> hasse_covers(const std::vector<std::vector<bool>>& leq);

/// DOT digraph of the leq0 covers; node label "(blocks|filled)", edges from
/// the smaller element to the cover.
std::string catalog_dot(const Catalog& c);

/// The greatest zero-dimensional compactification: every puncture restored.
Extension banaschewski(const World& w);

}  // namespace zdext
