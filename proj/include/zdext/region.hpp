#pragma once

// Definable subsets of a pierced world X: a clopen body with finitely many
// points removed and finitely many points added. This family is closed under
// the Boolean operations, closure, interior and the images/preimages of
// presented maps, which is all the topology the workbench needs on X.

#include <string>
#include <vector>

#include "zdext/cantor.hpp"

namespace zdext {

struct Region {
  ClopenSet body;
  std::vector<Point> removed;  ///< points of X in body that are not in the region
  std::vector<Point> added;    ///< points of X outside body that are in the region

  static Region of(ClopenSet c) { return Region{std::move(c), {}, {}}; }
  static Region points(std::vector<Point> pts) { return Region{{}, {}, std::move(pts)}; }

  /// Drops punctures and redundant entries; sorts the point lists.
  Region normalized(const World& w) const;

  bool contains(const World& w, const Point& x) const;
  bool is_empty() const { return body.is_empty() && added.empty(); }
  /// Interior nonempty (a nonempty clopen body always has uncountably many points of X).
  bool has_interior() const { return !body.is_empty(); }
  bool is_open() const { return added.empty(); }
  bool is_closed() const { return removed.empty(); }

  Region closure() const { return Region{body, {}, added}; }
  Region interior() const { return Region{body, removed, {}}; }

  std::string to_string() const;

  friend bool operator==(const Region&, const Region&) = default;
};

Region region_union(const World& w, const Region& a, const Region& b);
Region region_meet(const World& w, const Region& a, const Region& b);
Region region_minus(const World& w, const Region& a, const Region& b);
Region region_complement(const World& w, const Region& a);
bool region_subset(const World& w, const Region& a, const Region& b);
bool region_intersects(const World& w, const Region& a, const Region& b);

}  // namespace zdext
