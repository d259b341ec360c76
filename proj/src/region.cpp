#include "zdext/region.hpp"

#include <algorithm>

namespace zdext {

namespace {

bool listed(const std::vector<Point>& pts, const Point& x) {
  return std::find(pts.begin(), pts.end(), x) != pts.end();
}

void sort_unique(std::vector<Point>& pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

// Rebuilds a region from a new body and a membership oracle evaluated on
// every point either operand mentions explicitly.
template <class Member>
Region rebuild(const World& w, ClopenSet body, const Region& a, const Region& b, Member in) {
  Region out{std::move(body), {}, {}};
  auto visit = [&](const Point& x) {
    if (w.is_puncture(x)) return;
    const bool inside = in(x);
    if (out.body.contains(x)) {
      if (!inside) out.removed.push_back(x);
    } else if (inside) {
      out.added.push_back(x);
    }
  };
  for (const auto* list : {&a.removed, &a.added, &b.removed, &b.added}) {
    for (const Point& x : *list) visit(x);
  }
  sort_unique(out.removed);
  sort_unique(out.added);
  return out;
}

}  // namespace

Region Region::normalized(const World& w) const {
  Region out{body, {}, {}};
  for (const Point& x : removed) {
    if (!w.is_puncture(x) && body.contains(x)) out.removed.push_back(x);
  }
  for (const Point& x : added) {
    if (!w.is_puncture(x) && !body.contains(x)) out.added.push_back(x);
  }
  sort_unique(out.removed);
  sort_unique(out.added);
  return out;
}

bool Region::contains(const World& w, const Point& x) const {
  if (w.is_puncture(x)) return false;
  if (body.contains(x)) return !listed(removed, x);
  return listed(added, x);
}

std::string Region::to_string() const {
  std::string s = body.to_string();
  auto list = [](const std::vector<Point>& pts) {
    std::string t = "{";
    for (std::size_t i = 0; i < pts.size(); ++i) t += (i ? ", " : "") + pts[i].to_string();
    return t + "}";
  };
  if (!removed.empty()) s += " minus " + list(removed);
  if (!added.empty()) s += " plus " + list(added);
  return s;
}

Region region_union(const World& w, const Region& a, const Region& b) {
  return rebuild(w, a.body.join(b.body), a, b,
                 [&](const Point& x) { return a.contains(w, x) || b.contains(w, x); });
}

Region region_meet(const World& w, const Region& a, const Region& b) {
  return rebuild(w, a.body.meet(b.body), a, b,
                 [&](const Point& x) { return a.contains(w, x) && b.contains(w, x); });
}

Region region_minus(const World& w, const Region& a, const Region& b) {
  return rebuild(w, a.body.minus(b.body), a, b,
                 [&](const Point& x) { return a.contains(w, x) && !b.contains(w, x); });
}

Region region_complement(const World& w, const Region& a) {
  return region_minus(w, Region::of(ClopenSet::full()), a);
}

bool region_subset(const World& w, const Region& a, const Region& b) {
  return region_minus(w, a, b).is_empty();
}

bool region_intersects(const World& w, const Region& a, const Region& b) {
  return !region_meet(w, a, b).is_empty();
}

}  // namespace zdext
