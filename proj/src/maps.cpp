#include "zdext/maps.hpp"

#include <algorithm>
#include <deque>

namespace zdext {

namespace {

bool overlaps(const Word& a, const Word& b) { return a.is_prefix_of(b) || b.is_prefix_of(a); }

void sort_unique(std::vector<ClopenSet>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

void sort_unique(std::vector<Point>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::string piece_string(const Piece& p) {
  return p.domain.to_string() + "->" + (p.is_const ? "const:" + p.value.to_string() : p.target.to_string());
}

}  // namespace

// ---------------------------------------------------------------- presented maps

PresentedMap::PresentedMap(World domain, World codomain, std::vector<Piece> pieces)
    : dom_(std::move(domain)), cod_(std::move(codomain)), pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw DomainError("a map needs at least one piece");
  std::vector<Word> doms;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (overlaps(pieces_[i].domain, pieces_[j].domain)) {
        throw DomainError("pieces " + piece_string(pieces_[j]) + " and " + piece_string(pieces_[i]) + " overlap");
      }
    }
    doms.push_back(pieces_[i].domain);
  }
  if (!ClopenSet::from_words(doms).is_full()) throw DomainError("pieces do not cover 2^omega");
  std::sort(pieces_.begin(), pieces_.end(), [](const Piece& a, const Piece& b) { return a.domain < b.domain; });
  for (const Piece& p : pieces_) {
    if (p.is_const) {
      if (cod_.is_puncture(p.value)) {
        throw DomainError("constant value " + p.value.to_string() + " is a puncture of the codomain");
      }
      continue;
    }
    for (const Point& q : cod_.punctures()) {
      if (!q.starts_with(p.target)) continue;
      const Point x = q.drop(p.target.len).prepend(p.domain);
      if (!dom_.is_puncture(x)) {
        throw DomainError("point " + x.to_string() + " of the domain maps onto the puncture " + q.to_string());
      }
    }
  }
}

PresentedMap PresentedMap::identity(const World& domain, const World& codomain) {
  return PresentedMap(domain, codomain, {Piece::replace(Word{}, Word{})});
}

PresentedMap PresentedMap::constant(const World& domain, const World& codomain, const Point& value) {
  return PresentedMap(domain, codomain, {Piece::constant(Word{}, value)});
}

const Piece& PresentedMap::piece_of(const Point& x) const {
  for (const Piece& p : pieces_) {
    if (x.starts_with(p.domain)) return p;
  }
  throw InvariantError("no piece holds " + x.to_string());
}

Point PresentedMap::apply(const Point& x) const {
  const Piece& p = piece_of(x);
  if (p.is_const) return p.value;
  return x.drop(p.domain.len).prepend(p.target);
}

ClopenSet PresentedMap::preimage(const ClopenSet& g) const {
  ClopenSet out;
  for (const Piece& p : pieces_) {
    if (p.is_const) {
      if (g.contains(p.value)) out = out.join(ClopenSet::cylinder(p.domain));
    } else {
      out = out.join(g.quotient(p.target).prefixed(p.domain));
    }
  }
  return out;
}

Region PresentedMap::preimage(const Region& r) const {
  Region out;
  for (const Piece& p : pieces_) {
    if (p.is_const) {
      if (r.contains(cod_, p.value)) out.body = out.body.join(ClopenSet::cylinder(p.domain));
    } else {
      out.body = out.body.join(r.body.quotient(p.target).prefixed(p.domain));
    }
  }
  std::vector<Point> cand;
  for (const Piece& p : pieces_) {
    if (p.is_const) continue;
    for (const auto* list : {&r.removed, &r.added}) {
      for (const Point& y : *list) {
        if (y.starts_with(p.target)) cand.push_back(y.drop(p.target.len).prepend(p.domain));
      }
    }
  }
  sort_unique(cand);
  for (const Point& x : cand) {
    if (dom_.is_puncture(x)) continue;
    const bool in = r.contains(cod_, apply(x));
    if (out.body.contains(x) && !in) out.removed.push_back(x);
    if (!out.body.contains(x) && in) out.added.push_back(x);
  }
  return out.normalized(dom_);
}

Region PresentedMap::image(const Region& r) const {
  Region out;
  std::vector<Point> cand;
  for (const auto* list : {&r.removed, &r.added}) {
    for (const Point& x : *list) cand.push_back(apply(x));
  }
  for (const Point& p : dom_.punctures()) cand.push_back(apply(p));
  for (const Piece& p : pieces_) {
    if (p.is_const) {
      cand.push_back(p.value);
    } else {
      out.body = out.body.join(r.body.quotient(p.domain).prefixed(p.target));
    }
  }
  sort_unique(cand);
  for (const Point& y : cand) {
    if (cod_.is_puncture(y)) continue;
    bool in = false;
    for (const Piece& p : pieces_) {
      if (p.is_const) {
        if (!(p.value == y)) continue;
        const ClopenSet cyl = ClopenSet::cylinder(p.domain);
        in = !r.body.disjoint(cyl) ||
             std::any_of(r.added.begin(), r.added.end(), [&](const Point& x) { return cyl.contains(x); });
      } else if (y.starts_with(p.target)) {
        in = r.contains(dom_, y.drop(p.target.len).prepend(p.domain));
      }
      if (in) break;
    }
    if (out.body.contains(y) && !in) out.removed.push_back(y);
    if (!out.body.contains(y) && in) out.added.push_back(y);
  }
  return out.normalized(cod_);
}

bool PresentedMap::has_const_pieces() const {
  return std::any_of(pieces_.begin(), pieces_.end(), [](const Piece& p) { return p.is_const; });
}

bool PresentedMap::targets_disjoint() const {
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (!pieces_[i].is_const && !pieces_[j].is_const && overlaps(pieces_[i].target, pieces_[j].target)) {
        return false;
      }
    }
  }
  return true;
}

bool PresentedMap::targets_cover() const {
  std::vector<Word> t;
  for (const Piece& p : pieces_) {
    if (!p.is_const) t.push_back(p.target);
  }
  return ClopenSet::from_words(t).is_full();
}

std::string PresentedMap::to_string() const {
  if (pieces_.size() == 1 && pieces_[0].is_const) return "const=" + pieces_[0].value.to_string();
  std::string s = "pieces=[";
  for (std::size_t i = 0; i < pieces_.size(); ++i) s += (i ? ", " : "") + piece_string(pieces_[i]);
  return s + "]";
}

PresentedMap compose(const PresentedMap& f, const PresentedMap& h) {
  if (!(f.codomain() == h.domain())) throw DomainError("compose: codomain and domain differ");
  std::vector<Piece> out;
  for (const Piece& p : f.pieces()) {
    if (p.is_const) {
      out.push_back(Piece::constant(p.domain, h.apply(p.value)));
      continue;
    }
    for (const Piece& q : h.pieces()) {
      if (q.domain.is_prefix_of(p.target)) {
        // [w] -> v lands inside q's piece entirely
        out.push_back(q.is_const ? Piece::constant(p.domain, q.value)
                                 : Piece::replace(p.domain, q.target.concat(p.target.drop(q.domain.len))));
      } else if (p.target.is_prefix_of(q.domain)) {
        const Word w = p.domain.concat(q.domain.drop(p.target.len));
        out.push_back(q.is_const ? Piece::constant(w, q.value) : Piece::replace(w, q.target));
      }
    }
  }
  return PresentedMap(f.domain(), h.codomain(), std::move(out));
}

// ---------------------------------------------------------------- existence

namespace {

// Both points are A2-indistinguishable: equal, or punctures of one block.
bool indistinguishable(const Zlba& z, const Point& a, const Point& b) {
  if (a == b) return true;
  const auto ia = z.world().puncture_index(a), ib = z.world().puncture_index(b);
  return ia && ib && z.block_of(*ia) == z.block_of(*ib);
}

// A member of A2 holding a and missing b (they must be distinguishable).
ClopenSet separate(const Zlba& z, const Point& a, const Point& b) {
  const World& w = z.world();
  const auto ia = w.puncture_index(a);
  if (!ia) {
    std::vector<Point> avoid = w.punctures();
    avoid.push_back(b);
    return separating_cylinder(a, avoid);
  }
  const auto ib = w.puncture_index(b);
  if (!ib) return separate(z, b, a).complement();
  return puncture_neighbourhood(w, z.blocks()[static_cast<std::size_t>(z.block_of(*ia))]);
}

std::optional<int> infinity_index(const Zlba& z, int block) {
  if (!z.filled()[static_cast<std::size_t>(block)]) return std::nullopt;
  int k = 0;
  for (int b = 0; b < block; ++b) k += z.filled()[static_cast<std::size_t>(b)] ? 1 : 0;
  return k;
}

std::vector<int> block_members(const World& w, PunctureSet b) {
  std::vector<int> out;
  for (int i = 0; i < w.size(); ++i) {
    if ((b >> i) & 1u) out.push_back(i);
  }
  return out;
}

}  // namespace

ZeqResult check_zeq(const PresentedMap& f, const Zlba& z1, const Zlba& z2) {
  if (!(f.domain() == z1.world()) || !(f.codomain() == z2.world())) throw DomainError("check_zeq: worlds differ");
  ZeqResult r;
  const World& w1 = z1.world();
  for (PunctureSet b : z1.blocks()) {
    const auto mem = block_members(w1, b);
    for (std::size_t i = 1; i < mem.size() && r.zeq1; ++i) {
      const Point a = f.apply(w1.puncture(mem[0])), c = f.apply(w1.puncture(mem[i]));
      if (!indistinguishable(z2, a, c)) {
        r.zeq1 = false;
        r.g_witness = separate(z2, a, c);
      }
    }
  }
  for (int p = 0; p < w1.size(); ++p) {
    if (!((z1.filled_punctures() >> p) & 1u)) continue;
    const auto q = z2.world().puncture_index(f.apply(w1.puncture(p)));
    if (q && ((z2.unfilled_punctures() >> *q) & 1u)) {
      r.zeq2 = false;
      r.f_witness = puncture_neighbourhood(w1, z1.unfilled_punctures()).complement();
      break;
    }
  }
  return r;
}

bool verify_zeq_witnesses(const PresentedMap& f, const Zlba& z1, const Zlba& z2, const ZeqResult& r) {
  if (r.zeq1 != !r.g_witness.has_value() || r.zeq2 != !r.f_witness.has_value()) return false;
  if (r.g_witness) {
    if (!z2.in_algebra(*r.g_witness) || z1.in_algebra(f.preimage(*r.g_witness))) return false;
  }
  if (r.f_witness) {
    const ClopenSet& F = *r.f_witness;
    if (!z1.in_ideal(F)) return false;
    // some unfilled puncture q of X2 is f(x) for an x of F: then q lies in
    // cl f(F cap X1) and every clopen above f(F) holds it
    bool hit = false;
    for (int q = 0; q < z2.world().size() && !hit; ++q) {
      if (!((z2.unfilled_punctures() >> q) & 1u)) continue;
      const Point& y = z2.world().puncture(q);
      for (const Piece& p : f.pieces()) {
        if (!p.is_const && y.starts_with(p.target) && F.contains(y.drop(p.target.len).prepend(p.domain))) hit = true;
      }
    }
    if (!hit) return false;
  }
  return true;
}

namespace {

std::string zeq_message(const ZeqResult& r) {
  std::string s = "f is not 0-equicontinuous:";
  if (r.g_witness) s += " ZEQ1 fails at G = " + r.g_witness->to_string() + " (f^-1(G) is not in A1);";
  if (r.f_witness) s += " ZEQ2 fails at F = " + r.f_witness->to_string() + " (no G in I2 contains f(F));";
  s.pop_back();
  return s;
}

}  // namespace

ZeqViolation::ZeqViolation(ZeqResult r) : DomainError(zeq_message(r)), result_(std::move(r)) {}

YPoint ExtensionMap::apply(const YPoint& u) const {
  if (u.is_infinity()) return remainder.at(static_cast<std::size_t>(u.index));
  if (f.domain().is_puncture(u.x)) throw DomainError(u.x.to_string() + " is not a point of Y1");
  return YPoint::principal(f.apply(u.x));
}

YSubset ExtensionMap::image(const YSubset& s) const {
  YSubset out{f.image(s.region), std::vector<bool>(static_cast<std::size_t>(y2.infinity_count()), false)};
  for (std::size_t i = 0; i < s.flags.size(); ++i) {
    if (!s.flags[i]) continue;
    const YPoint& v = remainder[i];
    if (v.is_infinity()) {
      out.flags[static_cast<std::size_t>(v.index)] = true;
    } else {
      out.region = region_union(y2.world, out.region, Region::points({v.x}));
    }
  }
  return out;
}

YSubset ExtensionMap::preimage(const YSubset& s) const {
  YSubset out{f.preimage(s.region), {}};
  for (const YPoint& v : remainder) out.flags.push_back(contains(y2, s, v));
  return out;
}

YClopen ExtensionMap::preimage(const YClopen& v) const {
  const YSubset p = normalize(y1, preimage(as_subset(v)));
  if (!p.region.removed.empty() || !p.region.added.empty() || !is_yclopen(y1, p.region.body) ||
      !(yclopen(y1, p.region.body).flags == p.flags)) {
    throw InvariantError("g^-1 of a clopen is not clopen: " + v.base.to_string());
  }
  return YClopen{p.region.body, p.flags};
}

namespace {

// Clopens of A shaped to decide anything about points and blocks: the
// depth-2 probe members and neighbourhoods of every union of blocks, plus
// cylinders around the given points avoiding every puncture.
std::vector<ClopenSet> algebra_shapes(const Zlba& z, const std::vector<Point>& around) {
  std::vector<ClopenSet> out = algebra_probe(z, 2);
  const int n = z.block_count();
  for (std::uint32_t m = 1; m < (1u << n); ++m) {
    PunctureSet s = 0;
    for (int b = 0; b < n; ++b) {
      if ((m >> b) & 1u) s |= z.blocks()[static_cast<std::size_t>(b)];
    }
    out.push_back(puncture_neighbourhood(z.world(), s));
  }
  for (const Point& x : around) {
    if (!z.world().is_puncture(x)) out.push_back(separating_cylinder(x, z.world().punctures()));
  }
  sort_unique(out);
  return out;
}

std::vector<Point> puncture_images(const PresentedMap& f) {
  std::vector<Point> out;
  for (const Point& p : f.domain().punctures()) out.push_back(f.apply(p));
  for (const Piece& p : f.pieces()) {
    if (p.is_const) out.push_back(p.value);
  }
  sort_unique(out);
  return out;
}

}  // namespace

ExtendAttempt try_extend(const PresentedMap& f, const Zlba& z1, const Zlba& z2) {
  ExtendAttempt out;
  DualSpace y1, y2;
  try {
    y1 = theta_a(z1);
    y2 = theta_a(z2);
  } catch (const DomainError& e) {
    out.failure = e.what();
    return out;
  }
  ExtensionMap g{f, z1, z2, y1, y2, {}};
  for (PunctureSet b : y1.infinity_blocks) {
    std::optional<YPoint> lim;
    for (int p : block_members(z1.world(), b)) {
      // f(x_n) -> f(p) in 2^omega; lift the limit into Y2
      const Point y = f.apply(z1.world().puncture(p));
      YPoint v = YPoint::principal(y);
      if (const auto q = z2.world().puncture_index(y)) {
        const auto k = y2.infinity_of(*q);
        if (!k) {
          out.failure = "limit at puncture " + std::to_string(p + 1) + " is the missing point " + y.to_string();
          return out;
        }
        v = YPoint::infinity(*k);
      }
      if (lim && !(*lim == v)) {
        out.failure = "limits at the block " + puncture_set_to_string(b) + " differ: " + lim->to_string() + " vs " +
                      v.to_string();
        return out;
      }
      lim = v;
    }
    g.remainder.push_back(*lim);
  }
  for (const ClopenSet& c : algebra_shapes(z2, puncture_images(f))) {
    const YSubset p = normalize(y1, g.preimage(as_subset(lambda(z2, c))));
    if (!p.region.removed.empty() || !p.region.added.empty() || !is_yclopen(y1, p.region.body) ||
        !(yclopen(y1, p.region.body).flags == p.flags)) {
      out.failure = "preimage of lambda(" + c.to_string() + ") is not clopen in Y1";
      return out;
    }
  }
  out.map = std::move(g);
  return out;
}

ExtensionMap extend(const PresentedMap& f, const Zlba& z1, const Zlba& z2) {
  ZeqResult r = check_zeq(f, z1, z2);
  if (!r.ok()) throw ZeqViolation(std::move(r));
  ExtensionMap g{f, z1, z2, theta_a(z1), theta_a(z2), {}};
  for (PunctureSet b : g.y1.infinity_blocks) {
    const Point y = f.apply(z1.world().puncture(block_members(z1.world(), b).front()));
    const auto q = z2.world().puncture_index(y);
    g.remainder.push_back(q ? YPoint::infinity(*infinity_index(z2, z2.block_of(*q))) : YPoint::principal(y));
  }
  const auto alt = try_extend(f, z1, z2);
  if (!alt.map || !(alt.map->remainder == g.remainder)) {
    throw InvariantError("extension by limits disagrees: " + (alt.map ? std::string("other remainder") : alt.failure));
  }
  return g;
}

ExtensionMap compose(const ExtensionMap& g1, const ExtensionMap& g2) {
  if (!(g1.z2 == g2.z1)) throw DomainError("compose: middle spaces differ");
  ExtensionMap g{compose(g1.f, g2.f), g1.z1, g2.z2, g1.y1, g2.y2, {}};
  for (const YPoint& u : g1.remainder) g.remainder.push_back(g2.apply(u));
  return g;
}

// ---------------------------------------------------------------- topology of Y

YSubset whole(const DualSpace& y) {
  return YSubset{Region::of(ClopenSet::full()), std::vector<bool>(static_cast<std::size_t>(y.infinity_count()), true)};
}

YSubset normalize(const DualSpace& y, const YSubset& s) { return YSubset{s.region.normalized(y.world), s.flags}; }

YSubset closure(const DualSpace& y, const YSubset& s) {
  YSubset out{s.region.closure().normalized(y.world), s.flags};
  const PunctureSet in = y.world.punctures_in(s.region.body);
  for (std::size_t i = 0; i < out.flags.size(); ++i) out.flags[i] = out.flags[i] || (in & y.infinity_blocks[i]) != 0;
  return out;
}

YSubset interior(const DualSpace& y, const YSubset& s) {
  YSubset out{s.region.interior().normalized(y.world), s.flags};
  const PunctureSet in = y.world.punctures_in(s.region.body);
  for (std::size_t i = 0; i < out.flags.size(); ++i) {
    out.flags[i] = out.flags[i] && (in & y.infinity_blocks[i]) == y.infinity_blocks[i];
  }
  return out;
}

YSubset complement(const DualSpace& y, const YSubset& s) {
  YSubset out{region_complement(y.world, s.region), s.flags};
  out.flags.flip();
  return normalize(y, out);
}

YSubset meet(const DualSpace& y, const YSubset& a, const YSubset& b) {
  YSubset out{region_meet(y.world, a.region, b.region), a.flags};
  for (std::size_t i = 0; i < out.flags.size(); ++i) out.flags[i] = a.flags[i] && b.flags[i];
  return normalize(y, out);
}

bool same(const DualSpace& y, const YSubset& a, const YSubset& b) { return normalize(y, a) == normalize(y, b); }
bool is_open(const DualSpace& y, const YSubset& s) { return same(y, s, interior(y, s)); }
bool is_closed(const DualSpace& y, const YSubset& s) { return same(y, s, closure(y, s)); }

bool is_compact(const DualSpace& y, const YSubset& s) {
  return is_closed(y, s) && (y.world.punctures_in(s.region.body) & y.missing) == 0;
}

bool is_empty(const YSubset& s) {
  return s.region.is_empty() && std::none_of(s.flags.begin(), s.flags.end(), [](bool b) { return b; });
}

// ---------------------------------------------------------------- properties

namespace {

// BFS below `root` for puncture-free cylinders, pairwise disjoint.
std::vector<Word> free_cylinders(const World& w, const Word& root, std::size_t count,
                                 const PresentedMap* also_free_under = nullptr, const Word* shift = nullptr) {
  std::vector<Word> out;
  std::deque<Word> queue{root};
  while (!queue.empty() && out.size() < count) {
    const Word u = queue.front();
    queue.pop_front();
    bool ok = w.punctures_in(ClopenSet::cylinder(u)) == 0;
    if (ok && also_free_under) {
      const Word u2 = shift->concat(u.drop(root.len));
      ok = also_free_under->domain().punctures_in(ClopenSet::cylinder(u2)) == 0;
    }
    if (ok && std::none_of(out.begin(), out.end(), [&](const Word& v) { return overlaps(u, v); })) {
      out.push_back(u);
      continue;
    }
    if (u.len < root.len + 12) {
      queue.push_back(u.append(0));
      queue.push_back(u.append(1));
    }
  }
  return out;
}

std::vector<ClopenSet> block_neighbourhoods(const Zlba& z) {
  std::vector<ClopenSet> out;
  std::vector<PunctureSet> filled;
  for (int b = 0; b < z.block_count(); ++b) {
    if (z.filled()[static_cast<std::size_t>(b)]) filled.push_back(z.blocks()[static_cast<std::size_t>(b)]);
  }
  for (std::uint32_t m = 1; m < (1u << filled.size()); ++m) {
    PunctureSet s = 0;
    for (std::size_t b = 0; b < filled.size(); ++b) {
      if ((m >> b) & 1u) s |= filled[b];
    }
    out.push_back(puncture_neighbourhood(z.world(), s));
  }
  return out;
}

struct Families {
  std::vector<ClopenSet> f1;                            ///< members of I1
  std::vector<std::pair<ClopenSet, ClopenSet>> pairs;   ///< disjoint pairs of members of I1
  std::vector<ClopenSet> g2;                            ///< members of I2
};

Families families(const PresentedMap& f, const Zlba& z1, const Zlba& z2) {
  Families out;
  const World& w1 = z1.world();
  std::vector<ClopenSet> f1 = ideal_probe(z1, 2);
  std::vector<std::pair<ClopenSet, ClopenSet>> pairs;
  for (const Piece& p : f.pieces()) {
    const auto u = free_cylinders(w1, p.domain, 2);
    for (const Word& x : u) f1.push_back(ClopenSet::cylinder(x));
    if (u.size() == 2) pairs.emplace_back(ClopenSet::cylinder(u[0]), ClopenSet::cylinder(u[1]));
  }
  // pieces whose targets overlap: sub-cylinders with a common image
  const auto& ps = f.pieces();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = 0; j < ps.size(); ++j) {
      if (i == j || ps[i].is_const || ps[j].is_const || !ps[i].target.is_prefix_of(ps[j].target)) continue;
      if (ps[i].target == ps[j].target && i > j) continue;
      const Word shift = ps[i].domain.concat(ps[j].target.drop(ps[i].target.len));
      const auto u = free_cylinders(w1, ps[j].domain, 1, &f, &shift);
      if (u.empty()) continue;
      const ClopenSet a = ClopenSet::cylinder(u[0]);
      const ClopenSet b = ClopenSet::cylinder(shift.concat(u[0].drop(ps[j].domain.len)));
      f1.push_back(a);
      f1.push_back(b);
      pairs.emplace_back(a, b);
    }
  }
  for (const ClopenSet& c : block_neighbourhoods(z1)) f1.push_back(c);
  f1.push_back(puncture_neighbourhood(w1, z1.unfilled_punctures()).complement());
  f1.push_back(ClopenSet::empty());
  std::vector<ClopenSet> keep;
  for (const ClopenSet& c : f1) {
    if (z1.in_ideal(c)) keep.push_back(c);
  }
  sort_unique(keep);
  out.f1 = keep;
  for (const auto& pr : pairs) out.pairs.push_back(pr);
  const auto nb = block_neighbourhoods(z1);
  for (std::size_t i = 0; i < nb.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (nb[i].disjoint(nb[j])) out.pairs.emplace_back(nb[i], nb[j]);
    }
    out.pairs.emplace_back(nb[i], puncture_neighbourhood(w1, z1.unfilled_punctures()).join(nb[i]).complement());
  }
  for (const ClopenSet& a : ideal_probe(z1, 2)) {
    for (const ClopenSet& b : ideal_probe(z1, 2)) {
      if (a < b && a.disjoint(b) && !a.is_empty() && !b.is_empty()) out.pairs.emplace_back(a, b);
    }
  }
  std::vector<ClopenSet> g2 = ideal_probe(z2, 2);
  for (const ClopenSet& c : block_neighbourhoods(z2)) g2.push_back(c);
  g2.push_back(puncture_neighbourhood(z2.world(), z2.unfilled_punctures()).complement());
  for (const Point& y : puncture_images(f)) {
    if (!z2.world().is_puncture(y)) g2.push_back(separating_cylinder(y, z2.world().punctures()));
  }
  for (const ClopenSet& c : g2) {
    if (z2.in_ideal(c)) out.g2.push_back(c);
  }
  sort_unique(out.g2);
  return out;
}

// Closure in 2^omega of f(F cap X1), as a region of the codomain: body plus
// isolated extra points (punctures inside the body included).
Region image_closure(const PresentedMap& f, const ClopenSet& F) {
  return f.image(Region::of(F)).closure().normalized(f.codomain());
}

PunctureSet block_closure(const Zlba& z, PunctureSet s) {
  PunctureSet out = 0;
  for (PunctureSet b : z.blocks()) {
    if (b & s) out |= b;
  }
  return out;
}

bool zo_at(const PresentedMap& f, const Zlba& z2, const ClopenSet& F) {
  const Region cl = image_closure(f, F);
  return cl.added.empty() && z2.in_ideal(cl.body);
}

// Disjoint G1, G2 in I2 above f(F1), f(F2) exist iff the compact closures,
// each enlarged by the blocks of its punctures, are disjoint and avoid the
// unfilled punctures.
bool zi_at(const PresentedMap& f, const Zlba& z2, const ClopenSet& a, const ClopenSet& b) {
  const World& w2 = z2.world();
  const Region ka = image_closure(f, a), kb = image_closure(f, b);
  const PunctureSet pa = block_closure(z2, w2.punctures_in(ka.body)), pb = block_closure(z2, w2.punctures_in(kb.body));
  if ((pa | pb) & z2.unfilled_punctures()) return false;
  return !region_intersects(w2, ka, kb) && (pa & pb) == 0;
}

// F = f^-1(G) for some G in I2 iff cl f(F) (with its blocks) and the
// closure of f(X1 \ F) are disjoint and the former avoids unfilled punctures.
bool inclusion_at(const PresentedMap& f, const Zlba& z2, const ClopenSet& F) {
  const World& w2 = z2.world();
  const Region k = image_closure(f, F);
  const Region l = image_closure(f, F.complement());
  const PunctureSet pk = block_closure(z2, w2.punctures_in(k.body));
  if (pk & z2.unfilled_punctures()) return false;
  return !region_intersects(w2, k, l) && (pk & w2.punctures_in(l.body)) == 0;
}

}  // namespace

PropertyConditions check_property_conditions(const PresentedMap& f, const Zlba& z1, const Zlba& z2) {
  const Families fam = families(f, z1, z2);
  PropertyConditions c;
  c.zo = c.zp = c.zi = c.ideal_inclusion = true;
  for (const ClopenSet& F : fam.f1) {
    if (c.zo && !zo_at(f, z2, F)) {
      c.zo = false;
      c.witnesses.push_back("ZO fails at F = " + F.to_string() + ": cl f(F) = " + image_closure(f, F).to_string());
    }
    if (c.ideal_inclusion && !inclusion_at(f, z2, F)) {
      c.ideal_inclusion = false;
      c.witnesses.push_back("I1 not inside f^-1(I2): F = " + F.to_string() + " is no preimage");
    }
  }
  for (const ClopenSet& G : fam.g2) {
    if (!z1.in_ideal(f.preimage(G))) {
      c.zp = false;
      c.witnesses.push_back("ZP fails at G = " + G.to_string() + ": f^-1(G) = " + f.preimage(G).to_string());
      break;
    }
  }
  for (const auto& [a, b] : fam.pairs) {
    if (!z1.in_ideal(a) || !z1.in_ideal(b) || !a.disjoint(b)) continue;
    if (!zi_at(f, z2, a, b)) {
      c.zi = false;
      c.witnesses.push_back("ZI fails at F1 = " + a.to_string() + ", F2 = " + b.to_string());
      break;
    }
  }
  c.density = image_closure(f, ClopenSet::full()).body.is_full();
  if (!c.density) c.witnesses.push_back("f(X1) is not dense: closure " + image_closure(f, ClopenSet::full()).to_string());
  c.ideal_equality = c.ideal_inclusion && c.zp;
  return c;
}

ActualProperties inspect(const ExtensionMap& g) {
  ActualProperties a;
  const DualSpace& y1 = g.y1;
  const DualSpace& y2 = g.y2;
  const Families fam = families(g.f, g.z1, g.z2);
  const YSubset all1 = whole(y1), img = normalize(y2, g.image(all1));

  a.skeletal = skeletal_triple(g).interior_rule;
  a.surjective = same(y2, img, whole(y2));
  a.dense = same(y2, closure(y2, img), whole(y2));

  // injectivity: on X through the pieces, then the remainder points
  a.injective = !g.f.has_const_pieces() && g.f.targets_disjoint();
  for (std::size_t i = 0; i < g.remainder.size() && a.injective; ++i) {
    for (std::size_t j = 0; j < i; ++j) a.injective = a.injective && !(g.remainder[i] == g.remainder[j]);
    const YPoint& v = g.remainder[i];
    if (!v.is_infinity() && g.f.image(Region::of(ClopenSet::full())).contains(y2.world, v.x)) a.injective = false;
  }

  a.open = a.closed = a.embedding = true;
  a.quasi_open = true;
  for (const ClopenSet& F : fam.f1) {
    const YSubset u = as_subset(lambda(g.z1, F));
    const YSubset gu = normalize(y2, g.image(u));
    if (!is_open(y2, gu)) a.open = false;
    const YSubset k = complement(y1, u);
    const YSubset gk = normalize(y2, g.image(k));
    if (!is_closed(y2, gk) || !is_closed(y2, gu)) a.closed = false;
    if (!same(y2, meet(y2, img, closure(y2, gk)), gk)) a.embedding = false;
    if (!F.is_empty() && is_empty(interior(y2, gu))) a.quasi_open = false;
  }
  if (!is_closed(y2, img)) a.closed = false;
  a.embedding = a.embedding && a.injective;

  a.perfect = true;
  for (const ClopenSet& G : fam.g2) {
    if (!is_compact(y1, normalize(y1, g.preimage(as_subset(lambda(g.z2, G)))))) a.perfect = false;
  }
  return a;
}

// ---------------------------------------------------------------- skeletal

namespace {

std::vector<Point> first_samples(const World& w, std::size_t n) {
  std::vector<Point> out;
  for (const Point& x : sample_points(w)) {
    if (out.size() == n) break;
    out.push_back(x);
  }
  return out;
}

// Opens of X: clopen traces, and each of them minus the listed points.
std::vector<Region> x_opens(const World& w, const std::vector<ClopenSet>& clopens, const std::vector<Point>& pts) {
  std::vector<Region> out;
  for (const ClopenSet& c : clopens) {
    out.push_back(Region::of(c));
    if (c.is_empty()) continue;
    out.push_back(Region{c, pts, {}}.normalized(w));
    for (const Point& x : pts) out.push_back(Region{c, {x}, {}}.normalized(w));
  }
  return out;
}

std::vector<ClopenSet> x_clopens(const PresentedMap& f, bool domain) {
  const World& w = domain ? f.domain() : f.codomain();
  std::vector<ClopenSet> out;
  for (std::uint64_t m = 0; m < 16; ++m) out.push_back(from_mask(m, 2));
  for (const Piece& p : f.pieces()) {
    if (domain) {
      for (const Word& u : free_cylinders(w, p.domain, 2)) out.push_back(ClopenSet::cylinder(u));
    } else if (p.is_const) {
      out.push_back(separating_cylinder(p.value, w.punctures()));
    }
  }
  sort_unique(out);
  return out;
}

std::vector<Point> codomain_marks(const PresentedMap& f) {
  std::vector<Point> pts = first_samples(f.codomain(), 2);
  for (const Point& y : puncture_images(f)) {
    if (!f.codomain().is_puncture(y)) pts.push_back(y);
  }
  sort_unique(pts);
  return pts;
}

std::vector<YSubset> y_opens(const DualSpace& y, const Zlba& z, const std::vector<ClopenSet>& clopens,
                             const std::vector<YPoint>& pts) {
  std::vector<YSubset> out;
  for (const ClopenSet& c : clopens) {
    if (!z.in_algebra(c)) continue;
    const YSubset v = as_subset(lambda(z, c));
    out.push_back(v);
    if (is_empty(v)) continue;
    YSubset all_out = v;
    for (const YPoint& u : pts) {
      YSubset one = v;
      for (YSubset* s : {&one, &all_out}) {
        if (u.is_infinity()) {
          s->flags[static_cast<std::size_t>(u.index)] = false;
        } else {
          s->region = region_minus(y.world, s->region, Region::points({u.x}));
        }
      }
      out.push_back(one);
    }
    out.push_back(all_out);
  }
  return out;
}

std::vector<YPoint> y_marks(const DualSpace& y, const std::vector<Point>& principal) {
  std::vector<YPoint> out;
  for (const Point& x : principal) {
    if (!y.world.is_puncture(x)) out.push_back(YPoint::principal(x));
  }
  for (int i = 0; i < y.infinity_count(); ++i) out.push_back(YPoint::infinity(i));
  return out;
}

}  // namespace

SkeletalVerdict skeletal_triple(const PresentedMap& f) {
  const World& w1 = f.domain();
  const World& w2 = f.codomain();
  const auto opens1 = x_opens(w1, x_clopens(f, true), first_samples(w1, 2));
  const auto opens2 = x_opens(w2, x_clopens(f, false), codomain_marks(f));
  SkeletalVerdict v{true, true, true};
  for (const Region& V : opens2) {
    const Region a = f.preimage(V.closure()).interior();
    const Region b = f.preimage(V).closure();
    if (!region_subset(w1, a, b)) v.interior_rule = false;
  }
  for (const Region& U : opens1) {
    if (U.is_empty()) continue;
    if (!f.image(U).closure().interior().normalized(w2).has_interior()) v.image_rule = false;
  }
  const auto marks = codomain_marks(f);
  std::vector<Region> dense{Region::of(ClopenSet::full()), Region{ClopenSet::full(), marks, {}}.normalized(w2)};
  for (const Point& x : marks) dense.push_back(Region{ClopenSet::full(), {x}, {}}.normalized(w2));
  const Region full1 = Region::of(ClopenSet::full());
  for (const Region& V : dense) {
    if (!(f.preimage(V).closure().normalized(w1) == full1)) v.dense_rule = false;
  }
  return v;
}

SkeletalVerdict skeletal_triple(const ExtensionMap& g) {
  const DualSpace& y1 = g.y1;
  const DualSpace& y2 = g.y2;
  std::vector<Point> p1 = first_samples(y1.world, 2), p2 = codomain_marks(g.f);
  std::vector<ClopenSet> c1 = x_clopens(g.f, true), c2 = x_clopens(g.f, false);
  for (const ClopenSet& c : algebra_shapes(g.z1, {})) c1.push_back(c);
  for (const ClopenSet& c : algebra_shapes(g.z2, p2)) c2.push_back(c);
  const auto marks2 = y_marks(y2, p2);
  const auto opens1 = y_opens(y1, g.z1, c1, y_marks(y1, p1));
  const auto opens2 = y_opens(y2, g.z2, c2, marks2);
  SkeletalVerdict v{true, true, true};
  for (const YSubset& V : opens2) {
    const YSubset a = interior(y1, g.preimage(closure(y2, V)));
    const YSubset b = closure(y1, g.preimage(V));
    if (!same(y1, meet(y1, a, b), a)) v.interior_rule = false;
  }
  for (const YSubset& U : opens1) {
    if (is_empty(normalize(y1, U))) continue;
    if (is_empty(interior(y2, closure(y2, g.image(U))))) v.image_rule = false;
  }
  std::vector<YSubset> dense{whole(y2)};
  YSubset all_out = whole(y2);
  for (const YPoint& u : marks2) {
    YSubset one = whole(y2);
    for (YSubset* s : {&one, &all_out}) {
      if (u.is_infinity()) {
        s->flags[static_cast<std::size_t>(u.index)] = false;
      } else {
        s->region = region_minus(y2.world, s->region, Region::points({u.x}));
      }
    }
    dense.push_back(one);
  }
  dense.push_back(all_out);
  for (const YSubset& V : dense) {
    if (!same(y1, closure(y1, g.preimage(V)), whole(y1))) v.dense_rule = false;
  }
  return v;
}

bool is_skeletal(const PresentedMap& f) {
  const SkeletalVerdict v = skeletal_triple(f);
  if (!v.agree()) throw InvariantError("the three skeletal characterizations disagree on " + f.to_string());
  return v.interior_rule;
}

// ---------------------------------------------------------------- theorem

bool TheoremReport::all_agree() const {
  return std::all_of(rows.begin(), rows.end(), [](const ClauseRow& r) { return r.agrees(); });
}

std::string TheoremReport::to_string() const {
  std::string s;
  for (const ClauseRow& r : rows) {
    s += "(" + r.clause + ") " + r.statement + ": predicted=" + (r.predicted ? "true" : "false") +
         " actual=" + (r.actual ? "true" : "false") + (r.agrees() ? "" : "  MISMATCH") + "\n";
  }
  return s;
}

TheoremReport verify_main_theorem(const PresentedMap& f, const Zlba& z1, const Zlba& z2) {
  const ExtensionMap g = extend(f, z1, z2);
  const PropertyConditions c = check_property_conditions(f, z1, z2);
  const ActualProperties a = inspect(g);
  const SkeletalVerdict sg = skeletal_triple(g);
  if (!sg.agree()) throw InvariantError("skeletal characterizations of g disagree");
  TheoremReport r;
  r.rows = {
      {"a", "g skeletal iff f skeletal", is_skeletal(f), a.skeletal},
      {"b", "g open iff ZO", c.zo, a.open},
      {"c", "g perfect iff ZP", c.zp, a.perfect},
      {"d", "g(Y1) dense iff f(X1) dense", c.density, a.dense},
      {"e", "g injective iff ZI", c.zi, a.injective},
      {"f", "g open injection iff I1 in f^-1(I2) and ZO", c.ideal_inclusion && c.zo, a.open && a.injective},
      {"g", "g closed injection iff f^-1(I2) = I1", c.ideal_equality, a.closed && a.injective},
      {"h", "g perfect surjection iff ZP and f(X1) dense", c.zp && c.density, a.perfect && a.surjective},
      {"i", "g dense embedding iff f(X1) dense and I1 in f^-1(I2)", c.density && c.ideal_inclusion,
       a.embedding && a.dense},
  };
  return r;
}

namespace {

BanaschewskiReport corollary(const PresentedMap& f, const Zlba& z2, const std::string& open_name) {
  const Zlba z1 = Zlba::top(f.domain());
  BanaschewskiReport out{extend(f, z1, z2), {}};
  const PropertyConditions c = check_property_conditions(f, z1, z2);
  const ActualProperties a = inspect(out.map);
  out.clauses.rows = {
      {"a", "g quasi-open iff f skeletal", is_skeletal(f), a.quasi_open},
      {"b", "g open iff " + open_name, c.zo, a.open},
      {"c", "g surjective iff f(X1) dense", c.density, a.surjective},
      {"d", "g injective iff f^-1(A2) = CO(X1)", c.ideal_inclusion, a.injective},
  };
  return out;
}

}  // namespace

BanaschewskiReport banaschewski_functor(const PresentedMap& f) {
  return corollary(f, Zlba::top(f.codomain()), "ZOB");
}

BanaschewskiReport compact_target_corollary(const PresentedMap& f, const Zlba& compact_z2) {
  if (!compact_z2.is_compact()) throw DomainError("the target must be a compactification");
  return corollary(f, compact_z2, "ZOC");
}

// ---------------------------------------------------------------- functor action

MorphismCheck check_morphism(const ZlbaMorphism& phi) {
  const ZeqResult r = check_zeq(phi.f, phi.target, phi.source);
  MorphismCheck m;
  m.ok = r.ok();
  if (r.g_witness) {
    m.witness = r.g_witness;
  } else if (r.f_witness) {
    m.witness = r.f_witness;
  }
  return m;
}

ExtensionMap theta_a_morphism(const ZlbaMorphism& phi) {
  const auto chk = check_morphism(phi);
  if (!chk.ok) throw DomainError("not a ZLBA morphism; witness " + chk.witness->to_string());
  const Zlba& zt = phi.target;
  const Zlba& zs = phi.source;
  ExtensionMap g{phi.f, zt, zs, theta_a(zt), theta_a(zs), {}};
  std::vector<YPoint> cands;
  for (int i = 0; i < g.y2.infinity_count(); ++i) cands.push_back(YPoint::infinity(i));
  const auto imgs = puncture_images(phi.f);
  for (const Point& y : imgs) {
    if (!zs.world().is_puncture(y)) cands.push_back(YPoint::principal(y));
  }
  const auto shapes = algebra_shapes(zs, imgs);
  for (int i = 0; i < g.y1.infinity_count(); ++i) {
    // phi^-1(u) = { G in A_source : f^-1(G) in u }
    const YPoint u = YPoint::infinity(i);
    std::vector<YPoint> match;
    for (const YPoint& v : cands) {
      bool ok = true;
      for (const ClopenSet& c : shapes) {
        if (ultrafilter_contains(zs, v, c) != ultrafilter_contains(zt, u, phi(c))) {
          ok = false;
          break;
        }
      }
      if (ok) match.push_back(v);
    }
    if (match.size() != 1) throw InvariantError("ultrafilter pullback identified " + std::to_string(match.size()) + " times");
    g.remainder.push_back(match.front());
  }
  return g;
}

ClopenSet theta_t_morphism(const ExtensionMap& g, const ClopenSet& c) {
  return g.preimage(lambda(g.z2, c)).base;
}

}  // namespace zdext
