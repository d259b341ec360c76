#include "zdext/proximity.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <random>

namespace zdext {

bool LocalProximity::well_inside(const Region& a, const Region& b) const {
  return !near(a, region_complement(world, b));
}

LocalProximity lambda_from_extension(const Extension& e) {
  const DualSpace y = e.space;
  LocalProximity lp{y.world, e.structure, {}, {}};
  const std::size_t n = static_cast<std::size_t>(y.infinity_count());
  lp.near = [y, n](const Region& a, const Region& b) {
    const YSubset ca = closure(y, YSubset{a.normalized(y.world), std::vector<bool>(n, false)});
    const YSubset cb = closure(y, YSubset{b.normalized(y.world), std::vector<bool>(n, false)});
    return !is_empty(meet(y, ca, cb));
  };
  lp.bounded = [y, n](const Region& a) {
    return is_compact(y, closure(y, YSubset{a.normalized(y.world), std::vector<bool>(n, false)}));
  };
  return lp;
}

namespace {

PunctureSet block_closure(const Zlba& z, PunctureSet s) {
  PunctureSet out = 0;
  for (PunctureSet b : z.blocks()) {
    if (b & s) out |= b;
  }
  return out;
}

ClopenSet cylinders(const std::vector<Point>& pts, int d) {
  ClopenSet out;
  for (const Point& x : pts) out = out.join(cylinder_around(x, d));
  return out;
}

std::vector<Point> punctures_of(const World& w, PunctureSet s) {
  std::vector<Point> out;
  for (int i = 0; i < w.size(); ++i) {
    if ((s >> i) & 1u) out.push_back(w.puncture(i));
  }
  return out;
}

// M minus depth-d cylinders around the unfilled punctures: bounded, and every
// bounded subset of M lies in one of these for d large.
Region trim(const Zlba& z, const Region& m, int d) {
  const World& w = z.world();
  return region_minus(w, m.normalized(w), Region::of(cylinders(punctures_of(w, z.unfilled_punctures()), d)));
}

constexpr int kTrimDepth = 24;

}  // namespace

std::optional<ClopenSet> ideal_separator(const Zlba& z, const Region& m0, const Region& n0) {
  const World& w = z.world();
  const Region m = m0.normalized(w), n = n0.normalized(w);
  const PunctureSet p = block_closure(z, w.punctures_in(m.body));
  if (p & z.unfilled_punctures()) return std::nullopt;
  // any F containing M holds whole blocks around p; N's body reaching one of
  // those punctures, or N meeting M outright, rules every F out
  if (p & w.punctures_in(n.body)) return std::nullopt;
  if (region_intersects(w, m, n)) return std::nullopt;
  for (int d : {2, 4, 8, 16, 24, 32}) {
    ClopenSet f = m.body.join(cylinders(m.added, d)).join(cylinders(punctures_of(w, p), d));
    const ClopenSet g = n.body.join(cylinders(n.added, d)).join(cylinders(punctures_of(w, w.all() & ~p), d));
    f = f.minus(g);
    const Region rf = Region::of(f);
    if (region_subset(w, m, rf) && !region_intersects(w, rf, n) && z.in_ideal(f)) return f;
  }
  return std::nullopt;
}

LocalProximity L_X(const Zlba& z) {
  LocalProximity lp{z.world(), z, {}, {}};
  lp.bounded = [z](const Region& m) { return ideal_separator(z, m, Region{}).has_value(); };
  lp.near = [z](const Region& k, const Region& l) {
    const Region m = trim(z, k, kTrimDepth), n = trim(z, l, kTrimDepth);
    return !ideal_separator(z, m, n).has_value();
  };
  return lp;
}

Zlba l_X(const LocalProximity& lp) {
  const World& w = lp.world;
  auto in_a = [&](const ClopenSet& c) { return lp.well_inside(Region::of(c), Region::of(c)); };
  // blocks are the minimal nonempty puncture sets whose neighbourhood is in A
  std::vector<PunctureSet> blocks;
  std::vector<bool> filled;
  PunctureSet done = 0;
  for (int i = 0; i < w.size(); ++i) {
    if ((done >> i) & 1u) continue;
    const PunctureSet rest = w.all() & ~done;
    PunctureSet best = rest;
    for (PunctureSet s = rest; s; s = (s - 1) & rest) {
      if (((s >> i) & 1u) && std::popcount(s) < std::popcount(best) && in_a(puncture_neighbourhood(w, s))) best = s;
    }
    if (!in_a(puncture_neighbourhood(w, best))) throw DomainError("l_X: no clopen of A isolates puncture " + std::to_string(i + 1));
    blocks.push_back(best);
    filled.push_back(lp.bounded(Region::of(puncture_neighbourhood(w, best))));
    done |= best;
  }
  Zlba z(w, blocks, filled);
  for (std::uint64_t mask = 0; mask < 256; ++mask) {
    const ClopenSet c = from_mask(mask, 3);
    const bool a = in_a(c);
    if (a != z.in_algebra(c) || (a && lp.bounded(Region::of(c)) != z.in_ideal(c))) {
      throw DomainError("l_X: the proximity is not of the form L_X(pi, S); mismatch at " + c.to_string());
    }
  }
  return z;
}

// ---------------------------------------------------------------- samples

std::vector<Region> sample_family(const World& w, std::uint64_t seed, int random_count) {
  std::vector<Region> out;
  for (int d = 0; d <= 3; ++d) {
    for (const Word& u : words_of_length(d)) out.push_back(Region::of(ClopenSet::cylinder(u)));
  }
  for (PunctureSet s = 1; s <= w.all() && w.size() > 0; ++s) out.push_back(Region::of(puncture_neighbourhood(w, s)));
  out.push_back(Region{});
  const auto pts = sample_points(w);
  for (std::size_t i = 0; i < pts.size() && i < 4; ++i) out.push_back(Region::points({pts[i]}));
  out.push_back(Region{ClopenSet::full(), {pts[0]}, {}});
  std::mt19937_64 rng(seed);
  for (int i = 0; i < random_count; ++i) out.push_back(Region::of(from_mask(rng(), 6)));
  return out;
}

bool AxiomReport::ok() const {
  return std::all_of(lines.begin(), lines.end(), [](const AxiomLine& l) { return l.failed == 0; });
}

std::string AxiomReport::to_string() const {
  std::string s;
  for (const AxiomLine& l : lines) {
    s += l.axiom + ": " + (l.failed == 0 ? "pass" : "FAIL") + " checked=" + std::to_string(l.checked) +
         " failed=" + std::to_string(l.failed);
    if (!l.witness.empty()) s += " witness: " + l.witness;
    s += "\n";
  }
  return s;
}

namespace {

struct Tally {
  AxiomLine line;
  void check(bool ok, const std::string& what) {
    ++line.checked;
    if (!ok) {
      if (line.failed++ == 0) line.witness = what;
    }
  }
};

std::string pair_text(const Region& a, const Region& b) { return a.to_string() + " / " + b.to_string(); }

// Every ordered pair with a structured first member, plus consecutive random pairs.
std::vector<std::pair<std::size_t, std::size_t>> sample_pairs(std::size_t n, std::size_t structured) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < structured; ++i) {
    for (std::size_t j = 0; j < n; ++j) pairs.emplace_back(i, j);
  }
  for (std::size_t i = structured; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return pairs;
}

}  // namespace

AxiomReport check_axioms(const LocalProximity& lp, std::uint64_t seed, int random_count) {
  const World& w = lp.world;
  const auto fam = sample_family(w, seed, random_count);
  const std::size_t structured = fam.size() - static_cast<std::size_t>(random_count);
  const auto pairs = sample_pairs(fam.size(), structured);
  std::vector<std::array<std::size_t, 3>> triples;
  for (std::size_t i = 0; i < structured; ++i) {
    for (std::size_t j = 0; j < structured; ++j) {
      for (std::size_t k = j; k < structured; ++k) triples.push_back({i, j, k});
    }
  }
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  for (int t = 0; t < random_count; ++t) triples.push_back({rng() % fam.size(), rng() % fam.size(), rng() % fam.size()});

  auto tally = [](const char* name) {
    Tally t;
    t.line.axiom = name;
    return t;
  };
  Tally p1 = tally("P1 (empty set is far)"), p2 = tally("P2 (nonempty set is near itself)"), p3 = tally("P3 (near a union)"), sym = tally("symmetry");
  Tally sep = tally("separated"), ideal = tally("B is an ideal"), bc1 = tally("BC1"), bc2 = tally("BC2");
  for (const Region& a : fam) {
    p1.check(!lp.near(Region{}, a), a.to_string());
    if (!a.normalized(w).is_empty()) p2.check(lp.near(a, a), a.to_string());
  }
  std::vector<char> bnd;
  for (const Region& a : fam) bnd.push_back(lp.bounded(a) ? 1 : 0);
  const auto pts = sample_points(w);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < pts.size(); j += 5) {
      if (i != j) sep.check(!lp.near(Region::points({pts[i]}), Region::points({pts[j]})), pts[i].to_string());
    }
  }
  for (const auto& [i, j] : pairs) {
    const Region& a = fam[i];
    const Region& b = fam[j];
    const bool ab = lp.near(a, b);
    sym.check(ab == lp.near(b, a), pair_text(a, b));
    if (bnd[j]) ideal.check(lp.bounded(region_meet(w, a, b)), pair_text(a, b));
    if (bnd[i] && bnd[j]) ideal.check(lp.bounded(region_union(w, a, b)), pair_text(a, b));
    // BC1: a bounded, a << b; interpolate with a member of I
    if (bnd[i] && !lp.near(a, region_complement(w, b))) {
      const auto f = ideal_separator(lp.structure, a, region_complement(w, b));
      const bool ok = f && lp.bounded(Region::of(*f)) && lp.well_inside(a, Region::of(*f)) &&
                      lp.well_inside(Region::of(*f), b);
      bc1.check(ok, pair_text(a, b));
    }
    // BC2: a near b; a bounded part of b stays near
    if (ab) {
      bool ok = false;
      for (int d : {2, 6, 12, 24}) {
        const Region part = trim(lp.structure, b, d);
        if (lp.bounded(part) && region_subset(w, part, b) && lp.near(a, part)) {
          ok = true;
          break;
        }
      }
      bc2.check(ok, pair_text(a, b));
    }
  }
  for (const auto& t : triples) {
    const Region& a = fam[t[0]];
    const Region& b = fam[t[1]];
    const Region& c = fam[t[2]];
    p3.check(lp.near(a, region_union(w, b, c)) == (lp.near(a, b) || lp.near(a, c)),
             a.to_string() + " / " + b.to_string() + " u " + c.to_string());
  }
  AxiomReport r;
  for (Tally* t : {&p1, &p2, &p3, &sym, &sep, &ideal, &bc1, &bc2}) r.lines.push_back(t->line);
  return r;
}

ZeroDimResult is_zero_dimensional(const LocalProximity& lp, std::uint64_t seed, int random_count) {
  const World& w = lp.world;
  const auto fam = sample_family(w, seed, random_count);
  std::vector<char> bnd;
  for (const Region& a : fam) bnd.push_back(lp.bounded(a) ? 1 : 0);
  ZeroDimResult r;
  for (const auto& [i, j] : sample_pairs(fam.size(), fam.size() - static_cast<std::size_t>(random_count))) {
    const Region& a = fam[i];
    const Region& b = fam[j];
    if (!bnd[i] || !bnd[j] || !lp.well_inside(a, b)) continue;
    // the interpolant is the member of I separating a from X \ b
    const auto f = ideal_separator(lp.structure, a, region_complement(w, b));
    const Region c = f ? Region::of(*f) : Region{};
    if (!f || !region_subset(w, a, c) || !region_subset(w, c, b) || !lp.well_inside(c, c)) {
      r.ok = false;
      r.failure = "no interpolant for " + pair_text(a, b);
      return r;
    }
    r.interpolants.push_back({a, b, c});
  }
  return r;
}

EquicontinuityResult is_equicontinuous(const PresentedMap& f, const LocalProximity& lp1, const LocalProximity& lp2,
                                       std::uint64_t seed) {
  const auto fam = sample_family(lp1.world, seed, 0);
  std::vector<Region> img;
  for (const Region& a : fam) img.push_back(f.image(a.normalized(lp1.world)));
  EquicontinuityResult r;
  for (std::size_t i = 0; i < fam.size(); ++i) {
    if (r.eq2 && lp1.bounded(fam[i]) && !lp2.bounded(img[i])) {
      r.eq2 = false;
      r.eq2_witness = fam[i];
    }
    for (std::size_t j = i; j < fam.size() && r.eq1; ++j) {
      if (lp1.near(fam[i], fam[j]) && !lp2.near(img[i], img[j])) {
        r.eq1 = false;
        r.eq1_witness = std::make_pair(fam[i], fam[j]);
      }
    }
  }
  return r;
}

bool proximity_leq(const LocalProximity& lp1, const LocalProximity& lp2, const std::vector<Region>& samples) {
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (lp2.bounded(samples[i]) && !lp1.bounded(samples[i])) return false;
    for (std::size_t j = i; j < samples.size(); ++j) {
      if (lp2.near(samples[i], samples[j]) && !lp1.near(samples[i], samples[j])) return false;
    }
  }
  return true;
}

}  // namespace zdext
