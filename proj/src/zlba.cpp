#include "zdext/zlba.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace zdext {

namespace {

int lowest(PunctureSet s) { return std::countr_zero(s); }

std::vector<ClopenSet> probe_family(int depth) {
  std::vector<ClopenSet> out;
  const std::uint64_t n = std::uint64_t{1} << (std::uint64_t{1} << depth);
  out.reserve(n);
  for (std::uint64_t m = 0; m < n; ++m) out.push_back(from_mask(m, depth));
  return out;
}

}  // namespace

std::string puncture_set_to_string(PunctureSet s) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < 32; ++i) {
    if ((s >> i) & 1u) {
      out += (first ? "" : ",") + std::to_string(i + 1);
      first = false;
    }
  }
  return out + "}";
}

// ---------------------------------------------------------------- Zlba

Zlba::Zlba(World world, std::vector<PunctureSet> blocks, std::vector<bool> filled)
    : world_(std::move(world)) {
  if (blocks.size() != filled.size()) throw DomainError("one filled flag per block required");
  PunctureSet seen = 0;
  for (PunctureSet b : blocks) {
    if (b == 0) throw DomainError("empty block");
    if (b & ~world_.all()) throw DomainError("block names a puncture outside the world");
    if (b & seen) throw DomainError("blocks overlap");
    seen |= b;
  }
  if (seen != world_.all()) throw DomainError("blocks do not cover every puncture");
  std::vector<std::size_t> order(blocks.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return lowest(blocks[a]) < lowest(blocks[b]); });
  for (std::size_t i : order) {
    blocks_.push_back(blocks[i]);
    filled_.push_back(filled[i]);
  }
}

Zlba Zlba::top(const World& w) {
  std::vector<PunctureSet> blocks;
  for (int i = 0; i < w.size(); ++i) blocks.push_back(PunctureSet{1} << i);
  return Zlba(w, blocks, std::vector<bool>(blocks.size(), true));
}

Zlba Zlba::trivial(const World& w) {
  std::vector<PunctureSet> blocks;
  for (int i = 0; i < w.size(); ++i) blocks.push_back(PunctureSet{1} << i);
  return Zlba(w, blocks, std::vector<bool>(blocks.size(), false));
}

int Zlba::block_of(int puncture) const {
  for (int b = 0; b < block_count(); ++b) {
    if ((blocks_[static_cast<std::size_t>(b)] >> puncture) & 1u) return b;
  }
  throw DomainError("puncture index out of range");
}

PunctureSet Zlba::filled_punctures() const {
  PunctureSet s = 0;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (filled_[b]) s |= blocks_[b];
  }
  return s;
}

bool Zlba::constant_on_blocks(PunctureSet s) const {
  for (PunctureSet b : blocks_) {
    const PunctureSet part = s & b;
    if (part != 0 && part != b) return false;
  }
  return true;
}

bool Zlba::in_ideal(const ClopenSet& c) const {
  const PunctureSet s = world_.punctures_in(c);
  return constant_on_blocks(s) && (s & unfilled_punctures()) == 0;
}

std::string Zlba::label() const {
  std::string s = "(";
  for (std::size_t b = 0; b < blocks_.size(); ++b) s += (b ? "," : "") + puncture_set_to_string(blocks_[b]);
  s += "|{";
  bool first = true;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (!filled_[b]) continue;
    s += (first ? "" : ",") + std::to_string(b + 1);
    first = false;
  }
  return s + "})";
}

bool operator<(const Zlba& a, const Zlba& b) {
  if (a.blocks_ != b.blocks_) return a.blocks_ < b.blocks_;
  return a.filled_ < b.filled_;
}

std::vector<Zlba> all_presentations(const World& w) {
  const int m = w.size();
  std::vector<Zlba> out;
  // restricted growth strings enumerate the set partitions
  std::vector<int> rgs(static_cast<std::size_t>(m), 0);
  while (true) {
    int blocks = 0;
    for (int v : rgs) blocks = std::max(blocks, v + 1);
    if (m == 0) blocks = 0;
    std::vector<PunctureSet> bs(static_cast<std::size_t>(blocks), 0);
    for (int i = 0; i < m; ++i) bs[static_cast<std::size_t>(rgs[static_cast<std::size_t>(i)])] |= PunctureSet{1} << i;
    for (std::uint32_t f = 0; f < (1u << blocks); ++f) {
      std::vector<bool> filled(static_cast<std::size_t>(blocks));
      for (int b = 0; b < blocks; ++b) filled[static_cast<std::size_t>(b)] = (f >> b) & 1u;
      out.emplace_back(w, bs, filled);
    }
    // next restricted growth string
    int i = m - 1;
    while (i > 0) {
      int mx = 0;
      for (int j = 0; j < i; ++j) mx = std::max(mx, rgs[static_cast<std::size_t>(j)]);
      if (rgs[static_cast<std::size_t>(i)] <= mx) break;
      --i;
    }
    if (i <= 0) break;
    ++rgs[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < m; ++j) rgs[static_cast<std::size_t>(j)] = 0;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- probes and samples

std::vector<ClopenSet> algebra_probe(const Zlba& z, int depth) {
  std::vector<ClopenSet> out;
  for (auto& c : probe_family(depth)) {
    if (z.in_algebra(c)) out.push_back(std::move(c));
  }
  return out;
}

std::vector<ClopenSet> ideal_probe(const Zlba& z, int depth) {
  std::vector<ClopenSet> out;
  for (auto& c : probe_family(depth)) {
    if (z.in_ideal(c)) out.push_back(std::move(c));
  }
  return out;
}

std::vector<Point> sample_points(const World& w) {
  std::set<Point> pts;
  for (int pre = 0; pre <= 2; ++pre) {
    for (std::uint64_t pb = 0; pb < (1u << pre); ++pb) {
      for (int per = 1; per <= 2; ++per) {
        for (std::uint64_t qb = 0; qb < (1u << per); ++qb) pts.insert(Point(Word{pb, pre}, Word{qb, per}));
      }
    }
  }
  // points of X agreeing with a puncture for k letters
  for (const Point& p : w.punctures()) {
    for (int k : {1, 3, 6}) {
      Word w0 = p.prefix(k).append(1 - p.letter(k));
      pts.insert(Point(w0, Word{0, 1}));
      pts.insert(Point(w0, Word{1, 1}));
    }
  }
  std::vector<Point> out;
  for (const Point& x : pts) {
    if (!w.is_puncture(x)) out.push_back(x);
  }
  return out;
}

// ---------------------------------------------------------------- admissibility

MembershipPresentation presentation_of(const Zlba& z, int probe_depth) {
  return MembershipPresentation{
      z.world(), [z](const ClopenSet& c) { return z.in_algebra(c); },
      [z](const ClopenSet& c) { return z.in_ideal(c); }, probe_depth};
}

AdmissibilityResult check_admissible(const MembershipPresentation& p) {
  auto fail = [](std::string clause, std::optional<ClopenSet> set, std::optional<Point> pt = std::nullopt) {
    return AdmissibilityResult{false, std::move(clause), std::move(set), std::move(pt)};
  };
  const auto family = probe_family(p.probe_depth);
  std::vector<ClopenSet> alg, idl;
  for (const auto& c : family) {
    if (p.in_algebra(c)) alg.push_back(c);
    if (p.in_ideal(c)) idl.push_back(c);
  }
  if (!p.in_algebra(ClopenSet::empty()) || !p.in_algebra(ClopenSet::full())) {
    return fail("subalgebra", ClopenSet::full());
  }
  for (const auto& a : alg) {
    if (!p.in_algebra(a.complement())) return fail("subalgebra", a);
    for (const auto& b : alg) {
      if (!p.in_algebra(a.meet(b))) return fail("subalgebra", a.meet(b));
    }
  }
  if (!p.in_ideal(ClopenSet::empty())) return fail("ideal", ClopenSet::empty());
  for (const auto& a : idl) {
    if (!p.in_algebra(a)) return fail("ideal", a);
    for (const auto& b : alg) {
      if (b.subset_of(a) && !p.in_ideal(b)) return fail("ideal", b);
    }
    for (const auto& b : idl) {
      if (!p.in_ideal(a.join(b))) return fail("ideal", a.join(b));
    }
  }
  const int descent = p.probe_depth + 12;
  // base: every probe-depth cylinder around a sample point holds a member of I around it
  for (const Point& x : sample_points(p.world)) {
    for (int k = 0; k <= p.probe_depth; ++k) {
      bool found = false;
      for (int j = k; j <= descent && !found; ++j) found = p.in_ideal(cylinder_around(x, j));
      if (!found) return fail("base", cylinder_around(x, k), x);
    }
  }
  // density: cylinder descent below every nonzero probe member of A
  for (const auto& a : alg) {
    if (a.is_empty()) continue;
    bool found = false;
    std::vector<Word> frontier(a.words().begin(), a.words().end());
    while (!found && !frontier.empty()) {
      std::vector<Word> next;
      for (const Word& w : frontier) {
        if (p.in_ideal(ClopenSet::cylinder(w))) {
          found = true;
          break;
        }
        if (w.len < descent) {
          next.push_back(w.append(0));
          next.push_back(w.append(1));
        }
      }
      frontier = std::move(next);
    }
    if (!found) return fail("dense", a);
  }
  return AdmissibilityResult{};
}

AdmissibilityResult check_admissible(const Zlba& z) { return check_admissible(presentation_of(z)); }

// ---------------------------------------------------------------- ZLBA axiom

ZlbaCheck check_zlba(const Zlba& z) {
  for (int b = 0; b < z.block_count(); ++b) {
    const PunctureSet block = z.blocks()[static_cast<std::size_t>(b)];
    if (z.filled()[static_cast<std::size_t>(b)] || std::popcount(block) < 2) continue;
    NonJoinCertificate c;
    c.block = b;
    c.p_in = lowest(block);
    c.p_out = lowest(block & (block - 1));
    const World& w = z.world();
    std::vector<Point> others;
    for (int i = 0; i < w.size(); ++i) {
      if (i != c.p_out) others.push_back(w.puncture(i));
    }
    const Point& q = w.puncture(c.p_out);
    c.d = separating_cylinder(q, others);
    const int d = c.d.words().front().len;
    c.upper1 = c.d.complement().join(cylinder_around(q, d + 1));
    c.upper2 = c.d.complement().join(cylinder_around(q, d + 2));
    return ZlbaCheck{false, c};
  }
  return ZlbaCheck{true, std::nullopt};
}

ClopenSet descend(const Zlba& z, const NonJoinCertificate& c, const ClopenSet& upper) {
  const Point& q = z.world().puncture(c.p_out);
  const int k = std::max(upper.depth(), c.d.depth());
  return c.d.complement().join(cylinder_around(q, k + 1));
}

CertificateCheck verify_certificate(const Zlba& z, const NonJoinCertificate& c) {
  auto fail = [](std::string r) { return CertificateCheck{false, std::move(r)}; };
  if (c.block < 0 || c.block >= z.block_count()) return fail("block out of range");
  const PunctureSet block = z.blocks()[static_cast<std::size_t>(c.block)];
  if (z.filled()[static_cast<std::size_t>(c.block)]) return fail("block is filled");
  if (c.p_in == c.p_out || !((block >> c.p_in) & 1u) || !((block >> c.p_out) & 1u)) {
    return fail("punctures not in the block");
  }
  const World& w = z.world();
  if (w.punctures_in(c.d) != (PunctureSet{1} << c.p_out)) return fail("D does not isolate p_out");
  const ClopenSet not_d = c.d.complement();

  auto in_j = [&](const ClopenSet& x) { return z.in_ideal(x) && x.disjoint(c.d); };
  const auto probe = ideal_probe(z, std::max(3, c.d.depth() + 1));
  std::vector<ClopenSet> j_members;
  for (const auto& x : probe) {
    if (in_j(x)) j_members.push_back(x);
  }
  // simplicity: C = (C \ D) join (C cap D) with the parts in J and not J
  for (const auto& x : probe) {
    const ClopenSet a = x.minus(c.d), b = x.meet(c.d);
    if (!in_j(a)) return fail("C \\ D not in J for C = " + x.to_string());
    if (!z.in_ideal(b)) return fail("C cap D not in I for C = " + x.to_string());
    for (const auto& j : j_members) {
      if (!j.disjoint(b)) return fail("C cap D meets J for C = " + x.to_string());
    }
    if (!a.join(b).subset_of(x) || !x.subset_of(a.join(b))) return fail("split does not recover C");
    // not J on the probe is exactly the members inside D
    bool orthogonal = true;
    for (const auto& j : j_members) orthogonal = orthogonal && j.disjoint(x);
    if (orthogonal != x.subset_of(c.d)) return fail("not J differs from members inside D");
  }
  auto is_upper = [&](const ClopenSet& u) {
    if (!z.in_algebra(u)) return false;
    for (const auto& j : j_members) {
      if (!j.subset_of(u)) return false;
    }
    return not_d.subset_of(u);
  };
  if (!is_upper(c.upper1)) return fail("upper1 is not an upper bound in A");
  if (!is_upper(c.upper2)) return fail("upper2 is not an upper bound in A");
  if (!c.upper2.subset_of(c.upper1) || c.upper2 == c.upper1) return fail("upper2 not strictly below upper1");
  for (const auto* u : {&c.upper1, &c.upper2}) {
    const ClopenSet v = descend(z, c, *u);
    if (!is_upper(v) || !v.subset_of(*u) || v == *u) return fail("descent did not shrink an upper bound");
  }
  // every upper bound on the probe is forced to contain p_out
  for (const auto& a : algebra_probe(z, std::max(3, c.d.depth()))) {
    if (not_d.subset_of(a) && !a.contains(w.puncture(c.p_out))) return fail("upper bound without p_out");
  }
  return CertificateCheck{true, ""};
}

// ---------------------------------------------------------------- order

bool leq0(const Zlba& z1, const Zlba& z2) {
  if (!(z1.world() == z2.world())) throw DomainError("leq0 needs a common world");
  for (std::size_t b2 = 0; b2 < z2.blocks().size(); ++b2) {
    const PunctureSet blk = z2.blocks()[b2];
    const int b1 = z1.block_of(lowest(blk));
    const PunctureSet outer = z1.blocks()[static_cast<std::size_t>(b1)];
    // A1 inside A2: every pi2 block sits inside a pi1 block
    if ((blk & ~outer) != 0) return false;
    // a member of I2 through this block is only covered by a member of I1 if the outer block is filled
    if (z2.filled()[b2] && !z1.filled()[static_cast<std::size_t>(b1)]) return false;
  }
  return true;
}

// ---------------------------------------------------------------- dual spaces

std::optional<int> DualSpace::infinity_of(int puncture) const {
  for (int i = 0; i < infinity_count(); ++i) {
    if ((infinity_blocks[static_cast<std::size_t>(i)] >> puncture) & 1u) return i;
  }
  return std::nullopt;
}

std::string YPoint::to_string() const {
  return is_infinity() ? "inf" + std::to_string(index + 1) : x.to_string();
}

bool operator<(const YPoint& a, const YPoint& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  if (a.kind == YPoint::Kind::infinity) return a.index < b.index;
  return a.x < b.x;
}

DualSpace theta_a(const Zlba& z) {
  const auto check = check_zlba(z);
  if (!check.valid) throw DomainError("theta_a needs a ZLBA: an unfilled block glues several punctures");
  DualSpace y{z.world(), {}, z.unfilled_punctures()};
  for (int b = 0; b < z.block_count(); ++b) {
    if (z.filled()[static_cast<std::size_t>(b)]) y.infinity_blocks.push_back(z.blocks()[static_cast<std::size_t>(b)]);
  }
  return y;
}

bool is_yclopen(const DualSpace& y, const ClopenSet& c) {
  const PunctureSet s = y.world.punctures_in(c);
  for (PunctureSet b : y.infinity_blocks) {
    if ((s & b) != 0 && (s & b) != b) return false;
  }
  return true;
}

YClopen yclopen(const DualSpace& y, const ClopenSet& c) {
  if (!is_yclopen(y, c)) throw DomainError("trace " + c.to_string() + " splits a remainder block");
  const PunctureSet s = y.world.punctures_in(c);
  YClopen v{c, {}};
  for (PunctureSet b : y.infinity_blocks) v.flags.push_back((s & b) == b);
  return v;
}

bool is_compact_yclopen(const DualSpace& y, const YClopen& v) {
  return (y.world.punctures_in(v.base) & y.missing) == 0;
}

YClopen lambda(const Zlba& z, const ClopenSet& c) {
  if (!z.in_algebra(c)) throw DomainError("lambda needs a member of A");
  YClopen v{c, {}};
  for (int b = 0; b < z.block_count(); ++b) {
    if (!z.filled()[static_cast<std::size_t>(b)]) continue;
    v.flags.push_back(ultrafilter_contains(z, YPoint::infinity(static_cast<int>(v.flags.size())), c));
  }
  return v;
}

Zlba theta_t(const DualSpace& y) {
  // Recover the blocks by asking which puncture neighbourhoods are clopen in Y.
  const World& w = y.world;
  const PunctureSet present = w.all() & ~y.missing;
  std::vector<PunctureSet> blocks;
  std::vector<bool> filled;
  PunctureSet done = 0;
  for (int i = 0; i < w.size(); ++i) {
    if ((done >> i) & 1u) continue;
    if ((y.missing >> i) & 1u) {
      blocks.push_back(PunctureSet{1} << i);
      filled.push_back(false);
      done |= PunctureSet{1} << i;
      continue;
    }
    PunctureSet cls = PunctureSet{1} << i;
    for (int j = 0; j < w.size(); ++j) {
      if (j == i || !((present >> j) & 1u)) continue;
      // j is glued to i iff no clopen of Y around some puncture set contains i but not j
      bool separated = false;
      for (PunctureSet t = present;; t = (t - 1) & present) {
        if (((t >> i) & 1u) && !((t >> j) & 1u)) separated = separated || is_yclopen(y, puncture_neighbourhood(w, t));
        if (t == 0 || separated) break;
      }
      if (!separated) cls |= PunctureSet{1} << j;
    }
    blocks.push_back(cls);
    // filled: a compact clopen of Y reaches this block
    filled.push_back(is_compact_yclopen(y, YClopen{puncture_neighbourhood(w, cls), {}}));
    done |= cls;
  }
  return Zlba(w, blocks, filled);
}

bool contains(const DualSpace& y, const YClopen& v, const YPoint& u) {
  if (u.is_infinity()) return v.flags.at(static_cast<std::size_t>(u.index));
  if (y.world.is_puncture(u.x)) throw DomainError("puncture is not a point of Y");
  return v.base.contains(u.x);
}

bool contains(const DualSpace& y, const YSubset& s, const YPoint& u) {
  if (u.is_infinity()) return s.flags.at(static_cast<std::size_t>(u.index));
  return s.region.contains(y.world, u.x);
}

YSubset as_subset(const YClopen& v) { return YSubset{Region::of(v.base), v.flags}; }

bool ultrafilter_contains(const Zlba& z, const YPoint& u, const ClopenSet& c) {
  if (!u.is_infinity()) return c.contains(u.x);
  int seen = 0;
  for (int b = 0; b < z.block_count(); ++b) {
    if (!z.filled()[static_cast<std::size_t>(b)]) continue;
    if (seen++ == u.index) {
      const PunctureSet blk = z.blocks()[static_cast<std::size_t>(b)];
      return (z.world().punctures_in(c) & blk) == blk;
    }
  }
  throw DomainError("no such remainder point");
}

YPoint point_to_ultrafilter(const Zlba& z, const Point& x) {
  if (z.world().is_puncture(x)) throw DomainError(x.to_string() + " is a puncture, not a point of X");
  return YPoint::principal(x);
}

DualityCheck verify_lambda(const Zlba& z) {
  DualityCheck r;
  auto fail = [&](std::string what) {
    r.ok = false;
    r.failure = std::move(what);
    return r;
  };
  const DualSpace y = theta_a(z);
  const World& w = z.world();
  const auto alg = algebra_probe(z, 3);
  std::set<std::pair<ClopenSet, std::vector<bool>>> images;
  for (const auto& a : alg) {
    const YClopen la = lambda(z, a);
    images.insert({la.base, la.flags});
    const YClopen lc = lambda(z, a.complement());
    for (std::size_t i = 0; i < la.flags.size(); ++i) {
      if (lc.flags[i] == la.flags[i]) return fail("complement not preserved at " + a.to_string());
    }
    for (const auto& b : alg) {
      const YClopen lb = lambda(z, b), lm = lambda(z, a.meet(b)), lj = lambda(z, a.join(b));
      for (std::size_t i = 0; i < la.flags.size(); ++i) {
        if (lm.flags[i] != (la.flags[i] && lb.flags[i])) return fail("meet not preserved");
        if (lj.flags[i] != (la.flags[i] || lb.flags[i])) return fail("join not preserved");
      }
      ++r.checked;
    }
  }
  if (images.size() != alg.size()) return fail("lambda not injective");
  // lambda(A) = CO(Y) and lambda(I) = CK(Y), probing every depth-4 clopen
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << 16); ++m) {
    const ClopenSet c = from_mask(m, 4);
    const bool clopen_in_y = is_yclopen(y, c);
    if (clopen_in_y != z.in_algebra(c)) return fail("CO(Y) differs from lambda(A) at " + c.to_string());
    if (!clopen_in_y) continue;
    const YClopen v = yclopen(y, c);
    if (!(v == lambda(z, c))) return fail("yclopen and lambda disagree at " + c.to_string());
    if (is_compact_yclopen(y, v) != z.in_ideal(c)) return fail("CK(Y) differs from lambda(I) at " + c.to_string());
    if (!z.in_ideal(c)) continue;
    // remainder membership read off nearby points of X: C holds points of X
    // arbitrarily close to every puncture of the block
    for (int i = 0; i < y.infinity_count(); ++i) {
      bool near_all = true;
      const PunctureSet blk = y.infinity_blocks[static_cast<std::size_t>(i)];
      for (int p = 0; p < w.size(); ++p) {
        if (!((blk >> p) & 1u)) continue;
        const Point& q = w.puncture(p);
        const Word pre = q.prefix(5).append(1 - q.letter(5));
        near_all = near_all && c.contains(Point(pre, Word{0, 1})) && c.contains(Point(pre, Word{1, 1}));
      }
      if (near_all != v.flags[static_cast<std::size_t>(i)]) return fail("remainder membership rule fails");
    }
    ++r.checked;
  }
  return r;
}

DualityCheck verify_t_naturality(const Zlba& z) {
  DualityCheck r;
  const DualSpace y = theta_a(z);
  const auto pts = sample_points(z.world());
  const auto idl = ideal_probe(z, 3);
  for (const auto& c : idl) {
    const YClopen v = lambda(z, c);
    for (const Point& x : pts) {
      if (contains(y, v, point_to_ultrafilter(z, x)) != c.contains(x)) {
        r.ok = false;
        r.failure = "preimage of lambda(" + c.to_string() + ") differs at " + x.to_string();
        return r;
      }
      ++r.checked;
    }
  }
  // distinct points give distinct ultrafilters: a member of I separates them
  std::vector<Point> avoid = z.world().punctures();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      auto a = avoid;
      a.push_back(pts[j]);
      const ClopenSet sep = separating_cylinder(pts[i], a);
      if (!z.in_ideal(sep) || !ultrafilter_contains(z, YPoint::principal(pts[i]), sep) ||
          ultrafilter_contains(z, YPoint::principal(pts[j]), sep)) {
        r.ok = false;
        r.failure = "ultrafilters of " + pts[i].to_string() + " and " + pts[j].to_string() + " coincide";
        return r;
      }
      ++r.checked;
    }
  }
  return r;
}

}  // namespace zdext
