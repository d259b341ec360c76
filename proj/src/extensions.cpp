#include "zdext/extensions.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace zdext {

std::string Extension::describe() const {
  std::string s = "infinity={";
  for (std::size_t i = 0; i < space.infinity_blocks.size(); ++i) {
    s += (i ? "," : "") + puncture_set_to_string(space.infinity_blocks[i]);
  }
  return s + "} missing=" + puncture_set_to_string(space.missing);
}

Extension beta0(const Zlba& z) {
  const auto chk = check_zlba(z);
  if (!chk.valid) {
    const auto& c = *chk.certificate;
    throw DomainError("not a ZLBA: block " + std::to_string(c.block + 1) + " is unfilled but glues punctures " +
                      std::to_string(c.p_in + 1) + " and " + std::to_string(c.p_out + 1) + "; the simple ideal " +
                      "{C in I : C cap " + c.d.to_string() + " = empty} has upper bounds " + c.upper1.to_string() +
                      " > " + c.upper2.to_string() + " and no least one");
  }
  Extension e{z, theta_a(z)};
  // f(X) is dense: every nonempty clopen of Y has a principal point
  for (const PunctureSet b : e.space.infinity_blocks) {
    const ClopenSet nb = puncture_neighbourhood(z.world(), b);
    const auto pts = sample_points(z.world());
    if (std::none_of(pts.begin(), pts.end(), [&](const Point& x) { return nb.contains(x); })) {
      throw InvariantError("remainder point without principal points nearby");
    }
  }
  return e;
}

Zlba alpha0(const Extension& e) {
  const Zlba z = theta_t(e.space);
  // f^-1(CO(Y)) and f^-1(CK(Y)) on the depth-3 probe must be A and I of z
  for (std::uint64_t m = 0; m < 256; ++m) {
    const ClopenSet c = from_mask(m, 3);
    const bool clopen = is_yclopen(e.space, c);
    if (clopen != z.in_algebra(c)) throw InvariantError("alpha0: algebra trace mismatch at " + c.to_string());
    if (clopen && is_compact_yclopen(e.space, yclopen(e.space, c)) != z.in_ideal(c)) {
      throw InvariantError("alpha0: ideal trace mismatch at " + c.to_string());
    }
  }
  return z;
}

// ---------------------------------------------------------------- order

namespace {

// Clopen shapes of Y1 that decide continuity: one neighbourhood per
// puncture set constant on the remainder blocks (missing punctures free),
// plus small puncture-free cylinders around the principal candidates.
std::vector<ClopenSet> clopen_shapes(const Extension& e1, const std::vector<Point>& principal) {
  const World& w = e1.world();
  std::vector<ClopenSet> out;
  for (PunctureSet t = 0; t <= w.all(); ++t) {
    const ClopenSet c = puncture_neighbourhood(w, t);
    if (is_yclopen(e1.space, c)) out.push_back(c);
    if (t == w.all()) break;
  }
  for (const Point& x : principal) out.push_back(separating_cylinder(x, w.punctures()));
  return out;
}

std::vector<Point> principal_candidates(const World& w) {
  std::vector<Point> out;
  for (const Point& x : sample_points(w)) {
    if (out.size() == 2) break;
    out.push_back(x);
  }
  return out;
}

}  // namespace

bool remainder_map_continuous(const Extension& e1, const Extension& e2, const RemainderMap& h) {
  const World& w = e1.world();
  std::vector<Point> principal;
  for (const YPoint& u : h.image) {
    if (!u.is_infinity()) principal.push_back(u.x);
  }
  for (const ClopenSet& c : clopen_shapes(e1, principal)) {
    const YClopen v = yclopen(e1.space, c);
    const PunctureSet in_c = w.punctures_in(c);
    // h^-1(v) = (c cap X) plus the remainder points of Y2 sent into v; it is
    // open at such a point iff c holds every puncture of its block
    for (int i = 0; i < e2.space.infinity_count(); ++i) {
      const PunctureSet b2 = e2.space.infinity_blocks[static_cast<std::size_t>(i)];
      if (contains(e1.space, v, h.image[static_cast<std::size_t>(i)]) && (b2 & ~in_c)) return false;
    }
  }
  return true;
}

LeqResult extension_leq(const Extension& e1, const Extension& e2) {
  if (!(e1.world() == e2.world())) throw DomainError("extension_leq needs a common world");
  std::vector<YPoint> targets;
  for (int i = 0; i < e1.space.infinity_count(); ++i) targets.push_back(YPoint::infinity(i));
  for (const Point& x : principal_candidates(e1.world())) targets.push_back(YPoint::principal(x));
  const int n = e2.space.infinity_count();
  LeqResult r;
  std::vector<int> choice(static_cast<std::size_t>(n), 0);
  while (true) {
    RemainderMap h;
    for (int c : choice) h.image.push_back(targets[static_cast<std::size_t>(c)]);
    ++r.candidates_tried;
    if (remainder_map_continuous(e1, e2, h)) {
      r.holds = true;
      r.witness = h;
      return r;
    }
    int k = 0;
    while (k < n && ++choice[static_cast<std::size_t>(k)] == static_cast<int>(targets.size())) {
      choice[static_cast<std::size_t>(k)] = 0;
      ++k;
    }
    if (k == n) break;
  }
  return r;
}

// ---------------------------------------------------------------- catalog

unsigned long long bell(int n) {
  std::vector<unsigned long long> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<unsigned long long> next{row.back()};
    for (unsigned long long v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

std::vector<Zlba> partial_partitions(const World& w, const Limits& limits) {
  if (w.size() > limits.max_catalog_punctures) {
    throw CapacityError("catalog of a world with " + std::to_string(w.size()) + " punctures exceeds bound " +
                        std::to_string(limits.max_catalog_punctures));
  }
  std::vector<Zlba> out;
  for (PunctureSet s = 0;; ++s) {
    // partitions of S by assigning each member to an existing block or a new one
    std::vector<PunctureSet> blocks;
    std::function<void(int)> place = [&](int i) {
      if (i == w.size()) {
        std::vector<PunctureSet> all = blocks;
        std::vector<bool> filled(all.size(), true);
        for (int j = 0; j < w.size(); ++j) {
          if (!((s >> j) & 1u)) {
            all.push_back(PunctureSet{1} << j);
            filled.push_back(false);
          }
        }
        out.emplace_back(w, all, filled);
        return;
      }
      if (!((s >> i) & 1u)) {
        place(i + 1);
        return;
      }
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        blocks[b] |= PunctureSet{1} << i;
        place(i + 1);
        blocks[b] &= ~(PunctureSet{1} << i);
      }
      blocks.push_back(PunctureSet{1} << i);
      place(i + 1);
      blocks.pop_back();
    };
    place(0);
    if (s == w.all()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Catalog enumerate_catalog(const World& w, bool with_orders, const Limits& limits) {
  Catalog c;
  c.world = w;
  c.zlbas = partial_partitions(w, limits);
  for (const Zlba& z : c.zlbas) {
    c.extensions.push_back(beta0(z));
    c.compact.push_back(c.extensions.back().is_compact());
  }
  if (with_orders) {
    const std::size_t n = c.size();
    c.leq0_matrix.assign(n, std::vector<bool>(n));
    c.extension_matrix.assign(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        c.leq0_matrix[i][j] = leq0(c.zlbas[i], c.zlbas[j]);
        c.extension_matrix[i][j] = extension_leq(c.extensions[i], c.extensions[j]).holds;
      }
    }
  }
  return c;
}

std::vector<std::pair<int, int>> hasse_covers(const std::vector<std::vector<bool>>& leq) {
  const int n = static_cast<int>(leq.size());
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || !leq[i][j] || leq[j][i]) continue;
      bool between = false;
      for (int k = 0; k < n && !between; ++k) {
        if (k == i || k == j) continue;
        between = leq[i][k] && leq[k][j] && !leq[k][i] && !leq[j][k];
      }
      if (!between) out.emplace_back(i, j);
    }
  }
  return out;
}

std::string catalog_dot(const Catalog& c) {
  std::string s = "digraph catalog {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < c.size(); ++i) {
    s += "  n" + std::to_string(i) + " [label=\"" + c.zlbas[i].label() + "\"" +
         (c.compact[i] ? ", shape=box" : "") + "];\n";
  }
  for (const auto& [a, b] : hasse_covers(c.leq0_matrix)) {
    s += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
  }
  return s + "}\n";
}

Extension banaschewski(const World& w) { return beta0(Zlba::top(w)); }

}  // namespace zdext
