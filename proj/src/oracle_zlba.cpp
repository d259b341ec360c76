#include <bit>

#include "zdext/oracles.hpp"

namespace zdext::oracle {

namespace {

using Mask = std::uint64_t;

// Expand a mask over depth-d cells to depth d+k.
Mask refine(Mask m, int d, int k) {
  Mask out = 0;
  for (Mask i = 0; i < (Mask{1} << d); ++i) {
    if (!((m >> i) & 1u)) continue;
    for (Mask t = 0; t < (Mask{1} << k); ++t) out |= Mask{1} << (i | (t << d));
  }
  return out;
}

struct Cells {
  std::vector<Mask> cell;  // per puncture, one-bit mask of its cell
};

Cells cells_at(const World& w, int d) {
  Cells c;
  for (const Point& p : w.punctures()) c.cell.push_back(Mask{1} << p.prefix(d).bits);
  return c;
}

PunctureSet punctures_of(const Cells& c, Mask m) {
  PunctureSet s = 0;
  for (std::size_t i = 0; i < c.cell.size(); ++i) {
    if (m & c.cell[i]) s |= PunctureSet{1} << i;
  }
  return s;
}

bool block_constant(const Zlba& z, PunctureSet s) {
  for (PunctureSet b : z.blocks()) {
    if ((s & b) != 0 && (s & b) != b) return false;
  }
  return true;
}

}  // namespace

JoinSearch join_search(const Zlba& z) {
  const World& w = z.world();
  for (int i = 0; i < w.size(); ++i) {
    for (int j = i + 1; j < w.size(); ++j) {
      if (w.puncture(i).prefix(2) == w.puncture(j).prefix(2)) {
        throw DomainError("join_search needs punctures separated at depth 2");
      }
    }
  }
  PunctureSet unfilled = 0;
  for (std::size_t b = 0; b < z.blocks().size(); ++b) {
    if (!z.filled()[b]) unfilled |= z.blocks()[b];
  }
  auto members = [&](int d, bool ideal_only) {
    const Cells c = cells_at(w, d);
    std::vector<Mask> out;
    const Mask n = Mask{1} << (Mask{1} << d);
    for (Mask m = 0; m < n; ++m) {
      const PunctureSet s = punctures_of(c, m);
      if (!block_constant(z, s)) continue;
      if (ideal_only && (s & unfilled)) continue;
      out.push_back(m);
    }
    return out;
  };
  const auto i3 = members(3, true), i4 = members(4, true);
  const auto a2 = members(2, false), a3 = members(3, false);

  JoinSearch r;
  for (Mask d2 = 0; d2 < 16; ++d2) {
    const Mask d3 = refine(d2, 2, 1), d4 = refine(d2, 2, 2);
    std::vector<Mask> j3;
    Mask top3 = 0, top4 = 0;
    for (Mask c : i3) {
      if (!(c & d3)) {
        j3.push_back(c);
        top3 |= c;
      }
    }
    for (Mask c : i4) {
      if (!(c & d4)) top4 |= c;
    }
    // not J on depth 3, tested against the finer members of J
    std::vector<Mask> neg3;
    for (Mask c : i3) {
      if (!(refine(c, 3, 1) & top4)) neg3.push_back(c);
    }
    bool simple = true;
    for (Mask c : i3) {
      Mask got = 0;
      for (Mask j : j3) {
        if (!(j & ~c)) got |= j;
      }
      for (Mask k : neg3) {
        if (!(k & ~c)) got |= k;
      }
      if (got != c) {
        simple = false;
        break;
      }
    }
    if (!simple) continue;
    ++r.simple_ideals;
    // least upper bounds at depth 2 and depth 3, compared on depth-4 cells
    Mask lub2 = ~Mask{0} & 0xFFFFu, lub3 = 0xFFFFu;
    for (Mask u : a2) {
      if (!(top3 & ~refine(u, 2, 1))) lub2 &= refine(u, 2, 2);
    }
    for (Mask u : a3) {
      if (!(top4 & ~refine(u, 3, 1))) lub3 &= refine(u, 3, 1);
    }
    if (lub2 != lub3) {
      r.all_joins = false;
      r.failing_d = from_mask(d2, 2);
      return r;
    }
  }
  return r;
}

}  // namespace zdext::oracle
