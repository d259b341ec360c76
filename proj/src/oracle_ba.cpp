#include <algorithm>
#include <set>

#include "zdext/oracles.hpp"

namespace zdext::oracle {

namespace {

std::size_t count(int atoms) { return std::size_t{1} << atoms; }
std::uint64_t full(int atoms) { return (std::uint64_t{1} << atoms) - 1; }

bool is_ideal(int atoms, const ElementSet& s) {
  const std::size_t n = count(atoms);
  if (!s[0]) return false;
  for (std::size_t a = 0; a < n; ++a) {
    if (!s[a]) continue;
    for (std::size_t b = 0; b < n; ++b) {
      if ((b & ~a) == 0 && !s[b]) return false;
      if (s[b] && !s[a | b]) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<ElementSet> all_ideals(int atoms) {
  const std::size_t n = count(atoms);
  std::vector<ElementSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (!(mask & 1u)) continue;
    ElementSet s(n);
    for (std::size_t e = 0; e < n; ++e) s[e] = (mask >> e) & 1u;
    if (is_ideal(atoms, s)) out.push_back(std::move(s));
  }
  return out;
}

ElementSet pseudocomplement(int atoms, const ElementSet& j) {
  const std::size_t n = count(atoms);
  ElementSet out(n);
  for (std::size_t a = 0; a < n; ++a) {
    bool ok = true;
    for (std::size_t b = 0; b < n && ok; ++b) ok = !(j[b] && (a & b));
    out[a] = ok;
  }
  return out;
}

ElementSet ideal_join(int atoms, const ElementSet& j, const ElementSet& k) {
  const std::size_t n = count(atoms);
  ElementSet out(n);
  for (std::size_t a = 0; a < n; ++a) {
    if (!j[a]) continue;
    for (std::size_t b = 0; b < n; ++b) {
      if (!k[b]) continue;
      const std::size_t u = a | b;
      for (std::size_t x = 0; x < n; ++x) {
        if ((x & ~u) == 0) out[x] = true;
      }
    }
  }
  return out;
}

ElementSet ideal_meet(const ElementSet& j, const ElementSet& k) {
  ElementSet out(j.size());
  for (std::size_t a = 0; a < j.size(); ++a) out[a] = j[a] && k[a];
  return out;
}

bool is_simple(int atoms, const ElementSet& j) {
  return ideal_join(atoms, j, pseudocomplement(atoms, j))[full(atoms)];
}

bool is_principal(int atoms, const ElementSet& j) {
  const std::size_t n = count(atoms);
  for (std::size_t a = 0; a < n; ++a) {
    if (!j[a]) continue;
    bool top = true;
    for (std::size_t b = 0; b < n && top; ++b) top = !j[b] || (b & ~a) == 0;
    if (top) return true;
  }
  return false;
}

ElementSet down_set(int atoms, std::uint64_t a) {
  ElementSet out(count(atoms));
  for (std::size_t x = 0; x < out.size(); ++x) out[x] = (x & ~a) == 0;
  return out;
}

SimpleIdealReport check_simple_ideals(int max_atoms) {
  SimpleIdealReport r;
  auto fail = [&](int n, const std::string& what) {
    r.failure = "P(" + std::to_string(n) + "): " + what;
    return r;
  };
  for (int n = 0; n <= max_atoms; ++n) {
    ++r.algebras;
    const std::size_t size = count(n);
    const auto ideals = all_ideals(n);
    std::vector<ElementSet> simple;
    for (const auto& j : ideals) {
      ++r.ideals;
      const ElementSet neg = pseudocomplement(n, j);
      if (!ideal_meet(j, neg)[0]) return fail(n, "zero missing from J meet not J");
      for (std::size_t a = 1; a < size; ++a) {
        if (j[a] && neg[a]) return fail(n, "J meet not J is not {0}");
      }
      const ElementSet negneg = pseudocomplement(n, neg);
      for (std::size_t a = 0; a < size; ++a) {
        if (j[a] && !negneg[a]) return fail(n, "not not J misses part of J");
      }
      const bool s = is_simple(n, j);
      if (s != is_principal(n, j)) return fail(n, "simple ideal that is not principal, or converse");
      if (s) {
        ++r.simple;
        simple.push_back(j);
      }
    }
    // a -> down a is a bijection onto Si(A) ...
    if (simple.size() != size) return fail(n, "Si(A) has the wrong size");
    std::vector<ElementSet> image(size);
    for (std::uint64_t a = 0; a < size; ++a) {
      image[a] = down_set(n, a);
      if (std::find(simple.begin(), simple.end(), image[a]) == simple.end()) {
        return fail(n, "down set is not simple");
      }
    }
    // ... preserving the lattice operations of Idl(A) and the complement.
    for (std::uint64_t a = 0; a < size; ++a) {
      if (pseudocomplement(n, image[a]) != image[full(n) & ~a]) return fail(n, "complement not preserved");
      for (std::uint64_t b = 0; b < size; ++b) {
        if (ideal_meet(image[a], image[b]) != image[a & b]) return fail(n, "meet not preserved");
        if (ideal_join(n, image[a], image[b]) != image[a | b]) return fail(n, "join not preserved");
      }
    }
    // The library's closed forms on the same principal ideals.
    const FiniteBA alg(n);
    for (std::uint64_t a = 0; a < size; ++a) {
      const FiniteIdeal j = FiniteIdeal::principal(alg, a);
      const FiniteIdeal neg = ideal_pseudocomplement(alg, j);
      for (std::uint64_t x = 0; x < size; ++x) {
        if (neg.contains(x) != pseudocomplement(n, image[a])[x]) return fail(n, "library pseudocomplement differs");
        if (j.contains(x) != image[a][x]) return fail(n, "library membership differs");
      }
      const auto res = is_simple_ideal(alg, j);
      if (!res.simple || !res.certificate.witness) return fail(n, "library says not simple");
      const auto [u, v] = *res.certificate.witness;
      if (!j.contains(u) || !neg.contains(v) || (u | v) != full(n)) return fail(n, "bad simplicity witness");
    }
  }
  return r;
}

std::vector<std::uint64_t> closure_subalgebra(int atoms, const std::vector<std::uint64_t>& gens) {
  std::set<std::uint64_t> s(gens.begin(), gens.end());
  s.insert(0);
  s.insert(full(atoms));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::uint64_t> cur(s.begin(), s.end());
    for (auto a : cur) {
      grew |= s.insert(full(atoms) & ~a).second;
      for (auto b : cur) {
        grew |= s.insert(a & b).second;
        grew |= s.insert(a | b).second;
      }
    }
  }
  return {s.begin(), s.end()};
}

}  // namespace zdext::oracle
