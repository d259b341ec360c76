#include "zdext/ba_core.hpp"

#include <algorithm>
#include <map>

namespace zdext {

FiniteBA::FiniteBA(int atom_count, const Limits& limits) : atoms_(atom_count) {
  if (atom_count < 0) throw DomainError("negative atom count");
  if (atom_count > limits.max_atoms) {
    throw CapacityError("algebra with " + std::to_string(atom_count) + " atoms exceeds bound " +
                        std::to_string(limits.max_atoms));
  }
}

std::vector<FiniteBA::Element> FiniteBA::elements(const Limits& limits) const {
  if (size() > limits.max_elements) throw CapacityError("element enumeration exceeds bound");
  std::vector<Element> out(size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Element>(i);
  return out;
}

std::string element_to_string(FiniteBA::Element e) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < 64; ++i) {
    if ((e >> i) & 1u) {
      s += (first ? "" : ",") + std::to_string(i + 1);
      first = false;
    }
  }
  return s + "}";
}

std::string FiniteBA::dump() const {
  auto els = elements();
  // sorted by size, then lexicographically on atom lists
  std::sort(els.begin(), els.end(), [](Element a, Element b) {
    const int ca = __builtin_popcountll(a), cb = __builtin_popcountll(b);
    if (ca != cb) return ca < cb;
    for (int i = 0; i < 64; ++i) {
      const bool ia = (a >> i) & 1u, ib = (b >> i) & 1u;
      if (ia != ib) return ia;
    }
    return false;
  });
  std::string s = "[";
  for (std::size_t i = 0; i < els.size(); ++i) s += (i ? ", " : "") + element_to_string(els[i]);
  return s + "]";
}

FiniteBA::Element Subalgebra::embed(FiniteBA::Element e) const {
  FiniteBA::Element out = 0;
  for (std::size_t i = 0; i < atom_images.size(); ++i) {
    if ((e >> i) & 1u) out |= atom_images[i];
  }
  return out;
}

std::vector<FiniteBA::Element> Subalgebra::ambient_elements() const {
  std::vector<FiniteBA::Element> out;
  for (auto e : algebra.elements()) out.push_back(embed(e));
  std::sort(out.begin(), out.end());
  return out;
}

Subalgebra generate_subalgebra(const FiniteBA& ambient, std::span<const FiniteBA::Element> gens,
                               const Limits& limits) {
  if (gens.empty()) throw DomainError("generate_subalgebra needs at least one generator");
  for (auto g : gens) {
    if (!ambient.contains(g)) throw DomainError("generator outside the ambient algebra");
  }
  // Ambient atoms with the same membership pattern across the generators
  // fall into the same atom of the generated subalgebra.
  std::map<std::vector<bool>, FiniteBA::Element> cells;
  std::vector<std::vector<bool>> order;
  for (int a = 0; a < ambient.atom_count(); ++a) {
    std::vector<bool> sig;
    for (auto g : gens) sig.push_back((g >> a) & 1u);
    auto [it, inserted] = cells.try_emplace(sig, 0);
    if (inserted) order.push_back(sig);
    it->second |= ambient.atom(a);
  }
  if (static_cast<int>(order.size()) > limits.max_atoms) {
    throw CapacityError("generated subalgebra has too many atoms");
  }
  Subalgebra out{FiniteBA(static_cast<int>(order.size()), limits), {}};
  for (const auto& sig : order) out.atom_images.push_back(cells.at(sig));
  return out;
}

FiniteIdeal::FiniteIdeal(const FiniteBA& carrier, std::vector<FiniteBA::Element> generators)
    : gens_(std::move(generators)) {
  for (auto g : gens_) {
    if (!carrier.contains(g)) throw DomainError("ideal generator outside the carrier");
    bound_ |= g;
  }
}

FiniteIdeal ideal_pseudocomplement(const FiniteBA& a, const FiniteIdeal& j) {
  return FiniteIdeal::principal(a, a.complement(j.bound()));
}

SimplicityResult is_simple_ideal(const FiniteBA& a, const FiniteIdeal& j) {
  const FiniteIdeal neg = ideal_pseudocomplement(a, j);
  SimplicityResult r;
  // J join not J is generated by the two bounds; simple iff their join is 1.
  if (a.join(j.bound(), neg.bound()) == a.top()) {
    r.simple = true;
    r.certificate.witness = std::make_pair(j.bound(), neg.bound());
  } else {
    r.certificate.refutation = a.top();
  }
  return r;
}

std::vector<Ultrafilter> ultrafilters(const FiniteBA& a) {
  std::vector<Ultrafilter> out;
  for (int i = 0; i < a.atom_count(); ++i) out.push_back(Ultrafilter{i});
  return out;
}

LbaCheck check_lba(const FiniteBA& a, const FiniteIdeal& i) {
  // Atom-wise: every atom must itself lie in I, since it is the only nonzero
  // element below it.
  for (int k = 0; k < a.atom_count(); ++k) {
    if (!i.contains(a.atom(k))) return LbaCheck{false, a.atom(k)};
  }
  return LbaCheck{true, std::nullopt};
}

}  // namespace zdext
