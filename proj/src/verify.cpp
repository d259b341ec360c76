#include "zdext/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <sstream>

#include "zdext/ba_core.hpp"
#include "zdext/extensions.hpp"
#include "zdext/maps.hpp"
#include "zdext/oracles.hpp"
#include "zdext/proximity.hpp"
#include "zdext/suite.hpp"
#include "zdext/text.hpp"

namespace zdext {

namespace {

struct Ctx {
  const VerifyOptions& opt;
  bool full() const { return opt.level == Level::full; }
  int max_m() const { return full() ? 3 : 2; }
};

/// Tallies checks and keeps the first failure.
struct Run {
  CriterionResult r;
  void check(bool ok, const std::string& what) {
    ++r.checked;
    if (!ok && r.pass) {
      r.pass = false;
      r.detail = "first failure: " + what;
    }
  }
  void note(const std::string& s) {
    if (r.pass) r.detail = s;
  }
};

/// The worlds of the bundled m0..m3 fixtures, up to the level's size bound.
std::vector<World> fixture_worlds(int max_m) {
  std::vector<World> out;
  for (const char* name : {"m0.txt", "m1.txt", "m2.txt", "m3.txt"}) {
    for (const auto& [file, text] : bundled_fixtures()) {
      if (file != name) continue;
      const World w = parse_instance(text).require_world();
      if (w.size() <= max_m) out.push_back(w);
    }
  }
  return out;
}

std::vector<const SuiteMap*> suite_maps(int max_m) {
  std::vector<const SuiteMap*> out;
  for (const auto& m : map_suite()) {
    if (m.map.domain().size() <= max_m && m.map.codomain().size() <= max_m) out.push_back(&m);
  }
  return out;
}

std::string where(const SuiteMap& m, const Zlba& z1, const Zlba& z2) {
  return m.name + " " + z1.label() + " -> " + z2.label();
}

void c1(const Ctx& c, Run& run) {
  for (const World& w : fixture_worlds(c.max_m())) {
    for (const Zlba& z : partial_partitions(w)) {
      const Extension e = beta0(z);
      run.check(alpha0(e) == z, "alpha0(beta0 " + z.label() + ")");
      run.check(equivalent(beta0(alpha0(e)), e), "beta0(alpha0 " + e.describe() + ")");
    }
  }
}

void c2(const Ctx& c, Run& run) {
  for (const World& w : fixture_worlds(c.max_m())) {
    const Catalog cat = enumerate_catalog(w);
    for (std::size_t i = 0; i < cat.size(); ++i) {
      for (std::size_t j = 0; j < cat.size(); ++j) {
        run.check(cat.leq0_matrix[i][j] == cat.extension_matrix[i][j],
                  cat.zlbas[i].label() + " vs " + cat.zlbas[j].label());
      }
    }
  }
}

void c3(const Ctx& c, Run& run) {
  for (const World& w : fixture_worlds(c.max_m())) {
    for (const Zlba& z : partial_partitions(w)) {
      const Extension e = beta0(z);
      const bool i_is_a = ideal_probe(z, 3) == algebra_probe(z, 3);
      run.check(e.is_compact() == i_is_a, z.label() + " (extension)");
      run.check(is_compact(e.space, whole(e.space)) == i_is_a, z.label() + " (whole Y)");
    }
  }
}

void c4(const Ctx& c, Run& run) {
  for (const World& w : fixture_worlds(c.max_m())) {
    for (const Zlba& z : all_presentations(w)) {
      bool partial = true;
      for (int b = 0; b < z.block_count(); ++b) {
        const PunctureSet blk = z.blocks()[static_cast<std::size_t>(b)];
        if (!z.filled()[static_cast<std::size_t>(b)] && (blk & (blk - 1))) partial = false;
      }
      const ZlbaCheck chk = check_zlba(z);
      run.check(chk.valid == partial, z.label() + " validity");
      if (!chk.valid) {
        const bool cert = chk.certificate && verify_certificate(z, *chk.certificate).ok;
        run.check(cert, z.label() + " certificate");
      }
    }
  }
}

void c5(const Ctx& c, Run& run) {
  const int randoms = c.full() ? 500 : 50;
  long interpolants = 0;
  for (const World& w : fixture_worlds(c.max_m())) {
    for (const Zlba& z : partial_partitions(w)) {
      const LocalProximity lp = L_X(z);
      const AxiomReport rep = check_axioms(lp, c.opt.seed, randoms);
      for (const AxiomLine& l : rep.lines) {
        run.check(l.failed == 0, z.label() + " " + l.axiom + ": " + l.witness);
      }
      const ZeroDimResult zd = is_zero_dimensional(lp, c.opt.seed, randoms);
      run.check(zd.ok, z.label() + " zero-dimensional: " + zd.failure);
      interpolants += static_cast<long>(zd.interpolants.size());
    }
  }
  run.note(std::to_string(randoms) + " random clopens, " + std::to_string(interpolants) + " interpolants");
}

void c6(const Ctx& c, Run& run) {
  const int randoms = c.full() ? 500 : 50;
  for (const World& w : fixture_worlds(c.max_m())) {
    const auto fam = sample_family(w, c.opt.seed, randoms);
    const std::size_t structured = fam.size() - static_cast<std::size_t>(randoms);
    for (const Zlba& z : partial_partitions(w)) {
      const LocalProximity a = L_X(z);
      const LocalProximity b = lambda_from_extension(beta0(z));
      run.check(l_X(a) == z, "l_X(L_X " + z.label() + ")");
      run.check(l_X(b) == z, "l_X(lambda " + z.label() + ")");
      for (std::size_t i = 0; i < fam.size(); ++i) {
        run.check(a.bounded(fam[i]) == b.bounded(fam[i]), z.label() + " bounded " + fam[i].to_string());
        // structured against everything, random sets against their successor
        const std::size_t lo = i < structured ? 0 : i + 1;
        const std::size_t hi = i < structured ? fam.size() : std::min(fam.size(), i + 2);
        for (std::size_t j = lo; j < hi; ++j) {
          run.check(a.near(fam[i], fam[j]) == b.near(fam[i], fam[j]),
                    z.label() + " near " + fam[i].to_string() + " " + fam[j].to_string());
        }
      }
    }
  }
}

void c7(const Ctx& c, Run& run) {
  long ok = 0, refused = 0;
  for (const SuiteMap* m : suite_maps(c.max_m())) {
    for (const Zlba& z1 : partial_partitions(m->map.domain())) {
      const LocalProximity p1 = L_X(z1);
      for (const Zlba& z2 : partial_partitions(m->map.codomain())) {
        const ZeqResult r = check_zeq(m->map, z1, z2);
        bool extended = true;
        try {
          extend(m->map, z1, z2);
        } catch (const ZeqViolation&) {
          extended = false;
        }
        const bool eq = is_equicontinuous(m->map, p1, L_X(z2), c.opt.seed).ok();
        const bool tried = try_extend(m->map, z1, z2).map.has_value();
        run.check(extended == r.ok() && r.ok() == eq && tried == r.ok(), where(*m, z1, z2));
        if (!r.ok()) run.check(verify_zeq_witnesses(m->map, z1, z2, r), where(*m, z1, z2) + " witness");
        (r.ok() ? ok : refused)++;
      }
    }
  }
  for (const auto& bad : rejected_maps()) {
    bool thrown = false;
    try {
      PresentedMap(suite_world(bad.world1), suite_world(bad.world2), bad.pieces);
    } catch (const DomainError&) {
      thrown = true;
    }
    run.check(thrown, bad.name + " should be refused");
  }
  run.check(ok > 0 && refused > 0, "both outcomes occur");
  run.note(std::to_string(ok) + " extend, " + std::to_string(refused) + " refused");
}

void c8(const Ctx& c, Run& run) {
  long instances = 0;
  for (const SuiteMap* m : suite_maps(c.max_m())) {
    for (const Zlba& z1 : partial_partitions(m->map.domain())) {
      for (const Zlba& z2 : partial_partitions(m->map.codomain())) {
        if (!check_zeq(m->map, z1, z2).ok()) continue;
        ++instances;
        const TheoremReport rep = verify_main_theorem(m->map, z1, z2);
        for (const ClauseRow& row : rep.rows) run.check(row.agrees(), where(*m, z1, z2) + " clause " + row.clause);
      }
    }
  }
  run.note(std::to_string(instances) + " instances x 9 clauses");
}

void c9(const Ctx& c, Run& run) {
  for (const SuiteMap* m : suite_maps(c.max_m())) {
    run.check(skeletal_triple(m->map).agree(), m->name + " triple on X");
    const bool fs = is_skeletal(m->map);
    for (const Zlba& z1 : partial_partitions(m->map.domain())) {
      for (const Zlba& z2 : partial_partitions(m->map.codomain())) {
        if (!check_zeq(m->map, z1, z2).ok()) continue;
        const SkeletalVerdict v = skeletal_triple(extend(m->map, z1, z2));
        run.check(v.agree(), where(*m, z1, z2) + " triple on Y");
        run.check(v.interior_rule == fs, where(*m, z1, z2) + " transfer");
      }
    }
    if (m->map.domain().size() > 2 || m->map.codomain().size() > 2) continue;
    const auto b = banaschewski_functor(m->map);
    for (const ClauseRow& row : b.clauses.rows) run.check(row.agrees(), m->name + " beta0 clause " + row.clause);
    for (const Zlba& z2 : partial_partitions(m->map.codomain())) {
      if (!z2.is_compact()) continue;
      const auto r = compact_target_corollary(m->map, z2);
      for (const ClauseRow& row : r.clauses.rows) {
        run.check(row.agrees(), m->name + " into " + z2.label() + " clause " + row.clause);
      }
    }
  }
}

void c10(const Ctx& c, Run& run) {
  const int m_max = c.max_m();
  for (const World& w : fixture_worlds(m_max)) {
    for (const Zlba& z : partial_partitions(w)) {
      const DualityCheck l = verify_lambda(z), t = verify_t_naturality(z);
      run.check(l.ok, z.label() + " lambda: " + l.failure);
      run.check(t.ok, z.label() + " t^C: " + t.failure);
    }
  }
  // composition laws need three catalogs at once; m <= 2 keeps this quadratic part small
  for (const auto& [i, j] : composable_pairs()) {
    const SuiteMap& fm = map_suite()[i];
    const SuiteMap& hm = map_suite()[j];
    const PresentedMap& f = fm.map;
    const PresentedMap& h = hm.map;
    if (f.domain().size() > 2 || f.codomain().size() > 2 || h.codomain().size() > 2) continue;
    const PresentedMap hf = compose(f, h);
    for (const Zlba& z1 : partial_partitions(f.domain())) {
      for (const Zlba& z2 : partial_partitions(f.codomain())) {
        if (!check_zeq(f, z1, z2).ok()) continue;
        const ExtensionMap g1 = extend(f, z1, z2);
        const std::string w12 = fm.name + " " + z1.label() + " " + z2.label();
        run.check(theta_a_morphism(ZlbaMorphism{f, z2, z1}).remainder == g1.remainder, w12 + " theta_a");
        for (const ClopenSet& cs : algebra_probe(z2, 2)) {
          run.check(theta_t_morphism(g1, cs) == f.preimage(cs), w12 + " theta_t " + cs.to_string());
        }
        for (const Zlba& z3 : partial_partitions(h.codomain())) {
          if (!check_zeq(h, z2, z3).ok()) continue;
          const std::string w = hm.name + " after " + w12 + " " + z3.label();
          const ExtensionMap g2 = extend(h, z2, z3);
          if (!check_zeq(hf, z1, z3).ok()) {
            run.check(false, w + " composite does not extend");
            continue;
          }
          const ExtensionMap g = extend(hf, z1, z3);
          run.check(g.remainder == compose(g1, g2).remainder, w + " composite");
          for (const ClopenSet& cs : algebra_probe(z3, 2)) {
            run.check(theta_t_morphism(g, cs) == theta_t_morphism(g1, theta_t_morphism(g2, cs)),
                      w + " theta_t law " + cs.to_string());
          }
          const ExtensionMap a = theta_a_morphism(ZlbaMorphism{hf, z3, z1});
          const ExtensionMap b =
              compose(theta_a_morphism(ZlbaMorphism{f, z2, z1}), theta_a_morphism(ZlbaMorphism{h, z3, z2}));
          run.check(a.remainder == b.remainder, w + " theta_a law");
        }
      }
    }
  }
}

void c11(const Ctx& c, Run& run) {
  std::string counts;
  for (const World& w : fixture_worlds(c.max_m())) {
    const auto n = enumerate_catalog(w, false).size();
    long valid = 0, joins = 0;
    for (const Zlba& z : all_presentations(w)) {
      valid += check_zlba(z).valid ? 1 : 0;
      joins += oracle::join_search(z).all_joins ? 1 : 0;
    }
    const auto b = bell(w.size() + 1);
    const std::string m = "m=" + std::to_string(w.size());
    run.check(n == b, m + " catalog " + std::to_string(n) + " != Bell " + std::to_string(b));
    run.check(static_cast<unsigned long long>(valid) == b, m + " valid presentations " + std::to_string(valid));
    run.check(static_cast<unsigned long long>(joins) == b, m + " join-search survivors " + std::to_string(joins));
    counts += (counts.empty() ? "" : ", ") + std::to_string(n);
  }
  run.note("catalog sizes " + counts);
}

void c12(const Ctx&, Run& run) {
  const auto rep = oracle::check_simple_ideals(4);
  run.check(rep.failure.empty() && rep.algebras == 5, rep.failure);
  run.note(std::to_string(rep.algebras) + " algebras, " + std::to_string(rep.ideals) + " ideals");
}

struct Entry {
  const char* title;
  void (*fn)(const Ctx&, Run&);
};

const Entry kEntries[kCriteria] = {
    {"alpha0/beta0 round trips on the catalogs", c1},
    {"leq0 matrix equals the extension order matrix", c2},
    {"extension compact iff I = A", c3},
    {"check_zlba exactly on partial partitions, certificates verified", c4},
    {"proximity axioms and zero-dimensional interpolants", c5},
    {"l_X after L_X is the identity, L_X equals Leader's proximity", c6},
    {"extend iff ZEQ1 and ZEQ2 iff EQ1 and EQ2, witnesses verified", c7},
    {"clauses (a)-(i): predicted equals actual", c8},
    {"skeletal characterizations, transfer, beta0 and compact-target corollary", c9},
    {"duality functor laws, lambda onto CO(Y) and CK(Y), t^C naturality", c10},
    {"catalog counts are Bell numbers, cross-validated", c11},
    {"simple ideals are principal on algebras with <= 4 atoms", c12},
};

}  // namespace

CriterionResult run_criterion(int id, const VerifyOptions& opt) {
  if (id < 1 || id > kCriteria) throw DomainError("no criterion " + std::to_string(id));
  const Entry& e = kEntries[id - 1];
  Run run;
  run.r.id = id;
  run.r.title = e.title;
  run.r.pass = true;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    e.fn(Ctx{opt}, run);
  } catch (const Error& ex) {
    run.r.pass = false;
    run.r.detail = std::string("error: ") + ex.what();
  }
  run.r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return run.r;
}

std::vector<CriterionResult> run_verify(const VerifyOptions& opt, std::vector<int> ids) {
  if (ids.empty()) {
    for (int i = 1; i <= kCriteria; ++i) ids.push_back(i);
  }
  std::vector<CriterionResult> out;
  if (opt.jobs <= 1) {
    for (int id : ids) out.push_back(run_criterion(id, opt));
  } else {
    // the slow criteria first, so they overlap with the quick ones
    std::vector<int> order = ids;
    std::stable_sort(order.begin(), order.end(), [](int a, int b) { return (a == 5 || a == 6) > (b == 5 || b == 6); });
    std::vector<std::future<CriterionResult>> running;
    std::size_t next = 0;
    auto launch = [&] { running.push_back(std::async(std::launch::async, run_criterion, order[next++], opt)); };
    while (next < order.size() && static_cast<int>(running.size()) < opt.jobs) launch();
    while (!running.empty()) {
      out.push_back(running.front().get());
      running.erase(running.begin());
      if (next < order.size()) launch();
    }
  }
  std::sort(out.begin(), out.end(), [](const CriterionResult& a, const CriterionResult& b) { return a.id < b.id; });
  return out;
}

std::string verify_report(const std::vector<CriterionResult>& rs, const VerifyOptions& opt) {
  std::ostringstream s;
  s << "verify level=" << (opt.level == Level::full ? "full" : "smoke") << " seed=" << opt.seed << "\n";
  int passed = 0;
  for (const auto& r : rs) {
    s << (r.pass ? "PASS" : "FAIL") << " C" << r.id << " " << r.title << " checked=" << r.checked;
    if (!r.detail.empty()) s << " (" << r.detail << ")";
    s << "\n";
    passed += r.pass ? 1 : 0;
  }
  s << passed << "/" << rs.size() << " criteria passed\n";
  return s.str();
}

}  // namespace zdext
