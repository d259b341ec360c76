#include "zdext/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "zdext/extensions.hpp"
#include "zdext/maps.hpp"
#include "zdext/proximity.hpp"
#include "zdext/text.hpp"
#include "zdext/verify.hpp"

namespace zdext {

namespace {

const char* tf(bool b) { return b ? "true" : "false"; }

struct Opts {
  std::string world, world1, world2;
  std::vector<std::string> zlbas;
  std::string zlba1, zlba2, extension, map, dot, level = "full";
  std::uint64_t seed = 7;
  int randoms = 500;
  int jobs = 1;
  bool verify = false;
  bool axioms = false;
  std::vector<int> criteria;
};

std::string zlba_name(const Opts& o) { return o.zlbas.empty() ? std::string() : o.zlbas.front(); }

/// The declared name of a zlba, for printing.
std::string name_of(const InstanceFile& f, const Zlba& z) {
  for (const auto& [n, x] : f.zlbas) {
    if (&x == &z) return n;
  }
  return "Z";
}

void print_certificate(std::ostream& out, const Zlba& z, const NonJoinCertificate& c) {
  const CertificateCheck v = verify_certificate(z, c);
  out << "certificate: NonJoinCertificate\n"
      << "  block=" << c.block + 1 << " " << puncture_set_to_string(z.blocks()[static_cast<std::size_t>(c.block)])
      << " unfilled\n"
      << "  p_in=" << c.p_in + 1 << " " << z.world().puncture(c.p_in).to_string() << "\n"
      << "  p_out=" << c.p_out + 1 << " " << z.world().puncture(c.p_out).to_string() << "\n"
      << "  D=" << c.d.to_string() << "\n"
      << "  simple ideal J={C in I : C cap D = empty}\n"
      << "  upper1=" << c.upper1.to_string() << "\n"
      << "  upper2=" << c.upper2.to_string() << " (strictly below upper1)\n"
      << "  every upper bound has a strictly smaller one; J has no join in A\n"
      << "  checked=" << tf(v.ok) << (v.ok ? "" : " (" + v.reason + ")") << "\n";
}

int cmd_check_zlba(const Opts& o, std::ostream& out) {
  const InstanceFile f = read_instance(o.world);
  const Zlba& z = f.zlba(zlba_name(o));
  out << format_zlba(name_of(f, z), z) << "\n";
  const AdmissibilityResult adm = check_admissible(z);
  out << "admissible: " << tf(adm.ok) << (adm.ok ? "" : " (fails " + adm.clause + ")") << "\n";
  const ZlbaCheck chk = check_zlba(z);
  out << "zlba: " << tf(chk.valid) << "\n";
  if (chk.valid) {
    out << "compact: " << tf(z.is_compact()) << "\n";
    return adm.ok ? 0 : 1;
  }
  print_certificate(out, z, *chk.certificate);
  if (!verify_certificate(z, *chk.certificate).ok) throw InvariantError("certificate does not verify");
  return 1;
}

int cmd_dual(const Opts& o, std::ostream& out) {
  const InstanceFile f = read_instance(o.world);
  const Zlba& z = f.zlba(zlba_name(o));
  const std::string name = name_of(f, z);
  if (!check_zlba(z).valid) {
    out << format_zlba(name, z) << "\nnot a ZLBA; no dual space\n";
    return 1;
  }
  const DualSpace y = theta_a(z);
  out << "dual of " << name << ": X plus " << y.infinity_count() << " remainder point(s)\n";
  for (int i = 0; i < y.infinity_count(); ++i) {
    out << "  inf" << i + 1 << " restores " << puncture_set_to_string(y.infinity_blocks[static_cast<std::size_t>(i)])
        << "\n";
  }
  out << "missing: " << puncture_set_to_string(y.missing) << "\n";
  out << "compact: " << tf(y.is_compact()) << "\n";
  const DualityCheck l = verify_lambda(z);
  out << "lambda onto CO(Y), I onto CK(Y): " << tf(l.ok) << " checked=" << l.checked << "\n";
  if (!l.ok) throw InvariantError("lambda check failed: " + l.failure);
  return 0;
}

int cmd_alpha(const Opts& o, std::ostream& out) {
  const InstanceFile f = read_instance(o.world);
  const Extension& e = f.extension(o.extension);
  std::string name = "Z";
  for (const auto& [n, x] : f.extensions) {
    if (&x == &e) name = n;
  }
  out << format_zlba(name, alpha0(e)) << "\n";
  return 0;
}

int cmd_beta(const Opts& o, std::ostream& out) {
  const InstanceFile f = read_instance(o.world);
  const Zlba& z = f.zlba(zlba_name(o));
  const ZlbaCheck chk = check_zlba(z);
  if (!chk.valid) {
    out << format_zlba(name_of(f, z), z) << "\nnot a ZLBA\n";
    print_certificate(out, z, *chk.certificate);
    return 1;
  }
  out << format_extension(name_of(f, z), beta0(z)) << "\n";
  return 0;
}

int cmd_order(const Opts& o, std::ostream& out) {
  if (o.zlbas.size() != 2) throw DomainError("order needs --zlba twice");
  const InstanceFile f = read_instance(o.world);
  const Zlba& a = f.zlba(o.zlbas[0]);
  const Zlba& b = f.zlba(o.zlbas[1]);
  const bool alg = leq0(a, b);
  const LeqResult ext = extension_leq(beta0(a), beta0(b));
  out << "leq0(" << o.zlbas[0] << ", " << o.zlbas[1] << ") = " << tf(alg) << "\n";
  out << "extension_leq(" << o.zlbas[0] << ", " << o.zlbas[1] << ") = " << tf(ext.holds)
      << " candidates=" << ext.candidates_tried << "\n";
  if (ext.witness) {
    out << "witness: remainder of " << o.zlbas[1] << " ->";
    for (const YPoint& u : ext.witness->image) out << " " << u.to_string();
    out << "\n";
  }
  if (alg != ext.holds) throw InvariantError("the two orders disagree");
  return alg ? 0 : 1;
}

int cmd_catalog(const Opts& o, std::ostream& out) {
  const World w = read_instance(o.world).require_world();
  const Catalog c = enumerate_catalog(w);
  const auto covers = hasse_covers(c.leq0_matrix);
  out << format_world(w) << "\n";
  out << "nodes=" << c.size() << " covers=" << covers.size() << " bell=" << bell(w.size() + 1) << "\n";
  for (std::size_t i = 0; i < c.size(); ++i) {
    out << "  n" << i << " " << c.zlbas[i].label() << " " << c.extensions[i].describe()
        << (c.compact[i] ? " compact" : "") << "\n";
  }
  const bool agree = c.leq0_matrix == c.extension_matrix;
  out << "order matrices agree: " << tf(agree) << "\n";
  if (!agree) throw InvariantError("leq0 and the extension order differ");
  if (!o.dot.empty()) {
    std::ofstream dot(o.dot);
    if (!dot) throw DomainError("cannot write " + o.dot);
    dot << catalog_dot(c);
    out << "wrote " << o.dot << "\n";
  }
  return 0;
}

int cmd_extend_map(const Opts& o, std::ostream& out) {
  const InstanceFile f1 = read_instance(o.world1);
  const InstanceFile f2 = o.world2 == o.world1 ? f1 : read_instance(o.world2);
  const World& w1 = f1.require_world();
  const World& w2 = f2.require_world();
  const MapDecl* decl = nullptr;
  for (const InstanceFile* f : {&f1, &f2}) {
    for (const auto& m : f->maps) {
      if (!decl && m.name == o.map) decl = &m;
    }
  }
  if (!decl) throw DomainError("no map named " + o.map);
  const PresentedMap f = decl->build(w1, w2);
  const Zlba& z1 = f1.zlba(o.zlba1);
  const Zlba& z2 = f2.zlba(o.zlba2);
  out << format_map(o.map, f) << "\n" << format_zlba(o.zlba1, z1) << "\n" << format_zlba(o.zlba2, z2) << "\n";
  if (!check_zlba(z1).valid || !check_zlba(z2).valid) {
    out << "not a ZLBA pair; nothing to extend\n";
    return 1;
  }
  const ZeqResult r = check_zeq(f, z1, z2);
  out << "ZEQ1: " << tf(r.zeq1);
  if (r.g_witness) out << " witness G=" << r.g_witness->to_string() << " in A2, f^-1(G) not in A1";
  out << "\nZEQ2: " << tf(r.zeq2);
  if (r.f_witness) out << " witness F=" << r.f_witness->to_string() << " in I1, f(F) below no member of I2";
  out << "\n";
  if (!verify_zeq_witnesses(f, z1, z2, r)) throw InvariantError("ZEQ witnesses do not verify");
  if (!r.ok()) {
    out << "extension: none\n";
    return 1;
  }
  const ExtensionMap g = extend(f, z1, z2);
  out << "extension: g";
  for (std::size_t i = 0; i < g.remainder.size(); ++i) out << " inf" << i + 1 << "->" << g.remainder[i].to_string();
  out << (g.remainder.empty() ? " (no remainder points)\n" : "\n");
  if (!o.verify) return 0;
  const TheoremReport rep = verify_main_theorem(f, z1, z2);
  out << rep.to_string();
  const SkeletalVerdict sx = skeletal_triple(f), sy = skeletal_triple(g);
  out << "skeletal f: interior_rule=" << tf(sx.interior_rule) << " image_rule=" << tf(sx.image_rule) << " dense_rule=" << tf(sx.dense_rule) << "\n";
  out << "skeletal g: interior_rule=" << tf(sy.interior_rule) << " image_rule=" << tf(sy.image_rule) << " dense_rule=" << tf(sy.dense_rule) << "\n";
  const bool ok = rep.all_agree() && sx.agree() && sy.agree() && sx.interior_rule == sy.interior_rule;
  out << "verify: " << (ok ? "pass" : "FAIL") << "\n";
  return ok ? 0 : 1;
}

int cmd_proximity(const Opts& o, std::ostream& out) {
  const InstanceFile f = read_instance(o.world);
  const Zlba& z = f.zlba(zlba_name(o));
  out << format_zlba(name_of(f, z), z) << "\n";
  if (!check_zlba(z).valid) {
    out << "not a ZLBA; no proximity\n";
    return 1;
  }
  const LocalProximity lp = L_X(z);
  const bool round = l_X(lp) == z;
  out << "l_X(L_X) = identity: " << tf(round) << "\n";
  if (!round) throw InvariantError("l_X does not invert L_X");
  if (!o.axioms) return 0;
  out << "seed=" << o.seed << " randoms=" << o.randoms << "\n";
  const AxiomReport rep = check_axioms(lp, o.seed, o.randoms);
  out << rep.to_string();
  const ZeroDimResult zd = is_zero_dimensional(lp, o.seed, o.randoms);
  out << "zero-dimensional: " << (zd.ok ? "pass" : "FAIL") << " interpolants=" << zd.interpolants.size();
  if (!zd.ok) out << " " << zd.failure;
  out << "\n";
  return rep.ok() && zd.ok ? 0 : 1;
}

int cmd_verify(const Opts& o, std::ostream& out) {
  VerifyOptions v;
  v.level = o.level == "smoke" ? Level::smoke : Level::full;
  v.seed = o.seed;
  v.jobs = o.jobs;
  const auto rs = run_verify(v, o.criteria);
  out << verify_report(rs, v);
  return std::all_of(rs.begin(), rs.end(), [](const CriterionResult& r) { return r.pass; }) ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"zdext: zero-dimensional local compactifications of pierced Cantor spaces", "zdext"};
  app.require_subcommand(1);
  Opts o;
  auto world = [&](CLI::App* s) { s->add_option("--world", o.world, "instance file")->required(); };
  auto zlba = [&](CLI::App* s) { s->add_option("--zlba", o.zlbas, "zlba name")->expected(1); };

  auto* check = app.add_subcommand("check-zlba", "validity, admissibility and non-join certificate");
  world(check);
  zlba(check);
  auto* dual = app.add_subcommand("dual", "the dual space of a zlba");
  world(dual);
  zlba(dual);
  auto* alpha = app.add_subcommand("alpha", "extension to zlba");
  world(alpha);
  alpha->add_option("--extension", o.extension, "extension name");
  auto* beta = app.add_subcommand("beta", "zlba to extension");
  world(beta);
  zlba(beta);
  auto* order = app.add_subcommand("order", "compare two zlbas and their extensions");
  world(order);
  order->add_option("--zlba", o.zlbas, "zlba name (twice)")->required()->expected(1)->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  auto* catalog = app.add_subcommand("catalog", "every extension of the world, with its order");
  world(catalog);
  catalog->add_option("--dot", o.dot, "write the Hasse diagram as DOT");
  auto* ext = app.add_subcommand("extend-map", "extend a presented map over the dual spaces");
  ext->add_option("--world1", o.world1, "domain instance file")->required();
  ext->add_option("--world2", o.world2, "codomain instance file")->required();
  ext->add_option("--zlba1", o.zlba1, "zlba on the domain")->required();
  ext->add_option("--zlba2", o.zlba2, "zlba on the codomain")->required();
  ext->add_option("--map", o.map, "map name")->required();
  ext->add_flag("--verify", o.verify, "check clauses (a)-(i) and the skeletal characterizations");
  auto* prox = app.add_subcommand("proximity", "the local proximity of a zlba");
  world(prox);
  zlba(prox);
  prox->add_flag("--check-axioms", o.axioms, "check the axioms on the seeded sample family");
  prox->add_option("--seed", o.seed, "sample seed");
  prox->add_option("--randoms", o.randoms, "random clopens in the sample family")->check(CLI::Range(0, 100000));
  auto* ver = app.add_subcommand("verify", "run the acceptance criteria");
  ver->add_option("--level", o.level, "smoke or full")->check(CLI::IsMember({"smoke", "full"}));
  ver->add_option("--seed", o.seed, "sample seed");
  ver->add_option("--jobs", o.jobs, "criteria run concurrently")->check(CLI::Range(1, 64));
  ver->add_option("--criterion", o.criteria, "only these criteria")->check(CLI::Range(1, kCriteria));

  std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (check->parsed()) return cmd_check_zlba(o, out);
    if (dual->parsed()) return cmd_dual(o, out);
    if (alpha->parsed()) return cmd_alpha(o, out);
    if (beta->parsed()) return cmd_beta(o, out);
    if (order->parsed()) return cmd_order(o, out);
    if (catalog->parsed()) return cmd_catalog(o, out);
    if (ext->parsed()) return cmd_extend_map(o, out);
    if (prox->parsed()) return cmd_proximity(o, out);
    if (ver->parsed()) return cmd_verify(o, out);
  } catch (const InvariantError& e) {
    err << "invariant violated: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace zdext
