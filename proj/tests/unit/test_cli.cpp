#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "zdext/cli.hpp"

using namespace zdext;

namespace {

struct Out {
  int code;
  std::string out, err;
};

Out run(std::vector<std::string> args) {
  args.insert(args.begin(), "zdext");
  std::ostringstream o, e;
  const int c = run_cli(args, o, e);
  return {c, o.str(), e.str()};
}

std::string fixture(const char* name) { return std::string(ZDEXT_SOURCE_DIR) + "/fixtures/" + name; }

std::string temp_file(const std::string& name, const std::string& text) {
  const std::string path = "/tmp/zdext_test_" + name;
  std::ofstream(path) << text;
  return path;
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("check-zlba on an unfilled glued block prints the certificate") {
  const Out r = run({"check-zlba", "--world", fixture("m2.txt"), "--zlba", "bad"});
  CHECK(r.code == 1);
  CHECK(contains(r.out, "NonJoinCertificate"));
  CHECK(contains(r.out, "checked=true"));
  CHECK(run({"check-zlba", "--world", fixture("m2.txt"), "--zlba", "glued"}).code == 0);
  CHECK(run({"check-zlba", "--world", fixture("m3.txt"), "--zlba", "bad"}).code == 1);
}

TEST_CASE("catalog and its DOT output") {
  const std::string dot = "/tmp/zdext_test_m2.dot";
  const Out r = run({"catalog", "--world", fixture("m2.txt"), "--dot", dot});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "nodes=5 "));
  CHECK(contains(run({"catalog", "--world", fixture("m3.txt")}).out, "nodes=15 "));

  std::ifstream in(dot);
  std::string line;
  std::getline(in, line);
  CHECK(line == "digraph catalog {");
  std::set<std::pair<int, int>> edges;
  int nodes = 0;
  while (std::getline(in, line)) {
    int a = 0, b = 0;
    if (std::sscanf(line.c_str(), "  n%d -> n%d;", &a, &b) == 2) {
      edges.insert({a, b});
    } else if (contains(line, "[label=")) {
      ++nodes;
    }
  }
  CHECK(nodes == 5);
  // transitive reduction: no edge is implied by a two-step path
  for (const auto& [a, b] : edges) {
    for (const auto& [c, d] : edges) {
      if (c == b) CHECK(edges.count({a, d}) == 0);
    }
  }
  CHECK(edges.size() == 5);
}

TEST_CASE("alpha, beta, dual and order") {
  CHECK(run({"beta", "--world", fixture("m2.txt"), "--zlba", "glued"}).out ==
        "extension glued infinity={{1,2}} missing={}\n");
  CHECK(run({"alpha", "--world", fixture("m2.txt"), "--extension", "partial"}).out ==
        "zlba partial blocks={{1},{2}} filled={2}\n");
  CHECK(run({"beta", "--world", fixture("m2.txt"), "--zlba", "bad"}).code == 1);
  const Out d = run({"dual", "--world", fixture("m2.txt"), "--zlba", "half"});
  CHECK(d.code == 0);
  CHECK(contains(d.out, "missing: {2}"));
  CHECK(run({"order", "--world", fixture("m2.txt"), "--zlba", "glued", "--zlba", "top"}).code == 0);
  CHECK(run({"order", "--world", fixture("m2.txt"), "--zlba", "top", "--zlba", "glued"}).code == 1);
  CHECK(run({"order", "--world", fixture("m2.txt"), "--zlba", "top"}).code == 2);
}

TEST_CASE("extend-map") {
  const Out ok = run({"extend-map", "--world1", fixture("m2.txt"), "--world2", fixture("m1.txt"), "--zlba1", "top",
                      "--zlba2", "top", "--map", "fold", "--verify"});
  CHECK(ok.code == 0);
  CHECK(contains(ok.out, "verify: pass"));
  CHECK_FALSE(contains(ok.out, "MISMATCH"));
  // X1 -> one-point Y2 extends, but the one-point space on W1 cannot go to X
  const Out no = run({"extend-map", "--world1", fixture("m1.txt"), "--world2", fixture("m1.txt"), "--zlba1", "top",
                      "--zlba2", "X", "--map", "id1"});
  CHECK(no.code == 1);
  CHECK(contains(no.out, "ZEQ2: false witness"));
  // a map that is not continuous into the codomain world is an input error
  // into1 sends (1) onto the puncture (1) of m2: not a map into that world
  const Out bad = run({"extend-map", "--world1", fixture("m0.txt"), "--world2", fixture("m2.txt"), "--zlba1", "X",
                       "--zlba2", "top", "--map", "into1"});
  CHECK(bad.code == 2);
  CHECK(contains(bad.err, "map into1"));
}

TEST_CASE("proximity report") {
  const std::vector<std::string> cmd{"proximity", "--world", fixture("m2.txt"), "--zlba", "glued",
                                     "--check-axioms", "--seed", "3", "--randoms", "20"};
  const Out a = run(cmd), b = run(cmd);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(contains(a.out, "BC2: pass"));
  CHECK(contains(a.out, "zero-dimensional: pass"));
}

TEST_CASE("exit codes for usage and parse errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"catalog"}).code == 2);
  CHECK(run({"catalog", "--world", "/nonexistent/file.txt"}).code == 2);
  const std::string bad = temp_file("bad.txt", "world punctures=[(0)]\n\nzlba Z blocks={{1}} filled={} shade=blue\n");
  const Out r = run({"check-zlba", "--world", bad});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "line 3"));
  CHECK(run({"check-zlba", "--world", fixture("m2.txt")}).code == 2);  // ambiguous zlba
  CHECK(run({"verify", "--level", "huge"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify subcommand") {
  const Out r = run({"verify", "--level", "smoke", "--seed", "7", "--criterion", "11", "--criterion", "12"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "verify level=smoke seed=7\n"
        "PASS C11 catalog counts are Bell numbers, cross-validated checked=9 (catalog sizes 1, 2, 5)\n"
        "PASS C12 simple ideals are principal on algebras with <= 4 atoms checked=1 (5 algebras, 31 ideals)\n"
        "2/2 criteria passed\n");
}
