#include <fstream>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "zdext/suite.hpp"
#include "zdext/text.hpp"
#include "zdext/verify.hpp"

using namespace zdext;
using namespace testutil;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string strip_comments(const std::string& text) {
  std::istringstream in(text);
  std::string line, out;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    out += line + "\n";
  }
  return out;
}

int error_line(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("instance file examples") {
  const auto f = parse_instance(
      "# two punctures\n"
      "world punctures=[0(0), (1)]\n"
      "zlba Z blocks={{1,2}} filled={1}   # glued and filled\n"
      "zlba T blocks={{2},{1}} filled={1,2}\n"
      "extension E infinity={{2}} missing={1}\n"
      "map f pieces=[1->1, 00->0, 01->10]\n"
      "map c const=0(01)\n");
  REQUIRE(f.world);
  CHECK(*f.world == w2());
  CHECK(f.zlba("Z") == glued(w2(), true));
  CHECK(f.zlba("T") == Zlba::top(w2()));
  CHECK(f.extension("E").space.missing == 1u);
  CHECK(f.map("f").pieces.size() == 3);
  CHECK(f.map("c").constant == pt("0", "01"));
  CHECK(print_instance(f) ==
        "world punctures=[(0), (1)]\n"
        "zlba Z blocks={{1,2}} filled={1}\n"
        "zlba T blocks={{1},{2}} filled={1,2}\n"
        "extension E infinity={{2}} missing={1}\n"
        "map f pieces=[00->0, 01->10, 1->1]\n"
        "map c const=0(01)\n");
  CHECK(parse_point("01(10)") == pt("01", "10"));
  CHECK(format_world(w0()) == "world punctures=[]");
}

TEST_CASE("parse errors cite their line") {
  const std::string w = "world punctures=[(0), (1)]\n";
  CHECK(error_line(w + "zlba Z blocks={{1,2}} filled={1} colour=red\n") == 2);  // unknown key
  CHECK(error_line("\n# c\n" + w + "graph G\n") == 4);                         // unknown declaration
  CHECK(error_line("zlba Z blocks={{1}} filled={}\n" + w) == 1);               // before the world
  CHECK(error_line(w + "zlba Z blocks={{1,3}} filled={}\n") == 2);              // no puncture 3
  CHECK(error_line(w + "zlba Z blocks={{1}} filled={}\n") == 2);                // not a partition
  CHECK(error_line(w + "zlba Z blocks={{1},{2}} filled={3}\n") == 2);
  CHECK(error_line(w + "zlba Z blocks={{1},{2}} filled={}\nzlba Z blocks={{1,2}} filled={1}\n") == 3);
  CHECK(error_line(w + "extension E infinity={{1}} missing={}\n") == 2);      // puncture 2 unaccounted
  CHECK(error_line(w + "map f pieces=[0->1, 1->2]\n") == 2);
  CHECK(error_line(w + "map f pieces=[0->1] const=(0)\n") == 2);
  CHECK(error_line(w + "map f const=01\n") == 2);
  CHECK(error_line(w + "zlba Z blocks={{1},{2} filled={}\n") == 2);           // unbalanced
  CHECK(error_line("world punctures=[(0), (0)]\n") == 1);
  CHECK(error_line(w + w) == 2);
  // the partition check of the constructor surfaces as a parse error too
  CHECK_THROWS_AS(parse_instance(w + "zlba Z blocks={{1},{1,2}} filled={}\n"), ParseError);
}

TEST_CASE("zlba and extension lines round trip over every presentation") {
  for (const World& w : {w0(), w1(), w2(), w3()}) {
    const std::string head = format_world(w) + "\n";
    for (const Zlba& z : all_presentations(w)) {
      const auto f = parse_instance(head + format_zlba("Z", z) + "\n");
      CHECK(f.zlba("Z") == z);
    }
    for (const Zlba& z : partial_partitions(w)) {
      const Extension e = beta0(z);
      const auto f = parse_instance(head + format_extension("E", e) + "\n");
      CHECK(equivalent(f.extension("E"), e));
      CHECK(f.extension("E").structure == z);
    }
  }
}

TEST_CASE("bundled fixtures: canonical, idempotent, and equal to the suite") {
  const std::string dir = std::string(ZDEXT_SOURCE_DIR) + "/fixtures/";
  REQUIRE(bundled_fixtures().size() == 5);
  for (const auto& [name, text] : bundled_fixtures()) {
    INFO(name);
    CHECK(slurp(dir + name) == text);
    const std::string printed = print_instance(parse_instance(text));
    CHECK(printed == strip_comments(text));
    CHECK(print_instance(parse_instance(printed)) == printed);
  }
  const std::vector<std::pair<std::string, std::string>> worlds{
      {"m0.txt", "W0"}, {"m1.txt", "W1"}, {"m2.txt", "W2"}, {"m2b.txt", "W2b"}, {"m3.txt", "W3"}};
  std::size_t maps = 0;
  for (const auto& [file, wname] : worlds) {
    const auto f = read_instance(dir + file);
    CHECK(f.require_world() == suite_world(wname));
    CHECK_FALSE(f.zlbas.empty());
    for (const MapDecl& d : f.maps) {
      const SuiteMap& m = suite_map(d.name);
      CHECK(m.world1 == wname);
      CHECK(d.build(suite_world(m.world1), suite_world(m.world2)) == m.map);
      ++maps;
    }
  }
  CHECK(maps == map_suite().size());
}
