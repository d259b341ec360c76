#include "zdext/suite.hpp"

namespace zdext {

namespace {

Point pt(const char* pre, const char* per) { return Point(Word::from_string(pre), Word::from_string(per)); }
Word wd(const char* s) { return Word::from_string(s); }

}  // namespace

const std::vector<NamedWorld>& suite_worlds() {
  static const std::vector<NamedWorld> worlds{
      {"W0", World()},
      {"W1", World({pt("", "0")})},
      {"W2", World({pt("", "0"), pt("", "1")})},
      {"W2b", World({pt("", "0"), pt("1", "0")})},
      {"W3", World({pt("", "0"), pt("", "1"), pt("", "01")})},
  };
  return worlds;
}

const World& suite_world(const std::string& name) {
  for (const auto& w : suite_worlds()) {
    if (w.name == name) return w.world;
  }
  throw DomainError("no suite world " + name);
}

const std::vector<SuiteMap>& map_suite() {
  static const std::vector<SuiteMap> maps = [] {
    std::vector<SuiteMap> m;
    auto add = [&](std::string name, std::string a, std::string b, std::vector<Piece> pieces) {
      PresentedMap f(suite_world(a), suite_world(b), std::move(pieces));
      m.push_back({std::move(name), std::move(a), std::move(b), std::move(f)});
    };
    add("id0", "W0", "W0", {Piece::replace(wd(""), wd(""))});
    add("id1", "W1", "W1", {Piece::replace(wd(""), wd(""))});
    add("id2", "W2", "W2", {Piece::replace(wd(""), wd(""))});
    add("id3", "W3", "W3", {Piece::replace(wd(""), wd(""))});
    add("swap", "W2b", "W2b", {Piece::replace(wd("0"), wd("1")), Piece::replace(wd("1"), wd("0"))});
    add("const01", "W1", "W1", {Piece::constant(wd(""), pt("", "01"))});
    add("drop0", "W0", "W0", {Piece::replace(wd("0"), wd("")), Piece::replace(wd("1"), wd(""))});
    add("merge", "W2b", "W1", {Piece::replace(wd("0"), wd("")), Piece::replace(wd("1"), wd(""))});
    add("fold", "W2", "W1", {Piece::replace(wd("0"), wd("00")), Piece::replace(wd("1"), wd("01"))});
    add("halfconst", "W1", "W1", {Piece::constant(wd("0"), pt("", "01")), Piece::replace(wd("1"), wd("1"))});
    add("prepend0", "W1", "W1", {Piece::replace(wd(""), wd("0"))});
    add("into1", "W0", "W1", {Piece::replace(wd(""), wd("1"))});
    add("overlap", "W0", "W0", {Piece::replace(wd("0"), wd("0")), Piece::replace(wd("1"), wd("0"))});
    add("incl21", "W2", "W1", {Piece::replace(wd(""), wd(""))});
    return m;
  }();
  return maps;
}

const SuiteMap& suite_map(const std::string& name) {
  for (const auto& m : map_suite()) {
    if (m.name == name) return m;
  }
  throw DomainError("no suite map " + name);
}

const std::vector<RejectedMap>& rejected_maps() {
  static const std::vector<RejectedMap> maps{
      {"bad_id12", "W1", "W2", {Piece::replace(wd(""), wd(""))}},
      {"bad_swap2", "W2", "W2", {Piece::replace(wd("0"), wd("1")), Piece::replace(wd("1"), wd("0"))}},
  };
  return maps;
}

std::vector<std::pair<std::size_t, std::size_t>> composable_pairs() {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const auto& s = map_suite();
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (s[i].world2 == s[j].world1) out.emplace_back(i, j);
    }
  }
  return out;
}

}  // namespace zdext
