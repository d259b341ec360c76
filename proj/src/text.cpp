#include "zdext/text.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace zdext {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

/// Splits at whitespace outside brackets and braces.
std::vector<std::string_view> fields(std::string_view s) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = std::string_view::npos;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    const char c = i < s.size() ? s[i] : ' ';
    if (c == '[' || c == '{' || c == '(') ++depth;
    if (c == ']' || c == '}' || c == ')') --depth;
    if (depth < 0) throw ParseError("unbalanced bracket");
    const bool space = std::isspace(static_cast<unsigned char>(c)) && depth == 0;
    if (!space && start == std::string_view::npos) start = i;
    if (space && start != std::string_view::npos) {
      out.push_back(s.substr(start, i - start));
      start = std::string_view::npos;
    }
  }
  if (depth != 0) throw ParseError("unbalanced bracket");
  return out;
}

/// Items of "{a, b}" or "[a, b]" split at top-level commas.
std::vector<std::string_view> list_items(std::string_view s, char open, char close) {
  s = trim(s);
  if (s.size() < 2 || s.front() != open || s.back() != close) {
    throw ParseError(std::string("expected ") + open + "..." + close + ", got '" + std::string(s) + "'");
  }
  s = s.substr(1, s.size() - 2);
  std::vector<std::string_view> out;
  if (trim(s).empty()) return out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    const char c = i < s.size() ? s[i] : ',';
    if (c == '[' || c == '{' || c == '(') ++depth;
    if (c == ']' || c == '}' || c == ')') --depth;
    if (c == ',' && depth == 0) {
      const auto item = trim(s.substr(start, i - start));
      if (item.empty()) throw ParseError("empty list item");
      out.push_back(item);
      start = i + 1;
    }
  }
  return out;
}

int parse_index(std::string_view s) {
  s = trim(s);
  if (s.empty() || s.size() > 3 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError("expected a positive index, got '" + std::string(s) + "'");
  }
  const int v = std::stoi(std::string(s));
  if (v < 1) throw ParseError("indices start at 1");
  return v;
}

PunctureSet parse_puncture_set(std::string_view s, int m) {
  PunctureSet out = 0;
  for (auto item : list_items(s, '{', '}')) {
    const int i = parse_index(item);
    if (i > m) throw ParseError("puncture " + std::to_string(i) + " not in the world (m=" + std::to_string(m) + ")");
    const PunctureSet bit = PunctureSet{1} << (i - 1);
    if (out & bit) throw ParseError("puncture " + std::to_string(i) + " listed twice");
    out |= bit;
  }
  return out;
}

Piece parse_piece(std::string_view s) {
  const auto arrow = s.find("->");
  if (arrow == std::string_view::npos) throw ParseError("piece '" + std::string(s) + "' lacks '->'");
  const Word dom = Word::from_string(trim(s.substr(0, arrow)));
  const auto rhs = trim(s.substr(arrow + 2));
  if (rhs.substr(0, 6) == "const:") return Piece::constant(dom, parse_point(rhs.substr(6)));
  return Piece::replace(dom, Word::from_string(rhs));
}

std::string piece_text(const Piece& p) {
  return p.domain.to_string() + "->" + (p.is_const ? "const:" + p.value.to_string() : p.target.to_string());
}

bool is_name(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
           return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
         });
}

/// key=value fields after the keyword (and name); every key must be allowed, none repeated.
std::map<std::string, std::string_view> keyed(const std::vector<std::string_view>& fs, std::size_t from,
                                              const std::vector<std::string>& allowed) {
  std::map<std::string, std::string_view> out;
  for (std::size_t i = from; i < fs.size(); ++i) {
    const auto eq = fs[i].find('=');
    if (eq == std::string_view::npos) throw ParseError("expected key=value, got '" + std::string(fs[i]) + "'");
    std::string key(fs[i].substr(0, eq));
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) throw ParseError("unknown key '" + key + "'");
    if (out.count(key)) throw ParseError("key '" + key + "' repeated");
    out[key] = fs[i].substr(eq + 1);
  }
  return out;
}

std::string_view need(const std::map<std::string, std::string_view>& kv, const std::string& key) {
  const auto it = kv.find(key);
  if (it == kv.end()) throw ParseError("missing key '" + key + "'");
  return it->second;
}

template <class T>
const T& pick(const std::vector<std::pair<std::string, T>>& xs, const std::string& name, const char* kind) {
  if (name.empty()) {
    if (xs.size() == 1) return xs[0].second;
    throw DomainError(std::string("name a ") + kind + ": the file declares " + std::to_string(xs.size()));
  }
  for (const auto& [n, x] : xs) {
    if (n == name) return x;
  }
  throw DomainError(std::string("no ") + kind + " named " + name);
}

}  // namespace

Point parse_point(std::string_view s) {
  s = trim(s);
  const auto open = s.find('(');
  if (open == std::string_view::npos || s.back() != ')') {
    throw ParseError("point '" + std::string(s) + "' must look like pre(period)");
  }
  const auto pre = s.substr(0, open);
  const auto per = s.substr(open + 1, s.size() - open - 2);
  if (per.empty() || per == "e") throw ParseError("empty period in '" + std::string(s) + "'");
  return Point(pre.empty() ? Word{} : Word::from_string(pre), Word::from_string(per));
}

World parse_world_line(std::string_view line) {
  const auto fs = fields(trim(line));
  if (fs.empty() || fs[0] != "world") throw ParseError("expected a world line");
  const auto kv = keyed(fs, 1, {"punctures"});
  std::vector<Point> ps;
  for (auto item : list_items(need(kv, "punctures"), '[', ']')) {
    const Point p = parse_point(item);
    if (std::find(ps.begin(), ps.end(), p) != ps.end()) throw ParseError("puncture " + p.to_string() + " repeated");
    ps.push_back(p);
  }
  return World(std::move(ps));
}

PresentedMap MapDecl::build(const World& domain, const World& codomain) const {
  try {
    if (constant) return PresentedMap::constant(domain, codomain, *constant);
    return PresentedMap(domain, codomain, pieces);
  } catch (const DomainError& e) {
    throw DomainError("map " + name + ": " + e.what());
  }
}

const Zlba& InstanceFile::zlba(const std::string& name) const { return pick(zlbas, name, "zlba"); }
const Extension& InstanceFile::extension(const std::string& name) const { return pick(extensions, name, "extension"); }

const MapDecl& InstanceFile::map(const std::string& name) const {
  for (const auto& m : maps) {
    if (m.name == name || (name.empty() && maps.size() == 1)) return m;
  }
  throw DomainError(name.empty() ? "name a map" : "no map named " + name);
}

const World& InstanceFile::require_world() const {
  if (!world) throw DomainError("the file has no world line");
  return *world;
}

InstanceFile parse_instance(std::string_view text) {
  InstanceFile f;
  std::vector<std::string> names;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    try {
      const auto fs = fields(line);
      const auto kw = fs[0];
      if (kw == "world") {
        if (f.world) throw ParseError("second world line");
        if (!f.zlbas.empty() || !f.extensions.empty()) throw ParseError("the world line must come first");
        f.world = parse_world_line(line);
        continue;
      }
      if (kw != "zlba" && kw != "extension" && kw != "map") throw ParseError("unknown declaration '" + std::string(kw) + "'");
      if (fs.size() < 2 || !is_name(fs[1]) || fs[1].find('=') != std::string_view::npos) {
        throw ParseError(std::string(kw) + " needs a name");
      }
      const std::string name(fs[1]);
      if (std::find(names.begin(), names.end(), name) != names.end()) throw ParseError("name '" + name + "' already used");
      names.push_back(name);

      if (kw == "map") {
        const auto kv = keyed(fs, 2, {"pieces", "const"});
        MapDecl d{name, {}, std::nullopt, lineno};
        if (kv.count("pieces") == kv.count("const")) throw ParseError("a map takes exactly one of pieces= and const=");
        if (kv.count("const")) {
          d.constant = parse_point(kv.at("const"));
        } else {
          for (auto item : list_items(kv.at("pieces"), '[', ']')) d.pieces.push_back(parse_piece(item));
          if (d.pieces.empty()) throw ParseError("empty piece list");
          std::sort(d.pieces.begin(), d.pieces.end(), [](const Piece& a, const Piece& b) { return a.domain < b.domain; });
        }
        f.maps.push_back(std::move(d));
        continue;
      }

      if (!f.world) throw ParseError(std::string(kw) + " before the world line");
      const int m = f.world->size();
      if (kw == "zlba") {
        const auto kv = keyed(fs, 2, {"blocks", "filled"});
        std::vector<PunctureSet> blocks;
        for (auto item : list_items(need(kv, "blocks"), '{', '}')) {
          const PunctureSet b = parse_puncture_set(item, m);
          if (b == 0) throw ParseError("empty block");
          blocks.push_back(b);
        }
        std::vector<bool> filled(blocks.size(), false);
        for (auto item : list_items(need(kv, "filled"), '{', '}')) {
          const int id = parse_index(item);
          if (id > static_cast<int>(blocks.size())) throw ParseError("filled block " + std::to_string(id) + " does not exist");
          if (filled[id - 1]) throw ParseError("filled block " + std::to_string(id) + " listed twice");
          filled[id - 1] = true;
        }
        try {
          f.zlbas.emplace_back(name, Zlba(*f.world, blocks, filled));
        } catch (const DomainError& e) {
          throw ParseError(e.what());
        }
      } else {
        const auto kv = keyed(fs, 2, {"infinity", "missing"});
        DualSpace y{*f.world, {}, parse_puncture_set(need(kv, "missing"), m)};
        PunctureSet seen = y.missing;
        for (auto item : list_items(need(kv, "infinity"), '{', '}')) {
          const PunctureSet b = parse_puncture_set(item, m);
          if (b == 0) throw ParseError("empty remainder block");
          if (seen & b) throw ParseError("puncture in two places");
          seen |= b;
          y.infinity_blocks.push_back(b);
        }
        if (seen != f.world->all()) throw ParseError("every puncture must be restored or missing");
        try {
          f.extensions.emplace_back(name, beta0(theta_t(y)));
        } catch (const DomainError& e) {
          throw ParseError(e.what());
        }
      }
    } catch (const ParseError& e) {
      if (e.line() > 0) throw;
      throw ParseError(e.what(), lineno);
    } catch (const CapacityError& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  return f;
}

InstanceFile read_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_instance(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string format_world(const World& w) {
  std::string s = "world punctures=[";
  for (int i = 0; i < w.size(); ++i) s += (i ? ", " : "") + w.puncture(i).to_string();
  return s + "]";
}

std::string format_zlba(const std::string& name, const Zlba& z) {
  std::string s = "zlba " + name + " blocks={";
  for (int b = 0; b < z.block_count(); ++b) s += (b ? "," : "") + puncture_set_to_string(z.blocks()[b]);
  s += "} filled={";
  bool first = true;
  for (int b = 0; b < z.block_count(); ++b) {
    if (!z.filled()[b]) continue;
    s += (first ? "" : ",") + std::to_string(b + 1);
    first = false;
  }
  return s + "}";
}

std::string format_extension(const std::string& name, const Extension& e) {
  return "extension " + name + " " + e.describe();
}

std::string format_map(const std::string& name, const PresentedMap& f) { return "map " + name + " " + f.to_string(); }

std::string print_instance(const InstanceFile& f) {
  std::string s;
  if (f.world) s += format_world(*f.world) + "\n";
  for (const auto& [n, z] : f.zlbas) s += format_zlba(n, z) + "\n";
  for (const auto& [n, e] : f.extensions) s += format_extension(n, e) + "\n";
  for (const auto& d : f.maps) {
    s += "map " + d.name + " ";
    if (d.constant) {
      s += "const=" + d.constant->to_string();
    } else {
      s += "pieces=[";
      for (std::size_t i = 0; i < d.pieces.size(); ++i) s += (i ? ", " : "") + piece_text(d.pieces[i]);
      s += "]";
    }
    s += "\n";
  }
  return s;
}

}  // namespace zdext
