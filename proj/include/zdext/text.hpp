#pragma once

// Line-oriented instance files: one `world` line, then named `zlba`,
// `extension` and `map` declarations. `#` starts a comment.
//
//   world punctures=[(0), (1)]
//   zlba Z blocks={{1,2}} filled={1}
//   extension E infinity={{1,2}} missing={}
//   map f pieces=[0->1, 1->const:(01)]
//   map c const=0(01)

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zdext/extensions.hpp"
#include "zdext/maps.hpp"

namespace zdext {

/// A map as written: pieces, or a single constant. Worlds are supplied at build time.
struct MapDecl {
  std::string name;
  std::vector<Piece> pieces;
  std::optional<Point> constant;
  int line = 0;

  PresentedMap build(const World& domain, const World& codomain) const;
};

struct InstanceFile {
  std::optional<World> world;
  std::vector<std::pair<std::string, Zlba>> zlbas;
  std::vector<std::pair<std::string, Extension>> extensions;
  std::vector<MapDecl> maps;

  /// Lookup by name; an empty name picks the only declaration of its kind.
  const Zlba& zlba(const std::string& name) const;
  const Extension& extension(const std::string& name) const;
  const MapDecl& map(const std::string& name) const;
  const World& require_world() const;
};

/// Throws ParseError with the 1-based line number.
InstanceFile parse_instance(std::string_view text);
InstanceFile read_instance(const std::string& path);
/// Canonical form: world, zlbas, extensions, maps, each in declaration order.
std::string print_instance(const InstanceFile& f);

Point parse_point(std::string_view s);
World parse_world_line(std::string_view line);

std::string format_world(const World& w);
std::string format_zlba(const std::string& name, const Zlba& z);
std::string format_extension(const std::string& name, const Extension& e);
std::string format_map(const std::string& name, const PresentedMap& f);

}  // namespace zdext
