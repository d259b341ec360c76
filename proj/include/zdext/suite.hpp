#pragma once

// The bundled worlds and presented maps the verification runs sweep over.

#include <string>
#include <vector>

#include "zdext/maps.hpp"

namespace zdext {

struct NamedWorld {
  std::string name;
  World world;
};

struct SuiteMap {
  std::string name;
  std::string world1;
  std::string world2;
  PresentedMap map;
};

/// A map that must be refused at construction (a point of X1 hits a puncture).
struct RejectedMap {
  std::string name;
  std::string world1;
  std::string world2;
  std::vector<Piece> pieces;
};

const std::vector<NamedWorld>& suite_worlds();
const World& suite_world(const std::string& name);
const std::vector<SuiteMap>& map_suite();
const SuiteMap& suite_map(const std::string& name);
const std::vector<RejectedMap>& rejected_maps();

/// Pairs (f, h) with h after f defined, by suite index.
std::vector<std::pair<std::size_t, std::size_t>> composable_pairs();

}  // namespace zdext
