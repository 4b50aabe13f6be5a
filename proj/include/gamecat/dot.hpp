#pragma once

#include <string>

#include "gamecat/game.hpp"

namespace gamecat {

// Graphviz rendering: one node per outcome; per player, a solid
// undirected edge for each access pair (kept once, loops included) and a
// dashed directed edge for each non-reflexive preference pair. Players
// are distinguished by a fixed color cycle. Byte-stable per game.
std::string to_dot(const Game& g);

void export_dot(const Game& g, const std::string& path);

}  // namespace gamecat
