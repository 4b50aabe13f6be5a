#include "gamecat/dot.hpp"

#include <fstream>

#include "gamecat/error.hpp"

namespace gamecat {

namespace {

const char* kColors[] = {"blue",   "red",    "green3", "orange",
                         "purple", "brown",  "cyan3",  "magenta"};

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const Game& g) {
  std::string out = "digraph game {\n  node [shape=ellipse];\n";
  for (const auto& o : g.outcomes) out += "  " + quoted(o) + ";\n";
  for (std::size_t pi = 0; pi < g.players.size(); ++pi) {
    const auto& p = g.players[pi];
    const std::string color =
        kColors[pi % (sizeof(kColors) / sizeof(kColors[0]))];
    out += "  // player " + p + "\n";
    for (const auto& [a, b] : g.access.at(p)) {
      if (a > b) continue;  // undirected: keep each pair once, loops too
      out += "  " + quoted(a) + " -> " + quoted(b) + " [dir=none, color=" +
             color + "];\n";
    }
    for (const auto& [a, b] : g.prefs.at(p)) {
      if (a == b) continue;
      out += "  " + quoted(a) + " -> " + quoted(b) + " [style=dashed, color=" +
             color + "];\n";
    }
  }
  out += "}\n";
  return out;
}

void export_dot(const Game& g, const std::string& path) {
  const std::string text = to_dot(g);
  std::ofstream file(path, std::ios::trunc);
  if (!file) throw error("cannot write '" + path + "'");
  file << text;
  if (!file) throw error("write failed for '" + path + "'");
}

}  // namespace gamecat
