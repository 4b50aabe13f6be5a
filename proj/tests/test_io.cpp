#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gamecat/document.hpp"
#include "gamecat/dot.hpp"
#include "gamecat/error.hpp"
#include "gamecat/fixtures.hpp"
#include "gamecat/game.hpp"

using namespace gamecat;
using nlohmann::json;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("gamecat_io_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name) const {
    return (path / name).string();
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("game documents round trip") {
  TempDir dir;
  Game pd = fixtures::prisoners_dilemma();
  save_game(pd, dir.file("pd.json"));
  Game loaded = load_game(dir.file("pd.json"));
  CHECK(loaded == pd);

  // Serialization is canonical: parse . serialize is the identity.
  const std::string once = game_to_string(pd);
  CHECK(game_to_string(game_from_json(json::parse(once))) == once);
}

TEST_CASE("auto_close completes relations, strict mode rejects them") {
  json doc;
  doc["players"] = {"1"};
  doc["outcomes"] = {"a", "b"};
  doc["access"] = {{"1", json::array({json::array({"a", "b"})})}};
  doc["prefs"] = {{"1", json::array()}};

  SUBCASE("default closes") {
    Game g = game_from_json(doc);
    CHECK(g.access.at("1").contains("b", "a"));
    CHECK(g.prefs.at("1").contains("a", "a"));
    CHECK(validate_game(g).empty());
  }
  SUBCASE("strict rejects the asymmetric pair") {
    doc["auto_close"] = false;
    CHECK_THROWS_AS(game_from_json(doc), validation_error);
  }
}

TEST_CASE("parse errors carry position information") {
  TempDir dir;
  std::ofstream(dir.file("bad.json")) << "{ not json";
  try {
    load_game(dir.file("bad.json"));
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(std::string(e.what()).find("parse error") != std::string::npos);
  }
  CHECK_THROWS_AS(load_game(dir.file("missing.json")), parse_error);
}

TEST_CASE("a hand-written merged-game document matches the identification") {
  // The three-outcome game drawn with raw figure pairs; closure fills in
  // loops, symmetry, and the transitive preference pairs.
  json doc;
  doc["players"] = {"1", "2"};
  doc["outcomes"] = {"DL", "TR", "o"};
  doc["access"] = {
      {"1", json::array({json::array({"DL", "o"}), json::array({"o", "TR"})})},
      {"2", json::array({json::array({"DL", "o"}), json::array({"o", "TR"})})}};
  doc["prefs"] = {
      {"1", json::array({json::array({"o", "DL"}), json::array({"TR", "o"})})},
      {"2", json::array({json::array({"DL", "o"}), json::array({"o", "TR"})})}};

  CHECK(game_from_json(doc) == fixtures::equal_payoff_merged());
}

TEST_CASE("morphism documents support inline games and path references") {
  TempDir dir;
  Morphism g = fixtures::pd_quotient_morphism();

  SUBCASE("inline") {
    std::ofstream(dir.file("m.json")) << morphism_to_string(g);
    Morphism loaded = load_morphism(dir.file("m.json"));
    CHECK(loaded == g);
    CHECK(check_morphism(loaded).empty());
  }
  SUBCASE("by path, resolved relative to the document") {
    save_game(g.source, dir.file("src.json"));
    save_game(g.target, dir.file("tgt.json"));
    json doc;
    doc["source"] = "src.json";
    doc["target"] = "tgt.json";
    doc["player_map"] = g.player_map;
    doc["outcome_map"] = g.outcome_map;
    std::ofstream(dir.file("m.json")) << doc.dump(2);
    Morphism loaded = load_morphism(dir.file("m.json"));
    CHECK(loaded == g);
  }
}

TEST_CASE("strategic documents") {
  json doc;
  doc["players"] = {"1", "2"};
  doc["actions"] = {{"1", {"C", "D"}}, {"2", {"C", "D"}}};
  doc["payoffs"] = {{"CC", {-1, -1}},
                    {"CD", {-3, 0}},
                    {"DC", {0, -3}},
                    {"DD", {-2, -2}}};
  StrategicGame sg = strategic_from_json(doc);
  CHECK(from_strategic(sg) == fixtures::prisoners_dilemma());

  SUBCASE("rational strings are accepted") {
    doc["payoffs"]["CC"] = {"-1/2", "-1/2"};
    StrategicGame sg2 = strategic_from_json(doc);
    CHECK(sg2.payoffs.at({"C", "C"}).front() == Rational(-1, 2));
  }
  SUBCASE("unknown profile keys are rejected") {
    doc["payoffs"]["XX"] = {0, 0};
    CHECK_THROWS_AS(strategic_from_json(doc), validation_error);
  }
  SUBCASE("payoff entries must be numbers or fractions") {
    doc["payoffs"]["CC"] = {true, false};
    CHECK_THROWS_AS(strategic_from_json(doc), parse_error);
  }
}

TEST_CASE("dot export of the dilemma has the expected shape") {
  const std::string dot = to_dot(fixtures::prisoners_dilemma());
  CHECK(dot == to_dot(fixtures::prisoners_dilemma()));  // byte-stable

  std::size_t nodes = 0, solid = 0, loops = 0, dashed = 0;
  std::istringstream lines(dot);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.find("\";") != std::string::npos && line.find("->") == std::string::npos)
      ++nodes;
    if (line.find("dir=none") != std::string::npos) {
      ++solid;
      const auto arrow = line.find("->");
      const std::string lhs = line.substr(0, arrow);
      const std::string rhs = line.substr(arrow);
      // A loop repeats the node name on both sides.
      std::string name = lhs.substr(lhs.find('"'));
      if (rhs.find(name) != std::string::npos) ++loops;
    }
    if (line.find("style=dashed") != std::string::npos) ++dashed;
  }
  CHECK(nodes == 4);
  CHECK(solid == 12);   // 4 loops per player + 2 moves per player
  CHECK(loops == 8);
  CHECK(dashed == 12);  // both total orders: 6 non-reflexive pairs each
}

TEST_CASE("dot export of the empty game is just the frame") {
  CHECK(to_dot(initial()) == "digraph game {\n  node [shape=ellipse];\n}\n");
}

TEST_CASE("dot golden file for the merged coordination game") {
  TempDir dir;
  export_dot(fixtures::battle_of_sexes_merged(), dir.file("bos.dot"));
  const std::string expected =
      "digraph game {\n"
      "  node [shape=ellipse];\n"
      "  \"AC\";\n"
      "  \"BD\";\n"
      "  \"o\";\n"
      "  // player 1\n"
      "  \"AC\" -> \"AC\" [dir=none, color=blue];\n"
      "  \"AC\" -> \"o\" [dir=none, color=blue];\n"
      "  \"BD\" -> \"BD\" [dir=none, color=blue];\n"
      "  \"BD\" -> \"o\" [dir=none, color=blue];\n"
      "  \"o\" -> \"o\" [dir=none, color=blue];\n"
      "  \"BD\" -> \"AC\" [style=dashed, color=blue];\n"
      "  \"o\" -> \"AC\" [style=dashed, color=blue];\n"
      "  \"o\" -> \"BD\" [style=dashed, color=blue];\n"
      "  // player 2\n"
      "  \"AC\" -> \"AC\" [dir=none, color=red];\n"
      "  \"AC\" -> \"o\" [dir=none, color=red];\n"
      "  \"BD\" -> \"BD\" [dir=none, color=red];\n"
      "  \"BD\" -> \"o\" [dir=none, color=red];\n"
      "  \"o\" -> \"o\" [dir=none, color=red];\n"
      "  \"AC\" -> \"BD\" [style=dashed, color=red];\n"
      "  \"o\" -> \"AC\" [style=dashed, color=red];\n"
      "  \"o\" -> \"BD\" [style=dashed, color=red];\n"
      "}\n";
  CHECK(slurp(dir.file("bos.dot")) == expected);
}
