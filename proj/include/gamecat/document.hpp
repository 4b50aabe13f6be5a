#pragma once

#include <string>

#include "gamecat/morphism.hpp"

#include <json.hpp>

namespace gamecat {

// Game documents:
//   { "access": {player: [[o,p], ...]}, "auto_close": bool,
//     "format_version": "1", "outcomes": [...], "players": [...],
//     "prefs": {player: [[o,p], ...]} }
// With auto_close (the default) relations are completed on load; in
// strict mode the input must already satisfy every invariant.
// Serialization is canonical: UTF-8, sorted keys, sorted pairs, 2-space
// indent, so parse . serialize is the identity on canonical documents.

Game game_from_json(const nlohmann::json& doc);
nlohmann::json game_to_json(const Game& g);
std::string game_to_string(const Game& g);
Game load_game(const std::string& path);
void save_game(const Game& g, const std::string& path);

// Morphism documents:
//   { "outcome_map": {...}, "player_map": {...},
//     "source": <game doc or path>, "target": <game doc or path> }
// Path references are resolved relative to base_dir.
Morphism morphism_from_json(const nlohmann::json& doc,
                            const std::string& base_dir = ".");
nlohmann::json morphism_to_json(const Morphism& m);
std::string morphism_to_string(const Morphism& m);
Morphism load_morphism(const std::string& path);

// Strategic-form documents:
//   { "actions": {player: [labels]}, "payoffs": {profile: [values]},
//     "players": [...] }
// Profile keys join the action labels in player order; payoff values are
// integers or "n/d" strings.
StrategicGame strategic_from_json(const nlohmann::json& doc);
StrategicGame load_strategic(const std::string& path);

}  // namespace gamecat
