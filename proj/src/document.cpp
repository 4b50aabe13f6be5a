#include "gamecat/document.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gamecat/error.hpp"

namespace gamecat {

using nlohmann::json;

namespace {

json parse_text(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw gamecat::parse_error(origin + ": " + e.what());
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw gamecat::parse_error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str(), path);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw gamecat::error("cannot write '" + path + "'");
  out << text;
  if (!out) throw gamecat::error("write failed for '" + path + "'");
}

std::vector<std::string> string_list(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array())
    throw gamecat::parse_error(std::string("game document: missing array '") +
                               key + "'");
  std::vector<std::string> out;
  for (const auto& v : doc[key]) {
    if (!v.is_string())
      throw gamecat::parse_error(std::string("game document: '") + key +
                                 "' holds a non-string");
    out.push_back(v.get<std::string>());
  }
  return out;
}

Relation relation_from_json(const json& arr, const std::string& where) {
  if (!arr.is_array())
    throw gamecat::parse_error(where + ": relation is not an array");
  std::vector<Relation::Pair> pairs;
  for (const auto& p : arr) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() ||
        !p[1].is_string())
      throw gamecat::parse_error(where + ": pair is not [string, string]");
    pairs.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
  }
  return Relation(std::move(pairs));
}

std::map<std::string, Relation> relations_from_json(const json& doc,
                                                    const char* key) {
  std::map<std::string, Relation> out;
  if (!doc.contains(key)) return out;
  if (!doc[key].is_object())
    throw gamecat::parse_error(std::string("game document: '") + key +
                               "' is not an object");
  for (const auto& [player, arr] : doc[key].items())
    out[player] = relation_from_json(arr, std::string(key) + "[" + player + "]");
  return out;
}

std::map<std::string, std::string> string_map(const json& doc,
                                              const char* key) {
  if (!doc.contains(key) || !doc[key].is_object())
    throw gamecat::parse_error(std::string("morphism document: missing map '") +
                               key + "'");
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : doc[key].items()) {
    if (!v.is_string())
      throw gamecat::parse_error(std::string("morphism document: '") + key +
                                 "' holds a non-string");
    out[k] = v.get<std::string>();
  }
  return out;
}

}  // namespace

Game game_from_json(const json& doc) {
  if (!doc.is_object())
    throw gamecat::parse_error("game document: not an object");
  const bool auto_close =
      doc.contains("auto_close") ? doc["auto_close"].get<bool>() : true;

  Game g;
  g.players = string_list(doc, "players");
  g.outcomes = string_list(doc, "outcomes");
  auto access = relations_from_json(doc, "access");
  auto prefs = relations_from_json(doc, "prefs");

  if (auto_close) return make_game(g.players, g.outcomes, access, prefs, true);

  // Strict mode: relations must already satisfy every invariant.
  for (const auto& p : g.players) {
    g.access[p] = access.count(p) ? access.at(p) : Relation{};
    g.prefs[p] = prefs.count(p) ? prefs.at(p) : Relation{};
  }
  for (const auto& [p, _] : access)
    if (!g.access.count(p))
      throw validation_error("game document: relation for unknown player '" +
                             p + "'");
  for (const auto& [p, _] : prefs)
    if (!g.prefs.count(p))
      throw validation_error("game document: relation for unknown player '" +
                             p + "'");
  auto violations = validate_game(g);
  if (!violations.empty())
    throw validation_error("game document (strict): " +
                           violation_text(violations.front()));
  return g;
}

json game_to_json(const Game& g) {
  json doc;
  doc["format_version"] = "1";
  doc["auto_close"] = false;
  json players = json::array();
  {
    auto sorted = g.players;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& p : sorted) players.push_back(p);
  }
  json outcomes = json::array();
  {
    auto sorted = g.outcomes;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& o : sorted) outcomes.push_back(o);
  }
  doc["players"] = std::move(players);
  doc["outcomes"] = std::move(outcomes);
  json access = json::object(), prefs = json::object();
  for (const auto& [p, rel] : g.access) {
    json arr = json::array();
    for (const auto& [a, b] : rel) arr.push_back(json::array({a, b}));
    access[p] = std::move(arr);
  }
  for (const auto& [p, rel] : g.prefs) {
    json arr = json::array();
    for (const auto& [a, b] : rel) arr.push_back(json::array({a, b}));
    prefs[p] = std::move(arr);
  }
  doc["access"] = std::move(access);
  doc["prefs"] = std::move(prefs);
  return doc;
}

std::string game_to_string(const Game& g) { return game_to_json(g).dump(2) + "\n"; }

Game load_game(const std::string& path) {
  return game_from_json(read_file(path));
}

void save_game(const Game& g, const std::string& path) {
  write_file(path, game_to_string(g));
}

Morphism morphism_from_json(const json& doc, const std::string& base_dir) {
  if (!doc.is_object())
    throw gamecat::parse_error("morphism document: not an object");
  auto game_ref = [&](const char* key) -> Game {
    if (!doc.contains(key))
      throw gamecat::parse_error(
          std::string("morphism document: missing '") + key + "'");
    const json& ref = doc[key];
    if (ref.is_string()) {
      std::filesystem::path p(ref.get<std::string>());
      if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
      return load_game(p.string());
    }
    return game_from_json(ref);
  };

  Morphism m;
  m.source = game_ref("source");
  m.target = game_ref("target");
  m.player_map = string_map(doc, "player_map");
  m.outcome_map = string_map(doc, "outcome_map");
  return m;
}

json morphism_to_json(const Morphism& m) {
  json doc;
  doc["source"] = game_to_json(m.source);
  doc["target"] = game_to_json(m.target);
  doc["player_map"] = m.player_map;
  doc["outcome_map"] = m.outcome_map;
  return doc;
}

std::string morphism_to_string(const Morphism& m) {
  return morphism_to_json(m).dump(2) + "\n";
}

Morphism load_morphism(const std::string& path) {
  return morphism_from_json(
      read_file(path), std::filesystem::path(path).parent_path().string());
}

StrategicGame strategic_from_json(const json& doc) {
  if (!doc.is_object())
    throw gamecat::parse_error("strategic document: not an object");
  StrategicGame sg;
  sg.players = string_list(doc, "players");
  if (!doc.contains("actions") || !doc["actions"].is_object())
    throw gamecat::parse_error("strategic document: missing 'actions'");
  for (const auto& [p, arr] : doc["actions"].items()) {
    if (!arr.is_array())
      throw gamecat::parse_error("strategic document: actions[" + p +
                                 "] is not an array");
    std::vector<std::string> list;
    for (const auto& a : arr) list.push_back(a.get<std::string>());
    sg.actions[p] = std::move(list);
  }
  if (!doc.contains("payoffs") || !doc["payoffs"].is_object())
    throw gamecat::parse_error("strategic document: missing 'payoffs'");

  // Payoff keys are profile labels; recover the action tuple by walking
  // the action lists in player order.
  std::vector<std::vector<std::string>> profiles{{}};
  for (const auto& p : sg.players) {
    if (!sg.actions.count(p))
      throw validation_error("strategic document: no actions for player '" +
                             p + "'");
    std::vector<std::vector<std::string>> next;
    for (const auto& prefix : profiles)
      for (const auto& a : sg.actions.at(p)) {
        auto row = prefix;
        row.push_back(a);
        next.push_back(std::move(row));
      }
    profiles = std::move(next);
  }
  std::map<std::string, std::vector<std::string>> by_label;
  for (const auto& prof : profiles) {
    std::string label;
    for (const auto& a : prof) label += a;
    by_label[label] = prof;
  }
  for (const auto& [label, values] : doc["payoffs"].items()) {
    auto it = by_label.find(label);
    if (it == by_label.end())
      throw validation_error("strategic document: unknown profile '" + label +
                             "'");
    if (!values.is_array())
      throw gamecat::parse_error("strategic document: payoffs['" + label +
                                 "'] is not an array");
    std::vector<Rational> row;
    for (const auto& v : values) {
      if (v.is_number_integer())
        row.emplace_back(v.get<std::int64_t>());
      else if (v.is_string())
        row.push_back(parse_rational(v.get<std::string>()));
      else
        throw gamecat::parse_error("strategic document: payoff entries must "
                                   "be integers or 'n/d' strings");
    }
    sg.payoffs[it->second] = std::move(row);
  }
  return sg;
}

StrategicGame load_strategic(const std::string& path) {
  return strategic_from_json(read_file(path));
}

}  // namespace gamecat
