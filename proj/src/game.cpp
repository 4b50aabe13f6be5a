#include "gamecat/game.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "gamecat/error.hpp"

namespace gamecat {

bool Game::has_player(const std::string& id) const {
  return std::find(players.begin(), players.end(), id) != players.end();
}

bool Game::has_outcome(const std::string& id) const {
  return std::find(outcomes.begin(), outcomes.end(), id) != outcomes.end();
}

std::string violation_text(const Violation& v) {
  std::string out = v.kind;
  if (!v.player.empty()) out += " player=" + v.player;
  if (!v.detail.empty()) out += " " + v.detail;
  return out;
}

namespace {

std::string pair_text(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

void check_duplicates(const std::vector<std::string>& ids,
                      const std::string& kind, std::vector<Violation>& out) {
  std::unordered_set<std::string> seen;
  for (const auto& id : ids)
    if (!seen.insert(id).second) out.push_back({kind, "", id});
}

}  // namespace

std::vector<Violation> validate_game(const Game& g) {
  std::vector<Violation> out;
  check_duplicates(g.players, "duplicate-player", out);
  check_duplicates(g.outcomes, "duplicate-outcome", out);

  std::unordered_set<std::string> outcome_set(g.outcomes.begin(),
                                              g.outcomes.end());
  std::unordered_set<std::string> player_set(g.players.begin(),
                                             g.players.end());

  for (const auto* rels : {&g.access, &g.prefs}) {
    const bool is_access = rels == &g.access;
    const std::string which = is_access ? "access" : "prefs";
    for (const auto& [p, _] : *rels)
      if (!player_set.count(p))
        out.push_back({"player-keys", p, "extra key in " + which});
    for (const auto& p : g.players)
      if (!rels->count(p))
        out.push_back({"player-keys", p, "missing key in " + which});
  }

  for (const auto& p : g.players) {
    auto ait = g.access.find(p);
    auto pit = g.prefs.find(p);
    if (ait == g.access.end() || pit == g.prefs.end()) continue;
    const Relation& acc = ait->second;
    const Relation& pref = pit->second;

    bool ids_ok = true;
    for (const auto* rel : {&acc, &pref})
      for (const auto& [a, b] : *rel)
        for (const auto* id : {&a, &b})
          if (!outcome_set.count(*id)) {
            out.push_back({"unknown-outcome", p, *id});
            ids_ok = false;
          }
    if (!ids_ok) continue;

    for (const auto& o : g.outcomes) {
      if (!acc.contains(o, o))
        out.push_back({"access-reflexive", p, pair_text(o, o)});
      if (!pref.contains(o, o))
        out.push_back({"pref-reflexive", p, pair_text(o, o)});
    }
    for (const auto& [a, b] : acc)
      if (!acc.contains(b, a))
        out.push_back({"access-symmetric", p, pair_text(a, b)});

    // One violation per missing transitive pair, not per witnessing triple.
    std::set<Relation::Pair> missing;
    for (const auto& [a, b] : pref)
      for (const auto& [c, d] : pref)
        if (b == c && !pref.contains(a, d)) missing.insert({a, d});
    for (const auto& [a, d] : missing)
      out.push_back({"pref-transitive", p, pair_text(a, d)});
  }
  return out;
}

Game make_game(std::vector<std::string> players,
               std::vector<std::string> outcomes,
               std::map<std::string, Relation> access,
               std::map<std::string, Relation> prefs, bool auto_close) {
  Game g;
  g.players = std::move(players);
  g.outcomes = std::move(outcomes);
  for (const auto& p : g.players) {
    Relation acc = access.count(p) ? access.at(p) : Relation{};
    Relation prf = prefs.count(p) ? prefs.at(p) : Relation{};
    if (auto_close) {
      g.access[p] = closure_access(acc, g.outcomes);
      g.prefs[p] = closure_pref(prf, g.outcomes);
    } else {
      g.access[p] = std::move(acc);
      g.prefs[p] = std::move(prf);
    }
  }
  for (const auto& [p, _] : access)
    if (!g.access.count(p))
      throw validation_error("make_game: relation for unknown player '" + p +
                             "'");
  for (const auto& [p, _] : prefs)
    if (!g.prefs.count(p))
      throw validation_error("make_game: relation for unknown player '" + p +
                             "'");
  auto violations = validate_game(g);
  if (!violations.empty())
    throw validation_error("make_game: " + violation_text(violations.front()) +
                           (violations.size() > 1
                                ? " (+" + std::to_string(violations.size() - 1) +
                                      " more)"
                                : ""));
  return g;
}

std::vector<Violation> validate_strategic(const StrategicGame& sg) {
  std::vector<Violation> out;
  check_duplicates(sg.players, "duplicate-player", out);
  for (const auto& [p, _] : sg.actions)
    if (std::find(sg.players.begin(), sg.players.end(), p) == sg.players.end())
      out.push_back({"player-keys", p, "extra key in actions"});
  for (const auto& p : sg.players) {
    if (!sg.actions.count(p)) {
      out.push_back({"player-keys", p, "missing key in actions"});
      continue;
    }
    check_duplicates(sg.actions.at(p), "duplicate-action", out);
  }
  if (!out.empty()) return out;

  // Totality: exactly one payoff vector per profile, of the right arity.
  std::vector<std::vector<std::string>> profiles{{}};
  for (const auto& p : sg.players) {
    std::vector<std::vector<std::string>> next;
    for (const auto& prefix : profiles)
      for (const auto& a : sg.actions.at(p)) {
        auto row = prefix;
        row.push_back(a);
        next.push_back(std::move(row));
      }
    profiles = std::move(next);
  }
  for (const auto& prof : profiles) {
    auto it = sg.payoffs.find(prof);
    std::string label;
    for (const auto& a : prof) label += a;
    if (it == sg.payoffs.end())
      out.push_back({"payoff-missing", "", label});
    else if (it->second.size() != sg.players.size())
      out.push_back({"payoff-arity", "", label});
  }
  for (const auto& [prof, _] : sg.payoffs)
    if (std::find(profiles.begin(), profiles.end(), prof) == profiles.end()) {
      std::string label;
      for (const auto& a : prof) label += a;
      out.push_back({"payoff-unknown-profile", "", label});
    }

  // Profile labels double as outcome identifiers, so they must be unique.
  std::vector<std::string> labels;
  for (const auto& prof : profiles) {
    std::string label;
    for (const auto& a : prof) label += a;
    labels.push_back(label);
  }
  check_duplicates(labels, "profile-label-collision", out);
  return out;
}

Game from_strategic(const StrategicGame& sg) {
  auto violations = validate_strategic(sg);
  if (!violations.empty())
    throw validation_error("from_strategic: " +
                           violation_text(violations.front()));

  std::vector<std::vector<std::string>> profiles{{}};
  for (const auto& p : sg.players) {
    std::vector<std::vector<std::string>> next;
    for (const auto& prefix : profiles)
      for (const auto& a : sg.actions.at(p)) {
        auto row = prefix;
        row.push_back(a);
        next.push_back(std::move(row));
      }
    profiles = std::move(next);
  }

  Game g;
  g.players = sg.players;
  for (const auto& prof : profiles) {
    std::string label;
    for (const auto& a : prof) label += a;
    g.outcomes.push_back(label);
  }

  const std::size_t n = profiles.size();
  for (std::size_t pi = 0; pi < sg.players.size(); ++pi) {
    std::vector<Relation::Pair> acc, prf;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        bool unilateral = true;
        for (std::size_t k = 0; k < sg.players.size(); ++k)
          if (k != pi && profiles[i][k] != profiles[j][k]) unilateral = false;
        if (unilateral) acc.emplace_back(g.outcomes[i], g.outcomes[j]);
        const auto& vi = sg.payoffs.at(profiles[i]);
        const auto& vj = sg.payoffs.at(profiles[j]);
        if (vi[pi] <= vj[pi]) prf.emplace_back(g.outcomes[i], g.outcomes[j]);
      }
    }
    g.access[sg.players[pi]] = Relation(std::move(acc));
    g.prefs[sg.players[pi]] = Relation(std::move(prf));
  }
  return g;
}

Game identify_outcomes(const Game& g, const std::vector<OutcomeClass>& classes) {
  std::unordered_map<std::string, std::string> rep;
  std::vector<std::string> labels;
  for (const auto& cls : classes) {
    if (cls.members.empty())
      throw validation_error("identify_outcomes: empty class");
    std::string label = cls.label;
    if (label.empty())
      label = *std::min_element(cls.members.begin(), cls.members.end());
    labels.push_back(label);
    for (const auto& m : cls.members) {
      if (!g.has_outcome(m))
        throw validation_error("identify_outcomes: unknown outcome '" + m +
                               "'");
      if (!rep.emplace(m, label).second)
        throw validation_error("identify_outcomes: outcome '" + m +
                               "' in two classes");
    }
  }
  if (rep.size() != g.outcomes.size())
    throw validation_error("identify_outcomes: classes do not cover outcomes");
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
    throw validation_error("identify_outcomes: duplicate class label");

  Game out;
  out.players = g.players;
  out.outcomes = labels;
  for (const auto& p : g.players) {
    std::vector<Relation::Pair> acc, prf;
    for (const auto& [a, b] : g.access.at(p))
      acc.emplace_back(rep.at(a), rep.at(b));
    for (const auto& [a, b] : g.prefs.at(p))
      prf.emplace_back(rep.at(a), rep.at(b));
    // Access is conflated, never transitively closed; preferences must
    // stay a preorder, so they are.
    out.access[p] = closure_access(Relation(std::move(acc)), out.outcomes);
    out.prefs[p] = closure_pref(Relation(std::move(prf)), out.outcomes);
  }
  return out;
}

Game make_player_game(std::vector<std::string> players) {
  Game g;
  g.players = std::move(players);
  for (const auto& p : g.players) {
    g.access[p] = Relation{};
    g.prefs[p] = Relation{};
  }
  return g;
}

Game make_outcome_game(std::vector<std::string> outcomes) {
  Game g;
  g.outcomes = std::move(outcomes);
  return g;
}

Game terminal() { return terminal_fixed({"*"}); }

Game terminal_fixed(std::vector<std::string> players) {
  Game g;
  g.players = std::move(players);
  g.outcomes = {"*"};
  for (const auto& p : g.players) {
    g.access[p] = Relation{{"*", "*"}};
    g.prefs[p] = Relation{{"*", "*"}};
  }
  return g;
}

Game initial() { return Game{}; }

Game initial_fixed(std::vector<std::string> players) {
  return make_player_game(std::move(players));
}

}  // namespace gamecat
