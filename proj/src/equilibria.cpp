#include "gamecat/equilibria.hpp"

#include <algorithm>
#include <set>

#include "gamecat/error.hpp"

namespace gamecat {

SolutionSubgame induced_subgame(const Game& g,
                                const std::vector<std::string>& selected) {
  for (const auto& o : selected)
    if (!g.has_outcome(o))
      throw validation_error("induced_subgame: unknown outcome '" + o + "'");

  SolutionSubgame out;
  out.parent = g;
  out.selected = selected;
  out.game.players = g.players;
  // Keep the parent's outcome order.
  for (const auto& o : g.outcomes)
    if (std::find(selected.begin(), selected.end(), o) != selected.end())
      out.game.outcomes.push_back(o);
  for (const auto& p : g.players) {
    out.game.access[p] = restrict_relation(g.access.at(p), out.game.outcomes);
    out.game.prefs[p] = restrict_relation(g.prefs.at(p), out.game.outcomes);
  }
  return out;
}

bool is_nash(const Game& g, const std::string& outcome) {
  if (!g.has_outcome(outcome))
    throw validation_error("is_nash: unknown outcome '" + outcome + "'");
  for (const auto& i : g.players) {
    const Relation& acc = g.access.at(i);
    const Relation& pref = g.prefs.at(i);
    for (const auto& p : g.outcomes)
      if (acc.contains(outcome, p) && !pref.contains(p, outcome)) return false;
  }
  return true;
}

bool is_weak_nash(const Game& g, const std::string& outcome) {
  if (!g.has_outcome(outcome))
    throw validation_error("is_weak_nash: unknown outcome '" + outcome + "'");
  for (const auto& i : g.players) {
    const Relation& acc = g.access.at(i);
    const Relation& pref = g.prefs.at(i);
    for (const auto& p : g.outcomes) {
      if (!acc.contains(outcome, p)) continue;
      if (pref.contains(p, outcome)) continue;
      // Strict domination: outcome < p with no way back.
      if (pref.contains(outcome, p)) return false;
    }
  }
  return true;
}

SolutionSubgame phi_ne(const Game& g) {
  std::vector<std::string> selected;
  for (const auto& o : g.outcomes)
    if (is_nash(g, o)) selected.push_back(o);
  return induced_subgame(g, selected);
}

SolutionSubgame phi_wne(const Game& g) {
  std::vector<std::string> selected;
  for (const auto& o : g.outcomes)
    if (is_weak_nash(g, o)) selected.push_back(o);
  return induced_subgame(g, selected);
}

bool preserves_ne(const Morphism& m) {
  if (!check_morphism(m).empty())
    throw validation_error("preserves_ne: not a morphism");
  for (const auto& o : m.source.outcomes)
    if (is_nash(m.source, o) && !is_nash(m.target, m.outcome_map.at(o)))
      return false;
  return true;
}

bool is_ne_object(const Game& g) {
  for (const auto& o : g.outcomes)
    if (!is_nash(g, o)) return false;
  return true;
}

LemmaNashReport lemma_nash_check(const Morphism& m) {
  if (!check_morphism(m).empty())
    throw validation_error("lemma_nash_check: not a morphism");

  LemmaNashReport r;
  std::set<std::string> player_image, outcome_image;
  for (const auto& [_, v] : m.player_map) player_image.insert(v);
  for (const auto& [_, v] : m.outcome_map) outcome_image.insert(v);
  r.surjective_players = player_image.size() == m.target.players.size();
  r.surjective_outcomes = outcome_image.size() == m.target.outcomes.size();

  // Reflection: o R_i p exactly when the images are related.
  r.reflects_access = true;
  for (const auto& i : m.source.players) {
    const Relation& sacc = m.source.access.at(i);
    const Relation& tacc = m.target.access.at(m.player_map.at(i));
    for (const auto& o : m.source.outcomes)
      for (const auto& p : m.source.outcomes)
        if (sacc.contains(o, p) !=
            tacc.contains(m.outcome_map.at(o), m.outcome_map.at(p)))
          r.reflects_access = false;
  }
  r.applies =
      r.surjective_players && r.surjective_outcomes && r.reflects_access;
  return r;
}

}  // namespace gamecat
