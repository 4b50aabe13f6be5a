#pragma once

#include <map>
#include <string>
#include <vector>

#include "gamecat/rational.hpp"
#include "gamecat/relation.hpp"

namespace gamecat {

// A game as a multigraph: outcomes are nodes; each player contributes a
// reflexive-symmetric accessibility relation and a preference preorder.
// Both player and outcome sets may be empty.
struct Game {
  std::vector<std::string> players;   // ordered, unique
  std::vector<std::string> outcomes;  // ordered, unique
  std::map<std::string, Relation> access;
  std::map<std::string, Relation> prefs;

  bool has_player(const std::string& id) const;
  bool has_outcome(const std::string& id) const;

  bool operator==(const Game&) const = default;
};

// One broken invariant, as data rather than a failure.
struct Violation {
  std::string kind;    // "access-reflexive", "pref-transitive", ...
  std::string player;  // empty when not player-specific
  std::string detail;

  bool operator==(const Violation&) const = default;
};

std::string violation_text(const Violation& v);

// Reports every violated game invariant: duplicate carriers, key
// mismatches, unknown identifiers, missing reflexive pairs, asymmetric
// access pairs, intransitive preference triples.
std::vector<Violation> validate_game(const Game& g);

// Convenience constructor used by fixtures and ingestion: when auto_close
// is set, the given pairs are completed to valid relations; otherwise they
// must already satisfy the invariants (validate_game is consulted).
Game make_game(std::vector<std::string> players,
               std::vector<std::string> outcomes,
               std::map<std::string, Relation> access,
               std::map<std::string, Relation> prefs, bool auto_close = true);

// Classic strategic form: finite action sets and one exact-rational payoff
// vector per action profile. Ingestion-only; converted via from_strategic.
struct StrategicGame {
  std::vector<std::string> players;
  std::map<std::string, std::vector<std::string>> actions;
  // Profile key: one action per player, in player order.
  std::map<std::vector<std::string>, std::vector<Rational>> payoffs;
};

std::vector<Violation> validate_strategic(const StrategicGame& sg);

// Outcomes are profile labels (action labels joined in player order).
// o R_i o' iff the profiles agree everywhere except possibly at i;
// o <=_i o' iff payoff_i(o) <= payoff_i(o').
Game from_strategic(const StrategicGame& sg);

// A block of the outcome partition passed to identify_outcomes. An empty
// label means "use the lexicographically least member".
struct OutcomeClass {
  std::vector<std::string> members;
  std::string label;
};

// Quotients the outcome set by the given partition. Accessibility images
// get the reflexive-symmetric closure only (never a transitive one);
// preference images get the full preorder closure.
Game identify_outcomes(const Game& g, const std::vector<OutcomeClass>& classes);

// Degenerate games used as gluing interfaces: players only / outcomes only.
Game make_player_game(std::vector<std::string> players);
Game make_outcome_game(std::vector<std::string> outcomes);

// Terminal and initial objects; the _fixed variants take the caller's
// player set, the plain ones live in the variable-player category.
Game terminal();
Game terminal_fixed(std::vector<std::string> players);
Game initial();
Game initial_fixed(std::vector<std::string> players);

}  // namespace gamecat
