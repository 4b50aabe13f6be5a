#pragma once

#include <string>
#include <vector>

#include "gamecat/morphism.hpp"

namespace gamecat {

// The subgame induced by a selected outcome set: same players, relations
// restricted exactly.
struct SolutionSubgame {
  Game parent;
  std::vector<std::string> selected;
  Game game;
};

SolutionSubgame induced_subgame(const Game& g,
                                const std::vector<std::string>& selected);

// o* is a Nash equilibrium when every i-accessible alternative is weakly
// below o* for i. The weak form tolerates incomparable alternatives: only
// a strictly preferred accessible outcome destabilizes.
bool is_nash(const Game& g, const std::string& outcome);
bool is_weak_nash(const Game& g, const std::string& outcome);

SolutionSubgame phi_ne(const Game& g);
SolutionSubgame phi_wne(const Game& g);

// Image of every equilibrium is an equilibrium.
bool preserves_ne(const Morphism& m);

// All outcomes are equilibria (fixed points of phi_ne).
bool is_ne_object(const Game& g);

// Sufficient conditions under which a morphism preserves equilibria:
// surjective on players and outcomes, and access reflected along it.
struct LemmaNashReport {
  bool applies = false;
  bool surjective_players = false;
  bool surjective_outcomes = false;
  bool reflects_access = false;
};

LemmaNashReport lemma_nash_check(const Morphism& m);

}  // namespace gamecat
