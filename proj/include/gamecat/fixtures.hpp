#pragma once

#include "gamecat/morphism.hpp"

namespace gamecat {
namespace fixtures {

// Prisoner's Dilemma, payoffs (C,C)=(-1,-1) (C,D)=(-3,0) (D,C)=(0,-3)
// (D,D)=(-2,-2); players "1" (rows) and "2" (columns).
StrategicGame prisoners_dilemma_matrix();
Game prisoners_dilemma();

// 2x2 game whose diagonal outcomes TL and DR share the payoff (0,0).
StrategicGame equal_payoff_matrix();
Game equal_payoff_game();
// The same game with TL and DR identified to a single outcome "o"; its
// accessibility relations are intentionally not transitive.
Game equal_payoff_merged();

// Battle of the Sexes, (A,C)=(2,1) (A,D)=(0,0) (B,C)=(0,0) (B,D)=(1,2).
StrategicGame battle_of_sexes_matrix();
Game battle_of_sexes();
// With the two zero-payoff outcomes identified to "o" (three outcomes).
Game battle_of_sexes_merged();
// Reindexed so its players are "2" and "3" (player 2 also plays the PD).
Game battle_of_sexes_shifted();

// Three-outcome game {o,p,q} where o is a Nash equilibrium and p is a
// weak equilibrium only: player 2 can reach q from p but the two are
// incomparable for them.
Game weak_equilibrium_example();

// Quotient map of the Prisoner's Dilemma onto equal_payoff_merged():
// CC,DD -> o, DC -> DL, CD -> TR; identity on players.
Morphism pd_quotient_morphism();

// Two-outcome pair showing that morphisms need not preserve equilibria:
// the source is discrete, the target has full access and opposed strict
// preferences, and the identity maps form a valid morphism.
Game discrete_pair_game();
Game opposed_preferences_game();
Morphism ne_counterexample_morphism();

}  // namespace fixtures
}  // namespace gamecat
