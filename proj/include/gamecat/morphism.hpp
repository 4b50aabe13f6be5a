#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gamecat/game.hpp"

namespace gamecat {

// A pair of functions (players, outcomes) between two games. In the
// fixed-player category the player map is the identity on a shared set.
struct Morphism {
  Game source;
  Game target;
  std::map<std::string, std::string> player_map;
  std::map<std::string, std::string> outcome_map;

  bool operator==(const Morphism&) const = default;
};

Morphism identity_morphism(const Game& g);

// Relation-preservation check. Structural problems (partial or ill-typed
// maps) raise validation_error before any relation is inspected; broken
// preservation conditions come back as data.
std::vector<Violation> check_morphism(const Morphism& m);

// f then g; requires f.target == g.source.
Morphism compose(const Morphism& f, const Morphism& g);

std::uint64_t default_hom_budget();  // 10^7, or HOM_BUDGET from the env

// Every valid morphism source -> target, in lexicographic order of
// (player_map, outcome_map). Candidate counts above the budget raise
// resource_error; there is no silent truncation.
std::vector<Morphism> enumerate_hom(const Game& source, const Game& target,
                                    std::uint64_t budget = default_hom_budget());

// Fixed-player variant: identity player map over a shared player set.
std::vector<Morphism> enumerate_hom_fixed(const Game& source, const Game& target,
                                          std::uint64_t budget = default_hom_budget());

struct MorphismClass {
  bool monic = false;
  bool epic = false;
  bool iso = false;
};

// Only supported for identity player maps over a shared player set (the
// fixed-player category); anything else raises validation_error.
MorphismClass classify_morphism(const Morphism& m);

// Canonical morphisms around the degenerate objects.
Morphism unique_to_terminal(const Game& g);
Morphism unique_to_terminal_fixed(const Game& g);
Morphism unique_from_initial(const Game& g);
Morphism include_player_game(const std::vector<std::string>& subset,
                             const Game& g);
Morphism include_outcome_game(const std::vector<std::string>& subset,
                              const Game& g);

}  // namespace gamecat
