#pragma once

#include <map>
#include <string>
#include <vector>

#include "gamecat/morphism.hpp"

namespace gamecat {

// A constructed game together with its canonical morphisms. Leg names are
// fixed per kind: "pi<k>" projections, "inj<k>" injections, "e" equalizer
// inclusion, "q" quotient map, "eval" evaluation.
struct ConstructedGame {
  std::string kind;
  Game game;
  std::map<std::string, Morphism> legs;
  std::vector<Game> factors;  // the inputs, kept for mediation checks
};

// Deterministic composite labels shared by all constructions.
std::string tuple_label(const std::vector<std::string>& parts);  // "(a|b)"
std::string tagged_label(const std::string& id, std::size_t tag);  // "a@0"
// "a↦x;b↦y" over sorted keys; the empty map serializes as "∅".
std::string map_label(const std::map<std::string, std::string>& m);

// Products. The _fixed variant requires an identical player list across
// factors and keeps it; the plain variant also multiplies the player sets.
// product({}) is the terminal game; product_fixed({}) is rejected.
ConstructedGame product_fixed(const std::vector<Game>& gs);
ConstructedGame product(const std::vector<Game>& gs);

// Mediating morphism into a product from a cone of legs x -> factor.
Morphism pair_mediate(const Game& x, const std::vector<Morphism>& legs,
                      const ConstructedGame& prod);

// Coproducts: tagged disjoint unions. In the variable-player case each
// player keeps their own relations and gets the identity on every foreign
// outcome.
ConstructedGame coproduct_fixed(const std::vector<Game>& gs);
ConstructedGame coproduct(const std::vector<Game>& gs);

// Mediating morphism out of a coproduct from a cocone of legs factor -> y.
Morphism copair_mediate(const std::vector<Morphism>& legs,
                        const ConstructedGame& coprod);

// Equalizer of a parallel pair: agreement carriers with restricted
// relations; leg "e" is the inclusion into the common source.
ConstructedGame equalizer(const Morphism& f, const Morphism& g);

// Coequalizer of a parallel pair: union-find quotient of the common
// target. Outcome classes are labeled by their least member; class access
// is the closed union of member images, class preferences the preorder
// closure of the union. Leg "q" is the canonical surjection.
ConstructedGame coequalizer(const Morphism& f, const Morphism& g);

// Amalgamation along the shared player set S = players(g) n players(h):
// coproduct followed by the coequalizer of the two inclusions of the
// player game over S. Legs "inj0"/"inj1" are the composite injections.
ConstructedGame pushout_shared_players(const Game& g, const Game& h);

// Exponentials h^g. Outcomes are the morphisms g -> h (fixed variant) or
// the outcome maps occurring in the hom set, with players the occurring
// player maps (variable variant). Leg "eval" goes from h^g x g to h.
ConstructedGame exponential_fixed(const Game& g, const Game& h,
                                  std::uint64_t budget = default_hom_budget());
ConstructedGame exponential(const Game& g, const Game& h,
                            std::uint64_t budget = default_hom_budget());

// Transpose of hmor : x * g -> h (the product as built by product()),
// giving x -> h^g.
Morphism curry(const Morphism& hmor, const Game& x, const Game& g);

// Embedding of h into h^g by constant maps; requires g nonempty.
Morphism constant_embedding_fixed(const Game& g, const Game& h);
Morphism constant_embedding(const Game& g, const Game& h);

// Pushforward of the player index along f : players(g) -> target_players.
// Unions of relations are repaired by closure so the result is valid; the
// pair (f, identity-on-outcomes) is then a morphism between the lifted
// games.
Game pushforward_players(const Game& g,
                         const std::map<std::string, std::string>& f,
                         std::vector<std::string> target_players);

}  // namespace gamecat
