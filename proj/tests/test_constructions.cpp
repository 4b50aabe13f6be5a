#include <doctest.h>

#include <algorithm>
#include <set>

#include "gamecat/constructions.hpp"
#include "gamecat/error.hpp"
#include "gamecat/fixtures.hpp"

using namespace gamecat;

namespace {

Game normalized(Game g) {
  std::sort(g.players.begin(), g.players.end());
  std::sort(g.outcomes.begin(), g.outcomes.end());
  return g;
}

bool all_legs_valid(const ConstructedGame& c) {
  if (!validate_game(c.game).empty()) return false;
  for (const auto& [_, leg] : c.legs)
    if (!check_morphism(leg).empty()) return false;
  return true;
}

}  // namespace

TEST_CASE("composite labels") {
  CHECK(tuple_label({"a", "b"}) == "(a|b)");
  CHECK(tuple_label({}) == "()");
  CHECK(tagged_label("x", 1) == "x@1");
  CHECK(map_label({{"a", "x"}, {"b", "y"}}) == "a↦x;b↦y");
  CHECK(map_label({}) == "∅");
}

TEST_CASE("fixed product of the dilemma with itself") {
  Game pd = fixtures::prisoners_dilemma();
  ConstructedGame prod = product_fixed({pd, pd});
  CHECK(prod.game.outcomes.size() == 16);
  CHECK(prod.game.players == pd.players);
  CHECK(all_legs_valid(prod));

  // Componentwise access: both coordinates must move together.
  CHECK(prod.game.access.at("1").contains("(CC|CD)", "(DC|DD)"));
  CHECK(!prod.game.access.at("1").contains("(CC|CD)", "(DC|CC)"));
}

TEST_CASE("unary fixed product is isomorphic to its factor") {
  Game pd = fixtures::prisoners_dilemma();
  ConstructedGame prod = product_fixed({pd});
  CHECK(prod.game.outcomes.size() == pd.outcomes.size());
  MorphismClass c = classify_morphism(prod.legs.at("pi0"));
  CHECK(c.iso);
}

TEST_CASE("fixed product with the terminal changes nothing but labels") {
  Game pd = fixtures::prisoners_dilemma();
  ConstructedGame prod = product_fixed({pd, terminal_fixed(pd.players)});
  CHECK(prod.game.outcomes.size() == pd.outcomes.size());
  MorphismClass c = classify_morphism(prod.legs.at("pi0"));
  CHECK(c.iso);
}

TEST_CASE("fixed product demands the identical player list") {
  CHECK_THROWS_AS(product_fixed({fixtures::prisoners_dilemma(),
                                 fixtures::battle_of_sexes_shifted()}),
                  validation_error);
  CHECK_THROWS_AS(product_fixed({}), validation_error);
}

TEST_CASE("variable-player product multiplies both carriers") {
  Game pd = fixtures::prisoners_dilemma();
  Game bos = fixtures::battle_of_sexes_merged();
  ConstructedGame prod = product({pd, bos});
  CHECK(prod.game.players.size() == 4);
  CHECK(prod.game.outcomes.size() == 12);
  CHECK(all_legs_valid(prod));

  // The binary rule: (o,o') relates under (i,j) iff both components do.
  CHECK(prod.game.access.at("(1|1)").contains("(CC|AC)", "(DC|o)"));
  // Player 2 of the dilemma cannot move CC to DC, so the pair drops out.
  CHECK(!prod.game.access.at("(2|1)").contains("(CC|AC)", "(DC|o)"));

  // Nullary product is terminal.
  CHECK(product({}).game == terminal());
}

TEST_CASE("pair mediation: projections of the product give the identity") {
  Game pd = fixtures::prisoners_dilemma();
  ConstructedGame prod = product({pd, pd});
  Morphism u = pair_mediate(prod.game,
                            {prod.legs.at("pi0"), prod.legs.at("pi1")}, prod);
  CHECK(u == identity_morphism(prod.game));
}

TEST_CASE("pair mediation picks tuples from the terminal") {
  Game pd = fixtures::prisoners_dilemma();
  ConstructedGame prod = product({pd, pd});
  auto homs = enumerate_hom(terminal(), pd);
  REQUIRE(!homs.empty());
  Morphism u = pair_mediate(terminal(), {homs[0], homs[1]}, prod);
  CHECK(check_morphism(u).empty());
  CHECK(u.outcome_map.at("*") ==
        tuple_label({homs[0].outcome_map.at("*"), homs[1].outcome_map.at("*")}));
  CHECK(compose(u, prod.legs.at("pi0")) == homs[0]);
  CHECK(compose(u, prod.legs.at("pi1")) == homs[1]);
}

TEST_CASE("fixed coproduct with the initial object changes nothing") {
  Game pd = fixtures::prisoners_dilemma();
  ConstructedGame cp = coproduct_fixed({pd, initial_fixed(pd.players)});
  CHECK(cp.game.outcomes.size() == 4);
  MorphismClass c = classify_morphism(cp.legs.at("inj0"));
  CHECK(c.iso);
}

TEST_CASE("fixed coproduct is a tagged union with no cross pairs") {
  Game pd = fixtures::prisoners_dilemma();
  Game bos = fixtures::battle_of_sexes_merged();  // same players {1,2}
  ConstructedGame cp = coproduct_fixed({pd, bos});
  CHECK(cp.game.outcomes.size() == 7);
  CHECK(all_legs_valid(cp));
  for (const auto& p : cp.game.players)
    for (const auto& [a, b] : cp.game.access.at(p))
      CHECK(a.substr(a.size() - 2) == b.substr(b.size() - 2));  // same tag

  // Copairing the injections gives the identity.
  Morphism v = copair_mediate({cp.legs.at("inj0"), cp.legs.at("inj1")}, cp);
  CHECK(v == identity_morphism(cp.game));
}

TEST_CASE("copairing two copies of a constant is that constant") {
  Game pd = fixtures::prisoners_dilemma();
  ConstructedGame cp = coproduct_fixed({pd, pd});
  Morphism constant = unique_to_terminal_fixed(pd);
  Morphism v = copair_mediate({constant, constant}, cp);
  CHECK(check_morphism(v).empty());
  for (const auto& [_, img] : v.outcome_map) CHECK(img == "*");
}

TEST_CASE("variable-player coproduct pads foreign outcomes with loops") {
  Game pd = fixtures::prisoners_dilemma();
  Game bos = fixtures::battle_of_sexes_merged();
  ConstructedGame cp = coproduct({pd, bos});
  CHECK(cp.game.players.size() == 4);
  CHECK(cp.game.outcomes.size() == 7);
  CHECK(all_legs_valid(cp));

  const Relation& r = cp.game.access.at("1@0");
  CHECK(r.contains("CC@0", "DC@0"));   // own pairs survive
  CHECK(r.contains("o@1", "o@1"));     // foreign loops added
  CHECK(!r.contains("AC@1", "o@1"));   // but nothing else foreign
  CHECK(!r.contains("CC@0", "AC@1"));  // and never across components

  CHECK(coproduct({}).game == initial());
  CHECK(coproduct({initial()}).game == initial());
}

TEST_CASE("hom counts around terminal and initial objects") {
  for (const Game& g :
       {fixtures::prisoners_dilemma(), fixtures::battle_of_sexes_merged()}) {
    CHECK(enumerate_hom(g, terminal()).size() == 1);
    CHECK(enumerate_hom(initial(), g).size() == 1);
  }
}

TEST_CASE("equalizer of identical morphisms is the whole source") {
  Morphism g = fixtures::pd_quotient_morphism();
  ConstructedGame eq = equalizer(g, g);
  CHECK(eq.game == g.source);
  CHECK(all_legs_valid(eq));
}

TEST_CASE("equalizer of disagreeing picks is empty on outcomes") {
  Game pd = fixtures::prisoners_dilemma();
  auto homs = enumerate_hom_fixed(terminal_fixed(pd.players), pd);
  REQUIRE(homs.size() == 4);
  ConstructedGame eq = equalizer(homs[0], homs[3]);
  CHECK(eq.game.outcomes.empty());
  CHECK(eq.game.players == pd.players);  // identity player maps agree
  CHECK(all_legs_valid(eq));
}

TEST_CASE("equalizers must be parallel") {
  Morphism g = fixtures::pd_quotient_morphism();
  CHECK_THROWS_AS(equalizer(g, identity_morphism(g.source)),
                  validation_error);
}

TEST_CASE("coequalizer of identical morphisms is the target") {
  Morphism g = fixtures::pd_quotient_morphism();
  ConstructedGame ce = coequalizer(g, g);
  CHECK(ce.game == normalized(g.target));
  CHECK(all_legs_valid(ce));
}

TEST_CASE("coequalizer merging the diagonal equals the identified game") {
  // Two picks into the four-outcome game, selecting TL and DR.
  Game g1 = fixtures::equal_payoff_game();
  Game t = terminal_fixed(g1.players);
  Morphism f, h;
  f.source = t;
  f.target = g1;
  h.source = t;
  h.target = g1;
  for (const auto& p : t.players) {
    f.player_map[p] = p;
    h.player_map[p] = p;
  }
  f.outcome_map = {{"*", "TL"}};
  h.outcome_map = {{"*", "DR"}};
  REQUIRE(check_morphism(f).empty());
  REQUIRE(check_morphism(h).empty());

  ConstructedGame ce = coequalizer(f, h);
  // The same quotient via outcome identification (least-member label DR).
  Game direct = identify_outcomes(
      g1, {{{"TL", "DR"}, ""}, {{"DL"}, ""}, {{"TR"}, ""}});
  CHECK(ce.game == normalized(direct));

  // Defining property, pointwise.
  CHECK(compose(f, ce.legs.at("q")) == compose(h, ce.legs.at("q")));
}

TEST_CASE("pushout over the shared player amalgamates the two games") {
  Game pd = fixtures::prisoners_dilemma();          // players 1,2
  Game bos = fixtures::battle_of_sexes_shifted();   // players 2,3
  ConstructedGame po = pushout_shared_players(pd, bos);

  CHECK(po.game.players.size() == 3);
  CHECK(po.game.outcomes.size() == 7);
  CHECK(all_legs_valid(po));

  // The merged player keeps both of their relation sets.
  const std::string merged = "2@0";
  CHECK(po.game.players == std::vector<std::string>{"1@0", "2@0", "3@1"});
  const Relation& acc = po.game.access.at(merged);
  CHECK(acc.contains("CC@0", "CD@0"));  // from the dilemma
  CHECK(acc.contains("AC@1", "o@1"));   // from the coordination game
  CHECK(!acc.contains("CC@0", "AC@1"));

  // Leg commutation over the interface.
  Morphism left = compose(include_player_game({"2"}, pd), po.legs.at("inj0"));
  Morphism right =
      compose(include_player_game({"2"}, bos), po.legs.at("inj1"));
  CHECK(left == right);
}

TEST_CASE("pushout of player-disjoint games is the coproduct") {
  Game pd = fixtures::prisoners_dilemma();
  Game bos = fixtures::battle_of_sexes_shifted();
  Game bos45 = bos;
  bos45.players = {"4", "5"};
  bos45.access = {{"4", bos.access.at("2")}, {"5", bos.access.at("3")}};
  bos45.prefs = {{"4", bos.prefs.at("2")}, {"5", bos.prefs.at("3")}};

  ConstructedGame po = pushout_shared_players(pd, bos45);
  ConstructedGame cp = coproduct({pd, bos45});
  CHECK(po.game == normalized(cp.game));
}

TEST_CASE("fixed exponential over the terminal recovers the base") {
  Game bos = fixtures::battle_of_sexes_merged();
  ConstructedGame exp = exponential_fixed(terminal_fixed(bos.players), bos);
  CHECK(exp.game.outcomes.size() == bos.outcomes.size());
  CHECK(all_legs_valid(exp));
}

TEST_CASE("terminal to the power of anything is terminal-like") {
  Game pd = fixtures::prisoners_dilemma();
  ConstructedGame exp = exponential_fixed(pd, terminal_fixed(pd.players));
  CHECK(exp.game.outcomes.size() == 1);
  CHECK(all_legs_valid(exp));
}

TEST_CASE("fixed exponential outcome count is pinned") {
  // Morphisms from the dilemma into the merged three-outcome game.
  ConstructedGame exp = exponential_fixed(fixtures::prisoners_dilemma(),
                                          fixtures::equal_payoff_merged());
  CHECK(exp.game.outcomes.size() == 8);
  CHECK(validate_game(exp.game).empty());
  CHECK(all_legs_valid(exp));
}

TEST_CASE("variable-player exponential over the empty game") {
  Game bos = fixtures::battle_of_sexes_merged();
  ConstructedGame exp = exponential(initial(), bos);
  // One empty outcome map; every player map from the empty set is the
  // single empty map.
  CHECK(exp.game.players == std::vector<std::string>{"∅"});
  CHECK(exp.game.outcomes == std::vector<std::string>{"∅"});
  CHECK(validate_game(exp.game).empty());
}

TEST_CASE("constants always appear in the exponential") {
  Game pd = fixtures::prisoners_dilemma();
  Game bos = fixtures::battle_of_sexes_merged();
  ConstructedGame exp = exponential(pd, bos);
  for (const auto& o2 : bos.outcomes) {
    std::map<std::string, std::string> constant;
    for (const auto& o : pd.outcomes) constant[o] = o2;
    CHECK(exp.game.has_outcome(map_label(constant)));
  }
  CHECK(validate_game(exp.game).empty());
}

TEST_CASE("currying the evaluation gives the identity") {
  Game pd = fixtures::prisoners_dilemma();
  Game merged = fixtures::equal_payoff_merged();
  ConstructedGame exp = exponential(pd, merged);
  Morphism id = curry(exp.legs.at("eval"), exp.game, pd);
  CHECK(id == identity_morphism(exp.game));
}

TEST_CASE("currying from the terminal names the restricted morphism") {
  Game pd = fixtures::prisoners_dilemma();
  Game merged = fixtures::equal_payoff_merged();
  ConstructedGame prod = product({terminal(), pd});

  // Build x * g -> h from the quotient morphism through the projection.
  Morphism m = compose(prod.legs.at("pi1"), fixtures::pd_quotient_morphism());
  REQUIRE(check_morphism(m).empty());

  Morphism psi = curry(m, terminal(), pd);
  CHECK(check_morphism(psi).empty());
  CHECK(psi.outcome_map.at("*") ==
        map_label(fixtures::pd_quotient_morphism().outcome_map));

  // Round trip through eval, pointwise.
  ConstructedGame exp = exponential(pd, merged);
  const Morphism& eval = exp.legs.at("eval");
  for (const auto& o : pd.outcomes)
    CHECK(eval.outcome_map.at(tuple_label({psi.outcome_map.at("*"), o})) ==
          m.outcome_map.at(tuple_label({"*", o})));
}

TEST_CASE("curry rejects a source that is not the stated product") {
  Morphism g = fixtures::pd_quotient_morphism();
  CHECK_THROWS_AS(curry(g, terminal(), g.source), validation_error);
}

TEST_CASE("constant embeddings are injective morphisms") {
  Game pd = fixtures::prisoners_dilemma();
  Game merged = fixtures::equal_payoff_merged();

  Morphism psi = constant_embedding_fixed(pd, merged);
  CHECK(check_morphism(psi).empty());
  std::set<std::string> image;
  for (const auto& [_, v] : psi.outcome_map) image.insert(v);
  CHECK(image.size() == 3);

  Morphism psi_gam = constant_embedding(pd, merged);
  CHECK(check_morphism(psi_gam).empty());

  CHECK_THROWS_AS(constant_embedding_fixed(initial_fixed(pd.players), pd),
                  validation_error);
  CHECK_THROWS_AS(constant_embedding(initial(), pd), validation_error);
}

TEST_CASE("pushforward along the identity changes nothing") {
  Game pd = fixtures::prisoners_dilemma();
  Game same = pushforward_players(pd, {{"1", "1"}, {"2", "2"}}, {"1", "2"});
  CHECK(same == pd);
}

TEST_CASE("pushforward collapsing both players merges their relations") {
  Game pd = fixtures::prisoners_dilemma();
  Game merged = pushforward_players(pd, {{"1", "m"}, {"2", "m"}}, {"m"});
  CHECK(validate_game(merged).empty());

  const Relation& acc = merged.access.at("m");
  for (const auto& pr : pd.access.at("1")) CHECK(acc.contains(pr.first, pr.second));
  for (const auto& pr : pd.access.at("2")) CHECK(acc.contains(pr.first, pr.second));

  // The union of the two total orders relates CC and DD both ways.
  CHECK(merged.prefs.at("m").contains("CC", "DD"));
  CHECK(merged.prefs.at("m").contains("DD", "CC"));

  // The pair (f, identity) is a morphism into the lifted game.
  Morphism m;
  m.source = pd;
  m.target = merged;
  m.player_map = {{"1", "m"}, {"2", "m"}};
  for (const auto& o : pd.outcomes) m.outcome_map[o] = o;
  CHECK(check_morphism(m).empty());
}

TEST_CASE("pushforward repairs players outside the image") {
  Game pd = fixtures::prisoners_dilemma();
  Game lifted =
      pushforward_players(pd, {{"1", "a"}, {"2", "a"}}, {"a", "spare"});
  CHECK(validate_game(lifted).empty());
  // The spare player only has the identity relation.
  CHECK(lifted.access.at("spare").size() == pd.outcomes.size());
}
