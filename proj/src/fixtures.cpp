#include "gamecat/fixtures.hpp"

#include <array>
#include <utility>

namespace gamecat {
namespace fixtures {

namespace {

StrategicGame two_by_two(const std::string& r0, const std::string& r1,
                         const std::string& c0, const std::string& c1,
                         std::array<std::array<std::pair<int, int>, 2>, 2> pay) {
  StrategicGame sg;
  sg.players = {"1", "2"};
  sg.actions["1"] = {r0, r1};
  sg.actions["2"] = {c0, c1};
  const std::vector<std::string> rows{r0, r1}, cols{c0, c1};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      sg.payoffs[{rows[i], cols[j]}] = {Rational(pay[i][j].first),
                                        Rational(pay[i][j].second)};
  return sg;
}

}  // namespace

StrategicGame prisoners_dilemma_matrix() {
  return two_by_two("C", "D", "C", "D",
                    {{{{{-1, -1}, {-3, 0}}}, {{{0, -3}, {-2, -2}}}}});
}

Game prisoners_dilemma() { return from_strategic(prisoners_dilemma_matrix()); }

StrategicGame equal_payoff_matrix() {
  return two_by_two("T", "D", "L", "R",
                    {{{{{0, 0}, {-1, 2}}}, {{{2, -1}, {0, 0}}}}});
}

Game equal_payoff_game() { return from_strategic(equal_payoff_matrix()); }

Game equal_payoff_merged() {
  return identify_outcomes(equal_payoff_game(),
                           {{{"TL", "DR"}, "o"}, {{"DL"}, ""}, {{"TR"}, ""}});
}

StrategicGame battle_of_sexes_matrix() {
  return two_by_two("A", "B", "C", "D",
                    {{{{{2, 1}, {0, 0}}}, {{{0, 0}, {1, 2}}}}});
}

Game battle_of_sexes() { return from_strategic(battle_of_sexes_matrix()); }

Game battle_of_sexes_merged() {
  return identify_outcomes(battle_of_sexes(),
                           {{{"AD", "BC"}, "o"}, {{"AC"}, ""}, {{"BD"}, ""}});
}

Game battle_of_sexes_shifted() {
  Game bos = battle_of_sexes_merged();
  Game out;
  out.players = {"2", "3"};
  out.outcomes = bos.outcomes;
  out.access["2"] = bos.access.at("1");
  out.access["3"] = bos.access.at("2");
  out.prefs["2"] = bos.prefs.at("1");
  out.prefs["3"] = bos.prefs.at("2");
  return out;
}

Game weak_equilibrium_example() {
  Relation acc1{{"o", "p"}, {"q", "o"}};
  Relation acc2{{"q", "p"}, {"q", "o"}};
  Relation prf1{{"p", "o"}, {"o", "p"}, {"q", "o"}};
  Relation prf2{{"q", "o"}};
  return make_game({"1", "2"}, {"o", "p", "q"},
                   {{"1", acc1}, {"2", acc2}}, {{"1", prf1}, {"2", prf2}});
}

Morphism pd_quotient_morphism() {
  Morphism m;
  m.source = prisoners_dilemma();
  m.target = equal_payoff_merged();
  m.player_map = {{"1", "1"}, {"2", "2"}};
  m.outcome_map = {{"CC", "o"}, {"DD", "o"}, {"DC", "DL"}, {"CD", "TR"}};
  return m;
}

Game discrete_pair_game() {
  return make_game({"1", "2"}, {"a", "b"}, {}, {});
}

Game opposed_preferences_game() {
  Relation full{{"a", "b"}};
  Relation p1{{"a", "b"}};
  Relation p2{{"b", "a"}};
  return make_game({"1", "2"}, {"a", "b"}, {{"1", full}, {"2", full}},
                   {{"1", p1}, {"2", p2}});
}

Morphism ne_counterexample_morphism() {
  Morphism m;
  m.source = discrete_pair_game();
  m.target = opposed_preferences_game();
  m.player_map = {{"1", "1"}, {"2", "2"}};
  m.outcome_map = {{"a", "a"}, {"b", "b"}};
  return m;
}

}  // namespace fixtures
}  // namespace gamecat
