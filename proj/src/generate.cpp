#include "gamecat/generate.hpp"

#include "gamecat/error.hpp"

namespace gamecat {

std::uint64_t SplitMix64::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t n) { return next() % n; }

double SplitMix64::unit() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

namespace {

void check_params(const GenParams& p) {
  if (p.access_density < 0 || p.access_density > 1 || p.pref_density < 0 ||
      p.pref_density > 1)
    throw validation_error("generate: densities must lie in [0,1]");
}

}  // namespace

Game draw_game_with_players(SplitMix64& rng, std::vector<std::string> players,
                            const GenParams& p, std::size_t min_outcomes) {
  check_params(p);
  const std::size_t span = p.max_outcomes >= min_outcomes
                               ? p.max_outcomes - min_outcomes + 1
                               : 1;
  const std::size_t n_outcomes = min_outcomes + rng.below(span);

  Game g;
  g.players = std::move(players);
  for (std::size_t i = 0; i < n_outcomes; ++i)
    g.outcomes.push_back("o" + std::to_string(i));

  for (const auto& player : g.players) {
    Relation acc;
    for (std::size_t i = 0; i < n_outcomes; ++i)
      for (std::size_t j = i + 1; j < n_outcomes; ++j)
        if (rng.unit() < p.access_density)
          acc.insert(g.outcomes[i], g.outcomes[j]);
    g.access[player] = closure_access(acc, g.outcomes);

    Relation prf;
    for (std::size_t i = 0; i < n_outcomes; ++i)
      for (std::size_t j = 0; j < n_outcomes; ++j)
        if (i != j && rng.unit() < p.pref_density)
          prf.insert(g.outcomes[i], g.outcomes[j]);
    g.prefs[player] = closure_pref(prf, g.outcomes);
  }
  return g;
}

Game draw_game(SplitMix64& rng, const GenParams& p, std::size_t min_players,
               std::size_t min_outcomes) {
  check_params(p);
  const std::size_t span =
      p.max_players >= min_players ? p.max_players - min_players + 1 : 1;
  const std::size_t n_players = min_players + rng.below(span);
  std::vector<std::string> players;
  for (std::size_t i = 0; i < n_players; ++i)
    players.push_back("p" + std::to_string(i));
  return draw_game_with_players(rng, std::move(players), p, min_outcomes);
}

Game random_game(const GenParams& p) {
  SplitMix64 rng(p.seed);
  return draw_game(rng, p);
}

}  // namespace gamecat
