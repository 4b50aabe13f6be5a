#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gamecat/game.hpp"

namespace gamecat {

struct GenParams {
  std::size_t max_players = 2;
  std::size_t max_outcomes = 3;
  double access_density = 0.4;  // in [0,1]
  double pref_density = 0.4;    // in [0,1]
  std::uint64_t seed = 0;
};

// splitmix64. The exact state transition is part of the generator
// contract so any implementation can reproduce the same games:
//   state += 0x9e3779b97f4a7c15
//   z = state; z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9
//   z = (z ^ (z >> 27)) * 0x94d049bb133111eb
//   return z ^ (z >> 31)
// below(n) is next() % n; unit() is (next() >> 11) * 2^-53.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  std::uint64_t below(std::uint64_t n);  // n > 0
  double unit();

 private:
  std::uint64_t state_;
};

// Deterministic random game: player count uniform in [min_players ..
// max_players], outcome count in [min_outcomes .. max_outcomes], players
// named "p0","p1",... and outcomes "o0","o1",.... For each player, access
// draws each unordered non-loop pair (index order) with probability
// access_density and closes reflexive-symmetric; prefs draw each ordered
// non-loop pair and close to a preorder. Always valid.
Game draw_game(SplitMix64& rng, const GenParams& p, std::size_t min_players = 0,
               std::size_t min_outcomes = 0);

// Same sampling but over a caller-provided player list.
Game draw_game_with_players(SplitMix64& rng, std::vector<std::string> players,
                            const GenParams& p, std::size_t min_outcomes = 0);

// Single game from the documented stream: rng seeded with p.seed, sizes
// in [0..max].
Game random_game(const GenParams& p);

}  // namespace gamecat
