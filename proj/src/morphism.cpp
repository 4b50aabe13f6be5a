#include "gamecat/morphism.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_map>

#include "gamecat/error.hpp"

namespace gamecat {

Morphism identity_morphism(const Game& g) {
  Morphism m;
  m.source = g;
  m.target = g;
  for (const auto& p : g.players) m.player_map[p] = p;
  for (const auto& o : g.outcomes) m.outcome_map[o] = o;
  return m;
}

namespace {

void check_total(const std::map<std::string, std::string>& f,
                 const std::vector<std::string>& domain,
                 const std::vector<std::string>& codomain,
                 const std::string& what) {
  for (const auto& x : domain)
    if (!f.count(x))
      throw validation_error("morphism: " + what + " misses '" + x + "'");
  for (const auto& [k, v] : f) {
    if (std::find(domain.begin(), domain.end(), k) == domain.end())
      throw validation_error("morphism: " + what + " has extra key '" + k +
                             "'");
    if (std::find(codomain.begin(), codomain.end(), v) == codomain.end())
      throw validation_error("morphism: " + what + " sends '" + k +
                             "' outside the target ('" + v + "')");
  }
}

std::string pair_text(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

}  // namespace

std::vector<Violation> check_morphism(const Morphism& m) {
  check_total(m.player_map, m.source.players, m.target.players, "player map");
  check_total(m.outcome_map, m.source.outcomes, m.target.outcomes,
              "outcome map");

  std::vector<Violation> out;
  for (const auto& i : m.source.players) {
    const auto& j = m.player_map.at(i);
    const Relation& tacc = m.target.access.at(j);
    const Relation& tpref = m.target.prefs.at(j);
    for (const auto& [a, b] : m.source.access.at(i))
      if (!tacc.contains(m.outcome_map.at(a), m.outcome_map.at(b)))
        out.push_back({"access-preservation", i, pair_text(a, b)});
    for (const auto& [a, b] : m.source.prefs.at(i))
      if (!tpref.contains(m.outcome_map.at(a), m.outcome_map.at(b)))
        out.push_back({"pref-preservation", i, pair_text(a, b)});
  }
  return out;
}

Morphism compose(const Morphism& f, const Morphism& g) {
  if (!(f.target == g.source))
    throw validation_error("compose: middle games differ");
  Morphism out;
  out.source = f.source;
  out.target = g.target;
  for (const auto& [k, v] : f.player_map)
    out.player_map[k] = g.player_map.at(v);
  for (const auto& [k, v] : f.outcome_map)
    out.outcome_map[k] = g.outcome_map.at(v);
  return out;
}

std::uint64_t default_hom_budget() {
  if (const char* env = std::getenv("HOM_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 10'000'000;
}

namespace {

// min(base^exp, cap+1) without overflow.
std::uint64_t pow_capped(std::uint64_t base, std::uint64_t exp,
                         std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::uint64_t k = 0; k < exp; ++k) {
    if (base != 0 && r > cap / base + 1) return cap + 1;
    r *= base;
    if (r > cap) return cap + 1;
  }
  return r;
}

struct DenseGame {
  std::vector<std::string> players;   // sorted
  std::vector<std::string> outcomes;  // sorted
  // per player: n*n access / pref matrices over sorted outcome indices
  std::vector<std::vector<char>> access, prefs;
};

DenseGame densify(const Game& g) {
  DenseGame d;
  d.players = g.players;
  std::sort(d.players.begin(), d.players.end());
  d.outcomes = g.outcomes;
  std::sort(d.outcomes.begin(), d.outcomes.end());
  std::unordered_map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < d.outcomes.size(); ++i)
    idx.emplace(d.outcomes[i], i);
  const std::size_t n = d.outcomes.size();
  for (const auto& p : d.players) {
    std::vector<char> a(n * n, 0), r(n * n, 0);
    for (const auto& [x, y] : g.access.at(p)) a[idx.at(x) * n + idx.at(y)] = 1;
    for (const auto& [x, y] : g.prefs.at(p)) r[idx.at(x) * n + idx.at(y)] = 1;
    d.access.push_back(std::move(a));
    d.prefs.push_back(std::move(r));
  }
  return d;
}

// Shared backtracking core. `player_maps` lists the player assignments to
// try, each a vector source-player-index -> target-player-index.
std::vector<Morphism> enumerate_core(
    const Game& source, const Game& target,
    const std::vector<std::vector<std::size_t>>& player_maps) {
  const DenseGame s = densify(source);
  const DenseGame t = densify(target);
  const std::size_t n = s.outcomes.size();
  const std::size_t r = t.outcomes.size();
  const std::size_t tn = t.outcomes.size();

  std::vector<Morphism> found;
  if (n > 0 && r == 0) return found;

  for (const auto& pmap : player_maps) {
    // img[k]: chosen target outcome index for sorted source outcome k.
    std::vector<std::size_t> img(n, 0);
    // Consistency of the assignment at position k against j <= k.
    auto ok_at = [&](std::size_t k) {
      for (std::size_t pi = 0; pi < s.players.size(); ++pi) {
        const auto& sa = s.access[pi];
        const auto& sp = s.prefs[pi];
        const auto& ta = t.access[pmap[pi]];
        const auto& tp = t.prefs[pmap[pi]];
        for (std::size_t j = 0; j <= k; ++j) {
          if (sa[j * n + k] && !ta[img[j] * tn + img[k]]) return false;
          if (sa[k * n + j] && !ta[img[k] * tn + img[j]]) return false;
          if (sp[j * n + k] && !tp[img[j] * tn + img[k]]) return false;
          if (sp[k * n + j] && !tp[img[k] * tn + img[j]]) return false;
        }
      }
      return true;
    };

    auto emit = [&] {
      Morphism m;
      m.source = source;
      m.target = target;
      for (std::size_t pi = 0; pi < s.players.size(); ++pi)
        m.player_map[s.players[pi]] = t.players[pmap[pi]];
      for (std::size_t k = 0; k < n; ++k)
        m.outcome_map[s.outcomes[k]] = t.outcomes[img[k]];
      found.push_back(std::move(m));
    };

    if (n == 0) {
      emit();
      continue;
    }
    // Lexicographic backtracking over outcome images.
    std::size_t k = 0;
    img[0] = 0;
    while (true) {
      if (img[k] == r) {
        if (k == 0) break;
        --k;
        ++img[k];
        continue;
      }
      if (!ok_at(k)) {
        ++img[k];
        continue;
      }
      if (k + 1 == n) {
        emit();
        ++img[k];
        continue;
      }
      ++k;
      img[k] = 0;
    }
  }
  return found;
}

std::vector<std::vector<std::size_t>> all_player_maps(std::size_t n_src,
                                                      std::size_t n_tgt) {
  std::vector<std::vector<std::size_t>> maps;
  if (n_src == 0) {
    maps.push_back({});
    return maps;
  }
  if (n_tgt == 0) return maps;
  std::vector<std::size_t> cur(n_src, 0);
  while (true) {
    maps.push_back(cur);
    std::size_t k = n_src;
    while (k > 0) {
      --k;
      if (++cur[k] < n_tgt) break;
      cur[k] = 0;
      if (k == 0) return maps;
    }
  }
}

}  // namespace

std::vector<Morphism> enumerate_hom(const Game& source, const Game& target,
                                    std::uint64_t budget) {
  std::uint64_t pm =
      pow_capped(target.players.size(), source.players.size(), budget);
  std::uint64_t om =
      pow_capped(target.outcomes.size(), source.outcomes.size(), budget);
  if (pm == 0 || om == 0) return {};  // no total maps exist
  if (pm > budget || om > budget || pm > budget / om)
    throw resource_error("enumerate_hom: candidate count exceeds budget of " +
                         std::to_string(budget));
  return enumerate_core(
      source, target,
      all_player_maps(source.players.size(), target.players.size()));
}

std::vector<Morphism> enumerate_hom_fixed(const Game& source,
                                          const Game& target,
                                          std::uint64_t budget) {
  std::vector<std::string> sp = source.players, tp = target.players;
  std::sort(sp.begin(), sp.end());
  std::sort(tp.begin(), tp.end());
  if (sp != tp)
    throw validation_error("enumerate_hom_fixed: player sets differ");
  std::uint64_t om =
      pow_capped(target.outcomes.size(), source.outcomes.size(), budget);
  if (om > budget)
    throw resource_error("enumerate_hom: candidate count exceeds budget of " +
                         std::to_string(budget));
  std::vector<std::size_t> ident(sp.size());
  for (std::size_t i = 0; i < ident.size(); ++i) ident[i] = i;
  return enumerate_core(source, target, {ident});
}

MorphismClass classify_morphism(const Morphism& m) {
  if (!check_morphism(m).empty())
    throw validation_error("classify_morphism: not a morphism");
  std::vector<std::string> sp = m.source.players, tp = m.target.players;
  std::sort(sp.begin(), sp.end());
  std::sort(tp.begin(), tp.end());
  if (sp != tp)
    throw validation_error("classify_morphism: player sets differ");
  for (const auto& [k, v] : m.player_map)
    if (k != v)
      throw validation_error(
          "classify_morphism: non-identity player maps are unsupported");

  MorphismClass c;
  std::map<std::string, std::string> inverse;
  bool injective = true;
  for (const auto& [k, v] : m.outcome_map)
    if (!inverse.emplace(v, k).second) injective = false;
  c.monic = injective;
  c.epic = inverse.size() == m.target.outcomes.size();
  c.iso = false;
  if (injective && c.epic && m.source.outcomes.size() ==
                                 m.target.outcomes.size()) {
    Morphism inv;
    inv.source = m.target;
    inv.target = m.source;
    inv.player_map = m.player_map;
    inv.outcome_map = std::move(inverse);
    c.iso = check_morphism(inv).empty();
  }
  return c;
}

Morphism unique_to_terminal(const Game& g) {
  Morphism m;
  m.source = g;
  m.target = terminal();
  for (const auto& p : g.players) m.player_map[p] = "*";
  for (const auto& o : g.outcomes) m.outcome_map[o] = "*";
  return m;
}

Morphism unique_to_terminal_fixed(const Game& g) {
  Morphism m;
  m.source = g;
  m.target = terminal_fixed(g.players);
  for (const auto& p : g.players) m.player_map[p] = p;
  for (const auto& o : g.outcomes) m.outcome_map[o] = "*";
  return m;
}

Morphism unique_from_initial(const Game& g) {
  Morphism m;
  m.source = initial();
  m.target = g;
  return m;
}

Morphism include_player_game(const std::vector<std::string>& subset,
                             const Game& g) {
  Morphism m;
  m.source = make_player_game(subset);
  m.target = g;
  for (const auto& p : subset) {
    if (!g.has_player(p))
      throw validation_error("include_player_game: '" + p +
                             "' is not a player of the target");
    m.player_map[p] = p;
  }
  return m;
}

Morphism include_outcome_game(const std::vector<std::string>& subset,
                              const Game& g) {
  Morphism m;
  m.source = make_outcome_game(subset);
  m.target = g;
  for (const auto& o : subset) {
    if (!g.has_outcome(o))
      throw validation_error("include_outcome_game: '" + o +
                             "' is not an outcome of the target");
    m.outcome_map[o] = o;
  }
  return m;
}

}  // namespace gamecat
