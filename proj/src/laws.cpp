#include "gamecat/laws.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>

#include <json.hpp>

#include "gamecat/constructions.hpp"
#include "gamecat/document.hpp"
#include "gamecat/equilibria.hpp"
#include "gamecat/error.hpp"
#include "gamecat/fixtures.hpp"

namespace gamecat {

using nlohmann::json;

namespace {

struct TrialResult {
  enum Status { kPass, kFail, kSkip } status = kPass;
  LawFailure failure;
};

TrialResult pass() { return {}; }
TrialResult skip() { return {TrialResult::kSkip, {}}; }
TrialResult fail(const json& inputs, std::string observed,
                 std::string expected) {
  TrialResult r;
  r.status = TrialResult::kFail;
  r.failure.inputs = inputs.dump();
  r.failure.observed = std::move(observed);
  r.failure.expected = std::move(expected);
  return r;
}

std::set<std::string> nash_outcomes(const Game& g) {
  std::set<std::string> out;
  for (const auto& o : g.outcomes)
    if (is_nash(g, o)) out.insert(o);
  return out;
}

std::set<std::string> weak_nash_outcomes(const Game& g) {
  std::set<std::string> out;
  for (const auto& o : g.outcomes)
    if (is_weak_nash(g, o)) out.insert(o);
  return out;
}

std::string set_text(const std::set<std::string>& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& x : s) {
    if (!first) out += ",";
    out += x;
    first = false;
  }
  return out + "}";
}

json inputs_of(std::initializer_list<std::pair<const char*, const Game*>> gs) {
  json doc = json::object();
  for (const auto& [name, g] : gs) doc[name] = game_to_json(*g);
  return doc;
}

std::vector<std::string> shared_players(SplitMix64& rng, const GenParams& p) {
  const std::size_t span = p.max_players >= 1 ? p.max_players : 1;
  const std::size_t n = 1 + rng.below(span);
  std::vector<std::string> players;
  for (std::size_t i = 0; i < n; ++i)
    players.push_back("p" + std::to_string(i));
  return players;
}

// A compact signature a morphism can be compared by inside one hom set.
std::string sig(const Morphism& m) {
  return map_label(m.player_map) + "/" + map_label(m.outcome_map);
}

using TrialFn =
    std::function<TrialResult(const GenParams&, std::uint64_t trial_seed)>;

// ---- equilibria theorems --------------------------------------------------

TrialResult product_ne_trial(const GenParams& p, std::uint64_t seed,
                             bool fixed, bool weak) {
  SplitMix64 rng(seed);
  Game g1, g2;
  if (fixed) {
    auto players = shared_players(rng, p);
    g1 = draw_game_with_players(rng, players, p);
    g2 = draw_game_with_players(rng, players, p);
  } else {
    g1 = draw_game(rng, p, 1);
    g2 = draw_game(rng, p, 1);
  }
  ConstructedGame prod = fixed ? product_fixed({g1, g2}) : product({g1, g2});
  auto scan = weak ? weak_nash_outcomes : nash_outcomes;
  const auto ne1 = scan(g1), ne2 = scan(g2);
  std::set<std::string> expected;
  for (const auto& a : ne1)
    for (const auto& b : ne2) expected.insert(tuple_label({a, b}));
  const auto observed = scan(prod.game);
  if (observed != expected)
    return fail(inputs_of({{"g1", &g1}, {"g2", &g2}}), set_text(observed),
                set_text(expected));
  return pass();
}

TrialResult coproduct_ne_trial(const GenParams& p, std::uint64_t seed,
                               bool fixed, bool weak) {
  SplitMix64 rng(seed);
  Game g1, g2;
  if (fixed) {
    auto players = shared_players(rng, p);
    g1 = draw_game_with_players(rng, players, p);
    g2 = draw_game_with_players(rng, players, p);
  } else {
    g1 = draw_game(rng, p, 1);
    g2 = draw_game(rng, p, 1);
  }
  ConstructedGame cp = fixed ? coproduct_fixed({g1, g2}) : coproduct({g1, g2});
  auto scan = weak ? weak_nash_outcomes : nash_outcomes;
  std::set<std::string> expected;
  for (const auto& o : scan(g1)) expected.insert(tagged_label(o, 0));
  for (const auto& o : scan(g2)) expected.insert(tagged_label(o, 1));
  const auto observed = scan(cp.game);
  if (observed != expected)
    return fail(inputs_of({{"g1", &g1}, {"g2", &g2}}), set_text(observed),
                set_text(expected));
  return pass();
}

TrialResult exponential_ne_trial(const GenParams& p, std::uint64_t seed,
                                 bool fixed, bool weak) {
  SplitMix64 rng(seed);
  Game g, h;
  if (fixed) {
    auto players = shared_players(rng, p);
    g = draw_game_with_players(rng, players, p, 1);
    h = draw_game_with_players(rng, players, p);
  } else {
    g = draw_game(rng, p, 1, 1);
    h = draw_game(rng, p, 1);
  }
  ConstructedGame exp;
  try {
    exp = fixed ? exponential_fixed(g, h) : exponential(g, h);
  } catch (const resource_error&) {
    return skip();
  }
  auto pred = weak ? is_weak_nash : is_nash;
  for (const auto& o2 : h.outcomes) {
    std::map<std::string, std::string> constant;
    for (const auto& o : g.outcomes) constant[o] = o2;
    const std::string label = map_label(constant);
    const bool base = pred(h, o2);
    const bool lifted = pred(exp.game, label);
    if (base != lifted)
      return fail(inputs_of({{"g", &g}, {"h", &h}}),
                  "equilibrium(" + label + ")=" + (lifted ? "true" : "false"),
                  std::string("equilibrium(") + o2 +
                      ")=" + (base ? "true" : "false"));
  }
  return pass();
}

TrialResult pushout_ne_trial(const GenParams& p, std::uint64_t seed) {
  SplitMix64 rng(seed);
  const std::size_t span = p.max_players >= 1 ? p.max_players : 1;
  const std::size_t n1 = 1 + rng.below(span);
  const std::size_t n2 = 1 + rng.below(span);
  const std::size_t overlap = 1 + rng.below(std::min(n1, n2));
  std::vector<std::string> players1, players2;
  for (std::size_t i = 0; i < n1; ++i)
    players1.push_back("p" + std::to_string(i));
  for (std::size_t i = n1 - overlap; i < n1 - overlap + n2; ++i)
    players2.push_back("p" + std::to_string(i));
  Game g1 = draw_game_with_players(rng, players1, p);
  Game g2 = draw_game_with_players(rng, players2, p);

  ConstructedGame po = pushout_shared_players(g1, g2);
  std::set<std::string> expected;
  for (const auto& o : nash_outcomes(g1)) expected.insert(tagged_label(o, 0));
  for (const auto& o : nash_outcomes(g2)) expected.insert(tagged_label(o, 1));
  const auto observed = nash_outcomes(po.game);
  if (observed != expected)
    return fail(inputs_of({{"g1", &g1}, {"g2", &g2}}), set_text(observed),
                set_text(expected));
  return pass();
}

TrialResult lemma_nash_trial(const GenParams& p, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Game g1 = draw_game(rng, p);
  Game g2 = draw_game(rng, p);
  std::vector<Morphism> homs;
  try {
    homs = enumerate_hom(g1, g2);
  } catch (const resource_error&) {
    return skip();
  }
  for (const auto& m : homs) {
    if (lemma_nash_check(m).applies && !preserves_ne(m))
      return fail(json{{"morphism", morphism_to_json(m)}},
                  "preserves_ne=false", "applies => preserves_ne=true");
  }
  return pass();
}

TrialResult nash_implies_weak_trial(const GenParams& p, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Game g = draw_game(rng, p);
  for (const auto& o : g.outcomes)
    if (is_nash(g, o) && !is_weak_nash(g, o))
      return fail(inputs_of({{"g", &g}}), "is_weak_nash(" + o + ")=false",
                  "nash implies weak");
  return pass();
}

TrialResult phi_ne_fixed_point_trial(const GenParams& p, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Game g = draw_game(rng, p);
  if (!is_ne_object(phi_ne(g).game))
    return fail(inputs_of({{"g", &g}}), "is_ne_object(phi_ne(g))=false",
                "true");
  return pass();
}

TrialResult gam_ne_composition_trial(const GenParams& p, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Game g1 = draw_game(rng, p);
  Game g2 = draw_game(rng, p);
  Game g3 = draw_game(rng, p);
  std::vector<Morphism> homs12, homs23;
  try {
    homs12 = enumerate_hom(g1, g2);
    homs23 = enumerate_hom(g2, g3);
  } catch (const resource_error&) {
    return skip();
  }
  std::vector<const Morphism*> keep12, keep23;
  for (const auto& m : homs12)
    if (preserves_ne(m)) keep12.push_back(&m);
  for (const auto& m : homs23)
    if (preserves_ne(m)) keep23.push_back(&m);
  for (const auto* f : keep12)
    for (const auto* h : keep23)
      if (!preserves_ne(compose(*f, *h)))
        return fail(json{{"f", morphism_to_json(*f)},
                         {"g", morphism_to_json(*h)}},
                    "preserves_ne(compose)=false", "true");
  return pass();
}

TrialResult morphisms_preserve_ne_trial(const GenParams& p,
                                        std::uint64_t seed,
                                        std::uint64_t trial_index) {
  // Negative control. Trial 0 is the two-game counterexample: identity
  // between the discrete pair and the opposed-preferences pair.
  if (trial_index == 0) {
    Morphism m = fixtures::ne_counterexample_morphism();
    if (!preserves_ne(m))
      return fail(json{{"morphism", morphism_to_json(m)}},
                  "preserves_ne=false", "preserves_ne=true");
    return pass();
  }
  SplitMix64 rng(seed);
  Game g1 = draw_game(rng, p);
  Game g2 = draw_game(rng, p);
  std::vector<Morphism> homs;
  try {
    homs = enumerate_hom(g1, g2);
  } catch (const resource_error&) {
    return skip();
  }
  for (const auto& m : homs)
    if (!preserves_ne(m))
      return fail(json{{"morphism", morphism_to_json(m)}},
                  "preserves_ne=false", "preserves_ne=true");
  return pass();
}

// ---- universal properties -------------------------------------------------

TrialResult product_universal_trial(const GenParams& p, std::uint64_t seed,
                                    bool fixed) {
  SplitMix64 rng(seed);
  Game x, g1, g2;
  ConstructedGame prod;
  if (fixed) {
    auto players = shared_players(rng, p);
    x = draw_game_with_players(rng, players, p);
    g1 = draw_game_with_players(rng, players, p);
    g2 = draw_game_with_players(rng, players, p);
    prod = product_fixed({g1, g2});
  } else {
    x = draw_game(rng, p);
    g1 = draw_game(rng, p);
    g2 = draw_game(rng, p);
    prod = product({g1, g2});
  }
  std::vector<Morphism> to_g1, to_g2, to_prod;
  try {
    to_g1 = fixed ? enumerate_hom_fixed(x, g1) : enumerate_hom(x, g1);
    to_g2 = fixed ? enumerate_hom_fixed(x, g2) : enumerate_hom(x, g2);
    to_prod =
        fixed ? enumerate_hom_fixed(x, prod.game) : enumerate_hom(x, prod.game);
  } catch (const resource_error&) {
    return skip();
  }
  const json inputs = inputs_of({{"x", &x}, {"g1", &g1}, {"g2", &g2}});
  const Morphism& pi0 = prod.legs.at("pi0");
  const Morphism& pi1 = prod.legs.at("pi1");

  // Composition with the projections must pair morphisms bijectively.
  std::set<std::string> seen;
  for (const auto& v : to_prod) {
    const std::string key = sig(compose(v, pi0)) + "|" + sig(compose(v, pi1));
    if (!seen.insert(key).second)
      return fail(inputs, "two morphisms share the cone " + key,
                  "unique mediating morphism");
  }
  if (to_prod.size() != to_g1.size() * to_g2.size())
    return fail(inputs, "hom(x,prod)=" + std::to_string(to_prod.size()),
                "hom(x,g1)*hom(x,g2)=" +
                    std::to_string(to_g1.size() * to_g2.size()));
  for (const auto& f1 : to_g1)
    for (const auto& f2 : to_g2) {
      Morphism u = pair_mediate(x, {f1, f2}, prod);
      if (!check_morphism(u).empty())
        return fail(inputs, "mediating morphism invalid for " + sig(f1) +
                                " , " + sig(f2),
                    "valid");
      if (!(compose(u, pi0) == f1) || !(compose(u, pi1) == f2))
        return fail(inputs, "projections do not recover the cone of " +
                                sig(u),
                    "pi_s . u = leg_s");
    }
  return pass();
}

TrialResult coproduct_universal_trial(const GenParams& p, std::uint64_t seed,
                                      bool fixed) {
  SplitMix64 rng(seed);
  Game y, g1, g2;
  ConstructedGame cp;
  if (fixed) {
    auto players = shared_players(rng, p);
    y = draw_game_with_players(rng, players, p);
    g1 = draw_game_with_players(rng, players, p);
    g2 = draw_game_with_players(rng, players, p);
    cp = coproduct_fixed({g1, g2});
  } else {
    y = draw_game(rng, p);
    g1 = draw_game(rng, p);
    g2 = draw_game(rng, p);
    cp = coproduct({g1, g2});
  }
  std::vector<Morphism> from_g1, from_g2, from_cp;
  try {
    from_g1 = fixed ? enumerate_hom_fixed(g1, y) : enumerate_hom(g1, y);
    from_g2 = fixed ? enumerate_hom_fixed(g2, y) : enumerate_hom(g2, y);
    from_cp =
        fixed ? enumerate_hom_fixed(cp.game, y) : enumerate_hom(cp.game, y);
  } catch (const resource_error&) {
    return skip();
  }
  const json inputs = inputs_of({{"y", &y}, {"g1", &g1}, {"g2", &g2}});
  const Morphism& i0 = cp.legs.at("inj0");
  const Morphism& i1 = cp.legs.at("inj1");

  std::set<std::string> seen;
  for (const auto& v : from_cp) {
    const std::string key = sig(compose(i0, v)) + "|" + sig(compose(i1, v));
    if (!seen.insert(key).second)
      return fail(inputs, "two morphisms share the cocone " + key,
                  "unique mediating morphism");
  }
  if (from_cp.size() != from_g1.size() * from_g2.size())
    return fail(inputs, "hom(coprod,y)=" + std::to_string(from_cp.size()),
                "hom(g1,y)*hom(g2,y)=" +
                    std::to_string(from_g1.size() * from_g2.size()));
  for (const auto& f1 : from_g1)
    for (const auto& f2 : from_g2) {
      Morphism v = copair_mediate({f1, f2}, cp);
      if (!check_morphism(v).empty())
        return fail(inputs, "mediating morphism invalid for " + sig(f1) +
                                " , " + sig(f2),
                    "valid");
      if (!(compose(i0, v) == f1) || !(compose(i1, v) == f2))
        return fail(inputs, "injections do not recover the cocone of " +
                                sig(v),
                    "v . inj_s = leg_s");
    }
  return pass();
}

// The shared setup for (co)equalizer laws: a parallel pair plus a probe.
struct ParallelFixture {
  Game g1, g2, probe;
  Morphism f, g;
};

std::optional<ParallelFixture> draw_parallel(SplitMix64& rng,
                                             const GenParams& p) {
  ParallelFixture fx;
  fx.g1 = draw_game(rng, p);
  // Matching floors guarantee constant morphisms, so the hom set is
  // nonempty.
  fx.g2 = draw_game(rng, p, fx.g1.players.empty() ? 0 : 1,
                    fx.g1.outcomes.empty() ? 0 : 1);
  fx.probe = draw_game(rng, p);
  std::vector<Morphism> homs = enumerate_hom(fx.g1, fx.g2);
  if (homs.empty()) return std::nullopt;
  fx.f = homs.front();
  fx.g = homs.size() > 1 ? homs[1] : homs.front();
  return fx;
}

TrialResult equalizer_universal_trial(const GenParams& p, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::optional<ParallelFixture> fx;
  try {
    fx = draw_parallel(rng, p);
  } catch (const resource_error&) {
    return skip();
  }
  if (!fx) return skip();
  ConstructedGame eq = equalizer(fx->f, fx->g);
  const Morphism& e = eq.legs.at("e");

  std::vector<Morphism> forks, lifts;
  try {
    for (const auto& h : enumerate_hom(fx->probe, fx->g1))
      if (compose(h, fx->f) == compose(h, fx->g)) forks.push_back(h);
    lifts = enumerate_hom(fx->probe, eq.game);
  } catch (const resource_error&) {
    return skip();
  }
  const json inputs =
      inputs_of({{"g1", &fx->g1}, {"g2", &fx->g2}, {"probe", &fx->probe}});

  std::set<std::string> factored;
  for (const auto& u : lifts) {
    Morphism h = compose(u, e);
    if (!factored.insert(sig(h)).second)
      return fail(inputs, "two lifts share the fork " + sig(h),
                  "unique factorization");
  }
  std::set<std::string> fork_sigs;
  for (const auto& h : forks) fork_sigs.insert(sig(h));
  if (factored != fork_sigs)
    return fail(inputs, "factored=" + set_text(factored),
                "forks=" + set_text(fork_sigs));
  return pass();
}

TrialResult coequalizer_universal_trial(const GenParams& p,
                                        std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::optional<ParallelFixture> fx;
  try {
    fx = draw_parallel(rng, p);
  } catch (const resource_error&) {
    return skip();
  }
  if (!fx) return skip();
  ConstructedGame ce = coequalizer(fx->f, fx->g);
  const Morphism& q = ce.legs.at("q");

  std::vector<Morphism> coforks, lifts;
  try {
    for (const auto& m : enumerate_hom(fx->g2, fx->probe))
      if (compose(fx->f, m) == compose(fx->g, m)) coforks.push_back(m);
    lifts = enumerate_hom(ce.game, fx->probe);
  } catch (const resource_error&) {
    return skip();
  }
  const json inputs =
      inputs_of({{"g1", &fx->g1}, {"g2", &fx->g2}, {"probe", &fx->probe}});

  std::set<std::string> factored;
  for (const auto& u : lifts) {
    Morphism m = compose(q, u);
    if (!factored.insert(sig(m)).second)
      return fail(inputs, "two lifts share the cofork " + sig(m),
                  "unique factorization");
  }
  std::set<std::string> cofork_sigs;
  for (const auto& m : coforks) cofork_sigs.insert(sig(m));
  if (factored != cofork_sigs)
    return fail(inputs, "factored=" + set_text(factored),
                "coforks=" + set_text(cofork_sigs));
  return pass();
}

TrialResult curry_bijection_trial(const GenParams& p, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Game x = draw_game(rng, p);
  Game g = draw_game(rng, p);
  Game h = draw_game(rng, p);
  ConstructedGame exp, prod;
  std::vector<Morphism> transposable, transposed_space;
  try {
    exp = exponential(g, h);
    prod = product({x, g});
    transposable = enumerate_hom(prod.game, h);
    transposed_space = enumerate_hom(x, exp.game);
  } catch (const resource_error&) {
    return skip();
  }
  const json inputs = inputs_of({{"x", &x}, {"g", &g}, {"h", &h}});
  const Morphism& eval = exp.legs.at("eval");

  std::set<std::string> image;
  for (const auto& m : transposable) {
    Morphism psi;
    try {
      psi = curry(m, x, g);
    } catch (const validation_error& e) {
      return fail(inputs, std::string("curry failed: ") + e.what(),
                  "curry lands in hom(x, h^g)");
    }
    if (!check_morphism(psi).empty())
      return fail(inputs, "curry(m) is not a morphism for m=" + sig(m),
                  "valid transpose");
    if (!image.insert(sig(psi)).second)
      return fail(inputs, "two morphisms share the transpose " + sig(psi),
                  "curry injective");
    // Pointwise round trip through eval.
    for (const auto& [combined, value] : m.outcome_map) {
      // combined is "(xo|o)"; recover the pieces from the factor lists.
      bool matched = false;
      for (const auto& xo : x.outcomes)
        for (const auto& o : g.outcomes)
          if (tuple_label({xo, o}) == combined) {
            matched = true;
            const std::string via_eval = eval.outcome_map.at(
                tuple_label({psi.outcome_map.at(xo), o}));
            if (via_eval != value)
              return fail(inputs,
                          "eval(curry(m))(" + combined + ")=" + via_eval,
                          "m(" + combined + ")=" + value);
          }
      if (!matched)
        return fail(inputs, "unrecognized product outcome " + combined,
                    "product labels decompose");
    }
  }
  std::set<std::string> space;
  for (const auto& v : transposed_space) space.insert(sig(v));
  if (image != space)
    return fail(inputs, "curry image=" + set_text(image),
                "hom(x,h^g)=" + set_text(space));
  return pass();
}

// ---- core-module properties ------------------------------------------------

TrialResult closure_idempotent_trial(const GenParams& p, std::uint64_t seed) {
  SplitMix64 rng(seed);
  const std::size_t n = rng.below(p.max_outcomes + 1);
  std::vector<std::string> outcomes;
  for (std::size_t i = 0; i < n; ++i)
    outcomes.push_back("o" + std::to_string(i));
  Relation raw;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (rng.unit() < p.access_density)
        raw.insert(outcomes[i], outcomes[j]);

  const Relation a1 = closure_access(raw, outcomes);
  const Relation p1 = closure_pref(raw, outcomes);
  if (!(closure_access(a1, outcomes) == a1) ||
      !(closure_pref(p1, outcomes) == p1)) {
    json doc;
    json arr = json::array();
    for (const auto& [x, y] : raw) arr.push_back(json::array({x, y}));
    doc["pairs"] = arr;
    doc["outcomes"] = outcomes;
    return fail(doc, "closure not idempotent", "closure . closure = closure");
  }
  return pass();
}

TrialResult from_strategic_valid_trial(const GenParams& p,
                                       std::uint64_t seed) {
  SplitMix64 rng(seed);
  StrategicGame sg;
  const std::size_t players = 1 + rng.below(p.max_players ? p.max_players : 1);
  for (std::size_t i = 0; i < players; ++i)
    sg.players.push_back("p" + std::to_string(i));
  for (const auto& pl : sg.players) {
    const std::size_t acts = 1 + rng.below(2);
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < acts; ++a)
      labels.push_back(pl + "a" + std::to_string(a));
    sg.actions[pl] = std::move(labels);
  }
  std::vector<std::vector<std::string>> profiles{{}};
  for (const auto& pl : sg.players) {
    std::vector<std::vector<std::string>> next;
    for (const auto& prefix : profiles)
      for (const auto& a : sg.actions.at(pl)) {
        auto row = prefix;
        row.push_back(a);
        next.push_back(std::move(row));
      }
    profiles = std::move(next);
  }
  for (const auto& prof : profiles) {
    std::vector<Rational> row;
    for (std::size_t i = 0; i < players; ++i)
      row.emplace_back(static_cast<std::int64_t>(rng.below(7)) - 3,
                       1 + static_cast<std::int64_t>(rng.below(2)));
    sg.payoffs[prof] = std::move(row);
  }
  Game g = from_strategic(sg);
  auto violations = validate_game(g);
  if (!violations.empty())
    return fail(inputs_of({{"converted", &g}}),
                violation_text(violations.front()), "no violations");
  return pass();
}

TrialResult hom_membership_trial(const GenParams& p, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Game g1 = draw_game(rng, p);
  Game g2 = draw_game(rng, p);
  std::vector<Morphism> homs;
  try {
    homs = enumerate_hom(g1, g2);
  } catch (const resource_error&) {
    return skip();
  }
  if ((g2.players.empty() && !g1.players.empty()) ||
      (g2.outcomes.empty() && !g1.outcomes.empty()))
    return homs.empty() ? pass()
                        : fail(inputs_of({{"g1", &g1}, {"g2", &g2}}),
                               "hom set nonempty", "no total maps exist");
  // Sample a handful of arbitrary total maps and compare the checker
  // against membership in the enumeration.
  for (int t = 0; t < 8; ++t) {
    Morphism m;
    m.source = g1;
    m.target = g2;
    for (const auto& i : g1.players)
      m.player_map[i] = g2.players[rng.below(g2.players.size())];
    for (const auto& o : g1.outcomes)
      m.outcome_map[o] = g2.outcomes[rng.below(g2.outcomes.size())];
    const bool valid = check_morphism(m).empty();
    const bool member =
        std::find(homs.begin(), homs.end(), m) != homs.end();
    if (valid != member)
      return fail(json{{"morphism", morphism_to_json(m)}},
                  std::string("check=") + (valid ? "ok" : "violations") +
                      " member=" + (member ? "yes" : "no"),
                  "check agrees with membership");
  }
  return pass();
}

TrialResult composition_closed_trial(const GenParams& p, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Game g1 = draw_game(rng, p);
  Game g2 = draw_game(rng, p);
  Game g3 = draw_game(rng, p);
  std::vector<Morphism> homs12, homs23;
  try {
    homs12 = enumerate_hom(g1, g2);
    homs23 = enumerate_hom(g2, g3);
  } catch (const resource_error&) {
    return skip();
  }
  for (const auto& f : homs12)
    for (const auto& g : homs23)
      if (!check_morphism(compose(f, g)).empty())
        return fail(json{{"f", morphism_to_json(f)},
                         {"g", morphism_to_json(g)}},
                    "composite has violations", "composite is a morphism");
  return pass();
}

TrialResult monic_epic_oracle_trial(const GenParams& p, std::uint64_t seed) {
  SplitMix64 rng(seed);
  auto players = shared_players(rng, p);
  Game g1 = draw_game_with_players(rng, players, p);
  Game g2 = draw_game_with_players(rng, players, p);
  std::vector<Morphism> homs, probes_src;
  try {
    homs = enumerate_hom_fixed(g1, g2);
    probes_src = enumerate_hom_fixed(terminal_fixed(players), g1);
  } catch (const resource_error&) {
    return skip();
  }
  // Epic probe: two outcomes, every relation total.
  Relation full{{"a", "a"}, {"a", "b"}, {"b", "a"}, {"b", "b"}};
  std::map<std::string, Relation> rels;
  for (const auto& pl : players) rels[pl] = full;
  Game two = make_game(players, {"a", "b"}, rels, rels, false);
  std::vector<Morphism> probes_tgt;
  try {
    probes_tgt = enumerate_hom_fixed(g2, two);
  } catch (const resource_error&) {
    return skip();
  }

  for (const auto& m : homs) {
    const MorphismClass cls = classify_morphism(m);
    bool oracle_monic = true;
    for (const auto& x : probes_src)
      for (const auto& y : probes_src)
        if (!(x == y) && compose(x, m) == compose(y, m)) oracle_monic = false;
    bool oracle_epic = true;
    for (const auto& u : probes_tgt)
      for (const auto& v : probes_tgt)
        if (!(u == v) && compose(m, u) == compose(m, v)) oracle_epic = false;
    if (cls.monic != oracle_monic || cls.epic != oracle_epic)
      return fail(json{{"morphism", morphism_to_json(m)}},
                  std::string("monic=") + (cls.monic ? "t" : "f") +
                      " epic=" + (cls.epic ? "t" : "f"),
                  std::string("oracle monic=") + (oracle_monic ? "t" : "f") +
                      " epic=" + (oracle_epic ? "t" : "f"));
  }
  return pass();
}

TrialResult identify_singleton_trial(const GenParams& p, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Game g = draw_game(rng, p);
  std::vector<OutcomeClass> classes;
  for (const auto& o : g.outcomes) classes.push_back({{o}, ""});
  Game q = identify_outcomes(g, classes);
  Morphism m;
  m.source = g;
  m.target = q;
  for (const auto& pl : g.players) m.player_map[pl] = pl;
  for (const auto& o : g.outcomes) m.outcome_map[o] = o;
  if (!check_morphism(m).empty() || !classify_morphism(m).iso)
    return fail(inputs_of({{"g", &g}}), "singleton quotient not iso", "iso");
  return pass();
}

// ---- construction validity -------------------------------------------------

TrialResult legs_ok(const ConstructedGame& c, const json& inputs) {
  auto violations = validate_game(c.game);
  if (!violations.empty())
    return fail(inputs, c.kind + ": " + violation_text(violations.front()),
                "constructed game valid");
  for (const auto& [name, leg] : c.legs)
    if (!check_morphism(leg).empty())
      return fail(inputs, c.kind + ": leg " + name + " has violations",
                  "legs valid");
  return pass();
}

TrialResult products_valid_trial(const GenParams& p, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Game g1 = draw_game(rng, p);
  Game g2 = draw_game(rng, p);
  TrialResult r =
      legs_ok(product({g1, g2}), inputs_of({{"g1", &g1}, {"g2", &g2}}));
  if (r.status != TrialResult::kPass) return r;
  auto players = shared_players(rng, p);
  Game f1 = draw_game_with_players(rng, players, p);
  Game f2 = draw_game_with_players(rng, players, p);
  return legs_ok(product_fixed({f1, f2}),
                 inputs_of({{"g1", &f1}, {"g2", &f2}}));
}

TrialResult coproducts_valid_trial(const GenParams& p, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Game g1 = draw_game(rng, p);
  Game g2 = draw_game(rng, p);
  TrialResult r =
      legs_ok(coproduct({g1, g2}), inputs_of({{"g1", &g1}, {"g2", &g2}}));
  if (r.status != TrialResult::kPass) return r;
  auto players = shared_players(rng, p);
  Game f1 = draw_game_with_players(rng, players, p);
  Game f2 = draw_game_with_players(rng, players, p);
  return legs_ok(coproduct_fixed({f1, f2}),
                 inputs_of({{"g1", &f1}, {"g2", &f2}}));
}

TrialResult eq_coeq_valid_trial(const GenParams& p, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::optional<ParallelFixture> fx;
  try {
    fx = draw_parallel(rng, p);
  } catch (const resource_error&) {
    return skip();
  }
  if (!fx) return skip();
  const json inputs = json{{"f", morphism_to_json(fx->f)},
                           {"g", morphism_to_json(fx->g)}};
  TrialResult r = legs_ok(equalizer(fx->f, fx->g), inputs);
  if (r.status != TrialResult::kPass) return r;
  return legs_ok(coequalizer(fx->f, fx->g), inputs);
}

TrialResult coequalizer_defining_trial(const GenParams& p,
                                       std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::optional<ParallelFixture> fx;
  try {
    fx = draw_parallel(rng, p);
  } catch (const resource_error&) {
    return skip();
  }
  if (!fx) return skip();
  ConstructedGame ce = coequalizer(fx->f, fx->g);
  if (!(compose(fx->f, ce.legs.at("q")) == compose(fx->g, ce.legs.at("q"))))
    return fail(json{{"f", morphism_to_json(fx->f)},
                     {"g", morphism_to_json(fx->g)}},
                "q.f != q.g", "q.f = q.g");
  return pass();
}

TrialResult pushout_trial(const GenParams& p, std::uint64_t seed,
                          bool check_commute) {
  SplitMix64 rng(seed);
  const std::size_t span = p.max_players >= 1 ? p.max_players : 1;
  const std::size_t n1 = 1 + rng.below(span);
  const std::size_t n2 = 1 + rng.below(span);
  const std::size_t overlap = 1 + rng.below(std::min(n1, n2));
  std::vector<std::string> players1, players2;
  for (std::size_t i = 0; i < n1; ++i)
    players1.push_back("p" + std::to_string(i));
  for (std::size_t i = n1 - overlap; i < n1 - overlap + n2; ++i)
    players2.push_back("p" + std::to_string(i));
  Game g1 = draw_game_with_players(rng, players1, p);
  Game g2 = draw_game_with_players(rng, players2, p);
  ConstructedGame po = pushout_shared_players(g1, g2);
  const json inputs = inputs_of({{"g1", &g1}, {"g2", &g2}});
  if (!check_commute) return legs_ok(po, inputs);

  std::vector<std::string> shared;
  for (const auto& pl : g1.players)
    if (g2.has_player(pl)) shared.push_back(pl);
  std::sort(shared.begin(), shared.end());
  Morphism left = compose(include_player_game(shared, g1), po.legs.at("inj0"));
  Morphism right =
      compose(include_player_game(shared, g2), po.legs.at("inj1"));
  if (!(left == right))
    return fail(inputs, "inj0 . incl != inj1 . incl", "legs commute over the "
                                                      "shared players");
  return pass();
}

TrialResult exponential_fixed_relations_trial(const GenParams& p,
                                              std::uint64_t seed) {
  SplitMix64 rng(seed);
  auto players = shared_players(rng, p);
  Game g = draw_game_with_players(rng, players, p);
  Game h = draw_game_with_players(rng, players, p);
  ConstructedGame exp;
  try {
    exp = exponential_fixed(g, h);
  } catch (const resource_error&) {
    return skip();
  }
  auto violations = validate_game(exp.game);
  if (!violations.empty())
    return fail(inputs_of({{"g", &g}, {"h", &h}}),
                violation_text(violations.front()),
                "lifted relations reflexive-symmetric / preorder");
  return legs_ok(exp, inputs_of({{"g", &g}, {"h", &h}}));
}

TrialResult exponential_valid_trial(const GenParams& p, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Game g = draw_game(rng, p);
  Game h = draw_game(rng, p);
  ConstructedGame exp;
  try {
    exp = exponential(g, h);
  } catch (const resource_error&) {
    return skip();
  }
  return legs_ok(exp, inputs_of({{"g", &g}, {"h", &h}}));
}

TrialResult constant_embedding_trial(const GenParams& p, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Game g = draw_game(rng, p, 0, 1);
  // The constants occur in the hom set only when player maps exist at
  // all, so h keeps at least one player whenever g has one.
  Game h = draw_game(rng, p, g.players.empty() ? 0 : 1, 1);
  const json inputs = inputs_of({{"g", &g}, {"h", &h}});
  Morphism psi;
  try {
    psi = constant_embedding(g, h);
  } catch (const resource_error&) {
    return skip();
  }
  if (!check_morphism(psi).empty())
    return fail(inputs, "embedding has violations", "embedding valid");
  std::set<std::string> image;
  for (const auto& [_, v] : psi.outcome_map) image.insert(v);
  if (image.size() != h.outcomes.size())
    return fail(inputs, "embedding not injective on outcomes", "injective");

  // Fixed variant over a shared player set.
  auto players = shared_players(rng, p);
  Game fg = draw_game_with_players(rng, players, p, 1);
  Game fh = draw_game_with_players(rng, players, p, 1);
  Morphism fpsi;
  try {
    fpsi = constant_embedding_fixed(fg, fh);
  } catch (const resource_error&) {
    return skip();
  }
  if (!check_morphism(fpsi).empty())
    return fail(inputs_of({{"g", &fg}, {"h", &fh}}),
                "fixed embedding has violations", "embedding valid");
  return pass();
}

TrialResult pushforward_trial(const GenParams& p, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Game g = draw_game(rng, p);
  const std::size_t span = p.max_players >= 1 ? p.max_players : 1;
  const std::size_t nj = 1 + rng.below(span);
  std::vector<std::string> targets;
  for (std::size_t i = 0; i < nj; ++i)
    targets.push_back("q" + std::to_string(i));
  std::map<std::string, std::string> f;
  for (const auto& i : g.players) f[i] = targets[rng.below(nj)];

  Game pf = pushforward_players(g, f, targets);
  const json inputs = inputs_of({{"g", &g}});
  auto violations = validate_game(pf);
  if (!violations.empty())
    return fail(inputs, violation_text(violations.front()),
                "pushforward valid");
  Morphism m;
  m.source = g;
  m.target = pf;
  m.player_map = f;
  for (const auto& o : g.outcomes) m.outcome_map[o] = o;
  if (!check_morphism(m).empty())
    return fail(inputs, "(f, id) is not a morphism", "(f, id) is a morphism");
  return pass();
}

// ---- registry ---------------------------------------------------------------

const std::map<std::string, TrialFn>& registry() {
  static const std::map<std::string, TrialFn> laws = [] {
    std::map<std::string, TrialFn> m;
    auto add = [&m](const std::string& name, TrialFn fn) {
      m.emplace(name, std::move(fn));
    };

    add("product_ne", [](const GenParams& p, std::uint64_t s) {
      return product_ne_trial(p, s, false, false);
    });
    add("product_ne_fixed", [](const GenParams& p, std::uint64_t s) {
      return product_ne_trial(p, s, true, false);
    });
    add("product_wne", [](const GenParams& p, std::uint64_t s) {
      return product_ne_trial(p, s, false, true);
    });
    add("coproduct_ne", [](const GenParams& p, std::uint64_t s) {
      return coproduct_ne_trial(p, s, false, false);
    });
    add("coproduct_ne_fixed", [](const GenParams& p, std::uint64_t s) {
      return coproduct_ne_trial(p, s, true, false);
    });
    add("coproduct_wne", [](const GenParams& p, std::uint64_t s) {
      return coproduct_ne_trial(p, s, false, true);
    });
    add("exponential_ne", [](const GenParams& p, std::uint64_t s) {
      return exponential_ne_trial(p, s, false, false);
    });
    add("exponential_ne_fixed", [](const GenParams& p, std::uint64_t s) {
      return exponential_ne_trial(p, s, true, false);
    });
    add("exponential_wne", [](const GenParams& p, std::uint64_t s) {
      return exponential_ne_trial(p, s, false, true);
    });
    add("pushout_ne", [](const GenParams& p, std::uint64_t s) {
      return pushout_ne_trial(p, s);
    });
    add("lemma_nash_soundness", [](const GenParams& p, std::uint64_t s) {
      return lemma_nash_trial(p, s);
    });
    add("nash_implies_weak", [](const GenParams& p, std::uint64_t s) {
      return nash_implies_weak_trial(p, s);
    });
    add("phi_ne_fixed_point", [](const GenParams& p, std::uint64_t s) {
      return phi_ne_fixed_point_trial(p, s);
    });
    add("gam_ne_composition", [](const GenParams& p, std::uint64_t s) {
      return gam_ne_composition_trial(p, s);
    });

    add("product_universal", [](const GenParams& p, std::uint64_t s) {
      return product_universal_trial(p, s, false);
    });
    add("product_universal_fixed", [](const GenParams& p, std::uint64_t s) {
      return product_universal_trial(p, s, true);
    });
    add("coproduct_universal", [](const GenParams& p, std::uint64_t s) {
      return coproduct_universal_trial(p, s, false);
    });
    add("coproduct_universal_fixed", [](const GenParams& p, std::uint64_t s) {
      return coproduct_universal_trial(p, s, true);
    });
    add("equalizer_universal", [](const GenParams& p, std::uint64_t s) {
      return equalizer_universal_trial(p, s);
    });
    add("coequalizer_universal", [](const GenParams& p, std::uint64_t s) {
      return coequalizer_universal_trial(p, s);
    });
    add("exponential_curry_bijection", [](const GenParams& p,
                                          std::uint64_t s) {
      return curry_bijection_trial(p, s);
    });

    add("closure_idempotent", [](const GenParams& p, std::uint64_t s) {
      return closure_idempotent_trial(p, s);
    });
    add("from_strategic_valid", [](const GenParams& p, std::uint64_t s) {
      return from_strategic_valid_trial(p, s);
    });
    add("hom_membership_oracle", [](const GenParams& p, std::uint64_t s) {
      return hom_membership_trial(p, s);
    });
    add("composition_closed", [](const GenParams& p, std::uint64_t s) {
      return composition_closed_trial(p, s);
    });
    add("monic_epic_oracle", [](const GenParams& p, std::uint64_t s) {
      return monic_epic_oracle_trial(p, s);
    });
    add("identify_singleton_iso", [](const GenParams& p, std::uint64_t s) {
      return identify_singleton_trial(p, s);
    });

    add("products_valid", [](const GenParams& p, std::uint64_t s) {
      return products_valid_trial(p, s);
    });
    add("coproducts_valid", [](const GenParams& p, std::uint64_t s) {
      return coproducts_valid_trial(p, s);
    });
    add("eq_coeq_valid", [](const GenParams& p, std::uint64_t s) {
      return eq_coeq_valid_trial(p, s);
    });
    add("coequalizer_defining", [](const GenParams& p, std::uint64_t s) {
      return coequalizer_defining_trial(p, s);
    });
    add("pushout_valid", [](const GenParams& p, std::uint64_t s) {
      return pushout_trial(p, s, false);
    });
    add("pushout_legs_commute", [](const GenParams& p, std::uint64_t s) {
      return pushout_trial(p, s, true);
    });
    add("exponential_fixed_relations", [](const GenParams& p,
                                          std::uint64_t s) {
      return exponential_fixed_relations_trial(p, s);
    });
    add("exponential_valid", [](const GenParams& p, std::uint64_t s) {
      return exponential_valid_trial(p, s);
    });
    add("constant_embedding_valid", [](const GenParams& p, std::uint64_t s) {
      return constant_embedding_trial(p, s);
    });
    add("pushforward_morphism", [](const GenParams& p, std::uint64_t s) {
      return pushforward_trial(p, s);
    });
    return m;
  }();
  return laws;
}

}  // namespace

std::vector<std::string> law_catalog() {
  std::vector<std::string> out;
  out.reserve(registry().size() + 1);
  for (const auto& [name, _] : registry()) out.push_back(name);
  out.push_back("morphisms_preserve_ne");
  std::sort(out.begin(), out.end());
  return out;
}

VerifyReport check_law(const std::string& law, const GenParams& p,
                       std::size_t trials) {
  VerifyReport report;
  report.law = law;
  report.seed = p.seed;
  report.trials = trials;

  const bool negative_control = law == "morphisms_preserve_ne";
  auto it = registry().find(law);
  if (!negative_control && it == registry().end())
    throw validation_error("check_law: unknown law '" + law + "'");

  for (std::size_t k = 0; k < trials; ++k) {
    const std::uint64_t trial_seed = p.seed + k;
    TrialResult r;
    try {
      r = negative_control ? morphisms_preserve_ne_trial(p, trial_seed, k)
                           : it->second(p, trial_seed);
    } catch (const resource_error&) {
      r = skip();
    } catch (const error& e) {
      r = fail(json{{"error", e.what()}}, std::string("exception: ") + e.what(),
               "no exception");
    }
    switch (r.status) {
      case TrialResult::kPass:
        break;
      case TrialResult::kSkip:
        ++report.skipped;
        break;
      case TrialResult::kFail:
        r.failure.trial = k;
        report.failures.push_back(std::move(r.failure));
        break;
    }
  }
  return report;
}

std::string report_to_json(const VerifyReport& r) {
  json doc;
  doc["law"] = r.law;
  doc["seed"] = r.seed;
  doc["trials"] = r.trials;
  doc["skipped"] = r.skipped;
  json failures = json::array();
  for (const auto& f : r.failures) {
    json item;
    item["trial"] = f.trial;
    item["inputs"] = json::parse(f.inputs);
    item["observed"] = f.observed;
    item["expected"] = f.expected;
    failures.push_back(std::move(item));
  }
  doc["failures"] = std::move(failures);
  return doc.dump(2) + "\n";
}

}  // namespace gamecat
