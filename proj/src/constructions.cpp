#include "gamecat/constructions.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "gamecat/error.hpp"

namespace gamecat {

std::string tuple_label(const std::vector<std::string>& parts) {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += "|";
    out += parts[i];
  }
  return out + ")";
}

std::string tagged_label(const std::string& id, std::size_t tag) {
  return id + "@" + std::to_string(tag);
}

std::string map_label(const std::map<std::string, std::string>& m) {
  if (m.empty()) return "∅";
  std::string out;
  for (const auto& [k, v] : m) {
    if (!out.empty()) out += ";";
    out += k + "↦" + v;
  }
  return out;
}

namespace {

void require_unique(const std::vector<std::string>& ids,
                    const std::string& what) {
  std::unordered_set<std::string> seen;
  for (const auto& id : ids)
    if (!seen.insert(id).second)
      throw validation_error(what + ": composite label collision on '" + id +
                             "'");
}

// Index tuples over the given dimensions, row-major (first factor most
// significant). dims empty yields the single empty tuple.
std::vector<std::vector<std::size_t>> index_tuples(
    const std::vector<std::size_t>& dims) {
  std::vector<std::vector<std::size_t>> out{{}};
  for (std::size_t d : dims) {
    std::vector<std::vector<std::size_t>> next;
    next.reserve(out.size() * d);
    for (const auto& prefix : out)
      for (std::size_t k = 0; k < d; ++k) {
        auto row = prefix;
        row.push_back(k);
        next.push_back(std::move(row));
      }
    out = std::move(next);
  }
  return out;
}

std::vector<std::size_t> outcome_dims(const std::vector<Game>& gs) {
  std::vector<std::size_t> dims;
  for (const auto& g : gs) dims.push_back(g.outcomes.size());
  return dims;
}

std::string tuple_of(const std::vector<Game>& gs,
                     const std::vector<std::size_t>& idx, bool players) {
  std::vector<std::string> parts;
  for (std::size_t s = 0; s < gs.size(); ++s)
    parts.push_back(players ? gs[s].players[idx[s]] : gs[s].outcomes[idx[s]]);
  return tuple_label(parts);
}

}  // namespace

ConstructedGame product_fixed(const std::vector<Game>& gs) {
  if (gs.empty())
    throw validation_error("product_fixed: empty family (player set would be "
                           "undetermined)");
  for (const auto& g : gs)
    if (g.players != gs.front().players)
      throw validation_error("product_fixed: factors must share the player "
                             "list");

  ConstructedGame out;
  out.kind = "product_fixed";
  out.factors = gs;

  const auto tuples = index_tuples(outcome_dims(gs));
  Game& prod = out.game;
  prod.players = gs.front().players;
  for (const auto& t : tuples) prod.outcomes.push_back(tuple_of(gs, t, false));
  require_unique(prod.outcomes, "product_fixed");

  for (const auto& p : prod.players) {
    std::vector<Relation::Pair> acc, prf;
    for (const auto& u : tuples)
      for (const auto& v : tuples) {
        bool a = true, r = true;
        for (std::size_t s = 0; s < gs.size() && (a || r); ++s) {
          const auto& ou = gs[s].outcomes[u[s]];
          const auto& ov = gs[s].outcomes[v[s]];
          if (a && !gs[s].access.at(p).contains(ou, ov)) a = false;
          if (r && !gs[s].prefs.at(p).contains(ou, ov)) r = false;
        }
        if (a) acc.emplace_back(tuple_of(gs, u, false), tuple_of(gs, v, false));
        if (r) prf.emplace_back(tuple_of(gs, u, false), tuple_of(gs, v, false));
      }
    prod.access[p] = Relation(std::move(acc));
    prod.prefs[p] = Relation(std::move(prf));
  }

  for (std::size_t s = 0; s < gs.size(); ++s) {
    Morphism pi;
    pi.source = prod;
    pi.target = gs[s];
    for (const auto& p : prod.players) pi.player_map[p] = p;
    for (const auto& t : tuples)
      pi.outcome_map[tuple_of(gs, t, false)] = gs[s].outcomes[t[s]];
    out.legs["pi" + std::to_string(s)] = std::move(pi);
  }
  return out;
}

ConstructedGame product(const std::vector<Game>& gs) {
  ConstructedGame out;
  out.kind = "product";
  out.factors = gs;
  if (gs.empty()) {  // nullary product is the terminal game
    out.game = terminal();
    return out;
  }

  std::vector<std::size_t> pdims;
  for (const auto& g : gs) pdims.push_back(g.players.size());
  const auto ptuples = index_tuples(pdims);
  const auto otuples = index_tuples(outcome_dims(gs));

  Game& prod = out.game;
  for (const auto& t : ptuples) prod.players.push_back(tuple_of(gs, t, true));
  for (const auto& t : otuples) prod.outcomes.push_back(tuple_of(gs, t, false));
  require_unique(prod.players, "product");
  require_unique(prod.outcomes, "product");

  for (const auto& pt : ptuples) {
    const std::string alpha = tuple_of(gs, pt, true);
    std::vector<Relation::Pair> acc, prf;
    for (const auto& u : otuples)
      for (const auto& v : otuples) {
        bool a = true, r = true;
        for (std::size_t s = 0; s < gs.size() && (a || r); ++s) {
          const auto& player = gs[s].players[pt[s]];
          const auto& ou = gs[s].outcomes[u[s]];
          const auto& ov = gs[s].outcomes[v[s]];
          if (a && !gs[s].access.at(player).contains(ou, ov)) a = false;
          if (r && !gs[s].prefs.at(player).contains(ou, ov)) r = false;
        }
        if (a) acc.emplace_back(tuple_of(gs, u, false), tuple_of(gs, v, false));
        if (r) prf.emplace_back(tuple_of(gs, u, false), tuple_of(gs, v, false));
      }
    prod.access[alpha] = Relation(std::move(acc));
    prod.prefs[alpha] = Relation(std::move(prf));
  }

  for (std::size_t s = 0; s < gs.size(); ++s) {
    Morphism pi;
    pi.source = prod;
    pi.target = gs[s];
    for (const auto& t : ptuples)
      pi.player_map[tuple_of(gs, t, true)] = gs[s].players[t[s]];
    for (const auto& t : otuples)
      pi.outcome_map[tuple_of(gs, t, false)] = gs[s].outcomes[t[s]];
    out.legs["pi" + std::to_string(s)] = std::move(pi);
  }
  return out;
}

Morphism pair_mediate(const Game& x, const std::vector<Morphism>& legs,
                      const ConstructedGame& prod) {
  if (prod.kind != "product" && prod.kind != "product_fixed")
    throw validation_error("pair_mediate: not a product");
  if (legs.size() != prod.factors.size())
    throw validation_error("pair_mediate: cone size does not match factors");
  for (std::size_t s = 0; s < legs.size(); ++s) {
    if (!(legs[s].source == x))
      throw validation_error("pair_mediate: leg source is not the apex");
    if (!(legs[s].target == prod.factors[s]))
      throw validation_error("pair_mediate: leg target is not factor " +
                             std::to_string(s));
    if (!check_morphism(legs[s]).empty())
      throw validation_error("pair_mediate: leg " + std::to_string(s) +
                             " is not a morphism");
  }
  if (legs.empty()) return unique_to_terminal(x);  // nullary product

  Morphism u;
  u.source = x;
  u.target = prod.game;
  if (prod.kind == "product_fixed") {
    // All legs live over the shared player set; their player maps agree.
    for (std::size_t s = 1; s < legs.size(); ++s)
      if (legs[s].player_map != legs.front().player_map)
        throw validation_error("pair_mediate: legs disagree on players");
    u.player_map = legs.front().player_map;
  } else {
    for (const auto& l : x.players) {
      std::vector<std::string> parts;
      for (const auto& leg : legs) parts.push_back(leg.player_map.at(l));
      u.player_map[l] = tuple_label(parts);
    }
  }
  for (const auto& o : x.outcomes) {
    std::vector<std::string> parts;
    for (const auto& leg : legs) parts.push_back(leg.outcome_map.at(o));
    u.outcome_map[o] = tuple_label(parts);
  }
  return u;
}

ConstructedGame coproduct_fixed(const std::vector<Game>& gs) {
  if (gs.empty())
    throw validation_error("coproduct_fixed: empty family (player set would "
                           "be undetermined)");
  for (const auto& g : gs)
    if (g.players != gs.front().players)
      throw validation_error("coproduct_fixed: factors must share the player "
                             "list");

  ConstructedGame out;
  out.kind = "coproduct_fixed";
  out.factors = gs;
  Game& cp = out.game;
  cp.players = gs.front().players;
  for (std::size_t s = 0; s < gs.size(); ++s)
    for (const auto& o : gs[s].outcomes)
      cp.outcomes.push_back(tagged_label(o, s));
  require_unique(cp.outcomes, "coproduct_fixed");

  for (const auto& p : cp.players) {
    std::vector<Relation::Pair> acc, prf;
    for (std::size_t s = 0; s < gs.size(); ++s) {
      for (const auto& [a, b] : gs[s].access.at(p))
        acc.emplace_back(tagged_label(a, s), tagged_label(b, s));
      for (const auto& [a, b] : gs[s].prefs.at(p))
        prf.emplace_back(tagged_label(a, s), tagged_label(b, s));
    }
    cp.access[p] = Relation(std::move(acc));
    cp.prefs[p] = Relation(std::move(prf));
  }

  for (std::size_t s = 0; s < gs.size(); ++s) {
    Morphism inj;
    inj.source = gs[s];
    inj.target = cp;
    for (const auto& p : cp.players) inj.player_map[p] = p;
    for (const auto& o : gs[s].outcomes)
      inj.outcome_map[o] = tagged_label(o, s);
    out.legs["inj" + std::to_string(s)] = std::move(inj);
  }
  return out;
}

ConstructedGame coproduct(const std::vector<Game>& gs) {
  ConstructedGame out;
  out.kind = "coproduct";
  out.factors = gs;
  Game& cp = out.game;
  for (std::size_t s = 0; s < gs.size(); ++s) {
    for (const auto& p : gs[s].players)
      cp.players.push_back(tagged_label(p, s));
    for (const auto& o : gs[s].outcomes)
      cp.outcomes.push_back(tagged_label(o, s));
  }
  require_unique(cp.players, "coproduct");
  require_unique(cp.outcomes, "coproduct");

  // Every player keeps their own relations and gets the identity
  // (loops only) on all foreign outcomes.
  for (std::size_t s = 0; s < gs.size(); ++s)
    for (const auto& p : gs[s].players) {
      std::vector<Relation::Pair> acc, prf;
      for (const auto& [a, b] : gs[s].access.at(p))
        acc.emplace_back(tagged_label(a, s), tagged_label(b, s));
      for (const auto& [a, b] : gs[s].prefs.at(p))
        prf.emplace_back(tagged_label(a, s), tagged_label(b, s));
      for (const auto& o : cp.outcomes) {
        acc.emplace_back(o, o);
        prf.emplace_back(o, o);
      }
      cp.access[tagged_label(p, s)] = Relation(std::move(acc));
      cp.prefs[tagged_label(p, s)] = Relation(std::move(prf));
    }

  for (std::size_t s = 0; s < gs.size(); ++s) {
    Morphism inj;
    inj.source = gs[s];
    inj.target = cp;
    for (const auto& p : gs[s].players) inj.player_map[p] = tagged_label(p, s);
    for (const auto& o : gs[s].outcomes)
      inj.outcome_map[o] = tagged_label(o, s);
    out.legs["inj" + std::to_string(s)] = std::move(inj);
  }
  return out;
}

Morphism copair_mediate(const std::vector<Morphism>& legs,
                        const ConstructedGame& coprod) {
  if (coprod.kind != "coproduct" && coprod.kind != "coproduct_fixed")
    throw validation_error("copair_mediate: not a coproduct");
  if (legs.size() != coprod.factors.size())
    throw validation_error("copair_mediate: cocone size does not match "
                           "factors");
  if (legs.empty())
    throw validation_error("copair_mediate: empty cocone has no target");
  for (std::size_t s = 0; s < legs.size(); ++s) {
    if (!(legs[s].source == coprod.factors[s]))
      throw validation_error("copair_mediate: leg source is not factor " +
                             std::to_string(s));
    if (!(legs[s].target == legs.front().target))
      throw validation_error("copair_mediate: legs disagree on the target");
    if (!check_morphism(legs[s]).empty())
      throw validation_error("copair_mediate: leg " + std::to_string(s) +
                             " is not a morphism");
  }

  Morphism v;
  v.source = coprod.game;
  v.target = legs.front().target;
  if (coprod.kind == "coproduct_fixed") {
    for (std::size_t s = 1; s < legs.size(); ++s)
      if (legs[s].player_map != legs.front().player_map)
        throw validation_error("copair_mediate: legs disagree on players");
    v.player_map = legs.front().player_map;
  } else {
    for (std::size_t s = 0; s < legs.size(); ++s)
      for (const auto& p : coprod.factors[s].players)
        v.player_map[tagged_label(p, s)] = legs[s].player_map.at(p);
  }
  for (std::size_t s = 0; s < legs.size(); ++s)
    for (const auto& o : coprod.factors[s].outcomes)
      v.outcome_map[tagged_label(o, s)] = legs[s].outcome_map.at(o);
  return v;
}

namespace {

void require_parallel(const Morphism& f, const Morphism& g,
                      const std::string& what) {
  if (!(f.source == g.source) || !(f.target == g.target))
    throw validation_error(what + ": morphisms are not parallel");
  // Totality of the maps; preservation violations are not needed here.
  check_morphism(f);
  check_morphism(g);
}

}  // namespace

ConstructedGame equalizer(const Morphism& f, const Morphism& g) {
  require_parallel(f, g, "equalizer");
  const Game& src = f.source;

  ConstructedGame out;
  out.kind = "equalizer";
  out.factors = {src};
  Game& eq = out.game;
  for (const auto& i : src.players)
    if (f.player_map.at(i) == g.player_map.at(i)) eq.players.push_back(i);
  for (const auto& o : src.outcomes)
    if (f.outcome_map.at(o) == g.outcome_map.at(o)) eq.outcomes.push_back(o);
  for (const auto& i : eq.players) {
    eq.access[i] = restrict_relation(src.access.at(i), eq.outcomes);
    eq.prefs[i] = restrict_relation(src.prefs.at(i), eq.outcomes);
  }

  Morphism e;
  e.source = eq;
  e.target = src;
  for (const auto& i : eq.players) e.player_map[i] = i;
  for (const auto& o : eq.outcomes) e.outcome_map[o] = o;
  out.legs["e"] = std::move(e);
  return out;
}

namespace {

// Plain union-find over identifier strings.
class UnionFind {
 public:
  explicit UnionFind(const std::vector<std::string>& ids) {
    for (const auto& id : ids) parent_.emplace(id, id);
  }
  const std::string& find(const std::string& x) {
    auto& p = parent_.at(x);
    if (p == x) return p;
    p = find(p);
    return p;
  }
  void unite(const std::string& a, const std::string& b) {
    const std::string ra = find(a), rb = find(b);
    if (ra != rb) parent_.at(ra) = rb;
  }
  // Lexicographically least member of each class.
  std::map<std::string, std::string> representatives() {
    std::map<std::string, std::string> least;  // root -> least member
    for (const auto& [id, _] : parent_) {
      const std::string& r = find(id);
      auto it = least.find(r);
      if (it == least.end() || id < it->second) least[r] = id;
    }
    std::map<std::string, std::string> out;  // member -> class label
    for (const auto& [id, _] : parent_) out[id] = least.at(find(id));
    return out;
  }

 private:
  std::map<std::string, std::string> parent_;
};

}  // namespace

ConstructedGame coequalizer(const Morphism& f, const Morphism& g) {
  require_parallel(f, g, "coequalizer");
  const Game& tgt = f.target;

  UnionFind players(tgt.players);
  for (const auto& i : f.source.players)
    players.unite(f.player_map.at(i), g.player_map.at(i));
  UnionFind outcomes(tgt.outcomes);
  for (const auto& o : f.source.outcomes)
    outcomes.unite(f.outcome_map.at(o), g.outcome_map.at(o));

  const auto prep = players.representatives();
  const auto orep = outcomes.representatives();

  ConstructedGame out;
  out.kind = "coequalizer";
  out.factors = {tgt};
  Game& q = out.game;
  {
    std::set<std::string> ps, os;
    for (const auto& [_, r] : prep) ps.insert(r);
    for (const auto& [_, r] : orep) os.insert(r);
    q.players.assign(ps.begin(), ps.end());
    q.outcomes.assign(os.begin(), os.end());
  }

  // Class access: union of member image relations, then the (no-op)
  // reflexive-symmetric closure. Class preferences: preorder closure of
  // the member image union.
  std::map<std::string, std::vector<Relation::Pair>> acc, prf;
  for (const auto& j : tgt.players) {
    const std::string& cls = prep.at(j);
    for (const auto& [a, b] : tgt.access.at(j))
      acc[cls].emplace_back(orep.at(a), orep.at(b));
    for (const auto& [a, b] : tgt.prefs.at(j))
      prf[cls].emplace_back(orep.at(a), orep.at(b));
  }
  for (const auto& p : q.players) {
    q.access[p] = closure_access(Relation(std::move(acc[p])), q.outcomes);
    q.prefs[p] = closure_pref(Relation(std::move(prf[p])), q.outcomes);
  }

  Morphism leg;
  leg.source = tgt;
  leg.target = q;
  leg.player_map = prep;
  leg.outcome_map = orep;
  out.legs["q"] = std::move(leg);
  return out;
}

ConstructedGame pushout_shared_players(const Game& g, const Game& h) {
  std::vector<std::string> shared;
  for (const auto& p : g.players)
    if (h.has_player(p)) shared.push_back(p);
  std::sort(shared.begin(), shared.end());

  ConstructedGame cp = coproduct({g, h});
  const Game interface = make_player_game(shared);
  Morphism f0, f1;
  f0.source = interface;
  f0.target = cp.game;
  f1.source = interface;
  f1.target = cp.game;
  for (const auto& p : shared) {
    f0.player_map[p] = tagged_label(p, 0);
    f1.player_map[p] = tagged_label(p, 1);
  }
  ConstructedGame ce = coequalizer(f0, f1);

  ConstructedGame out;
  out.kind = "pushout";
  out.factors = {g, h};
  out.game = ce.game;
  out.legs["inj0"] = compose(cp.legs.at("inj0"), ce.legs.at("q"));
  out.legs["inj1"] = compose(cp.legs.at("inj1"), ce.legs.at("q"));
  return out;
}

namespace {

struct HomTable {
  std::vector<Morphism> homs;
  // label -> underlying map, for players (kappa) and outcomes (rho)
  std::map<std::string, std::map<std::string, std::string>> kappas, rhos;
  std::set<std::pair<std::string, std::string>> members;  // (kappa, rho)
};

HomTable hom_table(std::vector<Morphism> homs) {
  HomTable t;
  t.homs = std::move(homs);
  for (const auto& m : t.homs) {
    const std::string k = map_label(m.player_map);
    const std::string r = map_label(m.outcome_map);
    auto [ki, kfresh] = t.kappas.emplace(k, m.player_map);
    if (!kfresh && ki->second != m.player_map)
      throw validation_error("exponential: map label collision on '" + k + "'");
    auto [ri, rfresh] = t.rhos.emplace(r, m.outcome_map);
    if (!rfresh && ri->second != m.outcome_map)
      throw validation_error("exponential: map label collision on '" + r + "'");
    t.members.emplace(k, r);
  }
  return t;
}

// The quantified access condition between two outcome maps.
bool lifts_access(const Game& g, const Game& h,
                  const std::map<std::string, std::string>& kappa,
                  const std::map<std::string, std::string>& rho1,
                  const std::map<std::string, std::string>& rho2) {
  for (const auto& i : g.players) {
    const Relation& ta = h.access.at(kappa.at(i));
    for (const auto& [a, b] : g.access.at(i))
      if (!ta.contains(rho1.at(a), rho2.at(b))) return false;
  }
  return true;
}

bool pointwise_pref(const Game& g, const Game& h,
                    const std::map<std::string, std::string>& kappa,
                    const std::map<std::string, std::string>& rho1,
                    const std::map<std::string, std::string>& rho2) {
  for (const auto& i : g.players) {
    const Relation& tp = h.prefs.at(kappa.at(i));
    for (const auto& o : g.outcomes)
      if (!tp.contains(rho1.at(o), rho2.at(o))) return false;
  }
  return true;
}

}  // namespace

ConstructedGame exponential_fixed(const Game& g, const Game& h,
                                  std::uint64_t budget) {
  auto table = hom_table(enumerate_hom_fixed(g, h, budget));

  ConstructedGame out;
  out.kind = "exponential_fixed";
  out.factors = {g, h};
  Game& exp = out.game;
  exp.players = g.players;
  for (const auto& [label, _] : table.rhos) exp.outcomes.push_back(label);

  for (const auto& i : exp.players) {
    std::vector<Relation::Pair> acc, prf;
    for (const auto& [l1, r1] : table.rhos)
      for (const auto& [l2, r2] : table.rhos) {
        bool a = true;
        for (const auto& [x, y] : g.access.at(i))
          if (!h.access.at(i).contains(r1.at(x), r2.at(y))) {
            a = false;
            break;
          }
        if (a) acc.emplace_back(l1, l2);
        bool r = true;
        for (const auto& o : g.outcomes)
          if (!h.prefs.at(i).contains(r1.at(o), r2.at(o))) {
            r = false;
            break;
          }
        if (r) prf.emplace_back(l1, l2);
      }
    exp.access[i] = Relation(std::move(acc));
    exp.prefs[i] = Relation(std::move(prf));
  }

  ConstructedGame prod = product_fixed({exp, g});
  Morphism eval;
  eval.source = prod.game;
  eval.target = h;
  for (const auto& p : prod.game.players) eval.player_map[p] = p;
  for (const auto& [label, rho] : table.rhos)
    for (const auto& o : g.outcomes)
      eval.outcome_map[tuple_label({label, o})] = rho.at(o);
  out.legs["eval"] = std::move(eval);
  return out;
}

ConstructedGame exponential(const Game& g, const Game& h,
                            std::uint64_t budget) {
  auto table = hom_table(enumerate_hom(g, h, budget));

  ConstructedGame out;
  out.kind = "exponential";
  out.factors = {g, h};
  Game& exp = out.game;
  for (const auto& [label, _] : table.kappas) exp.players.push_back(label);
  for (const auto& [label, _] : table.rhos) exp.outcomes.push_back(label);

  for (const auto& [klabel, kappa] : table.kappas) {
    std::vector<Relation::Pair> acc, prf;
    for (const auto& [l1, r1] : table.rhos)
      for (const auto& [l2, r2] : table.rhos) {
        if (l1 == l2) {
          acc.emplace_back(l1, l2);  // the explicit identity union
        } else if (table.members.count({klabel, l1}) &&
                   table.members.count({klabel, l2}) &&
                   lifts_access(g, h, kappa, r1, r2)) {
          acc.emplace_back(l1, l2);
        }
        if (pointwise_pref(g, h, kappa, r1, r2)) prf.emplace_back(l1, l2);
      }
    exp.access[klabel] = Relation(std::move(acc));
    exp.prefs[klabel] = Relation(std::move(prf));
  }

  ConstructedGame prod = product({exp, g});
  Morphism eval;
  eval.source = prod.game;
  eval.target = h;
  for (const auto& [klabel, kappa] : table.kappas)
    for (const auto& i : g.players)
      eval.player_map[tuple_label({klabel, i})] = kappa.at(i);
  for (const auto& [rlabel, rho] : table.rhos)
    for (const auto& o : g.outcomes)
      eval.outcome_map[tuple_label({rlabel, o})] = rho.at(o);
  out.legs["eval"] = std::move(eval);
  return out;
}

Morphism curry(const Morphism& hmor, const Game& x, const Game& g) {
  ConstructedGame prod = product({x, g});
  if (!(hmor.source == prod.game))
    throw validation_error("curry: source is not the product of the given "
                           "factors");
  check_morphism(hmor);  // totality; throws on structural defects
  const Game& h = hmor.target;
  ConstructedGame exp = exponential(g, h);

  Morphism psi;
  psi.source = x;
  psi.target = exp.game;
  for (const auto& l : x.players) {
    std::map<std::string, std::string> kappa;
    for (const auto& i : g.players)
      kappa[i] = hmor.player_map.at(tuple_label({l, i}));
    const std::string label = map_label(kappa);
    if (!exp.game.has_player(label))
      throw validation_error("curry: transposed player map is not in the "
                             "hom set");
    psi.player_map[l] = label;
  }
  for (const auto& xo : x.outcomes) {
    std::map<std::string, std::string> rho;
    for (const auto& o : g.outcomes)
      rho[o] = hmor.outcome_map.at(tuple_label({xo, o}));
    const std::string label = map_label(rho);
    if (!exp.game.has_outcome(label))
      throw validation_error("curry: transposed outcome map is not in the "
                             "hom set");
    psi.outcome_map[xo] = label;
  }
  return psi;
}

Morphism constant_embedding_fixed(const Game& g, const Game& h) {
  if (g.outcomes.empty())
    throw validation_error("constant_embedding_fixed: exponent game has no "
                           "outcomes");
  ConstructedGame exp = exponential_fixed(g, h);
  Morphism psi;
  psi.source = h;
  psi.target = exp.game;
  for (const auto& p : h.players) psi.player_map[p] = p;
  for (const auto& o2 : h.outcomes) {
    std::map<std::string, std::string> constant;
    for (const auto& o : g.outcomes) constant[o] = o2;
    const std::string label = map_label(constant);
    if (!exp.game.has_outcome(label))
      throw validation_error("constant_embedding_fixed: constant map is not "
                             "a morphism");
    psi.outcome_map[o2] = label;
  }
  return psi;
}

Morphism constant_embedding(const Game& g, const Game& h) {
  if (g.players.empty() && g.outcomes.empty())
    throw validation_error("constant_embedding: exponent game is empty");
  ConstructedGame exp = exponential(g, h);
  Morphism psi;
  psi.source = h;
  psi.target = exp.game;
  for (const auto& j : h.players) {
    std::map<std::string, std::string> constant;
    for (const auto& i : g.players) constant[i] = j;
    const std::string label = map_label(constant);
    if (!exp.game.has_player(label))
      throw validation_error("constant_embedding: constant player map is not "
                             "in the hom set");
    psi.player_map[j] = label;
  }
  for (const auto& o2 : h.outcomes) {
    std::map<std::string, std::string> constant;
    for (const auto& o : g.outcomes) constant[o] = o2;
    const std::string label = map_label(constant);
    if (!exp.game.has_outcome(label))
      throw validation_error("constant_embedding: constant outcome map is "
                             "not in the hom set");
    psi.outcome_map[o2] = label;
  }
  return psi;
}

Game pushforward_players(const Game& g,
                         const std::map<std::string, std::string>& f,
                         std::vector<std::string> target_players) {
  for (const auto& i : g.players)
    if (!f.count(i))
      throw validation_error("pushforward_players: map misses player '" + i +
                             "'");
  for (const auto& [k, v] : f) {
    if (!g.has_player(k))
      throw validation_error("pushforward_players: extra key '" + k + "'");
    if (std::find(target_players.begin(), target_players.end(), v) ==
        target_players.end())
      throw validation_error("pushforward_players: '" + v +
                             "' is not a target player");
  }

  Game out;
  out.players = std::move(target_players);
  out.outcomes = g.outcomes;
  for (const auto& j : out.players) {
    Relation acc, prf;
    for (const auto& i : g.players)
      if (f.at(i) == j) {
        acc = relation_union(acc, g.access.at(i));
        prf = relation_union(prf, g.prefs.at(i));
      }
    // Closure repair: the union need not be reflexive for players outside
    // the image, nor transitive for merged preferences.
    out.access[j] = closure_access(acc, out.outcomes);
    out.prefs[j] = closure_pref(prf, out.outcomes);
  }
  return out;
}

}  // namespace gamecat
