#include "gamecat/relation.hpp"

#include <algorithm>
#include <unordered_map>

#include "gamecat/error.hpp"

namespace gamecat {

Relation::Relation(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

bool Relation::contains(const std::string& a, const std::string& b) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), Pair{a, b});
}

void Relation::insert(const std::string& a, const std::string& b) {
  Pair p{a, b};
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), p);
  if (it == pairs_.end() || *it != p) pairs_.insert(it, p);
}

namespace {

std::unordered_map<std::string, std::size_t> index_outcomes(
    const std::vector<std::string>& outcomes) {
  std::unordered_map<std::string, std::size_t> idx;
  idx.reserve(outcomes.size());
  for (std::size_t i = 0; i < outcomes.size(); ++i) idx.emplace(outcomes[i], i);
  return idx;
}

// Dense adjacency of `pairs` over `outcomes`; unknown ids are rejected.
std::vector<char> to_matrix(const Relation& pairs,
                            const std::vector<std::string>& outcomes,
                            const std::unordered_map<std::string, std::size_t>& idx) {
  const std::size_t n = outcomes.size();
  std::vector<char> m(n * n, 0);
  for (const auto& [a, b] : pairs) {
    auto ia = idx.find(a);
    if (ia == idx.end())
      throw validation_error("relation: unknown identifier '" + a + "'");
    auto ib = idx.find(b);
    if (ib == idx.end())
      throw validation_error("relation: unknown identifier '" + b + "'");
    m[ia->second * n + ib->second] = 1;
  }
  return m;
}

Relation from_matrix(const std::vector<char>& m,
                     const std::vector<std::string>& outcomes) {
  const std::size_t n = outcomes.size();
  std::vector<Relation::Pair> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m[i * n + j]) out.emplace_back(outcomes[i], outcomes[j]);
  return Relation(std::move(out));
}

}  // namespace

Relation closure_access(const Relation& pairs,
                        const std::vector<std::string>& outcomes) {
  auto idx = index_outcomes(outcomes);
  auto m = to_matrix(pairs, outcomes, idx);
  const std::size_t n = outcomes.size();
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m[i * n + j]) m[j * n + i] = 1;
  return from_matrix(m, outcomes);
}

Relation closure_pref(const Relation& pairs,
                      const std::vector<std::string>& outcomes) {
  auto idx = index_outcomes(outcomes);
  auto m = to_matrix(pairs, outcomes, idx);
  const std::size_t n = outcomes.size();
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1;
  // Warshall
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (m[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (m[k * n + j]) m[i * n + j] = 1;
  return from_matrix(m, outcomes);
}

Relation relation_union(const Relation& a, const Relation& b) {
  std::vector<Relation::Pair> out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return Relation(std::move(out));
}

Relation restrict_relation(const Relation& r,
                           const std::vector<std::string>& keep) {
  std::vector<Relation::Pair> out;
  for (const auto& p : r)
    if (std::find(keep.begin(), keep.end(), p.first) != keep.end() &&
        std::find(keep.begin(), keep.end(), p.second) != keep.end())
      out.push_back(p);
  return Relation(std::move(out));
}

}  // namespace gamecat
