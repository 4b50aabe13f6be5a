#pragma once

#include <string>
#include <utility>
#include <vector>

namespace gamecat {

// A finite binary relation on outcome identifiers. Set semantics: no
// duplicate pairs, iteration in lexicographic (first, second) order.
class Relation {
 public:
  using Pair = std::pair<std::string, std::string>;

  Relation() = default;
  explicit Relation(std::vector<Pair> pairs);
  Relation(std::initializer_list<Pair> pairs)
      : Relation(std::vector<Pair>(pairs)) {}

  bool contains(const std::string& a, const std::string& b) const;
  void insert(const std::string& a, const std::string& b);

  const std::vector<Pair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }

  auto begin() const { return pairs_.begin(); }
  auto end() const { return pairs_.end(); }

  bool operator==(const Relation&) const = default;

 private:
  std::vector<Pair> pairs_;  // sorted, unique
};

// Least reflexive-symmetric relation over `outcomes` containing `pairs`.
// Unknown identifiers raise validation_error naming the identifier.
Relation closure_access(const Relation& pairs,
                        const std::vector<std::string>& outcomes);

// Least reflexive-transitive relation (Warshall saturation).
Relation closure_pref(const Relation& pairs,
                      const std::vector<std::string>& outcomes);

// Pairwise union.
Relation relation_union(const Relation& a, const Relation& b);

// Keeps only pairs whose endpoints both lie in `keep`.
Relation restrict_relation(const Relation& r,
                           const std::vector<std::string>& keep);

}  // namespace gamecat
