#include "sgscore/matching.hpp"

#include <algorithm>

namespace sgscore {

namespace {

bool closures_intersect(const std::set<Lemma> &a, const std::set<Lemma> &b) {
  if (a.size() > b.size()) return closures_intersect(b, a);
  return std::any_of(a.begin(), a.end(),
                     [&](const Lemma &x) { return b.count(x) > 0; });
}

bool slot_compatible(const Lemma &a, const ExtendedGraph &ga, const Lemma &b,
                     const ExtendedGraph &gb) {
  if (a == b) return true;
  return closures_intersect(ga.closure(a), gb.closure(b));
}

}  // namespace

bool tuples_compatible(const Tuple &a, const ExtendedGraph &ga,
                       const Tuple &b, const ExtendedGraph &gb) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Tuple::Kind::Object:
      return slot_compatible(a.a, ga, b.a, gb);
    case Tuple::Kind::Attribute:
      return slot_compatible(a.a, ga, b.a, gb) &&
             slot_compatible(a.b, ga, b.b, gb);
    case Tuple::Kind::Relation:
      return slot_compatible(a.a, ga, b.a, gb) &&
             slot_compatible(a.b, ga, b.b, gb) &&
             slot_compatible(a.c, ga, b.c, gb);
  }
  return false;
}

namespace {

struct Matcher {
  const std::vector<std::vector<int>> &adj;
  std::vector<int> match_left;   // candidate index -> reference index
  std::vector<int> match_right;  // reference index -> candidate index
  std::vector<char> visited;

  bool augment(int u) {
    for (int v : adj[u]) {
      if (visited[v]) continue;
      visited[v] = 1;
      if (match_right[v] == -1 || augment(match_right[v])) {
        match_left[u] = v;
        match_right[v] = u;
        return true;
      }
    }
    return false;
  }
};

}  // namespace

MatchResult match_tuples(const ExtendedGraph &cand, const ExtendedGraph &ref) {
  std::set<Tuple> cand_set = cand.original_tuples();
  std::set<Tuple> ref_set = ref.original_tuples();
  std::vector<Tuple> left(cand_set.begin(), cand_set.end());
  std::vector<Tuple> right(ref_set.begin(), ref_set.end());

  std::vector<std::vector<int>> adj(left.size());
  for (std::size_t i = 0; i < left.size(); ++i)
    for (std::size_t j = 0; j < right.size(); ++j)
      if (tuples_compatible(left[i], cand, right[j], ref))
        adj[i].push_back(static_cast<int>(j));

  Matcher m{adj,
            std::vector<int>(left.size(), -1),
            std::vector<int>(right.size(), -1),
            {}};
  for (std::size_t u = 0; u < left.size(); ++u) {
    m.visited.assign(right.size(), 0);
    m.augment(static_cast<int>(u));
  }

  MatchResult out;
  for (std::size_t u = 0; u < left.size(); ++u)
    if (m.match_left[u] != -1)
      out.pairs.emplace_back(left[u], right[m.match_left[u]]);
  return out;
}

}  // namespace sgscore
