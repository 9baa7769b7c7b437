#ifndef SGSCORE_MATCHING_HPP
#define SGSCORE_MATCHING_HPP

#include <utility>
#include <vector>

#include "sgscore/lexicon.hpp"

namespace sgscore {

// Two tuples are compatible when their synonym-extended closures share a
// tuple: same kind, and for every slot the two depth-1 closures intersect.
bool tuples_compatible(const Tuple &a, const ExtendedGraph &ga,
                       const Tuple &b, const ExtendedGraph &gb);

struct MatchResult {
  // One-to-one matched (candidate tuple, reference tuple) pairs.
  std::vector<std::pair<Tuple, Tuple>> pairs;

  std::size_t size() const { return pairs.size(); }
};

// Maximum one-to-one matching between the original candidate tuples and the
// original reference tuples under closure compatibility. Augmenting-path
// maximum matching over the sorted tuple lists, so the result is
// deterministic and the cardinality is the true maximum, not a greedy bound.
MatchResult match_tuples(const ExtendedGraph &cand, const ExtendedGraph &ref);

}  // namespace sgscore

#endif  // SGSCORE_MATCHING_HPP
