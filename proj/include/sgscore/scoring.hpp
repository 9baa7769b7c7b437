#ifndef SGSCORE_SCORING_HPP
#define SGSCORE_SCORING_HPP

#include <optional>
#include <span>
#include <string>

#include "sgscore/lexicon.hpp"
#include "sgscore/matching.hpp"

namespace sgscore {

// Which tuple count divides the match count. Original keeps the identity
// score at 1.0 and extension monotone; Extended divides by the
// synonym-extended tuple counts instead.
enum class DenominatorMode { Original, Extended };

std::optional<DenominatorMode> denominator_mode_from_name(
    const std::string &name);
const char *denominator_mode_name(DenominatorMode mode);

struct ScoreTriple {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t matched = 0;
  std::size_t cand_total = 0;  // candidate tuples in the denominator
  std::size_t ref_total = 0;   // merged-reference tuples in the denominator

  // True when this sample contributes to the zero-score tally M.
  bool zero() const { return f1 == 0.0; }
};

// Scores one candidate graph against a non-empty reference set: references
// are merged, both sides are synonym-extended when `extension` is set, and
// F1 = 2PR/(P+R) is computed from the maximum tuple matching. If either
// side has no original tuples all three scores are zero.
ScoreTriple score_pair(const SceneGraph &cand,
                       std::span<const SceneGraph> refs,
                       const SynonymLexicon &lex, bool extension,
                       DenominatorMode denominator = DenominatorMode::Original);

}  // namespace sgscore

#endif  // SGSCORE_SCORING_HPP
