#include "sgscore/scoring.hpp"

#include "sgscore/error.hpp"

namespace sgscore {

std::optional<DenominatorMode> denominator_mode_from_name(
    const std::string &name) {
  if (name == "original") return DenominatorMode::Original;
  if (name == "extended") return DenominatorMode::Extended;
  return std::nullopt;
}

const char *denominator_mode_name(DenominatorMode mode) {
  return mode == DenominatorMode::Original ? "original" : "extended";
}

ScoreTriple score_pair(const SceneGraph &cand,
                       std::span<const SceneGraph> refs,
                       const SynonymLexicon &lex, bool extension,
                       DenominatorMode denominator) {
  if (refs.empty()) throw Error("score_pair: empty reference list");
  static const SynonymLexicon kEmptyLexicon;
  const SynonymLexicon &active = extension ? lex : kEmptyLexicon;

  SceneGraph merged = merge_graphs(refs);
  ExtendedGraph cand_ext = extend_graph(cand, active);
  ExtendedGraph ref_ext = extend_graph(merged, active);

  ScoreTriple out;
  std::size_t cand_orig = cand_ext.original_tuples().size();
  std::size_t ref_orig = ref_ext.original_tuples().size();
  if (denominator == DenominatorMode::Original) {
    out.cand_total = cand_orig;
    out.ref_total = ref_orig;
  } else {
    out.cand_total = cand_ext.extended_tuple_count();
    out.ref_total = ref_ext.extended_tuple_count();
  }
  if (cand_orig == 0 || ref_orig == 0) return out;  // scores stay zero

  out.matched = match_tuples(cand_ext, ref_ext).size();
  out.precision = static_cast<double>(out.matched) /
                  static_cast<double>(out.cand_total);
  out.recall =
      static_cast<double>(out.matched) / static_cast<double>(out.ref_total);
  if (out.precision + out.recall > 0.0)
    out.f1 = 2.0 * out.precision * out.recall / (out.precision + out.recall);
  return out;
}

}  // namespace sgscore
