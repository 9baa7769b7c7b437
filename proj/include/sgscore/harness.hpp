#ifndef SGSCORE_HARNESS_HPP
#define SGSCORE_HARNESS_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sgscore/dataset.hpp"
#include "sgscore/lexicon.hpp"
#include "sgscore/parser.hpp"
#include "sgscore/scoring.hpp"
#include "sgscore/stats.hpp"

namespace sgscore {

// One parser/extension arm of the ablation grid.
struct AblationConfig {
  ParserMode parser_mode = ParserMode::Pas;
  bool extension = true;
};

struct BaselineFlags {
  bool bleu = false;
  bool rouge = false;
  bool cider = false;

  bool any() const { return bleu || rouge || cider; }
};

struct BatchOptions {
  AblationConfig config;
  BaselineFlags baselines;
  DenominatorMode denominator = DenominatorMode::Original;
  double threshold_fraction = 0.336;  // quantile for the tau threshold
  double theta = 1.0;                 // failure-flagging threshold
  int workers = 0;                    // 0 = library default
};

struct PerCaptionResult {
  std::string id;
  ScoreTriple graph;
  std::optional<double> bleu;
  std::optional<double> rouge;
  std::optional<double> cider;
  std::optional<double> human_mean;
  std::string diagnostic;  // empty when the entry scored cleanly
};

struct CorrelationRow {
  std::string metric;
  std::optional<double> pearson;  // nullopt when undefined on this data
  std::optional<double> spearman;
  std::optional<double> kendall;
  std::size_t n = 0;  // paired (metric, human) samples feeding the row
};

// Mean pairwise inter-evaluator agreement, one value per coefficient.
struct HumanAgreement {
  std::optional<double> pearson;
  std::optional<double> spearman;
  std::optional<double> kendall;
  std::size_t pairs_used = 0;
  std::size_t pairs_skipped = 0;

  bool computed() const {
    return pearson.has_value() || spearman.has_value() || kendall.has_value();
  }
};

struct FlaggedCaption {
  std::string id;
  double gap = 0.0;  // |human/max(human) - f1/max(f1)|
};

struct RunReport {
  AblationConfig config;
  DenominatorMode denominator = DenominatorMode::Original;
  double threshold_fraction = 0.336;
  double theta = 1.0;
  std::vector<PerCaptionResult> captions;  // sorted by caption id
  std::vector<CorrelationRow> correlations;
  HumanAgreement human;
  std::size_t zero_count = 0;  // captions scoring exactly zero (the M column)
  double tau = 0.0;            // graph-score quantile threshold
  std::vector<FlaggedCaption> failures;
  std::vector<std::string> diagnostics;

  std::string to_tsv() const;    // human-readable tables
  std::string to_jsonl() const;  // line-delimited machine records
};

// Scores every entry (graph metric plus enabled baselines), then aggregates
// correlations against mean human scores, the zero-score count M, the score
// threshold tau, and failure flags. Entry-level errors become diagnostics
// plus a zero score and never abort the batch. Output is byte-identical for
// any worker count.
RunReport run_batch(std::span<const DatasetEntry> entries,
                    const SynonymLexicon &lex, const BatchOptions &options);

// Single-threaded reference implementation with identical output.
RunReport run_batch_serial(std::span<const DatasetEntry> entries,
                           const SynonymLexicon &lex,
                           const BatchOptions &options);

struct AblationRow {
  AblationConfig config;
  std::optional<double> pearson;
  std::optional<double> spearman;
  std::optional<double> kendall;
  std::size_t zero_count = 0;
  std::size_t n = 0;
};

// The four-arm grid (UD,-ext), (UD,+ext), (PAS,-ext), (PAS,+ext), graph
// metric only, in that row order.
std::vector<AblationRow> run_ablation(std::span<const DatasetEntry> entries,
                                      const SynonymLexicon &lex);

std::string ablation_to_tsv(std::span<const AblationRow> rows);

}  // namespace sgscore

#endif  // SGSCORE_HARNESS_HPP
