#ifndef SGSCORE_DATASET_HPP
#define SGSCORE_DATASET_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "sgscore/annotation.hpp"
#include "sgscore/stats.hpp"

namespace sgscore {

struct HumanScore {
  std::string evaluator;
  int score = 0;  // 1..5

  bool operator==(const HumanScore &) const = default;
};

// One evaluation sample: a candidate caption, the reference set it is scored
// against, and optional per-evaluator human ratings.
struct DatasetEntry {
  std::string id;
  AnnotatedCaption candidate;
  std::vector<AnnotatedCaption> references;  // never empty
  std::vector<HumanScore> human_scores;

  bool has_human() const { return !human_scores.empty(); }
  double human_mean() const;  // throws Error when no scores are present
};

// Parses one dataset document (a single JSON object).
DatasetEntry entry_from_json(const std::string &text, std::size_t line = 0);
std::string entry_to_json(const DatasetEntry &entry);

// Strict line-delimited loader: any schema violation or duplicate id throws
// ParseError with the offending line number.
std::vector<DatasetEntry> load_dataset(std::istream &in);

struct LoadedDataset {
  std::vector<DatasetEntry> entries;
  std::vector<std::string> diagnostics;  // one message per rejected line
};

// Keeps every well-formed entry and records a diagnostic per bad line; a
// duplicate id rejects the later line.
LoadedDataset load_dataset_lenient(std::istream &in);

// Raw per-evaluator scores across entries, keyed evaluator -> entry id.
// The first score wins if an evaluator rated the same entry twice.
EvaluatorMatrix evaluator_matrix(std::span<const DatasetEntry> entries);

}  // namespace sgscore

#endif  // SGSCORE_DATASET_HPP
