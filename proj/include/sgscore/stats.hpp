#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sgscore {

// Two score series over the same captions, index-aligned.
struct PairedScores {
  std::vector<double> metric;
  std::vector<double> human;
};

enum class Coefficient { Pearson, Spearman, Kendall };

std::string_view coefficient_name(Coefficient c);
Coefficient coefficient_from_name(std::string_view name);

// All three throw UndefinedCorrelation when a series carries no signal
// (zero variance for Pearson/Spearman, all-tied for Kendall) and Error on
// length mismatch or fewer than two points.
double pearson(const PairedScores &p);
double spearman(const PairedScores &p);
double kendall(const PairedScores &p);  // tau-b
double correlate(Coefficient c, const PairedScores &p);

// 1-based average ranks; tied values share the mean of their rank span.
std::vector<double> average_ranks(std::span<const double> values);

// Evaluator id -> (caption id -> score in 1..5).
using EvaluatorMatrix = std::map<std::string, std::map<std::string, int>>;

struct RHumanResult {
  double value = 0.0;
  std::size_t pairs_used = 0;
  std::size_t pairs_skipped = 0;
};

// Mean pairwise correlation over evaluator pairs, each restricted to the
// captions both rated. Pairs with fewer than two shared captions or an
// undefined correlation are skipped and counted.
RHumanResult r_human(const EvaluatorMatrix &m, Coefficient c);

// Smallest score tau such that at least ceil(fraction*n) scores are >= tau.
double quantile_threshold(std::span<const double> scores, double fraction);

// Indices where |human/max(human) - metric/max(metric)| >= theta.
std::vector<std::size_t> failure_cases(const PairedScores &p, double theta);

struct ScoreDistribution {
  std::array<long long, 5> counts{};  // counts[k] holds level k+1
  long long total = 0;
};

ScoreDistribution score_distribution(std::span<const int> scores);

}  // namespace sgscore
