#include "sgscore/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sgscore/error.hpp"

namespace sgscore {

namespace {

void check_paired(const PairedScores &p) {
  if (p.metric.size() != p.human.size())
    throw Error("paired scores: series lengths differ");
  if (p.metric.size() < 2)
    throw Error("paired scores: need at least 2 points");
}

}  // namespace

std::string_view coefficient_name(Coefficient c) {
  switch (c) {
    case Coefficient::Pearson: return "pearson";
    case Coefficient::Spearman: return "spearman";
    case Coefficient::Kendall: return "kendall";
  }
  return "pearson";
}

Coefficient coefficient_from_name(std::string_view name) {
  if (name == "pearson") return Coefficient::Pearson;
  if (name == "spearman") return Coefficient::Spearman;
  if (name == "kendall") return Coefficient::Kendall;
  throw Error("unknown correlation coefficient: " + std::string(name));
}

double pearson(const PairedScores &p) {
  check_paired(p);
  auto n = static_cast<double>(p.metric.size());
  double mx = std::accumulate(p.metric.begin(), p.metric.end(), 0.0) / n;
  double my = std::accumulate(p.human.begin(), p.human.end(), 0.0) / n;
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < p.metric.size(); ++i) {
    double dx = p.metric[i] - mx;
    double dy = p.human[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0.0 || syy == 0.0)
    throw UndefinedCorrelation("pearson: a series has zero variance");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

std::vector<double> average_ranks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size(), 0.0);
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]])
      ++j;
    double rank = static_cast<double>(i + j + 2) / 2.0;  // mean of i+1 .. j+1
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

double spearman(const PairedScores &p) {
  check_paired(p);
  PairedScores ranked{average_ranks(p.metric), average_ranks(p.human)};
  try {
    return pearson(ranked);
  } catch (const UndefinedCorrelation &) {
    throw UndefinedCorrelation("spearman: a series is constant");
  }
}

namespace {

long long tie_pairs(std::span<const double> values) {
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  long long pairs = 0;
  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t j = i;
    while (j + 1 < sorted.size() && sorted[j + 1] == sorted[i]) ++j;
    long long t = static_cast<long long>(j - i + 1);
    pairs += t * (t - 1) / 2;
    i = j + 1;
  }
  return pairs;
}

}  // namespace

double kendall(const PairedScores &p) {
  check_paired(p);
  auto n = p.metric.size();
  long long concordant = 0, discordant = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double dx = p.metric[i] - p.metric[j];
      double dy = p.human[i] - p.human[j];
      double prod = dx * dy;
      if (prod > 0.0)
        ++concordant;
      else if (prod < 0.0)
        ++discordant;
    }
  }
  long long n0 = static_cast<long long>(n) * (static_cast<long long>(n) - 1) / 2;
  long long n1 = tie_pairs(p.metric);
  long long n2 = tie_pairs(p.human);
  if (n0 == n1 || n0 == n2)
    throw UndefinedCorrelation("kendall: a series is entirely tied");
  double denom = std::sqrt(static_cast<double>(n0 - n1) *
                           static_cast<double>(n0 - n2));
  return std::clamp(static_cast<double>(concordant - discordant) / denom,
                    -1.0, 1.0);
}

double correlate(Coefficient c, const PairedScores &p) {
  switch (c) {
    case Coefficient::Pearson: return pearson(p);
    case Coefficient::Spearman: return spearman(p);
    case Coefficient::Kendall: return kendall(p);
  }
  throw Error("unknown correlation coefficient");
}

RHumanResult r_human(const EvaluatorMatrix &m, Coefficient c) {
  if (m.size() < 2) throw Error("r_human: need at least 2 evaluators");
  for (const auto &[evaluator, row] : m)
    for (const auto &[id, score] : row)
      if (score < 1 || score > 5)
        throw Error("r_human: score out of range for evaluator " + evaluator +
                    ", caption " + id);

  RHumanResult result;
  double sum = 0.0;
  for (auto a = m.begin(); a != m.end(); ++a) {
    for (auto b = std::next(a); b != m.end(); ++b) {
      PairedScores joint;
      for (const auto &[id, score] : a->second) {
        auto it = b->second.find(id);
        if (it == b->second.end()) continue;
        joint.metric.push_back(static_cast<double>(score));
        joint.human.push_back(static_cast<double>(it->second));
      }
      if (joint.metric.size() < 2) {
        ++result.pairs_skipped;
        continue;
      }
      try {
        sum += correlate(c, joint);
        ++result.pairs_used;
      } catch (const UndefinedCorrelation &) {
        ++result.pairs_skipped;
      }
    }
  }
  if (result.pairs_used == 0)
    throw Error("r_human: no evaluator pair with a defined correlation");
  result.value = sum / static_cast<double>(result.pairs_used);
  return result;
}

double quantile_threshold(std::span<const double> scores, double fraction) {
  if (scores.empty()) throw Error("quantile_threshold: empty score list");
  if (!(fraction > 0.0) || fraction > 1.0)
    throw Error("quantile_threshold: fraction must be in (0,1]");
  std::vector<double> sorted(scores.begin(), scores.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  // Small slack keeps exact products like 0.3*10 from rounding upward.
  auto k = static_cast<std::size_t>(
      std::ceil(fraction * static_cast<double>(sorted.size()) - 1e-9));
  k = std::clamp<std::size_t>(k, 1, sorted.size());
  return sorted[k - 1];
}

std::vector<std::size_t> failure_cases(const PairedScores &p, double theta) {
  if (p.metric.size() != p.human.size())
    throw Error("failure_cases: series lengths differ");
  if (p.metric.empty()) throw Error("failure_cases: empty series");
  double mmax = *std::max_element(p.metric.begin(), p.metric.end());
  double hmax = *std::max_element(p.human.begin(), p.human.end());
  if (mmax <= 0.0 || hmax <= 0.0)
    throw Error("failure_cases: series maximum must be positive");
  std::vector<std::size_t> flagged;
  for (std::size_t i = 0; i < p.metric.size(); ++i) {
    double gap = std::abs(p.human[i] / hmax - p.metric[i] / mmax);
    if (gap >= theta) flagged.push_back(i);
  }
  return flagged;
}

ScoreDistribution score_distribution(std::span<const int> scores) {
  ScoreDistribution dist;
  for (int s : scores) {
    if (s < 1 || s > 5)
      throw Error("score_distribution: score out of range 1..5");
    ++dist.counts[static_cast<std::size_t>(s - 1)];
    ++dist.total;
  }
  return dist;
}

}  // namespace sgscore
