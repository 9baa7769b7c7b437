#include "sgscore/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <set>

#include "sgscore/error.hpp"

namespace sgscore {

namespace {

constexpr int kMaxOrder = 4;

// N-grams as joined keys; \x1f never occurs in surface tokens of interest.
std::map<std::string, int> ngram_counts(const TokenizedCaption &tokens,
                                        int n) {
  std::map<std::string, int> counts;
  if (static_cast<int>(tokens.size()) < n) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    std::string key = tokens[i];
    for (int k = 1; k < n; ++k) {
      key += '\x1f';
      key += tokens[i + k];
    }
    ++counts[key];
  }
  return counts;
}

}  // namespace

double bleu(const TokenizedCaption &cand,
            std::span<const TokenizedCaption> refs,
            const BleuOptions &options) {
  if (refs.empty()) throw Error("bleu: empty reference list");
  if (cand.empty()) return 0.0;

  double log_sum = 0.0;
  for (int n = 1; n <= kMaxOrder; ++n) {
    auto cand_counts = ngram_counts(cand, n);
    std::map<std::string, int> max_ref;
    for (const TokenizedCaption &ref : refs)
      for (const auto &[gram, count] : ngram_counts(ref, n))
        max_ref[gram] = std::max(max_ref[gram], count);

    long long hits = 0;
    long long total = 0;
    for (const auto &[gram, count] : cand_counts) {
      total += count;
      auto it = max_ref.find(gram);
      if (it != max_ref.end()) hits += std::min(count, it->second);
    }

    double p;
    if (n >= 2 && options.smoothing)
      p = static_cast<double>(hits + 1) / static_cast<double>(total + 1);
    else
      p = total > 0 ? static_cast<double>(hits) / static_cast<double>(total)
                    : 0.0;
    if (p <= 0.0) return 0.0;
    log_sum += std::log(p);
  }

  // Closest reference length; ties favor the shorter reference.
  std::size_t c = cand.size();
  std::size_t r = refs[0].size();
  for (const TokenizedCaption &ref : refs) {
    auto diff = [&](std::size_t len) {
      return len > c ? len - c : c - len;
    };
    if (diff(ref.size()) < diff(r) || (diff(ref.size()) == diff(r) &&
                                       ref.size() < r))
      r = ref.size();
  }
  double bp = c >= r ? 1.0
                     : std::exp(1.0 - static_cast<double>(r) /
                                          static_cast<double>(c));
  return bp * std::exp(log_sum / kMaxOrder);
}

namespace {

std::size_t lcs_length(const TokenizedCaption &a, const TokenizedCaption &b) {
  if (a.empty() || b.empty()) return 0;
  std::vector<std::size_t> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      if (a[i - 1] == b[j - 1])
        cur[j] = prev[j - 1] + 1;
      else
        cur[j] = std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

}  // namespace

double rouge_l(const TokenizedCaption &cand,
               std::span<const TokenizedCaption> refs, double beta) {
  if (refs.empty()) throw Error("rouge_l: empty reference list");
  if (cand.empty()) return 0.0;
  double best = 0.0;
  double b2 = beta * beta;
  for (const TokenizedCaption &ref : refs) {
    if (ref.empty()) continue;
    std::size_t lcs = lcs_length(cand, ref);
    if (lcs == 0) continue;
    double p = static_cast<double>(lcs) / static_cast<double>(cand.size());
    double r = static_cast<double>(lcs) / static_cast<double>(ref.size());
    best = std::max(best, (1.0 + b2) * r * p / (r + b2 * p));
  }
  return best;
}

namespace {

using TfIdfVector = std::map<std::string, double>;

double cosine(const TfIdfVector &a, const TfIdfVector &b) {
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (const auto &[gram, w] : a) {
    na += w * w;
    auto it = b.find(gram);
    if (it != b.end()) dot += w * it->second;
  }
  for (const auto &[gram, w] : b) nb += w * w;
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

}  // namespace

std::vector<double> cider(std::span<const CorpusEntry> corpus) {
  if (corpus.size() < 2)
    throw Error("cider: document frequencies need at least 2 corpus entries");

  // Document frequency per order: in how many entries' reference sets the
  // gram occurs.
  std::vector<std::map<std::string, int>> df(kMaxOrder + 1);
  for (const CorpusEntry &entry : corpus) {
    for (int n = 1; n <= kMaxOrder; ++n) {
      std::set<std::string> grams;
      for (const TokenizedCaption &ref : entry.refs)
        for (const auto &[gram, count] : ngram_counts(ref, n))
          grams.insert(gram);
      for (const std::string &gram : grams) ++df[n][gram];
    }
  }

  double log_corpus = std::log(static_cast<double>(corpus.size()));
  auto tfidf = [&](const TokenizedCaption &tokens, int n) {
    TfIdfVector vec;
    for (const auto &[gram, count] : ngram_counts(tokens, n)) {
      auto it = df[n].find(gram);
      double d = it == df[n].end() ? 0.0 : static_cast<double>(it->second);
      double idf = log_corpus - std::log(std::max(1.0, d));
      vec[gram] = static_cast<double>(count) * idf;
    }
    return vec;
  };

  std::vector<double> out;
  out.reserve(corpus.size());
  for (const CorpusEntry &entry : corpus) {
    double sum_orders = 0.0;
    for (int n = 1; n <= kMaxOrder; ++n) {
      TfIdfVector cand_vec = tfidf(entry.cand, n);
      double sum_refs = 0.0;
      for (const TokenizedCaption &ref : entry.refs)
        sum_refs += cosine(cand_vec, tfidf(ref, n));
      if (!entry.refs.empty())
        sum_orders += sum_refs / static_cast<double>(entry.refs.size());
    }
    out.push_back(10.0 * sum_orders / kMaxOrder);
  }
  return out;
}

}  // namespace sgscore
