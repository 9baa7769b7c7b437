#ifndef SGSCORE_BASELINES_HPP
#define SGSCORE_BASELINES_HPP

#include <span>
#include <string>
#include <vector>

namespace sgscore {

// Surface token sequence, the unit the n-gram baselines operate on.
using TokenizedCaption = std::vector<std::string>;

struct BleuOptions {
  // Add-one smoothing on orders 2-4; off reproduces the textbook score.
  bool smoothing = true;
};

// Sentence-level BLEU-4 with brevity penalty. N-gram counts are clipped
// against the per-gram maximum over the references; the brevity penalty uses
// the reference length closest to the candidate (ties go to the shorter).
// An empty candidate scores 0; an empty reference list is an error.
double bleu(const TokenizedCaption &cand,
            std::span<const TokenizedCaption> refs,
            const BleuOptions &options = {});

// LCS-based F-measure, maximum over the references.
// beta follows the common summarization default.
double rouge_l(const TokenizedCaption &cand,
               std::span<const TokenizedCaption> refs, double beta = 1.2);

struct CorpusEntry {
  TokenizedCaption cand;
  std::vector<TokenizedCaption> refs;
};

// Plain CIDEr over a corpus of at least two entries: per order n in 1..4,
// TF-IDF vectors with document frequencies over the reference sets, cosine
// against each reference averaged, mean over orders, times 10. Returns one
// score per entry in input order.
std::vector<double> cider(std::span<const CorpusEntry> corpus);

}  // namespace sgscore

#endif  // SGSCORE_BASELINES_HPP
