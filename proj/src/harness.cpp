#include "sgscore/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <nlohmann/json.hpp>

#include "sgscore/baselines.hpp"
#include "sgscore/error.hpp"

namespace sgscore {

using ordered_json = nlohmann::ordered_json;

namespace {

PerCaptionResult score_entry(const DatasetEntry &entry,
                             const SynonymLexicon &lex,
                             const BatchOptions &options) {
  PerCaptionResult r;
  r.id = entry.id;
  if (entry.has_human()) r.human_mean = entry.human_mean();
  try {
    SceneGraph cand =
        parse_scene_graph(entry.candidate, options.config.parser_mode);
    std::vector<SceneGraph> refs;
    refs.reserve(entry.references.size());
    for (const AnnotatedCaption &ref : entry.references)
      refs.push_back(parse_scene_graph(ref, options.config.parser_mode));
    r.graph = score_pair(cand, refs, lex, options.config.extension,
                         options.denominator);

    if (options.baselines.bleu || options.baselines.rouge) {
      TokenizedCaption cand_tokens = entry.candidate.surfaces();
      std::vector<TokenizedCaption> ref_tokens;
      ref_tokens.reserve(entry.references.size());
      for (const AnnotatedCaption &ref : entry.references)
        ref_tokens.push_back(ref.surfaces());
      if (options.baselines.bleu) r.bleu = bleu(cand_tokens, ref_tokens);
      if (options.baselines.rouge) r.rouge = rouge_l(cand_tokens, ref_tokens);
    }
  } catch (const std::exception &e) {
    r.graph = ScoreTriple{};
    r.bleu.reset();
    r.rouge.reset();
    r.diagnostic = e.what();
  }
  return r;
}

// CIDEr is corpus-level: computed once over all entries after the per-entry
// pass.
void attach_cider(std::span<const DatasetEntry> entries,
                  std::vector<PerCaptionResult> &results,
                  std::vector<std::string> &notes) {
  std::vector<CorpusEntry> corpus;
  corpus.reserve(entries.size());
  for (const DatasetEntry &entry : entries) {
    CorpusEntry ce;
    ce.cand = entry.candidate.surfaces();
    ce.refs.reserve(entry.references.size());
    for (const AnnotatedCaption &ref : entry.references)
      ce.refs.push_back(ref.surfaces());
    corpus.push_back(std::move(ce));
  }
  try {
    std::vector<double> scores = cider(corpus);
    for (std::size_t i = 0; i < results.size(); ++i)
      if (results[i].diagnostic.empty()) results[i].cider = scores[i];
  } catch (const Error &e) {
    notes.push_back(e.what());
  }
}

RunReport finalize(std::span<const DatasetEntry> entries,
                   std::vector<PerCaptionResult> results,
                   const BatchOptions &options,
                   std::vector<std::string> notes) {
  RunReport report;
  report.config = options.config;
  report.denominator = options.denominator;
  report.threshold_fraction = options.threshold_fraction;
  report.theta = options.theta;

  std::sort(results.begin(), results.end(),
            [](const PerCaptionResult &a, const PerCaptionResult &b) {
              return a.id < b.id;
            });

  std::vector<double> all_f1;
  all_f1.reserve(results.size());
  for (const PerCaptionResult &r : results) {
    if (r.graph.zero()) ++report.zero_count;
    if (!r.diagnostic.empty())
      report.diagnostics.push_back("entry " + r.id + ": " + r.diagnostic);
    all_f1.push_back(r.graph.f1);
  }
  for (std::string &note : notes)
    report.diagnostics.push_back(std::move(note));

  report.tau = quantile_threshold(all_f1, options.threshold_fraction);

  auto add_row = [&](const std::string &name, auto getter, bool always) {
    CorrelationRow row;
    row.metric = name;
    PairedScores p;
    std::size_t computed = 0;
    for (const PerCaptionResult &r : results) {
      std::optional<double> v = getter(r);
      if (v) ++computed;
      if (!v || !r.human_mean) continue;
      p.metric.push_back(*v);
      p.human.push_back(*r.human_mean);
    }
    row.n = p.metric.size();
    if (row.n >= 2) {
      try { row.pearson = pearson(p); } catch (const UndefinedCorrelation &) {}
      try { row.spearman = spearman(p); } catch (const UndefinedCorrelation &) {}
      try { row.kendall = kendall(p); } catch (const UndefinedCorrelation &) {}
    }
    if (always || computed > 0) report.correlations.push_back(row);
  };
  add_row(
      "graph_f1",
      [](const PerCaptionResult &r) { return std::optional<double>(r.graph.f1); },
      true);
  if (options.baselines.bleu)
    add_row("bleu", [](const PerCaptionResult &r) { return r.bleu; }, false);
  if (options.baselines.rouge)
    add_row("rouge_l", [](const PerCaptionResult &r) { return r.rouge; }, false);
  if (options.baselines.cider)
    add_row("cider", [](const PerCaptionResult &r) { return r.cider; }, false);

  EvaluatorMatrix m = evaluator_matrix(entries);
  if (m.size() >= 2) {
    auto agree = [&](Coefficient c) -> std::optional<double> {
      try {
        RHumanResult rh = r_human(m, c);
        report.human.pairs_used = rh.pairs_used;
        report.human.pairs_skipped = rh.pairs_skipped;
        return rh.value;
      } catch (const Error &) {
        return std::nullopt;
      }
    };
    report.human.pearson = agree(Coefficient::Pearson);
    report.human.spearman = agree(Coefficient::Spearman);
    report.human.kendall = agree(Coefficient::Kendall);
  }

  PairedScores fp;
  std::vector<const PerCaptionResult *> with_human;
  for (const PerCaptionResult &r : results) {
    if (!r.human_mean) continue;
    fp.metric.push_back(r.graph.f1);
    fp.human.push_back(*r.human_mean);
    with_human.push_back(&r);
  }
  if (!fp.metric.empty()) {
    try {
      double mmax = *std::max_element(fp.metric.begin(), fp.metric.end());
      double hmax = *std::max_element(fp.human.begin(), fp.human.end());
      for (std::size_t idx : failure_cases(fp, options.theta)) {
        double gap =
            std::abs(fp.human[idx] / hmax - fp.metric[idx] / mmax);
        report.failures.push_back({with_human[idx]->id, gap});
      }
    } catch (const Error &e) {
      report.diagnostics.push_back(std::string("failure analysis skipped: ") +
                                   e.what());
    }
  }

  report.captions = std::move(results);
  return report;
}

}  // namespace

RunReport run_batch_serial(std::span<const DatasetEntry> entries,
                           const SynonymLexicon &lex,
                           const BatchOptions &options) {
  if (entries.empty()) throw Error("run_batch: empty dataset");
  std::vector<PerCaptionResult> results(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i)
    results[i] = score_entry(entries[i], lex, options);
  std::vector<std::string> notes;
  if (options.baselines.cider) attach_cider(entries, results, notes);
  return finalize(entries, std::move(results), options, std::move(notes));
}

RunReport run_batch(std::span<const DatasetEntry> entries,
                    const SynonymLexicon &lex, const BatchOptions &options) {
  if (entries.empty()) throw Error("run_batch: empty dataset");
  std::vector<PerCaptionResult> results(entries.size());
  auto n = static_cast<std::ptrdiff_t>(entries.size());
#ifdef _OPENMP
  int workers =
      options.workers > 0 ? options.workers : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(workers)
  for (std::ptrdiff_t i = 0; i < n; ++i)
    results[static_cast<std::size_t>(i)] =
        score_entry(entries[static_cast<std::size_t>(i)], lex, options);
#else
  for (std::ptrdiff_t i = 0; i < n; ++i)
    results[static_cast<std::size_t>(i)] =
        score_entry(entries[static_cast<std::size_t>(i)], lex, options);
#endif
  std::vector<std::string> notes;
  if (options.baselines.cider) attach_cider(entries, results, notes);
  return finalize(entries, std::move(results), options, std::move(notes));
}

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::string fmt(const std::optional<double> &v) {
  return v ? fmt(*v) : std::string("n/a");
}

ordered_json json_or_null(const std::optional<double> &v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

}  // namespace

std::string RunReport::to_tsv() const {
  std::ostringstream out;
  out << "metric\tpearson\tspearman\tkendall\tn\n";
  for (const CorrelationRow &row : correlations)
    out << row.metric << '\t' << fmt(row.pearson) << '\t' << fmt(row.spearman)
        << '\t' << fmt(row.kendall) << '\t' << row.n << '\n';
  if (human.computed())
    out << "human\t" << fmt(human.pearson) << '\t' << fmt(human.spearman)
        << '\t' << fmt(human.kendall) << '\t' << human.pairs_used << '\n';

  out << "\nsummary\tvalue\n";
  out << "parser\t" << parser_mode_name(config.parser_mode) << '\n';
  out << "extension\t" << (config.extension ? "on" : "off") << '\n';
  out << "denominator\t" << denominator_mode_name(denominator) << '\n';
  out << "entries\t" << captions.size() << '\n';
  out << "zero_count\t" << zero_count << '\n';
  out << "threshold_fraction\t" << fmt(threshold_fraction) << '\n';
  out << "tau\t" << fmt(tau) << '\n';
  out << "theta\t" << fmt(theta) << '\n';
  out << "flagged\t" << failures.size() << '\n';

  if (!failures.empty()) {
    out << "\nflagged_id\tgap\n";
    for (const FlaggedCaption &f : failures)
      out << f.id << '\t' << fmt(f.gap) << '\n';
  }

  if (!diagnostics.empty()) {
    out << "\ndiagnostic\n";
    for (const std::string &d : diagnostics) out << d << '\n';
  }

  out << "\nid\tf1\tprecision\trecall\tmatched\tcand_tuples\tref_tuples"
         "\tbleu\trouge_l\tcider\thuman_mean\tnote\n";
  for (const PerCaptionResult &r : captions)
    out << r.id << '\t' << fmt(r.graph.f1) << '\t' << fmt(r.graph.precision)
        << '\t' << fmt(r.graph.recall) << '\t' << r.graph.matched << '\t'
        << r.graph.cand_total << '\t' << r.graph.ref_total << '\t'
        << fmt(r.bleu) << '\t' << fmt(r.rouge) << '\t' << fmt(r.cider) << '\t'
        << fmt(r.human_mean) << '\t' << r.diagnostic << '\n';
  return out.str();
}

std::string RunReport::to_jsonl() const {
  std::ostringstream out;
  auto emit = [&](const ordered_json &doc) { out << doc.dump() << '\n'; };

  emit({{"type", "run"},
        {"parser", parser_mode_name(config.parser_mode)},
        {"extension", config.extension},
        {"denominator", denominator_mode_name(denominator)},
        {"entries", captions.size()},
        {"zero_count", zero_count},
        {"threshold_fraction", threshold_fraction},
        {"tau", tau},
        {"theta", theta}});

  for (const CorrelationRow &row : correlations)
    emit({{"type", "correlation"},
          {"metric", row.metric},
          {"pearson", json_or_null(row.pearson)},
          {"spearman", json_or_null(row.spearman)},
          {"kendall", json_or_null(row.kendall)},
          {"n", row.n}});

  if (human.computed())
    emit({{"type", "human_agreement"},
          {"pearson", json_or_null(human.pearson)},
          {"spearman", json_or_null(human.spearman)},
          {"kendall", json_or_null(human.kendall)},
          {"pairs_used", human.pairs_used},
          {"pairs_skipped", human.pairs_skipped}});

  for (const PerCaptionResult &r : captions)
    emit({{"type", "caption"},
          {"id", r.id},
          {"f1", r.graph.f1},
          {"precision", r.graph.precision},
          {"recall", r.graph.recall},
          {"matched", r.graph.matched},
          {"cand_tuples", r.graph.cand_total},
          {"ref_tuples", r.graph.ref_total},
          {"bleu", json_or_null(r.bleu)},
          {"rouge_l", json_or_null(r.rouge)},
          {"cider", json_or_null(r.cider)},
          {"human_mean", json_or_null(r.human_mean)},
          {"diagnostic", r.diagnostic.empty()
                             ? ordered_json(nullptr)
                             : ordered_json(r.diagnostic)}});

  for (const FlaggedCaption &f : failures)
    emit({{"type", "failure"},
          {"id", f.id},
          {"gap", f.gap},
          {"category", nullptr}});

  for (const std::string &d : diagnostics)
    emit({{"type", "diagnostic"}, {"message", d}});

  return out.str();
}

std::vector<AblationRow> run_ablation(std::span<const DatasetEntry> entries,
                                      const SynonymLexicon &lex) {
  const AblationConfig grid[4] = {{ParserMode::Ud, false},
                                  {ParserMode::Ud, true},
                                  {ParserMode::Pas, false},
                                  {ParserMode::Pas, true}};
  std::vector<AblationRow> rows;
  rows.reserve(4);
  for (const AblationConfig &config : grid) {
    BatchOptions options;
    options.config = config;
    RunReport report = run_batch(entries, lex, options);
    AblationRow row;
    row.config = config;
    row.n = report.captions.size();
    row.zero_count = report.zero_count;
    const CorrelationRow &cr = report.correlations.front();
    row.pearson = cr.pearson;
    row.spearman = cr.spearman;
    row.kendall = cr.kendall;
    rows.push_back(row);
  }
  return rows;
}

std::string ablation_to_tsv(std::span<const AblationRow> rows) {
  std::ostringstream out;
  out << "parser\textension\tpearson\tspearman\tkendall\tM\tn\n";
  for (const AblationRow &row : rows)
    out << parser_mode_name(row.config.parser_mode) << '\t'
        << (row.config.extension ? "on" : "off") << '\t' << fmt(row.pearson)
        << '\t' << fmt(row.spearman) << '\t' << fmt(row.kendall) << '\t'
        << row.zero_count << '\t' << row.n << '\n';
  return out.str();
}

}  // namespace sgscore
