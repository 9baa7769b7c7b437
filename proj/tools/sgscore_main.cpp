#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sgscore/conll.hpp"
#include "sgscore/dot_export.hpp"
#include "sgscore/error.hpp"
#include "sgscore/harness.hpp"

namespace {

using namespace sgscore;

std::ifstream open_input(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  return in;
}

std::vector<AnnotatedCaption> read_annotation_file(const std::string &path) {
  std::ifstream in = open_input(path);
  return read_annotations(in);
}

SynonymLexicon load_lexicon_file(const std::string &path) {
  if (path.empty()) return {};
  std::ifstream in = open_input(path);
  return load_lexicon(in);
}

struct ScoreArgs {
  std::string candidate;
  std::string references;
  std::string lexicon;
  bool no_extension = false;
  std::string parser = "pas";
  std::string denominator = "original";
};

void run_score(const ScoreArgs &args) {
  auto cands = read_annotation_file(args.candidate);
  if (cands.size() != 1)
    throw Error(args.candidate + ": expected exactly one annotation, found " +
                std::to_string(cands.size()));
  auto ref_captions = read_annotation_file(args.references);
  if (ref_captions.empty())
    throw Error(args.references + ": no annotations found");

  ParserMode mode = *parser_mode_from_name(args.parser);
  SynonymLexicon lex = load_lexicon_file(args.lexicon);
  SceneGraph cand = parse_scene_graph(cands[0], mode);
  std::vector<SceneGraph> refs;
  refs.reserve(ref_captions.size());
  for (const AnnotatedCaption &ref : ref_captions)
    refs.push_back(parse_scene_graph(ref, mode));

  ScoreTriple s =
      score_pair(cand, refs, lex, !args.no_extension,
                 *denominator_mode_from_name(args.denominator));
  nlohmann::ordered_json doc = {{"f1", s.f1},
                                {"precision", s.precision},
                                {"recall", s.recall},
                                {"matched", s.matched},
                                {"cand_tuples", s.cand_total},
                                {"ref_tuples", s.ref_total}};
  std::cout << doc.dump() << '\n';
}

struct BatchArgs {
  std::string dataset;
  std::string lexicon;
  bool no_extension = false;
  std::string parser = "pas";
  std::string denominator = "original";
  std::vector<std::string> baselines;
  std::string report;
  double threshold_fraction = 0.336;
  double theta = 1.0;
  int workers = 0;
};

BaselineFlags baseline_flags(const std::vector<std::string> &names) {
  BaselineFlags flags;
  for (const std::string &name : names) {
    if (name == "bleu")
      flags.bleu = true;
    else if (name == "rouge")
      flags.rouge = true;
    else if (name == "cider")
      flags.cider = true;
    else
      throw Error("unknown baseline \"" + name +
                  "\" (expected bleu, rouge, cider)");
  }
  return flags;
}

void run_batch_cmd(const BatchArgs &args) {
  std::ifstream in = open_input(args.dataset);
  LoadedDataset data = load_dataset_lenient(in);
  if (data.entries.empty()) {
    for (const std::string &d : data.diagnostics)
      std::cerr << args.dataset << ": " << d << '\n';
    throw Error(args.dataset + ": no usable entries");
  }

  BatchOptions options;
  options.config.parser_mode = *parser_mode_from_name(args.parser);
  options.config.extension = !args.no_extension;
  options.denominator = *denominator_mode_from_name(args.denominator);
  options.baselines = baseline_flags(args.baselines);
  options.threshold_fraction = args.threshold_fraction;
  options.theta = args.theta;
  options.workers = args.workers;

  SynonymLexicon lex = load_lexicon_file(args.lexicon);
  RunReport report = run_batch(data.entries, lex, options);
  report.diagnostics.insert(report.diagnostics.begin(),
                            data.diagnostics.begin(), data.diagnostics.end());

  std::cout << report.to_jsonl();
  if (!args.report.empty()) {
    std::ofstream out(args.report, std::ios::binary);
    if (!out) throw Error("cannot open " + args.report + " for writing");
    out << report.to_tsv();
    if (!out) throw Error("failed writing " + args.report);
  }
}

struct AblateArgs {
  std::string dataset;
  std::string lexicon;
};

void run_ablate(const AblateArgs &args) {
  std::ifstream in = open_input(args.dataset);
  LoadedDataset data = load_dataset_lenient(in);
  for (const std::string &d : data.diagnostics)
    std::cerr << args.dataset << ": " << d << '\n';
  if (data.entries.empty()) throw Error(args.dataset + ": no usable entries");
  SynonymLexicon lex = load_lexicon_file(args.lexicon);
  std::cout << ablation_to_tsv(run_ablation(data.entries, lex));
}

struct ExportArgs {
  std::string candidate;
  std::string out;
  std::string parser = "pas";
};

void run_export_dot(const ExportArgs &args) {
  auto cands = read_annotation_file(args.candidate);
  if (cands.size() != 1)
    throw Error(args.candidate + ": expected exactly one annotation, found " +
                std::to_string(cands.size()));
  SceneGraph g =
      parse_scene_graph(cands[0], *parser_mode_from_name(args.parser));
  export_dot(g, args.out);
}

struct AnnotateArgs {
  std::string cmd;
  std::string input;
  std::string output;
};

std::string make_temp() {
  std::string path = "/tmp/sgscore-XXXXXX";
  int fd = mkstemp(path.data());
  if (fd < 0) throw Error("cannot create temporary file");
  close(fd);
  return path;
}

void run_annotate(const AnnotateArgs &args) {
  std::ostringstream text;
  if (args.input.empty()) {
    text << std::cin.rdbuf();
  } else {
    std::ifstream in = open_input(args.input);
    text << in.rdbuf();
  }

  std::string in_path = make_temp();
  std::string out_path = make_temp();
  {
    std::ofstream out(in_path, std::ios::binary);
    out << text.str();
  }
  std::string command =
      args.cmd + " < '" + in_path + "' > '" + out_path + "'";
  int status = std::system(command.c_str());
  std::vector<AnnotatedCaption> captions;
  std::string failure;
  if (status != 0) {
    failure = "analyzer command failed: " + args.cmd;
  } else {
    std::ifstream conll(out_path, std::ios::binary);
    try {
      captions = read_conll(conll);
    } catch (const Error &e) {
      failure = e.what();
    }
  }
  std::remove(in_path.c_str());
  std::remove(out_path.c_str());
  if (!failure.empty()) throw Error(failure);

  std::ostream *out = &std::cout;
  std::ofstream file;
  if (!args.output.empty()) {
    file.open(args.output, std::ios::binary);
    if (!file) throw Error("cannot open " + args.output + " for writing");
    out = &file;
  }
  for (const AnnotatedCaption &caption : captions)
    *out << caption_to_json(caption) << '\n';
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Scene-graph based caption scoring toolkit"};
  app.require_subcommand(1);

  auto parser_check = CLI::IsMember({"pas", "ud"});
  auto denominator_check = CLI::IsMember({"original", "extended"});

  ScoreArgs score_args;
  auto *score = app.add_subcommand(
      "score", "Score one candidate caption against a reference set");
  score->add_option("--candidate", score_args.candidate,
                    "Annotation file holding exactly one caption")
      ->required();
  score->add_option("--references", score_args.references,
                    "Annotation file, one reference per line")
      ->required();
  score->add_option("--lexicon", score_args.lexicon, "Synonym lexicon TSV");
  score->add_flag("--no-extension", score_args.no_extension,
                  "Disable synonym graph extension");
  score->add_option("--parser", score_args.parser, "Parser mode")
      ->check(parser_check);
  score->add_option("--denominator", score_args.denominator,
                    "Tuple count denominators")
      ->check(denominator_check);
  score->callback([&] { run_score(score_args); });

  BatchArgs batch_args;
  auto *batch = app.add_subcommand(
      "batch", "Score a dataset and report correlations with human ratings");
  batch->add_option("--dataset", batch_args.dataset, "Dataset JSONL file")
      ->required();
  batch->add_option("--lexicon", batch_args.lexicon, "Synonym lexicon TSV");
  batch->add_flag("--no-extension", batch_args.no_extension,
                  "Disable synonym graph extension");
  batch->add_option("--parser", batch_args.parser, "Parser mode")
      ->check(parser_check);
  batch->add_option("--denominator", batch_args.denominator,
                    "Tuple count denominators")
      ->check(denominator_check);
  batch->add_option("--baselines", batch_args.baselines,
                    "Comma-separated baseline metrics (bleu,rouge,cider)")
      ->delimiter(',');
  batch->add_option("--report", batch_args.report,
                    "Write the human-readable TSV report to this file");
  batch->add_option("--threshold-fraction", batch_args.threshold_fraction,
                    "Quantile fraction for the tau threshold");
  batch->add_option("--theta", batch_args.theta,
                    "Failure-flagging threshold");
  batch->add_option("--workers", batch_args.workers,
                    "Worker threads (0 = library default)");
  batch->callback([&] { run_batch_cmd(batch_args); });

  AblateArgs ablate_args;
  auto *ablate = app.add_subcommand(
      "ablate", "Run the 4-arm parser/extension ablation grid");
  ablate->add_option("--dataset", ablate_args.dataset, "Dataset JSONL file")
      ->required();
  ablate->add_option("--lexicon", ablate_args.lexicon, "Synonym lexicon TSV")
      ->required();
  ablate->callback([&] { run_ablate(ablate_args); });

  ExportArgs export_args;
  auto *exporter = app.add_subcommand(
      "export-dot", "Render a caption's scene graph as a DOT file");
  exporter->add_option("--candidate", export_args.candidate,
                       "Annotation file holding exactly one caption")
      ->required();
  exporter->add_option("--out", export_args.out, "Output DOT path")
      ->required();
  exporter->add_option("--parser", export_args.parser, "Parser mode")
      ->check(parser_check);
  exporter->callback([&] { run_export_dot(export_args); });

  AnnotateArgs annotate_args;
  auto *annotate = app.add_subcommand(
      "annotate",
      "Run an external analyzer and convert its CoNLL-style output to "
      "annotation JSONL");
  annotate->add_option("--cmd", annotate_args.cmd,
                       "Analyzer command (reads text on stdin, writes "
                       "CoNLL-style rows on stdout)")
      ->required();
  annotate->add_option("--input", annotate_args.input,
                       "Caption text file (default: stdin)");
  annotate->add_option("--output", annotate_args.output,
                       "Annotation JSONL output (default: stdout)");
  annotate->callback([&] { run_annotate(annotate_args); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
