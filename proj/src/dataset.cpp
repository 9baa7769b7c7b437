#include "sgscore/dataset.hpp"

#include <istream>
#include <set>

#include <nlohmann/json.hpp>

#include "sgscore/error.hpp"

namespace sgscore {

using ordered_json = nlohmann::ordered_json;

double DatasetEntry::human_mean() const {
  if (human_scores.empty())
    throw Error("entry " + id + " has no human scores");
  double sum = 0.0;
  for (const HumanScore &h : human_scores) sum += h.score;
  return sum / static_cast<double>(human_scores.size());
}

namespace {

std::string join_path(const std::string &outer, const std::string &inner) {
  if (inner.empty()) return outer;
  return outer + "." + inner;
}

AnnotatedCaption caption_at(const ordered_json &node, const std::string &where,
                            std::size_t line) {
  if (!node.is_object())
    throw ParseError(line, where, "expected an annotation object");
  try {
    return caption_from_json(node.dump(), line);
  } catch (const ParseError &e) {
    throw ParseError(line, join_path(where, e.path()), e.detail());
  }
}

}  // namespace

DatasetEntry entry_from_json(const std::string &text, std::size_t line) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const std::exception &e) {
    throw ParseError(line, "", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError(line, "", "expected a JSON object");

  DatasetEntry entry;
  if (!doc.contains("id") || !doc["id"].is_string() ||
      doc["id"].get<std::string>().empty())
    throw ParseError(line, "id", "expected a non-empty string");
  entry.id = doc["id"].get<std::string>();

  if (!doc.contains("candidate"))
    throw ParseError(line, "candidate", "missing field");
  entry.candidate = caption_at(doc["candidate"], "candidate", line);

  if (!doc.contains("references") || !doc["references"].is_array() ||
      doc["references"].empty())
    throw ParseError(line, "references", "expected a non-empty array");
  const auto &refs = doc["references"];
  for (std::size_t i = 0; i < refs.size(); ++i)
    entry.references.push_back(caption_at(
        refs[i], "references[" + std::to_string(i) + "]", line));

  if (doc.contains("human_scores")) {
    const auto &scores = doc["human_scores"];
    if (!scores.is_array())
      throw ParseError(line, "human_scores", "expected an array");
    for (std::size_t i = 0; i < scores.size(); ++i) {
      std::string where = "human_scores[" + std::to_string(i) + "]";
      const auto &item = scores[i];
      if (!item.is_object())
        throw ParseError(line, where, "expected an object");
      if (!item.contains("evaluator") || !item["evaluator"].is_string() ||
          item["evaluator"].get<std::string>().empty())
        throw ParseError(line, where + ".evaluator",
                         "expected a non-empty string");
      if (!item.contains("score") || !item["score"].is_number_integer())
        throw ParseError(line, where + ".score", "expected an integer");
      int score = item["score"].get<int>();
      if (score < 1 || score > 5)
        throw ParseError(line, where + ".score", "score must be in 1..5");
      entry.human_scores.push_back({item["evaluator"].get<std::string>(),
                                    score});
    }
  }
  return entry;
}

std::string entry_to_json(const DatasetEntry &entry) {
  ordered_json doc;
  doc["id"] = entry.id;
  doc["candidate"] = ordered_json::parse(caption_to_json(entry.candidate));
  auto &refs = doc["references"] = ordered_json::array();
  for (const AnnotatedCaption &ref : entry.references)
    refs.push_back(ordered_json::parse(caption_to_json(ref)));
  auto &scores = doc["human_scores"] = ordered_json::array();
  for (const HumanScore &h : entry.human_scores)
    scores.push_back({{"evaluator", h.evaluator}, {"score", h.score}});
  return doc.dump();
}

namespace {

template <typename OnEntry, typename OnError>
void scan_dataset(std::istream &in, OnEntry on_entry, OnError on_error) {
  std::set<std::string> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      DatasetEntry entry = entry_from_json(line, lineno);
      if (!seen.insert(entry.id).second)
        throw ParseError(lineno, "id", "duplicate id \"" + entry.id + "\"");
      on_entry(std::move(entry));
    } catch (const ParseError &e) {
      on_error(e);
    }
  }
}

}  // namespace

std::vector<DatasetEntry> load_dataset(std::istream &in) {
  std::vector<DatasetEntry> entries;
  scan_dataset(
      in, [&](DatasetEntry entry) { entries.push_back(std::move(entry)); },
      [](const ParseError &e) -> void { throw e; });
  return entries;
}

LoadedDataset load_dataset_lenient(std::istream &in) {
  LoadedDataset out;
  scan_dataset(
      in, [&](DatasetEntry entry) { out.entries.push_back(std::move(entry)); },
      [&](const ParseError &e) { out.diagnostics.push_back(e.what()); });
  return out;
}

EvaluatorMatrix evaluator_matrix(std::span<const DatasetEntry> entries) {
  EvaluatorMatrix m;
  for (const DatasetEntry &entry : entries)
    for (const HumanScore &h : entry.human_scores)
      m[h.evaluator].emplace(entry.id, h.score);
  return m;
}

}  // namespace sgscore
