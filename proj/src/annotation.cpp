#include "sgscore/annotation.hpp"

#include <algorithm>
#include <istream>
#include <nlohmann/json.hpp>

#include "sgscore/error.hpp"

namespace sgscore {

using ordered_json = nlohmann::ordered_json;

const std::vector<std::string> kCaseTags = {
    "ga", "wo", "ni", "to", "de", "kara", "yori", "he", "made", "deep"};

bool is_case_tag(const std::string &tag) {
  return std::find(kCaseTags.begin(), kCaseTags.end(), tag) != kCaseTags.end();
}

const char *pos_name(Pos p) {
  switch (p) {
    case Pos::Noun: return "noun";
    case Pos::Verb: return "verb";
    case Pos::Adjective: return "adjective";
    case Pos::Adverb: return "adverb";
    case Pos::Particle: return "particle";
    case Pos::Aux: return "aux";
    case Pos::Other: return "other";
  }
  return "other";
}

std::optional<Pos> pos_from_name(const std::string &name) {
  if (name == "noun") return Pos::Noun;
  if (name == "verb") return Pos::Verb;
  if (name == "adjective") return Pos::Adjective;
  if (name == "adverb") return Pos::Adverb;
  if (name == "particle") return Pos::Particle;
  if (name == "aux") return Pos::Aux;
  if (name == "other") return Pos::Other;
  return std::nullopt;
}

std::vector<std::string> AnnotatedCaption::surfaces() const {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const Token &t : tokens) out.push_back(t.surface);
  return out;
}

void validate_caption(const AnnotatedCaption &caption, std::size_t line) {
  const auto &tokens = caption.tokens;
  const int n = static_cast<int>(tokens.size());
  auto path = [&](int i, const char *field) {
    return "tokens[" + std::to_string(i) + "]." + field;
  };

  int roots = 0;
  for (int i = 0; i < n; ++i) {
    const Token &t = tokens[i];
    if (t.index != i)
      throw ParseError(line, path(i, "i"),
                       "token index " + std::to_string(t.index) +
                           " does not match position " + std::to_string(i));
    if (t.head == i)
      throw ParseError(line, path(i, "head"),
                       "token " + std::to_string(i) + " is its own head");
    if (t.head < -1 || t.head >= n)
      throw ParseError(line, path(i, "head"),
                       "head " + std::to_string(t.head) + " out of range");
    if (t.head == -1) ++roots;
    if (t.case_tag && !is_case_tag(*t.case_tag))
      throw ParseError(line, path(i, "case"),
                       "unknown case tag \"" + *t.case_tag + "\"");
    if (!t.args.empty() && t.pos != Pos::Verb && t.pos != Pos::Adjective)
      throw ParseError(line, path(i, "args"),
                       "predicate-argument links on non-predicate token");
    for (std::size_t k = 0; k < t.args.size(); ++k) {
      const ArgLink &a = t.args[k];
      std::string apath = path(i, "args") + "[" + std::to_string(k) + "]";
      if (!is_case_tag(a.case_tag))
        throw ParseError(line, apath,
                         "unknown case tag \"" + a.case_tag + "\"");
      if (a.target < 0 || a.target >= n)
        throw ParseError(line, apath, "argument target " +
                                          std::to_string(a.target) +
                                          " out of range");
      if (a.target == i)
        throw ParseError(line, apath, "predicate is its own argument");
    }
  }
  if (n > 0 && roots != 1)
    throw ParseError(line, "tokens",
                     "expected exactly one root, found " +
                         std::to_string(roots));
  // Head links must form a tree: walking up from any token reaches the root
  // without revisiting a node.
  for (int i = 0; i < n; ++i) {
    std::vector<char> seen(n, 0);
    int cur = i;
    while (cur != -1) {
      if (seen[cur])
        throw ParseError(line, path(i, "head"),
                         "cyclic head links through token " +
                             std::to_string(cur));
      seen[cur] = 1;
      cur = tokens[cur].head;
    }
  }
}

namespace {

template <typename F>
auto at_path(std::size_t line, const std::string &path, F &&f) {
  try {
    return f();
  } catch (const ParseError &) {
    throw;
  } catch (const std::exception &e) {
    throw ParseError(line, path, e.what());
  }
}

Token token_from_json(const ordered_json &doc, int position, std::size_t line) {
  std::string base = "tokens[" + std::to_string(position) + "]";
  if (!doc.is_object()) throw ParseError(line, base, "expected an object");
  Token t;
  t.index = at_path(line, base + ".i",
                    [&] { return doc.at("i").get<int>(); });
  t.surface = at_path(line, base + ".surface",
                      [&] { return doc.at("surface").get<std::string>(); });
  t.lemma = at_path(line, base + ".lemma", [&] {
    return Lemma::make(doc.at("lemma").get<std::string>());
  });
  std::string pos = at_path(line, base + ".pos", [&] {
    return doc.at("pos").get<std::string>();
  });
  auto parsed = pos_from_name(pos);
  if (!parsed)
    throw ParseError(line, base + ".pos", "unknown tag \"" + pos + "\"");
  t.pos = *parsed;
  t.head = at_path(line, base + ".head",
                   [&] { return doc.at("head").get<int>(); });
  if (doc.contains("dep") && !doc.at("dep").is_null())
    t.dep = at_path(line, base + ".dep",
                    [&] { return doc.at("dep").get<std::string>(); });
  if (doc.contains("case") && !doc.at("case").is_null())
    t.case_tag = at_path(line, base + ".case", [&] {
      return doc.at("case").get<std::string>();
    });
  if (doc.contains("prop_noun") && !doc.at("prop_noun").is_null())
    t.prop_noun = at_path(line, base + ".prop_noun", [&] {
      return doc.at("prop_noun").get<bool>();
    });
  if (doc.contains("args") && !doc.at("args").is_null()) {
    const auto &args = doc.at("args");
    if (!args.is_array())
      throw ParseError(line, base + ".args", "expected an array");
    for (std::size_t k = 0; k < args.size(); ++k) {
      std::string apath = base + ".args[" + std::to_string(k) + "]";
      ArgLink link;
      link.case_tag = at_path(line, apath, [&] {
        return args[k].at("case").get<std::string>();
      });
      link.target = at_path(line, apath, [&] {
        return args[k].at("target").get<int>();
      });
      t.args.push_back(std::move(link));
    }
  }
  return t;
}

}  // namespace

AnnotatedCaption caption_from_json(const std::string &text, std::size_t line) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const std::exception &e) {
    throw ParseError(line, "", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object())
    throw ParseError(line, "", "expected an annotation object");
  AnnotatedCaption caption;
  caption.caption_id = at_path(line, "caption_id", [&] {
    return doc.at("caption_id").get<std::string>();
  });
  const auto &tokens = at_path(line, "tokens", [&]() -> const ordered_json & {
    return doc.at("tokens");
  });
  if (!tokens.is_array())
    throw ParseError(line, "tokens", "expected an array");
  for (std::size_t i = 0; i < tokens.size(); ++i)
    caption.tokens.push_back(
        token_from_json(tokens[i], static_cast<int>(i), line));
  validate_caption(caption, line);
  return caption;
}

std::string caption_to_json(const AnnotatedCaption &caption) {
  ordered_json doc;
  doc["caption_id"] = caption.caption_id;
  auto &tokens = doc["tokens"] = ordered_json::array();
  for (const Token &t : caption.tokens) {
    ordered_json tok;
    tok["i"] = t.index;
    tok["surface"] = t.surface;
    tok["lemma"] = t.lemma.text();
    tok["pos"] = pos_name(t.pos);
    tok["head"] = t.head;
    tok["dep"] = t.dep;
    if (t.case_tag)
      tok["case"] = *t.case_tag;
    else
      tok["case"] = nullptr;
    tok["prop_noun"] = t.prop_noun;
    auto &args = tok["args"] = ordered_json::array();
    for (const ArgLink &a : t.args)
      args.push_back({{"case", a.case_tag}, {"target", a.target}});
    tokens.push_back(std::move(tok));
  }
  return doc.dump();
}

std::vector<AnnotatedCaption> read_annotations(std::istream &in) {
  std::vector<AnnotatedCaption> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(caption_from_json(line, lineno));
  }
  return out;
}

}  // namespace sgscore
