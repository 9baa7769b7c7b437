#include "sgscore/conll.hpp"

#include <istream>
#include <map>
#include <sstream>
#include <string>

#include "sgscore/error.hpp"

namespace sgscore {

namespace {

std::string strip(const std::string &s) {
  auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string &s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

bool empty_col(const std::string &col) { return col.empty() || col == "_"; }

int parse_int(const std::string &col, std::size_t line, const char *field) {
  try {
    std::size_t used = 0;
    int value = std::stoi(col, &used);
    if (used != col.size()) throw std::invalid_argument(col);
    return value;
  } catch (const std::exception &) {
    throw ParseError(line, field, "expected an integer, got \"" + col + "\"");
  }
}

// Unknown tags degrade to Other so an analyzer's full tag set never kills
// ingestion; only the tags the parser rules use need to map.
Pos parse_pos(const std::string &col) {
  if (auto native = pos_from_name(col)) return *native;
  static const std::map<std::string, Pos> upos = {
      {"NOUN", Pos::Noun},     {"PROPN", Pos::Noun},
      {"PRON", Pos::Noun},     {"VERB", Pos::Verb},
      {"ADJ", Pos::Adjective}, {"ADV", Pos::Adverb},
      {"ADP", Pos::Particle},  {"PART", Pos::Particle},
      {"AUX", Pos::Aux}};
  auto it = upos.find(col);
  return it != upos.end() ? it->second : Pos::Other;
}

bool parse_prop(const std::string &col, std::size_t line) {
  if (empty_col(col) || col == "0" || col == "false" || col == "no")
    return false;
  if (col == "1" || col == "true" || col == "yes" || col == "prop")
    return true;
  throw ParseError(line, "prop", "unusable flag \"" + col + "\"");
}

std::vector<ArgLink> parse_args(const std::string &col, std::size_t line) {
  std::vector<ArgLink> args;
  if (empty_col(col)) return args;
  for (const std::string &item : split(col, '|')) {
    auto colon = item.find(':');
    if (colon == std::string::npos || colon == 0)
      throw ParseError(line, "args",
                       "expected case:target, got \"" + item + "\"");
    std::string tag = item.substr(0, colon);
    if (!is_case_tag(tag))
      throw ParseError(line, "args", "unknown case tag \"" + tag + "\"");
    int target = parse_int(item.substr(colon + 1), line, "args");
    if (target < 1)
      throw ParseError(line, "args", "argument target must be 1-based");
    args.push_back({tag, target - 1});
  }
  return args;
}

Token parse_token(const std::string &line_text, std::size_t line) {
  std::vector<std::string> cols = split(line_text, '\t');
  if (cols.size() != 9)
    throw ParseError(line, "",
                     "expected 9 tab-separated columns, got " +
                         std::to_string(cols.size()));
  Token t;
  t.index = parse_int(cols[0], line, "id") - 1;
  t.surface = cols[1];
  try {
    t.lemma = Lemma::make(empty_col(cols[2]) ? cols[1] : cols[2]);
  } catch (const Error &e) {
    throw ParseError(line, "lemma", e.what());
  }
  t.pos = parse_pos(cols[3]);
  t.head = parse_int(cols[4], line, "head") - 1;
  t.dep = empty_col(cols[5]) ? "" : cols[5];
  if (!empty_col(cols[6])) {
    if (!is_case_tag(cols[6]))
      throw ParseError(line, "case", "unknown case tag \"" + cols[6] + "\"");
    t.case_tag = cols[6];
  }
  t.prop_noun = parse_prop(cols[7], line);
  t.args = parse_args(cols[8], line);
  return t;
}

}  // namespace

std::vector<AnnotatedCaption> read_conll(std::istream &in) {
  std::vector<AnnotatedCaption> out;
  AnnotatedCaption current;
  std::string pending_id;
  std::size_t first_line = 0;
  std::size_t lineno = 0;

  auto flush = [&] {
    if (current.tokens.empty()) {
      pending_id.clear();
      return;
    }
    current.caption_id = pending_id.empty()
                             ? "s" + std::to_string(out.size() + 1)
                             : pending_id;
    validate_caption(current, first_line);
    out.push_back(std::move(current));
    current = AnnotatedCaption{};
    pending_id.clear();
  };

  std::string raw;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string stripped = strip(line);
    if (stripped.empty()) {
      flush();
      continue;
    }
    if (stripped.front() == '#') {
      std::string comment = strip(stripped.substr(1));
      if (comment.rfind("id", 0) == 0) {
        auto eq = comment.find('=');
        if (eq != std::string::npos) {
          std::string id = strip(comment.substr(eq + 1));
          if (!id.empty()) pending_id = id;
        }
      }
      continue;
    }
    if (current.tokens.empty()) first_line = lineno;
    Token t = parse_token(line, lineno);
    if (t.index != static_cast<int>(current.tokens.size()))
      throw ParseError(lineno, "id",
                       "expected token id " +
                           std::to_string(current.tokens.size() + 1));
    current.tokens.push_back(std::move(t));
  }
  flush();
  return out;
}

}  // namespace sgscore
