#ifndef SGSCORE_ANNOTATION_HPP
#define SGSCORE_ANNOTATION_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sgscore/lemma.hpp"

namespace sgscore {

// Coarse part-of-speech tags accepted in annotation input.
enum class Pos { Noun, Verb, Adjective, Adverb, Particle, Aux, Other };

const char *pos_name(Pos p);
std::optional<Pos> pos_from_name(const std::string &name);

// The closed case-marker tag set: nominative ga, accusative wo, the oblique
// surface particles, and "deep" for semantic roles with no surface particle.
bool is_case_tag(const std::string &tag);
extern const std::vector<std::string> kCaseTags;

// One predicate-argument link: this predicate has an argument in the given
// case slot at token position `target`.
struct ArgLink {
  std::string case_tag;
  int target = -1;

  bool operator==(const ArgLink &) const = default;
};

struct Token {
  int index = 0;            // 0-based position
  std::string surface;
  Lemma lemma;
  Pos pos = Pos::Other;
  int head = -1;            // dependency head, -1 for root
  std::string dep;          // dependency label
  std::optional<std::string> case_tag;  // surface case marker, if any
  bool prop_noun = false;   // property noun ("A no B" attribute signal)
  std::vector<ArgLink> args;  // predicate-argument links (verbs/adjectives)

  bool operator==(const Token &) const = default;
};

// A tokenized caption with dependency and predicate-argument annotation.
// When tokens are present, the head links form a single rooted tree.
// An empty token list is allowed and parses to an empty scene graph.
struct AnnotatedCaption {
  std::string caption_id;
  std::vector<Token> tokens;

  bool operator==(const AnnotatedCaption &) const = default;

  // Surface forms in token order, the unit for the n-gram baselines.
  std::vector<std::string> surfaces() const;
};

// Validates all structural invariants: index/head ranges, single root,
// acyclicity, closed tag sets, args only on predicates. Throws ParseError
// with `line` and a field path on violation.
void validate_caption(const AnnotatedCaption &caption, std::size_t line = 0);

// Parses one annotation document (a single JSON object).
AnnotatedCaption caption_from_json(const std::string &text,
                                   std::size_t line = 0);
std::string caption_to_json(const AnnotatedCaption &caption);

// Reads line-delimited annotation documents; blank lines are skipped.
// Errors carry the 1-based line number.
std::vector<AnnotatedCaption> read_annotations(std::istream &in);

}  // namespace sgscore

#endif  // SGSCORE_ANNOTATION_HPP
