#ifndef SGSCORE_PARSER_HPP
#define SGSCORE_PARSER_HPP

#include <optional>
#include <set>
#include <vector>

#include "sgscore/annotation.hpp"
#include "sgscore/scene_graph.hpp"

namespace sgscore {

// Pas: full rule engine over predicate-argument links and dependency
// patterns, with zero-pronoun completion.
// Ud: degraded head/label-only extraction used as an ablation arm; ignores
// predicate-argument links and performs no completion.
enum class ParserMode { Pas, Ud };

std::optional<ParserMode> parser_mode_from_name(const std::string &name);
const char *parser_mode_name(ParserMode mode);

// A scene graph under construction. Relations remember the predicate token
// they came from so the clausal-modifier pattern can fill unresolved
// subjects afterwards.
struct GraphBuilder {
  struct PendingRelation {
    Lemma subject;  // may be the zero pronoun
    Lemma relation;
    Lemma object;
    int source = -1;  // predicate token index, -1 when not from a predicate
  };

  std::set<Lemma> objects;
  std::vector<PendingRelation> relations;
  std::set<AttributeEdge> attributes;
  std::set<int> consumed;  // tokens used up as attributes, not object nodes

  SceneGraph finish() const;
};

// Case-frame rules: for every predicate token with argument links, the
// ga-argument becomes the relation subject (the zero pronoun when absent)
// and every other argument becomes a relation object. The wo-argument keeps
// the bare predicate lemma as the relation label; other cases append their
// tag ("sasu+ni") so distinct roles stay distinct tuples. An adjectival
// predicate with a subject and no other arguments yields an attribute
// instead.
void apply_case_rules(const AnnotatedCaption &caption, GraphBuilder &g);

// Dependency patterns over nouns:
//  - adjectival modifier -> attribute on the head noun (skipped when the
//    adjective carries its own argument links; those win),
//  - "A no B" -> attribute when A is a property noun, else a relation
//    labeled "no" from B to A,
//  - clausal noun modifier -> the head noun fills the ga-slot of relations
//    the clause predicate left without a subject.
void apply_noun_patterns(const AnnotatedCaption &caption, GraphBuilder &g);

// Zero-pronoun completion: a relation (phi, r, o) is rewritten to (s, r, o)
// for every other relation (s, r', o) with a resolved subject s; with no
// such donor the edge keeps phi. One pass, idempotent.
SceneGraph complete_zero_pronouns(const SceneGraph &g);

// Deterministic caption-to-graph parse in the requested mode.
SceneGraph parse_scene_graph(const AnnotatedCaption &caption, ParserMode mode);

}  // namespace sgscore

#endif  // SGSCORE_PARSER_HPP
