#include "sgscore/parser.hpp"

#include <map>

namespace sgscore {

std::optional<ParserMode> parser_mode_from_name(const std::string &name) {
  if (name == "pas") return ParserMode::Pas;
  if (name == "ud") return ParserMode::Ud;
  return std::nullopt;
}

const char *parser_mode_name(ParserMode mode) {
  return mode == ParserMode::Pas ? "pas" : "ud";
}

SceneGraph GraphBuilder::finish() const {
  std::vector<Lemma> objs(objects.begin(), objects.end());
  std::vector<RelationEdge> rels;
  rels.reserve(relations.size());
  for (const PendingRelation &r : relations)
    rels.push_back({r.subject, r.relation, r.object});
  std::vector<AttributeEdge> attrs(attributes.begin(), attributes.end());
  return build_graph(objs, rels, attrs);
}

namespace {

bool is_predicate(const Token &t) {
  return t.pos == Pos::Verb || t.pos == Pos::Adjective;
}

Lemma oblique_label(const Lemma &predicate, const std::string &case_tag) {
  if (case_tag == "wo") return predicate;
  return Lemma::make(predicate.text() + "+" + case_tag);
}

}  // namespace

void apply_case_rules(const AnnotatedCaption &caption, GraphBuilder &g) {
  const auto &tokens = caption.tokens;
  for (const Token &p : tokens) {
    if (!is_predicate(p) || p.args.empty()) continue;

    Lemma subject = Lemma::phi();
    for (const ArgLink &a : p.args) {
      if (a.case_tag == "ga") {
        subject = tokens[a.target].lemma;
        break;
      }
    }

    bool emitted = false;
    for (const ArgLink &a : p.args) {
      if (a.case_tag == "ga") continue;
      g.relations.push_back({subject, oblique_label(p.lemma, a.case_tag),
                             tokens[a.target].lemma, p.index});
      emitted = true;
    }

    // Predicative adjective: "zubon ga aoi" carries no oblique argument and
    // describes its subject.
    if (!emitted && p.pos == Pos::Adjective && !subject.is_phi())
      g.attributes.insert({subject, p.lemma});
  }
}

void apply_noun_patterns(const AnnotatedCaption &caption, GraphBuilder &g) {
  const auto &tokens = caption.tokens;
  auto head_of = [&](const Token &t) -> const Token * {
    return t.head >= 0 ? &tokens[t.head] : nullptr;
  };

  // Clausal noun modifier: the modified noun fills the ga-slot the clause
  // predicate left open.
  for (GraphBuilder::PendingRelation &r : g.relations) {
    if (!r.subject.is_phi() || r.source < 0) continue;
    const Token *head = head_of(tokens[r.source]);
    if (head && head->pos == Pos::Noun) r.subject = head->lemma;
  }

  for (const Token &t : tokens) {
    const Token *head = head_of(t);
    if (t.pos == Pos::Adjective) {
      // Attributive adjective; an adjective with its own argument links was
      // already handled by the case rules.
      if (t.args.empty() && head && head->pos == Pos::Noun)
        g.attributes.insert({head->lemma, t.lemma});
    } else if (t.pos == Pos::Noun && head && head->pos == Pos::Noun &&
               t.dep == "nmod") {
      // "A no B": property nouns describe B, other nouns relate to it.
      if (t.prop_noun) {
        g.attributes.insert({head->lemma, t.lemma});
        g.consumed.insert(t.index);
      } else {
        g.relations.push_back({head->lemma, Lemma::make("no"), t.lemma, -1});
      }
    }
  }
}

SceneGraph complete_zero_pronouns(const SceneGraph &g) {
  // Donor subjects per object: resolved subjects of incoming edges.
  std::map<Lemma, std::set<Lemma>> donors;
  for (const RelationEdge &r : g.relations)
    if (!r.subject.is_phi()) donors[r.object].insert(r.subject);

  SceneGraph out;
  out.objects = g.objects;
  out.attributes = g.attributes;
  for (const RelationEdge &r : g.relations) {
    if (!r.subject.is_phi()) {
      out.relations.insert(r);
      continue;
    }
    auto it = donors.find(r.object);
    if (it == donors.end() || it->second.empty()) {
      out.relations.insert(r);  // no donor, keep the zero pronoun
      continue;
    }
    for (const Lemma &s : it->second)
      out.relations.insert({s, r.relation, r.object});
  }
  return out;
}

namespace {

SceneGraph parse_pas(const AnnotatedCaption &caption) {
  GraphBuilder b;
  apply_case_rules(caption, b);
  apply_noun_patterns(caption, b);
  for (const Token &t : caption.tokens)
    if (t.pos == Pos::Noun && !b.consumed.count(t.index))
      b.objects.insert(t.lemma);
  return complete_zero_pronouns(b.finish());
}

// Degraded extraction: objects from every noun, attributes from adjectives
// hanging off nouns, relations only from nsubj/obj/obl links on verbs.
SceneGraph parse_ud(const AnnotatedCaption &caption) {
  const auto &tokens = caption.tokens;
  GraphBuilder b;
  for (const Token &t : tokens)
    if (t.pos == Pos::Noun) b.objects.insert(t.lemma);
  for (const Token &t : tokens) {
    if (t.pos == Pos::Adjective && t.head >= 0 &&
        tokens[t.head].pos == Pos::Noun)
      b.attributes.insert({tokens[t.head].lemma, t.lemma});
  }
  for (const Token &v : tokens) {
    if (v.pos != Pos::Verb) continue;
    Lemma subject = Lemma::phi();
    for (const Token &d : tokens) {
      if (d.head == v.index && d.pos == Pos::Noun && d.dep == "nsubj") {
        subject = d.lemma;
        break;
      }
    }
    for (const Token &d : tokens) {
      if (d.head != v.index || d.pos != Pos::Noun) continue;
      if (d.dep == "obj" || d.dep == "iobj" || d.dep == "obl")
        b.relations.push_back({subject, v.lemma, d.lemma, v.index});
    }
  }
  return b.finish();
}

}  // namespace

SceneGraph parse_scene_graph(const AnnotatedCaption &caption,
                             ParserMode mode) {
  return mode == ParserMode::Pas ? parse_pas(caption) : parse_ud(caption);
}

}  // namespace sgscore
