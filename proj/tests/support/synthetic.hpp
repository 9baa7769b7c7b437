#ifndef TESTS_SUPPORT_SYNTHETIC_HPP
#define TESTS_SUPPORT_SYNTHETIC_HPP

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include "generators.hpp"
#include "sgscore/dataset.hpp"

namespace testgen {

// Caption that is a single noun token.
inline AnnotatedCaption noun_only(const std::string &id,
                                  const std::string &noun) {
  AnnotatedCaption c;
  c.caption_id = id;
  Token t;
  t.index = 0;
  t.surface = noun;
  t.lemma = Lemma::make(noun);
  t.pos = Pos::Noun;
  t.head = -1;
  t.dep = "root";
  c.tokens.push_back(std::move(t));
  return c;
}

// Transitive clause "subject-ga object-wo verb", optionally with an
// adjective on the object.
inline AnnotatedCaption clause(const std::string &id,
                               const std::string &subject,
                               const std::string &verb,
                               const std::string &object,
                               const std::string &adjective = "") {
  AnnotatedCaption c;
  c.caption_id = id;
  bool adj = !adjective.empty();
  int object_at = adj ? 2 : 1;
  int verb_at = adj ? 3 : 2;
  auto add = [&](const std::string &surface, Pos pos, int head,
                 const char *dep) {
    Token t;
    t.index = static_cast<int>(c.tokens.size());
    t.surface = surface;
    t.lemma = Lemma::make(surface);
    t.pos = pos;
    t.head = head;
    t.dep = dep;
    c.tokens.push_back(std::move(t));
  };
  add(subject, Pos::Noun, verb_at, "nsubj");
  c.tokens[0].case_tag = "ga";
  if (adj) add(adjective, Pos::Adjective, object_at, "amod");
  add(object, Pos::Noun, verb_at, "obj");
  c.tokens[static_cast<std::size_t>(object_at)].case_tag = "wo";
  add(verb, Pos::Verb, -1, "root");
  c.tokens[static_cast<std::size_t>(verb_at)].args = {{"ga", 0},
                                                      {"wo", object_at}};
  validate_caption(c);
  return c;
}

// Two clauses sharing an object: "s-ga o-wo v1, o-wo v2". The root verb v2
// has no ga argument, so its relation subject stays phi until zero-pronoun
// completion borrows s from the v1 clause.
inline AnnotatedCaption phi_clause(const std::string &id, const std::string &s,
                                   const std::string &o, const std::string &v1,
                                   const std::string &v2) {
  AnnotatedCaption c;
  c.caption_id = id;
  auto add = [&](const std::string &surface, Pos pos, int head,
                 const char *dep) {
    Token t;
    t.index = static_cast<int>(c.tokens.size());
    t.surface = surface;
    t.lemma = Lemma::make(surface);
    t.pos = pos;
    t.head = head;
    t.dep = dep;
    c.tokens.push_back(std::move(t));
  };
  add(s, Pos::Noun, 2, "nsubj");
  c.tokens[0].case_tag = "ga";
  add(o, Pos::Noun, 2, "obj");
  c.tokens[1].case_tag = "wo";
  add(v1, Pos::Verb, 4, "advcl");
  c.tokens[2].args = {{"ga", 0}, {"wo", 1}};
  add(o, Pos::Noun, 4, "obj");
  c.tokens[3].case_tag = "wo";
  add(v2, Pos::Verb, -1, "root");
  c.tokens[4].args = {{"wo", 3}};
  validate_caption(c);
  return c;
}

inline DatasetEntry entry(const std::string &id, AnnotatedCaption cand,
                          std::vector<AnnotatedCaption> refs, int tier,
                          int tier2) {
  DatasetEntry e;
  e.id = id;
  e.candidate = std::move(cand);
  e.references = std::move(refs);
  e.human_scores.push_back({"e1", tier});
  e.human_scores.push_back({"e2", tier2});
  return e;
}

struct SyntheticDataset {
  std::vector<DatasetEntry> entries;
  SynonymLexicon lexicon;
};

// Deterministic dataset with planted families:
//   ident         candidate equals its reference            human 5
//   partial-strong reference carries one extra attribute    human 4
//   partial-weak  only the object noun is shared            human 2
//   phi           root relation recovered only by
//                 zero-pronoun completion                   human 5
//   syn           single nouns linked only via the lexicon  human 4
//   zero          disjoint vocabulary or empty candidate    human 1
// The syn and zero families pin the zero-score count M per ablation arm;
// the phi and syn families separate the PAS+extension arm's correlation
// from the UD arm's.
inline SyntheticDataset make_synthetic_dataset(unsigned seed, int n) {
  Rng rng(seed);
  SyntheticDataset out;
  auto next_id = [&] {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "c%05d",
                  static_cast<int>(out.entries.size()));
    return std::string(buf);
  };
  auto jitter = [&](int tier, int i) {
    return std::clamp(tier + (i % 3) - 1, 1, 5);
  };

  for (int i = 0; static_cast<int>(out.entries.size()) < n; ++i) {
    std::string t = std::to_string(i);
    std::string id = next_id();
    switch (i % 10) {
      case 0:
      case 1:
      case 2: {  // ident
        AnnotatedCaption cap = clause(id, "s" + t, "v" + t, "o" + t,
                                      rng.coin(0.5) ? "a" + t : "");
        out.entries.push_back(entry(id, cap, {cap}, 5, jitter(5, i)));
        break;
      }
      case 3:
      case 4: {  // partial-strong
        AnnotatedCaption cand = clause(id, "s" + t, "v" + t, "o" + t);
        AnnotatedCaption ref = clause(id, "s" + t, "v" + t, "o" + t, "a" + t);
        out.entries.push_back(
            entry(id, std::move(cand), {std::move(ref)}, 4, jitter(4, i)));
        break;
      }
      case 5: {  // partial-weak
        AnnotatedCaption cand =
            clause(id, "s" + t + "x", "v" + t + "x", "o" + t);
        AnnotatedCaption ref = clause(id, "s" + t, "v" + t, "o" + t);
        out.entries.push_back(
            entry(id, std::move(cand), {std::move(ref)}, 2, jitter(2, i)));
        break;
      }
      case 6:
      case 7: {  // phi
        AnnotatedCaption cand =
            phi_clause(id, "s" + t, "o" + t, "u" + t, "v" + t);
        AnnotatedCaption ref = clause(id, "s" + t, "v" + t, "o" + t);
        out.entries.push_back(
            entry(id, std::move(cand), {std::move(ref)}, 5, jitter(5, i)));
        break;
      }
      case 8: {  // syn
        AnnotatedCaption cand = noun_only(id, "p" + t);
        AnnotatedCaption ref = noun_only(id, "q" + t);
        out.lexicon.add(Lemma::make("p" + t), Lemma::make("q" + t));
        out.entries.push_back(
            entry(id, std::move(cand), {std::move(ref)}, 4, jitter(4, i)));
        break;
      }
      default: {  // zero
        AnnotatedCaption cand = i % 20 == 9
                                    ? AnnotatedCaption{id, {}}
                                    : noun_only(id, "x" + t);
        AnnotatedCaption ref = noun_only(id, "y" + t);
        out.entries.push_back(
            entry(id, std::move(cand), {std::move(ref)}, 1, jitter(1, i)));
        break;
      }
    }
  }
  return out;
}

}  // namespace testgen

#endif  // TESTS_SUPPORT_SYNTHETIC_HPP
