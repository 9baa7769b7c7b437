#ifndef TESTS_SUPPORT_GENERATORS_HPP
#define TESTS_SUPPORT_GENERATORS_HPP

#include <random>
#include <string>
#include <vector>

#include "sgscore/annotation.hpp"
#include "sgscore/lexicon.hpp"
#include "sgscore/scene_graph.hpp"

namespace testgen {

using namespace sgscore;

struct Rng {
  std::mt19937 engine;

  explicit Rng(unsigned seed) : engine(seed) {}

  int range(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(engine);
  }
  bool coin(double p = 0.5) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(engine) < p;
  }
  double real(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine);
  }
  template <typename T>
  const T &pick(const std::vector<T> &v) {
    return v[static_cast<std::size_t>(
        range(0, static_cast<int>(v.size()) - 1))];
  }
};

inline std::vector<Lemma> make_vocab(const std::string &prefix, int n) {
  std::vector<Lemma> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    out.push_back(Lemma::make(prefix + std::to_string(i)));
  return out;
}

inline std::vector<std::string> make_words(const std::string &prefix, int n) {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

inline SceneGraph random_graph(Rng &rng, const std::vector<Lemma> &vocab,
                               int max_tuples, bool allow_phi = false) {
  std::vector<Lemma> objects;
  std::vector<RelationEdge> relations;
  std::vector<AttributeEdge> attributes;
  int n = rng.range(0, max_tuples);
  for (int i = 0; i < n; ++i) {
    switch (rng.range(0, 2)) {
      case 0:
        objects.push_back(rng.pick(vocab));
        break;
      case 1: {
        Lemma subject =
            allow_phi && rng.coin(0.4) ? Lemma::phi() : rng.pick(vocab);
        relations.push_back({subject, rng.pick(vocab), rng.pick(vocab)});
        break;
      }
      default:
        attributes.push_back({rng.pick(vocab), rng.pick(vocab)});
    }
  }
  return build_graph(objects, relations, attributes);
}

inline SynonymLexicon random_lexicon(Rng &rng, const std::vector<Lemma> &vocab,
                                     int entries, int max_syn = 3) {
  SynonymLexicon lex;
  for (int i = 0; i < entries; ++i) {
    const Lemma &key = rng.pick(vocab);
    int k = rng.range(1, max_syn);
    for (int j = 0; j < k; ++j) lex.add(key, rng.pick(vocab));
  }
  return lex;
}

// A random but always well-formed annotated caption with at least one noun,
// so both parser modes yield a non-empty graph. Two shapes: a verb-rooted
// clause with case-marked arguments, or a noun phrase chained with "no".
inline AnnotatedCaption random_caption(Rng &rng,
                                       const std::vector<std::string> &words,
                                       const std::string &id) {
  AnnotatedCaption caption;
  caption.caption_id = id;
  auto add = [&](const std::string &surface, Pos pos, int head,
                 std::string dep) {
    int index = static_cast<int>(caption.tokens.size());
    Token t;
    t.index = index;
    t.surface = surface;
    t.lemma = Lemma::make(surface);
    t.pos = pos;
    t.head = head;
    t.dep = std::move(dep);
    caption.tokens.push_back(std::move(t));
    return index;
  };

  if (rng.coin(0.7)) {
    // clause: per argument [adjective] noun [particle], verb root last
    struct ArgPlan {
      bool adj = false;
      bool particle = false;
      std::string case_tag;
    };
    std::vector<std::string> cases = {"ga", "wo", "ni", "de", "kara"};
    if (rng.coin(0.25)) cases.erase(cases.begin());  // drop ga: phi subject
    int k = rng.range(1, 3);
    std::vector<ArgPlan> plans(static_cast<std::size_t>(k));
    int verb_index = 0;
    for (int i = 0; i < k; ++i) {
      plans[i].case_tag = cases[static_cast<std::size_t>(i)];
      plans[i].adj = rng.coin(0.35);
      plans[i].particle = rng.coin(0.7);
      verb_index += 1 + plans[i].adj + plans[i].particle;
    }
    std::vector<ArgLink> args;
    for (const ArgPlan &plan : plans) {
      if (plan.adj) {
        int noun_at = static_cast<int>(caption.tokens.size()) + 1;
        add(rng.pick(words), Pos::Adjective, noun_at, "amod");
      }
      std::string dep = plan.case_tag == "ga"   ? "nsubj"
                        : plan.case_tag == "wo" ? "obj"
                                                : "obl";
      int noun = add(rng.pick(words), Pos::Noun, verb_index, dep);
      caption.tokens[noun].case_tag = plan.case_tag;
      if (plan.particle)
        add(plan.case_tag, Pos::Particle, noun, "case");
      args.push_back({plan.case_tag, noun});
    }
    int verb = add(rng.pick(words), Pos::Verb, -1, "root");
    caption.tokens[verb].args = std::move(args);
  } else {
    // noun phrase: noun (nmod)... root noun, optional adjectives
    int k = rng.range(1, 3);
    std::vector<bool> adj(static_cast<std::size_t>(k));
    std::vector<int> noun_at(static_cast<std::size_t>(k));
    int pos = 0;
    for (int i = 0; i < k; ++i) {
      adj[i] = rng.coin(0.4);
      noun_at[i] = pos + (adj[i] ? 1 : 0);
      pos += 1 + adj[i];
    }
    for (int i = 0; i < k; ++i) {
      if (adj[i]) add(rng.pick(words), Pos::Adjective, noun_at[i], "amod");
      int head = i + 1 < k ? noun_at[i + 1] : -1;
      add(rng.pick(words), Pos::Noun, head, i + 1 < k ? "nmod" : "root");
    }
  }

  validate_caption(caption);
  return caption;
}

}  // namespace testgen

#endif  // TESTS_SUPPORT_GENERATORS_HPP
