#ifndef SGSCORE_LEXICON_HPP
#define SGSCORE_LEXICON_HPP

#include <iosfwd>
#include <map>
#include <set>

#include "sgscore/scene_graph.hpp"

namespace sgscore {

// Lemma -> synonym set S(x). A lemma is never its own synonym; lookup of an
// absent lemma yields the empty set. Immutable in practice after loading.
class SynonymLexicon {
 public:
  // Inserts syn into S(key); a self-synonym is silently dropped.
  void add(const Lemma &key, const Lemma &syn);

  const std::set<Lemma> &synonyms(const Lemma &key) const;

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<Lemma, std::set<Lemma>> entries_;
};

// TSV format, one entry per line: "lemma<TAB>syn1,syn2,...".
// Lines starting with '#' and blank lines are skipped; repeated lemmas merge.
SynonymLexicon load_lexicon(std::istream &in);

// A graph plus its depth-1 synonym extension. Original tuples keep their
// identity; everything synonym-derived is held separately so scoring can
// count denominators over originals only.
struct ExtendedGraph {
  SceneGraph original;
  std::set<Lemma> derived_objects;
  std::set<RelationEdge> derived_relations;
  std::set<AttributeEdge> derived_attributes;
  // {x} union S(x) for every lemma occurring in the original tuples.
  std::map<Lemma, std::set<Lemma>> closures;

  // Slot closure used by tuple matching; singleton for unknown lemmas.
  std::set<Lemma> closure(const Lemma &x) const;

  SceneGraph combined() const;  // original plus derived parts
  std::set<Tuple> original_tuples() const { return extract_tuples(original); }
  std::set<Tuple> derived_tuples() const;
  std::size_t extended_tuple_count() const;
};

// Depth-1 extension: every relation (o1, r, o2) spawns all combinations over
// the slot closures minus the tuples already present, and analogously for
// attributes; endpoint lemmas new to the graph become derived object nodes.
// Synonyms are not chained, so re-extending the original subgraph is a
// fixed point.
ExtendedGraph extend_graph(const SceneGraph &g, const SynonymLexicon &lex);

}  // namespace sgscore

#endif  // SGSCORE_LEXICON_HPP
