#ifndef SGSCORE_SCENE_GRAPH_HPP
#define SGSCORE_SCENE_GRAPH_HPP

#include <compare>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "sgscore/lemma.hpp"

namespace sgscore {

// Directed relation edge: subject --relation--> object. The subject may be
// the zero pronoun; the relation label and object never are.
struct RelationEdge {
  Lemma subject;
  Lemma relation;
  Lemma object;

  auto operator<=>(const RelationEdge &) const = default;
};

// Attribute edge: the object carries the attribute.
struct AttributeEdge {
  Lemma object;
  Lemma attribute;

  auto operator<=>(const AttributeEdge &) const = default;
};

// A scene graph: object nodes, relation edges between objects, and
// attribute edges on objects. Node identity is by lemma string, so repeated
// mentions of the same lemma collapse to one node. Immutable once built.
struct SceneGraph {
  std::set<Lemma> objects;
  std::set<RelationEdge> relations;
  std::set<AttributeEdge> attributes;

  bool operator==(const SceneGraph &) const = default;
  bool empty() const {
    return objects.empty() && relations.empty() && attributes.empty();
  }
};

// One element of the tuple set T(G): a bare object, an (object, attribute)
// pair, or a (subject, relation, object) triple. Relation tuples never carry
// a zero-pronoun subject; those edges are excluded from T(G).
struct Tuple {
  enum class Kind { Object, Attribute, Relation };

  Kind kind = Kind::Object;
  Lemma a;  // object / attributed object / subject
  Lemma b;  // attribute / relation label
  Lemma c;  // relation object

  static Tuple object(Lemma o) {
    return Tuple{Kind::Object, std::move(o), {}, {}};
  }
  static Tuple attribute(Lemma o, Lemma attr) {
    return Tuple{Kind::Attribute, std::move(o), std::move(attr), {}};
  }
  static Tuple relation(Lemma s, Lemma r, Lemma o) {
    return Tuple{Kind::Relation, std::move(s), std::move(r), std::move(o)};
  }

  auto operator<=>(const Tuple &) const = default;

  std::string to_string() const;
};

// Builds a validated graph from raw parts. Duplicates collapse; relation and
// attribute endpoints missing from `objects` are added automatically (the
// zero pronoun excepted). Throws GraphError if the zero pronoun appears
// anywhere other than a relation subject slot.
SceneGraph build_graph(std::span<const Lemma> objects,
                       std::span<const RelationEdge> relations,
                       std::span<const AttributeEdge> attributes);

// Asserts the containment invariants; throws GraphError on violation.
void validate_graph(const SceneGraph &g);

// T(G): objects, attributes, and relations without zero-pronoun subjects.
std::set<Tuple> extract_tuples(const SceneGraph &g);

// Set union of all parts; order-independent and idempotent.
// Throws Error on an empty list.
SceneGraph merge_graphs(std::span<const SceneGraph> graphs);

// JSON document {"objects":[...],"relations":[[s,r,o],...],
// "attributes":[[o,a],...]} with sorted arrays and fixed key order.
std::string graph_to_json(const SceneGraph &g);
SceneGraph graph_from_json(const std::string &text);

}  // namespace sgscore

#endif  // SGSCORE_SCENE_GRAPH_HPP
