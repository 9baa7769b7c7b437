#include "sgscore/scene_graph.hpp"

#include <nlohmann/json.hpp>

#include "sgscore/error.hpp"

namespace sgscore {

using ordered_json = nlohmann::ordered_json;

std::string Tuple::to_string() const {
  switch (kind) {
    case Kind::Object:
      return a.text();
    case Kind::Attribute:
      return "(" + a.text() + ", " + b.text() + ")";
    case Kind::Relation:
      return "(" + a.text() + ", " + b.text() + ", " + c.text() + ")";
  }
  return {};
}

SceneGraph build_graph(std::span<const Lemma> objects,
                       std::span<const RelationEdge> relations,
                       std::span<const AttributeEdge> attributes) {
  SceneGraph g;
  for (const Lemma &o : objects) {
    if (o.is_phi()) throw GraphError("zero pronoun cannot be an object node");
    g.objects.insert(o);
  }
  for (const RelationEdge &r : relations) {
    if (r.relation.is_phi())
      throw GraphError("zero pronoun cannot be a relation label");
    if (r.object.is_phi())
      throw GraphError("zero pronoun cannot be a relation object");
    if (!r.subject.is_phi()) g.objects.insert(r.subject);
    g.objects.insert(r.object);
    g.relations.insert(r);
  }
  for (const AttributeEdge &a : attributes) {
    if (a.object.is_phi())
      throw GraphError("zero pronoun cannot carry an attribute");
    if (a.attribute.is_phi())
      throw GraphError("zero pronoun cannot be an attribute");
    g.objects.insert(a.object);
    g.attributes.insert(a);
  }
  return g;
}

void validate_graph(const SceneGraph &g) {
  for (const Lemma &o : g.objects) {
    if (o.is_phi()) throw GraphError("zero pronoun listed as an object node");
  }
  for (const RelationEdge &r : g.relations) {
    if (r.relation.is_phi() || r.object.is_phi())
      throw GraphError("zero pronoun outside the subject slot: " +
                       Tuple::relation(r.subject, r.relation, r.object)
                           .to_string());
    if (!r.subject.is_phi() && !g.objects.count(r.subject))
      throw GraphError("relation subject not in objects: " +
                       r.subject.text());
    if (!g.objects.count(r.object))
      throw GraphError("relation object not in objects: " + r.object.text());
  }
  for (const AttributeEdge &a : g.attributes) {
    if (a.object.is_phi() || a.attribute.is_phi())
      throw GraphError("zero pronoun in an attribute edge");
    if (!g.objects.count(a.object))
      throw GraphError("attributed object not in objects: " +
                       a.object.text());
  }
}

std::set<Tuple> extract_tuples(const SceneGraph &g) {
  std::set<Tuple> out;
  for (const Lemma &o : g.objects) out.insert(Tuple::object(o));
  for (const RelationEdge &r : g.relations) {
    if (r.subject.is_phi()) continue;
    out.insert(Tuple::relation(r.subject, r.relation, r.object));
  }
  for (const AttributeEdge &a : g.attributes)
    out.insert(Tuple::attribute(a.object, a.attribute));
  return out;
}

SceneGraph merge_graphs(std::span<const SceneGraph> graphs) {
  if (graphs.empty()) throw Error("merge_graphs: empty graph list");
  SceneGraph out;
  for (const SceneGraph &g : graphs) {
    out.objects.insert(g.objects.begin(), g.objects.end());
    out.relations.insert(g.relations.begin(), g.relations.end());
    out.attributes.insert(g.attributes.begin(), g.attributes.end());
  }
  return out;
}

std::string graph_to_json(const SceneGraph &g) {
  ordered_json doc;
  auto &objects = doc["objects"] = ordered_json::array();
  for (const Lemma &o : g.objects) objects.push_back(o.text());
  auto &relations = doc["relations"] = ordered_json::array();
  for (const RelationEdge &r : g.relations)
    relations.push_back({r.subject.text(), r.relation.text(),
                         r.object.text()});
  auto &attributes = doc["attributes"] = ordered_json::array();
  for (const AttributeEdge &a : g.attributes)
    attributes.push_back({a.object.text(), a.attribute.text()});
  return doc.dump();
}

namespace {

Lemma lemma_or_phi(const std::string &s) {
  if (s == Lemma::kPhiText) return Lemma::phi();
  return Lemma::make(s);
}

}  // namespace

SceneGraph graph_from_json(const std::string &text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const std::exception &e) {
    throw ParseError(0, "", std::string("invalid graph JSON: ") + e.what());
  }
  std::vector<Lemma> objects;
  std::vector<RelationEdge> relations;
  std::vector<AttributeEdge> attributes;
  for (const auto &o : doc.value("objects", ordered_json::array()))
    objects.push_back(Lemma::make(o.get<std::string>()));
  for (const auto &r : doc.value("relations", ordered_json::array())) {
    if (!r.is_array() || r.size() != 3)
      throw ParseError(0, "relations", "expected [subject, relation, object]");
    relations.push_back({lemma_or_phi(r[0].get<std::string>()),
                         Lemma::make(r[1].get<std::string>()),
                         Lemma::make(r[2].get<std::string>())});
  }
  for (const auto &a : doc.value("attributes", ordered_json::array())) {
    if (!a.is_array() || a.size() != 2)
      throw ParseError(0, "attributes", "expected [object, attribute]");
    attributes.push_back({Lemma::make(a[0].get<std::string>()),
                          Lemma::make(a[1].get<std::string>())});
  }
  return build_graph(objects, relations, attributes);
}

}  // namespace sgscore
