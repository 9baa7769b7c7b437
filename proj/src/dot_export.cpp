#include "sgscore/dot_export.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "sgscore/error.hpp"

namespace sgscore {

namespace {

std::string quote(const std::string &text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string graph_to_dot(const SceneGraph &g) {
  validate_graph(g);
  std::ostringstream out;
  out << "digraph scene {\n";
  out << "  rankdir=LR;\n";
  out << "  node [style=filled];\n";

  std::map<Lemma, std::string> object_ids;
  std::size_t n = 0;
  for (const Lemma &obj : g.objects) {
    std::string id = "o" + std::to_string(n++);
    object_ids.emplace(obj, id);
    out << "  " << id << " [label=" << quote(obj.text())
        << ", fillcolor=pink];\n";
  }
  bool phi_used = false;
  for (const RelationEdge &rel : g.relations)
    if (rel.subject.is_phi()) phi_used = true;
  if (phi_used)
    out << "  phi [label=" << quote(Lemma::phi().text())
        << ", fillcolor=white];\n";

  n = 0;
  for (const AttributeEdge &attr : g.attributes) {
    std::string id = "a" + std::to_string(n++);
    out << "  " << id << " [label=" << quote(attr.attribute.text())
        << ", fillcolor=palegreen];\n";
    out << "  " << object_ids.at(attr.object) << " -> " << id << ";\n";
  }

  n = 0;
  for (const RelationEdge &rel : g.relations) {
    std::string id = "r" + std::to_string(n++);
    out << "  " << id << " [label=" << quote(rel.relation.text())
        << ", fillcolor=lightblue];\n";
    const std::string &subject =
        rel.subject.is_phi() ? "phi" : object_ids.at(rel.subject);
    out << "  " << subject << " -> " << id << ";\n";
    out << "  " << id << " -> " << object_ids.at(rel.object) << ";\n";
  }

  out << "}\n";
  return out.str();
}

void export_dot(const SceneGraph &g, const std::string &path) {
  std::string text = graph_to_dot(g);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path + " for writing");
  out << text;
  out.flush();
  if (!out) throw Error("failed writing " + path);
}

}  // namespace sgscore
