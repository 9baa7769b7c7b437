#include "sgscore/lexicon.hpp"

#include <istream>
#include <string>
#include <vector>

#include "sgscore/error.hpp"

namespace sgscore {

void SynonymLexicon::add(const Lemma &key, const Lemma &syn) {
  if (key == syn) return;
  entries_[key].insert(syn);
}

const std::set<Lemma> &SynonymLexicon::synonyms(const Lemma &key) const {
  static const std::set<Lemma> kEmpty;
  auto it = entries_.find(key);
  return it == entries_.end() ? kEmpty : it->second;
}

SynonymLexicon load_lexicon(std::istream &in) {
  SynonymLexicon lex;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw ParseError(lineno, "", "expected \"lemma<TAB>syn1,syn2,...\"");
    Lemma key = [&] {
      try {
        return Lemma::make(line.substr(0, tab));
      } catch (const Error &e) {
        throw ParseError(lineno, "lemma", e.what());
      }
    }();
    std::string rest = line.substr(tab + 1);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      auto comma = rest.find(',', pos);
      std::string item = rest.substr(
          pos, comma == std::string::npos ? std::string::npos : comma - pos);
      pos = comma == std::string::npos ? rest.size() + 1 : comma + 1;
      if (item.find_first_not_of(" \t") == std::string::npos) continue;
      try {
        lex.add(key, Lemma::make(item));
      } catch (const Error &e) {
        throw ParseError(lineno, "synonyms", e.what());
      }
    }
  }
  return lex;
}

namespace {

// {x} union S(x); the zero pronoun has no synonyms.
std::set<Lemma> closure_of(const Lemma &x, const SynonymLexicon &lex) {
  std::set<Lemma> out{x};
  if (!x.is_phi()) {
    const auto &syns = lex.synonyms(x);
    out.insert(syns.begin(), syns.end());
  }
  return out;
}

}  // namespace

std::set<Lemma> ExtendedGraph::closure(const Lemma &x) const {
  auto it = closures.find(x);
  if (it != closures.end()) return it->second;
  return {x};
}

SceneGraph ExtendedGraph::combined() const {
  SceneGraph out = original;
  out.objects.insert(derived_objects.begin(), derived_objects.end());
  out.relations.insert(derived_relations.begin(), derived_relations.end());
  out.attributes.insert(derived_attributes.begin(), derived_attributes.end());
  return out;
}

std::set<Tuple> ExtendedGraph::derived_tuples() const {
  std::set<Tuple> all = extract_tuples(combined());
  for (const Tuple &t : original_tuples()) all.erase(t);
  return all;
}

std::size_t ExtendedGraph::extended_tuple_count() const {
  return extract_tuples(combined()).size();
}

ExtendedGraph extend_graph(const SceneGraph &g, const SynonymLexicon &lex) {
  validate_graph(g);
  ExtendedGraph out;
  out.original = g;

  auto note = [&](const Lemma &x) {
    if (!out.closures.count(x)) out.closures.emplace(x, closure_of(x, lex));
  };
  for (const Lemma &o : g.objects) note(o);
  for (const RelationEdge &r : g.relations) {
    note(r.subject);
    note(r.relation);
    note(r.object);
  }
  for (const AttributeEdge &a : g.attributes) {
    note(a.object);
    note(a.attribute);
  }

  auto ensure_node = [&](const Lemma &x) {
    if (!x.is_phi() && !g.objects.count(x)) out.derived_objects.insert(x);
  };
  for (const RelationEdge &r : g.relations) {
    for (const Lemma &s : out.closures.at(r.subject))
      for (const Lemma &rel : out.closures.at(r.relation))
        for (const Lemma &o : out.closures.at(r.object)) {
          RelationEdge e{s, rel, o};
          if (g.relations.count(e)) continue;
          out.derived_relations.insert(e);
          ensure_node(s);
          ensure_node(o);
        }
  }
  for (const AttributeEdge &a : g.attributes) {
    for (const Lemma &o : out.closures.at(a.object))
      for (const Lemma &attr : out.closures.at(a.attribute)) {
        AttributeEdge e{o, attr};
        if (g.attributes.count(e)) continue;
        out.derived_attributes.insert(e);
        ensure_node(o);
      }
  }
  return out;
}

}  // namespace sgscore
