#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "sgscore/dot_export.hpp"
#include "sgscore/error.hpp"
#include "sgscore/scene_graph.hpp"
#include "support/generators.hpp"

using namespace sgscore;

namespace {

Lemma L(const std::string &s) { return Lemma::make(s); }

SceneGraph graph(std::vector<Lemma> objects, std::vector<RelationEdge> rels,
                 std::vector<AttributeEdge> attrs) {
  return build_graph(objects, rels, attrs);
}

}  // namespace

TEST_CASE("lemma normalization") {
  CHECK(L("kasa").text() == "kasa");
  CHECK(L("  kasa \t").text() == "kasa");
  CHECK(L("\xe3\x80\x80hito\xe3\x80\x80").text() == "hito");  // U+3000
  CHECK_THROWS_AS(Lemma::make("   "), Error);
  CHECK_THROWS_AS(Lemma::make(""), Error);
  CHECK_THROWS_AS(Lemma::make("\xcf\x86"), Error);  // phi text is reserved
  CHECK(Lemma::phi().is_phi());
  CHECK_FALSE(L("kasa").is_phi());
}

TEST_CASE("build_graph empty") {
  SceneGraph g = graph({}, {}, {});
  CHECK(g.empty());
  CHECK(g.objects.empty());
  CHECK(g.relations.empty());
  CHECK(g.attributes.empty());
}

TEST_CASE("build_graph auto-adds relation endpoints") {
  SceneGraph g = graph({L("kasa")}, {{L("hito"), L("sasu"), L("kasa")}}, {});
  CHECK(g.objects == std::set<Lemma>{L("hito"), L("kasa")});
  CHECK(g.relations.size() == 1);
}

TEST_CASE("build_graph keeps phi subjects out of objects") {
  SceneGraph g = graph({L("a")}, {{Lemma::phi(), L("r"), L("a")}}, {});
  CHECK(g.objects == std::set<Lemma>{L("a")});
  CHECK(g.relations == std::set<RelationEdge>{{Lemma::phi(), L("r"), L("a")}});
}

TEST_CASE("build_graph rejects phi outside the subject slot") {
  CHECK_THROWS_AS(graph({Lemma::phi()}, {}, {}), GraphError);
  CHECK_THROWS_AS(graph({}, {{L("a"), Lemma::phi(), L("b")}}, {}), GraphError);
  CHECK_THROWS_AS(graph({}, {{L("a"), L("r"), Lemma::phi()}}, {}), GraphError);
  CHECK_THROWS_AS(graph({}, {}, {{Lemma::phi(), L("x")}}), GraphError);
  CHECK_THROWS_AS(graph({}, {}, {{L("a"), Lemma::phi()}}), GraphError);
}

TEST_CASE("build_graph deduplicates") {
  SceneGraph g = graph({L("a"), L("a")},
                       {{L("a"), L("r"), L("b")}, {L("a"), L("r"), L("b")}},
                       {{L("a"), L("x")}, {L("a"), L("x")}});
  CHECK(g.objects.size() == 2);
  CHECK(g.relations.size() == 1);
  CHECK(g.attributes.size() == 1);
}

TEST_CASE("validate_graph flags broken containment") {
  SceneGraph g;
  g.relations.insert({L("a"), L("r"), L("b")});
  CHECK_THROWS_AS(validate_graph(g), GraphError);
  g = SceneGraph{};
  g.attributes.insert({L("a"), L("x")});
  CHECK_THROWS_AS(validate_graph(g), GraphError);
}

TEST_CASE("extract_tuples counts objects, attributes, non-phi relations") {
  SceneGraph g = graph({L("a"), L("b")}, {{L("a"), L("r"), L("b")}},
                       {{L("a"), L("x")}});
  std::set<Tuple> tuples = extract_tuples(g);
  CHECK(tuples.size() == 4);
  CHECK(tuples.count(Tuple::object(L("a"))));
  CHECK(tuples.count(Tuple::object(L("b"))));
  CHECK(tuples.count(Tuple::relation(L("a"), L("r"), L("b"))));
  CHECK(tuples.count(Tuple::attribute(L("a"), L("x"))));
}

TEST_CASE("extract_tuples excludes phi-subject relations") {
  SceneGraph g = graph({L("a")}, {{Lemma::phi(), L("r"), L("a")}}, {});
  std::set<Tuple> tuples = extract_tuples(g);
  CHECK(tuples == std::set<Tuple>{Tuple::object(L("a"))});
}

TEST_CASE("extract_tuples of empty graph is empty") {
  CHECK(extract_tuples(SceneGraph{}).empty());
}

TEST_CASE("merge_graphs unions and is idempotent") {
  SceneGraph g = graph({L("a")}, {}, {{L("a"), L("x")}});  // 2 tuples
  SceneGraph h = graph({L("c")}, {}, {{L("c"), L("x")}, {L("c"), L("y")}});
  std::vector<SceneGraph> both = {g, h};
  SceneGraph merged = merge_graphs(both);
  CHECK(extract_tuples(merged).size() == 5);

  std::vector<SceneGraph> twice = {g, g};
  CHECK(merge_graphs(twice) == g);
  std::vector<SceneGraph> once = {g};
  CHECK(merge_graphs(once) == g);
  CHECK_THROWS_AS(merge_graphs(std::vector<SceneGraph>{}), Error);
}

TEST_CASE("merge_graphs is order independent and distributes over tuples") {
  testgen::Rng rng(11);
  auto vocab = testgen::make_vocab("w", 12);
  for (int i = 0; i < 200; ++i) {
    SceneGraph g1 = testgen::random_graph(rng, vocab, 6, true);
    SceneGraph g2 = testgen::random_graph(rng, vocab, 6, true);
    std::vector<SceneGraph> ab = {g1, g2};
    std::vector<SceneGraph> ba = {g2, g1};
    SceneGraph m = merge_graphs(ab);
    CHECK(m == merge_graphs(ba));

    std::set<Tuple> expected = extract_tuples(g1);
    for (const Tuple &t : extract_tuples(g2)) expected.insert(t);
    CHECK(extract_tuples(m) == expected);
    validate_graph(m);
  }
}

TEST_CASE("graph json round-trip") {
  SceneGraph g = graph({L("hito"), L("kasa")},
                       {{L("hito"), L("sasu"), L("kasa")},
                        {Lemma::phi(), L("motsu"), L("kasa")}},
                       {{L("kasa"), L("akai")}});
  std::string text = graph_to_json(g);
  CHECK(graph_from_json(text) == g);
  CHECK(graph_to_json(graph_from_json(text)) == text);

  CHECK(graph_from_json(R"({"objects":[],"relations":[],"attributes":[]})")
            .empty());
  CHECK_THROWS_AS(graph_from_json("not json"), Error);
}

TEST_CASE("dot export renders empty graph as header and footer only") {
  std::string dot = graph_to_dot(SceneGraph{});
  CHECK(dot == "digraph scene {\n  rankdir=LR;\n  node [style=filled];\n}\n");
}

TEST_CASE("dot export emits one line per node and edge") {
  SceneGraph g = graph({L("kasa")}, {}, {{L("kasa"), L("akai")}});
  std::string dot = graph_to_dot(g);
  // 1 object node + 1 attribute node + 1 edge beyond the 4 frame lines
  CHECK(std::count(dot.begin(), dot.end(), '\n') == 7);
  CHECK(dot.find("fillcolor=pink") != std::string::npos);
  CHECK(dot.find("fillcolor=palegreen") != std::string::npos);
  CHECK(dot.find("->") != std::string::npos);
}

TEST_CASE("dot export is deterministic and renders phi") {
  SceneGraph g = graph({L("a"), L("b")},
                       {{Lemma::phi(), L("r"), L("a")},
                        {L("b"), L("s"), L("a")}},
                       {{L("a"), L("x")}});
  std::string first = graph_to_dot(g);
  CHECK(first == graph_to_dot(g));
  CHECK(first.find("phi") != std::string::npos);
  CHECK(first.find("fillcolor=lightblue") != std::string::npos);
}

TEST_CASE("tuple to_string distinguishes kinds") {
  CHECK(Tuple::object(L("a")).to_string() !=
        Tuple::attribute(L("a"), L("b")).to_string());
  CHECK(Tuple::attribute(L("a"), L("b")).to_string() !=
        Tuple::relation(L("a"), L("b"), L("c")).to_string());
}
