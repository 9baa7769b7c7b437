#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>

#include "sgscore/annotation.hpp"
#include "sgscore/error.hpp"
#include "support/generators.hpp"

using namespace sgscore;

namespace {

const char *kThreeTokens =
    R"({"caption_id":"c1","tokens":[)"
    R"({"i":0,"surface":"akai","lemma":"akai","pos":"adjective","head":1,"dep":"amod"},)"
    R"({"i":1,"surface":"kasa","lemma":"kasa","pos":"noun","head":2,"dep":"obj","case":"wo"},)"
    R"({"i":2,"surface":"sasu","lemma":"sasu","pos":"verb","head":-1,"dep":"root","args":[{"case":"wo","target":1}]}]})";

}  // namespace

TEST_CASE("well-formed caption parses") {
  AnnotatedCaption c = caption_from_json(kThreeTokens);
  CHECK(c.caption_id == "c1");
  REQUIRE(c.tokens.size() == 3);
  CHECK(c.tokens[0].pos == Pos::Adjective);
  CHECK(c.tokens[1].case_tag == std::optional<std::string>("wo"));
  CHECK(c.tokens[1].prop_noun == false);
  CHECK(c.tokens[2].args == std::vector<ArgLink>{{"wo", 1}});
  CHECK(c.surfaces() == std::vector<std::string>{"akai", "kasa", "sasu"});
}

TEST_CASE("empty token list is allowed") {
  AnnotatedCaption c = caption_from_json(R"({"caption_id":"e","tokens":[]})");
  CHECK(c.tokens.empty());
}

TEST_CASE("head pointing at itself is rejected with the token index") {
  std::string text =
      R"({"caption_id":"x","tokens":[{"i":0,"surface":"a","lemma":"a","pos":"noun","head":0,"dep":"root"}]})";
  try {
    caption_from_json(text, 7);
    FAIL("expected ParseError");
  } catch (const ParseError &e) {
    CHECK(e.line() == 7);
    CHECK(std::string(e.what()).find("tokens[0]") != std::string::npos);
  }
}

TEST_CASE("cyclic heads are rejected") {
  std::string text =
      R"({"caption_id":"x","tokens":[)"
      R"({"i":0,"surface":"a","lemma":"a","pos":"noun","head":1,"dep":""},)"
      R"({"i":1,"surface":"b","lemma":"b","pos":"noun","head":0,"dep":""},)"
      R"({"i":2,"surface":"c","lemma":"c","pos":"noun","head":-1,"dep":"root"}]})";
  CHECK_THROWS_AS(caption_from_json(text), ParseError);
}

TEST_CASE("exactly one root is required") {
  std::string two_roots =
      R"({"caption_id":"x","tokens":[)"
      R"({"i":0,"surface":"a","lemma":"a","pos":"noun","head":-1,"dep":"root"},)"
      R"({"i":1,"surface":"b","lemma":"b","pos":"noun","head":-1,"dep":"root"}]})";
  CHECK_THROWS_AS(caption_from_json(two_roots), ParseError);
}

TEST_CASE("unknown case tags and misplaced args are rejected") {
  std::string bad_case =
      R"({"caption_id":"x","tokens":[{"i":0,"surface":"a","lemma":"a","pos":"noun","head":-1,"dep":"root","case":"xyz"}]})";
  CHECK_THROWS_AS(caption_from_json(bad_case), ParseError);

  std::string args_on_noun =
      R"({"caption_id":"x","tokens":[)"
      R"({"i":0,"surface":"a","lemma":"a","pos":"noun","head":-1,"dep":"root","args":[{"case":"ga","target":0}]}]})";
  CHECK_THROWS_AS(caption_from_json(args_on_noun), ParseError);

  std::string self_arg =
      R"({"caption_id":"x","tokens":[)"
      R"({"i":0,"surface":"v","lemma":"v","pos":"verb","head":-1,"dep":"root","args":[{"case":"ga","target":0}]}]})";
  CHECK_THROWS_AS(caption_from_json(self_arg), ParseError);

  std::string out_of_range =
      R"({"caption_id":"x","tokens":[)"
      R"({"i":0,"surface":"v","lemma":"v","pos":"verb","head":-1,"dep":"root","args":[{"case":"ga","target":5}]}]})";
  CHECK_THROWS_AS(caption_from_json(out_of_range), ParseError);
}

TEST_CASE("token index must match its position") {
  std::string text =
      R"({"caption_id":"x","tokens":[{"i":3,"surface":"a","lemma":"a","pos":"noun","head":-1,"dep":"root"}]})";
  CHECK_THROWS_AS(caption_from_json(text), ParseError);
}

TEST_CASE("read_annotations handles empty streams and blank lines") {
  std::istringstream empty("");
  CHECK(read_annotations(empty).empty());

  std::istringstream blanks("\n  \n\t\n");
  CHECK(read_annotations(blanks).empty());
}

TEST_CASE("read_annotations attaches 1-based line numbers to errors") {
  std::istringstream in(std::string(kThreeTokens) + "\n\n{broken\n");
  try {
    read_annotations(in);
    FAIL("expected ParseError");
  } catch (const ParseError &e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("read_annotations returns one caption per line") {
  std::istringstream in(std::string(kThreeTokens) + "\n" + kThreeTokens +
                        "\n");
  auto captions = read_annotations(in);
  REQUIRE(captions.size() == 2);
  CHECK(captions[0].tokens.size() == 3);
}

TEST_CASE("json round-trip preserves generated captions") {
  testgen::Rng rng(23);
  auto words = testgen::make_words("w", 20);
  for (int i = 0; i < 100; ++i) {
    AnnotatedCaption c =
        testgen::random_caption(rng, words, "g" + std::to_string(i));
    AnnotatedCaption back = caption_from_json(caption_to_json(c));
    CHECK(back == c);
  }
}

TEST_CASE("case tag set is the closed ten-marker list") {
  CHECK(kCaseTags.size() == 10);
  for (const char *tag :
       {"ga", "wo", "ni", "to", "de", "kara", "yori", "he", "made", "deep"})
    CHECK(is_case_tag(tag));
  CHECK_FALSE(is_case_tag("niwa"));
  CHECK_FALSE(is_case_tag(""));
}
