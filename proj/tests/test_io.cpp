#include "doctest.h"

#include "igtn/errors.hpp"
#include "igtn/io.hpp"
#include "test_helpers.hpp"

using namespace igtn;
using namespace igtn::test;

TEST_CASE("formatting is 1-based") {
  CHECK(format_subset(sub(5, {1, 3, 5})) == "{1,3,5}");
  CHECK(format_partition(part(5, {{1, 3}, {2, 4}, {5}})) == "{{1,3},{2,4},{5}}");
  CHECK(format_transformation(tr({1, 1, 3, 4})) == "[1,1,3,4]");
  CHECK(format_permutation(perm({2, 1, 3})) == "[2,1,3]");
  CHECK(format_letter(eps(1, 2, 4)) == "e(1,2)");
  CHECK(format_letter(Idempotent::identity(4)) == "id");
  CHECK(format_letter(idem({1, 1, 3, 3})) == "[1,1,3,3]");
  CHECK(format_word(word(4, {})) == "id");
  CHECK(format_word(word(4, {eps(1, 2, 4), eps(2, 1, 4)})) == "e(1,2) e(2,1)");
}

TEST_CASE("parsing round trips") {
  CHECK(parse_subset("{1,3,5}", 5) == sub(5, {1, 3, 5}));
  CHECK(parse_subset("[1, 3, 5]", 5) == sub(5, {1, 3, 5}));
  CHECK(parse_partition("{{1,3},{2,4},{5}}", 5) == part(5, {{1, 3}, {2, 4}, {5}}));
  CHECK(parse_letter("e(1,2)", 4) == eps(1, 2, 4));
  CHECK(parse_letter("[1,1,3,3]", 4) == idem({1, 1, 3, 3}));
  CHECK(parse_letter("id", 4) == Idempotent::identity(4));

  auto const w = word(5, {idem({1, 1, 3, 3, 5}), eps(2, 1, 5)});
  CHECK(parse_word(format_word(w), 5) == w);
  CHECK(parse_word("[\"[1,1,3,3,5]\", \"e(2,1)\"]", 5) == w);
  CHECK(parse_word("[1,1,3,3,5], e(2,1)", 5) == w);
  CHECK(parse_word("[1,1,3,3,5]", 5).size() == 1);
  CHECK(parse_word("id", 5).is_identity());
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_letter("[2,1,3]", 3), InvalidArgument);
  CHECK_THROWS_AS(parse_letter("e(1,1)", 3), InvalidArgument);
  CHECK_THROWS_AS(parse_letter("e(1,9)", 3), InvalidArgument);
  CHECK_THROWS_AS(parse_subset("{1,7}", 5), InvalidArgument);
  CHECK_THROWS_AS(parse_partition("{{1,2},{2,3}}", 3), InvalidArgument);
  CHECK_THROWS_AS(parse_word("e(1,2) bogus", 4), InvalidArgument);
  CHECK_THROWS_AS(green_relation_from_string("Q"), InvalidArgument);
}

TEST_CASE("JSON") {
  auto const v = to_json(Vertex{sub(5, {1, 3, 5}), part(5, {{1, 3}, {2, 4}, {5}})});
  CHECK(v["A"] == json::array({1, 3, 5}));
  CHECK(v["P"] == json::parse("[[1,3],[2,4],[5]]"));

  auto const g = ContactGraph::build(4, 2, 2);
  auto const j = graph_to_json(g);
  CHECK(j["vertices"].size() == g.vertices().size());
  CHECK(j["edges"].size() == g.edges().size());
  CHECK(j["component_count"] == g.component_count());

  auto const dot = graph_to_dot(g);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(to_json(Verdict{Verdict::Kind::not_equal, "x"})["verdict"] == "NotEqual");
  CHECK(to_string(GreenRelation::H) == "H");
}
