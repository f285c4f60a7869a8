#include <doctest.h>

#include "helpers.hpp"

using namespace wgg;
using namespace wgg::testing;

namespace {

const char* kPhiStar = R"({
  "d": 2, "n": 2,
  "edges": [
    {"type": "link", "tail": 1, "head": 2, "gain": [0, 0]},
    {"type": "link", "tail": 1, "head": 2, "gain": [2, 0]},
    {"type": "link", "tail": 1, "head": 2, "gain": [-1, 2]}
  ],
  "semigroup": "max-zd",
  "weights": [[2, 0], [-1, 3]]
})";

}  // namespace

TEST_CASE("weighted graphs parse with 1-based vertices") {
  WeightedGainGraph wg = parse_weighted_graph(kPhiStar);
  CHECK(wg == phi_star());
  CHECK(has_weights(kPhiStar));
}

TEST_CASE("all edge types parse") {
  GainGraph g = parse_gain_graph(R"({
    "d": 1, "n": 2,
    "edges": [
      {"type": "link", "tail": 1, "head": 2, "gain": [3]},
      {"type": "loop", "vertex": 2, "gain": [0]},
      {"type": "half", "vertex": 1},
      {"type": "loose"}
    ]
  })");
  REQUIRE(g.edge_count() == 4);
  CHECK(g.edges[0].kind == EdgeKind::Link);
  CHECK(g.edges[1].kind == EdgeKind::Loop);
  CHECK(g.edges[1].tail == 1);
  CHECK(g.edges[2].kind == EdgeKind::Half);
  CHECK(g.edges[2].tail == 0);
  CHECK(g.edges[3].kind == EdgeKind::Loose);
  CHECK_FALSE(has_weights(R"({"d":1,"n":0,"edges":[]})"));
}

TEST_CASE("parse errors are parse errors") {
  CHECK_THROWS_AS(parse_gain_graph("{"), parse_error);
  CHECK_THROWS_AS(parse_gain_graph(R"({"d":1,"n":1})"), parse_error);
  CHECK_THROWS_AS(parse_gain_graph(R"({"d":1,"n":1,"edges":[{"type":"wedge"}]})"), parse_error);
  CHECK_THROWS_AS(parse_gain_graph(
                      R"({"d":1,"n":1,"edges":[{"type":"link","tail":1,"head":2,"gain":[0]}]})"),
                  parse_error);
  CHECK_THROWS_AS(parse_gain_graph(
                      R"({"d":2,"n":2,"edges":[{"type":"link","tail":1,"head":2,"gain":[0]}]})"),
                  parse_error);
  CHECK_THROWS_AS(parse_weighted_graph(R"({"d":1,"n":1,"edges":[]})"), parse_error);
  CHECK_THROWS_AS(
      parse_weighted_graph(R"({"d":1,"n":1,"edges":[],"semigroup":"nope","weights":[[0]]})"),
      parse_error);
}

TEST_CASE("semigroup re-tagging") {
  WeightedGainGraph wg = parse_weighted_graph(kPhiStar);
  WeightedGainGraph sum = with_semigroup(wg, Semigroup::SumZd);
  CHECK(sum.sg == Semigroup::SumZd);
  CHECK(sum.weights[0].vec == V({2, 0}));
  CHECK_THROWS_AS(with_semigroup(wg, Semigroup::FiniteList), semantic_error);
}

TEST_CASE("cone and pair weights parse") {
  WeightedGainGraph wg = parse_weighted_graph(R"({
    "d": 2, "n": 2,
    "edges": [],
    "semigroup": "cone-minus-finite",
    "weights": [
      {"apex": [1, 0], "excl": [[2, 1]]},
      {"apex": [0, 3]}
    ]
  })");
  CHECK(wg.weights[0].list.kind == SetKind::Cone);
  CHECK(wg.weights[0].list.members == std::vector<Vec>{V({2, 1})});
  CHECK(wg.weights[1].list.members.empty());

  WeightedGainGraph pair = parse_weighted_graph(R"({
    "d": 1, "n": 1,
    "edges": [],
    "semigroup": "pair",
    "weights": [{"list": {"cone": {"apex": [0]}}, "filter": {"ideal": [5]}}]
  })");
  CHECK(weight_color_count(pair.weights[0]) == 6);
}

TEST_CASE("arrangements parse and validate") {
  AffinographicArrangement arr = parse_arrangement(R"({
    "n": 2, "d": 1,
    "hyperplanes": [{"i": 1, "j": 2, "a": [0]}]
  })");
  CHECK(arr.planes.size() == 1);
  CHECK(arr.planes[0].i == 0);
  CHECK(arr.planes[0].j == 1);

  CHECK_THROWS_AS(parse_arrangement(R"({"n":1,"d":1,
    "hyperplanes":[{"i":1,"j":1,"a":[0]}]})"),
                  semantic_error);
  CHECK_THROWS_AS(parse_arrangement(R"({"n":1,"hyperplanes":[{"i":1,"j":2,"a":[0]}]})"),
                  parse_error);
}

TEST_CASE("filters and lists parse") {
  ColorFilter filter = parse_filter(R"([{"ideal":[3]},{"set":[[0],[2]]},"all"])", 3, 1);
  CHECK(filter[0].kind == SetKind::Ideal);
  CHECK(filter[1].size() == 2);
  CHECK(filter[2].kind == SetKind::All);
  CHECK_THROWS_AS(parse_filter(R"([{"ideal":[3]}])", 2, 1), parse_error);

  auto lists = parse_lists(R"([[0,2,5],[1]])", 2);
  CHECK(lists[0] == std::vector<Int>{0, 2, 5});

  auto bounded = parse_bounded_lists(R"([[0,2],"all"])", 2);
  CHECK(bounded[0].kind == SetKind::Finite);
  CHECK(bounded[1].kind == SetKind::Cone);

  auto rows = parse_matrix(R"({"H":[[0,0],[1,1]]})", "H", 2, 2);
  CHECK(rows[1] == V({1, 1}));
}
