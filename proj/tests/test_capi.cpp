// Exercises the extern-C surface through the shared library only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "wgg.h"

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

const char* kDiagonal = R"({"n":2,"d":1,"hyperplanes":[{"i":1,"j":2,"a":[0]}]})";

struct Graph {
  wgg_graph* ptr = nullptr;
  ~Graph() { wgg_graph_free(ptr); }
};

struct Arrangement {
  wgg_arrangement* ptr = nullptr;
  ~Arrangement() { wgg_arrangement_free(ptr); }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  wgg_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("qpoly through the C API") {
  Graph g;
  REQUIRE(wgg_graph_parse(kPhiStar, &g.ptr) == WGG_OK);
  char* out = nullptr;
  REQUIRE(wgg_qpoly(g.ptr, WGG_FORMAT_HUMAN, &out) == WGG_OK);
  CHECK(take(out) == "u[(-1,3)]*u[(2,0)] + 2*u[(2,3)] + u[(4,3)] + 3*z + v*z");

  REQUIRE(wgg_graph_set_semigroup(g.ptr, "sum-zd") == WGG_OK);
  out = nullptr;
  REQUIRE(wgg_qpoly(g.ptr, WGG_FORMAT_HUMAN, &out) == WGG_OK);
  CHECK(take(out) == "u[(-1,3)]*u[(2,0)] + 3*u[(1,3)] + 3*z + v*z");
}

TEST_CASE("forest and mobius outputs") {
  Graph g;
  REQUIRE(wgg_graph_parse(kPhiStar, &g.ptr) == WGG_OK);
  char* out = nullptr;
  int order[3] = {3, 1, 2};
  REQUIRE(wgg_forest(g.ptr, order, 3, WGG_FORMAT_HUMAN, &out) == WGG_OK);
  CHECK(take(out) == "u[(-1,3)]*u[(2,0)] + 2*u[(2,3)] + u[(4,3)]");

  out = nullptr;
  REQUIRE(wgg_mobius(g.ptr, WGG_FORMAT_MACHINE, &out) == WGG_OK);
  CHECK(take(out) ==
        "{\"empty_closed\":true,\"elements\":[{\"edges\":[],\"mu\":1},{\"edges\":[1],\"mu\":-1},"
        "{\"edges\":[2],\"mu\":-1},{\"edges\":[3],\"mu\":-1}]}");

  int bad_order[3] = {1, 1, 2};
  out = nullptr;
  CHECK(wgg_forest(g.ptr, bad_order, 3, WGG_FORMAT_HUMAN, &out) == WGG_ERR_SEMANTIC);

  // Mobius tables do not need weights.
  Graph bare;
  REQUIRE(wgg_graph_parse(R"({"d":1,"n":1,
    "edges":[{"type":"loop","vertex":1,"gain":[0]}]})",
                          &bare.ptr) == WGG_OK);
  out = nullptr;
  REQUIRE(wgg_mobius(bare.ptr, WGG_FORMAT_MACHINE, &out) == WGG_OK);
  CHECK(take(out) == "{\"empty_closed\":false,\"elements\":[{\"edges\":[1],\"mu\":0}]}");
}

TEST_CASE("chi and the counting endpoints") {
  Graph k2;
  REQUIRE(wgg_graph_parse(R"({"d":1,"n":2,
    "edges":[{"type":"link","tail":1,"head":2,"gain":[0]}],
    "semigroup":"finite-list",
    "weights":[[[0],[1],[2]],[[0],[1],[2]]]})",
                          &k2.ptr) == WGG_OK);
  long long count = 0;
  REQUIRE(wgg_chi(k2.ptr, nullptr, &count) == WGG_OK);
  CHECK(count == 6);
  REQUIRE(wgg_chi(k2.ptr, R"([{"ideal":[1]},{"ideal":[1]}])", &count) == WGG_OK);
  CHECK(count == 2);

  Arrangement arr;
  REQUIRE(wgg_arrangement_parse(kDiagonal, &arr.ptr) == WGG_OK);
  long long m[2] = {2, 3};
  REQUIRE(wgg_count_orthotope(arr.ptr, m, 2, &count) == WGG_OK);
  CHECK(count == 9);

  REQUIRE(wgg_count_lists(arr.ptr, "[[0,2,5],[0,2,5]]", &count) == WGG_OK);
  CHECK(count == 6);

  long long bounds[2] = {2, 2};
  REQUIRE(wgg_count_lists_bounded(arr.ptr, R"([[0,2],[1,2]])", bounds, 2, &count) == WGG_OK);
  CHECK(count == 3);

  Arrangement sub;
  REQUIRE(wgg_arrangement_parse(R"({"n":2,"d":2,"hyperplanes":[{"i":1,"j":2,"a":[0,0]}]})",
                                &sub.ptr) == WGG_OK);
  long long H[4] = {0, 0, 0, 0};
  long long M[4] = {1, 1, 1, 1};
  REQUIRE(wgg_count_matrix(sub.ptr, H, M, &count) == WGG_OK);
  CHECK(count == 12);
}

TEST_CASE("piecewise output") {
  Graph g;
  REQUIRE(wgg_graph_parse(R"({"d":1,"n":2,
    "edges":[{"type":"link","tail":1,"head":2,"gain":[1]}],
    "semigroup":"cone-minus-finite",
    "weights":[{"apex":[0]},{"apex":[0]}]})",
                          &g.ptr) == WGG_OK);
  long long m[2] = {3, 3};
  char* out = nullptr;
  REQUIRE(wgg_piecewise(g.ptr, m, 2, WGG_FORMAT_MACHINE, &out) == WGG_OK);
  std::string text = take(out);
  CHECK(text.find("\"value\":13") != std::string::npos);  // 16 - min(4,3)
  CHECK(text.find("\"threshold\":[[-1],[0]]") != std::string::npos);
  CHECK(text.find("\"above_threshold\":true") != std::string::npos);
}

TEST_CASE("error paths carry status codes and messages") {
  Graph g;
  CHECK(wgg_graph_parse("{not json", &g.ptr) == WGG_ERR_PARSE);
  CHECK(std::string(wgg_last_error()).find("JSON") != std::string::npos);

  Arrangement bad;
  CHECK(wgg_arrangement_parse(R"({"n":1,"d":1,"hyperplanes":[{"i":1,"j":1,"a":[0]}]})",
                              &bad.ptr) == WGG_ERR_SEMANTIC);

  Graph unweighted;
  REQUIRE(wgg_graph_parse(R"({"d":1,"n":1,"edges":[]})", &unweighted.ptr) == WGG_OK);
  char* out = nullptr;
  CHECK(wgg_qpoly(unweighted.ptr, WGG_FORMAT_HUMAN, &out) == WGG_ERR_SEMANTIC);

  Arrangement arr;
  REQUIRE(wgg_arrangement_parse(kDiagonal, &arr.ptr) == WGG_OK);
  long long m[2] = {-1, 2};
  long long count = 0;
  CHECK(wgg_count_orthotope(arr.ptr, m, 2, &count) == WGG_ERR_SEMANTIC);
}

TEST_CASE("verify runs a small deterministic pass") {
  char* report = nullptr;
  wgg_status status = wgg_verify(42, 3, 3, 1, WGG_FORMAT_MACHINE, &report);
  std::string text = take(report);
  CHECK(status == WGG_OK);
  CHECK(text.find("\"ok\":true") != std::string::npos);
}
