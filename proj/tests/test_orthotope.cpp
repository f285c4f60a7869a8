#include <doctest.h>

#include "helpers.hpp"

using namespace wgg;
using namespace wgg::testing;

namespace {

AffinographicArrangement diagonal_pair() {
  AffinographicArrangement arr;
  arr.n = 2;
  arr.d = 1;
  arr.planes.push_back({0, 1, V({0})});
  return arr;
}

}  // namespace

TEST_CASE("arrangements become gain graphs") {
  GainGraph g = arrangement_to_gain_graph(diagonal_pair());
  REQUIRE(g.edge_count() == 1);
  CHECK(g.edges[0].kind == EdgeKind::Link);
  CHECK(g.edges[0].gain == V({0}));

  AffinographicArrangement subspaces;
  subspaces.n = 2;
  subspaces.d = 2;
  subspaces.planes = {{0, 1, V({0, 0})}, {0, 1, V({2, 0})}, {0, 1, V({-1, 2})}};
  CHECK(arrangement_to_gain_graph(subspaces) == phi_star_graph());

  AffinographicArrangement duplicated = diagonal_pair();
  duplicated.planes.push_back({0, 1, V({0})});
  CHECK(arrangement_to_gain_graph(duplicated).edge_count() == 2);

  AffinographicArrangement degenerate;
  degenerate.n = 1;
  degenerate.d = 1;
  degenerate.planes = {{0, 0, V({0})}};
  CHECK_THROWS_AS(arrangement_to_gain_graph(degenerate), semantic_error);
}

TEST_CASE("orthotope counts match the worked examples") {
  CHECK(count_orthotope(diagonal_pair(), {2, 3}) == 9);

  AffinographicArrangement shifted;
  shifted.n = 2;
  shifted.d = 1;
  shifted.planes = {{0, 1, V({1})}};
  CHECK(count_orthotope(shifted, {1, 1}) == 3);

  AffinographicArrangement empty;
  empty.n = 3;
  empty.d = 1;
  CHECK(count_orthotope(empty, {2, 3, 1}) == 24);

  CHECK_THROWS_AS(count_orthotope(diagonal_pair(), {-1, 2}), semantic_error);
}

TEST_CASE("list counts match the worked examples") {
  CHECK(count_lists(diagonal_pair(), {{0, 2, 5}, {0, 2, 5}}) == 6);

  // A shift that never aligns the two lists leaves the full product.
  AffinographicArrangement shifted;
  shifted.n = 2;
  shifted.d = 1;
  shifted.planes = {{0, 1, V({1})}};
  CHECK(count_lists(shifted, {{0, 4}, {0, 4}}) == 4);

  CHECK(count_lists(diagonal_pair(), {{3}, {4}}) == 1);
}

TEST_CASE("bounded list counts") {
  // All-nonnegative lists reduce to the orthotope count.
  std::vector<ColorSet> all = {ColorSet::cone(V({0})), ColorSet::cone(V({0}))};
  CHECK(count_lists_bounded(diagonal_pair(), all, {2, 3}) == count_orthotope(diagonal_pair(), {2, 3}));

  CHECK(count_lists_bounded(diagonal_pair(), all, {0, 0}) == 0);  // only (0,0), which hits x2=x1
  AffinographicArrangement shifted;
  shifted.n = 2;
  shifted.d = 1;
  shifted.planes = {{0, 1, V({3})}};
  CHECK(count_lists_bounded(shifted, all, {0, 0}) == 1);

  std::vector<ColorSet> partial = {finite1({0, 2}), finite1({1, 2})};
  CHECK(count_lists_bounded(diagonal_pair(), partial, {2, 2}) == 3);
}

TEST_CASE("path gain joins") {
  GainGraph g = phi_star_graph();
  REQUIRE(alpha(g, 0, 1).has_value());
  CHECK(*alpha(g, 0, 1) == V({2, 2}));
  CHECK(*alpha(g, 0, 0) == V({0, 0}));

  GainGraph disconnected(1, 2, {});
  CHECK_FALSE(alpha(disconnected, 0, 1).has_value());
  CHECK(alpha_max(disconnected, 0) == V({0}));
}

TEST_CASE("piecewise evaluation of the one-edge example") {
  GainGraph g(1, 2, {Edge::link(0, 1, V({1}))});
  WeightedGainGraph wg(g, Semigroup::ConeMinusFinite,
                       {Weight::cone_minus_finite(ColorSet::cone(V({0}))),
                        Weight::cone_minus_finite(ColorSet::cone(V({0})))});
  auto p = [&](Int m1, Int m2) { return chi_piecewise(wg, {V({m1}), V({m2})}).value; };
  for (Int m1 = -1; m1 <= 4; ++m1)
    for (Int m2 = 0; m2 <= 4; ++m2)
      CHECK(p(m1, m2) == (m1 + 1) * (m2 + 1) - std::min(m1 + 1, m2));

  PiecewiseEvaluation ev = chi_piecewise(wg, {V({3}), V({3})});
  REQUIRE(ev.threshold.size() == 2);
  CHECK(ev.threshold[0] == V({-1}));
  CHECK(ev.threshold[1] == V({0}));
  CHECK(ev.above_threshold);

  PiecewiseEvaluation below = chi_piecewise(wg, {V({-2}), V({0})});
  CHECK_FALSE(below.above_threshold);
}

TEST_CASE("piecewise evaluation rejects the excluded structures") {
  WeightedGainGraph looped(GainGraph(1, 1, {Edge::loop(0, V({0}))}), Semigroup::ConeMinusFinite,
                           {Weight::cone_minus_finite(ColorSet::cone(V({0})))});
  CHECK_THROWS_AS(chi_piecewise(looped, {V({3})}), semantic_error);
  WeightedGainGraph loose(GainGraph(1, 1, {Edge::loose()}), Semigroup::ConeMinusFinite,
                          {Weight::cone_minus_finite(ColorSet::cone(V({0})))});
  CHECK_THROWS_AS(chi_piecewise(loose, {V({3})}), semantic_error);
}

TEST_CASE("the empty-set term of the two-vertex worked instance") {
  // Edgeless graph with the same weights isolates the B = empty term:
  // (m11(m12+1) - 1)((m21+1)(m22-2) - 1).
  WeightedGainGraph wg(GainGraph(2, 2, {}), Semigroup::ConeMinusFinite,
                       {Weight::cone_minus_finite(ColorSet::cone(V({1, 0}), {V({2, 1})})),
                        Weight::cone_minus_finite(ColorSet::cone(V({0, 3}), {V({1, 4})}))});
  for (Int m11 = 4; m11 <= 6; ++m11)
    for (Int m22 = 5; m22 <= 7; ++m22) {
      Int value = chi_piecewise(wg, {V({m11, 5}), V({4, m22})}).value;
      CHECK(value == (m11 * 6 - 1) * (5 * (m22 - 2) - 1));
    }
  // Threshold is the join of the exclusion points themselves.
  PiecewiseEvaluation ev = chi_piecewise(wg, {V({4, 5}), V({4, 6})});
  CHECK(ev.threshold[0] == V({2, 1}));
  CHECK(ev.threshold[1] == V({1, 4}));
}

TEST_CASE("full piecewise evaluation matches brute force above threshold") {
  WeightedGainGraph wg(phi_star_graph(), Semigroup::ConeMinusFinite,
                       {Weight::cone_minus_finite(ColorSet::cone(V({1, 0}), {V({2, 1})})),
                        Weight::cone_minus_finite(ColorSet::cone(V({0, 3}), {V({1, 4})}))});
  std::vector<Vec> threshold = piecewise_threshold(wg);
  for (Int a = 0; a <= 2; ++a)
    for (Int b = 0; b <= 2; ++b) {
      std::vector<Vec> m = {threshold[0] + V({a, b}), threshold[1] + V({b, a})};
      PiecewiseEvaluation ev = chi_piecewise(wg, m);
      REQUIRE(ev.above_threshold);
      ColorFilter filter = {ColorSet::ideal(m[0]), ColorSet::ideal(m[1])};
      CHECK(ev.value == count_proper_bruteforce(wg, filter));
      CHECK(ev.chamber_poly.eval(m) == ev.value);
    }
}

TEST_CASE("factors vanish below the per-set bound") {
  Rng rng(97);
  int tested = 0;
  while (tested < 40) {
    GainGraph g = random_gain_graph(rng, 3, 4, 2, 2, false, false);
    bool clean = true;
    for (const Edge& e : g.edges)
      if (e.kind != EdgeKind::Link || e.gain == Vec::zero(g.d)) clean = false;
    if (!clean || g.n < 2) continue;
    WeightedGainGraph wg = random_cone_weighted(rng, g, 2);
    LatB lat = lat_b(g);
    for (size_t bi = 0; bi < lat.sets.size(); ++bi) {
      SpanningPartition part = components(g, lat.sets[bi]);
      SwitchingFunction eta = top_switching(g, lat.sets[bi]);
      for (const auto& block : part.blocks) {
        if (block.size() < 2) continue;
        // bar_m over the restriction to the set: join of apex_j + alpha_ji.
        GainGraph sub = restrict_edges(WeightedGainGraph(g, wg.sg, wg.weights), lat.sets[bi]).graph;
        for (int i : block) {
          Vec bar = wg.weights[static_cast<size_t>(i)].list.bound;
          for (int j : block) {
            auto a = alpha(sub, j, i);
            if (a) bar = join(bar, wg.weights[static_cast<size_t>(j)].list.bound + *a);
          }
          for (int k = 0; k < g.d; ++k) {
            // Drop one coordinate of m_i just below the bound; the factor of
            // this block must vanish.
            std::vector<Vec> m(static_cast<size_t>(g.n), Vec::constant(g.d, 50));
            m[static_cast<size_t>(i)] = bar;
            m[static_cast<size_t>(i)][k] = bar[k] - 1;
            ColorSet factor = ColorSet::all();
            for (int v : block) {
              factor = intersect(factor, wg.weights[static_cast<size_t>(v)].list.translated(
                                             eta[static_cast<size_t>(v)]));
              factor = intersect(factor, ColorSet::ideal(m[static_cast<size_t>(v)] +
                                                         eta[static_cast<size_t>(v)]));
            }
            REQUIRE(factor.size() == 0);
            ++tested;
          }
        }
      }
    }
  }
}

TEST_CASE("common-bound evaluation") {
  GainGraph k2(1, 2, {Edge::link(0, 1, V({0}))});
  WeightedGainGraph wg(k2, Semigroup::ConeMinusFinite,
                       {Weight::cone_minus_finite(ColorSet::cone(V({0}))),
                        Weight::cone_minus_finite(ColorSet::cone(V({0})))});
  CommonBoundEvaluation ev = chi_common_bound(wg, V({5}));
  CHECK(ev.value == 30);  // (5+1)^2 - (5+1)
  CHECK(ev.poly.to_string() == "m1^2 + m1");
  CHECK(ev.poly.terms.at({2}) == 1);  // monic of degree n
  CHECK(ev.threshold == V({-1}));

  WeightedGainGraph edgeless(GainGraph(1, 2, {}), Semigroup::ConeMinusFinite,
                             {Weight::cone_minus_finite(ColorSet::cone(V({2}))),
                              Weight::cone_minus_finite(ColorSet::cone(V({2})))});
  CommonBoundEvaluation box = chi_common_bound(edgeless, V({4}));
  CHECK(box.value == 9);  // (4-2+1)^2
}

TEST_CASE("matrix counts") {
  AffinographicArrangement sub;
  sub.n = 2;
  sub.d = 2;
  sub.planes = {{0, 1, V({0, 0})}};
  std::vector<Vec> H = {V({0, 0}), V({0, 0})};
  std::vector<Vec> M = {V({1, 1}), V({1, 1})};
  CHECK(count_matrix(sub, H, M) == 12);
  CHECK(brute_count_matrix(sub, H, M) == 12);

  AffinographicArrangement none;
  none.n = 2;
  none.d = 2;
  CHECK(count_matrix(none, H, M) == 16);

  std::vector<Vec> bad = {V({2, 2}), V({0, 0})};
  CHECK_THROWS_AS(count_matrix(sub, bad, M), semantic_error);

  AffinographicArrangement star;
  star.n = 2;
  star.d = 2;
  star.planes = {{0, 1, V({0, 0})}, {0, 1, V({2, 0})}, {0, 1, V({-1, 2})}};
  std::vector<Vec> H2 = {V({2, 0}), V({-1, 3})};
  std::vector<Vec> M2 = {V({5, 3}), V({2, 6})};
  CHECK(count_matrix(star, H2, M2) == brute_count_matrix(star, H2, M2));
}

TEST_CASE("gain-free specialization") {
  GainGraph k2(1, 2, {Edge::link(0, 1, V({0}))});
  for (Int k = 3; k <= 6; ++k) {
    WeightedGainGraph wg(k2, Semigroup::ConeMinusFinite,
                         {Weight::cone_minus_finite(ColorSet::cone(V({1}))),
                          Weight::cone_minus_finite(ColorSet::cone(V({1})))});
    PiecewiseEvaluation ev = chi_graph_no_gains(wg, {V({k}), V({k})});
    CHECK(ev.value == k * k - k);
  }

  // One excluded color per vertex, checked against brute force at k = 5..8.
  WeightedGainGraph excl(k2, Semigroup::ConeMinusFinite,
                         {Weight::cone_minus_finite(ColorSet::cone(V({1}), {V({2})})),
                          Weight::cone_minus_finite(ColorSet::cone(V({1}), {V({3})}))});
  for (Int k = 5; k <= 8; ++k) {
    PiecewiseEvaluation ev = chi_graph_no_gains(excl, {V({k}), V({k})});
    CHECK(ev.value == (k - 1) * (k - 1) - (k - 2));
    ColorFilter filter = {ColorSet::ideal(V({k})), ColorSet::ideal(V({k}))};
    CHECK(ev.value == count_proper_bruteforce(excl, filter));
    CHECK(ev.threshold[0] == V({3}));  // join of the exclusions
  }

  GainGraph parallel(1, 2, {Edge::link(0, 1, V({0})), Edge::link(0, 1, V({0}))});
  WeightedGainGraph bad(parallel, Semigroup::ConeMinusFinite,
                        {Weight::cone_minus_finite(ColorSet::cone(V({0}))),
                         Weight::cone_minus_finite(ColorSet::cone(V({0})))});
  CHECK_THROWS_AS(chi_graph_no_gains(bad, {V({3}), V({3})}), semantic_error);

  // Edgeless: box counts with exclusion corrections.
  WeightedGainGraph boxes(GainGraph(1, 2, {}), Semigroup::ConeMinusFinite,
                          {Weight::cone_minus_finite(ColorSet::cone(V({1}), {V({2})})),
                           Weight::cone_minus_finite(ColorSet::cone(V({0})))});
  CHECK(chi_graph_no_gains(boxes, {V({6}), V({6})}).value == 5 * 7);
}

TEST_CASE("brute-force oracles agree with the closed counts on fixtures") {
  CHECK(brute_count_orthotope(diagonal_pair(), {2, 3}) == 9);
  CHECK(brute_count_lists(diagonal_pair(), {{0, 2, 5}, {0, 2, 5}}) == 6);
  std::vector<ColorSet> partial = {finite1({0, 2}), finite1({1, 2})};
  CHECK(brute_count_lists_bounded(diagonal_pair(), partial, {2, 2}) == 3);
}
