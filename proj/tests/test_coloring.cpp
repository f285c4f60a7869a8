#include <doctest.h>

#include "helpers.hpp"

using namespace wgg;
using namespace wgg::testing;

TEST_CASE("improper edge sets") {
  GainGraph g = phi_star_graph();
  CHECK(improper_set(g, {V({0, 0}), V({0, 0})}) == edge_bit(0));
  CHECK(improper_set(g, {V({0, 0}), V({5, 5})}) == 0);
  CHECK(improper_set(g, {V({0, 0}), V({2, 0})}) == edge_bit(1));

  GainGraph with_loop(1, 1, {Edge::loop(0, V({0})), Edge::loop(0, V({1}))});
  CHECK(improper_set(with_loop, {V({7})}) == edge_bit(0));
}

TEST_CASE("brute-force proper counts") {
  CHECK(count_proper_bruteforce(k2_lists(), no_filter(2)) == 6);

  WeightedGainGraph edgeless(GainGraph(1, 2, {}), Semigroup::FiniteList,
                             {Weight::finite_list(finite1({0, 1})),
                              Weight::finite_list(finite1({3, 4, 5}))});
  CHECK(count_proper_bruteforce(edgeless, no_filter(2)) == 6);

  WeightedGainGraph with_half(GainGraph(1, 1, {Edge::half(0)}), Semigroup::FiniteList,
                              {Weight::finite_list(finite1({0}))});
  CHECK_THROWS_AS(count_proper_bruteforce(with_half, no_filter(1)), semantic_error);

  WeightedGainGraph infinite(GainGraph(1, 1, {}), Semigroup::ConeMinusFinite,
                             {Weight::cone_minus_finite(ColorSet::cone(V({0})))});
  CHECK_THROWS_AS(count_proper_bruteforce(infinite, no_filter(1)), semantic_error);
}

TEST_CASE("Mobius counts match the worked examples") {
  CHECK(count_proper_mobius(k2_lists()) == 6);

  WeightedGainGraph looped(GainGraph(1, 1, {Edge::loop(0, V({0}))}), Semigroup::FiniteList,
                           {Weight::finite_list(finite1({0, 1, 2}))});
  CHECK(count_proper_mobius(looped) == 0);
  CHECK(count_proper_bruteforce(looped, no_filter(1)) == 0);

  WeightedGainGraph edgeless(GainGraph(1, 2, {}), Semigroup::FiniteList,
                             {Weight::finite_list(finite1({0, 1})),
                              Weight::finite_list(finite1({2, 3, 4}))});
  CHECK(count_proper_mobius(edgeless) == 6);

  WeightedGainGraph infinite(GainGraph(1, 1, {}), Semigroup::ConeMinusFinite,
                             {Weight::cone_minus_finite(ColorSet::cone(V({0})))});
  CHECK_THROWS_AS(count_proper_mobius(infinite), semantic_error);
}

TEST_CASE("counting colorations with a fixed improper set") {
  WeightedGainGraph k2 = k2_lists();
  CHECK(count_with_improper_exactly(k2, 0) == 6);
  CHECK(count_with_improper_exactly(k2, edge_bit(0)) == 3);
  CHECK(count_improper_exactly_bruteforce(k2, edge_bit(0)) == 3);

  // Zero-gain path with lists {0..3}: forcing everything improper leaves the
  // constant colorations.
  GainGraph path(1, 3, {Edge::link(0, 1, V({0})), Edge::link(1, 2, V({0}))});
  WeightedGainGraph wg(path, Semigroup::FiniteList,
                       {Weight::finite_list(finite1({0, 1, 2, 3})),
                        Weight::finite_list(finite1({0, 1, 2, 3})),
                        Weight::finite_list(finite1({0, 1, 2, 3}))});
  CHECK(count_with_improper_exactly(wg, 0b11) == 4);

  GainGraph unbalanced = phi_star_graph();
  WeightedGainGraph pw(unbalanced, Semigroup::FiniteList,
                       {Weight::finite_list(ColorSet::finite({V({0, 0})})),
                        Weight::finite_list(ColorSet::finite({V({0, 0})}))});
  CHECK_THROWS_AS(count_with_improper_exactly(pw, 0b011), semantic_error);
}

TEST_CASE("filtered list chromatic counts") {
  // One edge with gain 1, cone weights at 0, bound 1 at both vertices:
  // 4 - min(2,1) = 3.
  GainGraph g(1, 2, {Edge::link(0, 1, V({1}))});
  WeightedGainGraph wg(g, Semigroup::ConeMinusFinite,
                       {Weight::cone_minus_finite(ColorSet::cone(V({0}))),
                        Weight::cone_minus_finite(ColorSet::cone(V({0})))});
  ColorFilter bound1 = {ColorSet::ideal(V({1})), ColorSet::ideal(V({1}))};
  CHECK(list_chromatic(wg, bound1) == 3);
  CHECK(count_proper_bruteforce(wg, bound1) == 3);
  CHECK(chi_from_q(wg, bound1) == 3);

  // A full-space filter on finite lists is absorbed.
  CHECK(list_chromatic(k2_lists(), no_filter(2)) == count_proper_mobius(k2_lists()));

  // The running example with cone weights and a wide bound agrees with the
  // brute-force oracle.
  WeightedGainGraph cones(phi_star_graph(), Semigroup::ConeMinusFinite,
                          {Weight::cone_minus_finite(ColorSet::cone(V({2, 0}))),
                           Weight::cone_minus_finite(ColorSet::cone(V({-1, 3})))});
  ColorFilter wide = {ColorSet::ideal(V({5, 5})), ColorSet::ideal(V({5, 5}))};
  CHECK(list_chromatic(cones, wide) == count_proper_bruteforce(cones, wide));
  CHECK(chi_from_q(cones, wide) == count_proper_bruteforce(cones, wide));

  // The running example colored from the box [0,2]^2 at both vertices.
  WeightedGainGraph boxes(phi_star_graph(), Semigroup::ConeMinusFinite,
                          {Weight::cone_minus_finite(ColorSet::cone(V({0, 0}))),
                           Weight::cone_minus_finite(ColorSet::cone(V({0, 0})))});
  ColorFilter box2 = {ColorSet::ideal(V({2, 2})), ColorSet::ideal(V({2, 2}))};
  CHECK(list_chromatic(boxes, box2) == count_proper_bruteforce(boxes, box2));
}

TEST_CASE("chi through the polynomial") {
  CHECK(chi_from_q(k2_lists(), no_filter(2)) == 6);

  WeightedGainGraph edgeless(GainGraph(1, 2, {}), Semigroup::FiniteList,
                             {Weight::finite_list(finite1({0, 1})),
                              Weight::finite_list(finite1({5, 6, 7}))});
  CHECK(chi_from_q(edgeless, no_filter(2)) == 6);

  // A balanced loop kills every proper coloration through the (v+1) factor.
  WeightedGainGraph looped(GainGraph(1, 1, {Edge::loop(0, V({0}))}), Semigroup::FiniteList,
                           {Weight::finite_list(finite1({0, 1, 2}))});
  CHECK(chi_from_q(looped, no_filter(1)) == 0);
}

TEST_CASE("loose edges make every coloration improper") {
  WeightedGainGraph wg(GainGraph(1, 1, {Edge::loose()}), Semigroup::FiniteList,
                       {Weight::finite_list(finite1({0, 1}))});
  CHECK(count_proper_bruteforce(wg, no_filter(1)) == 0);
  CHECK(count_proper_mobius(wg) == 0);
  CHECK(chi_from_q(wg, no_filter(1)) == 0);
  // The improper set must contain the loose edge for a nonzero count.
  CHECK(count_improper_exactly_bruteforce(wg, 0) == 0);
  CHECK(count_improper_exactly_bruteforce(wg, edge_bit(0)) == 2);
  CHECK(count_with_improper_exactly(wg, edge_bit(0)) == 2);
}
