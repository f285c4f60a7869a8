#pragma once

#include <initializer_list>

#include "verify.hpp"

namespace wgg::testing {

inline Vec V(std::initializer_list<Int> coords) { return Vec(std::vector<Int>(coords)); }

// The running example: two vertices, three parallel links with gains
// (0,0), (2,0), (-1,2), max-plus weights (2,0) and (-1,3).
inline GainGraph phi_star_graph() {
  return GainGraph(2, 2,
                   {Edge::link(0, 1, V({0, 0})), Edge::link(0, 1, V({2, 0})),
                    Edge::link(0, 1, V({-1, 2}))});
}

inline WeightedGainGraph phi_star(Semigroup sg = Semigroup::MaxZd) {
  std::vector<Weight> weights;
  if (sg == Semigroup::MaxZd) {
    weights = {Weight::max_zd(V({2, 0})), Weight::max_zd(V({-1, 3}))};
  } else {
    weights = {Weight::sum_zd(V({2, 0})), Weight::sum_zd(V({-1, 3}))};
  }
  return WeightedGainGraph(phi_star_graph(), sg, std::move(weights));
}

// Triangle with all-zero gains (d = 1): edges 0: v0-v1, 1: v1-v2, 2: v0-v2.
inline GainGraph zero_triangle() {
  return GainGraph(
      1, 3, {Edge::link(0, 1, V({0})), Edge::link(1, 2, V({0})), Edge::link(0, 2, V({0}))});
}

inline WeightedGainGraph zero_triangle_sum(Int w0, Int w1, Int w2) {
  return WeightedGainGraph(zero_triangle(), Semigroup::SumZd,
                           {Weight::sum_zd(V({w0})), Weight::sum_zd(V({w1})),
                            Weight::sum_zd(V({w2}))});
}

inline ColorSet finite1(std::initializer_list<Int> values) {
  std::vector<Vec> elems;
  for (Int v : values) elems.push_back(V({v}));
  return ColorSet::finite(std::move(elems));
}

// K2 with one zero-gain edge and lists {0,1,2} at both vertices.
inline WeightedGainGraph k2_lists() {
  GainGraph g(1, 2, {Edge::link(0, 1, V({0}))});
  return WeightedGainGraph(g, Semigroup::FiniteList,
                           {Weight::finite_list(finite1({0, 1, 2})),
                            Weight::finite_list(finite1({0, 1, 2}))});
}

}  // namespace wgg::testing
