#pragma once

#include <vector>

#include "gain_graph.hpp"
#include "weights.hpp"

namespace wgg {

// Switching function eta : V -> Z^d.
using SwitchingFunction = std::vector<Vec>;

struct WeightedGainGraph {
  GainGraph graph;
  Semigroup sg = Semigroup::MaxZd;
  std::vector<Weight> weights;  // one per vertex

  WeightedGainGraph() = default;
  WeightedGainGraph(GainGraph g, Semigroup sg, std::vector<Weight> weights);

  bool operator==(const WeightedGainGraph&) const = default;
};

// The top switching function of a balanced set: on each block the join of
// path gains to the block's vertices, so switched gains vanish on s and the
// meet of values over each block is zero.
SwitchingFunction top_switching(const GainGraph& g, EdgeSet s);

GainGraph switch_gains(const GainGraph& g, const SwitchingFunction& eta);
WeightedGainGraph switch_graph(const WeightedGainGraph& wg, const SwitchingFunction& eta);

// Contraction by an arbitrary edge set: vertices of unbalanced components
// are deleted (surviving incident edges degrade to half or loose edges),
// the balanced part is switched by its top switching function, its blocks
// merge into single vertices in canonical order (smallest original vertex
// first), s is deleted, and block weights are semigroup sums of the
// switched vertex weights.
WeightedGainGraph contract(const WeightedGainGraph& wg, EdgeSet s);

WeightedGainGraph delete_edges(const WeightedGainGraph& wg, EdgeSet s);
WeightedGainGraph restrict_edges(const WeightedGainGraph& wg, EdgeSet s);

WeightedGainGraph disjoint_union(const WeightedGainGraph& a, const WeightedGainGraph& b);

}  // namespace wgg
