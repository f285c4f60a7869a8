#include "weighted_graph.hpp"

#include <algorithm>

namespace wgg {

WeightedGainGraph::WeightedGainGraph(GainGraph g, Semigroup sg_, std::vector<Weight> w)
    : graph(std::move(g)), sg(sg_), weights(std::move(w)) {
  if (static_cast<int>(weights.size()) != graph.n)
    throw semantic_error("weight function must be total on V");
  for (const Weight& wt : weights)
    if (wt.sg != sg) throw semantic_error("vertex weight from the wrong semigroup");
}

SwitchingFunction top_switching(const GainGraph& g, EdgeSet s) {
  if (!is_balanced(g, s)) throw semantic_error("top switching requires a balanced edge set");
  SubgraphAnalysis a = analyze_subgraph(g, s);
  // eta(v) = join over the block of (psi(w) - psi(v)) = (join of psi) - psi(v).
  std::vector<Vec> block_top;
  block_top.reserve(a.part.blocks.size());
  for (const auto& block : a.part.blocks) {
    Vec top = a.psi[static_cast<size_t>(block.front())];
    for (int v : block) top = join(top, a.psi[static_cast<size_t>(v)]);
    block_top.push_back(std::move(top));
  }
  SwitchingFunction eta(static_cast<size_t>(g.n));
  for (int v = 0; v < g.n; ++v)
    eta[static_cast<size_t>(v)] =
        block_top[static_cast<size_t>(a.part.block_of[static_cast<size_t>(v)])] -
        a.psi[static_cast<size_t>(v)];
  return eta;
}

GainGraph switch_gains(const GainGraph& g, const SwitchingFunction& eta) {
  if (static_cast<int>(eta.size()) != g.n)
    throw semantic_error("switching function must be total on V");
  GainGraph out = g;
  for (Edge& e : out.edges)
    if (e.has_gain())
      e.gain = (e.gain - eta[static_cast<size_t>(e.tail)]) + eta[static_cast<size_t>(e.head)];
  return out;
}

WeightedGainGraph switch_graph(const WeightedGainGraph& wg, const SwitchingFunction& eta) {
  WeightedGainGraph out = wg;
  out.graph = switch_gains(wg.graph, eta);
  for (int v = 0; v < wg.graph.n; ++v)
    out.weights[static_cast<size_t>(v)] =
        weight_act(wg.weights[static_cast<size_t>(v)], eta[static_cast<size_t>(v)]);
  return out;
}

WeightedGainGraph contract(const WeightedGainGraph& wg, EdgeSet s) {
  const GainGraph& g = wg.graph;
  require_subset_of_edges(g, s);
  SubgraphAnalysis a = analyze_subgraph(g, s);

  // Balanced part of s: edges whose endpoints lie in balanced components.
  EdgeSet sb = 0;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!edge_in(s, e)) continue;
    const Edge& ed = g.edges[static_cast<size_t>(e)];
    if (ed.tail < 0) continue;  // loose edges of s are simply deleted
    if (a.part.block_balanced[static_cast<size_t>(a.part.block_of[static_cast<size_t>(ed.tail)])])
      sb |= edge_bit(e);
  }
  SwitchingFunction eta = top_switching(g, sb);

  // New vertices: balanced blocks in canonical order.
  std::vector<int> new_vertex_of_block(a.part.blocks.size(), -1);
  int next = 0;
  for (size_t b = 0; b < a.part.blocks.size(); ++b)
    if (a.part.block_balanced[b]) new_vertex_of_block[b] = next++;

  auto survives = [&](int v) {
    return a.part.block_balanced[static_cast<size_t>(a.part.block_of[static_cast<size_t>(v)])];
  };
  auto new_vertex = [&](int v) {
    return new_vertex_of_block[static_cast<size_t>(a.part.block_of[static_cast<size_t>(v)])];
  };

  std::vector<Edge> edges;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (edge_in(s, e)) continue;
    const Edge& ed = g.edges[static_cast<size_t>(e)];
    switch (ed.kind) {
      case EdgeKind::Loose:
        edges.push_back(Edge::loose());
        break;
      case EdgeKind::Half:
        edges.push_back(survives(ed.tail) ? Edge::half(new_vertex(ed.tail)) : Edge::loose());
        break;
      case EdgeKind::Link:
      case EdgeKind::Loop: {
        bool st = survives(ed.tail), sh = survives(ed.head);
        if (!st && !sh) {
          edges.push_back(Edge::loose());
        } else if (!sh) {
          edges.push_back(Edge::half(new_vertex(ed.tail)));
        } else if (!st) {
          edges.push_back(Edge::half(new_vertex(ed.head)));
        } else {
          Vec gain =
              (ed.gain - eta[static_cast<size_t>(ed.tail)]) + eta[static_cast<size_t>(ed.head)];
          int t = new_vertex(ed.tail), h = new_vertex(ed.head);
          edges.push_back(t == h ? Edge::loop(t, std::move(gain))
                                 : Edge::link(t, h, std::move(gain)));
        }
        break;
      }
    }
  }

  std::vector<Weight> weights(static_cast<size_t>(next), Weight{});
  for (size_t b = 0; b < a.part.blocks.size(); ++b) {
    if (!a.part.block_balanced[b]) continue;
    const auto& block = a.part.blocks[b];
    Weight acc = weight_act(wg.weights[static_cast<size_t>(block.front())],
                            eta[static_cast<size_t>(block.front())]);
    for (size_t i = 1; i < block.size(); ++i)
      acc = weight_add(acc, weight_act(wg.weights[static_cast<size_t>(block[i])],
                                       eta[static_cast<size_t>(block[i])]));
    weights[static_cast<size_t>(new_vertex_of_block[b])] = std::move(acc);
  }

  return WeightedGainGraph(GainGraph(g.d, next, std::move(edges)), wg.sg, std::move(weights));
}

WeightedGainGraph delete_edges(const WeightedGainGraph& wg, EdgeSet s) {
  require_subset_of_edges(wg.graph, s);
  std::vector<Edge> edges;
  for (int e = 0; e < wg.graph.edge_count(); ++e)
    if (!edge_in(s, e)) edges.push_back(wg.graph.edges[static_cast<size_t>(e)]);
  return WeightedGainGraph(GainGraph(wg.graph.d, wg.graph.n, std::move(edges)), wg.sg,
                           wg.weights);
}

WeightedGainGraph restrict_edges(const WeightedGainGraph& wg, EdgeSet s) {
  require_subset_of_edges(wg.graph, s);
  return delete_edges(wg, full_edge_set(wg.graph.edge_count()) & ~s);
}

WeightedGainGraph disjoint_union(const WeightedGainGraph& a, const WeightedGainGraph& b) {
  if (a.graph.d != b.graph.d) throw semantic_error("disjoint union needs equal gain dimension");
  if (a.sg != b.sg) throw semantic_error("disjoint union needs equal weight semigroups");
  std::vector<Edge> edges = a.graph.edges;
  for (Edge e : b.graph.edges) {
    if (e.tail >= 0) e.tail += a.graph.n;
    if (e.head >= 0) e.head += a.graph.n;
    edges.push_back(std::move(e));
  }
  std::vector<Weight> weights = a.weights;
  weights.insert(weights.end(), b.weights.begin(), b.weights.end());
  return WeightedGainGraph(GainGraph(a.graph.d, a.graph.n + b.graph.n, std::move(edges)), a.sg,
                           std::move(weights));
}

}  // namespace wgg
