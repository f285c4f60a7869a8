#pragma once

#include <cstdint>
#include <vector>

#include "lattice.hpp"

namespace wgg {

// Edge of a gain graph.  Links and loops carry a gain (stored for the
// tail->head orientation; the reverse orientation has the negated gain).
// Half edges have one endpoint and no gain; loose edges have neither.
enum class EdgeKind { Link, Loop, Half, Loose };

struct Edge {
  EdgeKind kind = EdgeKind::Loose;
  int tail = -1;  // Link: tail vertex; Loop/Half: the vertex
  int head = -1;  // Link: head vertex; Loop: same as tail
  Vec gain;       // Link/Loop only

  static Edge link(int tail, int head, Vec gain);
  static Edge loop(int vertex, Vec gain);
  static Edge half(int vertex);
  static Edge loose();

  bool has_gain() const { return kind == EdgeKind::Link || kind == EdgeKind::Loop; }
  bool operator==(const Edge&) const = default;
};

struct GainGraph {
  int d = 1;  // gain group is (Z^d, +)
  int n = 0;
  std::vector<Edge> edges;

  GainGraph() = default;
  GainGraph(int d, int n, std::vector<Edge> edges);

  int edge_count() const { return static_cast<int>(edges.size()); }
  // Gain of edge e traversed from `from`; the stored orientation or its
  // reverse.  Requires a link or loop incident to `from`.
  Vec gain_from(int e, int from) const;

  bool operator==(const GainGraph&) const = default;
};

// Edge subsets are bitmasks over edge indices.  Whole-power-set scans are
// capped at kMaxEnumEdges edges; this engine targets desk-scale instances.
using EdgeSet = std::uint64_t;
constexpr int kMaxEnumEdges = 24;

inline bool edge_in(EdgeSet s, int e) { return (s >> e) & 1u; }
inline EdgeSet edge_bit(int e) { return EdgeSet{1} << e; }
inline EdgeSet full_edge_set(int m) { return m == 0 ? 0 : (EdgeSet{1} << m) - 1; }
int popcount(EdgeSet s);
std::vector<int> edge_list(EdgeSet s);
void require_subset_of_edges(const GainGraph& g, EdgeSet s);
void require_enumerable(const GainGraph& g);

// Vertex partition induced by a spanning subgraph (V, S), with per-block
// balance.  Blocks come in canonical order (by smallest vertex) and are
// sorted internally.  Loose edges form no blocks.
struct SpanningPartition {
  std::vector<std::vector<int>> blocks;
  std::vector<int> block_of;          // vertex -> block index
  std::vector<bool> block_balanced;   // a block with a half edge is unbalanced

  int size() const { return static_cast<int>(blocks.size()); }  // c(S)
  int balanced_count() const;                                   // b(S)
};

// Partition plus spanning-forest potentials: psi[v] is the gain of an
// S-path from the block's root (its smallest vertex) to v, so the gain of
// any S-path v->w inside a balanced block is psi[w] - psi[v].
struct SubgraphAnalysis {
  SpanningPartition part;
  std::vector<Vec> psi;
};

SubgraphAnalysis analyze_subgraph(const GainGraph& g, EdgeSet s);
SpanningPartition components(const GainGraph& g, EdgeSet s);

struct OrientedEdge {
  int edge = -1;
  bool reversed = false;
};

Vec walk_gain(const GainGraph& g, const std::vector<OrientedEdge>& walk);

// Balanced: no half edges and every circle has gain zero.
bool is_balanced(const GainGraph& g, EdgeSet s);

// Closure of a balanced set: adds every edge that closes a zero-gain circle
// within s (including zero-gain loops) and every loose edge.
EdgeSet balanced_closure(const GainGraph& g, EdgeSet s);

// The semilattice Lat_b of closed balanced edge sets, inclusion-sorted,
// with Mobius values mu(empty, B).  When the empty set is not closed (the
// graph has a zero-gain loop or a loose edge) every mu is 0.
struct LatB {
  std::vector<EdgeSet> sets;
  std::vector<Int> mu;
  bool empty_closed = true;
};

LatB lat_b(const GainGraph& g);

// mu(empty, b) as the alternating sum over balanced sets closing to b.
Int mobius_alternating(const GainGraph& g, EdgeSet b);

}  // namespace wgg
