#include "gain_graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace wgg {

Edge Edge::link(int tail, int head, Vec gain) {
  Edge e;
  e.kind = EdgeKind::Link;
  e.tail = tail;
  e.head = head;
  e.gain = std::move(gain);
  return e;
}

Edge Edge::loop(int vertex, Vec gain) {
  Edge e;
  e.kind = EdgeKind::Loop;
  e.tail = e.head = vertex;
  e.gain = std::move(gain);
  return e;
}

Edge Edge::half(int vertex) {
  Edge e;
  e.kind = EdgeKind::Half;
  e.tail = vertex;
  return e;
}

Edge Edge::loose() { return Edge{}; }

GainGraph::GainGraph(int d_, int n_, std::vector<Edge> edges_)
    : d(d_), n(n_), edges(std::move(edges_)) {
  if (d < 1) throw semantic_error("gain dimension must be >= 1");
  if (n < 0) throw semantic_error("negative vertex count");
  for (const Edge& e : edges) {
    switch (e.kind) {
      case EdgeKind::Link:
        if (e.tail < 0 || e.tail >= n || e.head < 0 || e.head >= n)
          throw semantic_error("link endpoint out of range");
        if (e.tail == e.head) throw semantic_error("link with equal endpoints; use a loop");
        if (e.gain.dim() != d) throw semantic_error("edge gain has wrong dimension");
        break;
      case EdgeKind::Loop:
        if (e.tail < 0 || e.tail >= n || e.head != e.tail)
          throw semantic_error("loop vertex out of range");
        if (e.gain.dim() != d) throw semantic_error("edge gain has wrong dimension");
        break;
      case EdgeKind::Half:
        if (e.tail < 0 || e.tail >= n) throw semantic_error("half-edge vertex out of range");
        break;
      case EdgeKind::Loose:
        break;
    }
  }
}

Vec GainGraph::gain_from(int e, int from) const {
  const Edge& ed = edges[static_cast<size_t>(e)];
  if (!ed.has_gain()) throw semantic_error("edge has no gain");
  if (ed.tail == from) return ed.gain;
  if (ed.head == from) return -ed.gain;
  throw semantic_error("edge not incident to vertex");
}

int popcount(EdgeSet s) { return std::popcount(s); }

std::vector<int> edge_list(EdgeSet s) {
  std::vector<int> out;
  for (int e = 0; s >> e; ++e)
    if (edge_in(s, e)) out.push_back(e);
  return out;
}

void require_subset_of_edges(const GainGraph& g, EdgeSet s) {
  if (s & ~full_edge_set(g.edge_count()))
    throw semantic_error("edge subset refers to edges outside the graph");
}

void require_enumerable(const GainGraph& g) {
  if (g.edge_count() > kMaxEnumEdges)
    throw semantic_error("graph has too many edges for subset enumeration");
}

int SpanningPartition::balanced_count() const {
  return static_cast<int>(std::count(block_balanced.begin(), block_balanced.end(), true));
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
  }
};

}  // namespace

SubgraphAnalysis analyze_subgraph(const GainGraph& g, EdgeSet s) {
  require_subset_of_edges(g, s);
  SubgraphAnalysis out;
  UnionFind uf(g.n);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!edge_in(s, e)) continue;
    const Edge& ed = g.edges[static_cast<size_t>(e)];
    if (ed.kind == EdgeKind::Link) uf.unite(ed.tail, ed.head);
  }

  // Canonical blocks: order of first (smallest) vertex.
  std::map<int, int> root_to_block;
  auto& part = out.part;
  part.block_of.assign(static_cast<size_t>(g.n), -1);
  for (int v = 0; v < g.n; ++v) {
    int r = uf.find(v);
    auto it = root_to_block.find(r);
    if (it == root_to_block.end()) {
      it = root_to_block.emplace(r, part.size()).first;
      part.blocks.emplace_back();
    }
    part.block_of[static_cast<size_t>(v)] = it->second;
    part.blocks[static_cast<size_t>(it->second)].push_back(v);
  }
  part.block_balanced.assign(part.blocks.size(), true);

  // Spanning-forest potentials via BFS over the links of s.
  out.psi.assign(static_cast<size_t>(g.n), Vec());
  std::vector<std::vector<int>> incident(static_cast<size_t>(g.n));
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!edge_in(s, e)) continue;
    const Edge& ed = g.edges[static_cast<size_t>(e)];
    if (ed.kind == EdgeKind::Link) {
      incident[static_cast<size_t>(ed.tail)].push_back(e);
      incident[static_cast<size_t>(ed.head)].push_back(e);
    }
  }
  std::vector<bool> seen(static_cast<size_t>(g.n), false);
  for (const auto& block : part.blocks) {
    int root = block.front();
    out.psi[static_cast<size_t>(root)] = Vec::zero(g.d);
    seen[static_cast<size_t>(root)] = true;
    std::vector<int> queue{root};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (int e : incident[static_cast<size_t>(v)]) {
        const Edge& ed = g.edges[static_cast<size_t>(e)];
        int w = ed.tail == v ? ed.head : ed.tail;
        if (seen[static_cast<size_t>(w)]) continue;
        seen[static_cast<size_t>(w)] = true;
        out.psi[static_cast<size_t>(w)] = out.psi[static_cast<size_t>(v)] + g.gain_from(e, v);
        queue.push_back(w);
      }
    }
  }

  // Balance check: every edge of s must be consistent with the potentials.
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!edge_in(s, e)) continue;
    const Edge& ed = g.edges[static_cast<size_t>(e)];
    switch (ed.kind) {
      case EdgeKind::Link:
        if (out.psi[static_cast<size_t>(ed.head)] !=
            out.psi[static_cast<size_t>(ed.tail)] + ed.gain)
          part.block_balanced[static_cast<size_t>(part.block_of[static_cast<size_t>(ed.tail)])] =
              false;
        break;
      case EdgeKind::Loop:
        if (ed.gain != Vec::zero(g.d))
          part.block_balanced[static_cast<size_t>(part.block_of[static_cast<size_t>(ed.tail)])] =
              false;
        break;
      case EdgeKind::Half:
        part.block_balanced[static_cast<size_t>(part.block_of[static_cast<size_t>(ed.tail)])] =
            false;
        break;
      case EdgeKind::Loose:
        break;
    }
  }
  return out;
}

SpanningPartition components(const GainGraph& g, EdgeSet s) {
  return analyze_subgraph(g, s).part;
}

Vec walk_gain(const GainGraph& g, const std::vector<OrientedEdge>& walk) {
  Vec total = Vec::zero(g.d);
  int at = -1;
  for (const OrientedEdge& oe : walk) {
    if (oe.edge < 0 || oe.edge >= g.edge_count()) throw semantic_error("walk edge out of range");
    const Edge& ed = g.edges[static_cast<size_t>(oe.edge)];
    if (!ed.has_gain()) throw semantic_error("walk through a half or loose edge");
    int from = oe.reversed ? ed.head : ed.tail;
    int to = oe.reversed ? ed.tail : ed.head;
    if (at != -1 && at != from) throw semantic_error("walk edges are not consecutively incident");
    total = total + (oe.reversed ? -ed.gain : ed.gain);
    at = to;
  }
  return total;
}

bool is_balanced(const GainGraph& g, EdgeSet s) {
  SubgraphAnalysis a = analyze_subgraph(g, s);
  for (int e = 0; e < g.edge_count(); ++e)
    if (edge_in(s, e) && g.edges[static_cast<size_t>(e)].kind == EdgeKind::Half) return false;
  return std::all_of(a.part.block_balanced.begin(), a.part.block_balanced.end(),
                     [](bool b) { return b; });
}

EdgeSet balanced_closure(const GainGraph& g, EdgeSet s) {
  if (!is_balanced(g, s)) throw semantic_error("closure requires a balanced edge set");
  SubgraphAnalysis a = analyze_subgraph(g, s);
  EdgeSet out = s;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (edge_in(s, e)) continue;
    const Edge& ed = g.edges[static_cast<size_t>(e)];
    switch (ed.kind) {
      case EdgeKind::Link:
        if (a.part.block_of[static_cast<size_t>(ed.tail)] ==
                a.part.block_of[static_cast<size_t>(ed.head)] &&
            a.psi[static_cast<size_t>(ed.head)] == a.psi[static_cast<size_t>(ed.tail)] + ed.gain)
          out |= edge_bit(e);
        break;
      case EdgeKind::Loop:
        if (ed.gain == Vec::zero(g.d)) out |= edge_bit(e);
        break;
      case EdgeKind::Half:
        break;
      case EdgeKind::Loose:
        out |= edge_bit(e);
        break;
    }
  }
  return out;
}

LatB lat_b(const GainGraph& g) {
  require_enumerable(g);
  LatB out;
  const int m = g.edge_count();
  std::vector<EdgeSet> closed;
  for (EdgeSet s = 0; s < (EdgeSet{1} << m); ++s) {
    if (!is_balanced(g, s)) continue;
    closed.push_back(balanced_closure(g, s));
  }
  std::sort(closed.begin(), closed.end(), [](EdgeSet x, EdgeSet y) {
    int px = popcount(x), py = popcount(y);
    return px != py ? px < py : x < y;
  });
  closed.erase(std::unique(closed.begin(), closed.end()), closed.end());
  out.sets = std::move(closed);
  out.empty_closed = !out.sets.empty() && out.sets.front() == 0;

  out.mu.assign(out.sets.size(), 0);
  if (out.empty_closed) {
    for (size_t i = 0; i < out.sets.size(); ++i) {
      if (i == 0) {
        out.mu[i] = 1;
        continue;
      }
      Int acc = 0;
      for (size_t j = 0; j < i; ++j)
        if ((out.sets[j] & out.sets[i]) == out.sets[j] && out.sets[j] != out.sets[i])
          acc = checked_add(acc, out.mu[j]);
      out.mu[i] = -acc;
    }
  }
  return out;
}

Int mobius_alternating(const GainGraph& g, EdgeSet b) {
  require_enumerable(g);
  if (!is_balanced(g, b) || balanced_closure(g, b) != b)
    throw semantic_error("mobius_alternating requires a closed balanced set");
  const int m = g.edge_count();
  Int acc = 0;
  for (EdgeSet s = 0; s < (EdgeSet{1} << m); ++s) {
    if ((s & b) != s) continue;  // a set closing to b lies within b
    if (!is_balanced(g, s)) continue;
    if (balanced_closure(g, s) == b) acc = checked_add(acc, (popcount(s) & 1) ? -1 : 1);
  }
  return acc;
}

}  // namespace wgg
