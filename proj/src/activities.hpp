#pragma once

#include <vector>

#include "qpoly.hpp"
#include "weighted_graph.hpp"

namespace wgg {

// Linear ordering of the edges: order[k] is the edge in position k, smallest
// first.  The extra point e0 of the complete lift matroid sits above every
// real edge whenever it takes part.
struct EdgeOrdering {
  std::vector<int> order;

  static EdgeOrdering identity(int m);
  // position in the order; e0 (edge index == m) is the largest
  int rank_of(int e) const;
  bool less(int a, int b) const { return rank_of(a) < rank_of(b); }
};

// Rank oracle of the complete lift matroid L0: subsets of E0 = E + {e0} are
// masks whose bit edge_count() is e0.  Half edges count as unbalanced loops
// and loose edges as balanced loops.
class LiftRankOracle {
 public:
  explicit LiftRankOracle(const GainGraph& g) : g_(&g) {}

  int e0() const { return g_->edge_count(); }
  EdgeSet e0_bit() const { return edge_bit(e0()); }
  EdgeSet ground() const { return full_edge_set(e0() + 1); }

  int rank(EdgeSet s0) const;
  bool independent(EdgeSet s0) const { return rank(s0) == popcount(s0); }
  EdgeSet closure0(EdgeSet s0) const;

  const GainGraph& graph() const { return *g_; }

 private:
  const GainGraph* g_;
};

// Rank of a real edge set: n - c(S), plus 1 when unbalanced.
int lift_rank(const GainGraph& g, EdgeSet s, bool with_e0);

// The unique circuit inside f + e, for f independent and e in clos0(f) \ f.
EdgeSet fundamental_circuit(const GainGraph& g, EdgeSet f, int e);

// Relative cocircuit clos0(F) \ clos0(F \ x) for x in the independent set f.
EdgeSet fundamental_cocircuit(const GainGraph& g, EdgeSet f, int x);

struct ActivityReport {
  EdgeSet EA = 0, IA = 0, II = 0, EI = 0;
  int epsilon = 0;  // |EA|
  int iota = 0;     // |IA|
};

// Activities of an independent set in M0; used with balanced sets for the
// semimatroid of graph balance (there clos0 never reaches e0).
ActivityReport activities_m0(const GainGraph& g, EdgeSet f, const EdgeOrdering& o);

// Balance-semimatroid activities: requires f balanced and independent.
ActivityReport activities(const GainGraph& g, EdgeSet f, const EdgeOrdering& o);

// Greedy-in-O basis of M0 restricted to s (lexicographically first).
EdgeSet minimal_basis(const GainGraph& g, EdgeSet s, const EdgeOrdering& o);

// Reverse greedy extension T(f): scan E \ f downward, keeping independence
// and balance; the lexicographically maximum semibasis containing f.
EdgeSet reverse_greedy_extension(const GainGraph& g, EdgeSet f, const EdgeOrdering& o);

// Spanning-forest expansion: over balanced independent sets F, y^{|EA(F)|}
// times the u-variables of the contracted block weights.  Equals the
// balanced dichromatic polynomial with v = y - 1 for every ordering; the
// result's v slot holds y.
QPolynomial forest_expansion(const WeightedGainGraph& wg, const EdgeOrdering& o);

}  // namespace wgg
