#include "activities.hpp"

#include <algorithm>
#include <numeric>

namespace wgg {

EdgeOrdering EdgeOrdering::identity(int m) {
  EdgeOrdering o;
  o.order.resize(static_cast<size_t>(m));
  std::iota(o.order.begin(), o.order.end(), 0);
  return o;
}

int EdgeOrdering::rank_of(int e) const {
  for (size_t i = 0; i < order.size(); ++i)
    if (order[i] == e) return static_cast<int>(i);
  if (e == static_cast<int>(order.size())) return e;  // e0 above everything
  throw semantic_error("edge missing from ordering");
}

int LiftRankOracle::rank(EdgeSet s0) const {
  EdgeSet real = s0 & full_edge_set(e0());
  SubgraphAnalysis a = analyze_subgraph(*g_, real);
  bool unbalanced = false;
  for (bool bal : a.part.block_balanced) unbalanced |= !bal;
  int r = g_->n - a.part.size();
  if ((s0 & e0_bit()) || unbalanced) ++r;
  return r;
}

EdgeSet LiftRankOracle::closure0(EdgeSet s0) const {
  int r = rank(s0);
  EdgeSet out = s0;
  for (int e = 0; e <= e0(); ++e)
    if (!edge_in(s0, e) && rank(s0 | edge_bit(e)) == r) out |= edge_bit(e);
  return out;
}

int lift_rank(const GainGraph& g, EdgeSet s, bool with_e0) {
  require_subset_of_edges(g, s);
  LiftRankOracle oracle(g);
  return oracle.rank(s | (with_e0 ? oracle.e0_bit() : 0));
}

EdgeSet fundamental_circuit(const GainGraph& g, EdgeSet f, int e) {
  LiftRankOracle oracle(g);
  if (!oracle.independent(f)) throw semantic_error("fundamental circuit needs an independent set");
  EdgeSet clos = oracle.closure0(f);
  if (edge_in(f, e) || !edge_in(clos, e))
    throw semantic_error("edge is not in the closure minus the set");
  EdgeSet fe = f | edge_bit(e);
  int r = oracle.rank(fe);
  EdgeSet circuit = 0;
  for (int x : edge_list(fe))
    if (oracle.rank(fe & ~edge_bit(x)) == r) circuit |= edge_bit(x);
  return circuit;
}

EdgeSet fundamental_cocircuit(const GainGraph& g, EdgeSet f, int x) {
  LiftRankOracle oracle(g);
  if (!oracle.independent(f)) throw semantic_error("cocircuit needs an independent set");
  if (!edge_in(f, x)) throw semantic_error("cocircuit element must lie in the set");
  return oracle.closure0(f) & ~oracle.closure0(f & ~edge_bit(x));
}

ActivityReport activities_m0(const GainGraph& g, EdgeSet f, const EdgeOrdering& o) {
  LiftRankOracle oracle(g);
  if (!oracle.independent(f)) throw semantic_error("activities need an independent set");
  ActivityReport rep;
  EdgeSet clos = oracle.closure0(f);
  for (int e : edge_list(clos & ~f)) {
    EdgeSet c = fundamental_circuit(g, f, e);
    bool largest = true;
    for (int x : edge_list(c))
      if (x != e && o.less(e, x)) largest = false;
    (largest ? rep.EA : rep.EI) |= edge_bit(e);
  }
  for (int x : edge_list(f)) {
    EdgeSet dc = fundamental_cocircuit(g, f, x);
    bool largest = true;
    for (int y : edge_list(dc))
      if (y != x && o.less(x, y)) largest = false;
    (largest ? rep.IA : rep.II) |= edge_bit(x);
  }
  rep.epsilon = popcount(rep.EA);
  rep.iota = popcount(rep.IA);
  return rep;
}

ActivityReport activities(const GainGraph& g, EdgeSet f, const EdgeOrdering& o) {
  if (!is_balanced(g, f))
    throw semantic_error("activities in the balance semimatroid need a balanced set");
  return activities_m0(g, f, o);
}

EdgeSet minimal_basis(const GainGraph& g, EdgeSet s, const EdgeOrdering& o) {
  LiftRankOracle oracle(g);
  std::vector<int> elems = edge_list(s);
  std::sort(elems.begin(), elems.end(), [&](int a, int b) { return o.less(a, b); });
  EdgeSet basis = 0;
  for (int e : elems)
    if (oracle.independent(basis | edge_bit(e))) basis |= edge_bit(e);
  return basis;
}

EdgeSet reverse_greedy_extension(const GainGraph& g, EdgeSet f, const EdgeOrdering& o) {
  LiftRankOracle oracle(g);
  if (!is_balanced(g, f) || !oracle.independent(f))
    throw semantic_error("reverse greedy extension needs a balanced independent set");
  std::vector<int> elems = edge_list(full_edge_set(g.edge_count()) & ~f);
  std::sort(elems.begin(), elems.end(), [&](int a, int b) { return o.less(b, a); });
  EdgeSet t = f;
  for (int e : elems) {
    EdgeSet cand = t | edge_bit(e);
    if (oracle.independent(cand) && is_balanced(g, cand)) t = cand;
  }
  return t;
}

QPolynomial forest_expansion(const WeightedGainGraph& wg, const EdgeOrdering& o) {
  const GainGraph& g = wg.graph;
  require_enumerable(g);
  LiftRankOracle oracle(g);
  const int m = g.edge_count();
  QPolynomial out;
  for (EdgeSet f = 0; f < (EdgeSet{1} << m); ++f) {
    if (!is_balanced(g, f) || !oracle.independent(f)) continue;
    ActivityReport rep = activities_m0(g, f, o);
    SwitchingFunction eta = top_switching(g, f);
    SpanningPartition part = components(g, f);
    Monomial mono;
    mono.vexp = rep.epsilon;  // the v slot carries y
    for (const auto& block : part.blocks) {
      Weight acc = weight_act(wg.weights[static_cast<size_t>(block.front())],
                              eta[static_cast<size_t>(block.front())]);
      for (size_t i = 1; i < block.size(); ++i)
        acc = weight_add(acc, weight_act(wg.weights[static_cast<size_t>(block[i])],
                                         eta[static_cast<size_t>(block[i])]));
      std::string key = weight_key(acc);
      out.udict.emplace(key, std::move(acc));
      mono.ukeys.push_back(std::move(key));
    }
    std::sort(mono.ukeys.begin(), mono.ukeys.end());
    out.add_term(std::move(mono), 1);
  }
  return out;
}

}  // namespace wgg
