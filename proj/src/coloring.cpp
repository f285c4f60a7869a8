#include "coloring.hpp"

#include <algorithm>

namespace wgg {

namespace {

constexpr Int kColorationCap = 10'000'000;

void reject_half_edges(const GainGraph& g) {
  for (const Edge& e : g.edges)
    if (e.kind == EdgeKind::Half)
      throw semantic_error("coloring operations reject graphs with half edges");
}

bool has_loose_edge(const GainGraph& g) {
  return std::any_of(g.edges.begin(), g.edges.end(),
                     [](const Edge& e) { return e.kind == EdgeKind::Loose; });
}

EdgeSet loose_edges(const GainGraph& g) {
  EdgeSet s = 0;
  for (int e = 0; e < g.edge_count(); ++e)
    if (g.edges[static_cast<size_t>(e)].kind == EdgeKind::Loose) s |= edge_bit(e);
  return s;
}

std::vector<std::vector<Vec>> effective_lists(const WeightedGainGraph& wg,
                                              const ColorFilter& filter) {
  if (static_cast<int>(filter.size()) != wg.graph.n)
    throw semantic_error("filter must be total on V");
  std::vector<std::vector<Vec>> lists;
  lists.reserve(static_cast<size_t>(wg.graph.n));
  for (int v = 0; v < wg.graph.n; ++v) {
    ColorSet eff = intersect(weight_color_set(wg.weights[static_cast<size_t>(v)]),
                             filter[static_cast<size_t>(v)]);
    if (!eff.is_finite()) throw semantic_error("effective color list is infinite");
    lists.push_back(std::move(eff.members));
  }
  return lists;
}

template <typename Visit>
void for_each_coloration(const std::vector<std::vector<Vec>>& lists, Visit&& visit) {
  Int total = 1;
  for (const auto& l : lists) total = checked_mul(total, static_cast<Int>(l.size()));
  if (total > kColorationCap) throw semantic_error("brute-force coloration count exceeds cap");
  if (total == 0) return;
  const int n = static_cast<int>(lists.size());
  std::vector<size_t> idx(static_cast<size_t>(n), 0);
  Coloration x(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) x[static_cast<size_t>(v)] = lists[static_cast<size_t>(v)][0];
  while (true) {
    visit(x);
    int v = 0;
    while (v < n) {
      auto& i = idx[static_cast<size_t>(v)];
      if (++i < lists[static_cast<size_t>(v)].size()) {
        x[static_cast<size_t>(v)] = lists[static_cast<size_t>(v)][i];
        break;
      }
      i = 0;
      x[static_cast<size_t>(v)] = lists[static_cast<size_t>(v)][0];
      ++v;
    }
    if (v == n) break;
  }
}

// Product over the blocks of B of the effective filtered list sizes of the
// contracted pair weights.
Int pair_block_product(const WeightedGainGraph& pg, EdgeSet b) {
  SwitchingFunction eta = top_switching(pg.graph, b);
  SpanningPartition part = components(pg.graph, b);
  Int prod = 1;
  for (const auto& block : part.blocks) {
    Weight acc = weight_act(pg.weights[static_cast<size_t>(block.front())],
                            eta[static_cast<size_t>(block.front())]);
    for (size_t i = 1; i < block.size(); ++i)
      acc = weight_add(acc, weight_act(pg.weights[static_cast<size_t>(block[i])],
                                       eta[static_cast<size_t>(block[i])]));
    prod = checked_mul(prod, weight_color_count(acc));
    if (prod == 0) break;
  }
  return prod;
}

}  // namespace

ColorFilter no_filter(int n) { return ColorFilter(static_cast<size_t>(n), ColorSet::all()); }

EdgeSet improper_set(const GainGraph& g, const Coloration& x) {
  if (static_cast<int>(x.size()) != g.n) throw semantic_error("coloration must be total on V");
  EdgeSet out = 0;
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edges[static_cast<size_t>(e)];
    if (!ed.has_gain()) continue;
    if (x[static_cast<size_t>(ed.head)] == x[static_cast<size_t>(ed.tail)] + ed.gain)
      out |= edge_bit(e);
  }
  return out;
}

WeightedGainGraph make_pair_weighted(const WeightedGainGraph& wg, const ColorFilter& filter) {
  if (static_cast<int>(filter.size()) != wg.graph.n)
    throw semantic_error("filter must be total on V");
  std::vector<Weight> weights;
  weights.reserve(static_cast<size_t>(wg.graph.n));
  for (int v = 0; v < wg.graph.n; ++v)
    weights.push_back(Weight::pair(weight_color_set(wg.weights[static_cast<size_t>(v)]),
                                   filter[static_cast<size_t>(v)]));
  return WeightedGainGraph(wg.graph, Semigroup::Pair, std::move(weights));
}

Int count_proper_bruteforce(const WeightedGainGraph& wg, const ColorFilter& filter) {
  reject_half_edges(wg.graph);
  if (has_loose_edge(wg.graph)) return 0;  // loose edges are always improper
  auto lists = effective_lists(wg, filter);
  Int count = 0;
  for_each_coloration(lists, [&](const Coloration& x) {
    if (improper_set(wg.graph, x) == 0) ++count;
  });
  return count;
}

Int count_improper_exactly_bruteforce(const WeightedGainGraph& wg, EdgeSet b) {
  reject_half_edges(wg.graph);
  EdgeSet loose = loose_edges(wg.graph);
  if ((b & loose) != loose) return 0;  // loose edges are improper in every coloration
  auto lists = effective_lists(wg, no_filter(wg.graph.n));
  Int count = 0;
  for_each_coloration(lists, [&](const Coloration& x) {
    if ((improper_set(wg.graph, x) | loose) == b) ++count;
  });
  return count;
}

Int count_proper_mobius(const WeightedGainGraph& wg) {
  reject_half_edges(wg.graph);
  require_enumerable(wg.graph);
  WeightedGainGraph pg = make_pair_weighted(wg, no_filter(wg.graph.n));
  for (const Weight& w : pg.weights)
    if (!intersect(w.list, w.filter).is_finite())
      throw semantic_error("proper colorations are zero or infinite: infinite list");

  LatB lat = lat_b(wg.graph);
  Int mobius_form = 0;
  for (size_t i = 0; i < lat.sets.size(); ++i) {
    if (lat.mu[i] == 0) continue;
    mobius_form = checked_add(mobius_form, checked_mul(lat.mu[i],
                                                       pair_block_product(pg, lat.sets[i])));
  }

  Int alternating_form = 0;
  const int m = wg.graph.edge_count();
  for (EdgeSet b = 0; b < (EdgeSet{1} << m); ++b) {
    if (!is_balanced(wg.graph, b)) continue;
    Int term = pair_block_product(pg, b);
    alternating_form = checked_add(alternating_form, (popcount(b) & 1) ? -term : term);
  }

  if (mobius_form != alternating_form)
    throw semantic_error("Mobius and alternating proper-coloration counts disagree");
  return mobius_form;
}

Int count_with_improper_exactly(const WeightedGainGraph& wg, EdgeSet b) {
  reject_half_edges(wg.graph);
  if (!is_balanced(wg.graph, b))
    throw semantic_error("improper edge sets are balanced; b is not");
  return count_proper_mobius(contract(wg, b));
}

Int list_chromatic(const WeightedGainGraph& wg, const ColorFilter& filter) {
  reject_half_edges(wg.graph);
  require_enumerable(wg.graph);
  WeightedGainGraph pg = make_pair_weighted(wg, filter);
  for (const Weight& w : pg.weights)
    if (!intersect(w.list, w.filter).is_finite())
      throw semantic_error("effective color list is infinite");
  LatB lat = lat_b(wg.graph);
  Int total = 0;
  for (size_t i = 0; i < lat.sets.size(); ++i) {
    if (lat.mu[i] == 0) continue;
    total = checked_add(total, checked_mul(lat.mu[i], pair_block_product(pg, lat.sets[i])));
  }
  return total;
}

Int chi_from_q(const WeightedGainGraph& wg, const ColorFilter& filter) {
  reject_half_edges(wg.graph);
  WeightedGainGraph pg = make_pair_weighted(wg, filter);
  for (const Weight& w : pg.weights)
    if (!intersect(w.list, w.filter).is_finite())
      throw semantic_error("effective color list is infinite");
  QPolynomial q = q_total_subset(pg);
  std::map<std::string, Rational> assign;
  for (const auto& [key, w] : q.udict) assign[key] = Rational(-weight_color_count(w));
  Rational value = evaluate(q, assign, Rational(-1), Rational(0));
  if (!value.is_integer()) throw semantic_error("chi evaluation is not an integer");
  return (wg.graph.n & 1) ? -value.num : value.num;
}

}  // namespace wgg
