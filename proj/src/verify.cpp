#include "verify.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace wgg {

Vec random_vec(Rng& rng, int d, Int lo, Int hi) {
  Vec v = Vec::zero(d);
  for (int k = 0; k < d; ++k) v[k] = rng.range(lo, hi);
  return v;
}

GainGraph random_gain_graph(Rng& rng, int max_n, int max_e, int max_d, Int gain_bound,
                            bool allow_half, bool allow_loose) {
  int n = static_cast<int>(rng.range(1, max_n));
  int d = static_cast<int>(rng.range(1, max_d));
  int m = static_cast<int>(rng.range(0, max_e));
  std::vector<Edge> edges;
  for (int e = 0; e < m; ++e) {
    Int kind = rng.below(12);
    if (allow_half && kind == 0) {
      edges.push_back(Edge::half(static_cast<int>(rng.below(n))));
    } else if (allow_loose && kind == 1) {
      edges.push_back(Edge::loose());
    } else if (kind <= 3 || n == 1) {
      edges.push_back(
          Edge::loop(static_cast<int>(rng.below(n)), random_vec(rng, d, -gain_bound, gain_bound)));
    } else {
      int a = static_cast<int>(rng.below(n));
      int b = static_cast<int>(rng.below(n - 1));
      if (b >= a) ++b;
      edges.push_back(Edge::link(a, b, random_vec(rng, d, -gain_bound, gain_bound)));
    }
  }
  return GainGraph(d, n, std::move(edges));
}

WeightedGainGraph random_vec_weighted(Rng& rng, const GainGraph& g, Semigroup sg) {
  std::vector<Weight> weights;
  for (int v = 0; v < g.n; ++v) {
    Vec w = random_vec(rng, g.d, -3, 3);
    weights.push_back(sg == Semigroup::MaxZd ? Weight::max_zd(std::move(w))
                                             : Weight::sum_zd(std::move(w)));
  }
  return WeightedGainGraph(g, sg, std::move(weights));
}

WeightedGainGraph random_list_weighted(Rng& rng, const GainGraph& g, int max_list_size) {
  std::vector<Weight> weights;
  for (int v = 0; v < g.n; ++v) {
    int size = static_cast<int>(rng.range(1, max_list_size));
    std::vector<Vec> elems;
    for (int i = 0; i < size; ++i) elems.push_back(random_vec(rng, g.d, -2, 3));
    weights.push_back(Weight::finite_list(ColorSet::finite(std::move(elems))));
  }
  return WeightedGainGraph(g, Semigroup::FiniteList, std::move(weights));
}

WeightedGainGraph random_cone_weighted(Rng& rng, const GainGraph& g, int max_exclusions) {
  std::vector<Weight> weights;
  for (int v = 0; v < g.n; ++v) {
    Vec apex = random_vec(rng, g.d, -2, 2);
    int count = static_cast<int>(rng.range(0, max_exclusions));
    std::vector<Vec> excl;
    for (int i = 0; i < count; ++i) excl.push_back(apex + random_vec(rng, g.d, 0, 3));
    weights.push_back(Weight::cone_minus_finite(ColorSet::cone(std::move(apex), std::move(excl))));
  }
  return WeightedGainGraph(g, Semigroup::ConeMinusFinite, std::move(weights));
}

AffinographicArrangement random_arrangement(Rng& rng, int max_n, int max_planes, Int shift_bound,
                                            int d) {
  AffinographicArrangement arr;
  arr.n = static_cast<int>(rng.range(1, max_n));
  arr.d = d;
  int m = static_cast<int>(rng.range(0, max_planes));
  for (int e = 0; e < m; ++e) {
    Hyperplane h;
    h.i = static_cast<int>(rng.below(arr.n));
    h.j = static_cast<int>(rng.below(arr.n));
    h.a = random_vec(rng, d, -shift_bound, shift_bound);
    if (h.i == h.j && h.a == Vec::zero(d)) h.a[0] = 1;
    arr.planes.push_back(std::move(h));
  }
  return arr;
}

EdgeOrdering random_ordering(Rng& rng, int m) {
  EdgeOrdering o = EdgeOrdering::identity(m);
  for (int i = m - 1; i > 0; --i)
    std::swap(o.order[static_cast<size_t>(i)], o.order[static_cast<size_t>(rng.below(i + 1))]);
  return o;
}

bool VerifyReport::ok() const { return total_failures() == 0; }

int VerifyReport::total_checks() const {
  int t = 0;
  for (const auto& s : suites) t += s.checks;
  return t;
}

int VerifyReport::total_failures() const {
  int t = 0;
  for (const auto& s : suites) t += s.failures;
  return t;
}

namespace {

// New index of edge e after the edges of `removed` are deleted.
int remap_edge(int e, EdgeSet removed) {
  return e - popcount(removed & (edge_bit(e) - 1));
}

EdgeSet remap_set(EdgeSet s, EdgeSet removed) {
  EdgeSet out = 0;
  for (int e : edge_list(s)) out |= edge_bit(remap_edge(e, removed));
  return out;
}

std::vector<EdgeSet> balanced_subsets(const GainGraph& g) {
  std::vector<EdgeSet> out;
  for (EdgeSet s = 0; s < (EdgeSet{1} << g.edge_count()); ++s)
    if (is_balanced(g, s)) out.push_back(s);
  return out;
}

std::vector<EdgeSet> balanced_independent_sets(const GainGraph& g) {
  LiftRankOracle oracle(g);
  std::vector<EdgeSet> out;
  for (EdgeSet s = 0; s < (EdgeSet{1} << g.edge_count()); ++s)
    if (is_balanced(g, s) && oracle.independent(s)) out.push_back(s);
  return out;
}

Weight random_weight(Rng& rng, Semigroup sg, int d) {
  switch (sg) {
    case Semigroup::MaxZd:
      return Weight::max_zd(random_vec(rng, d, -4, 4));
    case Semigroup::SumZd:
      return Weight::sum_zd(random_vec(rng, d, -4, 4));
    case Semigroup::FiniteList: {
      std::vector<Vec> elems;
      for (Int i = rng.range(0, 3); i > 0; --i) elems.push_back(random_vec(rng, d, -3, 3));
      return Weight::finite_list(ColorSet::finite(std::move(elems)));
    }
    case Semigroup::ConeMinusFinite: {
      Vec apex = random_vec(rng, d, -3, 3);
      std::vector<Vec> excl;
      for (Int i = rng.range(0, 2); i > 0; --i) excl.push_back(apex + random_vec(rng, d, 0, 2));
      return Weight::cone_minus_finite(ColorSet::cone(std::move(apex), std::move(excl)));
    }
    case Semigroup::Pair: {
      ColorSet list;
      if (rng.coin()) {
        std::vector<Vec> elems;
        for (Int i = rng.range(0, 3); i > 0; --i) elems.push_back(random_vec(rng, d, -3, 3));
        list = ColorSet::finite(std::move(elems));
      } else {
        Vec apex = random_vec(rng, d, -3, 3);
        list = ColorSet::cone(std::move(apex));
      }
      ColorSet filter;
      Int pick = rng.below(3);
      if (pick == 0) {
        filter = ColorSet::all();
      } else if (pick == 1) {
        filter = ColorSet::ideal(random_vec(rng, d, -1, 4));
      } else {
        std::vector<Vec> elems;
        for (Int i = rng.range(0, 4); i > 0; --i) elems.push_back(random_vec(rng, d, -3, 3));
        filter = ColorSet::finite(std::move(elems));
      }
      return Weight::pair(std::move(list), std::move(filter));
    }
  }
  throw semantic_error("unknown semigroup");
}

ColorFilter random_filter(Rng& rng, int n, int d) {
  ColorFilter filter;
  for (int v = 0; v < n; ++v) {
    Int pick = rng.below(3);
    if (pick == 0) {
      filter.push_back(ColorSet::all());
    } else if (pick == 1) {
      filter.push_back(ColorSet::ideal(random_vec(rng, d, 0, 4)));
    } else {
      std::vector<Vec> elems;
      for (Int i = rng.range(1, 5); i > 0; --i) elems.push_back(random_vec(rng, d, -2, 4));
      filter.push_back(ColorSet::finite(std::move(elems)));
    }
  }
  return filter;
}

}  // namespace

SuiteResult verify_semigroup_laws(const VerifyOptions& opt) {
  SuiteResult res{"semigroup-laws"};
  Rng rng(opt.seed ^ 0x5e71);
  for (Semigroup sg : {Semigroup::MaxZd, Semigroup::SumZd, Semigroup::FiniteList,
                       Semigroup::ConeMinusFinite, Semigroup::Pair}) {
    for (int round = 0; round < 60; ++round) {
      int d = static_cast<int>(rng.range(1, opt.max_d));
      Weight a = random_weight(rng, sg, d);
      Weight b = random_weight(rng, sg, d);
      Weight c = random_weight(rng, sg, d);
      Vec g1 = random_vec(rng, d, -3, 3);
      Vec g2 = random_vec(rng, d, -3, 3);
      res.check(weight_add(a, b) == weight_add(b, a), "add commutativity");
      res.check(weight_add(weight_add(a, b), c) == weight_add(a, weight_add(b, c)),
                "add associativity");
      res.check(weight_act(weight_add(a, b), g1) == weight_add(weight_act(a, g1), weight_act(b, g1)),
                "action distributes over add");
      res.check(weight_act(weight_act(a, g1), g2) == weight_act(a, g1 + g2),
                "action composes additively");
      res.check(weight_act(a, Vec::zero(d)) == a, "zero acts as identity");
    }
  }
  // Set-weight intersections agree with pointwise membership.
  for (int round = 0; round < 200; ++round) {
    int d = static_cast<int>(rng.range(1, opt.max_d));
    Weight a = random_weight(rng, rng.coin() ? Semigroup::ConeMinusFinite : Semigroup::FiniteList,
                             d);
    Weight b = random_weight(rng, rng.coin() ? Semigroup::ConeMinusFinite : Semigroup::FiniteList,
                             d);
    ColorSet meet_ab = intersect(a.list, b.list);
    Vec probe = random_vec(rng, d, -4, 5);
    res.check(meet_ab.contains(probe) == (a.list.contains(probe) && b.list.contains(probe)),
              "intersection membership at " + to_string(probe));
  }
  return res;
}

SuiteResult verify_top_switching(const VerifyOptions& opt) {
  SuiteResult res{"top-switching"};
  Rng rng(opt.seed ^ 0x70b5);
  for (int round = 0; round < 120; ++round) {
    GainGraph g = random_gain_graph(rng, opt.max_n, opt.max_e, opt.max_d, 2, false, false);
    auto balanced = balanced_subsets(g);
    EdgeSet s = balanced[static_cast<size_t>(rng.below(static_cast<Int>(balanced.size())))];
    SwitchingFunction eta = top_switching(g, s);
    GainGraph switched = switch_gains(g, eta);

    for (int e : edge_list(s)) {
      const Edge& ed = switched.edges[static_cast<size_t>(e)];
      if (ed.has_gain())
        res.check(ed.gain == Vec::zero(g.d), "switched gain vanishes on the balanced set");
    }
    SpanningPartition part = components(g, s);
    for (const auto& block : part.blocks) {
      Vec m = eta[static_cast<size_t>(block.front())];
      for (int v : block) m = meet(m, eta[static_cast<size_t>(v)]);
      res.check(m == Vec::zero(g.d), "top switching has zero meet on each block");
    }
    // Uniqueness: shifting by nonzero block constants breaks the meet rule.
    SwitchingFunction shifted = eta;
    bool nonzero_shift = false;
    std::vector<Vec> offsets;
    for (size_t b = 0; b < part.blocks.size(); ++b) {
      Vec off = random_vec(rng, g.d, 0, 2);
      nonzero_shift |= off != Vec::zero(g.d);
      offsets.push_back(off);
    }
    for (int v = 0; v < g.n; ++v)
      shifted[static_cast<size_t>(v)] =
          shifted[static_cast<size_t>(v)] +
          offsets[static_cast<size_t>(part.block_of[static_cast<size_t>(v)])];
    GainGraph reswitched = switch_gains(g, shifted);
    bool kills = true;
    for (int e : edge_list(s)) {
      const Edge& ed = reswitched.edges[static_cast<size_t>(e)];
      if (ed.has_gain() && ed.gain != Vec::zero(g.d)) kills = false;
    }
    res.check(kills, "block-constant shifts still kill the balanced set");
    if (nonzero_shift) {
      bool meets_zero = true;
      for (const auto& block : part.blocks) {
        Vec m = shifted[static_cast<size_t>(block.front())];
        for (int v : block) m = meet(m, shifted[static_cast<size_t>(v)]);
        if (m != Vec::zero(g.d)) meets_zero = false;
      }
      res.check(!meets_zero, "only the top switching function has zero block meets");
    }
  }
  return res;
}

SuiteResult verify_repeated_ops(const VerifyOptions& opt) {
  SuiteResult res{"repeated-ops"};
  Rng rng(opt.seed ^ 0x4e05);
  for (int round = 0; round < 150; ++round) {
    GainGraph g = random_gain_graph(rng, 5, 6, opt.max_d, 2, round % 7 == 3, round % 11 == 5);
    Semigroup sg = rng.coin() ? Semigroup::MaxZd : Semigroup::SumZd;
    WeightedGainGraph wg = random_vec_weighted(rng, g, sg);
    const int m = g.edge_count();
    EdgeSet q = 0, r = 0;
    for (int e = 0; e < m; ++e) {
      Int pick = rng.below(3);
      if (pick == 0) q |= edge_bit(e);
      if (pick == 1) r |= edge_bit(e);
    }
    EdgeSet s = q | r;

    WeightedGainGraph via_q = contract(contract(wg, q), remap_set(r, q));
    WeightedGainGraph direct = contract(wg, s);
    res.check(via_q == direct, "contract by Q then R equals contract by their union");

    WeightedGainGraph del_after = delete_edges(contract(wg, q), remap_set(r, q));
    WeightedGainGraph con_after = contract(delete_edges(wg, r), remap_set(q, r));
    res.check(del_after == con_after, "deletion and contraction of disjoint sets commute");

    res.check(delete_edges(delete_edges(wg, q), remap_set(r, q)) == delete_edges(wg, s),
              "repeated deletion equals deletion of the union");
  }
  return res;
}

namespace {

// Independent exponent route for the single-u dichromatic specializations:
// v^{|S| - (n - b(S))} u^{b(S)}, using only component/balance counting.
std::map<std::pair<int, int>, Int> single_u_by_rank(const GainGraph& g, bool balanced_only) {
  std::map<std::pair<int, int>, Int> acc;
  for (EdgeSet s = 0; s < (EdgeSet{1} << g.edge_count()); ++s) {
    if (balanced_only && !is_balanced(g, s)) continue;
    SpanningPartition part = components(g, s);
    int b = part.balanced_count();
    int vexp = popcount(s) - (g.n - b);
    ++acc[{b, vexp}];
  }
  return acc;
}

std::map<std::pair<int, int>, Int> single_u_from_poly(const QPolynomial& q, bool z_zero) {
  std::map<std::pair<int, int>, Int> acc;
  for (const auto& [mono, coef] : q.terms) {
    if (z_zero && mono.zexp != 0) continue;
    auto& slot = acc[{static_cast<int>(mono.ukeys.size()), mono.vexp}];
    slot += coef;
    if (!slot) acc.erase({static_cast<int>(mono.ukeys.size()), mono.vexp});
  }
  return acc;
}

WeightedGainGraph permuted_isomorph(Rng& rng, const WeightedGainGraph& wg) {
  const GainGraph& g = wg.graph;
  std::vector<int> perm(static_cast<size_t>(g.n));
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = g.n - 1; i > 0; --i)
    std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(rng.below(i + 1))]);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges) {
    Edge ne = e;
    if (ne.tail >= 0) ne.tail = perm[static_cast<size_t>(ne.tail)];
    if (ne.head >= 0) ne.head = perm[static_cast<size_t>(ne.head)];
    if (ne.kind == EdgeKind::Link && rng.coin()) {
      std::swap(ne.tail, ne.head);
      ne.gain = -ne.gain;
    }
    edges.push_back(std::move(ne));
  }
  std::vector<Weight> weights(static_cast<size_t>(g.n), Weight{});
  for (int v = 0; v < g.n; ++v)
    weights[static_cast<size_t>(perm[static_cast<size_t>(v)])] = wg.weights[static_cast<size_t>(v)];
  return WeightedGainGraph(GainGraph(g.d, g.n, std::move(edges)), wg.sg, std::move(weights));
}

}  // namespace

SuiteResult verify_qpoly_expansions(const VerifyOptions& opt, int graphs) {
  SuiteResult res{"qpoly-expansions"};
  Rng rng(opt.seed ^ 0x90'1f);
  for (int round = 0; round < graphs; ++round) {
    GainGraph g = random_gain_graph(rng, opt.max_n, opt.max_e, opt.max_d, 2, round % 9 == 4,
                                    round % 13 == 6);
    Semigroup sg = rng.coin() ? Semigroup::MaxZd : Semigroup::SumZd;
    WeightedGainGraph wg = random_vec_weighted(rng, g, sg);
    QPolynomial subset = q_total_subset(wg);
    res.check(subset == q_total_delcon(wg), "subset expansion equals deletion-contraction");

    res.check(single_u_from_poly(subset, true) == single_u_by_rank(g, true),
              "single-u balanced specialization matches the rank route");
    res.check(single_u_from_poly(subset, false) == single_u_by_rank(g, false),
              "single-u full specialization matches the rank route");

    res.check(q_total_subset(permuted_isomorph(rng, wg)) == subset,
              "polynomial is isomorphism invariant");

    if (round % 4 == 0) {
      WeightedGainGraph other =
          random_vec_weighted(rng, random_gain_graph(rng, 3, 3, g.d, 2, false, false), sg);
      // Force the same dimension for the union.
      if (other.graph.d == g.d) {
        QPolynomial prod = subset * q_total_subset(other);
        res.check(q_total_subset(disjoint_union(wg, other)) == prod,
                  "polynomial is multiplicative over disjoint unions");
      }
    }
    // Balanced loop / loose edge factorization.
    {
      std::vector<Edge> edges = g.edges;
      if (rng.coin() || g.n == 0)
        edges.push_back(Edge::loose());
      else
        edges.push_back(Edge::loop(static_cast<int>(rng.below(g.n)), Vec::zero(g.d)));
      WeightedGainGraph extended(GainGraph(g.d, g.n, std::move(edges)), sg, wg.weights);
      QPolynomial vplus1 = QPolynomial::one() + QPolynomial::vz(1, 0);
      res.check(q_total_subset(extended) == subset * vplus1,
                "balanced loops and loose edges contribute a (v+1) factor");
    }
  }
  // Unitarity on the empty graph.
  WeightedGainGraph empty(GainGraph(1, 0, {}), Semigroup::MaxZd, {});
  res.check(q_total_subset(empty) == QPolynomial::one(), "empty graph has polynomial 1");
  return res;
}

SuiteResult verify_forest_expansion(const VerifyOptions& opt, int graphs, int orderings) {
  SuiteResult res{"forest-expansion"};
  Rng rng(opt.seed ^ 0xf0e5);
  for (int round = 0; round < graphs; ++round) {
    // Loose edges are rank-zero and always externally active, so they are
    // covered by the expansion as well.
    GainGraph g = random_gain_graph(rng, opt.max_n, opt.max_e, opt.max_d, 2, false,
                                    round % 10 == 7);
    Semigroup sg = rng.coin() ? Semigroup::MaxZd : Semigroup::SumZd;
    WeightedGainGraph wg = random_vec_weighted(rng, g, sg);
    QPolynomial expected = shift_v(z_zero_part(q_total_subset(wg)), -1);
    for (int i = 0; i < orderings; ++i) {
      EdgeOrdering o = random_ordering(rng, g.edge_count());
      res.check(forest_expansion(wg, o) == expected,
                "forest expansion equals Q(u, y-1, 0) for every ordering");
    }
  }
  return res;
}

SuiteResult verify_lift_rank_axioms(const VerifyOptions& opt) {
  SuiteResult res{"lift-rank-axioms"};
  Rng rng(opt.seed ^ 0x11f7);
  for (int round = 0; round < 60; ++round) {
    GainGraph g = random_gain_graph(rng, opt.max_n, opt.max_e, opt.max_d, 2, round % 5 == 2,
                                    round % 7 == 3);
    LiftRankOracle oracle(g);
    EdgeSet ground = oracle.ground();
    res.check(oracle.rank(0) == 0, "rank of the empty set is zero");
    for (EdgeSet s = 0; s <= ground; ++s) {
      int rs = oracle.rank(s);
      for (int e = 0; e <= oracle.e0(); ++e) {
        if (edge_in(s, e)) continue;
        int re = oracle.rank(s | edge_bit(e));
        if (re < rs || re > rs + 1) {
          res.fail("unit rank increase");
          break;
        }
      }
    }
    res.pass();
    for (int trial = 0; trial < 200; ++trial) {
      EdgeSet a = static_cast<EdgeSet>(rng.eng()) & ground;
      EdgeSet b = static_cast<EdgeSet>(rng.eng()) & ground;
      bool submodular =
          oracle.rank(a | b) + oracle.rank(a & b) <= oracle.rank(a) + oracle.rank(b);
      bool monotone = (a & b) != a || oracle.rank(a) <= oracle.rank(b);
      if (!submodular) res.fail("rank submodularity");
      if (!monotone) res.fail("rank monotonicity");
    }
    res.pass();
  }
  return res;
}

SuiteResult verify_basis_intervals(const VerifyOptions& opt) {
  SuiteResult res{"basis-intervals"};
  Rng rng(opt.seed ^ 0xba51);
  for (int round = 0; round < 60; ++round) {
    GainGraph g = random_gain_graph(rng, opt.max_n, opt.max_e, opt.max_d, 2, round % 6 == 1,
                                    round % 8 == 2);
    LiftRankOracle oracle(g);
    EdgeOrdering o = random_ordering(rng, g.edge_count());
    EdgeSet ground = oracle.ground();
    auto balanced0 = [&](EdgeSet s) {
      return !edge_in(s, oracle.e0()) && is_balanced(g, s & full_edge_set(g.edge_count()));
    };
    bool interval_ok = true, balance_ok = true, partition_ok = true;
    for (EdgeSet s = 0; s <= ground; ++s) {
      EdgeSet f = minimal_basis(g, s, o);
      ActivityReport rep = activities_m0(g, f, o);
      if ((f & s) != f || (s & ~(f | rep.EA)) != 0) interval_ok = false;
      if (balanced0(s) != balanced0(f)) balance_ok = false;
    }
    for (EdgeSet f = 0; f <= ground; ++f) {
      if (!oracle.independent(f)) continue;
      ActivityReport rep = activities_m0(g, f, o);
      EdgeSet ea = rep.EA;
      // Every set in [F, F + EA(F)] must have minimal basis F.
      for (EdgeSet sub = ea;; sub = (sub - 1) & ea) {
        if (minimal_basis(g, f | sub, o) != f) partition_ok = false;
        if (sub == 0) break;
      }
    }
    res.check(interval_ok, "minimal basis interval containment");
    res.check(balance_ok, "balance is constant on basis intervals");
    res.check(partition_ok, "basis intervals partition the power set");
  }
  return res;
}

namespace {

// All circuits of the lift matroid restricted to the real edges that are
// balanced (the balanced circles plus single-edge rank-zero circuits).
std::vector<EdgeSet> balanced_circuits(const GainGraph& g) {
  LiftRankOracle oracle(g);
  std::vector<EdgeSet> out;
  for (EdgeSet c = 1; c < (EdgeSet{1} << g.edge_count()); ++c) {
    if (!is_balanced(g, c) || oracle.independent(c)) continue;
    bool minimal = true;
    for (int e : edge_list(c))
      if (!oracle.independent(c & ~edge_bit(e))) minimal = false;
    if (minimal) out.push_back(c);
  }
  return out;
}

int largest_in(EdgeSet s, const EdgeOrdering& o) {
  int best = -1;
  for (int e : edge_list(s))
    if (best < 0 || o.less(best, e)) best = e;
  return best;
}

}  // namespace

SuiteResult verify_broken_circuits(const VerifyOptions& opt) {
  SuiteResult res{"broken-circuits"};
  Rng rng(opt.seed ^ 0xbbc1);
  for (int round = 0; round < 60; ++round) {
    GainGraph g = random_gain_graph(rng, opt.max_n, opt.max_e, opt.max_d, 2, false, false);
    EdgeOrdering o = random_ordering(rng, g.edge_count());
    auto circuits = balanced_circuits(g);
    for (EdgeSet f : balanced_independent_sets(g)) {
      ActivityReport rep = activities_m0(g, f, o);
      for (EdgeSet c : circuits) {
        EdgeSet broken = c & ~edge_bit(largest_in(c, o));
        if ((broken & f) == broken)
          res.check((broken & ~rep.II) == 0, "broken balanced circuits lie inside II(F)");
      }
    }
    // II monotonicity on nested independent sets of the full lift matroid.
    LiftRankOracle oracle(g);
    EdgeSet ground = oracle.ground();
    for (int trial = 0; trial < 40; ++trial) {
      EdgeSet fp = static_cast<EdgeSet>(rng.eng()) & ground;
      if (!oracle.independent(fp)) continue;
      EdgeSet f = fp;
      for (int e : edge_list(fp))
        if (rng.coin()) f &= ~edge_bit(e);
      ActivityReport small = activities_m0(g, f, o);
      ActivityReport big = activities_m0(g, fp, o);
      res.check((small.II & ~big.II) == 0, "II is monotone under set extension");
    }
  }
  return res;
}

SuiteResult verify_reverse_greedy(const VerifyOptions& opt) {
  SuiteResult res{"reverse-greedy"};
  Rng rng(opt.seed ^ 0x96ed);
  for (int round = 0; round < 80; ++round) {
    GainGraph g = random_gain_graph(rng, opt.max_n, opt.max_e, opt.max_d, 2, false, false);
    LiftRankOracle oracle(g);
    EdgeOrdering o = random_ordering(rng, g.edge_count());
    for (EdgeSet f : balanced_independent_sets(g)) {
      EdgeSet t = reverse_greedy_extension(g, f, o);
      res.check(reverse_greedy_extension(g, t, o) == t, "T is idempotent");
      bool semibasis = true;
      for (int e = 0; e < g.edge_count(); ++e) {
        if (edge_in(t, e)) continue;
        EdgeSet cand = t | edge_bit(e);
        if (oracle.independent(cand) && is_balanced(g, cand)) semibasis = false;
      }
      res.check(semibasis, "T(F) is a semibasis");
      ActivityReport rt = activities_m0(g, t, o);
      res.check((rt.II & ~f) == 0, "II(T(F)) lies inside F");
      res.check(((t & ~f) & ~rt.IA) == 0, "T(F) minus F is internally active");
      ActivityReport rf = activities_m0(g, f, o);
      res.check((rf.II & ~rt.II) == 0, "II(F) lies inside II(T(F))");
      res.check(rf.EA == rt.EA, "external activity is preserved by T");
      ActivityReport rii = activities_m0(g, rt.II, o);
      res.check(rii.EA == rt.EA, "external activity of II(T(F)) matches");
    }
  }
  return res;
}

SuiteResult verify_external_activity(const VerifyOptions& opt) {
  SuiteResult res{"external-activity"};
  Rng rng(opt.seed ^ 0xea17);
  int rounds = 0;
  while (rounds < 60) {
    GainGraph g = random_gain_graph(rng, opt.max_n, opt.max_e, opt.max_d, 2, false, false);
    // Only links and loops; skip graphs with balanced digons.
    bool digon = false;
    for (int e = 0; e < g.edge_count(); ++e) {
      for (int f = e + 1; f < g.edge_count(); ++f) {
        const Edge &a = g.edges[static_cast<size_t>(e)], &b = g.edges[static_cast<size_t>(f)];
        if (a.kind != EdgeKind::Link || b.kind != EdgeKind::Link) continue;
        if (a.tail == b.tail && a.head == b.head && a.gain == b.gain) digon = true;
        if (a.tail == b.head && a.head == b.tail && a.gain == -b.gain) digon = true;
      }
    }
    if (digon) continue;
    ++rounds;
    EdgeOrdering o = random_ordering(rng, g.edge_count());
    std::set<EdgeSet> broken;
    for (EdgeSet c : balanced_circuits(g)) broken.insert(c & ~edge_bit(largest_in(c, o)));
    LiftRankOracle oracle(g);
    for (EdgeSet f : balanced_independent_sets(g)) {
      ActivityReport rep = activities_m0(g, f, o);
      EdgeSet clos = oracle.closure0(f);
      for (int e : edge_list(clos & ~f)) {
        EdgeSet c = fundamental_circuit(g, f, e);
        bool is_broken = broken.count(c & ~edge_bit(e)) > 0;
        res.check(edge_in(rep.EA, e) == is_broken,
                  "digon-free external activity matches broken balanced circles");
      }
    }
  }
  return res;
}

SuiteResult verify_improper_sets(const VerifyOptions& opt) {
  SuiteResult res{"improper-sets"};
  Rng rng(opt.seed ^ 0x1a9c);
  for (int round = 0; round < 200; ++round) {
    GainGraph g = random_gain_graph(rng, opt.max_n, opt.max_e, opt.max_d, 2, false, false);
    Coloration x;
    for (int v = 0; v < g.n; ++v) x.push_back(random_vec(rng, g.d, -2, 2));
    EdgeSet improper = improper_set(g, x);
    res.check(is_balanced(g, improper), "improper edge sets are balanced");
    res.check(balanced_closure(g, improper) == improper, "improper edge sets are closed");
    SpanningPartition before = components(g, improper);
    SpanningPartition after = components(g, balanced_closure(g, improper));
    res.check(before.block_of == after.block_of, "closure adds no connections");
  }
  return res;
}

SuiteResult verify_coloring_counts(const VerifyOptions& opt, int instances) {
  SuiteResult res{"coloring-counts"};
  Rng rng(opt.seed ^ 0xc010);
  for (int round = 0; round < instances; ++round) {
    GainGraph g = random_gain_graph(rng, opt.max_n, opt.max_e, opt.max_d, 2, false,
                                    round % 17 == 5);
    WeightedGainGraph wg = random_list_weighted(rng, g, 4);
    Int brute = count_proper_bruteforce(wg, no_filter(g.n));
    Int mobius = count_proper_mobius(wg);  // checks both forms internally
    Int from_q = chi_from_q(wg, no_filter(g.n));
    res.check(brute == mobius, "brute force equals the Mobius count");
    res.check(brute == from_q, "brute force equals the polynomial evaluation");

    ColorFilter filter = random_filter(rng, g.n, g.d);
    Int brute_f = count_proper_bruteforce(wg, filter);
    res.check(brute_f == list_chromatic(wg, filter), "filtered brute force equals list chromatic");
    res.check(brute_f == chi_from_q(wg, filter), "filtered brute force equals chi from Q");
  }
  // Cone weights with ideal filters exercise the infinite-list route.
  for (int round = 0; round < instances / 4; ++round) {
    GainGraph g = random_gain_graph(rng, 3, 4, opt.max_d, 2, false, false);
    WeightedGainGraph wg = random_cone_weighted(rng, g, 2);
    ColorFilter filter;
    for (int v = 0; v < g.n; ++v)
      filter.push_back(ColorSet::ideal(wg.weights[static_cast<size_t>(v)].list.bound +
                                       random_vec(rng, g.d, 0, 4)));
    Int brute = count_proper_bruteforce(wg, filter);
    res.check(brute == list_chromatic(wg, filter), "cone-weight counts match brute force");
    res.check(brute == chi_from_q(wg, filter), "cone-weight chi from Q matches brute force");
  }
  return res;
}

SuiteResult verify_contracted_proper(const VerifyOptions& opt, int instances) {
  SuiteResult res{"contracted-proper"};
  Rng rng(opt.seed ^ 0xc0f7);
  for (int round = 0; round < instances; ++round) {
    GainGraph g = random_gain_graph(rng, opt.max_n, opt.max_e, opt.max_d, 2, false,
                                    round % 9 == 4);
    WeightedGainGraph wg = random_list_weighted(rng, g, 3);
    for (EdgeSet b : balanced_subsets(g)) {
      Int brute = count_improper_exactly_bruteforce(wg, b);
      Int via_contraction = count_with_improper_exactly(wg, b);
      res.check(brute == via_contraction,
                "improper-exactly count equals the contracted proper count");
    }
  }
  return res;
}

SuiteResult verify_signed_subtractivity(const VerifyOptions& opt) {
  SuiteResult res{"signed-subtractivity"};
  Rng rng(opt.seed ^ 0x5ab7);
  for (int round = 0; round < 100; ++round) {
    GainGraph g = random_gain_graph(rng, opt.max_n, opt.max_e, opt.max_d, 2, false, false);
    WeightedGainGraph wg = rng.coin() ? random_list_weighted(rng, g, 3)
                                      : random_cone_weighted(rng, g, 2);
    ColorFilter filter;
    for (int v = 0; v < g.n; ++v)
      filter.push_back(ColorSet::ideal(random_vec(rng, g.d, 0, 4)));
    if (wg.sg == Semigroup::ConeMinusFinite) {
      filter.clear();
      for (int v = 0; v < g.n; ++v)
        filter.push_back(ColorSet::ideal(wg.weights[static_cast<size_t>(v)].list.bound +
                                         random_vec(rng, g.d, 0, 4)));
    }
    WeightedGainGraph pg = make_pair_weighted(wg, filter);
    Int whole = list_chromatic(wg, filter);
    res.check(whole == list_chromatic(pg, no_filter(g.n)),
              "pair-weighted count matches the filtered count");
    for (int e = 0; e < g.edge_count(); ++e) {
      if (g.edges[static_cast<size_t>(e)].kind != EdgeKind::Link) continue;
      Int deleted = list_chromatic(delete_edges(pg, edge_bit(e)), no_filter(g.n));
      WeightedGainGraph contracted = contract(pg, edge_bit(e));
      Int merged = list_chromatic(contracted, no_filter(contracted.graph.n));
      res.check(whole == deleted - merged,
                "list chromatic functions satisfy signed deletion-contraction");
    }
  }
  return res;
}

SuiteResult verify_switching_equivariance(const VerifyOptions& opt) {
  SuiteResult res{"switching-equivariance"};
  Rng rng(opt.seed ^ 0x5318);
  for (int round = 0; round < 100; ++round) {
    GainGraph g = random_gain_graph(rng, opt.max_n, opt.max_e, opt.max_d, 2, false, false);
    WeightedGainGraph wg = random_list_weighted(rng, g, 3);
    ColorFilter filter = random_filter(rng, g.n, g.d);
    SwitchingFunction eta;
    for (int v = 0; v < g.n; ++v) eta.push_back(random_vec(rng, g.d, -2, 2));
    WeightedGainGraph switched = switch_graph(wg, eta);
    ColorFilter switched_filter;
    for (int v = 0; v < g.n; ++v)
      switched_filter.push_back(filter[static_cast<size_t>(v)].translated(eta[static_cast<size_t>(v)]));
    res.check(list_chromatic(wg, filter) == list_chromatic(switched, switched_filter),
              "switching with translated filters preserves counts");
    res.check(count_proper_bruteforce(wg, filter) ==
                  count_proper_bruteforce(switched, switched_filter),
              "switching equivariance holds for the brute-force oracle");
  }
  return res;
}

SuiteResult verify_orthotope_oracles(const VerifyOptions& opt, int instances) {
  SuiteResult res{"orthotope-oracles"};
  Rng rng(opt.seed ^ 0x0f70);
  for (int round = 0; round < instances; ++round) {
    AffinographicArrangement arr = random_arrangement(rng, 4, 5, 3, 1);
    std::vector<Int> m;
    for (int i = 0; i < arr.n; ++i) m.push_back(rng.range(0, 6));
    res.check(count_orthotope(arr, m) == brute_count_orthotope(arr, m),
              "orthotope count equals brute-force enumeration");

    std::vector<std::vector<Int>> lists;
    for (int i = 0; i < arr.n; ++i) {
      std::set<Int> l;
      for (Int c = rng.range(1, 4); c > 0; --c) l.insert(rng.range(-2, 6));
      lists.emplace_back(l.begin(), l.end());
    }
    res.check(count_lists(arr, lists) == brute_count_lists(arr, lists),
              "list count equals brute-force enumeration");

    std::vector<ColorSet> bounded;
    for (int i = 0; i < arr.n; ++i) {
      if (rng.coin()) {
        bounded.push_back(ColorSet::cone(Vec({0})));
      } else {
        std::vector<Vec> elems;
        for (Int c = rng.range(1, 5); c > 0; --c) elems.push_back(Vec({rng.range(0, 6)}));
        bounded.push_back(ColorSet::finite(std::move(elems)));
      }
    }
    res.check(count_lists_bounded(arr, bounded, m) == brute_count_lists_bounded(arr, bounded, m),
              "bounded list count equals brute-force enumeration");
  }
  for (int round = 0; round < instances; ++round) {
    int d = static_cast<int>(rng.range(1, 2));
    AffinographicArrangement arr = random_arrangement(rng, 3, 4, 2, d);
    std::vector<Vec> H, M;
    for (int i = 0; i < arr.n; ++i) {
      Vec h = random_vec(rng, d, -2, 2);
      M.push_back(h + random_vec(rng, d, 0, 4));
      H.push_back(std::move(h));
    }
    res.check(count_matrix(arr, H, M) == brute_count_matrix(arr, H, M),
              "matrix count equals brute-force enumeration");
  }

  // Common-bound and gain-free chromatic evaluators against brute force.
  int made = 0;
  while (made < instances / 2) {
    GainGraph g = random_gain_graph(rng, 3, 4, opt.max_d, 2, false, false);
    bool ok = true;
    for (const Edge& e : g.edges)
      if (e.kind != EdgeKind::Link && !(e.kind == EdgeKind::Loop && e.gain != Vec::zero(g.d)))
        ok = false;
    if (!ok || g.n == 0) continue;
    ++made;
    WeightedGainGraph wg = random_cone_weighted(rng, g, 2);
    Vec base = chi_common_bound(wg, Vec::zero(g.d)).threshold;
    for (Int off = 0; off <= 2; ++off) {
      Vec mprime = base + Vec::constant(g.d, off);
      CommonBoundEvaluation ev = chi_common_bound(wg, mprime);
      ColorFilter filter(static_cast<size_t>(g.n), ColorSet::ideal(mprime));
      res.check(ev.value == count_proper_bruteforce(wg, filter),
                "common-bound value equals brute force above its threshold");
      res.check(ev.poly.eval(mprime) == ev.value, "common-bound polynomial evaluates to p(m')");
    }
    std::vector<int> top(static_cast<size_t>(g.d), g.n);
    CommonBoundEvaluation at_base = chi_common_bound(wg, base);
    auto it = at_base.poly.terms.find(top);
    res.check(it != at_base.poly.terms.end() && it->second == 1,
              "common-bound polynomial is monic of degree n per variable");
  }
  made = 0;
  while (made < instances / 2) {
    int n = static_cast<int>(rng.range(1, 3));
    int d = static_cast<int>(rng.range(1, opt.max_d));
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng.coin()) edges.push_back(Edge::link(i, j, Vec::zero(d)));
    GainGraph g(d, n, std::move(edges));
    ++made;
    WeightedGainGraph wg = random_cone_weighted(rng, g, 2);
    std::vector<Vec> m(static_cast<size_t>(n));
    PiecewiseEvaluation probe = chi_graph_no_gains(wg, std::vector<Vec>(
                                     static_cast<size_t>(n), Vec::constant(d, 40)));
    for (int i = 0; i < n; ++i)
      m[static_cast<size_t>(i)] = probe.threshold[static_cast<size_t>(i)] +
                                  random_vec(rng, d, 0, 3);
    PiecewiseEvaluation ev = chi_graph_no_gains(wg, m);
    ColorFilter filter;
    for (int i = 0; i < n; ++i) filter.push_back(ColorSet::ideal(m[static_cast<size_t>(i)]));
    res.check(ev.above_threshold, "gain-free evaluation sits above its threshold");
    res.check(ev.value == count_proper_bruteforce(wg, filter),
              "gain-free chromatic value equals brute force above the threshold");
  }
  return res;
}

SuiteResult verify_piecewise_orthotope(const VerifyOptions& opt, int instances) {
  SuiteResult res{"piecewise-orthotope"};
  Rng rng(opt.seed ^ 0x91ec);
  int made = 0;
  while (made < instances) {
    GainGraph g = random_gain_graph(rng, 3, 4, opt.max_d, 2, false, false);
    bool ok = true;
    for (const Edge& e : g.edges)
      if (e.kind == EdgeKind::Loose || e.kind == EdgeKind::Half ||
          (e.kind == EdgeKind::Loop && e.gain == Vec::zero(g.d)))
        ok = false;
    if (!ok || g.n == 0) continue;
    ++made;
    WeightedGainGraph wg = random_cone_weighted(rng, g, 2);
    std::vector<Vec> threshold = piecewise_threshold(wg);

    // Exact agreement with the chromatic count on [T, T+3]^{nd}.
    const int nd = g.n * g.d;
    std::vector<int> offsets(static_cast<size_t>(nd), 0);
    bool agree = true;
    while (true) {
      std::vector<Vec> m = threshold;
      for (int i = 0; i < g.n; ++i)
        for (int k = 0; k < g.d; ++k)
          m[static_cast<size_t>(i)][k] += offsets[static_cast<size_t>(i * g.d + k)];
      PiecewiseEvaluation ev = chi_piecewise(wg, m);
      ColorFilter filter;
      for (int i = 0; i < g.n; ++i) filter.push_back(ColorSet::ideal(m[static_cast<size_t>(i)]));
      if (!ev.above_threshold || ev.value != list_chromatic(wg, filter)) agree = false;
      int pos = 0;
      while (pos < nd) {
        if (++offsets[static_cast<size_t>(pos)] <= 3) break;
        offsets[static_cast<size_t>(pos)] = 0;
        ++pos;
      }
      if (pos == nd) break;
    }
    res.check(agree, "p(m) equals the list chromatic count above the threshold");

    // A base point spaced widely enough that +-2 probes stay in one chamber.
    std::vector<Vec> base = threshold;
    for (int i = 0; i < g.n; ++i)
      for (int k = 0; k < g.d; ++k)
        base[static_cast<size_t>(i)][k] += 64 * (i * g.d + k + 1);
    Int p0 = chi_piecewise(wg, base).value;
    bool second_zero = true;
    for (int i = 0; i < g.n; ++i) {
      for (int k = 0; k < g.d; ++k) {
        std::vector<Vec> m1 = base, m2 = base;
        m1[static_cast<size_t>(i)][k] += 1;
        m2[static_cast<size_t>(i)][k] += 2;
        Int p1 = chi_piecewise(wg, m1).value;
        Int p2 = chi_piecewise(wg, m2).value;
        if (p2 - 2 * p1 + p0 != 0) second_zero = false;
      }
    }
    res.check(second_zero, "single-variable second differences vanish above the threshold");

    Int mixed = 0;
    for (unsigned corner = 0; corner < (1u << nd); ++corner) {
      std::vector<Vec> m = base;
      int ones = 0;
      for (int i = 0; i < g.n; ++i)
        for (int k = 0; k < g.d; ++k)
          if ((corner >> (i * g.d + k)) & 1) {
            m[static_cast<size_t>(i)][k] += 1;
            ++ones;
          }
      Int value = chi_piecewise(wg, m).value;
      mixed += ((nd - ones) & 1) ? -value : value;
    }
    res.check(mixed == 1, "the full mixed difference is one (monic multilinear leading term)");
  }
  return res;
}

SuiteResult verify_graph_tutte_axioms(const VerifyOptions& opt) {
  SuiteResult res{"graph-tutte-axioms"};
  Rng rng(opt.seed ^ 0x6afa);
  for (int round = 0; round < 120; ++round) {
    // Gain-free weighted graphs: links and loops with zero gains.
    int n = static_cast<int>(rng.range(1, opt.max_n));
    int d = static_cast<int>(rng.range(1, opt.max_d));
    int m = static_cast<int>(rng.range(0, opt.max_e));
    std::vector<Edge> edges;
    for (int e = 0; e < m; ++e) {
      if (n > 1 && rng.below(4) != 0) {
        int a = static_cast<int>(rng.below(n));
        int b = static_cast<int>(rng.below(n - 1));
        if (b >= a) ++b;
        edges.push_back(Edge::link(a, b, Vec::zero(d)));
      } else {
        edges.push_back(Edge::loop(static_cast<int>(rng.below(n)), Vec::zero(d)));
      }
    }
    GainGraph g(d, n, std::move(edges));
    Semigroup sg = rng.coin() ? Semigroup::MaxZd : Semigroup::SumZd;
    WeightedGainGraph wg = random_vec_weighted(rng, g, sg);
    QPolynomial q = q_graph(wg);

    res.check(q == q_total_subset(wg), "gain-free polynomial matches the total polynomial");

    for (int e = 0; e < g.edge_count(); ++e) {
      const Edge& ed = g.edges[static_cast<size_t>(e)];
      if (ed.kind == EdgeKind::Link) {
        QPolynomial sum = q_graph(delete_edges(wg, edge_bit(e))) +
                          q_graph(contract(wg, edge_bit(e)));
        res.check(q == sum, "additivity under link deletion-contraction");
      } else {
        QPolynomial vplus1 = QPolynomial::one() + QPolynomial::vz(1, 0);
        res.check(q == q_graph(delete_edges(wg, edge_bit(e))) * vplus1,
                  "loops contribute a (v+1) factor");
      }
    }
    if (g.edge_count() == 0) {
      QPolynomial expected = QPolynomial::one();
      for (const Weight& w : wg.weights) expected = expected * QPolynomial::uvar(w);
      res.check(q == expected, "edgeless graphs give the product of weight variables");
    }
    if (round % 4 == 0) {
      WeightedGainGraph other = random_vec_weighted(
          rng, GainGraph(d, static_cast<int>(rng.range(1, 2)), {}), sg);
      res.check(q_graph(disjoint_union(wg, other)) == q * q_graph(other),
                "multiplicativity over disjoint unions");
    }
  }
  WeightedGainGraph empty(GainGraph(1, 0, {}), Semigroup::SumZd, {});
  res.check(q_graph(empty) == QPolynomial::one(), "unitarity on the empty graph");
  return res;
}

VerifyReport run_verify(const VerifyOptions& options) {
  VerifyReport report;
  report.suites.push_back(verify_semigroup_laws(options));
  report.suites.push_back(verify_top_switching(options));
  report.suites.push_back(verify_repeated_ops(options));
  report.suites.push_back(verify_qpoly_expansions(options));
  report.suites.push_back(verify_forest_expansion(options));
  report.suites.push_back(verify_lift_rank_axioms(options));
  report.suites.push_back(verify_basis_intervals(options));
  report.suites.push_back(verify_broken_circuits(options));
  report.suites.push_back(verify_reverse_greedy(options));
  report.suites.push_back(verify_external_activity(options));
  report.suites.push_back(verify_improper_sets(options));
  report.suites.push_back(verify_coloring_counts(options));
  report.suites.push_back(verify_contracted_proper(options));
  report.suites.push_back(verify_signed_subtractivity(options));
  report.suites.push_back(verify_switching_equivariance(options));
  report.suites.push_back(verify_orthotope_oracles(options));
  report.suites.push_back(verify_piecewise_orthotope(options));
  report.suites.push_back(verify_graph_tutte_axioms(options));
  return report;
}

std::string report_human(const VerifyReport& report) {
  std::string out;
  for (const auto& s : report.suites) {
    out += (s.failures ? "FAIL " : "ok   ") + s.name + ": " + std::to_string(s.checks) +
           " checks, " + std::to_string(s.failures) + " failures";
    if (s.failures) out += " (first: " + s.first_failure + ")";
    out += "\n";
  }
  out += std::string(report.ok() ? "PASS" : "FAIL") + ": " +
         std::to_string(report.total_checks()) + " checks, " +
         std::to_string(report.total_failures()) + " failures\n";
  return out;
}

std::string report_machine(const VerifyReport& report) {
  std::string out = "{\"suites\":[";
  for (size_t i = 0; i < report.suites.size(); ++i) {
    const auto& s = report.suites[i];
    if (i) out += ",";
    out += "{\"name\":\"" + s.name + "\",\"checks\":" + std::to_string(s.checks) +
           ",\"failures\":" + std::to_string(s.failures) + "}";
  }
  out += "],\"ok\":" + std::string(report.ok() ? "true" : "false") + "}";
  return out;
}

}  // namespace wgg
