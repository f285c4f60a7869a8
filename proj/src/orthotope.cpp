#include "orthotope.hpp"

#include <algorithm>
#include <set>

namespace wgg {

void AffinographicArrangement::validate() const {
  if (n < 0) throw semantic_error("negative coordinate count");
  if (d < 1) throw semantic_error("arrangement dimension must be >= 1");
  for (const Hyperplane& h : planes) {
    if (h.i < 0 || h.i >= n || h.j < 0 || h.j >= n)
      throw semantic_error("hyperplane index out of range");
    if (h.a.dim() != d) throw semantic_error("hyperplane shift has wrong dimension");
    if (h.i == h.j && h.a == Vec::zero(d))
      throw semantic_error("degenerate hyperplane x_i = x_i covers the whole space");
  }
}

GainGraph arrangement_to_gain_graph(const AffinographicArrangement& arr) {
  arr.validate();
  std::vector<Edge> edges;
  edges.reserve(arr.planes.size());
  for (const Hyperplane& h : arr.planes)
    edges.push_back(h.i == h.j ? Edge::loop(h.i, h.a) : Edge::link(h.i, h.j, h.a));
  return GainGraph(arr.d, arr.n, std::move(edges));
}

namespace {

void alpha_dfs(const GainGraph& g, int v, const Vec& gain_so_far, std::vector<bool>& visited,
               std::vector<std::optional<Vec>>& acc) {
  auto& slot = acc[static_cast<size_t>(v)];
  slot = slot ? join(*slot, gain_so_far) : gain_so_far;
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edges[static_cast<size_t>(e)];
    if (ed.kind != EdgeKind::Link) continue;
    int w;
    if (ed.tail == v)
      w = ed.head;
    else if (ed.head == v)
      w = ed.tail;
    else
      continue;
    if (visited[static_cast<size_t>(w)]) continue;
    visited[static_cast<size_t>(w)] = true;
    alpha_dfs(g, w, gain_so_far + g.gain_from(e, v), visited, acc);
    visited[static_cast<size_t>(w)] = false;
  }
}

}  // namespace

std::vector<std::optional<Vec>> alpha_from(const GainGraph& g, int j) {
  if (j < 0 || j >= g.n) throw semantic_error("alpha: vertex out of range");
  std::vector<std::optional<Vec>> acc(static_cast<size_t>(g.n));
  std::vector<bool> visited(static_cast<size_t>(g.n), false);
  visited[static_cast<size_t>(j)] = true;
  alpha_dfs(g, j, Vec::zero(g.d), visited, acc);
  return acc;
}

std::optional<Vec> alpha(const GainGraph& g, int j, int i) {
  return alpha_from(g, j)[static_cast<size_t>(i)];
}

Vec alpha_max(const GainGraph& g, int j) {
  Vec best = Vec::zero(g.d);  // the empty path to j itself
  for (const auto& a : alpha_from(g, j))
    if (a) best = join(best, *a);
  return best;
}

Int count_orthotope(const AffinographicArrangement& arr, const std::vector<Int>& m) {
  arr.validate();
  if (arr.d != 1) throw semantic_error("count_orthotope applies to scalar hyperplanes (d = 1)");
  if (static_cast<int>(m.size()) != arr.n) throw semantic_error("bound vector has wrong length");
  for (Int mi : m)
    if (mi < 0) throw semantic_error("orthotope bounds must be nonnegative");

  GainGraph g = arrangement_to_gain_graph(arr);

  // Route 1: chromatic count with cone weights at 0 and ideal filters.
  std::vector<Weight> weights(static_cast<size_t>(arr.n),
                              Weight::cone_minus_finite(ColorSet::cone(Vec::zero(1))));
  ColorFilter filter;
  for (Int mi : m) filter.push_back(ColorSet::ideal(Vec({mi})));
  Int via_chromatic = list_chromatic(WeightedGainGraph(g, Semigroup::ConeMinusFinite, weights),
                                     filter);

  // Route 2: the explicit Mobius formula over path gains,
  // (1 + min_v (m_v + eta_B(v)) - max_v eta_B(v))^+ per block.
  LatB lat = lat_b(g);
  Int via_formula = 0;
  for (size_t bi = 0; bi < lat.sets.size(); ++bi) {
    if (lat.mu[bi] == 0) continue;
    SwitchingFunction eta = top_switching(g, lat.sets[bi]);
    SpanningPartition part = components(g, lat.sets[bi]);
    Int prod = 1;
    for (const auto& block : part.blocks) {
      Int mn = m[static_cast<size_t>(block.front())] + eta[static_cast<size_t>(block.front())][0];
      Int gk = eta[static_cast<size_t>(block.front())][0];
      for (int v : block) {
        mn = std::min(mn, m[static_cast<size_t>(v)] + eta[static_cast<size_t>(v)][0]);
        gk = std::max(gk, eta[static_cast<size_t>(v)][0]);
      }
      prod = checked_mul(prod, std::max<Int>(0, 1 + mn - gk));
      if (!prod) break;
    }
    via_formula = checked_add(via_formula, checked_mul(lat.mu[bi], prod));
  }

  if (via_chromatic != via_formula)
    throw semantic_error("orthotope count routes disagree");
  return via_formula;
}

Int count_lists(const AffinographicArrangement& arr,
                const std::vector<std::vector<Int>>& lists) {
  arr.validate();
  if (arr.d != 1) throw semantic_error("count_lists applies to scalar hyperplanes (d = 1)");
  if (static_cast<int>(lists.size()) != arr.n) throw semantic_error("need one list per coordinate");
  GainGraph g = arrangement_to_gain_graph(arr);
  require_enumerable(g);

  std::vector<ColorSet> sets;
  for (const auto& l : lists) {
    std::vector<Vec> elems;
    for (Int x : l) elems.push_back(Vec({x}));
    sets.push_back(ColorSet::finite(std::move(elems)));
  }

  const int me = g.edge_count();
  Int total = 0;
  for (EdgeSet b = 0; b < (EdgeSet{1} << me); ++b) {
    if (!is_balanced(g, b)) continue;
    SwitchingFunction eta = top_switching(g, b);
    SpanningPartition part = components(g, b);
    Int prod = 1;
    for (const auto& block : part.blocks) {
      ColorSet acc = sets[static_cast<size_t>(block.front())].translated(
          eta[static_cast<size_t>(block.front())]);
      for (size_t i = 1; i < block.size(); ++i)
        acc = intersect(acc, sets[static_cast<size_t>(block[i])].translated(
                                 eta[static_cast<size_t>(block[i])]));
      prod = checked_mul(prod, acc.size());
      if (!prod) break;
    }
    total = checked_add(total, (popcount(b) & 1) ? -prod : prod);
  }
  return total;
}

Int count_lists_bounded(const AffinographicArrangement& arr, const std::vector<ColorSet>& lists,
                        const std::vector<Int>& m) {
  arr.validate();
  if (arr.d != 1) throw semantic_error("count_lists_bounded applies to d = 1");
  if (static_cast<int>(lists.size()) != arr.n || static_cast<int>(m.size()) != arr.n)
    throw semantic_error("need one list and one bound per coordinate");
  GainGraph g = arrangement_to_gain_graph(arr);

  std::vector<Weight> weights;
  for (int v = 0; v < arr.n; ++v) {
    ColorSet eff = intersect(intersect(lists[static_cast<size_t>(v)], ColorSet::cone(Vec({0}))),
                             ColorSet::ideal(Vec({m[static_cast<size_t>(v)]})));
    weights.push_back(Weight::finite_list(std::move(eff)));
  }
  // Both the Mobius sum over Lat_b and the alternating form, checked equal.
  return count_proper_mobius(WeightedGainGraph(g, Semigroup::FiniteList, std::move(weights)));
}

Int count_matrix(const AffinographicArrangement& arr, const std::vector<Vec>& H,
                 const std::vector<Vec>& M) {
  arr.validate();
  if (static_cast<int>(H.size()) != arr.n || static_cast<int>(M.size()) != arr.n)
    throw semantic_error("need one bound row per matrix row");
  for (int v = 0; v < arr.n; ++v) {
    if (H[static_cast<size_t>(v)].dim() != arr.d || M[static_cast<size_t>(v)].dim() != arr.d)
      throw semantic_error("bound row has wrong dimension");
    if (!leq(H[static_cast<size_t>(v)], M[static_cast<size_t>(v)]))
      throw semantic_error("count_matrix requires H <= M");
  }
  GainGraph g = arrangement_to_gain_graph(arr);
  std::vector<Weight> weights;
  ColorFilter filter;
  for (int v = 0; v < arr.n; ++v) {
    weights.push_back(Weight::cone_minus_finite(ColorSet::cone(H[static_cast<size_t>(v)])));
    filter.push_back(ColorSet::ideal(M[static_cast<size_t>(v)]));
  }
  return list_chromatic(WeightedGainGraph(g, Semigroup::ConeMinusFinite, std::move(weights)),
                        filter);
}

MultilinearPoly MultilinearPoly::constant(Int c) {
  MultilinearPoly p;
  if (c) p.terms[{}] = c;
  return p;
}

MultilinearPoly MultilinearPoly::linear(Var v, Int c) {
  MultilinearPoly p;
  p.terms[{v}] = 1;
  if (c) p.terms[{}] = c;
  return p;
}

void MultilinearPoly::add(const MultilinearPoly& other, Int scale) {
  for (const auto& [vars, c] : other.terms) {
    Int& slot = terms[vars];
    slot = checked_add(slot, checked_mul(c, scale));
    if (!slot) terms.erase(vars);
  }
}

MultilinearPoly MultilinearPoly::times(const MultilinearPoly& other) const {
  MultilinearPoly p;
  for (const auto& [va, ca] : terms) {
    for (const auto& [vb, cb] : other.terms) {
      std::vector<Var> vars = va;
      vars.insert(vars.end(), vb.begin(), vb.end());
      std::sort(vars.begin(), vars.end());
      if (std::adjacent_find(vars.begin(), vars.end()) != vars.end())
        throw semantic_error("multilinear product with a repeated variable");
      Int& slot = p.terms[vars];
      slot = checked_add(slot, checked_mul(ca, cb));
      if (!slot) p.terms.erase(vars);
    }
  }
  return p;
}

Int MultilinearPoly::eval(const std::vector<Vec>& m) const {
  Int total = 0;
  for (const auto& [vars, c] : terms) {
    Int term = c;
    for (const auto& [i, k] : vars)
      term = checked_mul(term, m[static_cast<size_t>(i)][k]);
    total = checked_add(total, term);
  }
  return total;
}

std::string MultilinearPoly::to_string() const {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [vars, c] : terms) {
    Int coef = c;
    if (out.empty()) {
      if (coef < 0) {
        out += "-";
        coef = -coef;
      }
    } else {
      out += coef < 0 ? " - " : " + ";
      if (coef < 0) coef = -coef;
    }
    std::string body;
    for (const auto& [i, k] : vars) {
      if (!body.empty()) body += "*";
      body += "m[" + std::to_string(i + 1) + "][" + std::to_string(k + 1) + "]";
    }
    if (coef != 1 || body.empty())
      out += std::to_string(coef) + (body.empty() ? "" : "*");
    out += body;
  }
  return out;
}

Vec weight_hhat(const Weight& w) {
  if (w.sg != Semigroup::ConeMinusFinite || w.list.kind != SetKind::Cone)
    throw semantic_error("hhat is defined for cone-minus-finite weights");
  if (w.list.members.empty())
    return w.list.bound - Vec::constant(w.list.bound.dim(), 1);
  Vec top = w.list.members.front();
  for (const Vec& x : w.list.members) top = join(top, x);
  return top;
}

namespace {

void check_piecewise_input(const WeightedGainGraph& wg, const std::vector<Vec>& m) {
  const GainGraph& g = wg.graph;
  if (wg.sg != Semigroup::ConeMinusFinite)
    throw semantic_error("piecewise evaluation needs cone-minus-finite weights");
  for (const Edge& e : g.edges) {
    if (e.kind == EdgeKind::Loose)
      throw semantic_error("piecewise evaluation rejects loose edges");
    if (e.kind == EdgeKind::Half)
      throw semantic_error("piecewise evaluation rejects half edges");
    if (e.kind == EdgeKind::Loop && e.gain == Vec::zero(g.d))
      throw semantic_error("piecewise evaluation rejects balanced loops");
  }
  if (static_cast<int>(m.size()) != g.n) throw semantic_error("one bound vector per vertex");
  for (const Vec& mi : m)
    if (mi.dim() != g.d) throw semantic_error("bound vector has wrong dimension");
}

// Assembles the chamber polynomial of m: for every block and coordinate the
// minimum of the shifted bounds is replaced by the linear form of the vertex
// attaining it at m (smallest vertex on ties).
PiecewiseEvaluation evaluate_piecewise(const WeightedGainGraph& wg, const std::vector<Vec>& m) {
  const GainGraph& g = wg.graph;
  PiecewiseEvaluation out;
  LatB lat = lat_b(g);
  MultilinearPoly poly;
  std::string chamber;
  for (size_t bi = 0; bi < lat.sets.size(); ++bi) {
    if (lat.mu[bi] == 0) continue;
    SwitchingFunction eta = top_switching(g, lat.sets[bi]);
    SpanningPartition part = components(g, lat.sets[bi]);
    MultilinearPoly term = MultilinearPoly::constant(1);
    for (const auto& block : part.blocks) {
      // Bottom of the block's color interval: the join of shifted apexes.
      Vec bottom = wg.weights[static_cast<size_t>(block.front())].list.bound +
                   eta[static_cast<size_t>(block.front())];
      for (int v : block)
        bottom = join(bottom, wg.weights[static_cast<size_t>(v)].list.bound +
                                  eta[static_cast<size_t>(v)]);

      // Shifted exclusions matter only above the bottom; below it they fall
      // outside the interval (the interval indicators of the factor).
      std::set<Vec> excl;
      for (int v : block)
        for (const Vec& x : wg.weights[static_cast<size_t>(v)].list.members) {
          Vec shifted = x + eta[static_cast<size_t>(v)];
          if (leq(bottom, shifted)) excl.insert(std::move(shifted));
        }

      MultilinearPoly factor = MultilinearPoly::constant(1);
      for (int k = 0; k < g.d; ++k) {
        int sel = block.front();
        Int best = m[static_cast<size_t>(sel)][k] + eta[static_cast<size_t>(sel)][k];
        for (int v : block) {
          Int shifted = m[static_cast<size_t>(v)][k] + eta[static_cast<size_t>(v)][k];
          if (shifted < best) {
            best = shifted;
            sel = v;
          }
        }
        factor = factor.times(MultilinearPoly::linear(
            {sel, k}, checked_add(eta[static_cast<size_t>(sel)][k], 1 - bottom[k])));
        if (block.size() > 1) {
          if (!chamber.empty()) chamber += ";";
          chamber += "B" + std::to_string(bi) + ".k" + std::to_string(k + 1) + "->v" +
                     std::to_string(sel + 1);
        }
      }
      factor.add(MultilinearPoly::constant(static_cast<Int>(excl.size())), -1);
      term = term.times(factor);
    }
    poly.add(term, lat.mu[bi]);
  }
  out.chamber_poly = std::move(poly);
  out.value = out.chamber_poly.eval(m);
  out.chamber = chamber.empty() ? "trivial" : chamber;
  return out;
}

}  // namespace

std::vector<Vec> piecewise_threshold(const WeightedGainGraph& wg) {
  const GainGraph& g = wg.graph;
  std::vector<Vec> hhat;
  hhat.reserve(static_cast<size_t>(g.n));
  for (const Weight& w : wg.weights) hhat.push_back(weight_hhat(w));
  std::vector<Vec> threshold(static_cast<size_t>(g.n));
  for (int i = 0; i < g.n; ++i) threshold[static_cast<size_t>(i)] = hhat[static_cast<size_t>(i)];
  for (int j = 0; j < g.n; ++j) {
    auto reach = alpha_from(g, j);
    for (int i = 0; i < g.n; ++i)
      if (reach[static_cast<size_t>(i)])
        threshold[static_cast<size_t>(i)] = join(
            threshold[static_cast<size_t>(i)], hhat[static_cast<size_t>(j)] + *reach[static_cast<size_t>(i)]);
  }
  return threshold;
}

PiecewiseEvaluation chi_piecewise(const WeightedGainGraph& wg, const std::vector<Vec>& m) {
  check_piecewise_input(wg, m);
  PiecewiseEvaluation out = evaluate_piecewise(wg, m);
  out.threshold = piecewise_threshold(wg);
  out.above_threshold = true;
  for (int i = 0; i < wg.graph.n; ++i)
    out.above_threshold &= leq(out.threshold[static_cast<size_t>(i)], m[static_cast<size_t>(i)]);
  return out;
}

VarPoly VarPoly::constant(int d, Int c) {
  VarPoly p;
  p.d = d;
  if (c) p.terms[std::vector<int>(static_cast<size_t>(d), 0)] = c;
  return p;
}

VarPoly VarPoly::linear(int d, int k, Int c) {
  VarPoly p = constant(d, c);
  std::vector<int> e(static_cast<size_t>(d), 0);
  e[static_cast<size_t>(k)] = 1;
  Int& slot = p.terms[e];
  slot = checked_add(slot, 1);
  return p;
}

void VarPoly::add(const VarPoly& other, Int scale) {
  if (d == 0) d = other.d;
  for (const auto& [e, c] : other.terms) {
    Int& slot = terms[e];
    slot = checked_add(slot, checked_mul(c, scale));
    if (!slot) terms.erase(e);
  }
}

VarPoly VarPoly::times(const VarPoly& other) const {
  VarPoly p;
  p.d = d;
  for (const auto& [ea, ca] : terms) {
    for (const auto& [eb, cb] : other.terms) {
      std::vector<int> e = ea;
      for (size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
      Int& slot = p.terms[e];
      slot = checked_add(slot, checked_mul(ca, cb));
      if (!slot) p.terms.erase(e);
    }
  }
  return p;
}

Int VarPoly::eval(const Vec& mprime) const {
  Int total = 0;
  for (const auto& [e, c] : terms) {
    Int term = c;
    for (size_t k = 0; k < e.size(); ++k)
      for (int t = 0; t < e[k]; ++t) term = checked_mul(term, mprime[static_cast<int>(k)]);
    total = checked_add(total, term);
  }
  return total;
}

std::string VarPoly::to_string() const {
  if (terms.empty()) return "0";
  std::string out;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [e, c] = *it;
    Int coef = c;
    if (out.empty()) {
      if (coef < 0) {
        out += "-";
        coef = -coef;
      }
    } else {
      out += coef < 0 ? " - " : " + ";
      if (coef < 0) coef = -coef;
    }
    std::string body;
    for (size_t k = 0; k < e.size(); ++k) {
      if (!e[k]) continue;
      if (!body.empty()) body += "*";
      body += "m" + std::to_string(k + 1);
      if (e[k] > 1) body += "^" + std::to_string(e[k]);
    }
    if (coef != 1 || body.empty()) out += std::to_string(coef) + (body.empty() ? "" : "*");
    out += body;
  }
  return out;
}

CommonBoundEvaluation chi_common_bound(const WeightedGainGraph& wg, const Vec& mprime) {
  const GainGraph& g = wg.graph;
  check_piecewise_input(wg, std::vector<Vec>(static_cast<size_t>(g.n), mprime));

  CommonBoundEvaluation out;
  LatB lat = lat_b(g);
  VarPoly poly;
  poly.d = g.d;
  for (size_t bi = 0; bi < lat.sets.size(); ++bi) {
    if (lat.mu[bi] == 0) continue;
    SwitchingFunction eta = top_switching(g, lat.sets[bi]);
    SpanningPartition part = components(g, lat.sets[bi]);
    VarPoly term = VarPoly::constant(g.d, 1);
    for (const auto& block : part.blocks) {
      Vec bottom = wg.weights[static_cast<size_t>(block.front())].list.bound +
                   eta[static_cast<size_t>(block.front())];
      for (int v : block)
        bottom = join(bottom, wg.weights[static_cast<size_t>(v)].list.bound +
                                  eta[static_cast<size_t>(v)]);
      std::set<Vec> excl;
      for (int v : block)
        for (const Vec& x : wg.weights[static_cast<size_t>(v)].list.members) {
          Vec shifted = x + eta[static_cast<size_t>(v)];
          if (leq(bottom, shifted)) excl.insert(std::move(shifted));
        }
      VarPoly factor = VarPoly::constant(g.d, 1);
      for (int k = 0; k < g.d; ++k) {
        // q_k = m'_k - max_{v,w in W} (h_vk + eta_k(v) - eta_k(w)) + 1
        Int etamin = eta[static_cast<size_t>(block.front())][k];
        for (int v : block) etamin = std::min(etamin, eta[static_cast<size_t>(v)][k]);
        factor = factor.times(VarPoly::linear(g.d, k, checked_add(etamin, 1 - bottom[k])));
      }
      factor.add(VarPoly::constant(g.d, static_cast<Int>(excl.size())), -1);
      term = term.times(factor);
    }
    poly.add(term, lat.mu[bi]);
  }
  out.poly = std::move(poly);
  out.value = out.poly.eval(mprime);

  Vec threshold = Vec::constant(g.d, 0);
  for (int j = 0; j < g.n; ++j) {
    Vec t = weight_hhat(wg.weights[static_cast<size_t>(j)]) + alpha_max(g, j);
    threshold = j == 0 ? t : join(threshold, t);
  }
  out.threshold = std::move(threshold);
  return out;
}

PiecewiseEvaluation chi_graph_no_gains(const WeightedGainGraph& wg, const std::vector<Vec>& m) {
  const GainGraph& g = wg.graph;
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : g.edges) {
    if (e.kind != EdgeKind::Link) throw semantic_error("gain-free count needs a simple graph");
    if (e.gain != Vec::zero(g.d)) throw semantic_error("gain-free count needs all-zero gains");
    auto key = std::minmax(e.tail, e.head);
    if (!seen.insert({key.first, key.second}).second)
      throw semantic_error("gain-free count needs a simple graph (parallel edges found)");
  }
  check_piecewise_input(wg, m);
  PiecewiseEvaluation out = evaluate_piecewise(wg, m);

  // The ordinary-graph threshold: the global join of the hhat vectors.
  Vec global = Vec::constant(g.d, 0);
  for (int j = 0; j < g.n; ++j) {
    Vec t = weight_hhat(wg.weights[static_cast<size_t>(j)]);
    global = j == 0 ? t : join(global, t);
  }
  out.threshold.assign(static_cast<size_t>(g.n), global);
  out.above_threshold = true;
  for (int i = 0; i < g.n; ++i)
    out.above_threshold &= leq(out.threshold[static_cast<size_t>(i)], m[static_cast<size_t>(i)]);
  return out;
}

namespace {

bool point_avoids(const AffinographicArrangement& arr, const std::vector<Vec>& x) {
  for (const Hyperplane& h : arr.planes)
    if (x[static_cast<size_t>(h.j)] == x[static_cast<size_t>(h.i)] + h.a) return false;
  return true;
}

Int brute_count_rows(const AffinographicArrangement& arr, const std::vector<Box>& boxes) {
  Int total = 1;
  for (const Box& b : boxes) total = checked_mul(total, b.count());
  if (total > 10'000'000) throw semantic_error("brute-force enumeration exceeds cap");
  if (total == 0) return 0;

  std::vector<std::vector<Vec>> rows;
  for (const Box& b : boxes) {
    std::vector<Vec> pts;
    b.for_each([&](const Vec& x) { pts.push_back(x); });
    rows.push_back(std::move(pts));
  }
  const int n = static_cast<int>(rows.size());
  std::vector<size_t> idx(static_cast<size_t>(n), 0);
  std::vector<Vec> x;
  for (const auto& r : rows) x.push_back(r.front());
  Int count = 0;
  while (true) {
    if (point_avoids(arr, x)) ++count;
    int v = 0;
    while (v < n) {
      auto& i = idx[static_cast<size_t>(v)];
      if (++i < rows[static_cast<size_t>(v)].size()) {
        x[static_cast<size_t>(v)] = rows[static_cast<size_t>(v)][i];
        break;
      }
      i = 0;
      x[static_cast<size_t>(v)] = rows[static_cast<size_t>(v)].front();
      ++v;
    }
    if (v == n) break;
  }
  return count;
}

}  // namespace

Int brute_count_orthotope(const AffinographicArrangement& arr, const std::vector<Int>& m) {
  std::vector<Box> boxes;
  for (Int mi : m) boxes.emplace_back(Vec({0}), Vec({mi}));
  return brute_count_rows(arr, boxes);
}

Int brute_count_lists(const AffinographicArrangement& arr,
                      const std::vector<std::vector<Int>>& lists) {
  Int count = 0;
  std::vector<Vec> x(lists.size());
  std::vector<size_t> idx(lists.size(), 0);
  Int total = 1;
  for (const auto& l : lists) total = checked_mul(total, static_cast<Int>(l.size()));
  if (total > 10'000'000) throw semantic_error("brute-force enumeration exceeds cap");
  if (total == 0) return 0;
  for (size_t v = 0; v < lists.size(); ++v) x[v] = Vec({lists[v][0]});
  while (true) {
    if (point_avoids(arr, x)) ++count;
    size_t v = 0;
    while (v < lists.size()) {
      if (++idx[v] < lists[v].size()) {
        x[v] = Vec({lists[v][idx[v]]});
        break;
      }
      idx[v] = 0;
      x[v] = Vec({lists[v][0]});
      ++v;
    }
    if (v == lists.size()) break;
  }
  return count;
}

Int brute_count_lists_bounded(const AffinographicArrangement& arr,
                              const std::vector<ColorSet>& lists, const std::vector<Int>& m) {
  std::vector<std::vector<Int>> effective;
  for (size_t v = 0; v < lists.size(); ++v) {
    ColorSet eff = intersect(intersect(lists[v], ColorSet::cone(Vec({0}))),
                             ColorSet::ideal(Vec({m[v]})));
    std::vector<Int> l;
    for (const Vec& x : eff.members) l.push_back(x[0]);
    effective.push_back(std::move(l));
  }
  return brute_count_lists(arr, effective);
}

Int brute_count_matrix(const AffinographicArrangement& arr, const std::vector<Vec>& H,
                       const std::vector<Vec>& M) {
  std::vector<Box> boxes;
  for (size_t v = 0; v < H.size(); ++v) boxes.emplace_back(H[v], M[v]);
  return brute_count_rows(arr, boxes);
}

}  // namespace wgg
