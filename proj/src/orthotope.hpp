#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coloring.hpp"

namespace wgg {

// Affinographic hyperplane x_j = x_i + a (rows of matrices when d > 1).
// Vertices are 0-based internally.
struct Hyperplane {
  int i = 0, j = 0;
  Vec a;
};

struct AffinographicArrangement {
  int n = 0;
  int d = 1;
  std::vector<Hyperplane> planes;

  void validate() const;
};

// One link per hyperplane, gain a oriented i -> j (a loop when i == j with
// a != 0, i.e. an unsatisfiable constraint).
GainGraph arrangement_to_gain_graph(const AffinographicArrangement& arr);

// alpha_{j.}: join of gains over all simple paths from v_j, per target
// vertex; nullopt for unreachable targets, zero for the target j itself.
std::vector<std::optional<Vec>> alpha_from(const GainGraph& g, int j);
std::optional<Vec> alpha(const GainGraph& g, int j, int i);
Vec alpha_max(const GainGraph& g, int j);  // join over all reachable targets

// Lattice points of [0,m_1] x ... x [0,m_n] avoiding every hyperplane
// (d = 1, m >= 0).  Computed by the Mobius formula over path gains and,
// independently, as a filtered list chromatic count; both must agree.
Int count_orthotope(const AffinographicArrangement& arr, const std::vector<Int>& m);

// Points of L_1 x ... x L_n avoiding every hyperplane: alternating sum over
// balanced edge sets of products of translated-list intersections (d = 1).
Int count_lists(const AffinographicArrangement& arr, const std::vector<std::vector<Int>>& lists);

// Points of P cap (L_1 x ... x L_n) avoiding the arrangement; lists may be
// infinite (the cone of all nonnegative integers) since the bound makes the
// effective lists finite.
Int count_lists_bounded(const AffinographicArrangement& arr, const std::vector<ColorSet>& lists,
                        const std::vector<Int>& m);

// Integer n x d matrices X with H <= X <= M avoiding every row subspace
// x_j = x_i + a.
Int count_matrix(const AffinographicArrangement& arr, const std::vector<Vec>& H,
                 const std::vector<Vec>& M);

// Multilinear polynomial in the variables m[i][k] (each appears to degree
// at most one); variable lists inside a term are sorted and disjoint.
struct MultilinearPoly {
  using Var = std::pair<int, int>;  // (vertex, coordinate)
  std::map<std::vector<Var>, Int> terms;

  static MultilinearPoly constant(Int c);
  static MultilinearPoly linear(Var v, Int c);  // m[v] + c

  void add(const MultilinearPoly& other, Int scale = 1);
  MultilinearPoly times(const MultilinearPoly& other) const;
  Int eval(const std::vector<Vec>& m) const;
  std::string to_string() const;
};

// hhat of a cone-minus-finite weight: the join of the exclusions, or
// apex - (1,...,1) when there are none.
Vec weight_hhat(const Weight& w);

// Evaluation of the bounded chromatic function through the explicit
// piecewise formula: the value p(m), the polynomiality threshold, whether m
// clears it, and the multilinear polynomial of m's chamber (the chamber is
// identified by which vertex attains each shifted minimum).
struct PiecewiseEvaluation {
  Int value = 0;
  std::vector<Vec> threshold;
  bool above_threshold = false;
  std::string chamber;
  MultilinearPoly chamber_poly;
};

PiecewiseEvaluation chi_piecewise(const WeightedGainGraph& wg, const std::vector<Vec>& m);
std::vector<Vec> piecewise_threshold(const WeightedGainGraph& wg);

// Polynomial in d variables with integer coefficients (for the common-bound
// specialization m_1 = ... = m_n = m').
struct VarPoly {
  int d = 0;
  std::map<std::vector<int>, Int> terms;  // exponent vector -> coefficient

  static VarPoly constant(int d, Int c);
  static VarPoly linear(int d, int k, Int c);  // m'_k + c

  void add(const VarPoly& other, Int scale = 1);
  VarPoly times(const VarPoly& other) const;
  Int eval(const Vec& mprime) const;
  std::string to_string() const;
};

struct CommonBoundEvaluation {
  Int value = 0;
  Vec threshold;
  VarPoly poly;  // the unique polynomial of the common-bound chromatic count
};

CommonBoundEvaluation chi_common_bound(const WeightedGainGraph& wg, const Vec& mprime);

// Gains-free specialization: a simple zero-gain graph with cone-minus-finite
// weights; the threshold collapses to the global join of the hhat vectors.
PiecewiseEvaluation chi_graph_no_gains(const WeightedGainGraph& wg, const std::vector<Vec>& m);

// Brute-force lattice enumeration oracles.
Int brute_count_orthotope(const AffinographicArrangement& arr, const std::vector<Int>& m);
Int brute_count_lists(const AffinographicArrangement& arr,
                      const std::vector<std::vector<Int>>& lists);
Int brute_count_lists_bounded(const AffinographicArrangement& arr,
                              const std::vector<ColorSet>& lists, const std::vector<Int>& m);
Int brute_count_matrix(const AffinographicArrangement& arr, const std::vector<Vec>& H,
                       const std::vector<Vec>& M);

}  // namespace wgg
