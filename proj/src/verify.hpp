#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "activities.hpp"
#include "io.hpp"

namespace wgg {

// Deterministic RNG for the randomized suites (mt19937_64 is fully pinned
// by the standard, so reports are reproducible across platforms).
struct Rng {
  std::mt19937_64 eng;

  explicit Rng(std::uint64_t seed) : eng(seed) {}
  Int below(Int k) { return k <= 1 ? 0 : static_cast<Int>(eng() % static_cast<std::uint64_t>(k)); }
  Int range(Int lo, Int hi) { return lo + below(hi - lo + 1); }
  bool coin() { return eng() & 1; }
};

Vec random_vec(Rng& rng, int d, Int lo, Int hi);
GainGraph random_gain_graph(Rng& rng, int max_n, int max_e, int max_d, Int gain_bound,
                            bool allow_half, bool allow_loose);
WeightedGainGraph random_vec_weighted(Rng& rng, const GainGraph& g, Semigroup sg);
WeightedGainGraph random_list_weighted(Rng& rng, const GainGraph& g, int max_list_size);
WeightedGainGraph random_cone_weighted(Rng& rng, const GainGraph& g, int max_exclusions);
AffinographicArrangement random_arrangement(Rng& rng, int max_n, int max_planes, Int shift_bound,
                                            int d);
EdgeOrdering random_ordering(Rng& rng, int m);

struct VerifyOptions {
  std::uint64_t seed = 20260809;
  int max_n = 4;
  int max_e = 5;
  int max_d = 2;
};

struct SuiteResult {
  std::string name;
  int checks = 0;
  int failures = 0;
  std::string first_failure;

  explicit SuiteResult(std::string n) : name(std::move(n)) {}

  void pass() { ++checks; }
  void fail(const std::string& what) {
    ++checks;
    if (!failures) first_failure = what;
    ++failures;
  }
  void check(bool ok, const std::string& what) { ok ? pass() : fail(what); }
};

struct VerifyReport {
  std::vector<SuiteResult> suites;
  bool ok() const;
  int total_checks() const;
  int total_failures() const;
};

// Runs every randomized oracle-equivalence suite at acceptance volume.
VerifyReport run_verify(const VerifyOptions& options);

// Individual suites (used by the acceptance harness).
SuiteResult verify_semigroup_laws(const VerifyOptions&);
SuiteResult verify_top_switching(const VerifyOptions&);
SuiteResult verify_repeated_ops(const VerifyOptions&);
SuiteResult verify_qpoly_expansions(const VerifyOptions&, int graphs = 200);
SuiteResult verify_forest_expansion(const VerifyOptions&, int graphs = 100, int orderings = 5);
SuiteResult verify_lift_rank_axioms(const VerifyOptions&);
SuiteResult verify_basis_intervals(const VerifyOptions&);
SuiteResult verify_broken_circuits(const VerifyOptions&);
SuiteResult verify_reverse_greedy(const VerifyOptions&);
SuiteResult verify_external_activity(const VerifyOptions&);
SuiteResult verify_improper_sets(const VerifyOptions&);
SuiteResult verify_coloring_counts(const VerifyOptions&, int instances = 200);
SuiteResult verify_contracted_proper(const VerifyOptions&, int instances = 50);
SuiteResult verify_signed_subtractivity(const VerifyOptions&);
SuiteResult verify_switching_equivariance(const VerifyOptions&);
SuiteResult verify_orthotope_oracles(const VerifyOptions&, int instances = 100);
SuiteResult verify_piecewise_orthotope(const VerifyOptions&, int instances = 30);
SuiteResult verify_graph_tutte_axioms(const VerifyOptions&);

std::string report_human(const VerifyReport& report);
std::string report_machine(const VerifyReport& report);

}  // namespace wgg
