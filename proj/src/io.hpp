#pragma once

#include <string>

#include "orthotope.hpp"

namespace wgg {

// Parsers for the JSON interchange formats.  Vertices and hyperplane
// indices are 1-based in the files and 0-based internally.  Throws
// parse_error for malformed input and semantic_error for well-formed input
// that violates a contract.

GainGraph parse_gain_graph(const std::string& text);

// Requires "semigroup" and "weights" alongside the graph fields.
WeightedGainGraph parse_weighted_graph(const std::string& text);

// Does the text carry weights?
bool has_weights(const std::string& text);

// Re-tags vector-valued weights between max-zd and sum-zd.
WeightedGainGraph with_semigroup(const WeightedGainGraph& wg, Semigroup sg);

AffinographicArrangement parse_arrangement(const std::string& text);

// Per-vertex color filter: array of {"ideal":[...]}, {"set":[[...],...]},
// {"cone":{"apex":[...],"excl":[[...]]}} or "all".
ColorFilter parse_filter(const std::string& text, int n, int d);

// Per-coordinate finite lists: [[0,2,5], ...] (d = 1).
std::vector<std::vector<Int>> parse_lists(const std::string& text, int n);

// Lists that may be "all" (all nonnegative integers) for the bounded count.
std::vector<ColorSet> parse_bounded_lists(const std::string& text, int n);

// Reads "H" / "M" style integer matrices: [[...],[...]] with n rows of d.
std::vector<Vec> parse_matrix(const std::string& text, const std::string& key, int n, int d);

}  // namespace wgg
