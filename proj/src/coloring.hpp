#pragma once

#include <vector>

#include "qpoly.hpp"
#include "weighted_graph.hpp"

namespace wgg {

// Coloration x : V -> Z^d.
using Coloration = std::vector<Vec>;

// Per-vertex color filter; All means no filtering.
using ColorFilter = std::vector<ColorSet>;

ColorFilter no_filter(int n);

// Improper edges of a coloration: links and loops whose gain matches the
// color difference.  Half edges are never improper and the coloring
// operations reject graphs containing them; loose edges are excluded here
// but count as always-improper in the proper-coloration counts (they carry
// the identity gain).
EdgeSet improper_set(const GainGraph& g, const Coloration& x);

// Doubly weighted graph carrying (list, filter) pairs; contraction then
// transports filters exactly like weights.
WeightedGainGraph make_pair_weighted(const WeightedGainGraph& wg, const ColorFilter& filter);

// Exhaustive count of proper colorations with x_i in h_i intersect M_i.
// Independent oracle for everything below; capped at ~10^7 colorations.
Int count_proper_bruteforce(const WeightedGainGraph& wg, const ColorFilter& filter);

// Counts colorations whose improper edge set (loose edges included) equals
// exactly b; brute force.
Int count_improper_exactly_bruteforce(const WeightedGainGraph& wg, EdgeSet b);

// Proper colorations by Mobius inversion over Lat_b; computes both the
// Mobius sum and the alternating sum over balanced subsets and insists they
// agree.  Lists must be finite (else the count is zero or infinite and the
// call is an error).
Int count_proper_mobius(const WeightedGainGraph& wg);

// Colorations with improper edge set exactly b (balanced): the proper count
// of the contraction by b.
Int count_with_improper_exactly(const WeightedGainGraph& wg, EdgeSet b);

// Filtered list chromatic function: Mobius sum with factors
// |h/B(W) cap M/B(W)|; every effective list h_i cap M_i must be finite.
Int list_chromatic(const WeightedGainGraph& wg, const ColorFilter& filter);

// The same count through the total dichromatic polynomial of the doubly
// weighted graph: (-1)^n Q(u, -1, 0) at u_{h',M'} = -|h' cap M'|.
Int chi_from_q(const WeightedGainGraph& wg, const ColorFilter& filter);

}  // namespace wgg
