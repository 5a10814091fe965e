#pragma once

// Independent brute-force oracles used by the test suites. Everything here
// recomputes results from first principles, without touching the search,
// pruning, or greedy machinery under test.

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "rainbow_forge/graph.hpp"
#include "rainbow_forge/group.hpp"

namespace rainbow::oracles {

// Endpoints of every rainbow walk from source using colours in palette,
// by full enumeration of walks (no dominance pruning).
VertexSet rainbow_reachable_bruteforce(const ColoredGraph& g, int source,
                                       const ColorSet& palette);

// Enumerates all simple cycles of length <= max_len and keeps those whose
// colours are pairwise distinct.
bool rainbow_cycle_exists_bruteforce(const ColoredGraph& g, int max_len);

// Enumerates all simple cycles; true iff some cycle uses every colour at
// most r times. Exponential; small graphs only.
bool almost_rainbow_cycle_exists_bruteforce(const ColoredGraph& g, int r);

// min |N_{G-F}(U)| over every F with |F| <= budget_floor, enumerating all
// subsets of the U-boundary edges (edges elsewhere cannot change the
// neighbourhood).
long long worst_case_neighborhood_bruteforce(const ColoredGraph& g, const VertexSet& u,
                                             long long budget_floor);

// curve[f] = min |N_{G-F}(U)| over |F| <= f for f = 0..f_max, from one
// enumeration of all boundary-edge subsets of size <= f_max.
std::vector<long long> worst_case_curve_bruteforce(const ColoredGraph& g, const VertexSet& u,
                                                   long long f_max);

// Girth by edge removal + shortest path, independent of the BFS detector.
std::optional<int> girth_bruteforce(const SimpleGraph& g);

// True iff some non-empty sequence of distinct elements of s with signs
// multiplies to the identity, by enumerating every ordering and sign
// pattern. Factorial; tiny sets only.
bool has_relation_bruteforce(const FiniteGroup& g,
                             const std::vector<FiniteGroup::Elem>& s);

// Erdos-Renyi graph G(n, num/den) from the deterministic counter RNG.
SimpleGraph random_graph(int n, std::uint64_t p_num, std::uint64_t p_den, std::uint64_t seed);

}  // namespace rainbow::oracles
