#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "rainbow_forge/graph.hpp"

namespace rainbow {

// Maximal induced subgraph of minimum degree >= threshold+1, obtained by
// repeatedly removing vertices of degree <= threshold. Unique and
// order-independent; empty when everything peels away.
struct PeelResult {
    ColoredGraph graph;           // n = 0 when empty
    std::vector<int> vertex_map;  // new id -> old id
    std::vector<int> color_map;   // new dense colour -> old dense colour
};

PeelResult peel_to_min_degree(const ColoredGraph& g, int threshold);

// Simple cycle using every colour at most r times.
struct AlmostRainbowCycle {
    std::vector<int> vertices;  // in the ids of the searched graph
    std::vector<int> colors;
    std::map<int, int> color_multiplicity;
    int max_repeats = 0;  // the r it was found for
};

bool validate_almost_rainbow_cycle(const ColoredGraph& g, const AlmostRainbowCycle& cycle,
                                   int r);

enum class FinderStatus {
    Found,
    EmptyPeel,       // peeling removed every vertex
    Exhausted,       // enumerated all admissible sequences up to the length cap
    BudgetExceeded,  // hit the sequence cap; absence NOT concluded
};

struct FinderResult {
    FinderStatus status = FinderStatus::Exhausted;
    std::optional<AlmostRainbowCycle> cycle;
    std::uint64_t sequences_explored = 0;
    int degree_threshold = 0;  // the d that was used
};

inline constexpr std::uint64_t kDefaultSequenceBudget = 10'000'000;

// Finds an r-almost rainbow cycle by enumerating admissible colour sequences
// (per-colour multiplicity <= floor(r/2), no immediate repetition) breadth
// first from a fixed root of the peeled graph, halting at the first endpoint
// collision. The degree threshold d defaults to
// 16 * ceil(((ln n)/r) / ln((ln n)/r)) when (ln n)/r > e; otherwise the
// caller must supply one.
FinderResult find_almost_rainbow_cycle(const ColoredGraph& g, int r,
                                       std::optional<int> degree_override = std::nullopt,
                                       std::uint64_t max_sequences = kDefaultSequenceBudget);

// d-regular graph of girth >= (d+1)r+1 coloured with <= d+1 colours; by
// pigeonhole no cycle is r-almost rainbow. Sampled with rejection; throws
// RetryExhaustedError (from constructions) when no instance is found.
ColoredGraph construct_almost_rainbow_lower_bound(int d, int r, int n, std::uint64_t seed,
                                                  int max_retries = 10000);

// Test support: number of admissible sequences per length, counted by full
// enumeration without collision halting. lengths[l] = count of length-l
// admissible sequences, l = 0..max_len.
std::vector<std::uint64_t> count_admissible_sequences(const ColoredGraph& peeled, int root,
                                                      int r, int max_len,
                                                      std::uint64_t cap = 50'000'000);

}  // namespace rainbow
