#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rainbow_forge/exact_math.hpp"
#include "rainbow_forge/graph.hpp"
#include "rainbow_forge/rainbow_search.hpp"

namespace rainbow {

// Random nested colour sets A_0 >= A_1 >= ... >= A_T: A_0 keeps each colour
// with probability 1/2, each later level keeps each survivor with
// probability 1 - 1/T. Fully determined by (colour count, T, seed).
struct NestedColorChain {
    int steps = 0;           // T
    Rational keep_prob;      // 1 - 1/T
    std::uint64_t seed = 0;
    std::vector<ColorSet> levels;  // T + 1 sets

    const ColorSet& level(int i) const { return levels[static_cast<std::size_t>(i)]; }
};

NestedColorChain sample_chain(int color_count, int steps, std::uint64_t seed);

enum class ChainProbabilityKind { A, B };

// Exact conditional probabilities of the nested chain with p = 1 - 1/T:
//   kind A: Pr[x in A_i | x not in A_j]  = (1/2) p^i (1-p^{j-i}) / (1 - (1/2) p^j)
//           for 0 <= i <= j <= T  (for x in A_j the probability is 1)
//   kind B: Pr[x in A_{j-1} | x in A_i \ A_j] = p^{j-1-i} (1-p) / (1 - p^{j-i})
//           for 0 <= i < j <= T with j - i + 1 <= T/2
Rational chain_probability_exact(int i, int j, int steps, ChainProbabilityKind kind);

// Process parameters. With the defaults (scale 1) L is ceil(ln n) rounded up
// to a multiple of 4, K = max(1, ceil(ln ln n)), T = K*L; scale 1e5
// reproduces the classical parameter sizes.
struct ProcessConfig {
    int growth_rounds = 1;  // K
    int round_length = 4;   // L, divisible by 4
    int steps = 4;          // T = K * L

    static ProcessConfig for_graph(int n, const Rational& l_scale = 1);

    // target curve s(k) = n * exp(-(1/2) 10^k); s(0) = n/sqrt(e)
    static double schedule(int n, int k);
};

struct TrialRecord {
    std::uint64_t seed = 0;
    bool aborted = false;                 // reachability hit the state budget
    std::vector<long long> checkpoint_sizes;  // |U(A_{kL})| for k = 0..K
    long long complement_reach = 0;       // |U(C \ A_0)|
    bool size_event = false;              // |U(A_0)| >= n/sqrt(e), exact test
    bool size_event_complement = false;
    bool cycle_event = false;             // some y != x in both reachable sets
    std::optional<RainbowCycle> cycle;    // validated when assembled
};

// One colour-splitting trial: samples the chain, records |U(A_{kL})| at every
// checkpoint, evaluates the two success events, and assembles a rainbow cycle
// from the two witness walks when the reachable sets meet beyond the source.
TrialRecord run_splitting_trial(const ColoredGraph& g, int source, const ProcessConfig& cfg,
                                std::uint64_t seed,
                                std::uint64_t state_budget = kDefaultStateBudget);

// Keeps each colour with probability 1/2 (or all of them with keep_all) and
// returns the connected component sizes of the surviving edge set, largest
// first.
std::vector<int> color_split_components(const ColoredGraph& g, std::uint64_t seed,
                                        bool keep_all = false);

}  // namespace rainbow
