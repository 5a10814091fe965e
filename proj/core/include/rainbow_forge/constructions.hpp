#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "rainbow_forge/graph.hpp"

namespace rainbow {

// Hypercube on 2^m vertices; edges join vertices differing in one coordinate
// and carry that coordinate as colour. m-regular, proper, C = m.
ColoredGraph hypercube(int m);  // 1 <= m <= 20

// K_n coloured by the round-robin (circle method) one-factorization:
// n-1 colours, each colour class a perfect matching.
ColoredGraph complete_one_factorization(int n);  // n even, 4 <= n <= 2048

struct RetryExhaustedError : std::runtime_error {
    RetryExhaustedError(const std::string& what, int attempts_)
        : std::runtime_error(what), attempts(attempts_) {}
    int attempts;
};

// Configuration-model d-regular graph, rejection-sampled until simple with
// girth >= min_girth. Throws RetryExhaustedError when max_retries resamples
// all fail (also the signal that the parameters are infeasible at this n).
SimpleGraph random_regular_girth(int n, int d, int min_girth, std::uint64_t seed,
                                 int max_retries = 10000);

// Proper edge colouring with at most max_degree+1 colours via the classical
// fan / alternating-chain construction. Deterministic: edges processed in
// sorted order, all choices smallest-first.
ColoredGraph vizing_color(const SimpleGraph& g);

// Shortest cycle length; nullopt for forests.
std::optional<int> exact_girth(const SimpleGraph& g);

// Truncated per-vertex BFS check (depth ceil(g/2)); true iff girth >= g.
bool girth_at_least(const SimpleGraph& g, int g_min);

}  // namespace rainbow
