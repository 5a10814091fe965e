#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rainbow_forge/exact_math.hpp"
#include "rainbow_forge/graph.hpp"

namespace rainbow {

// One failed robustness check: with the recorded eps and deleted edge set F,
// |F| <= (eps/3) d(G) |U| holds but |N_{G-F}(U)| = achieved < (eps/3)|U|.
struct ExpansionCounterexample {
    std::vector<int> witness_set;   // U
    bool eps_is_exact_max = false;  // eps equals 1 - ln|U|/ln n (irrational in general)
    Rational eps;                   // exact value when !eps_is_exact_max
    double eps_value = 0.0;         // decimal rendering either way
    long long deletion_floor = 0;   // integer deletion budget at the failure
    std::vector<int> deleted_edges;
    long long achieved = 0;
    double required = 0.0;
};

struct ExpansionStep {
    int size;      // |S| after the accepted deletion
    double ratio;  // d(S)/(ln|S| - 1/3)
};

struct ExpanderCertificate {
    std::vector<int> vertices;  // S
    double ratio = 0.0;         // d(G[S])/(ln|S| - 1/3)
    std::string mode;           // "exhaustive" | "sampled" | "none"
    // Per-U decision rule actually checked; the robustness condition over the
    // whole eps continuum reduces to the integer deletion thresholds
    // f = 0..F_top plus one comparison at eps_max(U).
    std::string check_rule;
    int samples = 0;
    std::uint64_t subsets_checked = 0;
    std::optional<ExpansionCounterexample> counterexample;
    std::vector<ExpansionStep> improvement_ledger;  // heuristic extraction only

    bool passed() const { return !counterexample.has_value(); }
};

// Minimum of |N_{G-F}(U)| over all F with |F| <= budget. Exact by the bundle
// argument: an optimal adversary deletes whole edge bundles of neighbours in
// ascending bundle-size order.
long long worst_case_neighborhood(const ColoredGraph& g, const VertexSet& u,
                                  const Rational& budget);

enum class VerifyMode { Exhaustive, Sampled };

inline constexpr int kDefaultExhaustiveCap = 14;

// Decides the robust-expansion property. Exhaustive mode checks every
// non-empty U (requires n <= cap) over the full eps range [0, eps_max(U)]
// exactly; sampled mode draws `samples` random subsets with sizes uniform in
// 1..n. Returns the first counterexample in subset order, or a clean
// certificate.
ExpanderCertificate verify_robust_expander(const ColoredGraph& g, VerifyMode mode,
                                           int samples = 0, std::uint64_t seed = 0,
                                           int exhaustive_cap = kDefaultExhaustiveCap);

enum class ExtractMode { Exact, Heuristic };

inline constexpr int kDefaultExactExtractCap = 20;

// Vertex subset maximizing d(G[S])/(ln|S| - 1/3); ties by smaller |S|, then
// lexicographic vertex list. Exact mode enumerates all subsets (n <= 20) and
// attaches an exhaustive certificate when |S| <= 14; heuristic mode hill
// climbs from S = V with min-degree-peeling restarts and attaches a sampled
// certificate. Either way the returned subgraph H satisfies
// d(H) >= ((ln|V(H)| - 1/3)/(ln|V(G)| - 1/3)) d(G), re-checked exactly.
std::pair<InducedSubgraph, ExpanderCertificate> extract_expander(
    const ColoredGraph& g, ExtractMode mode, int samples = 200, std::uint64_t seed = 0);

// d(G[S])/(ln|S| - 1/3) as a double (0 for |S| <= 1 or edgeless S).
double subgraph_ratio(long long edge_count, long long vertex_count);

}  // namespace rainbow
