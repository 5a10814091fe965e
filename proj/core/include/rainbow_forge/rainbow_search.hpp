#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rainbow_forge/exact_math.hpp"
#include "rainbow_forge/graph.hpp"

namespace rainbow {

// Walk whose edges carry pairwise distinct colours; colors[i] belongs to the
// edge (vertices[i], vertices[i+1]).
struct RainbowWalk {
    std::vector<int> vertices;
    std::vector<int> colors;

    int endpoint() const { return vertices.back(); }
    int length() const { return static_cast<int>(colors.size()); }
};

// Simple cycle v_0 .. v_{L-1}; colors[i] belongs to (v_i, v_{(i+1) mod L}).
struct RainbowCycle {
    std::vector<int> vertices;
    std::vector<int> colors;

    int length() const { return static_cast<int>(vertices.size()); }
};

bool validate_rainbow_walk(const ColoredGraph& g, const RainbowWalk& walk,
                           const ColorSet* palette = nullptr);
bool validate_rainbow_cycle(const ColoredGraph& g, const RainbowCycle& cycle);

// "v0 c1 v1 c2 ... v_l" (walks) used in result records.
std::string format_walk(const RainbowWalk& walk);

inline constexpr std::uint64_t kDefaultStateBudget = 1'000'000;

// Set of vertices reachable from `source` by rainbow walks with colours in
// `palette`, together with one witness walk per member. When the state
// budget runs out, `truncated` is set and the members form a lower bound
// (a subset of the true reachable set) - never an overestimate.
class ReachableSet {
public:
    int source() const { return source_; }
    const ColorSet& palette() const { return palette_; }
    const VertexSet& members() const { return members_; }
    bool truncated() const { return truncated_; }
    std::uint64_t states_kept() const { return static_cast<std::uint64_t>(nodes_.size()); }
    int size() const { return members_.count(); }

    bool contains(int v) const { return members_.contains(v); }
    RainbowWalk witness(int v) const;

private:
    friend ReachableSet rainbow_reachable_set(const ColoredGraph&, int, const ColorSet&,
                                              std::uint64_t);
    struct Node {
        int vertex;
        ColorSet used;
        int parent;
        int color;
    };
    int source_ = 0;
    ColorSet palette_;
    VertexSet members_;
    bool truncated_ = false;
    std::vector<Node> nodes_;
    std::vector<int> first_node_;  // per vertex, -1 if unreached
};

// Breadth-first search over (vertex, used-colour-set) states with dominance
// pruning: a state is dropped when an already-kept state at the same vertex
// uses a subset of its colours.
ReachableSet rainbow_reachable_set(const ColoredGraph& g, int source, const ColorSet& palette,
                                   std::uint64_t state_budget = kDefaultStateBudget);

struct ExactCycleSearch {
    std::optional<RainbowCycle> cycle;
    int searched_up_to = 0;    // cycle lengths covered by the search
    bool full_certificate = false;  // searched_up_to >= colour count
};

// Depth-first enumeration of simple rainbow cycles of length at most
// min(max_len, C), rooted at each vertex in increasing id to kill cyclic and
// reflective symmetry. A rainbow cycle has at most C edges, so
// max_len >= C certifies absence outright.
ExactCycleSearch rainbow_cycle_exact(const ColoredGraph& g, int max_len);

struct SplitTrial {
    ColorSet palette;                 // the sampled half
    std::optional<RainbowCycle> cycle;
    int meeting_vertex = -1;          // y != x in both reachable sets, -1 if none
    bool truncated = false;           // either reachability hit the state budget
    int reach_first = 0, reach_second = 0;
};

// One trial of the colour-splitting method: sample half the palette, grow
// both reachable sets, and splice a rainbow cycle out of the closed walk when
// they meet beyond the source.
SplitTrial rainbow_cycle_via_split(const ColoredGraph& g, int source, std::uint64_t seed,
                                   std::uint64_t state_budget = kDefaultStateBudget);

enum class BoundaryTag { Red, Blue };

// Red/blue tags on the edges between U and its complement. An edge (v, v')
// with v inside is blue when v stays reachable after removing the edge's
// colour from the palette, red otherwise.
struct BoundaryClassification {
    VertexSet inside;
    std::vector<std::pair<int, BoundaryTag>> tags;  // (edge index, tag), every boundary edge
};

BoundaryClassification classify_boundary_edges(const ColoredGraph& g, int source,
                                               const ColorSet& palette,
                                               const ReachableSet& reach,
                                               std::uint64_t state_budget = kDefaultStateBudget);

struct EdgeSelection {
    enum class Kind { Red, Blue, ExpansionViolation };
    Kind kind = Kind::ExpansionViolation;
    std::vector<int> edges;  // edge indices into the host graph
};

// Four-stage selection over a red/blue boundary colouring: returns a red set
// with the degree cap on the U side, or a blue set with the cap on the
// outside, each of size at least (eps/7) d(G) |U|; ExpansionViolation signals
// the input was not an expander with |U| <= n^(1-eps). Size and degree
// postconditions are re-checked on every return.
EdgeSelection red_blue_select(const ColoredGraph& g, const VertexSet& inside,
                              const BoundaryClassification& tags, const Rational& eps);

}  // namespace rainbow
