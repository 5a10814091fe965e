#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "rainbow_forge/exact_math.hpp"
#include "rainbow_forge/index_set.hpp"

namespace rainbow {

struct GraphFormatError : std::runtime_error {
    explicit GraphFormatError(const std::string& what) : std::runtime_error(what) {}
};

struct ColoredEdge {
    int u, v;   // u < v
    int color;  // dense id in 0..C-1
};

struct AdjEntry {
    int neighbor;
    int color;
    int edge_index;
};

// Simple undirected graph with a proper edge colouring over dense colour ids
// 0..C-1 (every id used by at least one edge). Immutable after construction;
// all accessors are safe for concurrent readers.
class ColoredGraph {
public:
    // Builds a graph from (u, v, colour label) triples. Colour labels may be
    // arbitrary integers; they are densified in first-appearance order unless
    // they already form exactly {0..C-1}, in which case they are kept as-is
    // (this keeps save/load round trips identical). Throws GraphFormatError
    // on self-loops, repeated vertex pairs, out-of-range vertex ids, or an
    // improper colouring.
    static ColoredGraph from_edges(int n, const std::vector<std::tuple<int, int, long long>>& raw);

    int vertex_count() const { return n_; }
    int color_count() const { return color_count_; }
    long long edge_count() const { return static_cast<long long>(edges_.size()); }

    const std::vector<ColoredEdge>& edges() const { return edges_; }
    const ColoredEdge& edge(int idx) const { return edges_[idx]; }
    const std::vector<AdjEntry>& adj(int v) const { return adjacency_[v]; }
    int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
    int max_degree() const;

    // original colour label for a dense colour id
    long long color_label(int dense_id) const { return color_labels_[dense_id]; }

    // dense colour of the edge between u and v, or nullopt if not adjacent
    std::optional<int> color_between(int u, int v) const;
    std::optional<int> edge_index_between(int u, int v) const;

    Rational average_degree_exact() const;  // 2|E|/n
    double average_degree() const;

    VertexSet empty_vertex_set() const { return VertexSet(n_); }
    ColorSet empty_color_set() const { return ColorSet(color_count_); }
    ColorSet full_color_set() const { return ColorSet::full(color_count_); }
    EdgeSet empty_edge_set() const { return EdgeSet(static_cast<int>(edges_.size())); }

private:
    int n_ = 0;
    int color_count_ = 0;
    std::vector<ColoredEdge> edges_;             // sorted by (u, v)
    std::vector<std::vector<AdjEntry>> adjacency_;  // each sorted by neighbor
    std::vector<long long> color_labels_;        // dense id -> original label
};

// Uncoloured simple graph, used by the generators and the edge colourer.
class SimpleGraph {
public:
    SimpleGraph() = default;
    SimpleGraph(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    long long edge_count() const { return static_cast<long long>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& adj(int v) const { return adjacency_[v]; }
    int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
    int max_degree() const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;  // u < v, sorted
    std::vector<std::vector<int>> adjacency_;
};

// Colored-edge-list text format. First line "n m C"; then m lines "u v c"
// with 0-indexed ids; '#' starts a comment line. Writers emit edges sorted
// by (u, v) using the graph's dense colour ids.
ColoredGraph load_colored_graph(std::istream& in);
ColoredGraph load_colored_graph_file(const std::string& path);
ColoredGraph parse_colored_graph(const std::string& text);
void save_colored_graph(const ColoredGraph& g, std::ostream& out,
                        const std::vector<std::string>& comment_lines = {});
std::string format_colored_graph(const ColoredGraph& g,
                                 const std::vector<std::string>& comment_lines = {});

// Vertices outside U adjacent to U via an edge not in F.
VertexSet neighborhood_minus(const ColoredGraph& g, const VertexSet& u, const EdgeSet& f);

// Builds an EdgeSet from explicit vertex pairs; throws if a pair is not an edge.
EdgeSet edge_set_from_pairs(const ColoredGraph& g,
                            const std::vector<std::pair<int, int>>& pairs);

struct InducedSubgraph {
    ColoredGraph graph;
    std::vector<int> vertex_map;  // new id -> old id
    std::vector<int> color_map;   // new dense colour -> old dense colour
};

// Graph induced on a non-empty vertex subset, with colours re-densified.
InducedSubgraph induced_subgraph(const ColoredGraph& g, const VertexSet& s);

// Defensive re-check of the proper-colouring invariant. Returns the
// offending (vertex, colour) pair if two incident edges share a colour.
std::optional<std::pair<int, int>> find_properness_violation(const ColoredGraph& g);

ColoredGraph strip_colors_and_recolor(const SimpleGraph& g,
                                      const std::vector<int>& edge_colors);
SimpleGraph to_simple_graph(const ColoredGraph& g);

}  // namespace rainbow
