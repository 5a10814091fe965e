#include "rainbow_forge/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace rainbow {

ColoredGraph ColoredGraph::from_edges(int n,
                                      const std::vector<std::tuple<int, int, long long>>& raw) {
    if (n < 0) throw GraphFormatError("negative vertex count");
    ColoredGraph g;
    g.n_ = n;

    // decide the label -> dense id mapping
    std::map<long long, int> label_to_dense;
    bool already_dense = true;
    for (const auto& [u, v, c] : raw) {
        (void)u;
        (void)v;
        if (c < 0 || c >= static_cast<long long>(raw.size())) already_dense = false;
        label_to_dense.emplace(static_cast<long long>(c), -1);
    }
    long long distinct = static_cast<long long>(label_to_dense.size());
    if (already_dense) {
        for (const auto& [label, ignored] : label_to_dense) {
            (void)ignored;
            if (label >= distinct) {
                already_dense = false;
                break;
            }
        }
    }
    if (already_dense) {
        g.color_labels_.resize(static_cast<std::size_t>(distinct));
        for (auto& [label, dense] : label_to_dense) {
            dense = static_cast<int>(label);
            g.color_labels_[static_cast<std::size_t>(label)] = label;
        }
    } else {
        // first-appearance order
        for (auto& [label, dense] : label_to_dense) dense = -1;
        for (const auto& [u, v, c] : raw) {
            (void)u;
            (void)v;
            auto it = label_to_dense.find(c);
            if (it->second < 0) {
                it->second = static_cast<int>(g.color_labels_.size());
                g.color_labels_.push_back(c);
            }
        }
    }
    g.color_count_ = static_cast<int>(g.color_labels_.size());

    g.edges_.reserve(raw.size());
    for (const auto& [a, b, c] : raw) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw GraphFormatError("vertex id out of range: " + std::to_string(a) + " " +
                                   std::to_string(b));
        if (a == b) throw GraphFormatError("self-loop at vertex " + std::to_string(a));
        int u = std::min(a, b), v = std::max(a, b);
        g.edges_.push_back({u, v, label_to_dense.at(c)});
    }
    std::sort(g.edges_.begin(), g.edges_.end(), [](const ColoredEdge& x, const ColoredEdge& y) {
        return std::tie(x.u, x.v) < std::tie(y.u, y.v);
    });
    for (std::size_t i = 1; i < g.edges_.size(); ++i) {
        if (g.edges_[i].u == g.edges_[i - 1].u && g.edges_[i].v == g.edges_[i - 1].v)
            throw GraphFormatError("duplicate edge " + std::to_string(g.edges_[i].u) + "-" +
                                   std::to_string(g.edges_[i].v));
    }

    g.adjacency_.assign(static_cast<std::size_t>(n), {});
    for (int idx = 0; idx < static_cast<int>(g.edges_.size()); ++idx) {
        const auto& e = g.edges_[idx];
        g.adjacency_[e.u].push_back({e.v, e.color, idx});
        g.adjacency_[e.v].push_back({e.u, e.color, idx});
    }
    for (auto& list : g.adjacency_)
        std::sort(list.begin(), list.end(),
                  [](const AdjEntry& x, const AdjEntry& y) { return x.neighbor < y.neighbor; });

    // proper colouring: incident colours pairwise distinct at every vertex
    for (int v = 0; v < n; ++v) {
        std::vector<int> cols;
        cols.reserve(g.adjacency_[v].size());
        for (const auto& e : g.adjacency_[v]) cols.push_back(e.color);
        std::sort(cols.begin(), cols.end());
        for (std::size_t i = 1; i < cols.size(); ++i) {
            if (cols[i] == cols[i - 1])
                throw GraphFormatError("improper colouring at vertex " + std::to_string(v) +
                                       ": two incident edges share colour " +
                                       std::to_string(g.color_labels_[cols[i]]));
        }
    }
    return g;
}

int ColoredGraph::max_degree() const {
    int d = 0;
    for (const auto& list : adjacency_) d = std::max(d, static_cast<int>(list.size()));
    return d;
}

std::optional<int> ColoredGraph::color_between(int u, int v) const {
    auto idx = edge_index_between(u, v);
    if (!idx) return std::nullopt;
    return edges_[*idx].color;
}

std::optional<int> ColoredGraph::edge_index_between(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return std::nullopt;
    const auto& list = adjacency_[u];
    auto it = std::lower_bound(list.begin(), list.end(), v,
                               [](const AdjEntry& e, int t) { return e.neighbor < t; });
    if (it == list.end() || it->neighbor != v) return std::nullopt;
    return it->edge_index;
}

Rational ColoredGraph::average_degree_exact() const {
    if (n_ == 0) return Rational(0);
    return Rational(BigInt(2) * edge_count(), BigInt(n_));
}

double ColoredGraph::average_degree() const {
    if (n_ == 0) return 0.0;
    return 2.0 * static_cast<double>(edge_count()) / static_cast<double>(n_);
}

SimpleGraph::SimpleGraph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n < 0) throw GraphFormatError("negative vertex count");
    for (auto& [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n) throw GraphFormatError("vertex id out of range");
        if (a == b) throw GraphFormatError("self-loop at vertex " + std::to_string(a));
        if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (edges[i] == edges[i - 1]) throw GraphFormatError("duplicate edge");
    edges_ = std::move(edges);
    adjacency_.assign(static_cast<std::size_t>(n), {});
    for (const auto& [u, v] : edges_) {
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

int SimpleGraph::max_degree() const {
    int d = 0;
    for (const auto& list : adjacency_) d = std::max(d, static_cast<int>(list.size()));
    return d;
}

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) {
    return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

}  // namespace

ColoredGraph load_colored_graph(std::istream& in) {
    std::string line;
    long long n = -1, m = -1, c = -1;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = strip_comment(line);
        if (blank(body)) continue;
        std::istringstream hdr(body);
        if (!(hdr >> n >> m >> c) || n < 0 || m < 0 || c < 0)
            throw GraphFormatError("line " + std::to_string(lineno) + ": malformed header");
        std::string extra;
        if (hdr >> extra)
            throw GraphFormatError("line " + std::to_string(lineno) + ": trailing tokens in header");
        break;
    }
    if (n < 0) throw GraphFormatError("missing header line \"n m C\"");

    std::vector<std::tuple<int, int, long long>> raw;
    raw.reserve(static_cast<std::size_t>(m));
    while (static_cast<long long>(raw.size()) < m && std::getline(in, line)) {
        ++lineno;
        std::string body = strip_comment(line);
        if (blank(body)) continue;
        std::istringstream ls(body);
        long long u, v, col;
        if (!(ls >> u >> v >> col))
            throw GraphFormatError("line " + std::to_string(lineno) + ": malformed edge line");
        std::string extra;
        if (ls >> extra)
            throw GraphFormatError("line " + std::to_string(lineno) + ": trailing tokens");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw GraphFormatError("line " + std::to_string(lineno) + ": vertex id out of range");
        raw.emplace_back(static_cast<int>(u), static_cast<int>(v), col);
    }
    if (static_cast<long long>(raw.size()) != m)
        throw GraphFormatError("expected " + std::to_string(m) + " edges, found " +
                               std::to_string(raw.size()));
    ColoredGraph g = ColoredGraph::from_edges(static_cast<int>(n), raw);
    if (g.color_count() != c)
        throw GraphFormatError("header declares " + std::to_string(c) + " colours, edges use " +
                               std::to_string(g.color_count()));
    return g;
}

ColoredGraph load_colored_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GraphFormatError("cannot open " + path);
    return load_colored_graph(in);
}

ColoredGraph parse_colored_graph(const std::string& text) {
    std::istringstream in(text);
    return load_colored_graph(in);
}

void save_colored_graph(const ColoredGraph& g, std::ostream& out,
                        const std::vector<std::string>& comment_lines) {
    for (const auto& cl : comment_lines) out << "# " << cl << "\n";
    out << g.vertex_count() << " " << g.edge_count() << " " << g.color_count() << "\n";
    for (const auto& e : g.edges()) out << e.u << " " << e.v << " " << e.color << "\n";
}

std::string format_colored_graph(const ColoredGraph& g,
                                 const std::vector<std::string>& comment_lines) {
    std::ostringstream out;
    save_colored_graph(g, out, comment_lines);
    return out.str();
}

VertexSet neighborhood_minus(const ColoredGraph& g, const VertexSet& u, const EdgeSet& f) {
    if (u.capacity() != g.vertex_count())
        throw std::invalid_argument("neighborhood_minus: U capacity mismatch");
    if (f.capacity() != static_cast<int>(g.edge_count()))
        throw std::invalid_argument("neighborhood_minus: F capacity mismatch");
    VertexSet out(g.vertex_count());
    for (int idx = 0; idx < static_cast<int>(g.edge_count()); ++idx) {
        if (f.contains(idx)) continue;
        const auto& e = g.edge(idx);
        bool iu = u.contains(e.u), iv = u.contains(e.v);
        if (iu && !iv) out.insert(e.v);
        if (iv && !iu) out.insert(e.u);
    }
    return out;
}

EdgeSet edge_set_from_pairs(const ColoredGraph& g,
                            const std::vector<std::pair<int, int>>& pairs) {
    EdgeSet f = g.empty_edge_set();
    for (const auto& [u, v] : pairs) {
        auto idx = g.edge_index_between(u, v);
        if (!idx)
            throw std::invalid_argument("edge set contains non-edge " + std::to_string(u) + "-" +
                                        std::to_string(v));
        f.insert(*idx);
    }
    return f;
}

InducedSubgraph induced_subgraph(const ColoredGraph& g, const VertexSet& s) {
    if (s.capacity() != g.vertex_count())
        throw std::invalid_argument("induced_subgraph: capacity mismatch");
    if (s.empty()) throw std::invalid_argument("induced_subgraph: empty vertex set");
    InducedSubgraph out;
    out.vertex_map = s.to_vector();
    std::vector<int> old_to_new(static_cast<std::size_t>(g.vertex_count()), -1);
    for (int i = 0; i < static_cast<int>(out.vertex_map.size()); ++i)
        old_to_new[out.vertex_map[i]] = i;

    // surviving colours keep their relative order, so S = V(G) maps colours
    // identically
    std::vector<int> color_new(static_cast<std::size_t>(g.color_count()), -1);
    for (const auto& e : g.edges())
        if (old_to_new[e.u] >= 0 && old_to_new[e.v] >= 0) color_new[e.color] = 0;
    for (int c = 0; c < g.color_count(); ++c) {
        if (color_new[c] < 0) continue;
        color_new[c] = static_cast<int>(out.color_map.size());
        out.color_map.push_back(c);
    }
    std::vector<std::tuple<int, int, long long>> raw;
    for (const auto& e : g.edges()) {
        if (old_to_new[e.u] < 0 || old_to_new[e.v] < 0) continue;
        raw.emplace_back(old_to_new[e.u], old_to_new[e.v], color_new[e.color]);
    }
    out.graph = ColoredGraph::from_edges(static_cast<int>(out.vertex_map.size()), raw);
    return out;
}

std::optional<std::pair<int, int>> find_properness_violation(const ColoredGraph& g) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& list = g.adj(v);
        for (std::size_t i = 0; i < list.size(); ++i)
            for (std::size_t j = i + 1; j < list.size(); ++j)
                if (list[i].color == list[j].color) return std::make_pair(v, list[i].color);
    }
    return std::nullopt;
}

ColoredGraph strip_colors_and_recolor(const SimpleGraph& g,
                                      const std::vector<int>& edge_colors) {
    if (edge_colors.size() != g.edges().size())
        throw std::invalid_argument("strip_colors_and_recolor: colour count mismatch");
    std::vector<std::tuple<int, int, long long>> raw;
    raw.reserve(g.edges().size());
    for (std::size_t i = 0; i < g.edges().size(); ++i)
        raw.emplace_back(g.edges()[i].first, g.edges()[i].second, edge_colors[i]);
    return ColoredGraph::from_edges(g.vertex_count(), raw);
}

SimpleGraph to_simple_graph(const ColoredGraph& g) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(g.edge_count()));
    for (const auto& e : g.edges()) edges.emplace_back(e.u, e.v);
    return SimpleGraph(g.vertex_count(), std::move(edges));
}

}  // namespace rainbow
