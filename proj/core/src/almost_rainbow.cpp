#include "rainbow_forge/almost_rainbow.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

#include "rainbow_forge/constructions.hpp"

namespace rainbow {

PeelResult peel_to_min_degree(const ColoredGraph& g, int threshold) {
    if (threshold < 0) throw std::invalid_argument("peel_to_min_degree: negative threshold");
    std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()));
    std::vector<char> removed(static_cast<std::size_t>(g.vertex_count()), 0);
    std::deque<int> queue;
    for (int v = 0; v < g.vertex_count(); ++v) {
        deg[v] = g.degree(v);
        if (deg[v] <= threshold) {
            removed[v] = 1;
            queue.push_back(v);
        }
    }
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (const auto& e : g.adj(v)) {
            if (removed[e.neighbor]) continue;
            if (--deg[e.neighbor] <= threshold) {
                removed[e.neighbor] = 1;
                queue.push_back(e.neighbor);
            }
        }
    }
    VertexSet keep(g.vertex_count());
    int kept = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!removed[v]) {
            keep.insert(v);
            ++kept;
        }
    PeelResult out;
    if (kept == 0) {
        out.graph = ColoredGraph::from_edges(0, {});
        return out;
    }
    InducedSubgraph sub = induced_subgraph(g, keep);
    out.graph = std::move(sub.graph);
    out.vertex_map = std::move(sub.vertex_map);
    out.color_map = std::move(sub.color_map);
    return out;
}

bool validate_almost_rainbow_cycle(const ColoredGraph& g, const AlmostRainbowCycle& cycle,
                                   int r) {
    int len = static_cast<int>(cycle.vertices.size());
    if (len < 3 || static_cast<int>(cycle.colors.size()) != len) return false;
    std::vector<int> sorted = cycle.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    std::map<int, int> mult;
    for (int i = 0; i < len; ++i) {
        auto c = g.color_between(cycle.vertices[i], cycle.vertices[(i + 1) % len]);
        if (!c || *c != cycle.colors[i]) return false;
        if (++mult[*c] > r) return false;
    }
    return mult == cycle.color_multiplicity;
}

namespace {

struct SeqNode {
    int endpoint;
    int parent;  // index into the node pool, -1 for the root
    int color;   // colour of the edge that extended the parent
};

int count_color_on_chain(const std::vector<SeqNode>& pool, int node, int color) {
    int count = 0;
    while (node >= 0) {
        if (pool[node].color == color) ++count;
        node = pool[node].parent;
    }
    return count;
}

// union of the two walks' edge sets; walks are parent chains in the pool
std::set<std::pair<int, int>> walk_edge_union(const ColoredGraph& g,
                                              const std::vector<SeqNode>& pool, int a, int b) {
    std::set<std::pair<int, int>> edges;
    for (int node : {a, b}) {
        int cur = node;
        while (pool[cur].parent >= 0) {
            int u = pool[cur].endpoint;
            int v = pool[pool[cur].parent].endpoint;
            edges.emplace(std::min(u, v), std::max(u, v));
            cur = pool[cur].parent;
        }
    }
    (void)g;
    return edges;
}

// any simple cycle in an edge set known to contain one: prune degree-one
// vertices, then walk never reusing the arrival edge until a vertex repeats
std::optional<std::vector<int>> simple_cycle_in_union(
    int n, const std::set<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const auto& [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::deque<int> leaves;
    for (int v = 0; v < n; ++v) {
        deg[v] = static_cast<int>(adj[v].size());
        if (deg[v] == 1) leaves.push_back(v);
    }
    std::vector<char> gone(static_cast<std::size_t>(n), 0);
    while (!leaves.empty()) {
        int v = leaves.front();
        leaves.pop_front();
        gone[v] = 1;
        for (int w : adj[v])
            if (!gone[w] && --deg[w] == 1) leaves.push_back(w);
    }
    int start = -1;
    for (int v = 0; v < n && start < 0; ++v)
        if (!gone[v] && deg[v] >= 2) start = v;
    if (start < 0) return std::nullopt;

    std::vector<int> stack{start};
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    pos[start] = 0;
    int prev = -1;
    for (;;) {
        int cur = stack.back();
        int next = -1;
        for (int w : adj[cur]) {
            if (gone[w] || w == prev) continue;
            next = w;
            break;
        }
        if (next < 0) return std::nullopt;  // cannot happen with min degree 2
        if (pos[next] >= 0) {
            std::vector<int> cycle(stack.begin() + pos[next], stack.end());
            return cycle;
        }
        pos[next] = static_cast<int>(stack.size());
        stack.push_back(next);
        prev = cur;
    }
}

}  // namespace

FinderResult find_almost_rainbow_cycle(const ColoredGraph& g, int r,
                                       std::optional<int> degree_override,
                                       std::uint64_t max_sequences) {
    if (r < 2) throw std::invalid_argument("find_almost_rainbow_cycle: r >= 2 required");
    FinderResult result;

    int d;
    bool formula_mode = false;
    double ratio = std::log(static_cast<double>(std::max(2, g.vertex_count()))) / r;
    if (degree_override) {
        d = *degree_override;
    } else if (ratio > std::exp(1.0)) {
        d = 16 * static_cast<int>(std::ceil(ratio / std::log(ratio)));
        formula_mode = true;
    } else {
        throw std::invalid_argument(
            "find_almost_rainbow_cycle: (ln n)/r <= e; supply a degree threshold");
    }
    result.degree_threshold = d;

    PeelResult peeled = peel_to_min_degree(g, d);
    if (peeled.graph.vertex_count() == 0) {
        result.status = FinderStatus::EmptyPeel;
        return result;
    }
    const ColoredGraph& h = peeled.graph;

    const int half_r = r / 2;
    // With the formula's d a collision is guaranteed within sequences of
    // length (d/2) * floor(r/2). A caller-supplied d gives no such horizon,
    // so the search runs to the absolute one (every colour saturated) under
    // the sequence budget.
    const long long len_cap_twice =
        formula_mode ? static_cast<long long>(d) * half_r
                     : 2ll * half_r * h.color_count();

    std::vector<SeqNode> pool;
    pool.push_back({0, -1, -1});
    std::vector<int> first_at(static_cast<std::size_t>(h.vertex_count()), -1);
    first_at[0] = 0;

    std::vector<int> frontier{0}, next;
    long long depth = 0;
    auto finish_with_collision = [&](int a, int b) {
        auto edges = walk_edge_union(h, pool, a, b);
        auto cyc = simple_cycle_in_union(h.vertex_count(), edges);
        if (!cyc)
            throw std::logic_error(
                "find_almost_rainbow_cycle: colliding walks spanned a tree");
        AlmostRainbowCycle cycle;
        cycle.max_repeats = r;
        int len = static_cast<int>(cyc->size());
        for (int i = 0; i < len; ++i) {
            int u = (*cyc)[i], v = (*cyc)[(i + 1) % len];
            int c = *h.color_between(u, v);
            cycle.vertices.push_back(peeled.vertex_map[u]);
            cycle.colors.push_back(peeled.color_map[c]);
        }
        for (int c : cycle.colors) ++cycle.color_multiplicity[c];
        if (!validate_almost_rainbow_cycle(g, cycle, r))
            throw std::logic_error("find_almost_rainbow_cycle: invalid cycle assembled");
        result.cycle = std::move(cycle);
        result.status = FinderStatus::Found;
        return result;
    };

    while (!frontier.empty() && 2 * (depth + 1) <= len_cap_twice) {
        next.clear();
        for (int idx : frontier) {
            int at = pool[idx].endpoint;
            int last_color = pool[idx].color;
            for (const auto& e : h.adj(at)) {
                if (e.color == last_color) continue;
                if (count_color_on_chain(pool, idx, e.color) >= half_r) continue;
                if (pool.size() >= max_sequences) {
                    result.status = FinderStatus::BudgetExceeded;
                    result.sequences_explored = pool.size();
                    return result;
                }
                int nidx = static_cast<int>(pool.size());
                pool.push_back({e.neighbor, idx, e.color});
                if (first_at[e.neighbor] >= 0)
                    return finish_with_collision(first_at[e.neighbor], nidx);
                first_at[e.neighbor] = nidx;
                next.push_back(nidx);
            }
        }
        frontier.swap(next);
        ++depth;
    }
    result.status = FinderStatus::Exhausted;
    result.sequences_explored = pool.size();
    return result;
}

ColoredGraph construct_almost_rainbow_lower_bound(int d, int r, int n, std::uint64_t seed,
                                                  int max_retries) {
    if (d < 2 || r < 2) throw std::invalid_argument("lower bound: need d >= 2 and r >= 2");
    if (n % 2 != 0) throw std::invalid_argument("lower bound: need even n");
    int min_girth = (d + 1) * r + 1;
    SimpleGraph base = random_regular_girth(n, d, min_girth, seed, max_retries);
    ColoredGraph out = vizing_color(base);

    for (int v = 0; v < out.vertex_count(); ++v)
        if (out.degree(v) != d) throw std::logic_error("lower bound: not d-regular");
    if (out.color_count() > d + 1)
        throw std::logic_error("lower bound: more than d+1 colours");
    if (!girth_at_least(to_simple_graph(out), min_girth))
        throw std::logic_error("lower bound: girth dropped below (d+1)r+1");
    return out;
}

namespace {

std::uint64_t count_rec(const ColoredGraph& h, int at, int last_color,
                        std::vector<int>& color_count, int half_r, int remaining,
                        std::vector<std::uint64_t>& per_length, int length,
                        std::uint64_t cap, std::uint64_t& total) {
    per_length[length] += 1;
    ++total;
    if (total > cap) throw std::runtime_error("count_admissible_sequences: cap exceeded");
    if (remaining == 0) return 1;
    std::uint64_t sum = 1;
    for (const auto& e : h.adj(at)) {
        if (e.color == last_color) continue;
        if (color_count[e.color] >= half_r) continue;
        ++color_count[e.color];
        sum += count_rec(h, e.neighbor, e.color, color_count, half_r, remaining - 1,
                         per_length, length + 1, cap, total);
        --color_count[e.color];
    }
    return sum;
}

}  // namespace

std::vector<std::uint64_t> count_admissible_sequences(const ColoredGraph& peeled, int root,
                                                      int r, int max_len, std::uint64_t cap) {
    std::vector<std::uint64_t> per_length(static_cast<std::size_t>(max_len) + 1, 0);
    std::vector<int> color_count(static_cast<std::size_t>(peeled.color_count()), 0);
    std::uint64_t total = 0;
    count_rec(peeled, root, -1, color_count, r / 2, max_len, per_length, 0, cap, total);
    return per_length;
}

}  // namespace rainbow
