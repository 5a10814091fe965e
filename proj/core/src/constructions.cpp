#include "rainbow_forge/constructions.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

#include "rainbow_forge/rng.hpp"

namespace rainbow {

ColoredGraph hypercube(int m) {
    if (m < 1 || m > 20) throw std::invalid_argument("hypercube: need 1 <= m <= 20");
    int n = 1 << m;
    std::vector<std::tuple<int, int, long long>> raw;
    raw.reserve(static_cast<std::size_t>(n) * m / 2);
    for (int x = 0; x < n; ++x)
        for (int i = 0; i < m; ++i) {
            int y = x ^ (1 << i);
            if (x < y) raw.emplace_back(x, y, i);
        }
    return ColoredGraph::from_edges(n, raw);
}

ColoredGraph complete_one_factorization(int n) {
    if (n < 4 || n > 2048 || n % 2 != 0)
        throw std::invalid_argument("complete_one_factorization: need even n in [4, 2048]");
    // fix vertex n-1, rotate the others
    std::vector<std::tuple<int, int, long long>> raw;
    raw.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    int k = n - 1;
    for (int round = 0; round < k; ++round) {
        raw.emplace_back(n - 1, round, round);
        for (int i = 1; i <= (n - 2) / 2; ++i) {
            int a = (round + i) % k;
            int b = (round - i + k) % k;
            raw.emplace_back(a, b, round);
        }
    }
    return ColoredGraph::from_edges(n, raw);
}

std::optional<int> exact_girth(const SimpleGraph& g) {
    int n = g.vertex_count();
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(n), parent(n);
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::deque<int> q{root};
        dist[root] = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            if (2 * dist[u] >= best) break;  // deeper layers cannot improve
            for (int w : g.adj(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push_back(w);
                } else if (w != parent[u]) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

bool girth_at_least(const SimpleGraph& g, int g_min) {
    if (g_min <= 3) return true;
    int n = g.vertex_count();
    int depth_cap = (g_min + 1) / 2;
    std::vector<int> dist(n), parent(n);
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::deque<int> q{root};
        dist[root] = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            if (dist[u] >= depth_cap) break;
            for (int w : g.adj(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push_back(w);
                } else if (w != parent[u]) {
                    if (dist[u] + dist[w] + 1 < g_min) return false;
                }
            }
        }
    }
    return true;
}

SimpleGraph random_regular_girth(int n, int d, int min_girth, std::uint64_t seed,
                                 int max_retries) {
    if (d < 2) throw std::invalid_argument("random_regular_girth: need d >= 2");
    if (n < 1 || (static_cast<long long>(n) * d) % 2 != 0)
        throw std::invalid_argument("random_regular_girth: need n*d even");
    if (d >= n) throw std::invalid_argument("random_regular_girth: need d < n");

    CounterRng rng(seed);
    std::vector<int> stubs(static_cast<std::size_t>(n) * d);
    for (int attempt = 1; attempt <= max_retries; ++attempt) {
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < d; ++i) stubs[static_cast<std::size_t>(v) * d + i] = v;
        rng.shuffle(stubs);
        std::vector<std::pair<int, int>> edges;
        edges.reserve(stubs.size() / 2);
        bool ok = true;
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            int a = stubs[i], b = stubs[i + 1];
            if (a == b) {
                ok = false;
                break;
            }
            edges.emplace_back(std::min(a, b), std::max(a, b));
        }
        if (ok) {
            std::sort(edges.begin(), edges.end());
            ok = std::adjacent_find(edges.begin(), edges.end()) == edges.end();
        }
        if (!ok) continue;
        SimpleGraph g(n, edges);
        if (girth_at_least(g, min_girth)) return g;
    }
    throw RetryExhaustedError("random_regular_girth: no simple graph with girth >= " +
                                  std::to_string(min_girth) + " found in " +
                                  std::to_string(max_retries) + " attempts",
                              max_retries);
}

namespace {

// Working state for the fan / alternating-chain edge colourer.
struct Colorer {
    const SimpleGraph& g;
    int palette;                         // max_degree + 1
    std::vector<std::vector<int>> at;   // at[v][c] = edge index with colour c at v, or -1
    std::vector<int> color;             // per edge, -1 while uncoloured

    explicit Colorer(const SimpleGraph& graph)
        : g(graph),
          palette(graph.max_degree() + 1),
          at(static_cast<std::size_t>(graph.vertex_count()),
             std::vector<int>(static_cast<std::size_t>(graph.max_degree() + 1), -1)),
          color(graph.edges().size(), -1) {}

    int other_end(int e, int v) const {
        const auto& [a, b] = g.edges()[e];
        return a == v ? b : a;
    }

    bool is_free(int v, int c) const { return at[v][c] < 0; }

    int smallest_free(int v) const {
        for (int c = 0; c < palette; ++c)
            if (at[v][c] < 0) return c;
        throw std::logic_error("vizing: no free colour in a palette of size max_degree+1");
    }

    void set_color(int e, int c) {
        const auto& [a, b] = g.edges()[e];
        if (color[e] >= 0) {
            at[a][color[e]] = -1;
            at[b][color[e]] = -1;
        }
        color[e] = c;
        if (c >= 0) {
            at[a][c] = e;
            at[b][c] = e;
        }
    }

    // maximal fan of u starting at the uncoloured edge (u, v); returns the
    // fan vertices, smallest-id extension first
    std::vector<int> build_fan(int u, int v) const {
        std::vector<int> fan{v};
        std::vector<char> in_fan(static_cast<std::size_t>(g.vertex_count()), 0);
        in_fan[v] = 1;
        for (;;) {
            int last = fan.back();
            int next = -1;
            for (int w : g.adj(u)) {
                if (in_fan[w]) continue;
                auto e = edge_between(u, w);
                if (color[*e] < 0) continue;
                if (is_free(last, color[*e])) {
                    next = w;
                    break;
                }
            }
            if (next < 0) break;
            fan.push_back(next);
            in_fan[next] = 1;
        }
        return fan;
    }

    std::optional<int> edge_between(int u, int w) const {
        // adjacency is sorted; binary search over edge list via u's smaller id
        int a = std::min(u, w), b = std::max(u, w);
        auto& edges = g.edges();
        auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(a, b));
        if (it == edges.end() || *it != std::make_pair(a, b)) return std::nullopt;
        return static_cast<int>(it - edges.begin());
    }

    // swap colours c and d on the maximal path starting at u's d-edge;
    // uncolour everything first so the intermediate states never alias
    // entries of the at-table
    void invert_path(int u, int c, int d) {
        std::vector<int> path;
        int cur = u, want = d;
        for (;;) {
            int e = at[cur][want];
            if (e < 0) break;
            path.push_back(e);
            cur = other_end(e, cur);
            want = (want == d) ? c : d;
        }
        std::vector<int> flipped(path.size());
        for (std::size_t i = 0; i < path.size(); ++i)
            flipped[i] = color[path[i]] == c ? d : c;
        for (int e : path) set_color(e, -1);
        for (std::size_t i = 0; i < path.size(); ++i) set_color(path[i], flipped[i]);
    }

    void color_edge(int e) {
        int u = g.edges()[e].first, v = g.edges()[e].second;

        // fast path: a colour free at both ends
        for (int c = 0; c < palette; ++c) {
            if (is_free(u, c) && is_free(v, c)) {
                set_color(e, c);
                return;
            }
        }

        std::vector<int> fan = build_fan(u, v);
        int c = smallest_free(u);
        int d = smallest_free(fan.back());
        if (!is_free(u, d)) invert_path(u, c, d);

        // smallest fan prefix that is still a fan under the current colouring
        // and whose tip has d free
        int chosen = -1;
        for (int i = 0; i < static_cast<int>(fan.size()); ++i) {
            if (i >= 1) {
                auto fe = edge_between(u, fan[i]);
                if (color[*fe] < 0 || !is_free(fan[i - 1], color[*fe])) break;
            }
            if (is_free(fan[i], d)) {
                chosen = i;
                break;
            }
        }
        if (chosen < 0) throw std::logic_error("vizing: no rotatable fan prefix");

        for (int j = 0; j < chosen; ++j) {
            int ej = *edge_between(u, fan[j]);
            int enext = *edge_between(u, fan[j + 1]);
            int cnext = color[enext];
            set_color(enext, -1);
            set_color(ej, cnext);
        }
        set_color(*edge_between(u, fan[chosen]), d);
    }
};

}  // namespace

ColoredGraph vizing_color(const SimpleGraph& g) {
    Colorer st(g);
    for (int e = 0; e < static_cast<int>(g.edges().size()); ++e) st.color_edge(e);
    ColoredGraph out = strip_colors_and_recolor(g, st.color);
    if (out.color_count() > g.max_degree() + 1)
        throw std::logic_error("vizing: exceeded max_degree + 1 colours");
    return out;
}

}  // namespace rainbow
