#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "rainbow_forge/rng.hpp"

namespace rainbow::oracles {

namespace {

void walk_rec(const ColoredGraph& g, int at, const ColorSet& palette, ColorSet& used,
              VertexSet& reached) {
    reached.insert(at);
    for (const auto& e : g.adj(at)) {
        if (!palette.contains(e.color) || used.contains(e.color)) continue;
        used.insert(e.color);
        walk_rec(g, e.neighbor, palette, used, reached);
        used.erase(e.color);
    }
}

}  // namespace

VertexSet rainbow_reachable_bruteforce(const ColoredGraph& g, int source,
                                       const ColorSet& palette) {
    VertexSet reached(g.vertex_count());
    ColorSet used = g.empty_color_set();
    walk_rec(g, source, palette, used, reached);
    return reached;
}

namespace {

// enumerate simple cycles rooted at their minimum vertex; callback returns
// true to stop early
bool cycles_rec(const ColoredGraph& g, std::vector<int>& path, std::vector<char>& on_path,
                int max_len, const std::function<bool(const std::vector<int>&)>& cb) {
    int cur = path.back(), root = path.front();
    for (const auto& e : g.adj(cur)) {
        if (e.neighbor == root && static_cast<int>(path.size()) >= 3) {
            if (path[1] < path.back() && cb(path)) return true;
            continue;
        }
        if (e.neighbor <= root || on_path[e.neighbor]) continue;
        if (static_cast<int>(path.size()) >= max_len) continue;
        path.push_back(e.neighbor);
        on_path[e.neighbor] = 1;
        bool stop = cycles_rec(g, path, on_path, max_len, cb);
        on_path[e.neighbor] = 0;
        path.pop_back();
        if (stop) return true;
    }
    return false;
}

bool enumerate_cycles(const ColoredGraph& g, int max_len,
                      const std::function<bool(const std::vector<int>&)>& cb) {
    for (int root = 0; root < g.vertex_count(); ++root) {
        std::vector<int> path{root};
        std::vector<char> on_path(static_cast<std::size_t>(g.vertex_count()), 0);
        on_path[root] = 1;
        if (cycles_rec(g, path, on_path, max_len, cb)) return true;
    }
    return false;
}

}  // namespace

bool rainbow_cycle_exists_bruteforce(const ColoredGraph& g, int max_len) {
    return enumerate_cycles(g, max_len, [&](const std::vector<int>& cyc) {
        std::vector<int> colors;
        int len = static_cast<int>(cyc.size());
        for (int i = 0; i < len; ++i)
            colors.push_back(*g.color_between(cyc[i], cyc[(i + 1) % len]));
        std::sort(colors.begin(), colors.end());
        return std::adjacent_find(colors.begin(), colors.end()) == colors.end();
    });
}

bool almost_rainbow_cycle_exists_bruteforce(const ColoredGraph& g, int r) {
    return enumerate_cycles(g, g.vertex_count(), [&](const std::vector<int>& cyc) {
        std::vector<int> count(static_cast<std::size_t>(g.color_count()), 0);
        int len = static_cast<int>(cyc.size());
        for (int i = 0; i < len; ++i)
            if (++count[*g.color_between(cyc[i], cyc[(i + 1) % len])] > r) return false;
        return true;
    });
}

namespace {

// chooses boundary edges one by one (index increasing), keeping per-neighbour
// counts of surviving edges into U
void curve_rec(const std::vector<int>& owner, std::vector<int>& remaining, int survivors,
               std::size_t next, int chosen, long long f_max,
               std::vector<long long>& curve) {
    if (survivors < curve[chosen]) curve[chosen] = survivors;
    if (chosen == f_max) return;
    for (std::size_t i = next; i < owner.size(); ++i) {
        int w = owner[i];
        int drop = (--remaining[w] == 0) ? 1 : 0;
        curve_rec(owner, remaining, survivors - drop, i + 1, chosen + 1, f_max, curve);
        ++remaining[w];
    }
}

}  // namespace

std::vector<long long> worst_case_curve_bruteforce(const ColoredGraph& g, const VertexSet& u,
                                                   long long f_max) {
    std::vector<int> owner;  // boundary edges as their outside endpoint
    std::vector<int> remaining(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int idx = 0; idx < static_cast<int>(g.edge_count()); ++idx) {
        const auto& e = g.edge(idx);
        bool iu = u.contains(e.u), iv = u.contains(e.v);
        if (iu == iv) continue;
        int w = iu ? e.v : e.u;
        owner.push_back(w);
        ++remaining[w];
    }
    int neighbours = 0;
    for (int v = 0; v < g.vertex_count(); ++v) neighbours += remaining[v] > 0;
    f_max = std::min<long long>(f_max, static_cast<long long>(owner.size()));
    std::vector<long long> curve(static_cast<std::size_t>(f_max) + 1, neighbours);
    curve_rec(owner, remaining, neighbours, 0, 0, f_max, curve);
    for (std::size_t f = 1; f < curve.size(); ++f)
        curve[f] = std::min(curve[f], curve[f - 1]);
    return curve;
}

long long worst_case_neighborhood_bruteforce(const ColoredGraph& g, const VertexSet& u,
                                             long long budget_floor) {
    long long boundary = 0;
    for (int idx = 0; idx < static_cast<int>(g.edge_count()); ++idx) {
        const auto& e = g.edge(idx);
        if (u.contains(e.u) != u.contains(e.v)) ++boundary;
    }
    auto curve = worst_case_curve_bruteforce(g, u, std::min(budget_floor, boundary));
    return curve.back();
}

std::optional<int> girth_bruteforce(const SimpleGraph& g) {
    int best = -1;
    for (const auto& [u, v] : g.edges()) {
        // BFS shortest u-v path avoiding the edge itself
        std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
        std::deque<int> q{u};
        dist[u] = 0;
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            for (int w : g.adj(x)) {
                if ((x == u && w == v) || (x == v && w == u)) continue;
                if (dist[w] < 0) {
                    dist[w] = dist[x] + 1;
                    q.push_back(w);
                }
            }
        }
        if (dist[v] >= 0 && (best < 0 || dist[v] + 1 < best)) best = dist[v] + 1;
    }
    if (best < 0) return std::nullopt;
    return best;
}

namespace {

bool relation_rec(const FiniteGroup& g, const std::vector<FiniteGroup::Elem>& s,
                  std::vector<char>& used, const FiniteGroup::Elem& prod, bool nonempty) {
    if (nonempty && g.is_identity(prod)) return true;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (used[i]) continue;
        used[i] = 1;
        if (relation_rec(g, s, used, g.mul(prod, s[i]), true)) return true;
        if (!g.is_self_inverse(s[i]) &&
            relation_rec(g, s, used, g.mul(prod, g.inv(s[i])), true))
            return true;
        used[i] = 0;
    }
    return false;
}

}  // namespace

bool has_relation_bruteforce(const FiniteGroup& g,
                             const std::vector<FiniteGroup::Elem>& s) {
    std::vector<char> used(s.size(), 0);
    return relation_rec(g, s, used, g.identity(), false);
}

SimpleGraph random_graph(int n, std::uint64_t p_num, std::uint64_t p_den, std::uint64_t seed) {
    CounterRng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.bernoulli(p_num, p_den)) edges.emplace_back(u, v);
    return SimpleGraph(n, std::move(edges));
}

}  // namespace rainbow::oracles
