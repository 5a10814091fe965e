#include "rainbow_forge/rainbow_search.hpp"

#include <algorithm>
#include <sstream>

#include "rainbow_forge/rng.hpp"

namespace rainbow {

bool validate_rainbow_walk(const ColoredGraph& g, const RainbowWalk& walk,
                           const ColorSet* palette) {
    if (walk.vertices.empty()) return false;
    if (walk.colors.size() + 1 != walk.vertices.size()) return false;
    ColorSet seen = g.empty_color_set();
    for (std::size_t i = 0; i < walk.colors.size(); ++i) {
        int c = walk.colors[i];
        if (c < 0 || c >= g.color_count()) return false;
        auto ec = g.color_between(walk.vertices[i], walk.vertices[i + 1]);
        if (!ec || *ec != c) return false;
        if (seen.contains(c)) return false;
        if (palette && !palette->contains(c)) return false;
        seen.insert(c);
    }
    return true;
}

bool validate_rainbow_cycle(const ColoredGraph& g, const RainbowCycle& cycle) {
    int len = cycle.length();
    if (len < 3 || static_cast<int>(cycle.colors.size()) != len) return false;
    std::vector<int> sorted = cycle.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    ColorSet seen = g.empty_color_set();
    for (int i = 0; i < len; ++i) {
        int c = cycle.colors[i];
        if (c < 0 || c >= g.color_count()) return false;
        auto ec = g.color_between(cycle.vertices[i], cycle.vertices[(i + 1) % len]);
        if (!ec || *ec != c) return false;
        if (seen.contains(c)) return false;
        seen.insert(c);
    }
    return true;
}

std::string format_walk(const RainbowWalk& walk) {
    std::ostringstream out;
    for (std::size_t i = 0; i < walk.vertices.size(); ++i) {
        if (i) out << " " << walk.colors[i - 1] << " ";
        out << walk.vertices[i];
    }
    return out.str();
}

RainbowWalk ReachableSet::witness(int v) const {
    if (v < 0 || v >= members_.capacity() || first_node_[v] < 0)
        throw std::invalid_argument("witness: vertex not in reachable set");
    RainbowWalk walk;
    int idx = first_node_[v];
    while (idx >= 0) {
        walk.vertices.push_back(nodes_[idx].vertex);
        if (nodes_[idx].parent >= 0) walk.colors.push_back(nodes_[idx].color);
        idx = nodes_[idx].parent;
    }
    std::reverse(walk.vertices.begin(), walk.vertices.end());
    std::reverse(walk.colors.begin(), walk.colors.end());
    return walk;
}

ReachableSet rainbow_reachable_set(const ColoredGraph& g, int source, const ColorSet& palette,
                                   std::uint64_t state_budget) {
    if (source < 0 || source >= g.vertex_count())
        throw std::invalid_argument("rainbow_reachable_set: source out of range");
    if (palette.capacity() != g.color_count())
        throw std::invalid_argument("rainbow_reachable_set: palette capacity mismatch");

    ReachableSet out;
    out.source_ = source;
    out.palette_ = palette;
    out.members_ = g.empty_vertex_set();
    out.first_node_.assign(static_cast<std::size_t>(g.vertex_count()), -1);

    // per-vertex antichain of minimal used-sets, as node indices
    std::vector<std::vector<int>> kept(static_cast<std::size_t>(g.vertex_count()));

    out.nodes_.push_back({source, g.empty_color_set(), -1, -1});
    kept[source].push_back(0);
    out.first_node_[source] = 0;
    out.members_.insert(source);

    std::vector<int> frontier{0}, next;
    while (!frontier.empty() && !out.truncated_) {
        next.clear();
        for (int idx : frontier) {
            if (out.truncated_) break;
            const int at = out.nodes_[idx].vertex;
            for (const AdjEntry& e : g.adj(at)) {
                if (!palette.contains(e.color)) continue;
                if (out.nodes_[idx].used.contains(e.color)) continue;
                ColorSet used = out.nodes_[idx].used;
                used.insert(e.color);
                bool dominated = false;
                for (int k : kept[e.neighbor]) {
                    if (out.nodes_[k].used.is_subset_of(used)) {
                        dominated = true;
                        break;
                    }
                }
                if (dominated) continue;
                if (out.nodes_.size() >= state_budget) {
                    out.truncated_ = true;
                    break;
                }
                int nidx = static_cast<int>(out.nodes_.size());
                out.nodes_.push_back({e.neighbor, std::move(used), idx, e.color});
                kept[e.neighbor].push_back(nidx);
                if (out.first_node_[e.neighbor] < 0) {
                    out.first_node_[e.neighbor] = nidx;
                    out.members_.insert(e.neighbor);
                }
                next.push_back(nidx);
            }
        }
        frontier.swap(next);
    }
    return out;
}

namespace {

struct CycleDfs {
    const ColoredGraph& g;
    int max_edges;  // cycle length cap
    std::vector<int> path;
    std::vector<char> on_path;
    ColorSet used;
    std::optional<RainbowCycle> found;

    CycleDfs(const ColoredGraph& graph, int cap)
        : g(graph),
          max_edges(cap),
          on_path(static_cast<std::size_t>(graph.vertex_count()), 0),
          used(graph.empty_color_set()) {}

    // extends a simple path rooted at path[0] == min vertex of the cycle
    bool extend(std::vector<int>& path_colors) {
        int cur = path.back();
        int root = path.front();
        for (const AdjEntry& e : g.adj(cur)) {
            if (used.contains(e.color)) continue;
            if (e.neighbor == root && static_cast<int>(path.size()) >= 3) {
                // reflective symmetry: keep the orientation with smaller
                // second vertex
                if (path[1] < path.back()) {
                    RainbowCycle cycle;
                    cycle.vertices = path;
                    cycle.colors = path_colors;
                    cycle.colors.push_back(e.color);
                    found = std::move(cycle);
                    return true;
                }
                continue;
            }
            if (e.neighbor <= root || on_path[e.neighbor]) continue;
            if (static_cast<int>(path.size()) >= max_edges) continue;  // closing would exceed cap
            path.push_back(e.neighbor);
            on_path[e.neighbor] = 1;
            used.insert(e.color);
            path_colors.push_back(e.color);
            if (extend(path_colors)) return true;
            path_colors.pop_back();
            used.erase(e.color);
            on_path[e.neighbor] = 0;
            path.pop_back();
        }
        return false;
    }
};

}  // namespace

ExactCycleSearch rainbow_cycle_exact(const ColoredGraph& g, int max_len) {
    if (max_len < 3) throw std::invalid_argument("rainbow_cycle_exact: max_len >= 3 required");
    ExactCycleSearch result;
    result.searched_up_to = std::min(max_len, g.color_count());
    result.full_certificate = result.searched_up_to >= g.color_count();
    if (result.searched_up_to < 3) return result;

    for (int root = 0; root < g.vertex_count() && !result.cycle; ++root) {
        CycleDfs dfs(g, result.searched_up_to);
        dfs.path.push_back(root);
        dfs.on_path[root] = 1;
        std::vector<int> colors;
        if (dfs.extend(colors)) result.cycle = std::move(dfs.found);
    }
    return result;
}

namespace {

// first simple cycle inside a rainbow closed walk: scan to the first repeated
// vertex and slice out the enclosed segment (it is simple by minimality, and
// at least a triangle since colour repeats are impossible)
RainbowCycle first_cycle_in_closed_walk(const std::vector<int>& verts,
                                        const std::vector<int>& colors, int n) {
    std::vector<int> seen_at(static_cast<std::size_t>(n), -1);
    for (std::size_t j = 0; j < verts.size(); ++j) {
        if (seen_at[verts[j]] >= 0) {
            std::size_t i = static_cast<std::size_t>(seen_at[verts[j]]);
            RainbowCycle cycle;
            cycle.vertices.assign(verts.begin() + i, verts.begin() + j);
            cycle.colors.assign(colors.begin() + i, colors.begin() + j);
            return cycle;
        }
        seen_at[verts[j]] = static_cast<int>(j);
    }
    throw std::logic_error("closed walk without a repeated vertex");
}

}  // namespace

SplitTrial rainbow_cycle_via_split(const ColoredGraph& g, int source, std::uint64_t seed,
                                   std::uint64_t state_budget) {
    if (source < 0 || source >= g.vertex_count())
        throw std::invalid_argument("rainbow_cycle_via_split: source out of range");
    CounterRng rng(seed);
    SplitTrial trial;
    trial.palette = g.empty_color_set();
    for (int c = 0; c < g.color_count(); ++c)
        if (rng.coin()) trial.palette.insert(c);

    ReachableSet first = rainbow_reachable_set(g, source, trial.palette, state_budget);
    ReachableSet second =
        rainbow_reachable_set(g, source, trial.palette.complement(), state_budget);
    trial.truncated = first.truncated() || second.truncated();
    trial.reach_first = first.size();
    trial.reach_second = second.size();

    VertexSet both = first.members() & second.members();
    both.erase(source);
    if (both.empty()) return trial;
    trial.meeting_vertex = both.to_vector().front();

    RainbowWalk out = first.witness(trial.meeting_vertex);
    RainbowWalk back = second.witness(trial.meeting_vertex);

    std::vector<int> verts = out.vertices;
    std::vector<int> colors = out.colors;
    for (int i = static_cast<int>(back.colors.size()) - 1; i >= 0; --i) {
        colors.push_back(back.colors[i]);
        verts.push_back(back.vertices[i]);
    }
    // verts now runs x .. y .. x; the closing x is dropped by the scan below
    RainbowCycle cycle = first_cycle_in_closed_walk(verts, colors, g.vertex_count());
    if (!validate_rainbow_cycle(g, cycle))
        throw std::logic_error("split method produced an invalid cycle");
    trial.cycle = std::move(cycle);
    return trial;
}

BoundaryClassification classify_boundary_edges(const ColoredGraph& g, int source,
                                               const ColorSet& palette,
                                               const ReachableSet& reach,
                                               std::uint64_t state_budget) {
    if (reach.truncated())
        throw std::invalid_argument("classify_boundary_edges: reachable set is truncated");
    if (reach.source() != source || !(reach.palette() == palette))
        throw std::invalid_argument("classify_boundary_edges: reachable set mismatch");

    BoundaryClassification out;
    out.inside = reach.members();
    for (int idx = 0; idx < static_cast<int>(g.edge_count()); ++idx) {
        const auto& e = g.edge(idx);
        bool iu = out.inside.contains(e.u), iv = out.inside.contains(e.v);
        if (iu == iv) continue;
        int v_in = iu ? e.u : e.v;
        ReachableSet sub =
            rainbow_reachable_set(g, source, palette.without(e.color), state_budget);
        if (sub.contains(v_in)) {
            out.tags.emplace_back(idx, BoundaryTag::Blue);
        } else if (sub.truncated()) {
            throw std::runtime_error(
                "classify_boundary_edges: per-edge query truncated; raise the state budget");
        } else {
            out.tags.emplace_back(idx, BoundaryTag::Red);
        }
    }
    return out;
}

namespace {

void check_selection(const ColoredGraph& g, const VertexSet& inside, const Rational& eps,
                     const EdgeSelection& sel) {
    const Rational d = g.average_degree_exact();
    const Rational needed = eps / 7 * d * inside.count();
    if (Rational(static_cast<long long>(sel.edges.size())) < needed)
        throw std::logic_error("red_blue_select: size postcondition violated");
    BigInt dceil = -floor_rational(-d);
    std::vector<long long> deg(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int idx : sel.edges) {
        const auto& e = g.edge(idx);
        bool iu = inside.contains(e.u), iv = inside.contains(e.v);
        if (iu == iv) throw std::logic_error("red_blue_select: non-boundary edge selected");
        int side = sel.kind == EdgeSelection::Kind::Red ? (iu ? e.u : e.v) : (iu ? e.v : e.u);
        if (BigInt(++deg[side]) > dceil)
            throw std::logic_error("red_blue_select: degree cap violated");
    }
}

}  // namespace

EdgeSelection red_blue_select(const ColoredGraph& g, const VertexSet& inside,
                              const BoundaryClassification& tags, const Rational& eps) {
    if (inside.empty()) throw std::invalid_argument("red_blue_select: empty U");
    if (eps < 0 || eps > 1) throw std::invalid_argument("red_blue_select: eps outside [0,1]");

    // tags must cover exactly the boundary edges of U
    std::vector<int> tag_of(static_cast<std::size_t>(g.edge_count()), -1);
    for (const auto& [idx, tag] : tags.tags) {
        const auto& e = g.edge(idx);
        if (inside.contains(e.u) == inside.contains(e.v))
            throw std::invalid_argument("red_blue_select: tag on a non-boundary edge");
        tag_of[idx] = tag == BoundaryTag::Red ? 0 : 1;
    }
    for (int idx = 0; idx < static_cast<int>(g.edge_count()); ++idx) {
        const auto& e = g.edge(idx);
        if (inside.contains(e.u) != inside.contains(e.v) && tag_of[idx] < 0)
            throw std::invalid_argument("red_blue_select: boundary edge without a tag");
    }

    const Rational d = g.average_degree_exact();
    const long long u_size = inside.count();
    const Rational needed = eps / 7 * d * u_size;
    const BigInt dceil_big = -floor_rational(-d);
    const long long dceil = dceil_big.convert_to<long long>();

    std::vector<long long> deg_red(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<long long> deg_blue(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int idx = 0; idx < static_cast<int>(g.edge_count()); ++idx) {
        if (tag_of[idx] < 0) continue;
        const auto& e = g.edge(idx);
        int v_in = inside.contains(e.u) ? e.u : e.v;
        int v_out = inside.contains(e.u) ? e.v : e.u;
        if (tag_of[idx] == 0) ++deg_red[v_in];
        else ++deg_blue[v_out];
    }

    auto finish = [&](EdgeSelection::Kind kind, std::vector<int> edges) {
        EdgeSelection sel;
        sel.kind = kind;
        sel.edges = std::move(edges);
        check_selection(g, inside, eps, sel);
        return sel;
    };

    // stage 1: red edges whose U-endpoint has red degree at most d(G)
    std::vector<int> pick;
    for (int idx = 0; idx < static_cast<int>(g.edge_count()); ++idx) {
        if (tag_of[idx] != 0) continue;
        const auto& e = g.edge(idx);
        int v_in = inside.contains(e.u) ? e.u : e.v;
        if (Rational(deg_red[v_in]) <= d) pick.push_back(idx);
    }
    if (Rational(static_cast<long long>(pick.size())) >= needed)
        return finish(EdgeSelection::Kind::Red, std::move(pick));

    // stage 2: blue edges whose outside endpoint has blue degree at most d(G)
    pick.clear();
    for (int idx = 0; idx < static_cast<int>(g.edge_count()); ++idx) {
        if (tag_of[idx] != 1) continue;
        const auto& e = g.edge(idx);
        int v_out = inside.contains(e.u) ? e.v : e.u;
        if (Rational(deg_blue[v_out]) <= d) pick.push_back(idx);
    }
    if (Rational(static_cast<long long>(pick.size())) >= needed)
        return finish(EdgeSelection::Kind::Blue, std::move(pick));

    // stage 3: vertices of U with red degree at least d(G); take ceil(d) red
    // edges at each
    {
        std::vector<int> heavy;
        for (int v : inside.to_vector())
            if (Rational(deg_red[v]) >= d && deg_red[v] > 0) heavy.push_back(v);
        if (Rational(7) * static_cast<long long>(heavy.size()) >= eps * u_size && d > 0) {
            std::vector<char> is_heavy(static_cast<std::size_t>(g.vertex_count()), 0);
            for (int v : heavy) is_heavy[v] = 1;
            std::vector<long long> taken(static_cast<std::size_t>(g.vertex_count()), 0);
            pick.clear();
            for (int idx = 0; idx < static_cast<int>(g.edge_count()); ++idx) {
                if (tag_of[idx] != 0) continue;
                const auto& e = g.edge(idx);
                int v_in = inside.contains(e.u) ? e.u : e.v;
                if (is_heavy[v_in] && taken[v_in] < dceil) {
                    ++taken[v_in];
                    pick.push_back(idx);
                }
            }
            return finish(EdgeSelection::Kind::Red, std::move(pick));
        }
    }

    // stage 4: outside vertices with blue degree at least d(G); take ceil(d)
    // blue edges at each
    {
        std::vector<int> heavy;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (!inside.contains(v) && Rational(deg_blue[v]) >= d && deg_blue[v] > 0)
                heavy.push_back(v);
        if (Rational(7) * static_cast<long long>(heavy.size()) >= eps * u_size && d > 0) {
            std::vector<char> is_heavy(static_cast<std::size_t>(g.vertex_count()), 0);
            for (int v : heavy) is_heavy[v] = 1;
            std::vector<long long> taken(static_cast<std::size_t>(g.vertex_count()), 0);
            pick.clear();
            for (int idx = 0; idx < static_cast<int>(g.edge_count()); ++idx) {
                if (tag_of[idx] != 1) continue;
                const auto& e = g.edge(idx);
                int v_out = inside.contains(e.u) ? e.v : e.u;
                if (is_heavy[v_out] && taken[v_out] < dceil) {
                    ++taken[v_out];
                    pick.push_back(idx);
                }
            }
            return finish(EdgeSelection::Kind::Blue, std::move(pick));
        }
    }

    return EdgeSelection{};
}

}  // namespace rainbow
