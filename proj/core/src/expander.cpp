#include "rainbow_forge/expander.hpp"

#include <algorithm>
#include <cmath>

#include "rainbow_forge/rng.hpp"

namespace rainbow {

namespace {

// Edge bundles of the neighbours of U: bundle[w] = edges joining w to U.
// Deleting a strict subset of a bundle never removes w from the
// neighbourhood, so an optimal adversary deletes whole bundles, cheapest
// first.
struct Bundles {
    std::vector<int> owner;                  // neighbour vertex per bundle
    std::vector<std::vector<int>> edges;     // edge indices per bundle
    std::vector<int> order;                  // bundle ids sorted by ascending size
};

Bundles collect_bundles(const ColoredGraph& g, const VertexSet& u) {
    Bundles b;
    std::vector<int> bundle_of(static_cast<std::size_t>(g.vertex_count()), -1);
    for (int idx = 0; idx < static_cast<int>(g.edge_count()); ++idx) {
        const auto& e = g.edge(idx);
        bool iu = u.contains(e.u), iv = u.contains(e.v);
        if (iu == iv) continue;
        int w = iu ? e.v : e.u;
        if (bundle_of[w] < 0) {
            bundle_of[w] = static_cast<int>(b.owner.size());
            b.owner.push_back(w);
            b.edges.emplace_back();
        }
        b.edges[bundle_of[w]].push_back(idx);
    }
    b.order.resize(b.owner.size());
    for (std::size_t i = 0; i < b.order.size(); ++i) b.order[i] = static_cast<int>(i);
    std::sort(b.order.begin(), b.order.end(), [&](int x, int y) {
        if (b.edges[x].size() != b.edges[y].size()) return b.edges[x].size() < b.edges[y].size();
        return b.owner[x] < b.owner[y];
    });
    return b;
}

// survivors after greedily deleting whole bundles within an integer budget
long long greedy_survivors(const Bundles& b, long long budget_floor,
                           std::vector<int>* deleted = nullptr) {
    long long used = 0, removed = 0;
    for (int id : b.order) {
        long long size = static_cast<long long>(b.edges[id].size());
        if (used + size > budget_floor) break;
        used += size;
        ++removed;
        if (deleted) deleted->insert(deleted->end(), b.edges[id].begin(), b.edges[id].end());
    }
    return static_cast<long long>(b.owner.size()) - removed;
}

}  // namespace

long long worst_case_neighborhood(const ColoredGraph& g, const VertexSet& u,
                                  const Rational& budget) {
    if (u.capacity() != g.vertex_count())
        throw std::invalid_argument("worst_case_neighborhood: capacity mismatch");
    if (u.empty()) throw std::invalid_argument("worst_case_neighborhood: empty U");
    if (budget < 0) throw std::invalid_argument("worst_case_neighborhood: negative budget");
    Bundles b = collect_bundles(g, u);
    long long budget_floor = floor_rational(budget).convert_to<long long>();
    return greedy_survivors(b, budget_floor);
}

namespace {

double eps_max_value(long long u, long long n) {
    if (u <= 1 || n <= 1) return 1.0;
    return 1.0 - std::log(static_cast<double>(u)) / std::log(static_cast<double>(n));
}

// Exact robustness decision for one subset U over every eps in
// [0, eps_max(U)]. With d = 2m/n, the eps axis splits at the rationals
// eps_f = 3 f n / (2 m u) where the integer deletion budget steps to f; on
// each piece the binding requirement is the one at its right end, so the
// whole continuum reduces to:
//   achieved(f) * 2m >= (f+1) * n          for f = 0 .. F_top - 1
//   3 * achieved(F_top) / u >= eps_max(U)  (compared via u, n powers)
// where F_top = max{f : eps_f <= eps_max(U)}.
bool check_subset(const ColoredGraph& g, const VertexSet& u,
                  std::optional<ExpansionCounterexample>* counterexample) {
    const long long n = g.vertex_count();
    const long long m = g.edge_count();
    const long long usz = u.count();
    Bundles b = collect_bundles(g, u);

    auto fail = [&](long long f, bool at_eps_max, const Rational& eps, double eps_val) {
        if (!counterexample) return;
        ExpansionCounterexample cx;
        cx.witness_set = u.to_vector();
        cx.eps_is_exact_max = at_eps_max;
        cx.eps = eps;
        cx.eps_value = eps_val;
        cx.deletion_floor = f;
        cx.achieved = greedy_survivors(b, f, &cx.deleted_edges);
        cx.required = eps_val / 3.0 * static_cast<double>(usz);
        *counterexample = std::move(cx);
    };

    if (m == 0) {
        // budget is 0 at every eps; only the eps_max comparison remains
        long long a = static_cast<long long>(b.owner.size());
        if (cmp_eps_threshold(Rational(3 * a, usz), usz, n) >= 0) return true;
        fail(0, true, Rational(0), eps_max_value(usz, n));
        return false;
    }

    // F_top: largest f with 3 f n <= eps_max * 2 m u
    long long f_top = 0;
    while (cmp_eps_threshold(Rational(3 * (f_top + 1) * n, 2 * m * usz), usz, n) <= 0) ++f_top;

    for (long long f = 0; f < f_top; ++f) {
        long long a = greedy_survivors(b, f);
        if (a * 2 * m >= (f + 1) * n) continue;
        // fails for eps just below eps_{f+1}; report a rational eps inside
        // the failing range
        Rational eps_low = std::max(Rational(3 * f * n, 2 * m * usz), Rational(3 * a, usz));
        Rational eps_hi = Rational(3 * (f + 1) * n, 2 * m * usz);
        Rational eps_wit = (eps_low + eps_hi) / 2;
        fail(f, false, eps_wit, to_double(eps_wit));
        return false;
    }

    long long a_top = greedy_survivors(b, f_top);
    if (cmp_eps_threshold(Rational(3 * a_top, usz), usz, n) >= 0) return true;
    fail(f_top, true, Rational(0), eps_max_value(usz, n));
    return false;
}

const char* kCheckRule =
    "exact over eps in [0, 1-ln|U|/ln n]: integer deletion thresholds f=0..F_top, "
    "then the eps_max comparison";

}  // namespace

double subgraph_ratio(long long edge_count, long long vertex_count) {
    if (vertex_count <= 1 || edge_count == 0) return 0.0;
    double d = 2.0 * static_cast<double>(edge_count) / static_cast<double>(vertex_count);
    return d / (std::log(static_cast<double>(vertex_count)) - 1.0 / 3.0);
}

ExpanderCertificate verify_robust_expander(const ColoredGraph& g, VerifyMode mode, int samples,
                                           std::uint64_t seed, int exhaustive_cap) {
    const int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("verify_robust_expander: empty graph");

    ExpanderCertificate cert;
    cert.vertices.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) cert.vertices[v] = v;
    cert.ratio = subgraph_ratio(g.edge_count(), n);
    cert.check_rule = kCheckRule;

    if (mode == VerifyMode::Exhaustive) {
        if (n > exhaustive_cap)
            throw std::invalid_argument("verify_robust_expander: exhaustive cap exceeded (n = " +
                                        std::to_string(n) + ", cap = " +
                                        std::to_string(exhaustive_cap) + ")");
        cert.mode = "exhaustive";
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            VertexSet u(n);
            for (int v = 0; v < n; ++v)
                if ((mask >> v) & 1) u.insert(v);
            ++cert.subsets_checked;
            if (!check_subset(g, u, &cert.counterexample)) return cert;
        }
        return cert;
    }

    cert.mode = "sampled";
    cert.samples = samples;
    CounterRng rng(seed);
    for (int s = 0; s < samples; ++s) {
        int size = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        std::vector<int> ids(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) ids[v] = v;
        rng.shuffle(ids);
        VertexSet u(n);
        for (int i = 0; i < size; ++i) u.insert(ids[i]);
        ++cert.subsets_checked;
        if (!check_subset(g, u, &cert.counterexample)) return cert;
    }
    return cert;
}

namespace {

struct SubsetScore {
    long long edges;
    int size;
};

// lexicographic order on the sorted vertex lists of two masks: the mask
// holding the lowest differing vertex comes first
bool lex_less(std::uint32_t a, std::uint32_t b) {
    std::uint32_t diff = a ^ b;
    if (diff == 0) return false;
    std::uint32_t low = diff & (~diff + 1);
    return (a & low) != 0;
}

}  // namespace

std::pair<InducedSubgraph, ExpanderCertificate> extract_expander(const ColoredGraph& g,
                                                                 ExtractMode mode, int samples,
                                                                 std::uint64_t seed) {
    const int n = g.vertex_count();
    if (g.edge_count() == 0)
        throw std::invalid_argument("extract_expander: graph has no edges");

    VertexSet chosen(n);
    ExpanderCertificate cert;

    if (mode == ExtractMode::Exact) {
        if (n > kDefaultExactExtractCap)
            throw std::invalid_argument("extract_expander: exact mode requires n <= 20");
        std::vector<std::uint32_t> adj_mask(static_cast<std::size_t>(n), 0);
        for (const auto& e : g.edges()) {
            adj_mask[e.u] |= 1u << e.v;
            adj_mask[e.v] |= 1u << e.u;
        }
        auto edges_in = [&](std::uint32_t mask) {
            long long twice = 0;
            std::uint32_t rest = mask;
            while (rest) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                twice += std::popcount(adj_mask[v] & mask);
            }
            return twice / 2;
        };

        const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
        double best_ratio = -1.0;
        for (std::uint32_t mask = 1; mask <= full; ++mask)
            best_ratio = std::max(best_ratio,
                                  subgraph_ratio(edges_in(mask), std::popcount(mask)));

        // gather near-ties of the float maximum, then settle exactly
        std::vector<std::uint32_t> cand;
        for (std::uint32_t mask = 1; mask <= full; ++mask)
            if (subgraph_ratio(edges_in(mask), std::popcount(mask)) >= best_ratio - 1e-9)
                cand.push_back(mask);
        std::uint32_t best = cand.front();
        long long be = edges_in(best);
        for (std::size_t i = 1; i < cand.size(); ++i) {
            long long ce = edges_in(cand[i]);
            int cmp = cmp_subgraph_ratio(ce, std::popcount(cand[i]), be, std::popcount(best));
            bool better = cmp > 0;
            if (cmp == 0) {
                if (std::popcount(cand[i]) != std::popcount(best))
                    better = std::popcount(cand[i]) < std::popcount(best);
                else
                    better = lex_less(cand[i], best);
            }
            if (better) {
                best = cand[i];
                be = ce;
            }
        }
        for (int v = 0; v < n; ++v)
            if ((best >> v) & 1) chosen.insert(v);
        cert.ratio = subgraph_ratio(be, std::popcount(best));
    } else {
        // hill climbing from S = V by single-vertex deletions, then a
        // min-degree peeling pass, then one more climb from the peel's best
        std::vector<char> in_s(static_cast<std::size_t>(n), 1);
        std::vector<long long> deg_in(static_cast<std::size_t>(n), 0);
        for (int v = 0; v < n; ++v) deg_in[v] = g.degree(v);
        long long edges_in = g.edge_count();
        int size = n;

        auto ratio_without = [&](int v) {
            return subgraph_ratio(edges_in - deg_in[v], size - 1);
        };
        auto remove_vertex = [&](int v) {
            in_s[v] = 0;
            edges_in -= deg_in[v];
            --size;
            for (const auto& e : g.adj(v))
                if (in_s[e.neighbor]) --deg_in[e.neighbor];
            deg_in[v] = 0;
        };

        double cur = subgraph_ratio(edges_in, size);
        std::vector<char> best_set = in_s;
        double best_ratio = cur;
        cert.improvement_ledger.push_back({size, cur});

        auto climb = [&]() {
            for (;;) {
                int move = -1;
                double move_ratio = cur;
                for (int v = 0; v < n; ++v) {
                    if (!in_s[v] || size <= 1) continue;
                    double r = ratio_without(v);
                    if (r > move_ratio + 1e-12) {
                        move_ratio = r;
                        move = v;
                    }
                }
                if (move < 0) break;
                remove_vertex(move);
                cur = move_ratio;
                cert.improvement_ledger.push_back({size, cur});
                if (cur > best_ratio) {
                    best_ratio = cur;
                    best_set = in_s;
                }
            }
        };
        climb();

        // min-degree peeling restart from the full vertex set
        in_s.assign(static_cast<std::size_t>(n), 1);
        for (int v = 0; v < n; ++v) deg_in[v] = g.degree(v);
        edges_in = g.edge_count();
        size = n;
        cur = subgraph_ratio(edges_in, size);
        std::vector<char> peel_best = in_s;
        double peel_ratio = cur;
        while (size > 1) {
            int v_min = -1;
            for (int v = 0; v < n; ++v)
                if (in_s[v] && (v_min < 0 || deg_in[v] < deg_in[v_min])) v_min = v;
            remove_vertex(v_min);
            cur = subgraph_ratio(edges_in, size);
            if (cur > peel_ratio) {
                peel_ratio = cur;
                peel_best = in_s;
            }
        }
        if (peel_ratio > best_ratio) {
            in_s = peel_best;
            for (int v = 0; v < n; ++v) deg_in[v] = 0;
            edges_in = 0;
            size = 0;
            for (int v = 0; v < n; ++v) {
                if (!in_s[v]) continue;
                ++size;
                for (const auto& e : g.adj(v))
                    if (in_s[e.neighbor]) ++deg_in[v];
            }
            for (int v = 0; v < n; ++v) edges_in += deg_in[v];
            edges_in /= 2;
            cur = subgraph_ratio(edges_in, size);
            cert.improvement_ledger.push_back({size, cur});
            best_ratio = cur;
            best_set = in_s;
            climb();
        }

        for (int v = 0; v < n; ++v)
            if (best_set[v]) chosen.insert(v);
        cert.ratio = best_ratio;
    }

    InducedSubgraph sub = induced_subgraph(g, chosen);

    // extraction degree guarantee, exact
    if (sub.graph.vertex_count() >= 2 &&
        !degree_guarantee_holds(sub.graph.edge_count(), sub.graph.vertex_count(),
                                g.edge_count(), g.vertex_count()))
        throw std::logic_error("extract_expander: degree guarantee violated");

    if (mode == ExtractMode::Exact) {
        if (sub.graph.vertex_count() <= kDefaultExhaustiveCap) {
            ExpanderCertificate inner =
                verify_robust_expander(sub.graph, VerifyMode::Exhaustive);
            inner.ratio = cert.ratio;
            cert = std::move(inner);
        } else {
            cert.mode = "none";
            cert.check_rule = kCheckRule;
        }
        cert.vertices = sub.vertex_map;
    } else {
        ExpanderCertificate inner =
            verify_robust_expander(sub.graph, VerifyMode::Sampled, samples, seed);
        inner.ratio = cert.ratio;
        inner.improvement_ledger = std::move(cert.improvement_ledger);
        cert = std::move(inner);
        cert.vertices = sub.vertex_map;
    }
    return {std::move(sub), std::move(cert)};
}

}  // namespace rainbow
