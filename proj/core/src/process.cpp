#include "rainbow_forge/process.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rainbow_forge/rng.hpp"

namespace rainbow {

NestedColorChain sample_chain(int color_count, int steps, std::uint64_t seed) {
    if (steps < 1) throw std::invalid_argument("sample_chain: need T >= 1");
    if (color_count < 0) throw std::invalid_argument("sample_chain: negative colour count");
    NestedColorChain chain;
    chain.steps = steps;
    chain.keep_prob = Rational(steps - 1, steps);
    chain.seed = seed;
    chain.levels.reserve(static_cast<std::size_t>(steps) + 1);

    CounterRng rng(seed);
    ColorSet level((color_count));
    for (int c = 0; c < color_count; ++c)
        if (rng.coin()) level.insert(c);
    chain.levels.push_back(level);
    for (int i = 0; i < steps; ++i) {
        ColorSet next(color_count);
        for (int c = 0; c < color_count; ++c) {
            if (!level.contains(c)) continue;
            if (rng.bernoulli(static_cast<std::uint64_t>(steps - 1),
                              static_cast<std::uint64_t>(steps)))
                next.insert(c);
        }
        level = next;
        chain.levels.push_back(level);
    }
    return chain;
}

Rational chain_probability_exact(int i, int j, int steps, ChainProbabilityKind kind) {
    if (steps < 1) throw std::invalid_argument("chain_probability_exact: T >= 1 required");
    const Rational p(steps - 1, steps);
    auto ppow = [&](int e) {
        Rational r = 1;
        for (int k = 0; k < e; ++k) r *= p;
        return r;
    };
    if (kind == ChainProbabilityKind::A) {
        if (!(0 <= i && i <= j && j <= steps))
            throw std::invalid_argument("chain_probability_exact(A): need 0 <= i <= j <= T");
        // Pr[x in A_i and x not in A_j] / Pr[x not in A_j]
        Rational numer = Rational(1, 2) * ppow(i) * (Rational(1) - ppow(j - i));
        Rational denom = Rational(1) - Rational(1, 2) * ppow(j);
        return numer / denom;
    }
    if (!(0 <= i && i < j && j <= steps && 2 * (j - i + 1) <= steps))
        throw std::invalid_argument(
            "chain_probability_exact(B): need 0 <= i < j <= T and j-i+1 <= T/2");
    // Pr[x in A_{j-1} \ A_j] / Pr[x in A_i \ A_j]
    return ppow(j - 1 - i) * (Rational(1) - p) / (Rational(1) - ppow(j - i));
}

ProcessConfig ProcessConfig::for_graph(int n, const Rational& l_scale) {
    if (n < 2) throw std::invalid_argument("ProcessConfig: need n >= 2");
    if (l_scale <= 0) throw std::invalid_argument("ProcessConfig: L scale must be positive");
    ProcessConfig cfg;
    double ln_n = std::log(static_cast<double>(n));
    cfg.growth_rounds = std::max(1, static_cast<int>(std::ceil(std::log(ln_n))));
    long long ln_ceil = static_cast<long long>(std::ceil(ln_n));
    BigInt raw = -floor_rational(-(l_scale * ln_ceil));  // ceil(scale * ceil(ln n))
    long long l = raw.convert_to<long long>();
    l = ((l + 3) / 4) * 4;  // round up to a multiple of 4
    if (l < 4) l = 4;
    cfg.round_length = static_cast<int>(l);
    cfg.steps = cfg.growth_rounds * cfg.round_length;
    return cfg;
}

double ProcessConfig::schedule(int n, int k) {
    return static_cast<double>(n) * std::exp(-0.5 * std::pow(10.0, k));
}

TrialRecord run_splitting_trial(const ColoredGraph& g, int source, const ProcessConfig& cfg,
                                std::uint64_t seed, std::uint64_t state_budget) {
    if (source < 0 || source >= g.vertex_count())
        throw std::invalid_argument("run_splitting_trial: source out of range");
    if (cfg.round_length % 4 != 0)
        throw std::invalid_argument("run_splitting_trial: L must be divisible by 4");
    if (cfg.steps != cfg.growth_rounds * cfg.round_length)
        throw std::invalid_argument("run_splitting_trial: T != K*L");

    TrialRecord rec;
    rec.seed = seed;
    NestedColorChain chain = sample_chain(g.color_count(), cfg.steps, seed);

    std::optional<ReachableSet> base;
    for (int k = 0; k <= cfg.growth_rounds; ++k) {
        ReachableSet r = rainbow_reachable_set(g, source, chain.level(k * cfg.round_length),
                                               state_budget);
        if (r.truncated()) {
            rec.aborted = true;
            return rec;
        }
        rec.checkpoint_sizes.push_back(r.size());
        if (k == 0) base = std::move(r);
    }

    ReachableSet comp =
        rainbow_reachable_set(g, source, chain.level(0).complement(), state_budget);
    if (comp.truncated()) {
        rec.aborted = true;
        return rec;
    }
    rec.complement_reach = comp.size();
    rec.size_event = at_least_n_over_sqrt_e(rec.checkpoint_sizes[0], g.vertex_count());
    rec.size_event_complement =
        at_least_n_over_sqrt_e(rec.complement_reach, g.vertex_count());

    VertexSet both = base->members() & comp.members();
    both.erase(source);
    if (!both.empty()) {
        rec.cycle_event = true;
        if (rec.size_event && rec.size_event_complement) {
            int y = both.to_vector().front();
            RainbowWalk out = base->witness(y);
            RainbowWalk back = comp.witness(y);
            std::vector<int> verts = out.vertices, colors = out.colors;
            for (int t = static_cast<int>(back.colors.size()) - 1; t >= 0; --t) {
                colors.push_back(back.colors[t]);
                verts.push_back(back.vertices[t]);
            }
            std::vector<int> seen_at(static_cast<std::size_t>(g.vertex_count()), -1);
            for (std::size_t idx = 0; idx < verts.size(); ++idx) {
                if (seen_at[verts[idx]] >= 0) {
                    std::size_t at = static_cast<std::size_t>(seen_at[verts[idx]]);
                    RainbowCycle cycle;
                    cycle.vertices.assign(verts.begin() + at, verts.begin() + idx);
                    cycle.colors.assign(colors.begin() + at, colors.begin() + idx);
                    if (!validate_rainbow_cycle(g, cycle))
                        throw std::logic_error("run_splitting_trial: invalid assembled cycle");
                    rec.cycle = std::move(cycle);
                    break;
                }
                seen_at[verts[idx]] = static_cast<int>(idx);
            }
        }
    }
    return rec;
}

std::vector<int> color_split_components(const ColoredGraph& g, std::uint64_t seed,
                                        bool keep_all) {
    CounterRng rng(seed);
    ColorSet kept = g.empty_color_set();
    for (int c = 0; c < g.color_count(); ++c)
        if (keep_all || rng.coin()) kept.insert(c);

    std::vector<int> parent(static_cast<std::size_t>(g.vertex_count()));
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<int> rank(static_cast<std::size_t>(g.vertex_count()), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& e : g.edges()) {
        if (!kept.contains(e.color)) continue;
        int a = find(e.u), b = find(e.v);
        if (a == b) continue;
        if (rank[a] < rank[b]) std::swap(a, b);
        parent[b] = a;
        if (rank[a] == rank[b]) ++rank[a];
    }
    std::vector<int> size(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v = 0; v < g.vertex_count(); ++v) ++size[find(v)];
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (size[v] > 0) out.push_back(size[v]);
    std::sort(out.rbegin(), out.rend());
    return out;
}

}  // namespace rainbow
