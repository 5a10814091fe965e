// rainbow-forge command line: graph generators, rainbow-cycle detectors,
// expander verification/extraction, the colour-splitting process harness,
// almost-rainbow search/constructions and the group bridge.
//
// Exit codes: 0 success, 1 negative verdict (e.g. no cycle found),
// 2 usage/input error, 3 budget abort or retry exhaustion.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "rainbow_forge/almost_rainbow.hpp"
#include "rainbow_forge/constructions.hpp"
#include "rainbow_forge/expander.hpp"
#include "rainbow_forge/graph.hpp"
#include "rainbow_forge/group.hpp"
#include "rainbow_forge/process.hpp"
#include "rainbow_forge/rainbow_search.hpp"

using nlohmann::json;
using namespace rainbow;

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

class Emitter {
public:
    explicit Emitter(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::invalid_argument("cannot open output file " + path);
        }
    }

    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

    void record(json j) {
        j["schema_version"] = 1;
        j["library_version"] = RAINBOW_FORGE_VERSION;
        stream() << j.dump() << "\n";
    }

private:
    std::ofstream file_;
};

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start)
            .count();
    }
};

int resolve_jobs(int flag_jobs) {
    if (const char* env = std::getenv("RAINBOW_FORGE_JOBS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    if (flag_jobs >= 1) return flag_jobs;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// deterministic parallel map: slot i always holds the result of trial i
template <class Fn>
void parallel_trials(int trials, int jobs, Fn&& fn) {
    jobs = std::max(1, std::min(jobs, trials == 0 ? 1 : trials));
    if (jobs == 1) {
        for (int i = 0; i < trials; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            for (;;) {
                int i = next.fetch_add(1);
                if (i >= trials) return;
                fn(i);
            }
        });
    for (auto& th : pool) th.join();
}

json cycle_to_json(const RainbowCycle& c) {
    // closed-walk rendering "v0 c1 v1 ... cL v0"
    RainbowWalk closed;
    closed.vertices = c.vertices;
    closed.vertices.push_back(c.vertices.front());
    closed.colors = c.colors;
    return json{{"vertices", c.vertices},
                {"colors", c.colors},
                {"length", c.length()},
                {"text", format_walk(closed)}};
}

json walk_to_json(const RainbowWalk& w) {
    return json{{"text", format_walk(w)}, {"vertices", w.vertices}, {"colors", w.colors}};
}

json certificate_to_json(const ExpanderCertificate& cert) {
    json j{{"vertices", cert.vertices},
           {"ratio", cert.ratio},
           {"mode", cert.mode},
           {"check_rule", cert.check_rule},
           {"subsets_checked", cert.subsets_checked},
           {"pass", cert.passed()}};
    if (cert.mode == "sampled") j["samples"] = cert.samples;
    if (!cert.improvement_ledger.empty()) {
        json ledger = json::array();
        for (const auto& step : cert.improvement_ledger)
            ledger.push_back({{"size", step.size}, {"ratio", step.ratio}});
        j["improvement_ledger"] = ledger;
    }
    if (cert.counterexample) {
        const auto& cx = *cert.counterexample;
        j["counterexample"] = {
            {"witness_set", cx.witness_set},
            {"eps", cx.eps_is_exact_max ? json("1 - ln|U|/ln n") : json(rational_to_string(cx.eps))},
            {"eps_value", cx.eps_value},
            {"deletion_floor", cx.deletion_floor},
            {"deleted_edges", cx.deleted_edges},
            {"achieved", cx.achieved},
            {"required", cx.required}};
    }
    return j;
}

ColoredGraph load_input(const std::string& path) {
    if (path.empty()) throw std::invalid_argument("--input is required");
    return load_colored_graph_file(path);
}

void write_graph(const ColoredGraph& g, const std::string& path,
                 const std::vector<std::string>& provenance) {
    if (path.empty()) {
        save_colored_graph(g, std::cout, provenance);
    } else {
        std::ofstream out(path);
        if (!out) throw std::invalid_argument("cannot open output file " + path);
        save_colored_graph(g, out, provenance);
    }
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string token;
    for (char ch : text + ",") {
        if (ch == ',') {
            if (!token.empty()) out.push_back(std::stoi(token));
            token.clear();
        } else {
            token.push_back(ch);
        }
    }
    return out;
}

Rational parse_rational_flag(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(text));
    return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
}

// ---- subcommand runners ------------------------------------------------

int run_rainbow_find(const std::string& input, int max_len, const std::string& output) {
    Timer timer;
    ColoredGraph g = load_input(input);
    int effective = max_len > 0 ? max_len : std::max(3, g.color_count());
    ExactCycleSearch res = rainbow_cycle_exact(g, effective);
    Emitter em(output);
    json j{{"command", "rainbow find"},
           {"config", {{"input", input}, {"max_len", effective}}},
           {"verdict", res.cycle ? "rainbow cycle found" : "no rainbow cycle"},
           {"searched_up_to", res.searched_up_to},
           {"exhaustive", res.full_certificate}};
    if (res.cycle) {
        if (!validate_rainbow_cycle(g, *res.cycle))
            throw std::logic_error("emitted cycle failed validation");
        j["witness"] = cycle_to_json(*res.cycle);
    }
    j["timings_ms"] = timer.ms();
    em.record(j);
    return res.cycle ? kExitSuccess : kExitNegative;
}

int run_rainbow_split(const std::string& input, int trials, std::uint64_t seed, int source,
                      std::uint64_t budget, int jobs, const std::string& output) {
    Timer timer;
    ColoredGraph g = load_input(input);
    if (source < 0 || source >= g.vertex_count())
        throw std::invalid_argument("--source out of range");
    std::vector<SplitTrial> results(static_cast<std::size_t>(trials));
    parallel_trials(trials, resolve_jobs(jobs), [&](int i) {
        results[i] = rainbow_cycle_via_split(g, source, seed + static_cast<std::uint64_t>(i),
                                             budget);
    });
    Emitter em(output);
    int successes = 0, aborted = 0;
    for (int i = 0; i < trials; ++i) {
        const SplitTrial& t = results[i];
        json j{{"command", "rainbow split"},
               {"trial", i},
               {"seed", seed + static_cast<std::uint64_t>(i)},
               {"palette_size", t.palette.count()},
               {"reach_first", t.reach_first},
               {"reach_second", t.reach_second},
               {"truncated", t.truncated},
               {"verdict", t.cycle ? "cycle" : "none"}};
        if (t.cycle) {
            if (!validate_rainbow_cycle(g, *t.cycle))
                throw std::logic_error("emitted cycle failed validation");
            j["witness"] = cycle_to_json(*t.cycle);
            ++successes;
        }
        if (t.truncated) ++aborted;
        em.record(std::move(j));
    }
    json agg{{"command", "rainbow split"},
             {"aggregate", true},
             {"config",
              {{"input", input},
               {"trials", trials},
               {"base_seed", seed},
               {"source", source},
               {"state_budget", budget}}},
             {"successes", successes},
             {"aborted", aborted},
             {"frequency", trials ? static_cast<double>(successes) / trials : 0.0},
             {"timings_ms", timer.ms()}};
    em.record(std::move(agg));
    if (successes > 0) return kExitSuccess;
    return aborted == trials && trials > 0 ? kExitBudget : kExitNegative;
}

int run_expander_verify(const std::string& input, const std::string& mode, int samples,
                        std::uint64_t seed, int cap, const std::string& output) {
    Timer timer;
    ColoredGraph g = load_input(input);
    VerifyMode vm;
    if (mode == "exhaustive") vm = VerifyMode::Exhaustive;
    else if (mode == "sampled") vm = VerifyMode::Sampled;
    else throw std::invalid_argument("--mode must be exhaustive or sampled");
    ExpanderCertificate cert = verify_robust_expander(g, vm, samples, seed, cap);
    Emitter em(output);
    em.record(json{{"command", "expander verify"},
                   {"config",
                    {{"input", input}, {"mode", mode}, {"samples", samples}, {"seed", seed}}},
                   {"verdict", cert.passed() ? "robust sublinear expander (checked)"
                                             : "expansion violated"},
                   {"certificate", certificate_to_json(cert)},
                   {"timings_ms", timer.ms()}});
    return cert.passed() ? kExitSuccess : kExitNegative;
}

int run_expander_extract(const std::string& input, const std::string& mode, int samples,
                         std::uint64_t seed, const std::string& output,
                         const std::string& graph_out) {
    Timer timer;
    ColoredGraph g = load_input(input);
    ExtractMode em_mode;
    if (mode == "exact") em_mode = ExtractMode::Exact;
    else if (mode == "heuristic") em_mode = ExtractMode::Heuristic;
    else throw std::invalid_argument("--mode must be exact or heuristic");
    auto [sub, cert] = extract_expander(g, em_mode, samples, seed);
    if (!graph_out.empty())
        write_graph(sub.graph, graph_out,
                    {"rainbow-forge expander extract --mode " + mode + " from " + input});
    Emitter em(output);
    em.record(json{{"command", "expander extract"},
                   {"config", {{"input", input}, {"mode", mode}}},
                   {"vertices", sub.vertex_map},
                   {"subgraph", {{"n", sub.graph.vertex_count()},
                                 {"m", sub.graph.edge_count()},
                                 {"colors", sub.graph.color_count()}}},
                   {"certificate", certificate_to_json(cert)},
                   {"timings_ms", timer.ms()}});
    return kExitSuccess;
}

int run_process_trial(const std::string& input, int trials, std::uint64_t seed, int source,
                      const std::string& l_scale, std::uint64_t budget, int jobs,
                      const std::string& output) {
    Timer timer;
    ColoredGraph g = load_input(input);
    if (source < 0 || source >= g.vertex_count())
        throw std::invalid_argument("--source out of range");
    ProcessConfig cfg = ProcessConfig::for_graph(g.vertex_count(), parse_rational_flag(l_scale));
    std::vector<TrialRecord> recs(static_cast<std::size_t>(trials));
    parallel_trials(trials, resolve_jobs(jobs), [&](int i) {
        recs[i] = run_splitting_trial(g, source, cfg, seed + static_cast<std::uint64_t>(i),
                                      budget);
    });
    Emitter em(output);
    int aborted = 0, size_events = 0, cycle_events = 0, cycles = 0;
    for (int i = 0; i < trials; ++i) {
        const TrialRecord& r = recs[i];
        json j{{"command", "process trial"},
               {"trial", i},
               {"seed", r.seed},
               {"aborted", r.aborted}};
        if (!r.aborted) {
            j["checkpoint_sizes"] = r.checkpoint_sizes;
            j["complement_reach"] = r.complement_reach;
            j["size_event"] = r.size_event;
            j["size_event_complement"] = r.size_event_complement;
            j["cycle_event"] = r.cycle_event;
            if (r.cycle) j["witness"] = cycle_to_json(*r.cycle);
        }
        aborted += r.aborted;
        if (!r.aborted) {
            size_events += r.size_event;
            cycle_events += r.cycle_event;
            cycles += r.cycle.has_value();
        }
        em.record(std::move(j));
    }
    int counted = trials - aborted;
    json agg{{"command", "process trial"},
             {"aggregate", true},
             {"config",
              {{"input", input},
               {"trials", trials},
               {"base_seed", seed},
               {"source", source},
               {"growth_rounds", cfg.growth_rounds},
               {"round_length", cfg.round_length},
               {"steps", cfg.steps},
               {"l_scale", l_scale},
               {"state_budget", budget}}},
             {"aborted", aborted},
             {"counted", counted},
             {"size_event_frequency",
              counted ? static_cast<double>(size_events) / counted : 0.0},
             {"cycle_event_frequency",
              counted ? static_cast<double>(cycle_events) / counted : 0.0},
             {"cycles_assembled", cycles},
             {"timings_ms", timer.ms()}};
    em.record(std::move(agg));
    return (trials > 0 && aborted == trials) ? kExitBudget : kExitSuccess;
}

int run_process_components(const std::string& input, int trials, std::uint64_t seed,
                           bool keep_all, const std::string& output) {
    Timer timer;
    ColoredGraph g = load_input(input);
    Emitter em(output);
    std::vector<double> largest_fractions;
    for (int i = 0; i < trials; ++i) {
        auto sizes = color_split_components(g, seed + static_cast<std::uint64_t>(i), keep_all);
        double frac = sizes.empty() ? 0.0
                                    : static_cast<double>(sizes.front()) /
                                          static_cast<double>(g.vertex_count());
        largest_fractions.push_back(frac);
        em.record(json{{"command", "process components"},
                       {"trial", i},
                       {"seed", seed + static_cast<std::uint64_t>(i)},
                       {"component_sizes", sizes},
                       {"largest_fraction", frac}});
    }
    std::vector<double> sorted = largest_fractions;
    std::sort(sorted.begin(), sorted.end());
    double median = sorted.empty() ? 0.0 : sorted[sorted.size() / 2];
    em.record(json{{"command", "process components"},
                   {"aggregate", true},
                   {"config",
                    {{"input", input},
                     {"trials", trials},
                     {"base_seed", seed},
                     {"keep_all", keep_all}}},
                   {"median_largest_fraction", median},
                   {"timings_ms", timer.ms()}});
    return kExitSuccess;
}

int run_lemma42_grid(int t_max, const std::string& output) {
    Timer timer;
    long long checked_a = 0, checked_b = 0, failures = 0;
    for (int steps = 1; steps <= t_max; ++steps) {
        Rational p(steps - 1, steps), q = Rational(1) - p;
        for (int i = 0; i <= steps; ++i)
            for (int j = i; j <= steps; ++j) {
                Rational pa = chain_probability_exact(i, j, steps, ChainProbabilityKind::A);
                ++checked_a;
                if (pa < Rational(j - i) * q / 6) ++failures;
                if (i < j && 2 * (j - i + 1) <= steps) {
                    Rational pb =
                        chain_probability_exact(i, j, steps, ChainProbabilityKind::B);
                    ++checked_b;
                    if (pb < Rational(steps, j - i) * q / 2) ++failures;
                }
            }
    }
    Emitter em(output);
    em.record(json{{"command", "process lemma42-grid"},
                   {"config", {{"t_max", t_max}}},
                   {"verdict", failures == 0 ? "all inequalities hold" : "inequality violated"},
                   {"checked_a", checked_a},
                   {"checked_b", checked_b},
                   {"failures", failures},
                   {"timings_ms", timer.ms()}});
    return failures == 0 ? kExitSuccess : kExitNegative;
}

int run_almost_find(const std::string& input, int r, int degree, std::uint64_t max_sequences,
                    const std::string& output) {
    Timer timer;
    ColoredGraph g = load_input(input);
    std::optional<int> override_d;
    if (degree > 0) override_d = degree;
    FinderResult res = find_almost_rainbow_cycle(g, r, override_d, max_sequences);
    Emitter em(output);
    json j{{"command", "almost find"},
           {"config", {{"input", input}, {"r", r}, {"max_sequences", max_sequences}}},
           {"degree_threshold", res.degree_threshold}};
    switch (res.status) {
        case FinderStatus::Found:
            j["verdict"] = "almost-rainbow cycle found";
            if (!validate_almost_rainbow_cycle(g, *res.cycle, r))
                throw std::logic_error("emitted cycle failed validation");
            j["witness"] = {{"vertices", res.cycle->vertices},
                            {"colors", res.cycle->colors},
                            {"max_repeats", res.cycle->max_repeats}};
            break;
        case FinderStatus::EmptyPeel:
            j["verdict"] = "peel removed every vertex";
            break;
        case FinderStatus::Exhausted:
            j["verdict"] = "no collision within the search horizon";
            j["sequences_explored"] = res.sequences_explored;
            break;
        case FinderStatus::BudgetExceeded:
            j["verdict"] = "sequence budget exhausted (absence NOT concluded)";
            j["sequences_explored"] = res.sequences_explored;
            break;
    }
    j["timings_ms"] = timer.ms();
    em.record(std::move(j));
    if (res.status == FinderStatus::Found) return kExitSuccess;
    if (res.status == FinderStatus::BudgetExceeded) return kExitBudget;
    return kExitNegative;
}

int run_almost_construct(int d, int r, int n, std::uint64_t seed, int max_retries,
                         const std::string& graph_out) {
    ColoredGraph g = construct_almost_rainbow_lower_bound(d, r, n, seed, max_retries);
    write_graph(g, graph_out,
                {"rainbow-forge almost construct --d " + std::to_string(d) + " --r " +
                 std::to_string(r) + " --n " + std::to_string(n) + " --seed " +
                 std::to_string(seed)});
    return kExitSuccess;
}

int run_group_dissociated(const std::string& spec, const std::string& set_text, int max_m,
                          const std::string& output) {
    Timer timer;
    FiniteGroup g = FiniteGroup::parse(spec);
    auto s = g.parse_element_set(set_text);
    DissociationOutcome out = is_dissociated(g, s, max_m);
    Emitter em(output);
    json j{{"command", "group dissociated"},
           {"config", {{"group", spec}, {"set_size", s.size()}, {"max_m", out.searched_up_to}}}};
    switch (out.verdict) {
        case DissociationOutcome::Verdict::Dissociated:
            j["verdict"] = "dissociated";
            break;
        case DissociationOutcome::Verdict::Relation: {
            j["verdict"] = "relation found";
            json witness = json::array();
            for (std::size_t i = 0; i < out.witness->elements.size(); ++i)
                witness.push_back({{"element", g.format_element(out.witness->elements[i])},
                                   {"sign", out.witness->signs[i]}});
            if (!validate_relation_witness(g, s, *out.witness))
                throw std::logic_error("emitted witness failed validation");
            j["witness"] = witness;
            break;
        }
        case DissociationOutcome::Verdict::NoRelationUpTo:
            j["verdict"] = "no relation up to length " + std::to_string(out.searched_up_to);
            break;
    }
    j["timings_ms"] = timer.ms();
    em.record(std::move(j));
    if (out.verdict == DissociationOutcome::Verdict::Dissociated) return kExitSuccess;
    if (out.verdict == DissociationOutcome::Verdict::Relation) return kExitNegative;
    return kExitBudget;
}

int run_group_dimension(const std::string& spec, const std::string& set_text, bool full_group,
                        const std::string& output) {
    Timer timer;
    FiniteGroup g = FiniteGroup::parse(spec);
    std::vector<FiniteGroup::Elem> a;
    if (full_group) {
        if (g.order() > static_cast<unsigned long long>(kDimensionSetCap))
            throw std::invalid_argument("--full-group: order exceeds the dimension cap");
        for (std::uint64_t idx = 0; idx < g.order(); ++idx) a.push_back(g.from_index(idx));
    } else {
        a = g.parse_element_set(set_text);
    }
    DimensionResult res = additive_dimension(g, a);
    Emitter em(output);
    json maximizer = json::array();
    for (const auto& e : res.maximizer) maximizer.push_back(g.format_element(e));
    em.record(json{{"command", "group dimension"},
                   {"config", {{"group", spec}, {"set_size", a.size()}}},
                   {"dimension", res.dimension},
                   {"maximizer", maximizer},
                   {"timings_ms", timer.ms()}});
    return kExitSuccess;
}

int run_group_dim_transpositions(int k, const std::string& output) {
    Timer timer;
    int dim = dim_transpositions(k);
    Emitter em(output);
    em.record(json{{"command", "group dim-transpositions"},
                   {"config", {{"k", k}}},
                   {"dimension", dim},
                   {"timings_ms", timer.ms()}});
    return kExitSuccess;
}

int run_group_build_graph(const std::string& spec, const std::string& set_text,
                          const std::string& kind, const std::string& graph_out) {
    FiniteGroup g = FiniteGroup::parse(spec);
    auto s = g.parse_element_set(set_text);
    ColoredGraph built = kind == "translation" ? translation_bipartite_graph(g, s)
                         : kind == "cayley"
                             ? cayley_even_order_graph(g, s)
                             : throw std::invalid_argument("--kind must be translation or cayley");
    write_graph(built, graph_out,
                {"rainbow-forge group build-graph --group " + spec + " --kind " + kind,
                 "set " + set_text});
    return kExitSuccess;
}

int run_construct(const std::string& family, int m, int n, int d, int girth,
                  std::uint64_t seed, int max_retries, const std::string& graph_out) {
    if (family == "hypercube") {
        write_graph(hypercube(m), graph_out,
                    {"rainbow-forge construct hypercube --m " + std::to_string(m)});
        return kExitSuccess;
    }
    if (family == "k1f") {
        write_graph(complete_one_factorization(n), graph_out,
                    {"rainbow-forge construct k1f --n " + std::to_string(n)});
        return kExitSuccess;
    }
    if (family == "regular-girth") {
        SimpleGraph base = random_regular_girth(n, d, girth, seed, max_retries);
        write_graph(vizing_color(base), graph_out,
                    {"rainbow-forge construct regular-girth --n " + std::to_string(n) +
                     " --d " + std::to_string(d) + " --girth " + std::to_string(girth) +
                     " --seed " + std::to_string(seed)});
        return kExitSuccess;
    }
    throw std::invalid_argument("unknown construct family");
}

int run_threshold_scan(const std::string& family, const std::string& n_list,
                       const std::string& degree_list, int trials, std::uint64_t seed,
                       const std::string& method, int max_len, std::uint64_t budget, int jobs,
                       const std::string& output) {
    Timer timer;
    std::vector<int> ns = parse_int_list(n_list);
    std::vector<int> degrees = parse_int_list(degree_list);
    if (ns.empty()) throw std::invalid_argument("--n-list is required");

    std::ofstream file;
    if (!output.empty()) {
        file.open(output);
        if (!file) throw std::invalid_argument("cannot open output file " + output);
    }
    std::ostream& out = output.empty() ? std::cout : file;

    out << "family,n,degree,trials,successes,frequency\n";
    struct Cell {
        int n, degree, successes;
    };
    std::vector<Cell> cells;
    std::uint64_t cell_seed = seed;
    for (int nv : ns) {
        std::vector<int> degree_grid;
        if (family == "k1f") degree_grid = {nv - 1};
        else if (family == "hypercube") degree_grid = {nv};  // n-list holds m
        else if (family == "regular") degree_grid = degrees;
        else throw std::invalid_argument("unsupported family " + family);
        if (degree_grid.empty())
            throw std::invalid_argument("--degree-list is required for family regular");

        for (int dv : degree_grid) {
            int successes = 0;
            std::vector<char> hit(static_cast<std::size_t>(trials), 0);
            parallel_trials(trials, resolve_jobs(jobs), [&](int i) {
                std::uint64_t s = cell_seed + static_cast<std::uint64_t>(i);
                ColoredGraph g = [&] {
                    if (family == "k1f") return complete_one_factorization(nv);
                    if (family == "hypercube") return hypercube(nv);
                    return vizing_color(random_regular_girth(nv, dv, 3, s, 10000));
                }();
                bool found;
                if (method == "split") {
                    found = rainbow_cycle_via_split(g, 0, s, budget).cycle.has_value();
                } else {
                    int cap = max_len > 0 ? max_len : std::max(3, g.color_count());
                    found = rainbow_cycle_exact(g, cap).cycle.has_value();
                }
                hit[i] = found;
            });
            for (char h : hit) successes += h;
            cells.push_back({family == "hypercube" ? (1 << nv) : nv, dv, successes});
            out << family << "," << cells.back().n << "," << dv << "," << trials << ","
                << successes << ","
                << (trials ? static_cast<double>(successes) / trials : 0.0) << "\n";
            cell_seed += static_cast<std::uint64_t>(trials);
        }
    }
    // flag (not fail) sampling-noise monotonicity violations along the grid
    for (std::size_t i = 1; i < cells.size(); ++i) {
        if (cells[i].n == cells[i - 1].n && cells[i].successes + 1 < cells[i - 1].successes)
            out << "# monotonicity-flag: n=" << cells[i].n << " degree " << cells[i].degree
                << " dipped from " << cells[i - 1].successes << " to " << cells[i].successes
                << "\n";
    }
    std::cerr << "threshold-scan done in " << timer.ms() << " ms\n";
    return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rainbow-forge: rainbow cycles in properly edge-coloured graphs"};
    app.require_subcommand(1);

    std::string input, output, graph_out, mode, group_spec, set_text, family, n_list,
        degree_list, method = "exact", l_scale = "1";
    int max_len = 0, trials = 100, source = 0, samples = 200, cap = kDefaultExhaustiveCap;
    int r = 2, degree = 0, n = 0, m = 0, girth = 3, max_retries = 10000, k = 3, jobs = 0;
    int max_m = -1;
    bool keep_all = false, full_group = false;
    std::uint64_t seed = 0, budget = kDefaultStateBudget, max_sequences = 10'000'000;

    std::function<int()> action;

    auto* rainbow = app.add_subcommand("rainbow", "rainbow cycle detection");
    auto* rfind = rainbow->add_subcommand("find", "exact rainbow cycle search");
    rfind->add_option("--input", input)->required();
    rfind->add_option("--max-len", max_len);
    rfind->add_option("--output", output);
    rfind->callback([&] { action = [&] { return run_rainbow_find(input, max_len, output); }; });

    auto* rsplit = rainbow->add_subcommand("split", "randomized colour-splitting trials");
    rsplit->add_option("--input", input)->required();
    rsplit->add_option("--trials", trials);
    rsplit->add_option("--seed", seed);
    rsplit->add_option("--source", source);
    rsplit->add_option("--state-budget", budget);
    rsplit->add_option("--jobs", jobs);
    rsplit->add_option("--output", output);
    rsplit->callback([&] {
        action = [&] {
            return run_rainbow_split(input, trials, seed, source, budget, jobs, output);
        };
    });

    auto* expander = app.add_subcommand("expander", "robust sublinear expanders");
    auto* everify = expander->add_subcommand("verify", "decide the expansion property");
    everify->add_option("--input", input)->required();
    everify->add_option("--mode", mode)->default_val("exhaustive");
    everify->add_option("--samples", samples);
    everify->add_option("--seed", seed);
    everify->add_option("--cap", cap);
    everify->add_option("--output", output);
    everify->callback([&] {
        action = [&] { return run_expander_verify(input, mode, samples, seed, cap, output); };
    });

    auto* eextract = expander->add_subcommand("extract", "extract an expander subgraph");
    eextract->add_option("--input", input)->required();
    eextract->add_option("--mode", mode)->default_val("exact");
    eextract->add_option("--samples", samples);
    eextract->add_option("--seed", seed);
    eextract->add_option("--output", output);
    eextract->add_option("--graph-output", graph_out);
    eextract->callback([&] {
        action = [&] {
            return run_expander_extract(input, mode, samples, seed, output, graph_out);
        };
    });

    auto* process = app.add_subcommand("process", "colour-splitting process");
    auto* ptrial = process->add_subcommand("trial", "nested-chain splitting trials");
    ptrial->add_option("--input", input)->required();
    ptrial->add_option("--trials", trials);
    ptrial->add_option("--seed", seed);
    ptrial->add_option("--source", source);
    ptrial->add_option("--l-scale", l_scale);
    ptrial->add_option("--state-budget", budget);
    ptrial->add_option("--jobs", jobs);
    ptrial->add_option("--output", output);
    ptrial->callback([&] {
        action = [&] {
            return run_process_trial(input, trials, seed, source, l_scale, budget, jobs,
                                     output);
        };
    });

    auto* pcomp = process->add_subcommand("components", "colour-subsampling connectivity");
    pcomp->add_option("--input", input)->required();
    pcomp->add_option("--trials", trials);
    pcomp->add_option("--seed", seed);
    pcomp->add_flag("--keep-all", keep_all);
    pcomp->add_option("--output", output);
    pcomp->callback([&] {
        action = [&] { return run_process_components(input, trials, seed, keep_all, output); };
    });

    int t_max = 50;
    auto* pgrid = process->add_subcommand("lemma42-grid", "exact chain probability bounds");
    pgrid->add_option("--t-max,--T-max", t_max);
    pgrid->add_option("--output", output);
    pgrid->callback([&] { action = [&] { return run_lemma42_grid(t_max, output); }; });

    auto* almost = app.add_subcommand("almost", "almost-rainbow cycles");
    auto* afind = almost->add_subcommand("find", "admissible-sequence search");
    afind->add_option("--input", input)->required();
    afind->add_option("--r", r)->required();
    afind->add_option("--d", degree);
    afind->add_option("--max-sequences", max_sequences);
    afind->add_option("--output", output);
    afind->callback([&] {
        action = [&] { return run_almost_find(input, r, degree, max_sequences, output); };
    });

    auto* aconstruct = almost->add_subcommand("construct", "high-girth lower-bound instance");
    aconstruct->add_option("--d", degree)->required();
    aconstruct->add_option("--r", r)->required();
    aconstruct->add_option("--n", n)->required();
    aconstruct->add_option("--seed", seed);
    aconstruct->add_option("--max-retries", max_retries);
    aconstruct->add_option("--output", graph_out);
    aconstruct->callback([&] {
        action = [&] { return run_almost_construct(degree, r, n, seed, max_retries, graph_out); };
    });

    auto* group = app.add_subcommand("group", "dissociated sets and additive dimension");
    auto* gdiss = group->add_subcommand("dissociated", "state-space dissociation check");
    gdiss->add_option("--group", group_spec)->required();
    gdiss->add_option("--set", set_text)->required();
    gdiss->add_option("--max-m", max_m);
    gdiss->add_option("--output", output);
    gdiss->callback([&] {
        action = [&] { return run_group_dissociated(group_spec, set_text, max_m, output); };
    });

    auto* gdim = group->add_subcommand("dimension", "maximum dissociated subset");
    gdim->add_option("--group", group_spec)->required();
    gdim->add_option("--set", set_text);
    gdim->add_flag("--full-group", full_group);
    gdim->add_option("--output", output);
    gdim->callback([&] {
        action = [&] { return run_group_dimension(group_spec, set_text, full_group, output); };
    });

    auto* gdt = group->add_subcommand("dim-transpositions", "dimension of all transpositions");
    gdt->add_option("--k", k)->required();
    gdt->add_option("--output", output);
    gdt->callback([&] { action = [&] { return run_group_dim_transpositions(k, output); }; });

    auto* gbuild = group->add_subcommand("build-graph", "translation / Cayley constructions");
    gbuild->add_option("--group", group_spec)->required();
    gbuild->add_option("--set", set_text)->required();
    gbuild->add_option("--kind", mode)->required();
    gbuild->add_option("--output", graph_out);
    gbuild->callback([&] {
        action = [&] { return run_group_build_graph(group_spec, set_text, mode, graph_out); };
    });

    auto* construct = app.add_subcommand("construct", "instance generators");
    auto* chyper = construct->add_subcommand("hypercube", "coordinate-coloured hypercube");
    chyper->add_option("--m", m)->required();
    chyper->add_option("--output", graph_out);
    chyper->callback([&] {
        action = [&] { return run_construct("hypercube", m, n, degree, girth, seed, max_retries,
                                            graph_out); };
    });
    auto* ck1f = construct->add_subcommand("k1f", "complete graph, round-robin colours");
    ck1f->add_option("--n", n)->required();
    ck1f->add_option("--output", graph_out);
    ck1f->callback([&] {
        action = [&] { return run_construct("k1f", m, n, degree, girth, seed, max_retries,
                                            graph_out); };
    });
    auto* creg = construct->add_subcommand("regular-girth", "random regular with girth bound");
    creg->add_option("--n", n)->required();
    creg->add_option("--d", degree)->required();
    creg->add_option("--girth", girth)->required();
    creg->add_option("--seed", seed);
    creg->add_option("--max-retries", max_retries);
    creg->add_option("--output", graph_out);
    creg->callback([&] {
        action = [&] { return run_construct("regular-girth", m, n, degree, girth, seed,
                                            max_retries, graph_out); };
    });

    auto* experiment = app.add_subcommand("experiment", "orchestrated sweeps");
    auto* scan = experiment->add_subcommand("threshold-scan", "detection frequency table");
    scan->add_option("--family", family)->required();
    scan->add_option("--n-list", n_list)->required();
    scan->add_option("--degree-list", degree_list);
    scan->add_option("--trials", trials);
    scan->add_option("--seed", seed);
    scan->add_option("--method", method);
    scan->add_option("--max-len", max_len);
    scan->add_option("--state-budget", budget);
    scan->add_option("--jobs", jobs);
    scan->add_option("--output", output);
    scan->callback([&] {
        action = [&] {
            return run_threshold_scan(family, n_list, degree_list, trials, seed, method,
                                      max_len, budget, jobs, output);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        return action ? action() : kExitUsage;
    } catch (const RetryExhaustedError& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return kExitBudget;
    } catch (const GraphFormatError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
