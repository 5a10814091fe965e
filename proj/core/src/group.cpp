#include "rainbow_forge/group.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace rainbow {

namespace {

[[noreturn]] void parse_fail(const std::string& what) {
    throw std::invalid_argument("group parse: " + what);
}

unsigned long long factorial(int k) {
    unsigned long long f = 1;
    for (int i = 2; i <= k; ++i) f *= static_cast<unsigned long long>(i);
    return f;
}

}  // namespace

void FiniteGroup::finish_init() {
    offsets_.clear();
    atom_sizes_.clear();
    order_ = 1;
    code_len_ = 0;
    for (const auto& atom : atoms_) {
        offsets_.push_back(code_len_);
        if (atom.kind == GroupAtom::Kind::Symmetric) {
            if (atom.param < 1 || atom.param > 12)
                parse_fail("symmetric atom degree out of range [1,12]");
            code_len_ += atom.param;
            atom_sizes_.push_back(factorial(atom.param));
        } else {
            if (atom.param < 1) parse_fail("cyclic modulus must be positive");
            code_len_ += 1;
            atom_sizes_.push_back(static_cast<std::uint64_t>(atom.param));
        }
        if (order_ > (1ull << 62) / atom_sizes_.back())
            parse_fail("group order overflows");
        order_ *= atom_sizes_.back();
    }
}

FiniteGroup FiniteGroup::symmetric(int k) {
    FiniteGroup g;
    g.atoms_ = {{GroupAtom::Kind::Symmetric, k}};
    g.finish_init();
    return g;
}

FiniteGroup FiniteGroup::cyclic(int m) {
    FiniteGroup g;
    g.atoms_ = {{GroupAtom::Kind::Cyclic, m}};
    g.finish_init();
    return g;
}

FiniteGroup FiniteGroup::product(std::vector<GroupAtom> atoms) {
    if (atoms.empty()) parse_fail("empty atom list");
    FiniteGroup g;
    g.atoms_ = std::move(atoms);
    g.finish_init();
    return g;
}

FiniteGroup FiniteGroup::power(const FiniteGroup& base, int k) {
    if (k < 1) parse_fail("power exponent must be positive");
    std::vector<GroupAtom> atoms;
    for (int i = 0; i < k; ++i)
        atoms.insert(atoms.end(), base.atoms_.begin(), base.atoms_.end());
    return product(std::move(atoms));
}

FiniteGroup FiniteGroup::parse(const std::string& spec) {
    std::vector<GroupAtom> atoms;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < spec.size() && std::isspace(static_cast<unsigned char>(spec[pos]))) ++pos;
    };
    auto read_int = [&]() {
        skip_ws();
        std::size_t start = pos;
        while (pos < spec.size() && std::isdigit(static_cast<unsigned char>(spec[pos]))) ++pos;
        if (start == pos) parse_fail("expected an integer in \"" + spec + "\"");
        return std::stoi(spec.substr(start, pos - start));
    };
    for (;;) {
        skip_ws();
        if (pos >= spec.size()) parse_fail("expected an atom in \"" + spec + "\"");
        char tag = spec[pos++];
        GroupAtom atom{};
        if (tag == 'S' || tag == 's')
            atom = {GroupAtom::Kind::Symmetric, read_int()};
        else if (tag == 'Z' || tag == 'z')
            atom = {GroupAtom::Kind::Cyclic, read_int()};
        else
            parse_fail(std::string("unknown atom tag '") + tag + "'");
        int reps = 1;
        skip_ws();
        if (pos < spec.size() && spec[pos] == '^') {
            ++pos;
            reps = read_int();
            if (reps < 1) parse_fail("power must be positive");
        }
        for (int i = 0; i < reps; ++i) atoms.push_back(atom);
        skip_ws();
        if (pos >= spec.size()) break;
        if (spec[pos] == 'x' || spec[pos] == 'X') {
            ++pos;
            continue;
        }
        parse_fail("unexpected character '" + spec.substr(pos, 1) + "' in \"" + spec + "\"");
    }
    return product(std::move(atoms));
}

std::string FiniteGroup::spec_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        if (i) out << "x";
        out << (atoms_[i].kind == GroupAtom::Kind::Symmetric ? "S" : "Z") << atoms_[i].param;
    }
    return out.str();
}

FiniteGroup::Elem FiniteGroup::identity() const {
    Elem e(static_cast<std::size_t>(code_len_), 0);
    for (std::size_t a = 0; a < atoms_.size(); ++a) {
        if (atoms_[a].kind == GroupAtom::Kind::Symmetric)
            for (int i = 0; i < atoms_[a].param; ++i) e[offsets_[a] + i] = i;
    }
    return e;
}

void FiniteGroup::validate_element(const Elem& a) const {
    if (static_cast<int>(a.size()) != code_len_)
        throw std::invalid_argument("element/spec mismatch: wrong code length");
    for (std::size_t at = 0; at < atoms_.size(); ++at) {
        if (atoms_[at].kind == GroupAtom::Kind::Symmetric) {
            int k = atoms_[at].param;
            std::vector<char> seen(static_cast<std::size_t>(k), 0);
            for (int i = 0; i < k; ++i) {
                int img = a[offsets_[at] + i];
                if (img < 0 || img >= k || seen[img])
                    throw std::invalid_argument("element/spec mismatch: not a permutation");
                seen[img] = 1;
            }
        } else {
            int r = a[offsets_[at]];
            if (r < 0 || r >= atoms_[at].param)
                throw std::invalid_argument("element/spec mismatch: residue out of range");
        }
    }
}

FiniteGroup::Elem FiniteGroup::mul(const Elem& a, const Elem& b) const {
    Elem r(static_cast<std::size_t>(code_len_));
    for (std::size_t at = 0; at < atoms_.size(); ++at) {
        int off = offsets_[at];
        if (atoms_[at].kind == GroupAtom::Kind::Symmetric) {
            int k = atoms_[at].param;
            for (int i = 0; i < k; ++i) r[off + i] = b[off + a[off + i]];  // left factor first
        } else {
            r[off] = (a[off] + b[off]) % atoms_[at].param;
        }
    }
    return r;
}

FiniteGroup::Elem FiniteGroup::inv(const Elem& a) const {
    Elem r(static_cast<std::size_t>(code_len_));
    for (std::size_t at = 0; at < atoms_.size(); ++at) {
        int off = offsets_[at];
        if (atoms_[at].kind == GroupAtom::Kind::Symmetric) {
            int k = atoms_[at].param;
            for (int i = 0; i < k; ++i) r[off + a[off + i]] = i;
        } else {
            r[off] = a[off] == 0 ? 0 : atoms_[at].param - a[off];
        }
    }
    return r;
}

bool FiniteGroup::is_identity(const Elem& a) const { return a == identity(); }

bool FiniteGroup::is_self_inverse(const Elem& a) const { return mul(a, a) == identity(); }

long long FiniteGroup::element_order(const Elem& a) const {
    Elem cur = a;
    long long ord = 1;
    const Elem id = identity();
    while (cur != id) {
        cur = mul(cur, a);
        ++ord;
        if (ord > static_cast<long long>(order_))
            throw std::logic_error("element_order: exceeded group order");
    }
    return ord;
}

std::uint64_t FiniteGroup::index_of(const Elem& a) const {
    std::uint64_t idx = 0, radix = 1;
    for (std::size_t at = 0; at < atoms_.size(); ++at) {
        int off = offsets_[at];
        std::uint64_t rank = 0;
        if (atoms_[at].kind == GroupAtom::Kind::Symmetric) {
            int k = atoms_[at].param;
            // Lehmer code
            for (int i = 0; i < k; ++i) {
                int smaller = 0;
                for (int j = i + 1; j < k; ++j)
                    if (a[off + j] < a[off + i]) ++smaller;
                rank = rank * static_cast<std::uint64_t>(k - i) + smaller;
            }
        } else {
            rank = static_cast<std::uint64_t>(a[off]);
        }
        idx += rank * radix;
        radix *= atom_sizes_[at];
    }
    return idx;
}

FiniteGroup::Elem FiniteGroup::from_index(std::uint64_t idx) const {
    Elem a(static_cast<std::size_t>(code_len_));
    for (std::size_t at = 0; at < atoms_.size(); ++at) {
        std::uint64_t rank = idx % atom_sizes_[at];
        idx /= atom_sizes_[at];
        int off = offsets_[at];
        if (atoms_[at].kind == GroupAtom::Kind::Symmetric) {
            int k = atoms_[at].param;
            std::vector<int> lehmer(static_cast<std::size_t>(k));
            for (int i = k - 1; i >= 0; --i) {
                lehmer[i] = static_cast<int>(rank % static_cast<std::uint64_t>(k - i));
                rank /= static_cast<std::uint64_t>(k - i);
            }
            std::vector<int> pool(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i) pool[i] = i;
            for (int i = 0; i < k; ++i) {
                a[off + i] = pool[lehmer[i]];
                pool.erase(pool.begin() + lehmer[i]);
            }
        } else {
            a[off] = static_cast<int>(rank);
        }
    }
    return a;
}

namespace {

// parses one permutation in cycle notation into an image array; cycle
// entries are single digits ("(01)(23)") unless separated by spaces or
// commas ("(0 1)", "(10, 11)")
std::vector<int> parse_cycles(const std::string& text, int k) {
    std::vector<int> img(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) img[i] = i;
    if (text == "e" || text == "id" || text == "()") return img;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    while (pos < text.size()) {
        skip_ws();
        if (pos >= text.size()) break;
        if (text[pos] != '(') parse_fail("expected '(' in permutation \"" + text + "\"");
        ++pos;
        std::string content;
        while (pos < text.size() && text[pos] != ')') content.push_back(text[pos++]);
        if (pos >= text.size()) parse_fail("unbalanced '(' in \"" + text + "\"");
        ++pos;  // consume ')'

        std::vector<int> cycle;
        if (content.find(' ') != std::string::npos || content.find(',') != std::string::npos) {
            std::string token;
            for (char ch : content + ",") {
                if (ch == ' ' || ch == ',' || ch == '\t') {
                    if (!token.empty()) cycle.push_back(std::stoi(token));
                    token.clear();
                } else {
                    token.push_back(ch);
                }
            }
        } else {
            for (char ch : content) {
                if (!std::isdigit(static_cast<unsigned char>(ch)))
                    parse_fail("bad cycle entry in \"" + text + "\"");
                cycle.push_back(ch - '0');
            }
        }
        for (int x : cycle)
            if (x < 0 || x >= k) parse_fail("cycle entry out of range in \"" + text + "\"");
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            int from = cycle[i], to = cycle[(i + 1) % cycle.size()];
            if (img[from] != from) parse_fail("repeated point in cycles \"" + text + "\"");
            img[from] = to;
        }
    }
    // validate bijection
    std::vector<char> seen(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < k; ++i) {
        if (seen[img[i]]) parse_fail("not a permutation: \"" + text + "\"");
        seen[img[i]] = 1;
    }
    return img;
}

// splits "a,b,c" at depth-zero commas
std::vector<std::string> split_top_level(const std::string& text) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char ch : text) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == ',' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    return parts;
}

std::string trim(const std::string& s) {
    auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

}  // namespace

FiniteGroup::Elem FiniteGroup::parse_element(const std::string& raw) const {
    std::string text = trim(raw);
    if (text == "e" || text == "id") return identity();
    Elem out(static_cast<std::size_t>(code_len_));
    std::vector<std::string> parts;
    if (atoms_.size() == 1) {
        parts = {text};
    } else {
        if (text.size() < 2 || text.front() != '(' || text.back() != ')')
            parse_fail("tuple element must be parenthesized: \"" + raw + "\"");
        parts = split_top_level(text.substr(1, text.size() - 2));
        if (parts.size() != atoms_.size())
            parse_fail("tuple arity mismatch in \"" + raw + "\"");
    }
    for (std::size_t at = 0; at < atoms_.size(); ++at) {
        std::string comp = trim(parts[at]);
        int off = offsets_[at];
        if (atoms_[at].kind == GroupAtom::Kind::Symmetric) {
            std::vector<int> img = parse_cycles(comp, atoms_[at].param);
            for (int i = 0; i < atoms_[at].param; ++i) out[off + i] = img[i];
        } else {
            if (comp == "e" || comp == "id") {
                out[off] = 0;
                continue;
            }
            long long v;
            try {
                v = std::stoll(comp);
            } catch (...) {
                parse_fail("bad residue \"" + comp + "\"");
            }
            long long m = atoms_[at].param;
            out[off] = static_cast<int>(((v % m) + m) % m);
        }
    }
    validate_element(out);
    return out;
}

std::string FiniteGroup::format_element(const Elem& a) const {
    if (is_identity(a)) return "e";
    std::ostringstream out;
    if (atoms_.size() > 1) out << "(";
    for (std::size_t at = 0; at < atoms_.size(); ++at) {
        if (at) out << ",";
        int off = offsets_[at];
        if (atoms_[at].kind == GroupAtom::Kind::Symmetric) {
            int k = atoms_[at].param;
            std::vector<char> done(static_cast<std::size_t>(k), 0);
            bool any = false;
            for (int i = 0; i < k; ++i) {
                if (done[i] || a[off + i] == i) continue;
                out << "(";
                int cur = i;
                bool first = true;
                while (!done[cur]) {
                    done[cur] = 1;
                    if (!first && k > 10) out << " ";
                    first = false;
                    out << cur;
                    cur = a[off + cur];
                }
                out << ")";
                any = true;
            }
            if (!any) out << "e";
        } else {
            out << a[off];
        }
    }
    if (atoms_.size() > 1) out << ")";
    return out.str();
}

std::vector<FiniteGroup::Elem> FiniteGroup::parse_element_set(const std::string& text) const {
    std::vector<Elem> out;
    for (const auto& part : split_top_level(text)) {
        std::string t = trim(part);
        if (t.empty()) continue;
        out.push_back(parse_element(t));
    }
    // canonical order, duplicates rejected
    std::sort(out.begin(), out.end(), [&](const Elem& x, const Elem& y) {
        return index_of(x) < index_of(y);
    });
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i] == out[i - 1])
            throw std::invalid_argument("element set contains duplicates");
    return out;
}

FiniteGroup::Elem group_eval(const FiniteGroup& g,
                             const std::vector<FiniteGroup::Elem>& elements,
                             const std::vector<int>& signs) {
    if (elements.size() != signs.size())
        throw std::invalid_argument("group_eval: elements/signs length mismatch");
    FiniteGroup::Elem acc = g.identity();
    for (std::size_t i = 0; i < elements.size(); ++i) {
        g.validate_element(elements[i]);
        if (signs[i] != 1 && signs[i] != -1)
            throw std::invalid_argument("group_eval: signs must be +1/-1");
        acc = g.mul(acc, signs[i] == 1 ? elements[i] : g.inv(elements[i]));
    }
    return acc;
}

bool validate_relation_witness(const FiniteGroup& g, const std::vector<FiniteGroup::Elem>& s,
                               const RelationWitness& w) {
    if (w.elements.empty() || w.elements.size() != w.signs.size()) return false;
    std::set<std::uint64_t> used, pool;
    for (const auto& e : s) pool.insert(g.index_of(e));
    for (const auto& e : w.elements) {
        std::uint64_t idx = g.index_of(e);
        if (!pool.count(idx) || used.count(idx)) return false;
        used.insert(idx);
    }
    return g.is_identity(group_eval(g, w.elements, w.signs));
}

namespace {

struct DissociationSearch {
    const FiniteGroup& g;
    const std::vector<FiniteGroup::Elem>& s;
    int nel;
    int max_m;
    std::uint64_t order;
    std::uint64_t identity_idx;
    std::vector<std::vector<std::uint32_t>> step;      // per element, g*s table
    std::vector<std::vector<std::uint32_t>> step_inv;  // per element, g*s^-1 (empty if self-inverse)
    std::vector<bool> visited;                          // (mask * order + product)
    std::vector<std::pair<int, int>> path;              // (element index, sign)
    std::optional<RelationWitness> witness;

    bool dfs(std::uint32_t mask, std::uint64_t prod) {
        if (mask != 0 && prod == identity_idx) {
            RelationWitness w;
            for (const auto& [i, sgn] : path) {
                w.elements.push_back(s[static_cast<std::size_t>(i)]);
                w.signs.push_back(sgn);
            }
            witness = std::move(w);
            return true;
        }
        if (std::popcount(mask) >= max_m) return false;
        for (int i = 0; i < nel; ++i) {
            if ((mask >> i) & 1) continue;
            std::uint32_t mask2 = mask | (1u << i);
            for (int sgn : {1, -1}) {
                if (sgn == -1 && step_inv[i].empty()) continue;  // self-inverse
                std::uint64_t prod2 =
                    (sgn == 1 ? step[i] : step_inv[i])[static_cast<std::size_t>(prod)];
                std::uint64_t key = static_cast<std::uint64_t>(mask2) * order + prod2;
                if (visited[key]) continue;
                visited[key] = true;
                path.emplace_back(i, sgn);
                if (dfs(mask2, prod2)) return true;
                path.pop_back();
            }
        }
        return false;
    }
};

}  // namespace

DissociationOutcome is_dissociated(const FiniteGroup& g,
                                   const std::vector<FiniteGroup::Elem>& s_in, int max_m,
                                   int set_cap) {
    std::vector<FiniteGroup::Elem> s = s_in;
    std::sort(s.begin(), s.end(), [&](const auto& x, const auto& y) {
        return g.index_of(x) < g.index_of(y);
    });
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i] == s[i - 1]) throw std::invalid_argument("is_dissociated: duplicate elements");
    for (const auto& e : s) g.validate_element(e);

    int nel = static_cast<int>(s.size());
    if (nel > set_cap)
        throw std::invalid_argument("is_dissociated: set larger than the configured cap (" +
                                    std::to_string(set_cap) + ")");
    if (max_m < 0) max_m = nel;
    max_m = std::min(max_m, nel);

    DissociationOutcome out;
    out.searched_up_to = max_m;
    if (nel == 0) return out;

    std::uint64_t states = (std::uint64_t{1} << nel) * g.order();
    if (states > (std::uint64_t{1} << 28))
        throw std::invalid_argument("is_dissociated: state space too large");

    DissociationSearch search{g, s, nel, max_m, g.order(), g.index_of(g.identity()),
                              {},  {},  std::vector<bool>(states, false), {}, {}};
    search.step.resize(static_cast<std::size_t>(nel));
    search.step_inv.resize(static_cast<std::size_t>(nel));
    for (int i = 0; i < nel; ++i) {
        bool self_inv = g.is_self_inverse(s[i]);
        FiniteGroup::Elem inv = g.inv(s[i]);
        search.step[i].resize(g.order());
        if (!self_inv) search.step_inv[i].resize(g.order());
        for (std::uint64_t idx = 0; idx < g.order(); ++idx) {
            FiniteGroup::Elem e = g.from_index(idx);
            search.step[i][idx] = static_cast<std::uint32_t>(g.index_of(g.mul(e, s[i])));
            if (!self_inv)
                search.step_inv[i][idx] = static_cast<std::uint32_t>(g.index_of(g.mul(e, inv)));
        }
    }

    if (search.dfs(0, search.identity_idx)) {
        out.verdict = DissociationOutcome::Verdict::Relation;
        out.witness = std::move(search.witness);
        if (!validate_relation_witness(g, s, *out.witness))
            throw std::logic_error("is_dissociated: produced an invalid witness");
        return out;
    }
    out.verdict = max_m == nel ? DissociationOutcome::Verdict::Dissociated
                               : DissociationOutcome::Verdict::NoRelationUpTo;
    return out;
}

namespace {

void dim_recurse(const FiniteGroup& g, const std::vector<FiniteGroup::Elem>& a,
                 std::size_t idx, std::vector<FiniteGroup::Elem>& current,
                 std::vector<FiniteGroup::Elem>& best, int set_cap) {
    if (current.size() + (a.size() - idx) <= best.size()) return;
    if (idx == a.size()) {
        if (current.size() > best.size()) best = current;
        return;
    }
    current.push_back(a[idx]);
    if (is_dissociated(g, current, -1, set_cap).dissociated())
        dim_recurse(g, a, idx + 1, current, best, set_cap);
    current.pop_back();
    dim_recurse(g, a, idx + 1, current, best, set_cap);
}

}  // namespace

DimensionResult additive_dimension(const FiniteGroup& g,
                                   const std::vector<FiniteGroup::Elem>& a_in, int set_cap) {
    std::vector<FiniteGroup::Elem> a = a_in;
    std::sort(a.begin(), a.end(), [&](const auto& x, const auto& y) {
        return g.index_of(x) < g.index_of(y);
    });
    a.erase(std::unique(a.begin(), a.end()), a.end());
    if (static_cast<int>(a.size()) > set_cap)
        throw std::invalid_argument("additive_dimension: set larger than the cap (" +
                                    std::to_string(set_cap) + ")");
    DimensionResult out;
    std::vector<FiniteGroup::Elem> current;
    dim_recurse(g, a, 0, current, out.maximizer, set_cap);
    out.dimension = static_cast<int>(out.maximizer.size());
    return out;
}

ColoredGraph translation_bipartite_graph(const FiniteGroup& g,
                                         const std::vector<FiniteGroup::Elem>& s,
                                         long long order_cap) {
    if (static_cast<long long>(g.order()) > order_cap)
        throw std::invalid_argument("translation_bipartite_graph: group order above cap");
    if (s.empty()) throw std::invalid_argument("translation_bipartite_graph: empty set");
    long long n = static_cast<long long>(g.order());
    std::vector<std::tuple<int, int, long long>> raw;
    raw.reserve(static_cast<std::size_t>(n) * s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        g.validate_element(s[i]);
        for (std::uint64_t idx = 0; idx < g.order(); ++idx) {
            FiniteGroup::Elem e = g.from_index(idx);
            std::uint64_t to = g.index_of(g.mul(e, s[i]));
            raw.emplace_back(static_cast<int>(idx), static_cast<int>(n + static_cast<long long>(to)),
                             static_cast<long long>(i));
        }
    }
    return ColoredGraph::from_edges(static_cast<int>(2 * n), raw);
}

ColoredGraph cayley_even_order_graph(const FiniteGroup& g,
                                     const std::vector<FiniteGroup::Elem>& s,
                                     long long order_cap) {
    if (static_cast<long long>(g.order()) > order_cap)
        throw std::invalid_argument("cayley_even_order_graph: group order above cap");
    if (s.empty()) throw std::invalid_argument("cayley_even_order_graph: empty set");
    // an inverse pair makes the edge colour ill-defined: {h, hs} is generated
    // by both s and s^-1, and s * (s^-1) = e is a relation
    {
        std::set<std::uint64_t> indices;
        for (const auto& e : s) indices.insert(g.index_of(e));
        for (const auto& e : s) {
            std::uint64_t inv_idx = g.index_of(g.inv(e));
            if (inv_idx != g.index_of(e) && indices.count(inv_idx))
                throw std::invalid_argument(
                    "cayley_even_order_graph: set contains an inverse pair, not dissociated");
        }
    }
    std::map<std::pair<int, int>, long long> edge_color;
    for (std::size_t i = 0; i < s.size(); ++i) {
        g.validate_element(s[i]);
        long long ord = g.element_order(s[i]);
        if (ord % 2 != 0)
            throw std::invalid_argument("cayley_even_order_graph: generator of odd order " +
                                        std::to_string(ord));
        auto add_edge = [&](std::uint64_t a, std::uint64_t b) {
            auto key = std::make_pair(static_cast<int>(std::min(a, b)),
                                      static_cast<int>(std::max(a, b)));
            auto [it, inserted] = edge_color.emplace(key, static_cast<long long>(i));
            if (!inserted)
                throw std::invalid_argument(
                    "cayley_even_order_graph: colour conflict, the set is not dissociated");
        };
        if (ord == 2) {
            for (std::uint64_t idx = 0; idx < g.order(); ++idx) {
                std::uint64_t to = g.index_of(g.mul(g.from_index(idx), s[i]));
                if (idx < to) add_edge(idx, to);
            }
        } else {
            // orbits of right-multiplication form even cycles; keep every
            // other edge starting at the smallest index of each orbit
            std::vector<char> seen(g.order(), 0);
            for (std::uint64_t start = 0; start < g.order(); ++start) {
                if (seen[start]) continue;
                std::vector<std::uint64_t> orbit;
                std::uint64_t cur = start;
                while (!seen[cur]) {
                    seen[cur] = 1;
                    orbit.push_back(cur);
                    cur = g.index_of(g.mul(g.from_index(cur), s[i]));
                }
                for (std::size_t t = 0; t + 1 < orbit.size(); t += 2)
                    add_edge(orbit[t], orbit[t + 1]);
            }
        }
    }
    std::vector<std::tuple<int, int, long long>> raw;
    raw.reserve(edge_color.size());
    for (const auto& [key, color] : edge_color) raw.emplace_back(key.first, key.second, color);
    return ColoredGraph::from_edges(static_cast<int>(g.order()), raw);
}

std::pair<FiniteGroup, std::vector<FiniteGroup::Elem>> lift_dissociated_product(
    const FiniteGroup& g, const std::vector<FiniteGroup::Elem>& y, int k) {
    if (k < 1) throw std::invalid_argument("lift_dissociated_product: k >= 1 required");
    FiniteGroup lifted = FiniteGroup::power(g, k);
    std::vector<FiniteGroup::Elem> out;
    const FiniteGroup::Elem id = lifted.identity();
    const int block = static_cast<int>(g.identity().size());
    for (int slot = 0; slot < k; ++slot) {
        for (const auto& e : y) {
            g.validate_element(e);
            FiniteGroup::Elem lift = id;
            std::copy(e.begin(), e.end(), lift.begin() + slot * block);
            out.push_back(std::move(lift));
        }
    }
    return {std::move(lifted), std::move(out)};
}

int dim_transpositions(int k) {
    if (k < 2 || k > 5)
        throw std::invalid_argument("dim_transpositions: need 2 <= k <= 5");
    FiniteGroup g = FiniteGroup::symmetric(k);
    std::vector<FiniteGroup::Elem> trans;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            FiniteGroup::Elem e = g.identity();
            std::swap(e[i], e[j]);
            trans.push_back(e);
        }
    const int t = static_cast<int>(trans.size());
    const std::uint64_t order = g.order();
    const std::uint64_t id = g.index_of(g.identity());

    std::vector<std::vector<std::uint32_t>> step(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) {
        step[i].resize(order);
        for (std::uint64_t idx = 0; idx < order; ++idx)
            step[i][idx] =
                static_cast<std::uint32_t>(g.index_of(g.mul(g.from_index(idx), trans[i])));
    }

    // reach[mask][p]: some ordering of exactly the transpositions in mask
    // multiplies to the permutation p
    std::vector<std::vector<bool>> reach(std::size_t{1} << t,
                                         std::vector<bool>(order, false));
    reach[0][id] = true;
    std::vector<std::uint32_t> masks_by_popcount(std::size_t{1} << t);
    for (std::uint32_t m = 0; m < (1u << t); ++m) masks_by_popcount[m] = m;
    std::sort(masks_by_popcount.begin(), masks_by_popcount.end(),
              [](std::uint32_t a, std::uint32_t b) {
                  return std::popcount(a) != std::popcount(b) ? std::popcount(a) < std::popcount(b)
                                                              : a < b;
              });
    for (std::uint32_t m : masks_by_popcount) {
        for (std::uint64_t p = 0; p < order; ++p) {
            if (!reach[m][p]) continue;
            for (int i = 0; i < t; ++i) {
                if ((m >> i) & 1) continue;
                reach[m | (1u << i)][step[i][p]] = true;
            }
        }
    }
    // bad[mask]: some non-empty submask multiplies (in some order) to id
    std::vector<char> bad(std::size_t{1} << t, 0);
    for (std::uint32_t m = 1; m < (1u << t); ++m) {
        if (reach[m][id]) {
            bad[m] = 1;
            continue;
        }
        for (int i = 0; i < t && !bad[m]; ++i)
            if ((m >> i) & 1) bad[m] = bad[m ^ (1u << i)];
    }
    int best = 0;
    for (std::uint32_t m = 0; m < (1u << t); ++m)
        if (!bad[m]) best = std::max(best, std::popcount(m));
    return best;
}

SimpleGraph schreier_transposition_graph(int k, const std::vector<FiniteGroup::Elem>& s) {
    FiniteGroup g = FiniteGroup::symmetric(k);
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : s) {
        g.validate_element(e);
        std::vector<int> moved;
        for (int i = 0; i < k; ++i)
            if (e[i] != i) moved.push_back(i);
        if (moved.size() != 2 || e[moved[0]] != moved[1] || e[moved[1]] != moved[0])
            throw std::invalid_argument("schreier_transposition_graph: element is not a transposition");
        edges.emplace_back(moved[0], moved[1]);
    }
    return SimpleGraph(k, std::move(edges));
}

}  // namespace rainbow
