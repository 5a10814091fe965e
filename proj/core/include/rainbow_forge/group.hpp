#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rainbow_forge/graph.hpp"

namespace rainbow {

struct GroupAtom {
    enum class Kind { Symmetric, Cyclic };
    Kind kind;
    int param;  // k for S(k), modulus for Z(m)
};

// Concrete finite group: a direct product of symmetric and cyclic atoms.
// Elements are flat code vectors (image array per symmetric atom, one
// residue per cyclic atom). Composition applies the LEFT factor first:
// (a*b)(i) = b(a(i)); the product g*s means "g then s" throughout.
class FiniteGroup {
public:
    using Elem = std::vector<int>;

    static FiniteGroup symmetric(int k);
    static FiniteGroup cyclic(int m);
    static FiniteGroup product(std::vector<GroupAtom> atoms);
    static FiniteGroup power(const FiniteGroup& base, int k);

    // "S3", "Z2^4", "S3^2", "Z6xS3"
    static FiniteGroup parse(const std::string& spec);

    const std::vector<GroupAtom>& atoms() const { return atoms_; }
    unsigned long long order() const { return order_; }
    std::string spec_string() const;

    Elem identity() const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem inv(const Elem& a) const;
    bool is_identity(const Elem& a) const;
    bool is_self_inverse(const Elem& a) const;
    long long element_order(const Elem& a) const;

    // mixed-radix index with atom 0 least significant; for Z(2)^m this makes
    // the element (b_0, ..., b_{m-1}) the integer with bit i = b_i
    std::uint64_t index_of(const Elem& a) const;
    Elem from_index(std::uint64_t idx) const;

    // permutations in cycle notation ("(01)(23)", "(0 1 2)"), residues as
    // integers, tuples parenthesized and comma-separated; "e" is the identity
    Elem parse_element(const std::string& text) const;
    std::string format_element(const Elem& a) const;
    std::vector<Elem> parse_element_set(const std::string& text) const;

    void validate_element(const Elem& a) const;

private:
    std::vector<GroupAtom> atoms_;
    std::vector<int> offsets_;      // start of each atom's code segment
    std::vector<std::uint64_t> atom_sizes_;
    unsigned long long order_ = 1;
    int code_len_ = 0;

    void finish_init();
};

// Left-to-right product of elements[i]^signs[i]; empty input gives identity.
FiniteGroup::Elem group_eval(const FiniteGroup& g,
                             const std::vector<FiniteGroup::Elem>& elements,
                             const std::vector<int>& signs);

// Non-trivial relation g1^e1 ... gm^em = identity over distinct elements.
struct RelationWitness {
    std::vector<FiniteGroup::Elem> elements;
    std::vector<int> signs;  // +1 / -1
};

bool validate_relation_witness(const FiniteGroup& g, const std::vector<FiniteGroup::Elem>& s,
                               const RelationWitness& w);

struct DissociationOutcome {
    enum class Verdict { Dissociated, Relation, NoRelationUpTo };
    Verdict verdict = Verdict::Dissociated;
    std::optional<RelationWitness> witness;
    int searched_up_to = 0;  // relation lengths covered

    bool dissociated() const { return verdict == Verdict::Dissociated; }
};

inline constexpr int kDissociationSetCap = 12;

// Depth-first reachability over (used-element set, running product) states,
// signs enumerated per step (skipped for self-inverse elements). Exhausting
// the state space with max_m = |S| proves dissociation; a smaller max_m
// yields the flagged verdict NoRelationUpTo.
DissociationOutcome is_dissociated(const FiniteGroup& g,
                                   const std::vector<FiniteGroup::Elem>& s, int max_m = -1,
                                   int set_cap = kDissociationSetCap);

inline constexpr int kDimensionSetCap = 14;

struct DimensionResult {
    int dimension = 0;
    std::vector<FiniteGroup::Elem> maximizer;
};

// Branch-and-bound maximum dissociated subset of A.
DimensionResult additive_dimension(const FiniteGroup& g,
                                   const std::vector<FiniteGroup::Elem>& a,
                                   int set_cap = kDimensionSetCap);

inline constexpr long long kGroupGraphOrderCap = 10'000;

// Bipartite graph on two copies of G: edge (left g, right g*s) coloured by s
// for every g in G, s in S. |S|-regular and properly coloured.
ColoredGraph translation_bipartite_graph(const FiniteGroup& g,
                                         const std::vector<FiniteGroup::Elem>& s,
                                         long long order_cap = kGroupGraphOrderCap);

// Cayley graph of G with generators S u S^{-1}, edges coloured by their
// unique generator; for generators of order > 2 every other edge of each
// monochromatic cycle is deleted. Requires every s of even order and S
// dissociated (a colour conflict during assignment reports the violation).
ColoredGraph cayley_even_order_graph(const FiniteGroup& g,
                                     const std::vector<FiniteGroup::Elem>& s,
                                     long long order_cap = kGroupGraphOrderCap);

// The k|Y| elements (e,...,e,g,e,...,e) of G^k with g in Y.
std::pair<FiniteGroup, std::vector<FiniteGroup::Elem>> lift_dissociated_product(
    const FiniteGroup& g, const std::vector<FiniteGroup::Elem>& y, int k);

// Additive dimension of the set of all transpositions of S(k): the largest
// set of transpositions such that no non-empty sequence of distinct members
// multiplies, in any order, to the identity. Exact via (mask, product)
// reachability; k <= 5.
int dim_transpositions(int k);

// Graph on {0..k-1} with an edge {i,j} per transposition (i j) in S.
SimpleGraph schreier_transposition_graph(int k,
                                         const std::vector<FiniteGroup::Elem>& s);

}  // namespace rainbow
