#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "padic/finite_field.hpp"
#include "padic/polynomial.hpp"

namespace padic {

struct ContentDivisible : Error {
    using Error::Error;
};

struct DegenerateDigit {
    std::uint64_t digit;
    unsigned s;             // s(f, digit), capped at k_local (then meaning ">= k_local")
    unsigned multiplicity;  // multiplicity of digit as a root of the mod-p reduction (capped)
    int child = -1;         // node index when expanded
};

struct NodalNode {
    std::vector<std::uint64_t> digits;  // zeta_0, ..., zeta_{i-1}
    unsigned depth = 0;
    ModPoly poly;  // f_{i,zeta} mod p^{k_local}
    unsigned k_local = 0;
    unsigned s_consumed = 0;  // sum of s-values along the path
    std::int64_t degree_mod_p = -1;
    std::vector<std::uint64_t> nondegenerate_roots;
    std::vector<DegenerateDigit> degenerate;
};

struct NodalTree {
    std::uint64_t p = 2;
    unsigned k = 1;
    std::vector<NodalNode> nodes;  // nodes[0] is the root; children follow their parents
    unsigned depth() const;
    std::size_t node_count() const { return nodes.size(); }
};

struct TreeOptions {
    bool skip_zero_root_digit = true;        // roots divisible by p are handled by valuation rescaling
    std::optional<std::vector<std::uint64_t>> root_digits;  // only these leading digits (restricted modes)
    std::uint64_t prime_cap = kDefaultPrimeCap;
    std::size_t node_limit = 200000;
    unsigned multiplicity_cap = 8;
};

// A degenerate digit whose s-value exhausted the local precision (not expanded).
struct UnresolvedLeaf {
    std::size_t node;
    std::vector<std::uint64_t> digits;  // node path plus the degenerate digit
    unsigned multiplicity;
};

// Root harvested from a node: the digits of the node path followed by a non-degenerate digit.
struct HarvestedRoot {
    std::vector<std::uint64_t> digits;
    unsigned depth;       // node depth i; the root is digits[0..i] with digits[i] the non-degenerate one
    unsigned s_consumed;  // S at that node, so ord g'(root) = S - i
};

unsigned s_value(const ModPoly& g, const Int& zeta);
NodalTree build_tree(const ModPoly& g, const TreeOptions& opt = {});
NodalTree build_tree(const SparsePoly& f, const PAdicContext& ctx, const TreeOptions& opt = {});
std::size_t count_nondegenerate_roots(const NodalTree& t);
std::vector<UnresolvedLeaf> unresolved_leaves(const NodalTree& t);
std::vector<HarvestedRoot> harvest_roots(const NodalTree& t);

// Multiset {(digit path, n_p) : n_p > 0}, used to detect stabilization.
std::vector<std::pair<std::vector<std::uint64_t>, std::size_t>> root_signature(const NodalTree& t);

// Decides whether an unresolved leaf is fully accounted for (e.g. by a known double root).
using LeafExplainer = std::function<bool(const UnresolvedLeaf&, unsigned k)>;

struct StabilizedTree {
    NodalTree tree;
    unsigned k_used = 0;
    std::string mode;  // "certified" or "cap"
    bool cap_reached = false;
    bool signature_repeated = false;  // same root signature as the previous precision
};

// Builds the tree of `make(k)` at k = k_start, 2 k_start, ... until every unresolved leaf is
// explained (no explainer: until there are none), or k_cap is reached. Once no unexplained leaf
// remains, every root of the input lies in a non-degenerate digit disc and the count is final.
StabilizedTree stabilized_tree(const std::function<ModPoly(unsigned)>& make, unsigned k_start, unsigned k_cap,
                               const TreeOptions& opt = {}, const LeafExplainer& explain = nullptr);
StabilizedTree stabilized_tree(const SparsePoly& f, std::uint64_t p, unsigned k_start, unsigned k_cap,
                               const TreeOptions& opt = {}, const LeafExplainer& explain = nullptr);

// p^{-S} f(mu + p^i x) mod p^{k_local}, recomputed from scratch (reconstruction identity).
ModPoly nodal_reconstruct(const SparsePoly& f, std::uint64_t p, const std::vector<std::uint64_t>& digits,
                          unsigned S, unsigned k_local);

// Newton refinement of z for g (g known mod p^{g.k}) when ord g'(root) = L;
// returns z accurate to `digits` p-adic digits (requires g.k >= digits + L + 1).
Int newton_refine(const ModPoly& g, Int z, unsigned L, unsigned digits);

Int digits_value(const std::vector<std::uint64_t>& digits, std::uint64_t p);

}  // namespace padic
