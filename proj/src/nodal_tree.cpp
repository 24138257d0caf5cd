#include "padic/nodal_tree.hpp"

#include <algorithm>
#include <deque>

namespace padic {

unsigned NodalTree::depth() const {
    unsigned d = 0;
    for (auto& n : nodes) d = std::max(d, n.depth);
    return d;
}

unsigned s_value(const ModPoly& g, const Int& zeta) {
    TaylorExpander te(g, zeta);
    const long k = static_cast<long>(g.k);
    long best = k;
    for (long i = 0; i < best; ++i) {
        Int t = te.next();
        long o = (t == 0) ? k : std::min(k, ord_nonzero(t, g.p));
        best = std::min(best, i + o);
    }
    return static_cast<unsigned>(best);
}

Int digits_value(const std::vector<std::uint64_t>& digits, std::uint64_t p) {
    Int v = 0, pw = 1;
    Int pp(static_cast<unsigned long>(p));
    for (auto d : digits) {
        v += pw * static_cast<unsigned long>(d);
        pw *= pp;
    }
    return v;
}

namespace {

constexpr std::uint64_t kSplitDegreeLimit = 4096;

unsigned root_multiplicity(const ModPoly& g, std::uint64_t digit, unsigned cap) {
    ModPoly g1 = g;
    g1.k = 1;
    g1.mod = Int(static_cast<unsigned long>(g.p));
    for (auto& t : g1.terms) t.second %= g1.mod;
    std::erase_if(g1.terms, [](auto& t) { return t.second == 0; });
    TaylorExpander te(g1, Int(static_cast<unsigned long>(digit)));
    unsigned m = 0;
    while (m < cap && te.next() == 0) ++m;
    return m;
}

// Roots of the mod-p reduction of a node polynomial.
std::vector<FpRoot> node_roots(const NodalNode& n, bool is_root, const TreeOptions& opt) {
    const std::uint64_t p = n.poly.p;
    if (is_root && opt.root_digits) {
        PAdicContext c1 = PAdicContext::trusted(p, 1);
        std::vector<std::uint64_t> xs = *opt.root_digits;
        for (auto& x : xs) x %= p;
        std::sort(xs.begin(), xs.end());
        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
        std::vector<FpRoot> out;
        for (auto x : xs) {
            if (x == 0 && opt.skip_zero_root_digit) continue;
            Int X(static_cast<unsigned long>(x)), v = 0, d = 0;
            for (auto& [e, c] : n.poly.terms) {
                v += c * mod_pow(X, e, c1);
                if (e > 0) d += c * Int(static_cast<unsigned long>(e % p)) * mod_pow(X, e - 1, c1);
            }
            if (c1.reduce(v) == 0) out.push_back({x, c1.reduce(d) == 0});
        }
        return out;
    }
    if (!is_root) {
        // Dense low-degree nodal polynomial: distinct roots via gcd with x^p - x, digits by scan.
        FpPoly h;
        Int pp(static_cast<unsigned long>(p));
        for (auto& [e, c] : n.poly.terms) {
            if (h.size() <= e) h.resize(e + 1, 0);
            h[e] = Int(c % pp).get_ui();
        }
        fp::trim(h);
        if (p > opt.prime_cap) return roots_fp_split(h, p);
        auto roots = roots_fp_exhaustive(h, p, opt.prime_cap);
        unsigned distinct = gcd_with_frobenius(h, p);
        if (distinct != roots.size()) throw Error("internal: Frobenius root count disagrees with scan");
        return roots;
    }
    if (p > opt.prime_cap && n.degree_mod_p >= 0 && static_cast<std::uint64_t>(n.degree_mod_p) <= kSplitDegreeLimit) {
        Int pp(static_cast<unsigned long>(p));
        FpPoly h(static_cast<std::size_t>(n.degree_mod_p) + 1, 0);
        for (auto& [e, c] : n.poly.terms)
            if (e < h.size()) h[e] = (h[e] + Int(c % pp).get_ui()) % p;
        auto roots = roots_fp_split(h, p);
        if (opt.skip_zero_root_digit) std::erase_if(roots, [](const FpRoot& r) { return r.root == 0; });
        return roots;
    }
    return roots_fp_exhaustive(n.poly, opt.prime_cap, opt.skip_zero_root_digit);
}

}  // namespace

NodalTree build_tree(const ModPoly& g, const TreeOptions& opt) {
    NodalTree t;
    t.p = g.p;
    t.k = g.k;
    NodalNode root;
    root.poly = g;
    root.k_local = g.k;
    root.degree_mod_p = g.degree_mod_p();
    if (root.degree_mod_p < 0) throw ContentDivisible("p divides every coefficient; divide out the content first");
    t.nodes.push_back(std::move(root));
    for (std::size_t idx = 0; idx < t.nodes.size(); ++idx) {
        if (t.nodes.size() > opt.node_limit) throw Error("nodal tree exceeds node limit");
        auto roots = node_roots(t.nodes[idx], idx == 0, opt);
        for (auto& r : roots) {
            NodalNode& n = t.nodes[idx];
            if (!r.degenerate) {
                n.nondegenerate_roots.push_back(r.root);
                continue;
            }
            DegenerateDigit dd;
            dd.digit = r.root;
            dd.s = s_value(n.poly, Int(static_cast<unsigned long>(r.root)));
            dd.multiplicity = root_multiplicity(n.poly, r.root, opt.multiplicity_cap);
            if (dd.s >= 2 && dd.s + 1 <= n.k_local) {
                NodalNode c;
                c.digits = n.digits;
                c.digits.push_back(r.root);
                c.depth = n.depth + 1;
                c.poly = shift_rescale(n.poly, Int(static_cast<unsigned long>(r.root)), dd.s);
                c.k_local = n.k_local - dd.s;
                c.s_consumed = n.s_consumed + dd.s;
                c.degree_mod_p = c.poly.degree_mod_p();
                dd.child = static_cast<int>(t.nodes.size());
                t.nodes[idx].degenerate.push_back(dd);
                t.nodes.push_back(std::move(c));
                continue;
            }
            n.degenerate.push_back(dd);
        }
    }
    return t;
}

NodalTree build_tree(const SparsePoly& f, const PAdicContext& ctx, const TreeOptions& opt) {
    return build_tree(ModPoly::from_sparse(f, ctx), opt);
}

std::size_t count_nondegenerate_roots(const NodalTree& t) {
    std::size_t n = 0;
    for (auto& node : t.nodes) n += node.nondegenerate_roots.size();
    return n;
}

std::vector<UnresolvedLeaf> unresolved_leaves(const NodalTree& t) {
    std::vector<UnresolvedLeaf> out;
    for (std::size_t i = 0; i < t.nodes.size(); ++i)
        for (auto& d : t.nodes[i].degenerate)
            // s = 1 below the local precision means the digit disc holds no root
            if (d.child < 0 && (d.s >= 2 || d.s >= t.nodes[i].k_local)) {
                UnresolvedLeaf u;
                u.node = i;
                u.digits = t.nodes[i].digits;
                u.digits.push_back(d.digit);
                u.multiplicity = d.multiplicity;
                out.push_back(std::move(u));
            }
    return out;
}

std::vector<HarvestedRoot> harvest_roots(const NodalTree& t) {
    std::vector<HarvestedRoot> out;
    for (auto& n : t.nodes)
        for (auto r : n.nondegenerate_roots) {
            HarvestedRoot h;
            h.digits = n.digits;
            h.digits.push_back(r);
            h.depth = n.depth;
            h.s_consumed = n.s_consumed;
            out.push_back(std::move(h));
        }
    std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.digits < b.digits; });
    return out;
}

std::vector<std::pair<std::vector<std::uint64_t>, std::size_t>> root_signature(const NodalTree& t) {
    std::vector<std::pair<std::vector<std::uint64_t>, std::size_t>> sig;
    for (auto& n : t.nodes)
        if (!n.nondegenerate_roots.empty()) sig.emplace_back(n.digits, n.nondegenerate_roots.size());
    std::sort(sig.begin(), sig.end());
    return sig;
}

StabilizedTree stabilized_tree(const std::function<ModPoly(unsigned)>& make, unsigned k_start, unsigned k_cap,
                               const TreeOptions& opt, const LeafExplainer& explain) {
    if (k_start < 1) throw Error("k_start must be at least 1");
    k_cap = std::max(k_cap, k_start);
    StabilizedTree out;
    std::optional<std::vector<std::pair<std::vector<std::uint64_t>, std::size_t>>> prev;
    unsigned k = k_start;
    while (true) {
        NodalTree t = build_tree(make(k), opt);
        auto sig = root_signature(t);
        bool certified = true;
        for (auto& leaf : unresolved_leaves(t))
            if (!explain || !explain(leaf, k)) {
                certified = false;
                break;
            }
        out.signature_repeated = prev && *prev == sig;
        if (certified || k >= k_cap) {
            out.tree = std::move(t);
            out.k_used = k;
            out.mode = certified ? "certified" : "cap";
            out.cap_reached = !certified;
            return out;
        }
        prev = std::move(sig);
        k = (k > k_cap / 2) ? k_cap : 2 * k;
    }
}

StabilizedTree stabilized_tree(const SparsePoly& f, std::uint64_t p, unsigned k_start, unsigned k_cap,
                               const TreeOptions& opt, const LeafExplainer& explain) {
    PAdicContext ctx(p, 1);
    return stabilized_tree([&](unsigned k) { return ModPoly::from_sparse(f, ctx.with_k(k)); }, k_start, k_cap, opt,
                           explain);
}

ModPoly nodal_reconstruct(const SparsePoly& f, std::uint64_t p, const std::vector<std::uint64_t>& digits,
                          unsigned S, unsigned k_local) {
    const unsigned i = static_cast<unsigned>(digits.size());
    const unsigned K = k_local + S;
    PAdicContext ctx = PAdicContext::trusted(p, K);
    ModPoly g = ModPoly::from_sparse(f, ctx);
    Int mu = digits_value(digits, p);
    TaylorExpander te(g, mu);
    PAdicContext out = ctx.with_k(k_local);
    std::uint64_t deg = f.degree();
    std::vector<Int> coeffs;
    Int ps = pow_p(p, S);
    for (std::uint64_t j = 0; j <= std::min<std::uint64_t>(deg, K); ++j) {
        Int t = te.next();
        // coefficient of x^j in f(mu + p^i x) is p^{ij} T_j
        Int full = t * pow_p(p, static_cast<unsigned long>(i) * j);
        if (full % ps != 0) throw DivisibilityViolation("reconstruction: p^S does not divide a coefficient");
        coeffs.push_back(out.reduce(full / ps));
    }
    return ModPoly::from_dense(coeffs, out);
}

Int newton_refine(const ModPoly& g, Int z, unsigned L, unsigned digits) {
    PAdicContext ctx = g.ctx();
    if (g.k < digits + L + 1) throw Error("newton_refine: working precision too low");
    ModPoly dg = g;
    dg.terms.clear();
    for (auto& [e, c] : g.terms)
        if (e > 0) {
            Int c2 = ctx.reduce(c * Int(static_cast<unsigned long>(e)));
            if (c2 != 0) dg.terms.emplace_back(e - 1, c2);
        }
    Int pL = pow_p(g.p, L);
    PAdicContext zc = ctx.with_k(g.k - L);
    for (int iter = 0; iter < 256; ++iter) {
        Int G = g.evaluate(z);
        if (G == 0 || ord_nonzero(G, g.p) - static_cast<long>(L) >= static_cast<long>(digits)) return zc.reduce(z);
        Int D = dg.evaluate(z), u;
        if (D == 0 || ord_nonzero(D, g.p, &u) != static_cast<long>(L))
            throw NotInvertible("newton_refine: derivative valuation differs from the certificate");
        if (ord_nonzero(G, g.p) < static_cast<long>(L)) throw Error("newton_refine: start point too far from root");
        z = zc.reduce(z - (G / pL) * mod_inv(u, zc));
    }
    throw Error("newton_refine: no convergence");
}

}  // namespace padic
