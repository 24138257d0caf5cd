#include "padic/approximate_root.hpp"

#include <algorithm>

#include "padic/nodal_tree.hpp"

namespace padic {

Rat ApproximateRoot::value() const {
    Rat u(unit);
    if (valuation >= 0) return u * Rat(pow_p(p, static_cast<unsigned long>(valuation)));
    return u / Rat(pow_p(p, static_cast<unsigned long>(-valuation)));
}

std::vector<std::uint64_t> ApproximateRoot::digits(unsigned n) const {
    std::vector<std::uint64_t> out;
    Int u = unit, pp(static_cast<unsigned long>(p));
    for (unsigned i = 0; i < n; ++i) {
        Int q = u % pp;
        out.push_back(q.get_ui());
        u /= pp;
    }
    return out;
}

unsigned refined_digits(const ApproximateRoot& root, unsigned steps) {
    const unsigned L = root.deriv_valuation;
    if (root.certified_digits <= L) return root.certified_digits;
    std::uint64_t excess = root.certified_digits - L;
    for (unsigned i = 0; i < steps && excess < (1u << 20); ++i) excess *= 2;
    return static_cast<unsigned>(std::min<std::uint64_t>(L + excess, 1u << 20));
}

Int refine_root(const ApproximateRoot& root, unsigned steps) {
    const unsigned L = root.deriv_valuation;
    const unsigned K = refined_digits(root, steps);
    const unsigned W = K + L + 1;
    PAdicContext ctx = PAdicContext::trusted(root.p, W);
    ModPoly g = ModPoly::from_sparse(root.target, ctx);
    ModPoly dg = ModPoly::from_sparse(derivative(root.target), ctx);
    Int z = root.unit, pL = pow_p(root.p, L);
    PAdicContext zc = ctx.with_k(W - L);
    for (unsigned i = 0; i < steps; ++i) {
        Int G = g.evaluate(z);
        if (G == 0) break;
        Int D = dg.evaluate(z), u;
        if (D == 0 || ord_nonzero(D, root.p, &u) != static_cast<long>(L))
            throw DerivativeNotInvertible("refine_root: derivative valuation differs from the certificate");
        if (ord_nonzero(G, root.p) < static_cast<long>(L))
            throw DerivativeNotInvertible("refine_root: start point outside the basin");
        z = zc.reduce(z - (G / pL) * mod_inv(u, zc));
    }
    return PAdicContext::trusted(root.p, K).reduce(z);
}

Int unit_to_digits(const ApproximateRoot& root, unsigned digits) {
    unsigned steps = 0;
    while (refined_digits(root, steps) < digits) {
        if (++steps > 40) throw Error("unit_to_digits: too many digits requested");
    }
    return PAdicContext::trusted(root.p, digits).reduce(refine_root(root, steps));
}

ApproximateRoot make_certified_root(const SparsePoly& g, std::uint64_t p, long valuation, const Int& start,
                                    unsigned L) {
    ApproximateRoot r;
    r.p = p;
    r.valuation = valuation;
    r.target = g;
    r.deriv_valuation = L;
    r.certified_digits = L + 2;
    PAdicContext ctx = PAdicContext::trusted(p, r.certified_digits + L + 1);
    r.unit = PAdicContext::trusted(p, r.certified_digits)
                 .reduce(newton_refine(ModPoly::from_sparse(g, ctx), start, L, r.certified_digits));
    return r;
}

}  // namespace padic
