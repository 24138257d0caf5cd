#include "padic/tetranomial.hpp"

#include <cmath>

#include "padic/nodal_tree.hpp"

namespace padic::tetra {

void Params::validate() const {
    if (!is_prime_u64(p)) throw InvalidParams("p must be prime");
    if (h < 3) throw InvalidParams("h must be at least 3");
    if (d < 4 || d % 2 != 0) throw InvalidParams("d must be even and at least 4");
    if (d > static_cast<unsigned>(std::floor(std::exp(static_cast<double>(h)))))
        throw InvalidParams("d must not exceed floor(e^h)");
}

SparsePoly generate(const Params& prm) {
    prm.validate();
    const std::uint64_t p = prm.p;
    return SparsePoly({{0, -pow_p(p, 2 * prm.h - 2)},
                       {1, 2 * pow_p(p, prm.h - 1)},
                       {2, Int(-1)},
                       {prm.d, pow_p(p, 2 * prm.h)}});
}

SparsePoly rescaled(const Params& prm) {
    prm.validate();
    std::vector<Term> terms;
    Int binom = 1;
    const unsigned step = prm.half() + 1;
    for (unsigned i = 0; i <= prm.d; ++i) {
        if (i > 0) binom = binom * (prm.d - i + 1) / i;
        terms.push_back({i, binom * pow_p(prm.p, static_cast<unsigned long>(i) * step)});
    }
    terms.push_back({2, Int(-1)});
    return SparsePoly(terms);
}

unsigned default_precision(const Params& prm) { return prm.half() + prm.h + 8; }
unsigned min_precision(const Params& prm) { return prm.half() + prm.h + 4; }

namespace {

long ord_or(const Int& v, std::uint64_t p, long cap) { return v == 0 ? cap : std::min(cap, ord_nonzero(v, p)); }

Int eval_deriv(const SparsePoly& f, const Int& x) {
    Int r = 0;
    for (auto& t : f.terms())
        if (t.exp > 0) {
            Int pw;
            mpz_pow_ui(pw.get_mpz_t(), x.get_mpz_t(), t.exp - 1);
            r += t.coef * Int(static_cast<unsigned long>(t.exp)) * pw;
        }
    return r;
}

}  // namespace

Collision collision_order(const Params& prm, unsigned precision) {
    prm.validate();
    if (precision < min_precision(prm)) throw PrecisionTooLow("precision must be at least (h-1)d/2 + h + 4");
    const std::uint64_t p = prm.p;
    Collision c;
    c.precision = precision;
    c.shift = prm.half() + prm.h;
    const unsigned n = precision - c.shift;  // digits of x needed
    c.starts = p == 2 ? std::vector<std::uint64_t>{3, 5} : std::vector<std::uint64_t>{1, p - 1};
    // ord G'(+-1) = ord_p 2; Newton from the start residues converges quadratically.
    const unsigned L = p == 2 ? 1 : 0;
    SparsePoly G = rescaled(prm);
    ModPoly Gm = ModPoly::from_sparse(G, PAdicContext::trusted(p, n + L + 1));
    Int xs[2];
    for (int i = 0; i < 2; ++i)
        xs[i] = PAdicContext::trusted(p, n).reduce(newton_refine(Gm, Int(static_cast<unsigned long>(c.starts[i])), L, n));
    c.x1 = xs[0];
    c.x2 = xs[1];
    const Int pe = pow_p(p, c.shift), base = pow_p(p, prm.h - 1), mod = pow_p(p, precision);
    c.zeta1 = (pe * c.x1 + base) % mod;
    c.zeta2 = (pe * c.x2 + base) % mod;
    c.order = ord_or(c.zeta1 - c.zeta2, p, precision);
    SparsePoly F = generate(prm);
    c.deriv_formula = ord_or(Int(prm.d), p, 1L << 30) + static_cast<long>(prm.h - 1) * (prm.d - 1);
    const long cap = 4L * precision + 4L * prm.h;
    const Int* z[2] = {&c.zeta1, &c.zeta2};
    for (int i = 0; i < 2; ++i) {
        long dF = ord_or(eval_deriv(F, *z[i]), p, cap);
        c.deriv_valuation[i] = dF - 2L * prm.h;  // f = F / p^{2h}
        c.residual[i] = ord_or(evaluate(F, *z[i]), p, cap);
        c.residual_required[i] = precision + std::min<long>(dF, precision);
        if (c.residual[i] < c.residual_required[i])
            throw Error("tetranomial root fails its residual check");
        if (dF >= static_cast<long>(precision)) throw PrecisionTooLow("precision too low to resolve f'(zeta)");
    }
    return c;
}

}  // namespace padic::tetra
