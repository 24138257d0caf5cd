#include "padic/binomial_solver.hpp"

#include <cmath>
#include <numeric>

#include "padic/finite_field.hpp"
#include "padic/nodal_tree.hpp"

namespace padic {

const char* reason_name(BinomialReason r) {
    switch (r) {
        case BinomialReason::Ok: return "ok";
        case BinomialReason::NoIntegralValuation: return "no-integral-valuation";
        case BinomialReason::PowerTestFailed: return "power-test-failed";
    }
    return "?";
}

SparsePoly BinomialAnalysis::unit_poly() const { return SparsePoly({{0, u1}, {n, u2}}); }

BinomialAnalysis analyze_binomial(const BinomialInput& in) {
    if (in.d == 0) throw Error("binomial: exponent must be nonzero");
    if (in.c1 == 0 || in.c2 == 0) throw Error("binomial: coefficients must be nonzero");
    if (!is_prime_u64(in.p)) throw NotPrime("binomial: p is not prime");
    BinomialAnalysis a;
    const std::uint64_t p = in.p;
    Int c1 = in.c1, c2 = in.c2;
    if (in.d < 0) {
        a.reciprocal = true;
        std::swap(c1, c2);
        a.n = static_cast<std::uint64_t>(-(in.d + 1)) + 1;
    } else {
        a.n = static_cast<std::uint64_t>(in.d);
    }
    long v1 = ord_nonzero(c1, p, &a.u1), v2 = ord_nonzero(c2, p, &a.u2);
    Int diff = v1 - v2;
    Int nn(std::to_string(a.n));
    if (diff % nn != 0) {
        a.reason = BinomialReason::NoIntegralValuation;
        return a;
    }
    a.valuation = Int(diff / nn).get_si();
    a.ell = a.n == 0 ? 0 : static_cast<unsigned>(ord_nonzero(nn, p));
    PAdicContext ctx = PAdicContext::trusted(p, 2 * a.ell + 1);
    Int w = ctx.reduce(-a.u1 * mod_inv(ctx.reduce(a.u2), ctx));  // -u1/u2
    bool ok;
    if (p == 2) {
        a.gamma = (a.n % 2 == 0) ? 2 : 1;
        if (a.n % 2 == 1) {
            ok = true;
        } else {
            PAdicContext c8 = PAdicContext::trusted(2, 3);
            ok = c8.reduce(a.u1 + a.u2) == 0 && mod_pow(w, Int(1) << (a.ell - 1), ctx) == 1;
        }
    } else {
        a.gamma = std::gcd(a.n, p - 1);
        Int e = pow_p(p, a.ell) * static_cast<unsigned long>((p - 1) / a.gamma);
        ok = mod_pow(w, e, ctx) == 1;
    }
    if (!ok) {
        a.reason = BinomialReason::PowerTestFailed;
        return a;
    }
    a.count = a.gamma;
    return a;
}

std::size_t count_binomial_roots(const BinomialInput& in) { return analyze_binomial(in).count; }

std::vector<std::uint64_t> binomial_leading_digits(const BinomialInput& in) {
    BinomialAnalysis a = analyze_binomial(in);
    if (a.count == 0) return {};
    const std::uint64_t p = in.p;
    if (p == 2) return a.gamma == 1 ? std::vector<std::uint64_t>{1} : std::vector<std::uint64_t>{1, 3};
    PAdicContext c1 = PAdicContext::trusted(p, 1);
    std::uint64_t w = c1.reduce(-a.u1 * mod_inv(c1.reduce(a.u2), c1)).get_ui();
    // x^n = w on F_p^*  <=>  x^gamma = w^r with r = (n/gamma)^{-1} mod (p-1)/gamma
    std::uint64_t m = (p - 1) / a.gamma;
    std::uint64_t r = 0;
    if (m > 1) {
        Int ng(std::to_string(a.n / a.gamma));
        Int inv;
        Int mm(static_cast<unsigned long>(m));
        mpz_invert(inv.get_mpz_t(), Int(ng % mm).get_mpz_t(), mm.get_mpz_t());
        r = inv.get_ui();
    }
    std::uint64_t c = fp::pow(w, r, p);
    return binomial_coset_roots(c, a.gamma, p);
}

Int binomial_newton_correction(const BinomialInput& in, std::uint64_t x) {
    BinomialAnalysis a = analyze_binomial(in);
    const std::uint64_t p = in.p;
    SparsePoly g = a.unit_poly();
    Int X(static_cast<unsigned long>(x));
    Rat pl(pow_p(p, a.ell));
    Rat num = Rat(evaluate(g, X)) / pl, den = Rat(evaluate(derivative(g), X)) / pl;
    Rat q = num / den;
    PAdicContext c2 = PAdicContext::trusted(p, 2);
    if (ord_rat(q, p) < Valuation(0L)) throw Error("binomial_newton_correction: correction is not p-integral");
    Int qv = c2.reduce(q.get_num() * mod_inv(c2.reduce(q.get_den()), c2));
    return c2.reduce(X - qv);
}

BinomialSolution solve_binomial(const BinomialInput& in, std::uint64_t prime_cap) {
    BinomialSolution s;
    s.analysis = analyze_binomial(in);
    s.reason = s.analysis.reason;
    if (s.analysis.count == 0) return s;
    const BinomialAnalysis& a = s.analysis;
    SparsePoly g = a.unit_poly();
    TreeOptions opt;
    opt.prime_cap = prime_cap;
    if (in.p > prime_cap) {
        // Leading digits from the coset ladder avoid the full F_p scan.
        opt.root_digits = binomial_leading_digits(in);
    }
    unsigned k0 = 2 * a.ell + 3;
    StabilizedTree st = stabilized_tree(g, in.p, k0, 4 * k0 + 16, opt);
    auto harvest = harvest_roots(st.tree);
    if (harvest.size() != a.count || st.cap_reached)
        throw Error("binomial: tree harvest disagrees with the root count");
    s.k_used = st.k_used;
    for (auto& h : harvest) {
        ApproximateRoot r = make_certified_root(g, in.p, a.valuation, digits_value(h.digits, in.p),
                                                h.s_consumed - h.depth);
        s.roots.push_back(std::move(r));
    }
    return s;
}

BinomialSeparation separation_binomial(std::uint64_t d, std::uint64_t p, const Int& H) {
    if (d < 2) throw Error("separation_binomial: d must be at least 2");
    BinomialSeparation b;
    Int dd(std::to_string(d));
    Int unit;
    long ell = ord_nonzero(dd, p, &unit);
    bool pure = ell >= 1 && unit == 1;
    b.log_p_coeff = pure ? Rat(Int(1), Int(static_cast<unsigned long>(p - 1))) : Rat(0);
    b.log_h_over_d = log_abs(H) / static_cast<double>(d);
    b.padic = b.log_p_coeff.get_d() * std::log(static_cast<double>(p)) + b.log_h_over_d;
    b.archimedean = std::log(static_cast<double>(d)) + b.log_h_over_d;
    return b;
}

}  // namespace padic
