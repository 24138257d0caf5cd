#include "padic/trinomial_solver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "padic/bounds.hpp"
#include "padic/finite_field.hpp"
#include "padic/newton_polygon.hpp"

namespace padic {

namespace {

constexpr long kMaxScaleDigits = 100000;
constexpr int kModularPrimes = 40;

Int uint_to_int(std::uint64_t v) { return Int(std::to_string(v)); }

// g(x) = p^{-m} f(p^v x), primitive at p; throws ExponentOverflow for absurd scalings.
SparsePoly rescale(const SparsePoly& f, long v, std::uint64_t p, long* shift) {
    std::vector<Int> e;
    Int m;
    bool first = true;
    for (auto& t : f.terms()) {
        Int x = Int(ord_nonzero(t.coef, p)) + uint_to_int(t.exp) * v;
        if (first || x < m) m = x;
        first = false;
        e.push_back(x);
    }
    std::vector<Term> out;
    for (std::size_t i = 0; i < f.terms().size(); ++i) {
        const Term& t = f.terms()[i];
        Int unit;
        long o = ord_nonzero(t.coef, p, &unit);
        Int rel = e[i] - m;  // ord of the new coefficient
        if (rel > kMaxScaleDigits) throw ExponentOverflow("rescaling produces a coefficient with too many p-adic digits");
        out.push_back({t.exp, unit * pow_p(p, rel.get_ui())});
        (void)o;
    }
    if (!m.fits_slong_p()) throw ExponentOverflow("rescaling shift out of range");
    *shift = m.get_si();
    return SparsePoly(out);
}

// Leading digits of unit roots via the exponent lattice: x = y^e turns the F_p^* trinomial into
// one with exponents of size O(sqrt p). Returns nothing when the reduction does not apply.
std::optional<std::vector<std::uint64_t>> small_gcd_digits(const SparsePoly& g, std::uint64_t p) {
    if (g.size() != 3 || p < 5) return std::nullopt;
    auto& t = g.terms();
    std::uint64_t c[3];
    for (int i = 0; i < 3; ++i) {
        Int r = t[i].coef % Int(static_cast<unsigned long>(p));
        if (r < 0) r += static_cast<unsigned long>(p);
        c[i] = r.get_ui();
        if (c[i] == 0) return std::nullopt;
    }
    if (t[0].exp != 0) return std::nullopt;
    std::uint64_t e2 = t[1].exp % (p - 1), e3 = t[2].exp % (p - 1);
    if (e2 == 0 || e3 == 0 || e2 == e3) return std::nullopt;
    std::uint64_t lo = std::min(e2, e3), hi = std::max(e2, e3);
    ReducedExponents re = reduce_exponents_lattice(lo, hi, p);
    if (!re.invertible) return std::nullopt;
    std::int64_t m2 = e2 < e3 ? re.m2 : re.m3, m3 = e2 < e3 ? re.m3 : re.m2;
    std::int64_t mn = std::min<std::int64_t>({0, m2, m3});
    // y^{-mn} (c0 + c1 y^{m2} + c2 y^{m3}) as a dense polynomial
    std::size_t deg = static_cast<std::size_t>(std::max<std::int64_t>({0, m2, m3}) - mn);
    FpPoly h(deg + 1, 0);
    h[static_cast<std::size_t>(-mn)] = (h[static_cast<std::size_t>(-mn)] + c[0]) % p;
    h[static_cast<std::size_t>(m2 - mn)] = (h[static_cast<std::size_t>(m2 - mn)] + c[1]) % p;
    h[static_cast<std::size_t>(m3 - mn)] = (h[static_cast<std::size_t>(m3 - mn)] + c[2]) % p;
    fp::trim(h);
    if (h.empty()) return std::nullopt;
    std::vector<std::uint64_t> xs;
    for (auto& y : roots_fp_split(h, p))
        if (y.root != 0) xs.push_back(fp::pow(y.root, re.e, p));
    std::sort(xs.begin(), xs.end());
    return xs;
}

void sort_roots(std::vector<ApproximateRoot>& roots) {
    std::sort(roots.begin(), roots.end(), [](const ApproximateRoot& a, const ApproximateRoot& b) {
        if (a.valuation != b.valuation) return a.valuation < b.valuation;
        // compare by digits, least significant first
        unsigned n = std::min(a.certified_digits, b.certified_digits);
        auto da = a.digits(n), db = b.digits(n);
        if (da != db) return da < db;
        return a.degenerate < b.degenerate;
    });
}

}  // namespace

Int TrinomialInput::H() const { return std::max({Int(abs(c1)), Int(abs(c2)), Int(abs(c3))}); }

SparsePoly TrinomialInput::poly() const { return SparsePoly({{0, c1}, {a2, c2}, {a3, c3}}); }

TrinomialInput TrinomialInput::from_poly(const SparsePoly& f, std::uint64_t p) {
    if (f.size() != 3 || f.terms()[0].exp != 0) throw Error("not a trinomial with nonzero constant term");
    auto& t = f.terms();
    return {t[0].coef, t[1].coef, t[2].coef, t[1].exp, t[2].exp, p};
}

DiscriminantReport discriminant_tri(const TrinomialInput& in, bool force_exact) {
    if (in.c1 == 0 || in.c3 == 0) throw Error("discriminant_tri: needs c1 c3 != 0");
    if (in.a2 < 1 || in.a3 <= in.a2) throw Error("discriminant_tri: needs 1 <= a2 < a3");
    DiscriminantReport rep;
    rep.r = std::gcd(in.a2, in.a3);
    rep.abar2 = in.a2 / rep.r;
    rep.abar3 = in.a3 / rep.r;
    const std::uint64_t b2 = rep.abar2, b3 = rep.abar3;
    if (force_exact || b3 <= kExactDiscriminantLimit) {
        Int t1, t2, t3, s1, s2, s3;
        mpz_ui_pow_ui(t1.get_mpz_t(), b3, b3);
        mpz_pow_ui(t2.get_mpz_t(), in.c1.get_mpz_t(), b3 - b2);
        mpz_pow_ui(t3.get_mpz_t(), in.c3.get_mpz_t(), b2);
        mpz_ui_pow_ui(s1.get_mpz_t(), b2, b2);
        mpz_ui_pow_ui(s2.get_mpz_t(), b3 - b2, b3 - b2);
        Int mc2 = -in.c2;
        mpz_pow_ui(s3.get_mpz_t(), mc2.get_mpz_t(), b3);
        rep.delta_tri = t1 * t2 * t3 - s1 * s2 * s3;
        rep.is_zero = rep.delta_tri == 0;
        rep.exact = true;
        return rep;
    }
    // Multi-modulus vanishing test with deterministic pseudo-random 62-bit primes.
    rep.exact = false;
    rep.is_zero = true;
    std::mt19937_64 rng(0x5eed5eedULL);
    Int B2 = uint_to_int(b2), B3 = uint_to_int(b3), B32 = uint_to_int(b3 - b2);
    for (int i = 0; i < kModularPrimes && rep.is_zero; ++i) {
        Int q = uint_to_int((rng() >> 2) | (1ULL << 61)), qp;
        mpz_nextprime(qp.get_mpz_t(), q.get_mpz_t());
        auto pw = [&](const Int& b, const Int& e) {
            Int r, bb = b % qp;
            if (bb < 0) bb += qp;
            mpz_powm(r.get_mpz_t(), bb.get_mpz_t(), e.get_mpz_t(), qp.get_mpz_t());
            return r;
        };
        Int lhs = pw(B3, B3) * pw(in.c1, B32) % qp * pw(in.c3, B2) % qp;
        Int rhs = pw(B2, B2) * pw(B32, B32) % qp * pw(-in.c2, B3) % qp;
        if ((lhs - rhs) % qp != 0) rep.is_zero = false;
    }
    return rep;
}

Rat degenerate_power(const TrinomialInput& in, const DiscriminantReport& rep) {
    if (!rep.is_zero) throw Error("degenerate_power: discriminant does not vanish");
    // tau^{a2} = -a3 c1 / ((a3 - a2) c2) = C^{abar2},  tau^{a3} = a2 c1 / ((a3 - a2) c3) = C^{abar3}
    Int a2 = uint_to_int(in.a2), a3 = uint_to_int(in.a3);
    Rat A(-a3 * in.c1, (a3 - a2) * in.c2), B(a2 * in.c1, (a3 - a2) * in.c3);
    A.canonicalize();
    B.canonicalize();
    if (rep.abar2 == 1) return A;
    Int num = abs(A.get_num()), den = A.get_den(), rn, rd;
    if (rep.abar2 > (1UL << 31)) throw ExponentOverflow("degenerate_power: exponent too large");
    bool exact_n = mpz_root(rn.get_mpz_t(), num.get_mpz_t(), rep.abar2) != 0;
    bool exact_d = mpz_root(rd.get_mpz_t(), den.get_mpz_t(), rep.abar2) != 0;
    if (!exact_n || !exact_d) throw Error("degenerate_power: power relation is not a perfect power");
    int sign;
    if (rep.abar2 % 2 == 1) sign = sgn(A);
    else sign = sgn(B);  // abar3 odd here since gcd(abar2, abar3) = 1
    Rat C(sign * rn, rd);
    C.canonicalize();
    return C;
}

std::vector<ApproximateRoot> degenerate_roots_qp(const TrinomialInput& in, const DiscriminantReport& rep) {
    if (!rep.is_zero) return {};
    Rat C = degenerate_power(in, rep);
    BinomialInput b{-C.get_num(), C.get_den(), static_cast<std::int64_t>(rep.r), in.p};
    if (rep.r > static_cast<std::uint64_t>(INT64_MAX)) throw ExponentOverflow("degenerate root exponent too large");
    BinomialSolution s = solve_binomial(b);
    for (auto& r : s.roots) {
        r.degenerate = true;
        r.multiplicity = 2;
    }
    return s.roots;
}

unsigned m_p(std::uint64_t p) { return p == 2 ? 4 : p == 3 ? 3 : 2; }

PrecisionPlan precision_plan(const TrinomialInput& in, const DiscriminantReport& rep) {
    PrecisionPlan plan;
    plan.M_p = m_p(in.p);
    const std::uint64_t d = in.a3, r = rep.r;
    Int H = in.H();
    if (rep.is_zero) {
        plan.S0 = s0_bound_degenerate(d, r, in.p);
        plan.s0_case = "degenerate";
    } else if (in.a2 == 1) {
        plan.S0 = s0_bound_linear_middle(d, in.c3, in.p);
        plan.s0_case = "linear-middle";
    } else {
        plan.S0 = s0_bound_general(d, r, H, in.p);
        plan.s0_case = "general";
    }
    plan.D = std::floor(separation_valuation_bound(in.a2, d, H, in.p, rep.is_zero));
    plan.k_bound = 1 + plan.S0 * std::min(1.0, plan.D) + plan.M_p * std::max(plan.D - 1, 0.0);
    return plan;
}

const char* mode_name(SolveMode m) {
    switch (m) {
        case SolveMode::Full: return "full";
        case SolveMode::Restricted: return "restricted";
        case SolveMode::SmallGcd: return "small-gcd";
    }
    return "?";
}

SolveMode parse_mode(const std::string& s) {
    if (s == "full") return SolveMode::Full;
    if (s == "restricted") return SolveMode::Restricted;
    if (s == "small-gcd") return SolveMode::SmallGcd;
    throw Error("unknown mode '" + s + "'");
}

namespace {

struct TreeRun {
    NodalTree tree;
    unsigned k_used;
    std::string mode;
    bool certified;
};

TreeRun run_tree(const SparsePoly& g, std::uint64_t p, double k_bound, const SolveOptions& opt,
                 const TreeOptions& topt, const LeafExplainer& explain) {
    auto make = [&](unsigned k) { return ModPoly::from_sparse(g, PAdicContext::trusted(p, k)); };
    TreeRun run;
    double kb = std::ceil(std::max(k_bound, 1.0));
    if (opt.paper_k) {
        if (kb > opt.paper_k_limit) throw Error("a-priori precision k = " + std::to_string(kb) + " is infeasible");
        unsigned k = static_cast<unsigned>(kb);
        run.tree = build_tree(make(k), topt);
        run.k_used = k;
        run.mode = "a-priori";
        run.certified = true;
        return run;
    }
    unsigned cap = static_cast<unsigned>(std::min<double>(kb, opt.k_practical_cap));
    StabilizedTree st = stabilized_tree(make, std::min(opt.k_start, cap), cap, topt, explain);
    run.tree = std::move(st.tree);
    run.k_used = st.k_used;
    run.mode = st.mode;
    // Reaching a cap at or beyond the a-priori precision is still a proof.
    run.certified = !st.cap_reached || cap >= kb;
    if (st.cap_reached && cap >= kb) run.mode = "a-priori";
    return run;
}

std::vector<ApproximateRoot> harvest_certified(const NodalTree& t, const SparsePoly& g, std::uint64_t p, long v) {
    std::vector<ApproximateRoot> out;
    for (auto& h : harvest_roots(t))
        out.push_back(make_certified_root(g, p, v, digits_value(h.digits, p), h.s_consumed - h.depth));
    return out;
}

void finish(SolveResult& res) {
    sort_roots(res.roots);
    res.root_count = res.roots.size();
}

}  // namespace

SolveResult solve_trinomial(const TrinomialInput& in, const SolveOptions& opt) {
    if (!is_prime_u64(in.p)) throw NotPrime("p is not prime");
    if (in.c1 == 0 || in.c2 == 0 || in.c3 == 0) throw Error("trinomial coefficients must be nonzero");
    if (in.a2 < 1 || in.a3 <= in.a2) throw Error("trinomial exponents must satisfy 1 <= a2 < a3");
    if (in.a3 > kMaxExponent) throw ExponentOverflow("exponent exceeds 2^63 - 1");
    const std::uint64_t p = in.p;
    SolveResult res;
    res.p = p;
    res.method = "trinomial";
    res.mode = opt.mode;
    if (opt.mode == SolveMode::SmallGcd) {
        Int a2 = uint_to_int(in.a2), a3 = uint_to_int(in.a3);
        Int g = gcd(a2 * a3 * (a3 - a2), uint_to_int(p - 1) * uint_to_int(p));
        if (g > 2) throw SmallGcdViolated("small-gcd mode requires gcd(a2 a3 (a3 - a2), (p - 1) p) <= 2");
    }
    res.discriminant = discriminant_tri(in, opt.exact_discriminant);
    std::vector<ApproximateRoot> degen = degenerate_roots_qp(in, res.discriminant);
    if (opt.mode == SolveMode::Restricted)
        std::erase_if(degen, [](const ApproximateRoot& r) { return r.digits(1)[0] != 1; });
    SparsePoly f = in.poly();
    for (auto& cand : integral_valuation_candidates(f, p)) {
        ValuationReport rep;
        rep.v = cand.v;
        rep.g = rescale(f, cand.v, p, &rep.shift);
        TrinomialInput gi = TrinomialInput::from_poly(rep.g, p);
        rep.plan = precision_plan(gi, res.discriminant);
        if (opt.paper_k) rep.plan.mode = "a-priori";
        std::vector<ApproximateRoot> dv;
        for (auto& r : degen)
            if (r.valuation == cand.v) dv.push_back(r);
        LeafExplainer explain = [&dv](const UnresolvedLeaf& leaf, unsigned) {
            if (leaf.multiplicity != 2) return false;
            unsigned len = static_cast<unsigned>(leaf.digits.size());
            Int target = digits_value(leaf.digits, dv.empty() ? 2 : dv.front().p);
            for (auto& r : dv)
                if (unit_to_digits(r, len) == target) return true;
            return false;
        };
        TreeOptions topt;
        topt.prime_cap = opt.prime_cap;
        if (opt.mode == SolveMode::Restricted) topt.root_digits = std::vector<std::uint64_t>{1};
        if (opt.mode == SolveMode::SmallGcd) topt.root_digits = small_gcd_digits(rep.g, p);
        TreeRun run = run_tree(rep.g, p, rep.plan.k_bound, opt, topt, explain);
        rep.k_used = run.k_used;
        rep.tree_mode = run.mode;
        rep.nodes = run.tree.node_count();
        rep.depth = run.tree.depth();
        if (!run.certified) res.certified = false;
        auto roots = harvest_certified(run.tree, rep.g, p, cand.v);
        rep.nondegenerate = roots.size();
        rep.degenerate = dv.size();
        for (auto& r : roots) res.roots.push_back(std::move(r));
        for (auto& r : dv) res.roots.push_back(r);
        res.valuations.push_back(std::move(rep));
    }
    finish(res);
    return res;
}

SolveResult solve_binomial_poly(const BinomialInput& in, const SolveOptions& opt) {
    SolveResult res;
    res.p = in.p;
    res.method = "binomial";
    res.mode = opt.mode;
    BinomialSolution s = solve_binomial(in, opt.prime_cap);
    res.reciprocal = s.analysis.reciprocal;
    res.note = reason_name(s.reason);
    if (s.analysis.count > 0) {
        ValuationReport rep;
        rep.v = s.analysis.valuation;
        rep.g = s.analysis.unit_poly();
        rep.k_used = s.k_used;
        rep.tree_mode = "certified";
        rep.nondegenerate = s.roots.size();
        res.valuations.push_back(rep);
    }
    res.roots = std::move(s.roots);
    if (opt.mode == SolveMode::Restricted)
        std::erase_if(res.roots, [](const ApproximateRoot& r) { return r.digits(1)[0] != 1; });
    finish(res);
    return res;
}

SolveResult solve(const SparsePoly& f, std::uint64_t p, const SolveOptions& opt) {
    if (f.is_zero()) throw Error("the zero polynomial has every element as a root");
    if (!is_prime_u64(p)) throw NotPrime("p is not prime");
    const std::uint64_t a1 = f.low_exponent();
    SparsePoly g = shift_exponents_down(f, a1);
    SolveResult res;
    auto& t = g.terms();
    if (g.size() == 1) {
        res.p = p;
        res.method = "monomial";
        res.mode = opt.mode;
    } else if (g.size() == 2) {
        if (t[1].exp > static_cast<std::uint64_t>(INT64_MAX)) throw ExponentOverflow("exponent too large");
        res = solve_binomial_poly({t[0].coef, t[1].coef, static_cast<std::int64_t>(t[1].exp), p}, opt);
    } else if (g.size() == 3) {
        res = solve_trinomial(TrinomialInput::from_poly(g, p), opt);
    } else {
        // No a-priori precision is available: adaptive doubling, flagged heuristic when capped.
        res.p = p;
        res.method = "general";
        res.mode = opt.mode;
        for (auto& cand : integral_valuation_candidates(g, p)) {
            ValuationReport rep;
            rep.v = cand.v;
            rep.g = rescale(g, cand.v, p, &rep.shift);
            TreeOptions topt;
            topt.prime_cap = opt.prime_cap;
            if (opt.mode == SolveMode::Restricted) topt.root_digits = std::vector<std::uint64_t>{1};
            TreeRun run = run_tree(rep.g, p, 1e18, SolveOptions{opt.mode, false, false, opt.prime_cap, opt.k_start,
                                                                std::min(opt.k_practical_cap, 512u), opt.paper_k_limit},
                                   topt, nullptr);
            rep.k_used = run.k_used;
            rep.tree_mode = run.mode == "certified" ? "certified" : "heuristic";
            rep.nodes = run.tree.node_count();
            rep.depth = run.tree.depth();
            if (run.mode != "certified") res.certified = false;
            auto roots = harvest_certified(run.tree, rep.g, p, cand.v);
            rep.nondegenerate = roots.size();
            for (auto& r : roots) res.roots.push_back(std::move(r));
            res.valuations.push_back(std::move(rep));
        }
        if (!res.certified) res.note = "repeated roots near a digit disc; count is heuristic";
        finish(res);
    }
    res.zero_multiplicity = a1;
    return res;
}

}  // namespace padic
