#include "padic/oracle.hpp"

#include <algorithm>
#include <set>

namespace padic::oracle {

namespace {

using QPoly = std::vector<Rat>;  // dense, constant first
using ZPoly = std::vector<Int>;

void trim(QPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

QPoly to_dense(const SparsePoly& f, std::uint64_t shift) {
    std::uint64_t d = f.degree() - shift;
    if (d > 4096) throw BudgetExceeded("oracle: degree too large for dense arithmetic");
    QPoly a(d + 1, Rat(0));
    for (auto& t : f.terms()) a[t.exp - shift] = Rat(t.coef);
    return a;
}

QPoly deriv(const QPoly& a) {
    QPoly d;
    for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * Rat(static_cast<long>(i)));
    trim(d);
    return d;
}

// quotient and remainder over Q
void divmod(QPoly a, const QPoly& b, QPoly& q, QPoly& r) {
    trim(a);
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rat c = a.back() / b.back();
        std::size_t s = a.size() - b.size();
        q[s] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[s + i] -= c * b[i];
        a.pop_back();
        trim(a);
    }
    r = a;
}

QPoly monic(QPoly a) {
    Rat l = a.back();
    for (auto& c : a) c /= l;
    return a;
}

QPoly gcd(QPoly a, QPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        QPoly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = r.empty() ? r : monic(r);
    }
    return a.empty() ? a : monic(a);
}

ZPoly primitive(const QPoly& a) {
    Int den = 1;
    for (auto& c : a) den = lcm(den, c.get_den());
    ZPoly z;
    Int g = 0;
    for (auto& c : a) {
        Int v = c.get_num() * (den / c.get_den());
        z.push_back(v);
        g = gcd(g, v);
    }
    if (g != 0)
        for (auto& v : z) v /= g;
    return z;
}

Int eval(const ZPoly& a, const Int& x) {
    Int r = 0;
    for (std::size_t i = a.size(); i-- > 0;) r = r * x + a[i];
    return r;
}

ZPoly zderiv(const ZPoly& a) {
    ZPoly d;
    for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * static_cast<long>(i));
    return d;
}

long ordv(const Int& n, std::uint64_t p) { return n == 0 ? (1L << 40) : ord_nonzero(n, p); }

// Integral valuations v at which at least two terms tie for the minimum of ord c_i + i v.
std::vector<long> candidate_valuations(const ZPoly& a, std::uint64_t p) {
    std::set<long> vs;
    std::vector<std::pair<long, long>> pts;  // (i, ord c_i)
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) pts.emplace_back(static_cast<long>(i), ord_nonzero(a[i], p));
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            long num = pts[i].second - pts[j].second, den = pts[j].first - pts[i].first;
            if (num % den != 0) continue;
            long v = num / den;
            long m = pts[i].second + pts[i].first * v;
            bool ok = true;
            for (auto& q : pts)
                if (q.second + q.first * v < m) ok = false;
            if (ok) vs.insert(v);
        }
    return {vs.begin(), vs.end()};
}

// g(x) = p^{-m} a(p^v x), with m making it primitive at p.
ZPoly rescale(const ZPoly& a, long v, std::uint64_t p) {
    QPoly q(a.size(), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        long e = static_cast<long>(i) * v;
        Rat s = e >= 0 ? Rat(pow_p(p, e)) : Rat(Int(1), pow_p(p, -e));
        q[i] = Rat(a[i]) * s;
    }
    ZPoly z = primitive(q);
    long m = 1L << 40;
    for (auto& c : z)
        if (c != 0) m = std::min(m, ord_nonzero(c, p));
    Int pm = pow_p(p, m);
    for (auto& c : z) c /= pm;
    return z;
}

// Unit roots of a square-free g in Z_p by class refinement; returns start residues that satisfy
// the Hensel criterion and are known to isolate exactly one root.
std::vector<Int> unit_root_classes(const ZPoly& g, std::uint64_t p) {
    ZPoly dg = zderiv(g);
    std::vector<Int> out;
    std::vector<std::pair<Int, unsigned>> work;
    Int pp(static_cast<unsigned long>(p));
    for (std::uint64_t x = 1; x < p; ++x)
        if (eval(g, Int(static_cast<unsigned long>(x))) % pp == 0) work.emplace_back(Int(static_cast<unsigned long>(x)), 1u);
    while (!work.empty()) {
        auto [x, k] = work.back();
        work.pop_back();
        Int G = eval(g, x), D = eval(dg, x);
        long l = ordv(D, p);
        if (l < static_cast<long>(k)) {
            // Decided: exactly one root iff ord G >= k + l, else none.
            if (ordv(G, p) >= static_cast<long>(k) + l) out.push_back(x);
            continue;
        }
        if (k >= kMaxClassPrecision) throw BudgetExceeded("oracle: residue class undecided at precision cap");
        Int pk = pow_p(p, k), pk1 = pk * pp;
        for (std::uint64_t t = 0; t < p; ++t) {
            Int y = x + pk * static_cast<unsigned long>(t);
            if (eval(g, y) % pk1 == 0) work.emplace_back(y, k + 1);
        }
    }
    return out;
}

Int lift_dense(const ZPoly& g, std::uint64_t p, Int z, unsigned target) {
    ZPoly dg = zderiv(g);
    Int D = eval(dg, z);
    if (D == 0) throw CriterionFailed("derivative vanishes at start point");
    long l = ord_nonzero(D, p);
    Int G = eval(g, z);
    if (G != 0 && ord_nonzero(G, p) <= 2 * l) throw CriterionFailed("Hensel criterion fails at start point");
    const unsigned N = target + static_cast<unsigned>(l) + 1;
    PAdicContext ctx = PAdicContext::trusted(p, N);
    Int pl = pow_p(p, l);
    for (int iter = 0; iter < 200; ++iter) {
        G = eval(g, z);
        if (G == 0 || ord_nonzero(G, p) - l >= static_cast<long>(target)) break;
        D = eval(dg, z);
        Int u;
        long ld = ord_nonzero(D, p, &u);
        if (ld != l) throw CriterionFailed("derivative valuation changed during lifting");
        z = ctx.reduce(z - (G / pl) * mod_inv(u, ctx));
    }
    PAdicContext out = PAdicContext::trusted(p, target);
    return out.reduce(z);
}

struct Prepared {
    std::uint64_t zero_mult;
    ZPoly sqfree;                 // square-free part of f / x^{a1}
    std::vector<ZPoly> repeated;  // repeated[j]: square-free part of the (j+1)-th iterated gcd with the derivative
};

QPoly sqfree_part(const QPoly& a) {
    QPoly g = gcd(a, deriv(a)), q, r;
    divmod(a, g, q, r);
    return q;
}

Prepared prepare(const SparsePoly& f) {
    if (f.is_zero()) throw Error("oracle: zero polynomial");
    Prepared pr;
    pr.zero_mult = f.low_exponent();
    QPoly a = to_dense(f, pr.zero_mult);
    pr.sqfree = primitive(sqfree_part(a));
    // a root of multiplicity m divides the first m-1 iterated gcds
    QPoly g = gcd(a, deriv(a));
    while (g.size() > 1) {
        pr.repeated.push_back(primitive(sqfree_part(g)));
        g = gcd(g, deriv(g));
    }
    return pr;
}

std::vector<OracleRoot> roots_of(const ZPoly& s, std::uint64_t p, unsigned precision) {
    std::vector<OracleRoot> out;
    if (s.size() <= 1) return out;
    for (long v : candidate_valuations(s, p)) {
        ZPoly g = rescale(s, v, p);
        for (auto& x : unit_root_classes(g, p)) {
            OracleRoot r;
            r.valuation = v;
            r.unit = lift_dense(g, p, x, precision);
            r.precision = precision;
            r.degenerate = false;
            r.multiplicity = 1;
            out.push_back(r);
        }
    }
    return out;
}

}  // namespace

std::vector<Int> roots_mod_pk(const SparsePoly& f, std::uint64_t p, unsigned k, std::uint64_t budget) {
    Int M = pow_p(p, k);
    if (M > Int(static_cast<unsigned long>(budget))) throw BudgetExceeded("oracle: p^k exceeds budget");
    std::uint64_t m = M.get_ui();
    std::vector<Int> out;
    PAdicContext ctx = PAdicContext::trusted(p, k);
    if (f.degree() <= 64) {
        ZPoly a(f.degree() + 1, Int(0));
        for (auto& t : f.terms()) a[t.exp] = ctx.reduce(t.coef);
        for (std::uint64_t x = 0; x < m; ++x) {
            Int xi(static_cast<unsigned long>(x));
            Int r = 0;
            for (std::size_t i = a.size(); i-- > 0;) r = (r * xi + a[i]) % M;
            if (r == 0) out.push_back(xi);
        }
        return out;
    }
    for (std::uint64_t x = 0; x < m; ++x) {
        Int xi(static_cast<unsigned long>(x)), r = 0;
        for (auto& t : f.terms()) r += t.coef * mod_pow(xi, t.exp, ctx);
        if (ctx.reduce(r) == 0) out.push_back(xi);
    }
    return out;
}

OracleResult analyze(const SparsePoly& f, std::uint64_t p, unsigned precision) {
    if (!is_prime_u64(p)) throw NotPrime("oracle: p not prime");
    Prepared pr = prepare(f);
    OracleResult res;
    res.p = p;
    res.zero_multiplicity = pr.zero_mult;
    res.roots = roots_of(pr.sqfree, p, precision);
    for (auto& rep : pr.repeated) {
        auto multiple = roots_of(rep, p, precision);
        for (auto& r : res.roots)
            for (auto& m : multiple)
                if (m.valuation == r.valuation && m.unit == r.unit) {
                    r.degenerate = true;
                    ++r.multiplicity;
                }
    }
    std::sort(res.roots.begin(), res.roots.end(), [](const OracleRoot& a, const OracleRoot& b) {
        return a.valuation != b.valuation ? a.valuation < b.valuation : a.unit < b.unit;
    });
    return res;
}

std::size_t count_qp_roots(const SparsePoly& f, std::uint64_t p) { return analyze(f, p, 4).qp_count(); }

Int lift_root(const SparsePoly& f, std::uint64_t p, const Int& start, unsigned target) {
    if (f.degree() > 4096) throw BudgetExceeded("oracle: degree too large");
    ZPoly a(f.degree() + 1, Int(0));
    for (auto& t : f.terms()) a[t.exp] = t.coef;
    return lift_dense(a, p, start, target);
}

}  // namespace padic::oracle
