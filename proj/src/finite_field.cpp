#include "padic/finite_field.hpp"

#include <algorithm>
#include <random>
#include <cmath>
#include <numeric>

#include "padic/kernels.hpp"

namespace padic {

namespace fp {

std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul(r, a, p);
        a = mul(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw NotInvertible("zero has no inverse in F_p");
    return pow(a, p - 2, p);
}

void trim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

FpPoly derivative(const FpPoly& f, std::uint64_t p) {
    FpPoly d;
    for (std::size_t i = 1; i < f.size(); ++i) d.push_back(mul(f[i], i % p, p));
    trim(d);
    return d;
}

FpPoly rem(FpPoly a, const FpPoly& b, std::uint64_t p) {
    if (b.empty()) throw Error("polynomial division by zero");
    trim(a);
    std::uint64_t lead_inv = inv(b.back(), p);
    const std::size_t db = b.size() - 1;
    while (a.size() >= b.size()) {
        std::uint64_t q = mul(a.back(), lead_inv, p);
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i <= db; ++i) a[shift + i] = (a[shift + i] + p - mul(q, b[i], p)) % p;
        trim(a);
    }
    return a;
}

FpPoly mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    FpPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + mul(a[i], b[j], p)) % p;
    return rem(std::move(c), m, p);
}

FpPoly gcd(FpPoly a, FpPoly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        FpPoly r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        std::uint64_t li = inv(a.back(), p);
        for (auto& c : a) c = mul(c, li, p);
    }
    return a;
}

std::uint64_t eval(const FpPoly& f, std::uint64_t x, std::uint64_t p) {
    std::uint64_t r = 0;
    for (std::size_t i = f.size(); i-- > 0;) r = (mul(r, x, p) + f[i]) % p;
    return r;
}

FpPoly from_sparse(const SparsePoly& f, std::uint64_t p) {
    FpPoly out;
    Int pp(static_cast<unsigned long>(p));
    for (auto& t : f.terms()) {
        Int r;
        mpz_fdiv_r(r.get_mpz_t(), t.coef.get_mpz_t(), pp.get_mpz_t());
        if (r == 0) continue;
        if (t.exp > (1ULL << 22)) throw Error("dense F_p view of a huge-degree polynomial");
        if (out.size() <= t.exp) out.resize(t.exp + 1, 0);
        out[t.exp] = r.get_ui();
    }
    trim(out);
    return out;
}

}  // namespace fp

namespace {

void check_cap(std::uint64_t p, std::uint64_t cap) {
    if (p > cap)
        throw PrimeTooLarge("p = " + std::to_string(p) + " exceeds the exhaustive-search cap " +
                            std::to_string(cap));
}

// Shared scan: terms (exponent, coefficient mod p) of f over F_p.
std::vector<FpRoot> scan_terms(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& terms, std::uint64_t p,
                               bool skip_zero) {
    std::vector<FpRoot> out;
    std::uint64_t c0 = 0, c1 = 0;  // f(0), f'(0)
    std::vector<kernels::FpTerm> f, df;
    for (auto& [e, c] : terms) {
        if (c == 0) continue;
        if (e == 0) c0 = c;
        if (e == 1) c1 = c;
        std::uint64_t er = (p == 2) ? (e == 0 ? 0 : 1) : (e == 0 ? 0 : ((e - 1) % (p - 1)) + 1);
        f.push_back({c, er});
        if (e >= 1) {
            std::uint64_t dc = fp::mul(c, e % p, p);
            if (dc != 0) {
                std::uint64_t de = e - 1;
                std::uint64_t der = (p == 2) ? (de == 0 ? 0 : 1) : (de == 0 ? 0 : ((de - 1) % (p - 1)) + 1);
                df.push_back({dc, der});
            }
        }
    }
    if (!skip_zero && c0 == 0) out.push_back({0, c1 == 0});
    if (p >= 2) {
        std::vector<std::uint8_t> flags(p - 1);
        kernels::select(p)(f, df, p, 1, p, flags.data());
        for (std::uint64_t x = 1; x < p; ++x)
            if (flags[x - 1] & kernels::kRoot) out.push_back({x, (flags[x - 1] & kernels::kDerivZero) != 0});
    }
    return out;
}

}  // namespace

std::vector<FpRoot> roots_fp_exhaustive(const SparsePoly& f, std::uint64_t p, std::uint64_t cap, bool skip_zero) {
    check_cap(p, cap);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> terms;
    Int pp(static_cast<unsigned long>(p));
    for (auto& t : f.terms()) {
        Int r;
        mpz_fdiv_r(r.get_mpz_t(), t.coef.get_mpz_t(), pp.get_mpz_t());
        terms.emplace_back(t.exp, r.get_ui());
    }
    bool any = std::any_of(terms.begin(), terms.end(), [](auto& t) { return t.second != 0; });
    if (!any) throw Error("polynomial vanishes identically mod p");
    return scan_terms(terms, p, skip_zero);
}

std::vector<FpRoot> roots_fp_exhaustive(const ModPoly& f, std::uint64_t cap, bool skip_zero) {
    check_cap(f.p, cap);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> terms;
    Int pp(static_cast<unsigned long>(f.p));
    bool any = false;
    for (auto& [e, c] : f.terms) {
        Int r = c % pp;
        terms.emplace_back(e, r.get_ui());
        any |= r != 0;
    }
    if (!any) throw Error("polynomial vanishes identically mod p");
    return scan_terms(terms, f.p, skip_zero);
}

std::vector<FpRoot> roots_fp_exhaustive(const FpPoly& f, std::uint64_t p, std::uint64_t cap) {
    check_cap(p, cap);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> terms;
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f[i] % p) terms.emplace_back(i, f[i] % p);
    if (terms.empty()) throw Error("polynomial vanishes identically mod p");
    return scan_terms(terms, p, false);
}

namespace {
std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = 2; q * q <= n; ++q) {
        if (n % q) continue;
        out.push_back(q);
        while (n % q == 0) n /= q;
    }
    if (n > 1) out.push_back(n);
    return out;
}
}  // namespace

std::uint64_t generator_fp(std::uint64_t p, std::uint64_t cap) {
    check_cap(p, cap);
    if (p == 2) return 1;
    auto qs = prime_factors(p - 1);
    for (std::uint64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (auto q : qs)
            if (fp::pow(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw Error("no generator found");  // unreachable for prime p
}

std::vector<std::uint64_t> binomial_coset_roots(std::uint64_t c, std::uint64_t gamma, std::uint64_t p) {
    c %= p;
    if (c == 0 || gamma == 0 || (p - 1) % gamma != 0) throw Error("binomial_coset_roots: need c != 0 and gamma | p-1");
    if (fp::pow(c, (p - 1) / gamma, p) != 1) return {};
    if (p == 2) return {1};
    std::uint64_t g = generator_fp(p, ~0ULL);
    std::uint64_t step = fp::pow(g, (p - 1) / gamma, p);
    // x_1 ranges over coset representatives g^0 .. g^{(p-1)/gamma - 1}
    std::uint64_t x1 = 0, gi = 1;
    for (std::uint64_t i = 0; i < (p - 1) / gamma; ++i, gi = fp::mul(gi, g, p)) {
        if (fp::pow(gi, gamma, p) == c) {
            x1 = gi;
            break;
        }
    }
    if (x1 == 0) return {};
    std::vector<std::uint64_t> out{x1};
    for (std::uint64_t j = 1; j < gamma; ++j) out.push_back(fp::mul(out.back(), step, p));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

FpPoly powmod_poly(FpPoly base, std::uint64_t e, const FpPoly& f, std::uint64_t p) {
    FpPoly result{1};
    base = fp::rem(std::move(base), f, p);
    while (e) {
        if (e & 1) result = fp::mulmod(result, base, f, p);
        base = fp::mulmod(base, base, f, p);
        e >>= 1;
    }
    return result;
}

// gcd(f, x^p - x), monic; f must be nonzero
FpPoly split_part(const FpPoly& f, std::uint64_t p) {
    if (f.size() == 1) return {1};
    FpPoly r = powmod_poly({0, 1}, p, f, p);
    if (r.size() < 2) r.resize(2, 0);
    r[1] = (r[1] + p - 1) % p;
    fp::trim(r);
    return r.empty() ? fp::gcd(f, {}, p) : fp::gcd(f, r, p);
}

FpPoly div_exact(FpPoly a, const FpPoly& b, std::uint64_t p) {
    FpPoly q(a.size() - b.size() + 1, 0);
    std::uint64_t li = fp::inv(b.back(), p);
    for (std::size_t s = q.size(); s-- > 0;) {
        std::uint64_t c = fp::mul(a[s + b.size() - 1], li, p);
        q[s] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[s + i] = (a[s + i] + p - fp::mul(c, b[i], p)) % p;
    }
    return q;
}

// Distinct linear factors of g (a product of distinct linear factors), equal-degree splitting.
void split_linear(const FpPoly& g, std::uint64_t p, std::mt19937_64& rng, std::vector<std::uint64_t>& out) {
    if (g.size() <= 1) return;
    if (g.size() == 2) {
        out.push_back(fp::mul(p - g[0], fp::inv(g[1], p), p));
        return;
    }
    while (true) {
        std::uint64_t a = rng() % p;
        FpPoly h = powmod_poly({a, 1}, (p - 1) / 2, g, p);
        if (h.empty()) h = {0};
        h[0] = (h[0] + p - 1) % p;
        fp::trim(h);
        if (h.empty()) continue;
        FpPoly d = fp::gcd(g, h, p);
        if (d.size() <= 1 || d.size() == g.size()) continue;
        split_linear(d, p, rng, out);
        split_linear(div_exact(g, d, p), p, rng, out);
        return;
    }
}

}  // namespace

std::vector<FpRoot> roots_fp_split(const FpPoly& f_in, std::uint64_t p) {
    FpPoly f = f_in;
    for (auto& c : f) c %= p;
    fp::trim(f);
    if (f.empty()) throw Error("roots of the zero polynomial");
    if (p < 5) return roots_fp_exhaustive(f, p);
    std::vector<std::uint64_t> xs;
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    split_linear(split_part(f, p), p, rng, xs);
    std::sort(xs.begin(), xs.end());
    FpPoly df = fp::derivative(f, p);
    std::vector<FpRoot> out;
    for (auto x : xs) out.push_back({x, fp::eval(df, x, p) == 0});
    return out;
}

unsigned gcd_with_frobenius(const FpPoly& f_in, std::uint64_t p) {
    FpPoly f = f_in;
    for (auto& c : f) c %= p;
    fp::trim(f);
    if (f.empty()) throw Error("gcd_with_frobenius of the zero polynomial");
    return static_cast<unsigned>(split_part(f, p).size() - 1);
}

namespace {

struct LVec {
    __int128 x, y;
    std::int64_t e;  // exponent mod (p-1) realizing this vector
};

__int128 dot(const LVec& a, const LVec& b) { return a.x * b.x + a.y * b.y; }

std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
    if (b == 0) {
        x = a >= 0 ? 1 : -1;
        y = 0;
        return a >= 0 ? a : -a;
    }
    std::int64_t x1, y1;
    std::int64_t g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

std::int64_t mod_n(__int128 v, std::int64_t n) {
    __int128 r = v % n;
    if (r < 0) r += n;
    return static_cast<std::int64_t>(r);
}

}  // namespace

ReducedExponents reduce_exponents_lattice(std::uint64_t a2, std::uint64_t a3, std::uint64_t p) {
    if (!(0 < a2 && a2 < a3 && a3 < p - 1)) throw Error("reduce_exponents_lattice needs 0 < a2 < a3 < p-1");
    const std::int64_t n = static_cast<std::int64_t>(p - 1);
    ReducedExponents out;
    out.r_prime = std::gcd(std::gcd(a2, a3), (p - 1) * p);
    const double bound = double(out.r_prime) * std::sqrt(2.0 * double(p - 1));

    // Basis of L = {(e a2, e a3)} + n Z^2 with the exponent e tracked per vector.
    std::int64_t x, y;
    std::int64_t g = ext_gcd(static_cast<std::int64_t>(a2), n, x, y);  // x a2 + y n = g
    LVec b1{g, static_cast<__int128>(x) * static_cast<__int128>(a3), mod_n(x, n)};
    // kernel of the first coordinate: (n/g)(a2,a3) - (a2/g)(n,0) = (0, n a3 / g), e = n/g
    std::int64_t h0 = static_cast<std::int64_t>((static_cast<__int128>(n) * a3 / g) % (static_cast<__int128>(n) * n));
    std::int64_t u, v;
    std::int64_t h = ext_gcd(h0, n, u, v);  // u h0 + v n = h
    LVec b2{0, h, mod_n(static_cast<__int128>(u) * (n / g), n)};
    b1.y %= n;  // reduce using (0, n) which has e = 0

    // Lagrange-Gauss reduction.
    auto sub = [&](LVec a, const LVec& b, __int128 q) {
        a.x -= q * b.x;
        a.y -= q * b.y;
        a.e = mod_n(static_cast<__int128>(a.e) - q * b.e, n);
        return a;
    };
    if (dot(b1, b1) < dot(b2, b2)) std::swap(b1, b2);
    while (true) {
        __int128 nn = dot(b2, b2);
        if (nn == 0) break;
        long double qf = static_cast<long double>(dot(b1, b2)) / static_cast<long double>(nn);
        __int128 q = static_cast<__int128>(std::llround(qf));
        b1 = sub(b1, b2, q);
        if (dot(b1, b1) >= dot(b2, b2)) break;
        std::swap(b1, b2);
    }

    // Among small combinations prefer a unit exponent within the bound.
    bool found = false;
    double best = 0;
    auto consider = [&](__int128 m2, __int128 m3, std::int64_t e) {
        if (e == 0 && m2 == 0 && m3 == 0) return;
        double mx = std::max(std::fabs(double(m2)), std::fabs(double(m3)));
        bool unit = std::gcd(static_cast<std::uint64_t>(e), static_cast<std::uint64_t>(n)) == 1;
        if (!unit || mx > bound + 1e-9) return;
        if (!found || mx < best || (mx == best && static_cast<std::uint64_t>(e) < out.e)) {
            found = true;
            best = mx;
            out.e = static_cast<std::uint64_t>(e);
            out.m2 = static_cast<std::int64_t>(m2);
            out.m3 = static_cast<std::int64_t>(m3);
        }
    };
    const int B = 12;
    for (int i = -B; i <= B; ++i)
        for (int j = -B; j <= B; ++j) {
            __int128 m2 = i * b2.x + j * b1.x, m3 = i * b2.y + j * b1.y;
            std::int64_t e = mod_n(static_cast<__int128>(i) * b2.e + static_cast<__int128>(j) * b1.e, n);
            consider(m2, m3, e);
        }
    if (!found) {
        // Exhaustive fallback at desk scale.
        for (std::int64_t e = 1; e < n; ++e) {
            std::int64_t r2 = mod_n(static_cast<__int128>(e) * a2, n), r3 = mod_n(static_cast<__int128>(e) * a3, n);
            if (r2 > n / 2) r2 -= n;
            if (r3 > n / 2) r3 -= n;
            consider(r2, r3, e);
        }
    }
    if (!found) {
        // No unit exponent meets the bound; report the shortest vector.
        out.e = static_cast<std::uint64_t>(b2.e);
        out.m2 = static_cast<std::int64_t>(b2.x);
        out.m3 = static_cast<std::int64_t>(b2.y);
        out.invertible = false;
        out.e_inv = 0;
        return out;
    }
    out.invertible = true;
    std::int64_t ei, dummy;
    ext_gcd(static_cast<std::int64_t>(out.e), n, ei, dummy);
    out.e_inv = static_cast<std::uint64_t>(mod_n(ei, n));
    return out;
}

}  // namespace padic
