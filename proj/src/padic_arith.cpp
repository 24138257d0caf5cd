#include "padic/padic_arith.hpp"

#include <cmath>

namespace padic {

const Rat& Valuation::value() const {
    if (inf_) throw Error("valuation is infinite");
    return v_;
}

long Valuation::as_long() const {
    if (!is_integer()) throw Error("valuation is not a finite integer");
    return v_.get_num().get_si();
}

Valuation operator-(const Valuation& a, const Valuation& b) {
    if (b.inf_) throw Error("subtracting an infinite valuation");
    if (a.inf_) return Valuation::infinity();
    return Valuation(Rat(a.v_ - b.v_));
}

std::string Valuation::str() const { return inf_ ? std::string("inf") : to_string(v_); }

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
        if (n % q == 0) return n == q;
    }
    // Trial division is deterministic and fast enough below 2^40 or so;
    // beyond that GMP's test with many rounds is used (still deterministic in practice).
    if (n < (1ULL << 40)) {
        for (std::uint64_t q = 17; q * q <= n; q += 2)
            if (n % q == 0) return false;
        return true;
    }
    Int m(std::to_string(n));
    return mpz_probab_prime_p(m.get_mpz_t(), 50) != 0;
}

PAdicContext::PAdicContext(std::uint64_t p, unsigned k) : p_(p), k_(k) {
    if (!is_prime_u64(p)) throw NotPrime("p = " + std::to_string(p) + " is not prime");
    if (k < 1) throw Error("precision k must be at least 1");
    mod_ = pow_p(p, k);
}

PAdicContext::PAdicContext(std::uint64_t p, unsigned k, trusted_tag) : p_(p), k_(k) {
    if (k < 1) throw Error("precision k must be at least 1");
    mod_ = pow_p(p, k);
}

Int PAdicContext::reduce(const Int& x) const {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), mod_.get_mpz_t());
    return r;
}

Int pow_p(std::uint64_t p, unsigned long e) {
    Int r;
    Int base(std::to_string(p));
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

long ord_nonzero(const Int& n, std::uint64_t p, Int* unit) {
    Int pp(std::to_string(p));
    Int u;
    long e = static_cast<long>(mpz_remove(u.get_mpz_t(), n.get_mpz_t(), pp.get_mpz_t()));
    if (unit) *unit = u;
    return e;
}

Valuation ord_int(const Int& n, std::uint64_t p) {
    if (n == 0) return Valuation::infinity();
    return Valuation(ord_nonzero(n, p));
}

Valuation ord_rat(const Rat& q, std::uint64_t p) {
    if (q == 0) return Valuation::infinity();
    return Valuation(ord_nonzero(q.get_num(), p) - ord_nonzero(q.get_den(), p));
}

Int mod_pow(const Int& base, const Int& exp, const PAdicContext& ctx) {
    if (exp < 0) throw Error("negative exponent");
    Int r;
    Int b = ctx.reduce(base);
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), exp.get_mpz_t(), ctx.modulus().get_mpz_t());
    return r;
}

Int mod_pow(const Int& base, std::uint64_t exp, const PAdicContext& ctx) {
    Int e;
    mpz_import(e.get_mpz_t(), 1, -1, sizeof(exp), 0, 0, &exp);
    return mod_pow(base, e, ctx);
}

Int mod_inv(const Int& r, const PAdicContext& ctx) {
    Int a = ctx.reduce(r);
    Int s;
    if (a % Int(std::to_string(ctx.p())) == 0 ||
        mpz_invert(s.get_mpz_t(), a.get_mpz_t(), ctx.modulus().get_mpz_t()) == 0)
        throw NotInvertible("residue divisible by p");
    return s;
}

double log_abs(const Int& n) {
    long e;
    double m = mpz_get_d_2exp(&e, n.get_mpz_t());
    return std::log(std::fabs(m)) + static_cast<double>(e) * std::log(2.0);
}

double log_height(const Rat& q) {
    if (q == 0) return 0.0;
    Int a = abs(q.get_num());
    const Int& b = q.get_den();
    return log_abs(a > b ? a : b);
}

std::string to_string(const Int& n) { return n.get_str(); }
std::string to_string(const Rat& q) { return q.get_str(); }

Rat parse_rational(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0 || q.get_den() == 0) throw Error("bad rational: " + s);
    q.canonicalize();
    return q;
}

}  // namespace padic
