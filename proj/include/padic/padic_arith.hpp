#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace padic {

using Int = mpz_class;
using Rat = mpq_class;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotInvertible : Error {
    using Error::Error;
};
struct NotPrime : Error {
    using Error::Error;
};

// Exact p-adic valuation: a rational number, or +infinity for zero.
class Valuation {
public:
    Valuation() : inf_(true) {}
    explicit Valuation(const Rat& v) : inf_(false), v_(v) { v_.canonicalize(); }
    explicit Valuation(long v) : inf_(false), v_(v) {}
    static Valuation infinity() { return Valuation(); }

    bool is_infinite() const { return inf_; }
    const Rat& value() const;
    bool is_integer() const { return !inf_ && v_.get_den() == 1; }
    long as_long() const;

    friend bool operator==(const Valuation& a, const Valuation& b) {
        return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
    }
    friend bool operator<(const Valuation& a, const Valuation& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.v_ < b.v_;
    }
    friend bool operator<=(const Valuation& a, const Valuation& b) { return !(b < a); }
    friend Valuation operator+(const Valuation& a, const Valuation& b) {
        if (a.inf_ || b.inf_) return infinity();
        return Valuation(Rat(a.v_ + b.v_));
    }
    friend Valuation operator-(const Valuation& a, const Valuation& b);

    std::string str() const;

private:
    bool inf_;
    Rat v_;
};

bool is_prime_u64(std::uint64_t n);

// Prime p and precision k; the modulus p^k is cached.
class PAdicContext {
public:
    PAdicContext(std::uint64_t p, unsigned k);
    std::uint64_t p() const { return p_; }
    unsigned k() const { return k_; }
    const Int& modulus() const { return mod_; }
    Int reduce(const Int& x) const;
    PAdicContext with_k(unsigned k) const { return PAdicContext(p_, k, trusted_tag{}); }
    // Skips the primality check; for p already validated elsewhere.
    static PAdicContext trusted(std::uint64_t p, unsigned k) { return PAdicContext(p, k, trusted_tag{}); }

private:
    struct trusted_tag {};
    PAdicContext(std::uint64_t p, unsigned k, trusted_tag);
    std::uint64_t p_;
    unsigned k_;
    Int mod_;
};

Int pow_p(std::uint64_t p, unsigned long e);

// Largest e with p^e | n (n != 0); also returns n / p^e through unit if given.
long ord_nonzero(const Int& n, std::uint64_t p, Int* unit = nullptr);

Valuation ord_int(const Int& n, std::uint64_t p);
Valuation ord_rat(const Rat& q, std::uint64_t p);

Int mod_pow(const Int& base, const Int& exp, const PAdicContext& ctx);
Int mod_pow(const Int& base, std::uint64_t exp, const PAdicContext& ctx);
Int mod_inv(const Int& r, const PAdicContext& ctx);

double log_height(const Rat& q);
double log_abs(const Int& n);  // log|n| for n != 0

std::string to_string(const Int& n);
std::string to_string(const Rat& q);
Rat parse_rational(const std::string& s);

}  // namespace padic
