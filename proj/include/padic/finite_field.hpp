#pragma once

#include <cstdint>
#include <vector>

#include "padic/polynomial.hpp"

namespace padic {

struct PrimeTooLarge : Error {
    using Error::Error;
};

inline constexpr std::uint64_t kDefaultPrimeCap = 100000;

// Dense polynomial over F_p, constant term first; trailing zeros trimmed.
using FpPoly = std::vector<std::uint64_t>;

struct FpRoot {
    std::uint64_t root;
    bool degenerate;  // f'(root) = 0 as well
    friend bool operator==(const FpRoot& a, const FpRoot& b) {
        return a.root == b.root && a.degenerate == b.degenerate;
    }
};

struct ReducedExponents {
    std::uint64_t e = 0;
    std::uint64_t e_inv = 0;  // 0 when e is not a unit mod p-1
    std::int64_t m2 = 0, m3 = 0;
    std::uint64_t r_prime = 1;  // gcd(a2, a3, (p-1)p)
    bool invertible = false;
};

namespace fp {
std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv(std::uint64_t a, std::uint64_t p);
void trim(FpPoly& f);
FpPoly derivative(const FpPoly& f, std::uint64_t p);
FpPoly mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, std::uint64_t p);
FpPoly rem(FpPoly a, const FpPoly& b, std::uint64_t p);
FpPoly gcd(FpPoly a, FpPoly b, std::uint64_t p);
std::uint64_t eval(const FpPoly& f, std::uint64_t x, std::uint64_t p);
FpPoly from_sparse(const SparsePoly& f, std::uint64_t p);  // requires moderate degree
}  // namespace fp

// All roots in F_p (optionally skipping 0), each flagged degenerate when f' vanishes too.
std::vector<FpRoot> roots_fp_exhaustive(const SparsePoly& f, std::uint64_t p, std::uint64_t cap = kDefaultPrimeCap,
                                        bool skip_zero = false);
std::vector<FpRoot> roots_fp_exhaustive(const ModPoly& f, std::uint64_t cap = kDefaultPrimeCap,
                                        bool skip_zero = false);
std::vector<FpRoot> roots_fp_exhaustive(const FpPoly& f, std::uint64_t p, std::uint64_t cap = kDefaultPrimeCap);

// Same roots without scanning F_p (random splitting with a fixed seed); for large p and low degree.
std::vector<FpRoot> roots_fp_split(const FpPoly& f, std::uint64_t p);

std::uint64_t generator_fp(std::uint64_t p, std::uint64_t cap = kDefaultPrimeCap);

// Solutions of x^gamma = c in F_p^*, via the coset ladder g^{(p-1)/gamma}.
std::vector<std::uint64_t> binomial_coset_roots(std::uint64_t c, std::uint64_t gamma, std::uint64_t p);

// Number of distinct roots of f in F_p: deg gcd(f, x^p - x).
unsigned gcd_with_frobenius(const FpPoly& f, std::uint64_t p);

ReducedExponents reduce_exponents_lattice(std::uint64_t a2, std::uint64_t a3, std::uint64_t p);

}  // namespace padic
