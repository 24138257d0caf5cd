#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "padic/approximate_root.hpp"

namespace padic {

// c1 + c2 x^d with d != 0 (negative d allowed).
struct BinomialInput {
    Int c1, c2;
    std::int64_t d;
    std::uint64_t p;
};

enum class BinomialReason { Ok, NoIntegralValuation, PowerTestFailed };
const char* reason_name(BinomialReason r);

struct BinomialAnalysis {
    BinomialReason reason = BinomialReason::Ok;
    std::size_t count = 0;
    bool reciprocal = false;  // d < 0: the roots are those of c2 + c1 x^{|d|}
    std::uint64_t n = 0;      // |d|
    long valuation = 0;       // common valuation of all roots
    Int u1, u2;               // unit parts of the (possibly swapped) coefficients
    unsigned ell = 0;         // ord_p n
    std::uint64_t gamma = 1;  // gcd(n, p-1), or gcd(n, 2) for p = 2
    SparsePoly unit_poly() const;  // u1 + u2 x^n: its unit roots are the unit parts of the roots
};

BinomialAnalysis analyze_binomial(const BinomialInput& in);
std::size_t count_binomial_roots(const BinomialInput& in);

// Leading digit of every unit root: the coset ladder for odd p, {1, 3} mod 4 for p = 2.
std::vector<std::uint64_t> binomial_leading_digits(const BinomialInput& in);

// x - (g(x)/p^l) / (g'(x)/p^l) mod p^2 for the unit binomial g, computed in Q and reduced;
// defined when both quotients are p-integral.
Int binomial_newton_correction(const BinomialInput& in, std::uint64_t x);

struct BinomialSolution {
    BinomialReason reason = BinomialReason::Ok;
    BinomialAnalysis analysis;
    std::vector<ApproximateRoot> roots;
    unsigned k_used = 0;
};

BinomialSolution solve_binomial(const BinomialInput& in, std::uint64_t prime_cap = 100000);

// Upper bounds on |log|z1 - z2|| for distinct roots: p-adic is log_p_coeff * log p + log(H)/d.
struct BinomialSeparation {
    Rat log_p_coeff;       // 1/(p-1) when d is a nontrivial power of p, else 0
    double log_h_over_d;  // (1/d) log H
    double padic;          // the assembled p-adic bound
    double archimedean;    // log d + (1/d) log H
};
BinomialSeparation separation_binomial(std::uint64_t d, std::uint64_t p, const Int& H);

}  // namespace padic
