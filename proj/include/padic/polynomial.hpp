#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "padic/padic_arith.hpp"

namespace padic {

struct ParseError : Error {
    using Error::Error;
};
struct DivisibilityViolation : Error {
    using Error::Error;
};
struct ZeroConstantTerm : Error {
    using Error::Error;
};

inline constexpr std::uint64_t kMaxExponent = (1ULL << 63) - 1;

struct Term {
    std::uint64_t exp;
    Int coef;
    friend bool operator==(const Term& a, const Term& b) { return a.exp == b.exp && a.coef == b.coef; }
};

enum class TermClass { Zero, Monomial, Binomial, Trinomial, Tetranomial, General };
const char* term_class_name(TermClass c);

// Exact sparse integer polynomial; terms sorted by strictly increasing exponent, no zero coefficients.
class SparsePoly {
public:
    SparsePoly() = default;
    explicit SparsePoly(std::vector<Term> terms);  // combines duplicates, drops zeros, sorts

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    std::uint64_t degree() const;
    std::uint64_t low_exponent() const;
    Int height() const;  // max |c_i|
    TermClass classify() const;
    Int coefficient(std::uint64_t exp) const;

    friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }

private:
    std::vector<Term> terms_;
};

SparsePoly parse_poly(const std::string& text);
SparsePoly parse_poly_json(const std::string& json_text);
std::string to_string(const SparsePoly& f);
std::string to_json(const SparsePoly& f);

Int evaluate(const SparsePoly& f, const Int& x);  // exact; guarded against huge degree
Rat evaluate(const SparsePoly& f, const Rat& x);
Int evaluate_mod(const SparsePoly& f, const Int& x, const PAdicContext& ctx);
SparsePoly derivative(const SparsePoly& f, unsigned order = 1);
SparsePoly reciprocal(const SparsePoly& f);
std::pair<std::uint64_t, SparsePoly> gcd_exponents(const SparsePoly& f);
SparsePoly shift_exponents_down(const SparsePoly& f, std::uint64_t by);

// Polynomial with coefficients in Z/(p^k), stored sparsely (dense nodal polys use exps 0..n).
struct ModPoly {
    std::uint64_t p = 2;
    unsigned k = 1;
    Int mod = 2;
    std::vector<std::pair<std::uint64_t, Int>> terms;  // increasing exponents, coefficients nonzero in [0, p^k)

    static ModPoly from_sparse(const SparsePoly& f, const PAdicContext& ctx);
    static ModPoly from_dense(const std::vector<Int>& coeffs, const PAdicContext& ctx);
    PAdicContext ctx() const { return PAdicContext::trusted(p, k); }
    bool is_zero() const { return terms.empty(); }
    std::vector<Int> dense() const;  // requires small degree
    std::vector<std::uint64_t> reduced_mod_p() const;  // dense mod-p coefficients; requires small degree
    std::int64_t degree_mod_p() const;                  // -1 when identically zero mod p
    Int evaluate(const Int& x) const;
    std::string str() const;
};

// C(a, j) mod p^k with explicit valuation bookkeeping (a may be huge).
Int binom_mod(std::uint64_t a, std::uint64_t j, const PAdicContext& ctx);

// Taylor coefficients T_i = f^{(i)}(zeta)/i! mod p^k, produced one at a time.
class TaylorExpander {
public:
    TaylorExpander(const ModPoly& g, const Int& zeta);
    Int next();
    unsigned index() const { return i_; }

private:
    struct State {
        std::uint64_t a;
        Int c;
        Int unit = 1;
        long val = 0;
        Int pow;
        bool alive = true;
    };
    PAdicContext ctx_;
    Int zeta_, zeta_inv_;
    bool zeta_unit_ = false;
    bool zeta_zero_ = false;
    std::vector<State> st_;
    unsigned i_ = 0;
};

std::vector<Int> taylor_coefficients(const ModPoly& g, const Int& zeta, unsigned count);

// p^{-s} g(zeta + p x) mod p^{k-s}, as a dense polynomial of length at most k.
ModPoly shift_rescale(const ModPoly& g, const Int& zeta, unsigned s);
ModPoly shift_rescale(const SparsePoly& f, const Int& zeta, unsigned s, const PAdicContext& ctx);

}  // namespace padic
