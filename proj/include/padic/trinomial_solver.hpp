#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "padic/approximate_root.hpp"
#include "padic/binomial_solver.hpp"
#include "padic/nodal_tree.hpp"

namespace padic {

struct ExponentOverflow : Error {
    using Error::Error;
};
struct SmallGcdViolated : Error {
    using Error::Error;
};

// c1 + c2 x^a2 + c3 x^a3 with 1 <= a2 < a3.
struct TrinomialInput {
    Int c1, c2, c3;
    std::uint64_t a2, a3;
    std::uint64_t p;
    Int H() const;
    SparsePoly poly() const;
    static TrinomialInput from_poly(const SparsePoly& f, std::uint64_t p);  // f(0) != 0, three terms
};

struct DiscriminantReport {
    Int delta_tri;      // exact value, meaningful only when exact
    bool is_zero = false;
    bool exact = true;  // false: decided by the multi-modulus test
    std::uint64_t r = 1, abar2 = 0, abar3 = 0;
};

inline constexpr std::uint64_t kExactDiscriminantLimit = 10000;
DiscriminantReport discriminant_tri(const TrinomialInput& in, bool force_exact = false);

// tau^r = C for every degenerate root tau in C_p (requires a vanishing discriminant).
Rat degenerate_power(const TrinomialInput& in, const DiscriminantReport& rep);
std::vector<ApproximateRoot> degenerate_roots_qp(const TrinomialInput& in, const DiscriminantReport& rep);

struct PrecisionPlan {
    double S0 = 0;
    double D = 0;
    unsigned M_p = 2;
    double k_bound = 1;   // 1 + S0 min{1, D} + M_p max{D - 1, 0}
    std::string s0_case;  // "none", "linear-middle", "general", "degenerate"
    std::string mode = "stabilization";  // or "a-priori"
};
unsigned m_p(std::uint64_t p);
PrecisionPlan precision_plan(const TrinomialInput& in, const DiscriminantReport& rep);

enum class SolveMode { Full, Restricted, SmallGcd };
const char* mode_name(SolveMode m);
SolveMode parse_mode(const std::string& s);

struct SolveOptions {
    SolveMode mode = SolveMode::Full;
    bool paper_k = false;             // use the a-priori precision instead of adaptive doubling
    bool exact_discriminant = false;  // never fall back to the modular vanishing test
    std::uint64_t prime_cap = kDefaultPrimeCap;
    unsigned k_start = 8;
    unsigned k_practical_cap = 4096;  // adaptive search never exceeds min(this, a-priori k)
    unsigned paper_k_limit = 20000;   // refuse a-priori precisions beyond this
};

// Bookkeeping for one integral root valuation v: g(x) = p^{-shift} f(p^v x).
struct ValuationReport {
    long v = 0;
    long shift = 0;
    SparsePoly g;
    PrecisionPlan plan;
    unsigned k_used = 0;
    std::string tree_mode;
    std::size_t nodes = 0;
    unsigned depth = 0;
    std::size_t nondegenerate = 0;
    std::size_t degenerate = 0;
};

struct SolveResult {
    std::uint64_t p = 2;
    std::string method;  // "monomial", "binomial", "trinomial", "general"
    SolveMode mode = SolveMode::Full;
    std::uint64_t zero_multiplicity = 0;  // the root 0 is reported here, not in roots
    std::size_t root_count = 0;           // distinct roots in Q_p^*
    std::vector<ApproximateRoot> roots;   // sorted by (valuation, unit)
    std::vector<ValuationReport> valuations;
    bool reciprocal = false;              // binomials with negative exponent
    bool certified = true;                // false when a precision cap was hit or the input is general
    std::string note;
    DiscriminantReport discriminant;
};

SolveResult solve_trinomial(const TrinomialInput& in, const SolveOptions& opt = {});
SolveResult solve_binomial_poly(const BinomialInput& in, const SolveOptions& opt = {});
// Dispatches on the term count after removing the factor x^{a1}.
SolveResult solve(const SparsePoly& f, std::uint64_t p, const SolveOptions& opt = {});

}  // namespace padic
