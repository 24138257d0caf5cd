#pragma once

#include <cstdint>
#include <vector>

#include "padic/padic_arith.hpp"
#include "padic/polynomial.hpp"  // SparsePoly as input data only

// Brute-force ground truth. Deliberately independent of the solvers: it uses only
// padic_arith plus its own dense rational polynomial code.
namespace padic::oracle {

struct BudgetExceeded : Error {
    using Error::Error;
};
struct CriterionFailed : Error {
    using Error::Error;
};

inline constexpr std::uint64_t kDefaultBudget = 100000000;
inline constexpr unsigned kMaxClassPrecision = 64;

// All x in [0, p^k) with f(x) = 0 mod p^k.
std::vector<Int> roots_mod_pk(const SparsePoly& f, std::uint64_t p, unsigned k,
                              std::uint64_t budget = kDefaultBudget);

struct OracleRoot {
    long valuation;     // root = p^valuation * unit
    Int unit;           // unit part known mod p^precision
    unsigned precision;
    bool degenerate;    // also a root of f'
    unsigned multiplicity;
};

struct OracleResult {
    std::uint64_t p;
    std::uint64_t zero_multiplicity = 0;  // multiplicity of x = 0
    std::vector<OracleRoot> roots;        // distinct roots in Q_p^*, sorted by (valuation, unit)
    std::size_t qp_count() const { return roots.size(); }
};

// Distinct nonzero roots of f in Q_p, each lifted to `precision` unit digits.
OracleResult analyze(const SparsePoly& f, std::uint64_t p, unsigned precision = 24);
std::size_t count_qp_roots(const SparsePoly& f, std::uint64_t p);

// Hensel/Newton lift of an integer start point to a residue mod p^target.
Int lift_root(const SparsePoly& f, std::uint64_t p, const Int& start, unsigned target);

}  // namespace padic::oracle
