#pragma once

#include <cstdint>
#include <vector>

#include "padic/polynomial.hpp"

namespace padic {

struct DerivativeNotInvertible : Error {
    using Error::Error;
};

// A root p^valuation * u of some f, where u is a unit. `unit` is a start point for u whose
// Newton iterates on `target` converge quadratically: with L = ord_p target'(u) and
// certified_digits >= L + 2, every step at least doubles the excess precision over L.
struct ApproximateRoot {
    std::uint64_t p = 2;
    long valuation = 0;
    Int unit;                       // in [0, p^certified_digits)
    unsigned certified_digits = 0;  // unit agrees with the true unit part mod p^certified_digits
    SparsePoly target;              // exact polynomial in the unit coordinate
    unsigned deriv_valuation = 0;   // L
    bool degenerate = false;
    unsigned multiplicity = 1;

    Rat value() const;  // p^valuation * unit
    std::vector<std::uint64_t> digits(unsigned n) const;  // first n base-p digits of unit (n <= certified)
};

// n Newton steps on root.target from root.unit; returns the unit part mod p^{refined_digits(root, n)}.
Int refine_root(const ApproximateRoot& root, unsigned steps);
unsigned refined_digits(const ApproximateRoot& root, unsigned steps);

// Unit part to `digits` digits, refining as needed.
Int unit_to_digits(const ApproximateRoot& root, unsigned digits);

// Builds a certified root of g (unit coordinate) from a non-degenerate tree digit path.
// L is ord_p g'(root); `start` must lie in the root's non-degenerate digit disc.
ApproximateRoot make_certified_root(const SparsePoly& g, std::uint64_t p, long valuation, const Int& start,
                                    unsigned L);

}  // namespace padic
