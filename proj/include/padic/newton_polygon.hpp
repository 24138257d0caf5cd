#pragma once

#include <cstdint>
#include <vector>

#include "padic/polynomial.hpp"

namespace padic {

// Edge slope sigma corresponds to roots of valuation v = -sigma.
struct PadicEdge {
    std::uint64_t x0, x1;  // exponents at the endpoints
    Rat y0, y1;            // ord_p of the endpoint coefficients
    Rat slope;
    std::uint64_t length;
    Rat root_valuation() const { return -slope; }
};

struct ArchEdge {
    std::uint64_t x0, x1;
    double y0, y1;  // -log|c|
    double slope;
    std::uint64_t length;
    bool log3_isolated;  // no other lower-edge slope within log 3
};

struct ValuationCandidate {
    long v;
    std::uint64_t multiplicity;
    friend bool operator==(const ValuationCandidate& a, const ValuationCandidate& b) {
        return a.v == b.v && a.multiplicity == b.multiplicity;
    }
};

inline constexpr double kArchTolerance = 1e-12;

std::vector<PadicEdge> build_padic(const SparsePoly& f, std::uint64_t p);
std::vector<ArchEdge> build_arch(const SparsePoly& f);
std::vector<ValuationCandidate> integral_valuation_candidates(const SparsePoly& f, std::uint64_t p);

}  // namespace padic
