#pragma once

#include <cstdint>
#include <vector>

#include "padic/polynomial.hpp"

namespace padic {

// Linear forms in p-adic logarithms: alpha_1^{b_1} ... alpha_n^{b_n} - 1.
struct YuBoundInput {
    std::vector<Rat> alphas;
    std::vector<Int> exponents;
    std::uint64_t p;
};

// Upper bound on ord_p(prod alpha_i^{b_i} - 1) when the product is not 1.
double yu_bound(const YuBoundInput& in);

// log of the classical lower bound on |z1 - z2| for irreducible f of degree d and height H.
double mahler_bound(std::uint64_t d, const Int& H);

struct AuxPolys {
    std::vector<Int> Q;  // dense, constant term first, degree abar3 - 2
    SparsePoly q;        // (abar3 - abar2) - abar3 x^abar2 + abar2 x^abar3
    bool identity_holds;  // q = Q (x - 1)^2, checked by exact multiplication
    Int Q_at_1;
};
AuxPolys aux_polys(std::uint64_t abar2, std::uint64_t abar3);

// Bound M on ord_p(T^{a3-a2} - 1) for a square-free trinomial (rounded proof constant).
inline constexpr double kTrinomialMConstant = 36791093348.0;
double separation_M(std::uint64_t d, const Int& H, std::uint64_t p);

// Upper bounds on max ord_p(z1 - z2) over distinct roots in C_p of a trinomial.
// Square-free: log_p H + M + 1/(p-1). Degenerate: log_p H + log_p(dH) + log_p(a2^2 a3^3 (a3-a2)^2)
// + 1/(p-1), plus log_p H more when r = gcd(a2, a3) > 1 (scaling by the r-th root).
double separation_valuation_bound(std::uint64_t a2, std::uint64_t a3, const Int& H, std::uint64_t p,
                                  bool degenerate);

// Lower bound on log |z1 - z2|_p (always <= log H).
double trinomial_separation_bound(std::uint64_t d, const Int& H, std::uint64_t p, bool degenerate,
                                  std::uint64_t a2 = 1);

// |ord_p(z - tau)| <= log_p((d - r) d^3 H / (8 r^4)) for a degenerate root tau and a
// non-degenerate root z.
double degenerate_repulsion_bound(std::uint64_t d, std::uint64_t r, const Int& H, std::uint64_t p);

// Bounds on S0 = max s(f, z0) over degenerate digits z0.
double s0_bound_linear_middle(std::uint64_t d, const Int& c3, std::uint64_t p);  // a2 = 1
double s0_bound_general(std::uint64_t d, std::uint64_t r, const Int& H, std::uint64_t p);  // d >= 3
double s0_bound_degenerate(std::uint64_t d, std::uint64_t r, std::uint64_t p);

// Numerical smoke test of Disc_{n}(Q) = abar2^{abar3-4} prod_{Q(mu)=0} Q'(mu), n = abar3 - 2:
// returns the relative error between the exact resultant side and the floating-point product.
double discriminant_identity_error(std::uint64_t abar2, std::uint64_t abar3);

// Exact Disc_n(g) = Res_{n,n-1}(g, g') / lead(g) for dense integer g (Sylvester + Bareiss).
Int classical_discriminant(const std::vector<Int>& g);

}  // namespace padic
