#pragma once

#include <cstdint>
#include <vector>

#include "padic/polynomial.hpp"

// Adversarial tetranomials whose two roots near p^{h-1} agree in many leading digits.
namespace padic::tetra {

struct InvalidParams : Error {
    using Error::Error;
};
struct PrecisionTooLow : Error {
    using Error::Error;
};

struct Params {
    std::uint64_t p = 2;
    unsigned h = 3;
    unsigned d = 4;  // even, 4 <= d <= floor(e^h)
    void validate() const;
    unsigned half() const { return (h - 1) * d / 2; }  // (h-1)d/2
};

// p^{2h} f_{d,p} = p^{2h} x^d - x^2 + 2 p^{h-1} x - p^{2h-2}
SparsePoly generate(const Params& prm);

// G(x) = sum_i C(d,i) p^{i((h-1)d/2+1)} x^i - x^2, congruent to 1 - x^2 mod p^{(h-1)d/2+1}
SparsePoly rescaled(const Params& prm);

unsigned default_precision(const Params& prm);  // (h-1)d/2 + h + 8
unsigned min_precision(const Params& prm);      // (h-1)d/2 + h + 4

struct Collision {
    unsigned precision;                  // roots known mod p^precision
    std::vector<std::uint64_t> starts;   // Hensel start residues of G
    Int x1, x2;                          // roots of G (mod p^{precision - shift})
    Int zeta1, zeta2;                    // roots of f_{d,p} (mod p^precision)
    unsigned shift;                      // ord of y = zeta - p^{h-1}: (h-1)d/2 + h
    long order;                          // ord_p(zeta1 - zeta2)
    long residual[2];                    // ord_p of p^{2h} f_{d,p}(zeta_i) at working precision
    long residual_required[2];           // precision + min(ord F'(zeta_i), precision)
    long deriv_valuation[2];             // measured ord_p f'_{d,p}(zeta_i)
    long deriv_formula;                  // ord_p(d) + (h-1)(d-1)
};

Collision collision_order(const Params& prm, unsigned precision);

}  // namespace padic::tetra
