#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "padic/nodal_tree.hpp"
#include "padic/polynomial.hpp"

namespace support {

struct Case {
    padic::SparsePoly f;
    std::uint64_t p;
};

// c1 + c2 x^a2 + c3 x^a3 with nonzero |c_i| <= max_c, 1 <= a2 < a3 <= max_d.
std::vector<Case> trinomial_corpus(std::size_t n, std::uint64_t seed, unsigned max_d = 40, long max_c = 50,
                                   std::vector<std::uint64_t> primes = {2, 3, 5, 7, 11, 13});
// c1 + c2 x^d, 1 <= d <= max_d.
std::vector<Case> binomial_corpus(std::size_t n, std::uint64_t seed, unsigned max_d = 40, long max_c = 50,
                                  std::vector<std::uint64_t> primes = {2, 3, 5, 7, 11, 13});
// Trinomials k (c1 + c2 y^b2 + c3 y^b3) with a double root y = t, then x^r = y.
std::vector<Case> degenerate_corpus(std::size_t n, std::uint64_t seed,
                                    std::vector<std::uint64_t> primes = {2, 3, 5, 7, 11, 13});

// Number of x in F_p^* with g(x) = g'(x) = 0 mod p, by direct evaluation.
unsigned degenerate_count_fp(const padic::SparsePoly& g, std::uint64_t p);

// Checks the structural tree invariants; returns an empty string when all hold.
std::string check_tree(const padic::NodalTree& t, const padic::SparsePoly& g, bool trinomial);

std::string describe(const Case& c);

}  // namespace support
