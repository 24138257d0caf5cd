#include "support.hpp"

#include <map>
#include <numeric>
#include <random>

#include "padic/trinomial_solver.hpp"

namespace support {

using namespace padic;

namespace {

long coef(std::mt19937_64& rng, long max_c) {
    long c = 0;
    while (c == 0) c = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * max_c + 1)) - max_c;
    return c;
}

}  // namespace

std::vector<Case> trinomial_corpus(std::size_t n, std::uint64_t seed, unsigned max_d, long max_c,
                                   std::vector<std::uint64_t> primes) {
    std::mt19937_64 rng(seed);
    std::vector<Case> out;
    while (out.size() < n) {
        std::uint64_t p = primes[rng() % primes.size()];
        unsigned a3 = 2 + static_cast<unsigned>(rng() % (max_d - 1));
        unsigned a2 = 1 + static_cast<unsigned>(rng() % (a3 - 1));
        out.push_back({SparsePoly({{0, Int(coef(rng, max_c))}, {a2, Int(coef(rng, max_c))}, {a3, Int(coef(rng, max_c))}}), p});
    }
    return out;
}

std::vector<Case> binomial_corpus(std::size_t n, std::uint64_t seed, unsigned max_d, long max_c,
                                  std::vector<std::uint64_t> primes) {
    std::mt19937_64 rng(seed);
    std::vector<Case> out;
    while (out.size() < n) {
        std::uint64_t p = primes[rng() % primes.size()];
        unsigned d = 1 + static_cast<unsigned>(rng() % max_d);
        out.push_back({SparsePoly({{0, Int(coef(rng, max_c))}, {d, Int(coef(rng, max_c))}}), p});
    }
    return out;
}

std::vector<Case> degenerate_corpus(std::size_t n, std::uint64_t seed, std::vector<std::uint64_t> primes) {
    std::mt19937_64 rng(seed);
    std::vector<Case> out;
    while (out.size() < n) {
        std::uint64_t p = primes[rng() % primes.size()];
        unsigned r = 1 + static_cast<unsigned>(rng() % 3);
        unsigned b3 = 2 + static_cast<unsigned>(rng() % 5);
        unsigned b2 = 1 + static_cast<unsigned>(rng() % (b3 - 1));
        if (std::gcd(b2, b3) != 1) continue;
        long t = static_cast<long>(rng() % 7) - 3;
        if (t == 0) t = 2;
        long k = 1 + static_cast<long>(rng() % 3);
        Int T(t), t2, t3;
        mpz_pow_ui(t2.get_mpz_t(), T.get_mpz_t(), b2);
        mpz_pow_ui(t3.get_mpz_t(), T.get_mpz_t(), b3);
        // y = t is a double root of c1 + c2 y^b2 + c3 y^b3
        Int c3 = Int(static_cast<long>(b2) * k), c2 = -Int(static_cast<long>(b3) * k) * (t3 / t2),
            c1 = Int(k) * t3 * Int(static_cast<long>(b3 - b2));
        out.push_back({SparsePoly({{0, c1}, {std::uint64_t(b2) * r, c2}, {std::uint64_t(b3) * r, c3}}), p});
    }
    return out;
}

unsigned degenerate_count_fp(const SparsePoly& g, std::uint64_t p) {
    unsigned n = 0;
    Int pp(static_cast<unsigned long>(p));
    for (std::uint64_t x = 1; x < p; ++x) {
        Int X(static_cast<unsigned long>(x)), v = 0, dv = 0;
        for (auto& t : g.terms()) {
            Int pw;
            mpz_powm_ui(pw.get_mpz_t(), X.get_mpz_t(), t.exp, pp.get_mpz_t());
            v += t.coef * pw;
            if (t.exp > 0) {
                mpz_powm_ui(pw.get_mpz_t(), X.get_mpz_t(), t.exp - 1, pp.get_mpz_t());
                dv += t.coef * Int(static_cast<unsigned long>(t.exp % p)) * pw;
            }
        }
        if (v % pp == 0 && dv % pp == 0) ++n;
    }
    return n;
}

std::string check_tree(const NodalTree& t, const SparsePoly& g, bool trinomial) {
    const std::uint64_t p = t.p;
    if (t.k >= 1 && t.depth() > (t.k - 1) / 2) return "depth exceeds (k-1)/2";
    std::map<unsigned, std::size_t> per_depth;
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
        const NodalNode& n = t.nodes[i];
        if (i == 0) continue;
        ++per_depth[n.depth];
        ModPoly rec = nodal_reconstruct(g, p, n.digits, n.s_consumed, n.k_local);
        if (rec.dense() != n.poly.dense()) return "reconstruction identity fails at node " + std::to_string(i);
        if (trinomial && n.degree_mod_p > static_cast<std::int64_t>(m_p(p)))
            return "nodal degree " + std::to_string(n.degree_mod_p) + " exceeds the bound";
    }
    for (auto& [depth, count] : per_depth)
        if (count > g.degree() / 2) return "too many nodes at depth " + std::to_string(depth);
    Int pp(static_cast<unsigned long>(p));
    if (trinomial && g.size() == 3 && g.low_exponent() == 0 && g.terms()[0].coef % pp != 0) {
        unsigned nu = degenerate_count_fp(g, p);
        std::size_t D = std::max(1u, t.depth());
        if (t.node_count() > 1 + (2 * D - 1) * nu) return "node count exceeds 1 + (2D - 1) nu";
    }
    return "";
}

std::string describe(const Case& c) { return to_string(c.f) + " over Q_" + std::to_string(c.p); }

}  // namespace support
