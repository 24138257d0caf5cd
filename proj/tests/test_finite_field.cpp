#include <doctest.h>

#include <cmath>
#include <random>

#include "frozen.hpp"
#include "padic/finite_field.hpp"
#include "padic/kernels.hpp"

using namespace padic;

TEST_CASE("generators and coset roots") {
    CHECK(generator_fp(7) == frozen::kGenerator7);
    CHECK(generator_fp(17) == frozen::kGenerator17);
    CHECK(binomial_coset_roots(2, 2, 5).empty());
    CHECK(binomial_coset_roots(4, 2, 5) == std::vector<std::uint64_t>{2, 3});
    std::mt19937_64 rng(5);
    for (int it = 0; it < 300; ++it) {
        std::uint64_t p = std::vector<std::uint64_t>{3, 5, 7, 11, 13, 31, 101}[rng() % 7];
        std::uint64_t gamma = 1 + rng() % (p - 1);
        if ((p - 1) % gamma) continue;
        std::uint64_t c = 1 + rng() % (p - 1);
        auto r = binomial_coset_roots(c, gamma, p);
        CHECK((r.empty() || r.size() == gamma));
        std::size_t brute = 0;
        for (std::uint64_t x = 1; x < p; ++x) brute += fp::pow(x, gamma, p) == c;
        CHECK(brute == r.size());
    }
}

TEST_CASE("distinct root counts") {
    CHECK(gcd_with_frobenius({0, 1, 1}, 2) == 2);
    CHECK(gcd_with_frobenius({1, 0, 1}, 3) == 0);
    CHECK(gcd_with_frobenius({0, 0, 2, 1}, 3) == 2);
    std::mt19937_64 rng(9);
    for (int it = 0; it < 2000; ++it) {
        std::uint64_t p = 2;
        do p = 2 + rng() % 96;
        while (!is_prime_u64(p));
        FpPoly f(1 + rng() % 5);
        for (auto& c : f) c = rng() % p;
        fp::trim(f);
        if (f.empty()) continue;
        auto ex = roots_fp_exhaustive(f, p);
        CHECK(gcd_with_frobenius(f, p) == ex.size());
        CHECK(roots_fp_split(f, p) == ex);
    }
}

TEST_CASE("splitting at large primes") {
    const std::uint64_t p = 1000003;
    // (x - 5)(x - 77)(x - 123456)^2 (x^2 + 1 has no roots mod p since p = 3 mod 4)
    FpPoly f{1};
    auto mul = [&](FpPoly a, FpPoly b) {
        FpPoly c(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + fp::mul(a[i], b[j], p)) % p;
        return c;
    };
    for (std::uint64_t r : {5ULL, 77ULL, 123456ULL, 123456ULL}) f = mul(f, {p - r, 1});
    f = mul(f, {1, 0, 1});
    auto roots = roots_fp_split(f, p);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == FpRoot{5, false});
    CHECK(roots[1] == FpRoot{77, false});
    CHECK(roots[2] == FpRoot{123456, true});
    CHECK_THROWS_AS(roots_fp_exhaustive(f, p), PrimeTooLarge);
}

TEST_CASE("exponent lattice reduction") {
    auto r = reduce_exponents_lattice(1, 2, 101);
    CHECK(r.e == 1);
    CHECK(r.m2 == 1);
    CHECK(r.m3 == 2);
    auto s = reduce_exponents_lattice(50, 99, 101);
    CHECK(std::max(std::llabs(s.m2), std::llabs(s.m3)) == frozen::kLattice_50_99_101_best);
    auto t = reduce_exponents_lattice(3, 6, 13);
    CHECK(t.r_prime == 3);
    CHECK(std::max(std::llabs(t.m2), std::llabs(t.m3)) <= 3 * std::sqrt(24.0));
    std::mt19937_64 rng(17);
    int checked = 0;
    while (checked < 500) {
        std::uint64_t p = 5 + rng() % 9995;
        if (!is_prime_u64(p)) continue;
        std::uint64_t a3 = 2 + rng() % (p - 3), a2 = 1 + rng() % (a3 - 1);
        auto q = reduce_exponents_lattice(a2, a3, p);
        const std::int64_t n = static_cast<std::int64_t>(p - 1);
        auto centered = [&](std::int64_t v) {
            v %= n;
            if (v < 0) v += n;
            return v > n / 2 ? v - n : v;
        };
        CHECK(centered(q.m2) == centered(static_cast<std::int64_t>((static_cast<unsigned __int128>(a2) * q.e) % (p - 1))));
        CHECK(centered(q.m3) == centered(static_cast<std::int64_t>((static_cast<unsigned __int128>(a3) * q.e) % (p - 1))));
        double bound = static_cast<double>(q.r_prime) * std::sqrt(2.0 * static_cast<double>(p - 1));
        CHECK(static_cast<double>(std::max(std::llabs(q.m2), std::llabs(q.m3))) <= bound);
        ++checked;
    }
}

TEST_CASE("vector scan kernels agree with the scalar reference") {
    using namespace kernels;
    std::mt19937_64 rng(23);
    for (int it = 0; it < 200; ++it) {
        std::uint64_t p;
        do p = 3 + rng() % 50000;
        while (!is_prime_u64(p));
        std::vector<FpTerm> f, df;
        for (int j = 0; j < 1 + static_cast<int>(rng() % 4); ++j) {
            std::uint64_t c = rng() % p, e = rng() % (p - 1);
            f.push_back({c, e});
            if (e > 0) df.push_back({fp::mul(c, e % p, p), (e - 1) % (p - 1)});
        }
        std::vector<std::uint8_t> a(p - 1), b(p - 1);
        scan_scalar(f, df, p, 1, p, a.data());
        if (avx2_available()) {
            scan_avx2(f, df, p, 1, p, b.data());
            CHECK(a == b);
        }
        // the selected backend matches too
        std::vector<std::uint8_t> c(p - 1);
        select(p)(f, df, p, 1, p, c.data());
        CHECK(a == c);
    }
    set_backend(Backend::Scalar);
    CHECK(active_backend() == Backend::Scalar);
    set_backend(Backend::Auto);
}
