#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "frozen.hpp"
#include "padic/newton_polygon.hpp"
#include "padic/oracle.hpp"

using namespace padic;

TEST_CASE("worked polygons") {
    // p^{2h} f_{5,p} with p = 3, h = 3
    auto e = build_padic(parse_poly("729*x^5 - x^2 + 18*x - 81"), 3);
    REQUIRE(e.size() == 2);
    CHECK(e[0].length == 2);
    CHECK(e[1].length == 3);
    // f_{5,1/2} with h = 3 in the Archimedean sense
    auto a = build_arch(parse_poly("x^5 - 64*x^2 + 32*x - 4"));
    REQUIRE(a.size() == 3);
    CHECK(a[0].length == 1);
    CHECK(a[1].length == 1);
    CHECK(a[2].length == 3);
    auto q = build_arch(parse_poly("x^2 - 1"));
    REQUIRE(q.size() == 1);
    CHECK(q[0].length == 2);
    CHECK(q[0].slope == doctest::Approx(0.0));
}

TEST_CASE("shifted tetranomial has two lower edges") {
    // 2^{d(h-1)} (x + 2^{1-h})^d - 2^{2h + d(h-1)} x^2 with h = 3, d = 4
    const unsigned h = 3, d = 4;
    std::vector<Term> ts;
    for (unsigned i = 0; i <= d; ++i) {
        Int b;
        mpz_bin_uiui(b.get_mpz_t(), d, i);
        ts.push_back({i, b * pow_p(2, (h - 1) * i)});
    }
    ts.push_back({2, -pow_p(2, 2 * h + d * (h - 1))});
    auto a = build_arch(SparsePoly(ts));
    REQUIRE(a.size() == 2);
    CHECK(a[0].x0 == 0);
    CHECK(a[0].length == 2);
    CHECK(a[0].slope < -2 * std::log(3.0));
}

TEST_CASE("integral valuation candidates") {
    SparsePoly f = parse_poly("1 + x + 5*x^2");
    auto c = integral_valuation_candidates(f, 5);
    REQUIRE(c.size() == 2);
    std::vector<long> vs{c[0].v, c[1].v};
    std::sort(vs.begin(), vs.end());
    CHECK(vs[0] == frozen::kRoots_1_x_5x2[0].first);
    CHECK(vs[1] == frozen::kRoots_1_x_5x2[1].first);
    auto none = integral_valuation_candidates(parse_poly("2 + x^2"), 2);  // slope 1/2
    CHECK(none.empty());
    auto pe = build_padic(parse_poly("2 + x^2"), 2);
    REQUIRE(pe.size() == 1);
    CHECK(pe[0].root_valuation() == Rat(1, 2));
}

TEST_CASE("edge lengths bound the valuations of oracle roots") {
    for (auto [text, p] : std::vector<std::pair<const char*, std::uint64_t>>{
             {"12 - 7*x + x^2", 2}, {"45 + 3*x^3 - x^7", 3}, {"1 - 25*x^4 + x^9", 5}, {"18 - 3*x + 2*x^5", 3}}) {
        SparsePoly f = parse_poly(text);
        auto edges = build_padic(f, p);
        auto roots = oracle::analyze(f, p, 6).roots;
        for (auto& r : roots) {
            std::size_t seen = 0;
            for (auto& s : roots) seen += s.valuation == r.valuation;
            std::uint64_t len = 0;
            for (auto& e : edges)
                if (e.root_valuation() == Rat(r.valuation)) len += e.length;
            CHECK(seen <= len);
        }
    }
}
