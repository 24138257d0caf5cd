#include <doctest.h>

#include "frozen.hpp"
#include "padic/oracle.hpp"

using namespace padic;
using namespace padic::oracle;

TEST_CASE("residues mod p^k") {
    auto r = roots_mod_pk(parse_poly("x^2 - 1"), 2, 3);
    CHECK(r == std::vector<Int>{1, 3, 5, 7});
    CHECK(roots_mod_pk(parse_poly("x^2 + 1"), 3, 2).empty());
    CHECK_THROWS_AS(roots_mod_pk(parse_poly("x - 1"), 10007, 3, 1000), BudgetExceeded);
}

TEST_CASE("analysis of 1 + x + 5x^2 over Q_5") {
    auto a = analyze(parse_poly("1 + x + 5*x^2"), 5, 12);
    REQUIRE(a.roots.size() == 2);
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(a.roots[i].valuation == frozen::kRoots_1_x_5x2[i].first);
        CHECK(a.roots[i].unit == Int(frozen::kRoots_1_x_5x2[i].second));
        CHECK_FALSE(a.roots[i].degenerate);
    }
}

TEST_CASE("multiplicities and zero") {
    // x^3 (x - 2)^3 (x + 1)
    auto a = analyze(parse_poly("x^7 - 5*x^6 + 6*x^5 + 4*x^4 - 8*x^3"), 3, 6);
    CHECK(a.zero_multiplicity == 3);
    REQUIRE(a.roots.size() == 2);
    for (auto& r : a.roots) CHECK(r.multiplicity == (r.unit == 2 ? 3u : 1u));
    CHECK(count_qp_roots(parse_poly("x^6 - 2*x^3 + 1"), 7) == frozen::kCubeRoots1_mod7.size());
}

TEST_CASE("hensel lift") {
    // ord f' = 1 there, so the start needs two correct digits
    CHECK(lift_root(parse_poly("1 - x^340"), 17, Int(4 + 2 * 17), 8) == Int(frozen::kLift_4_2_17_mod_17_8));
    CHECK_THROWS_AS(lift_root(parse_poly("x^2 - 2"), 7, Int(1), 4), CriterionFailed);
    CHECK_THROWS_AS(analyze(parse_poly("x - 1"), 9), NotPrime);
}
