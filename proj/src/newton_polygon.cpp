#include "padic/newton_polygon.hpp"

#include <cmath>

namespace padic {

namespace {

// Cross product sign of (b - a) x (c - a) with exact rationals; <= 0 means b is not strictly below ac.
int turn(std::uint64_t ax, const Rat& ay, std::uint64_t bx, const Rat& by, std::uint64_t cx, const Rat& cy) {
    Rat dx1(Int(static_cast<unsigned long>(bx)) - Int(static_cast<unsigned long>(ax)));
    Rat dx2(Int(static_cast<unsigned long>(cx)) - Int(static_cast<unsigned long>(ax)));
    Rat cr = dx1 * (cy - ay) - (by - ay) * dx2;
    return sgn(cr);
}

}  // namespace

std::vector<PadicEdge> build_padic(const SparsePoly& f, std::uint64_t p) {
    if (f.is_zero()) throw Error("Newton polygon of the zero polynomial");
    std::vector<std::pair<std::uint64_t, Rat>> pts;
    for (auto& t : f.terms()) pts.emplace_back(t.exp, Rat(ord_nonzero(t.coef, p)));
    // Monotone chain, lower hull; collinear middle points are dropped so edges merge.
    std::vector<std::pair<std::uint64_t, Rat>> hull;
    for (auto& q : pts) {
        while (hull.size() >= 2) {
            auto& a = hull[hull.size() - 2];
            auto& b = hull.back();
            if (turn(a.first, a.second, b.first, b.second, q.first, q.second) <= 0) hull.pop_back();
            else break;
        }
        hull.push_back(q);
    }
    std::vector<PadicEdge> edges;
    for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
        PadicEdge e;
        e.x0 = hull[i].first;
        e.x1 = hull[i + 1].first;
        e.y0 = hull[i].second;
        e.y1 = hull[i + 1].second;
        e.length = e.x1 - e.x0;
        e.slope = (e.y1 - e.y0) / Rat(Int(static_cast<unsigned long>(e.length)));
        e.slope.canonicalize();
        edges.push_back(e);
    }
    return edges;
}

std::vector<ArchEdge> build_arch(const SparsePoly& f) {
    if (f.is_zero()) throw Error("Newton polygon of the zero polynomial");
    struct P {
        std::uint64_t x;
        double y;
        const Int* c;
    };
    std::vector<P> pts;
    for (auto& t : f.terms()) pts.push_back({t.exp, -log_abs(t.coef), &t.coef});

    // Exact collinearity check when coefficients fit in 64 bits: compare |c|-powers instead of logs.
    auto exact_sign = [](const P& a, const P& b, const P& c, int& out) -> bool {
        if (!a.c->fits_slong_p() || !b.c->fits_slong_p() || !c.c->fits_slong_p()) return false;
        std::uint64_t d1 = b.x - a.x, d2 = c.x - a.x;
        if (d1 > 64 || d2 > 64) return false;
        // sign of d1*(yc - ya) - (yb - ya)*d2 with y = -log|c|:
        // = log(|ca|^{d1-d2} |cb|^{d2} / |cc|^{d1}) ... compare |ca|^{d1} |cb|^{d2} vs |ca|^{d2} |cc|^{d1}
        Int A = abs(*a.c), B = abs(*b.c), C = abs(*c.c), lhs, rhs, t;
        mpz_pow_ui(lhs.get_mpz_t(), A.get_mpz_t(), d1);
        mpz_pow_ui(t.get_mpz_t(), B.get_mpz_t(), d2);
        lhs *= t;
        mpz_pow_ui(rhs.get_mpz_t(), A.get_mpz_t(), d2);
        mpz_pow_ui(t.get_mpz_t(), C.get_mpz_t(), d1);
        rhs *= t;
        out = cmp(lhs, rhs);
        out = out > 0 ? 1 : (out < 0 ? -1 : 0);
        return true;
    };

    std::vector<P> hull;
    for (auto& q : pts) {
        while (hull.size() >= 2) {
            auto& a = hull[hull.size() - 2];
            auto& b = hull.back();
            int s;
            if (!exact_sign(a, b, q, s)) {
                double cr = double(b.x - a.x) * (q.y - a.y) - (b.y - a.y) * double(q.x - a.x);
                double scale = std::max({1.0, std::fabs(q.y - a.y), std::fabs(b.y - a.y)}) * double(q.x - a.x);
                s = std::fabs(cr) <= kArchTolerance * scale ? 0 : (cr > 0 ? 1 : -1);
            }
            if (s <= 0) hull.pop_back();
            else break;
        }
        hull.push_back(q);
    }
    std::vector<ArchEdge> edges;
    for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
        ArchEdge e;
        e.x0 = hull[i].x;
        e.x1 = hull[i + 1].x;
        e.y0 = hull[i].y;
        e.y1 = hull[i + 1].y;
        e.length = e.x1 - e.x0;
        e.slope = (e.y1 - e.y0) / double(e.length);
        e.log3_isolated = true;
        edges.push_back(e);
    }
    const double l3 = std::log(3.0);
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = 0; j < edges.size(); ++j)
            if (i != j && std::fabs(edges[i].slope - edges[j].slope) < l3) edges[i].log3_isolated = false;
    return edges;
}

std::vector<ValuationCandidate> integral_valuation_candidates(const SparsePoly& f, std::uint64_t p) {
    std::vector<ValuationCandidate> out;
    for (auto& e : build_padic(f, p)) {
        Rat v = e.root_valuation();
        if (v.get_den() == 1) out.push_back({v.get_num().get_si(), e.length});
    }
    return out;
}

}  // namespace padic
