#include "padic/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>

namespace padic {

namespace {

constexpr double kE2 = 7.38905609893065022723;  // e^2

double logp(double x, std::uint64_t p) { return std::log(x) / std::log(static_cast<double>(p)); }
double logH(const Int& H) { return H == 0 ? 0.0 : log_abs(H); }

}  // namespace

double yu_bound(const YuBoundInput& in) {
    const std::size_t n = in.alphas.size();
    if (n < 2 || in.exponents.size() != n) throw Error("yu_bound: need n >= 2 bases and matching exponents");
    const double lp = std::log(static_cast<double>(in.p));
    double B = 3;
    bool any = false;
    for (auto& b : in.exponents) {
        if (b != 0) any = true;
        B = std::max(B, std::exp(log_abs(b == 0 ? Int(1) : Int(abs(b)))));
    }
    if (!any) throw Error("yu_bound: exponents all zero");
    double prod = 1;
    for (auto& a : in.alphas) {
        if (a == 0) throw Error("yu_bound: zero base");
        double lr = log_abs(a.get_num()), ls = log_abs(a.get_den());
        prod *= std::max({lr, ls, 1.0 / (16 * kE2)});
    }
    double nn = static_cast<double>(n);
    return std::log(2.0) * (std::log(2 * nn) / lp) * std::pow(nn, 2.5) * std::pow(256 * kE2, nn + 1) *
           static_cast<double>(in.p) * (std::log(B) / lp) * prod;
}

double mahler_bound(std::uint64_t d, const Int& H) {
    if (d < 2 || H < 1) throw Error("mahler_bound: need d >= 2 and H >= 1");
    double dd = static_cast<double>(d);
    return 0.5 * std::log(3.0) - (dd + 0.5) * std::log(dd + 1) - (dd - 1) * logH(H);
}

AuxPolys aux_polys(std::uint64_t a2, std::uint64_t a3) {
    if (a2 < 1 || a3 <= a2) throw Error("aux_polys: need 1 <= abar2 < abar3");
    if (std::gcd(a2, a3) != 1) throw Error("aux_polys: exponents must be coprime");
    if (a3 > 100000) throw Error("aux_polys: exponent too large for dense expansion");
    AuxPolys out;
    out.Q.assign(a3 - 1, Int(0));
    for (std::uint64_t j = 0; j + 2 <= a2; ++j) out.Q[j] += Int(static_cast<unsigned long>(a3 - a2)) * (j + 1);
    for (std::uint64_t j = a2 - 1; j + 2 <= a3; ++j) out.Q[j] += Int(static_cast<unsigned long>(a2)) * (a3 - 1 - j);
    out.q = SparsePoly({{0, Int(static_cast<unsigned long>(a3 - a2))},
                        {a2, -Int(static_cast<unsigned long>(a3))},
                        {a3, Int(static_cast<unsigned long>(a2))}});
    // Q (x^2 - 2x + 1)
    std::vector<Int> prod(out.Q.size() + 2, Int(0));
    for (std::size_t i = 0; i < out.Q.size(); ++i) {
        prod[i] += out.Q[i];
        prod[i + 1] -= 2 * out.Q[i];
        prod[i + 2] += out.Q[i];
    }
    std::vector<Int> qd(a3 + 1, Int(0));
    for (auto& t : out.q.terms()) qd[t.exp] = t.coef;
    out.identity_holds = prod == qd;
    out.Q_at_1 = 0;
    for (auto& c : out.Q) out.Q_at_1 += c;
    return out;
}

double separation_M(std::uint64_t d, const Int& H, std::uint64_t p) {
    double dd = static_cast<double>(d);
    double l = logp(dd, p) + logH(H) / std::log(static_cast<double>(p));
    return kTrinomialMConstant * static_cast<double>(p) * std::log(std::max(dd, 3.0)) * l * l;
}

double separation_valuation_bound(std::uint64_t a2, std::uint64_t a3, const Int& H, std::uint64_t p,
                                  bool degenerate) {
    const double lp = std::log(static_cast<double>(p));
    const double d = static_cast<double>(a3);
    const double lpH = logH(H) / lp;
    const double rolle = 1.0 / static_cast<double>(p - 1);
    const double lpdH = logp(d, p) + lpH;
    if (!degenerate) {
        return std::max({lpH + separation_M(a3, H, p) + rolle, lpdH, 2 * rolle});
    }
    std::uint64_t r = std::gcd(a2, a3);
    double b2 = static_cast<double>(a2 / r), b3 = static_cast<double>(a3 / r);
    double J = logp(b2, p) * 2 + logp(b3, p) * 3 + logp(b3 - b2, p) * 2;
    double v = lpH + lpdH + J + rolle;
    if (r > 1) v += lpH;
    return std::max({v, lpdH, 2 * rolle});
}

double trinomial_separation_bound(std::uint64_t d, const Int& H, std::uint64_t p, bool degenerate,
                                  std::uint64_t a2) {
    if (d < 2) throw Error("trinomial_separation_bound: d must be at least 2");
    double D = separation_valuation_bound(a2, d, H, p, degenerate);
    return std::min(-D * std::log(static_cast<double>(p)), logH(H));
}

double degenerate_repulsion_bound(std::uint64_t d, std::uint64_t r, const Int& H, std::uint64_t p) {
    double dd = static_cast<double>(d), rr = static_cast<double>(r);
    return logp((dd - rr) * dd * dd * dd / (8 * rr * rr * rr * rr), p) + logH(H) / std::log(static_cast<double>(p));
}

double s0_bound_linear_middle(std::uint64_t d, const Int& c3, std::uint64_t p) {
    Int dd(std::to_string(d));
    Int v = dd * (dd - 1) * c3 / 2;
    return 2.0 + static_cast<double>(v == 0 ? 0 : ord_nonzero(v, p));
}

double s0_bound_general(std::uint64_t d, std::uint64_t r, const Int& H, std::uint64_t p) {
    if (d < 3) throw Error("s0_bound_general: d must be at least 3");
    const double lp = std::log(static_cast<double>(p));
    double q = static_cast<double>(d / r);
    double L = logp(q * (q - 1), p) + logH(H) / lp;
    // log(2) log(4) 2^{57/2} e^6, the Yu constant specialised to n = 2
    const double C = std::log(2.0) * std::log(4.0) * std::pow(2.0, 28.5) * kE2 * kE2 * kE2;
    double ordr = static_cast<double>(ord_nonzero(Int(std::to_string(r)), p));
    return 2.0 + 2 * ordr + L + C * static_cast<double>(p) * std::log(std::max(q - 1, 1.0)) * L;
}

double s0_bound_degenerate(std::uint64_t d, std::uint64_t r, std::uint64_t p) {
    return 2.0 + 2 * logp(static_cast<double>(r), p) + logp(static_cast<double>(d) / static_cast<double>(r), p);
}

Int classical_discriminant(const std::vector<Int>& g0) {
    std::vector<Int> g = g0;
    while (!g.empty() && g.back() == 0) g.pop_back();
    if (g.size() < 2) throw Error("classical_discriminant: degree must be at least 1");
    const std::size_t n = g.size() - 1;
    std::vector<Int> dg;
    for (std::size_t i = 1; i <= n; ++i) dg.push_back(g[i] * static_cast<unsigned long>(i));
    const std::size_t m = n - 1, N = n + m;
    if (N == 0) return 1;
    std::vector<std::vector<Int>> S(N, std::vector<Int>(N, Int(0)));
    // Rows: m shifts of g, then n shifts of g', coefficients from the leading term down.
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= n; ++j) S[i][i + j] = g[n - j];
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= m; ++j) S[m + i][i + j] = dg[m - j];
    // Fraction-free Gaussian elimination (Bareiss).
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < N; ++k) {
        if (S[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < N && S[r][k] == 0) ++r;
            if (r == N) return 0;
            std::swap(S[k], S[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < N; ++i)
            for (std::size_t j = k + 1; j < N; ++j) S[i][j] = (S[i][j] * S[k][k] - S[i][k] * S[k][j]) / prev;
        prev = S[k][k];
    }
    Int res = S[N - 1][N - 1] * sign;
    return res / g[n];
}

double discriminant_identity_error(std::uint64_t a2, std::uint64_t a3) {
    if (a3 < 4) throw Error("discriminant_identity_error: needs abar3 >= 4");
    AuxPolys aux = aux_polys(a2, a3);
    const std::size_t n = aux.Q.size() - 1;
    Int exact = classical_discriminant(aux.Q);
    // Durand-Kerner on the monic normalisation
    using C = std::complex<double>;
    std::vector<C> a(n + 1);
    double lead = aux.Q[n].get_d();
    for (std::size_t i = 0; i <= n; ++i) a[i] = aux.Q[i].get_d() / lead;
    auto eval = [&](const std::vector<C>& c, C x) {
        C r = 0;
        for (std::size_t i = c.size(); i-- > 0;) r = r * x + c[i];
        return r;
    };
    std::vector<C> z(n);
    for (std::size_t i = 0; i < n; ++i) z[i] = std::pow(C(0.4, 0.9), static_cast<double>(i));
    for (int it = 0; it < 2000; ++it) {
        double delta = 0;
        for (std::size_t i = 0; i < n; ++i) {
            C den = 1;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) den *= z[i] - z[j];
            C step = eval(a, z[i]) / den;
            z[i] -= step;
            delta = std::max(delta, std::abs(step));
        }
        if (delta < 1e-15) break;
    }
    std::vector<C> dq(n);
    for (std::size_t i = 1; i <= n; ++i) dq[i - 1] = aux.Q[i].get_d() * static_cast<double>(i);
    C prod = 1;
    for (auto& mu : z) prod *= eval(dq, mu);
    prod *= std::pow(static_cast<double>(a2), static_cast<double>(a3) - 4);
    double ex = exact.get_d();
    return std::abs(prod - C(ex, 0)) / std::max(1.0, std::abs(ex));
}

}  // namespace padic
