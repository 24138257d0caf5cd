#include "padic/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace padic {

const char* term_class_name(TermClass c) {
    switch (c) {
        case TermClass::Zero: return "zero";
        case TermClass::Monomial: return "monomial";
        case TermClass::Binomial: return "binomial";
        case TermClass::Trinomial: return "trinomial";
        case TermClass::Tetranomial: return "tetranomial";
        default: return "general";
    }
}

SparsePoly::SparsePoly(std::vector<Term> terms) {
    std::map<std::uint64_t, Int> acc;
    for (auto& t : terms) {
        if (t.exp > kMaxExponent) throw ParseError("exponent exceeds 2^63 - 1");
        acc[t.exp] += t.coef;
    }
    for (auto& [e, c] : acc)
        if (c != 0) terms_.push_back({e, c});
}

std::uint64_t SparsePoly::degree() const { return terms_.empty() ? 0 : terms_.back().exp; }
std::uint64_t SparsePoly::low_exponent() const { return terms_.empty() ? 0 : terms_.front().exp; }

Int SparsePoly::height() const {
    Int h = 0;
    for (auto& t : terms_)
        if (abs(t.coef) > h) h = abs(t.coef);
    return h;
}

TermClass SparsePoly::classify() const {
    switch (terms_.size()) {
        case 0: return TermClass::Zero;
        case 1: return TermClass::Monomial;
        case 2: return TermClass::Binomial;
        case 3: return TermClass::Trinomial;
        case 4: return TermClass::Tetranomial;
        default: return TermClass::General;
    }
}

Int SparsePoly::coefficient(std::uint64_t exp) const {
    for (auto& t : terms_)
        if (t.exp == exp) return t.coef;
    return 0;
}

// ---- text form ----

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;
    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    bool at_end() {
        skip();
        return i >= s.size();
    }
    std::string digits() {
        skip();
        std::size_t b = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        return s.substr(b, i - b);
    }
};

std::uint64_t parse_exponent(const std::string& d) {
    if (d.empty()) throw ParseError("missing exponent");
    Int e(d);
    if (e > Int(std::to_string(kMaxExponent))) throw ParseError("exponent exceeds 2^63 - 1");
    return std::stoull(d);
}

}  // namespace

SparsePoly parse_poly(const std::string& text) {
    Cursor c{text};
    std::vector<Term> terms;
    bool first = true;
    while (!c.at_end()) {
        int sign = 1;
        if (c.eat('+')) {
        } else if (c.eat('-')) {
            sign = -1;
        } else if (!first) {
            throw ParseError("expected '+' or '-' at position " + std::to_string(c.i));
        }
        while (true) {  // tolerate repeated signs such as "+ -3"
            if (c.eat('-')) sign = -sign;
            else if (!c.eat('+')) break;
        }
        std::string d = c.digits();
        Int coef = d.empty() ? Int(1) : Int(d);
        bool has_x = false;
        std::uint64_t e = 0;
        bool star = c.eat('*');
        if (c.eat('x') || c.eat('X')) {
            has_x = true;
            e = 1;
            if (c.eat('^')) e = parse_exponent(c.digits());
        } else if (star) {
            throw ParseError("expected 'x' after '*'");
        }
        if (d.empty() && !has_x) throw ParseError("empty term at position " + std::to_string(c.i));
        terms.push_back({e, sign * coef});
        first = false;
    }
    if (terms.empty()) throw ParseError("empty polynomial");
    return SparsePoly(std::move(terms));
}

SparsePoly parse_poly_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
    if (!j.contains("terms") || !j["terms"].is_array()) throw ParseError("JSON polynomial needs a \"terms\" array");
    std::vector<Term> terms;
    for (auto& t : j["terms"]) {
        if (!t.is_array() || t.size() != 2) throw ParseError("each term must be [exponent, \"coefficient\"]");
        std::uint64_t e;
        if (t[0].is_string()) e = parse_exponent(t[0].get<std::string>());
        else if (t[0].is_number_unsigned()) e = t[0].get<std::uint64_t>();
        else throw ParseError("exponent must be a nonnegative integer");
        std::string cs = t[1].is_string() ? t[1].get<std::string>() : t[1].dump();
        Int coef;
        if (coef.set_str(cs, 10) != 0) throw ParseError("bad coefficient: " + cs);
        terms.push_back({e, coef});
    }
    return SparsePoly(std::move(terms));
}

std::string to_string(const SparsePoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& t : f.terms()) {
        Int a = abs(t.coef);
        if (first) {
            if (t.coef < 0) os << "-";
        } else {
            os << (t.coef < 0 ? " - " : " + ");
        }
        first = false;
        if (t.exp == 0) {
            os << a.get_str();
            continue;
        }
        if (a != 1) os << a.get_str() << "*";
        os << "x";
        if (t.exp != 1) os << "^" << t.exp;
    }
    return os.str();
}

std::string to_json(const SparsePoly& f) {
    nlohmann::json arr = nlohmann::json::array();
    for (auto& t : f.terms()) arr.push_back({t.exp, t.coef.get_str()});
    return nlohmann::json{{"terms", arr}}.dump();
}

// ---- evaluation and transforms ----

Int evaluate(const SparsePoly& f, const Int& x) {
    if (f.degree() > (1ULL << 20) && abs(x) > 1) throw Error("exact evaluation degree too large");
    Int r = 0, pw;
    for (auto& t : f.terms()) {
        mpz_pow_ui(pw.get_mpz_t(), x.get_mpz_t(), t.exp);
        r += t.coef * pw;
    }
    return r;
}

Rat evaluate(const SparsePoly& f, const Rat& x) {
    if (x.get_den() == 1) return Rat(evaluate(f, x.get_num()));
    // Homogenize: f(a/b) = sum c a^e b^{d-e} / b^d.
    const Int& a = x.get_num();
    const Int& b = x.get_den();
    std::uint64_t d = f.degree();
    if (d > (1ULL << 16)) throw Error("exact rational evaluation degree too large");
    Int num = 0, pa, pb;
    for (auto& t : f.terms()) {
        mpz_pow_ui(pa.get_mpz_t(), a.get_mpz_t(), t.exp);
        mpz_pow_ui(pb.get_mpz_t(), b.get_mpz_t(), d - t.exp);
        num += t.coef * pa * pb;
    }
    mpz_pow_ui(pb.get_mpz_t(), b.get_mpz_t(), d);
    Rat r(num, pb);
    r.canonicalize();
    return r;
}

Int evaluate_mod(const SparsePoly& f, const Int& x, const PAdicContext& ctx) {
    Int r = 0;
    for (auto& t : f.terms()) r += t.coef * mod_pow(x, t.exp, ctx);
    return ctx.reduce(r);
}

SparsePoly derivative(const SparsePoly& f, unsigned order) {
    std::vector<Term> out;
    for (auto& t : f.terms()) {
        if (t.exp < order) continue;
        Int c = t.coef;
        for (unsigned j = 0; j < order; ++j) c *= Int(static_cast<unsigned long>(t.exp - j));
        out.push_back({t.exp - order, c});
    }
    return SparsePoly(std::move(out));
}

SparsePoly reciprocal(const SparsePoly& f) {
    if (f.is_zero() || f.low_exponent() != 0) throw ZeroConstantTerm("reciprocal needs a nonzero constant term");
    std::uint64_t d = f.degree();
    std::vector<Term> out;
    for (auto& t : f.terms()) out.push_back({d - t.exp, t.coef});
    return SparsePoly(std::move(out));
}

std::pair<std::uint64_t, SparsePoly> gcd_exponents(const SparsePoly& f) {
    if (f.size() < 2) throw Error("gcd_exponents needs at least two terms");
    std::uint64_t a1 = f.low_exponent(), r = 0;
    for (auto& t : f.terms()) r = std::gcd(r, t.exp - a1);
    std::vector<Term> out;
    for (auto& t : f.terms()) out.push_back({(t.exp - a1) / r, t.coef});
    return {r, SparsePoly(std::move(out))};
}

SparsePoly shift_exponents_down(const SparsePoly& f, std::uint64_t by) {
    std::vector<Term> out;
    for (auto& t : f.terms()) {
        if (t.exp < by) throw Error("cannot shift exponents below zero");
        out.push_back({t.exp - by, t.coef});
    }
    return SparsePoly(std::move(out));
}

// ---- ModPoly ----

ModPoly ModPoly::from_sparse(const SparsePoly& f, const PAdicContext& ctx) {
    ModPoly g;
    g.p = ctx.p();
    g.k = ctx.k();
    g.mod = ctx.modulus();
    for (auto& t : f.terms()) {
        Int c = ctx.reduce(t.coef);
        if (c != 0) g.terms.emplace_back(t.exp, c);
    }
    return g;
}

ModPoly ModPoly::from_dense(const std::vector<Int>& coeffs, const PAdicContext& ctx) {
    ModPoly g;
    g.p = ctx.p();
    g.k = ctx.k();
    g.mod = ctx.modulus();
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        Int c = ctx.reduce(coeffs[j]);
        if (c != 0) g.terms.emplace_back(j, c);
    }
    return g;
}

std::vector<Int> ModPoly::dense() const {
    if (terms.empty()) return {};
    std::uint64_t d = terms.back().first;
    if (d > (1ULL << 22)) throw Error("dense view of a huge-degree polynomial");
    std::vector<Int> out(d + 1, 0);
    for (auto& [e, c] : terms) out[e] = c;
    return out;
}

std::vector<std::uint64_t> ModPoly::reduced_mod_p() const {
    std::vector<std::uint64_t> out;
    Int pp(static_cast<unsigned long>(p));
    for (auto& [e, c] : terms) {
        Int r = c % pp;
        if (r == 0) continue;
        if (e > (1ULL << 22)) throw Error("dense mod-p view of a huge-degree polynomial");
        if (out.size() <= e) out.resize(e + 1, 0);
        out[e] = r.get_ui();
    }
    return out;
}

std::int64_t ModPoly::degree_mod_p() const {
    Int pp(static_cast<unsigned long>(p));
    std::int64_t d = -1;
    for (auto& [e, c] : terms)
        if (c % pp != 0) d = static_cast<std::int64_t>(e);
    return d;
}

Int ModPoly::evaluate(const Int& x) const {
    PAdicContext c = ctx();
    Int r = 0;
    for (auto& [e, a] : terms) r += a * mod_pow(x, e, c);
    return c.reduce(r);
}

std::string ModPoly::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        auto& [e, c] = *it;
        if (e == 0) {
            os << c.get_str();
            continue;
        }
        if (c != 1) os << c.get_str() << "*";
        os << "x";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

Int binom_mod(std::uint64_t a, std::uint64_t j, const PAdicContext& ctx) {
    if (j > a) return 0;
    Int unit = 1, u;
    long val = 0;
    for (std::uint64_t i = 0; i < j; ++i) {
        Int num(static_cast<unsigned long>(a - i)), den(static_cast<unsigned long>(i + 1));
        val += ord_nonzero(num, ctx.p(), &u);
        unit = ctx.reduce(unit * u);
        val -= ord_nonzero(den, ctx.p(), &u);
        unit = ctx.reduce(unit * mod_inv(u, ctx));
    }
    if (val >= static_cast<long>(ctx.k())) return 0;
    return ctx.reduce(unit * pow_p(ctx.p(), static_cast<unsigned long>(val)));
}

TaylorExpander::TaylorExpander(const ModPoly& g, const Int& zeta)
    : ctx_(g.ctx()), zeta_(g.ctx().reduce(zeta)) {
    zeta_zero_ = zeta_ == 0;
    Int pp(static_cast<unsigned long>(g.p));
    zeta_unit_ = (zeta_ % pp) != 0;
    if (zeta_unit_) zeta_inv_ = mod_inv(zeta_, ctx_);
    for (auto& [a, c] : g.terms) {
        State s;
        s.a = a;
        s.c = c;
        if (zeta_unit_) s.pow = mod_pow(zeta_, a, ctx_);
        st_.push_back(std::move(s));
    }
}

Int TaylorExpander::next() {
    const unsigned i = i_;
    Int total = 0;
    const long k = static_cast<long>(ctx_.k());
    for (auto& s : st_) {
        if (!s.alive) continue;
        if (s.a < i) {
            s.alive = false;
            continue;
        }
        if (s.val < k) {
            Int pw;
            if (zeta_unit_) pw = s.pow;
            else if (zeta_zero_) pw = (s.a == i) ? 1 : 0;
            else pw = mod_pow(zeta_, s.a - i, ctx_);
            if (pw != 0) total += s.c * s.unit * pow_p(ctx_.p(), static_cast<unsigned long>(s.val)) * pw;
        }
        // advance binomial C(a, i) -> C(a, i+1) and the power zeta^{a-i} -> zeta^{a-i-1}
        if (s.a == i) {
            s.alive = false;
            continue;
        }
        Int u;
        s.val += ord_nonzero(Int(static_cast<unsigned long>(s.a - i)), ctx_.p(), &u);
        s.unit = ctx_.reduce(s.unit * u);
        s.val -= ord_nonzero(Int(static_cast<unsigned long>(i + 1)), ctx_.p(), &u);
        s.unit = ctx_.reduce(s.unit * mod_inv(u, ctx_));
        if (zeta_unit_) s.pow = ctx_.reduce(s.pow * zeta_inv_);
    }
    ++i_;
    return ctx_.reduce(total);
}

std::vector<Int> taylor_coefficients(const ModPoly& g, const Int& zeta, unsigned count) {
    TaylorExpander te(g, zeta);
    std::vector<Int> out;
    out.reserve(count);
    for (unsigned i = 0; i < count; ++i) out.push_back(te.next());
    return out;
}

ModPoly shift_rescale(const ModPoly& g, const Int& zeta, unsigned s) {
    if (s >= g.k) throw Error("shift_rescale needs s < k");
    PAdicContext ctx = g.ctx();
    std::uint64_t deg = g.terms.empty() ? 0 : g.terms.back().first;
    std::uint64_t len = std::min<std::uint64_t>(deg, g.k - 1) + 1;
    TaylorExpander te(g, zeta);
    PAdicContext out_ctx = ctx.with_k(g.k - s);
    std::vector<Int> coeffs(len);
    for (std::uint64_t j = 0; j < len; ++j) {
        Int t = te.next();
        // coefficient of x^j in g(zeta + p x) is p^j T_j, known mod p^{k+j}
        Int full = t * pow_p(g.p, j);
        Int ps = pow_p(g.p, s);
        if (j < s && t != 0 && ord_nonzero(t, g.p) + static_cast<long>(j) < static_cast<long>(s))
            throw DivisibilityViolation("coefficient of x^" + std::to_string(j) + " not divisible by p^" +
                                        std::to_string(s));
        coeffs[j] = out_ctx.reduce(full / ps);
    }
    return ModPoly::from_dense(coeffs, out_ctx);
}

ModPoly shift_rescale(const SparsePoly& f, const Int& zeta, unsigned s, const PAdicContext& ctx) {
    return shift_rescale(ModPoly::from_sparse(f, ctx), zeta, s);
}

}  // namespace padic
