#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <numeric>
#include <sstream>
#include <thread>

#include "padic/binomial_solver.hpp"
#include "padic/bounds.hpp"
#include "padic/newton_polygon.hpp"
#include "padic/nodal_tree.hpp"
#include "padic/oracle.hpp"
#include "padic/tetranomial.hpp"
#include "padic/trinomial_solver.hpp"

namespace padic::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string error_kind(const std::exception& e) {
    if (dynamic_cast<const oracle::BudgetExceeded*>(&e)) return "BudgetExceeded";
    if (dynamic_cast<const ExponentOverflow*>(&e)) return "ExponentOverflow";
    if (dynamic_cast<const PrimeTooLarge*>(&e)) return "PrimeTooLarge";
    if (dynamic_cast<const SmallGcdViolated*>(&e)) return "SmallGcdViolated";
    if (dynamic_cast<const tetra::PrecisionTooLow*>(&e)) return "PrecisionTooLow";
    if (dynamic_cast<const ContentDivisible*>(&e)) return "ContentDivisible";
    if (dynamic_cast<const DivisibilityViolation*>(&e)) return "DivisibilityViolation";
    if (dynamic_cast<const NotInvertible*>(&e)) return "NotInvertible";
    if (dynamic_cast<const Error*>(&e)) return "Error";
    return "InternalError";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SparsePoly read_poly(const std::string& text, const std::string& file) {
    if (text.empty() == file.empty()) throw UsageError("give exactly one of a polynomial string or --file");
    std::string src = file.empty() ? text : read_file(file);
    try {
        auto first = src.find_first_not_of(" \t\r\n");
        if (first != std::string::npos && src[first] == '{') return parse_poly_json(src);
        return parse_poly(src);
    } catch (const ParseError& e) {
        throw UsageError(std::string("cannot parse polynomial: ") + e.what());
    }
}

void require_prime(std::uint64_t p) {
    if (!is_prime_u64(p)) throw UsageError("--p must be a prime");
}

Int parse_int(const std::string& s, const char* what) {
    Int v;
    if (s.empty() || v.set_str(s, 10) != 0) throw UsageError(std::string("bad integer for ") + what + ": " + s);
    return v;
}

std::vector<std::uint64_t> base_p_digits(Int u, std::uint64_t p, unsigned n) {
    std::vector<std::uint64_t> d;
    Int pp(static_cast<unsigned long>(p));
    for (unsigned i = 0; i < n; ++i) {
        Int r = u % pp;
        d.push_back(r.get_ui());
        u /= pp;
    }
    return d;
}

Rat scaled(const Int& unit, std::uint64_t p, long v) {
    Rat x(unit);
    if (v >= 0) x *= Rat(pow_p(p, static_cast<unsigned long>(v)));
    else x /= Rat(pow_p(p, static_cast<unsigned long>(-v)));
    x.canonicalize();
    return x;
}

std::string digits_text(const std::vector<std::uint64_t>& d) {
    std::string s;
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? " " : "") + std::to_string(d[i]);
    return s;
}

json root_json(std::uint64_t p, long v, const Int& unit, unsigned digits, bool degenerate, unsigned mult) {
    return json{{"value", scaled(unit, p, v).get_str()},
                {"valuation", std::to_string(v)},
                {"digits", base_p_digits(unit, p, digits)},
                {"degenerate", degenerate},
                {"multiplicity", mult}};
}

json number_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

void print_roots_text(std::ostream& out, const json& roots, std::uint64_t p) {
    for (auto& r : roots) {
        out << "  " << p << "^" << r["valuation"].get<std::string>() << " * [" << digits_text(r["digits"])
            << " ...]";
        if (r["degenerate"].get<bool>()) out << "  (multiplicity " << r["multiplicity"].get<unsigned>() << ")";
        out << "\n";
    }
}

// ---- solve / count ---------------------------------------------------------------------------

struct SolveArgs {
    std::uint64_t p = 0;
    std::string poly, file, mode = "full";
    unsigned digits = 8;
    bool paper_k = false, exact = false, json_out = false, binomial = false;
    std::uint64_t prime_cap = kDefaultPrimeCap;
};

SolveResult do_solve(const SolveArgs& a, SparsePoly& f) {
    require_prime(a.p);
    f = read_poly(a.poly, a.file);
    if (f.is_zero()) throw UsageError("the zero polynomial has no finite root count");
    if (a.digits == 0) throw UsageError("--digits must be positive");
    SolveOptions opt;
    try {
        opt.mode = parse_mode(a.mode);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    opt.paper_k = a.paper_k;
    opt.exact_discriminant = a.exact;
    opt.prime_cap = a.prime_cap;
    if (a.binomial && shift_exponents_down(f, f.low_exponent()).size() != 2)
        throw UsageError("--binomial needs exactly two terms");
    return solve(f, a.p, opt);
}

json solve_json(const SolveResult& r, const SparsePoly& f, unsigned digits, bool paper_k) {
    json roots = json::array();
    for (auto& x : r.roots)
        roots.push_back(root_json(r.p, x.valuation, unit_to_digits(x, digits), digits, x.degenerate, x.multiplicity));
    json vals = json::array();
    double S0 = -1, D = -1;
    unsigned k = 0;
    for (auto& v : r.valuations) {
        k = std::max(k, v.k_used);
        bool planned = r.method == "trinomial";
        if (planned) {
            S0 = std::max(S0, v.plan.S0);
            D = std::max(D, v.plan.D);
        }
        vals.push_back({{"v", std::to_string(v.v)},
                        {"shift", std::to_string(v.shift)},
                        {"k_used", v.k_used},
                        {"k_bound", planned ? number_or_null(v.plan.k_bound) : json(nullptr)},
                        {"s0_case", planned ? json(v.plan.s0_case) : json(nullptr)},
                        {"tree_mode", v.tree_mode},
                        {"nodes", v.nodes},
                        {"depth", v.depth},
                        {"nondegenerate", v.nondegenerate},
                        {"degenerate", v.degenerate}});
    }
    json j{{"command", "solve"},
           {"p", r.p},
           {"poly", to_string(f)},
           {"count", r.root_count},
           {"roots", roots},
           {"normalization",
            {{"zero_multiplicity", r.zero_multiplicity},
             {"method", r.method},
             {"reciprocal", r.reciprocal},
             {"mode", mode_name(r.mode)}}},
           {"precision",
            {{"S0", S0 < 0 ? json(nullptr) : number_or_null(S0)},
             {"D", D < 0 ? json(nullptr) : number_or_null(D)},
             {"k", k},
             {"mode", paper_k ? "a-priori" : "stabilization"},
             {"certified", r.certified},
             {"valuations", vals}}}};
    if (r.method == "trinomial")
        j["discriminant"] = {{"is_zero", r.discriminant.is_zero},
                             {"exact", r.discriminant.exact},
                             {"value", r.discriminant.exact ? json(r.discriminant.delta_tri.get_str()) : json(nullptr)}};
    j["note"] = r.note;
    return j;
}

int cmd_solve(const SolveArgs& a, std::ostream& out) {
    SparsePoly f;
    SolveResult r = do_solve(a, f);
    json j = solve_json(r, f, a.digits, a.paper_k);
    if (a.json_out) {
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    out << "f = " << to_string(f) << " over Q_" << r.p << "\n";
    out << r.root_count << " root(s) in Q_" << r.p << "^* (" << r.method << ", " << mode_name(r.mode) << ", "
        << (r.certified ? "certified" : "not certified") << ")";
    if (r.zero_multiplicity) out << "; x = 0 with multiplicity " << r.zero_multiplicity;
    out << "\n";
    print_roots_text(out, j["roots"], r.p);
    if (!r.note.empty() && r.note != "ok") out << "note: " << r.note << "\n";
    return kExitOk;
}

int cmd_count(const SolveArgs& a, std::ostream& out) {
    SparsePoly f;
    SolveResult r = do_solve(a, f);
    if (a.json_out)
        out << json{{"command", "count"},
                    {"p", r.p},
                    {"poly", to_string(f)},
                    {"count", r.root_count},
                    {"zero_multiplicity", r.zero_multiplicity},
                    {"method", r.method},
                    {"certified", r.certified}}
                   .dump(2)
            << "\n";
    else
        out << r.root_count << "\n";
    return kExitOk;
}

// ---- oracle ----------------------------------------------------------------------------------

int cmd_oracle(const SolveArgs& a, std::ostream& out) {
    require_prime(a.p);
    SparsePoly f = read_poly(a.poly, a.file);
    if (a.digits == 0) throw UsageError("--digits must be positive");
    auto res = oracle::analyze(f, a.p, std::max(a.digits, 4u));
    json roots = json::array();
    for (auto& r : res.roots) roots.push_back(root_json(a.p, r.valuation, r.unit, a.digits, r.degenerate, r.multiplicity));
    json j{{"command", "oracle"},
           {"p", a.p},
           {"poly", to_string(f)},
           {"count", res.qp_count()},
           {"roots", roots},
           {"normalization",
            {{"zero_multiplicity", res.zero_multiplicity}, {"method", "oracle"}, {"reciprocal", false}, {"mode", "full"}}},
           {"precision",
            {{"S0", nullptr},
             {"D", nullptr},
             {"k", std::max(a.digits, 4u)},
             {"mode", "oracle"},
             {"certified", true},
             {"valuations", json::array()}}},
           {"note", "brute force"}};
    if (a.json_out) {
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    out << res.qp_count() << " root(s) in Q_" << a.p << "^* (oracle)\n";
    print_roots_text(out, j["roots"], a.p);
    return kExitOk;
}

// ---- tree ------------------------------------------------------------------------------------

struct TreeArgs {
    std::uint64_t p = 0;
    unsigned k = 0;
    std::string poly, file;
    bool include_zero = false, json_out = false;
};

json fp_coeffs(const ModPoly& g) {
    json a = json::array();
    if (g.degree_mod_p() < 0) return a;
    for (auto c : g.reduced_mod_p()) a.push_back(c);
    while (!a.empty() && a.back() == 0) a.erase(a.end() - 1);
    return a;
}

int cmd_tree(const TreeArgs& a, std::ostream& out) {
    require_prime(a.p);
    if (a.k < 1) throw UsageError("--k must be positive");
    SparsePoly f = read_poly(a.poly, a.file);
    TreeOptions opt;
    opt.skip_zero_root_digit = !a.include_zero;
    NodalTree t = build_tree(f, PAdicContext(a.p, a.k), opt);
    if (a.json_out) {
        json nodes = json::array();
        for (std::size_t i = 0; i < t.nodes.size(); ++i) {
            auto& n = t.nodes[i];
            json deg = json::array();
            for (auto& d : n.degenerate)
                deg.push_back({{"digit", d.digit}, {"s", d.s}, {"multiplicity", d.multiplicity}, {"child", d.child}});
            nodes.push_back({{"index", i},
                             {"digits", n.digits},
                             {"depth", n.depth},
                             {"k_local", n.k_local},
                             {"s_consumed", n.s_consumed},
                             {"poly", n.poly.str()},
                             {"mod_p", i == 0 ? json(nullptr) : fp_coeffs(n.poly)},
                             {"nondegenerate_roots", n.nondegenerate_roots},
                             {"degenerate", deg}});
        }
        out << json{{"command", "tree"},
                    {"p", a.p},
                    {"k", a.k},
                    {"poly", to_string(f)},
                    {"node_count", t.node_count()},
                    {"depth", t.depth()},
                    {"nondegenerate_roots", count_nondegenerate_roots(t)},
                    {"nodes", nodes}}
                   .dump(2)
            << "\n";
        return kExitOk;
    }
    out << "T_{" << a.p << "," << a.k << "}(" << to_string(f) << "): " << t.node_count() << " node(s), depth "
        << t.depth() << ", " << count_nondegenerate_roots(t) << " non-degenerate root(s)\n";
    // depth-first print
    std::function<void(std::size_t)> show = [&](std::size_t i) {
        auto& n = t.nodes[i];
        std::string ind(2 * n.depth + 2, ' ');
        out << ind << "[" << digits_text(n.digits) << "] k_local=" << n.k_local << " S=" << n.s_consumed;
        if (i > 0) out << " mod p: " << fp_coeffs(n.poly).dump();
        out << "\n";
        for (auto r : n.nondegenerate_roots) out << ind << "  root digit " << r << "\n";
        for (auto& d : n.degenerate) {
            out << ind << "  degenerate digit " << d.digit << " s=" << d.s;
            if (d.child < 0) out << (d.s >= 2 ? " (unresolved)" : " (no root)") << "\n";
            else {
                out << "\n";
                show(static_cast<std::size_t>(d.child));
            }
        }
    };
    show(0);
    return kExitOk;
}

// ---- polygon ---------------------------------------------------------------------------------

struct PolygonArgs {
    std::uint64_t p = 0;
    bool arch = false, json_out = false;
    std::string poly, file;
};

int cmd_polygon(const PolygonArgs& a, std::ostream& out) {
    if (a.arch == (a.p != 0)) throw UsageError("give exactly one of --p or --arch");
    SparsePoly f = read_poly(a.poly, a.file);
    if (f.is_zero()) throw UsageError("the zero polynomial has no Newton polygon");
    json edges = json::array();
    json j{{"command", "polygon"}, {"poly", to_string(f)}};
    if (a.arch) {
        for (auto& e : build_arch(f))
            edges.push_back({{"x0", e.x0},
                             {"x1", e.x1},
                             {"y0", e.y0},
                             {"y1", e.y1},
                             {"slope", e.slope},
                             {"length", e.length},
                             {"log3_isolated", e.log3_isolated}});
        j["kind"] = "archimedean";
    } else {
        require_prime(a.p);
        for (auto& e : build_padic(f, a.p))
            edges.push_back({{"x0", e.x0},
                             {"x1", e.x1},
                             {"y0", e.y0.get_str()},
                             {"y1", e.y1.get_str()},
                             {"slope", e.slope.get_str()},
                             {"length", e.length},
                             {"root_valuation", e.root_valuation().get_str()}});
        json vals = json::array();
        for (auto& c : integral_valuation_candidates(f, a.p))
            vals.push_back({{"v", std::to_string(c.v)}, {"multiplicity", c.multiplicity}});
        j["kind"] = "p-adic";
        j["p"] = a.p;
        j["integral_valuations"] = vals;
    }
    j["edges"] = edges;
    if (a.json_out) {
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    out << (a.arch ? std::string("Archimedean") : "p = " + std::to_string(a.p)) << " Newton polygon of "
        << to_string(f) << ": " << edges.size() << " lower edge(s)\n";
    for (auto& e : edges)
        out << "  [" << e["x0"] << ", " << e["x1"] << "] length " << e["length"] << ", slope "
            << (e["slope"].is_string() ? e["slope"].get<std::string>() : e["slope"].dump()) << "\n";
    return kExitOk;
}

// ---- bounds ----------------------------------------------------------------------------------

struct BoundsArgs {
    std::uint64_t p = 0, d = 0, a2 = 1, r = 0;
    std::string H;
    bool degenerate = false, json_out = false;
};

int cmd_bounds(const BoundsArgs& a, std::ostream& out) {
    require_prime(a.p);
    if (a.d < 2) throw UsageError("--d must be at least 2");
    if (a.a2 < 1 || a.a2 >= a.d) throw UsageError("--a2 must satisfy 1 <= a2 < d");
    Int H = parse_int(a.H, "--H");
    if (H < 1) throw UsageError("--H must be positive");
    const std::uint64_t r = a.r ? a.r : std::gcd(a.a2, a.d);
    BinomialSeparation b = separation_binomial(a.d, a.p, H);
    double D = separation_valuation_bound(a.a2, a.d, H, a.p, a.degenerate);
    json s0{{"linear_middle", nullptr}, {"general", nullptr}, {"degenerate", s0_bound_degenerate(a.d, r, a.p)}};
    if (a.d >= 3) s0["general"] = s0_bound_general(a.d, r, H, a.p);
    json j{{"command", "bounds"},
           {"p", a.p},
           {"d", a.d},
           {"H", H.get_str()},
           {"a2", a.a2},
           {"r", r},
           {"degenerate", a.degenerate},
           {"mahler_log_separation", mahler_bound(a.d, H)},
           {"binomial",
            {{"padic_log_distance", b.padic},
             {"archimedean_log_distance", b.archimedean},
             {"log_p_coefficient", b.log_p_coeff.get_str()}}},
           {"trinomial",
            {{"M", separation_M(a.d, H, a.p)},
             {"max_root_valuation_gap", D},
             {"log_separation_lower", trinomial_separation_bound(a.d, H, a.p, a.degenerate, a.a2)}}},
           {"s0", s0}};
    if (a.degenerate) j["repulsion"] = degenerate_repulsion_bound(a.d, r, H, a.p);
    // the a-priori precision of the trinomial solver, using the S0 bound matching the flags
    double S0 = a.degenerate ? s0_bound_degenerate(a.d, r, a.p) : a.d >= 3 ? s0_bound_general(a.d, r, H, a.p) : 2.0;
    double Df = std::floor(D);
    j["k_bound"] = 1 + S0 * std::min(1.0, Df) + m_p(a.p) * std::max(Df - 1, 0.0);
    if (a.json_out) {
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    for (auto& [key, val] : j.items())
        if (key != "command") out << key << ": " << val.dump() << "\n";
    return kExitOk;
}

// ---- tetra -----------------------------------------------------------------------------------

struct TetraArgs {
    std::uint64_t p = 0;
    unsigned h = 0, d = 0, precision = 0;
    bool json_out = false;
};

int cmd_tetra(const TetraArgs& a, std::ostream& out) {
    tetra::Params prm{a.p, a.h, a.d};
    try {
        prm.validate();
    } catch (const tetra::InvalidParams& e) {
        throw UsageError(e.what());
    }
    unsigned prec = a.precision ? a.precision : tetra::default_precision(prm);
    SparsePoly F = tetra::generate(prm);
    tetra::Collision c = tetra::collision_order(prm, prec);
    std::size_t coef_digits = 0;
    for (auto& t : F.terms()) coef_digits = std::max(coef_digits, mpz_sizeinbase(t.coef.get_mpz_t(), static_cast<int>(a.p)));
    json j{{"command", "tetra"},
           {"p", a.p},
           {"h", a.h},
           {"d", a.d},
           {"precision", prec},
           {"poly", to_string(F)},
           {"roots",
            {{{"start", c.starts[0]}, {"digits", base_p_digits(c.zeta1, a.p, prec)}},
             {{"start", c.starts[1]}, {"digits", base_p_digits(c.zeta2, a.p, prec)}}}},
           {"collision_order", c.order},
           {"half_degree_bound", prm.half()},
           {"max_coefficient_digits", coef_digits},
           {"deriv_valuation", {c.deriv_valuation[0], c.deriv_valuation[1]}},
           {"deriv_formula", c.deriv_formula}};
    if (a.json_out) {
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    out << "F = " << to_string(F) << "\n";
    out << "two roots near p^" << a.h - 1 << " agree to ord " << c.order << " (>= (h-1)d/2 = " << prm.half() << ")\n";
    out << "ord f'(zeta) = " << c.deriv_valuation[0] << ", " << c.deriv_valuation[1]
        << "; ord_p(d) + (h-1)(d-1) = " << c.deriv_formula << "\n";
    return kExitOk;
}

// ---- bench -----------------------------------------------------------------------------------

struct BenchArgs {
    std::vector<std::uint64_t> ps, ds;
    std::string H = "100";
    unsigned repeat = 3, jobs = 1;
    bool with_oracle = false;
    std::string mode = "full";
};

struct BenchRow {
    std::uint64_t p, d;
    double wall = 0, oracle_wall = -1;
    unsigned k_used = 0;
    double k_cap = 0;
    std::size_t count = 0;
    std::string status = "ok";
};

// H x^d - (H - 1) x^{a2} - 1: always has the root 1, exponents spread out.
SparsePoly bench_poly(std::uint64_t d, const Int& H) {
    std::uint64_t a2 = std::max<std::uint64_t>(1, d / 2 - 1);
    return SparsePoly({{0, Int(-1)}, {a2, -(H - 1)}, {d, H}});
}

void bench_one(BenchRow& row, const Int& H, const BenchArgs& a) {
    SparsePoly f = bench_poly(row.d, H);
    SolveOptions opt;
    opt.mode = parse_mode(a.mode);
    try {
        double best = 1e300;
        SolveResult r;
        for (unsigned i = 0; i < a.repeat; ++i) {
            auto t0 = std::chrono::steady_clock::now();
            r = solve(f, row.p, opt);
            auto t1 = std::chrono::steady_clock::now();
            best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
        }
        row.wall = best;
        row.count = r.root_count;
        for (auto& v : r.valuations) {
            row.k_used = std::max(row.k_used, v.k_used);
            row.k_cap = std::max(row.k_cap, std::ceil(v.plan.k_bound));
        }
        if (!r.certified) row.status = "uncertified";
        if (a.with_oracle && row.d <= 256) {
            auto t0 = std::chrono::steady_clock::now();
            oracle::count_qp_roots(f, row.p);
            row.oracle_wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        }
    } catch (const oracle::BudgetExceeded&) {
        row.status = "budget";
    } catch (const std::exception& e) {
        row.status = "error:" + error_kind(e);
    }
}

int cmd_bench(const BenchArgs& a, std::ostream& out) {
    if (a.ps.empty() || a.ds.empty()) throw UsageError("bench needs --p and --d lists");
    for (auto p : a.ps) require_prime(p);
    for (auto d : a.ds)
        if (d < 3) throw UsageError("bench degrees must be at least 3");
    Int H = parse_int(a.H, "--H");
    if (H < 2) throw UsageError("--H must be at least 2");
    if (a.repeat < 1 || a.jobs < 1) throw UsageError("--repeat and --jobs must be positive");
    parse_mode(a.mode);
    std::vector<BenchRow> rows;
    for (auto p : a.ps)
        for (auto d : a.ds) rows.push_back(BenchRow{p, d});
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < rows.size();) bench_one(rows[i], H, a);
    };
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < std::min<std::size_t>(a.jobs, rows.size()); ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    out << "p,d,H,wall_time,k_used,k_cap,root_count,status" << (a.with_oracle ? ",oracle_time" : "") << "\n";
    out << std::setprecision(9) << std::fixed;
    for (auto& r : rows) {
        out << r.p << "," << r.d << "," << H.get_str() << "," << r.wall << "," << r.k_used << ","
            << static_cast<long long>(r.k_cap) << "," << r.count << "," << r.status;
        if (a.with_oracle) {
            out << ",";
            if (r.oracle_wall >= 0) out << r.oracle_wall;
            else out << "NA";
        }
        out << "\n";
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact root counting and approximation for sparse polynomials over Q_p", "padic"};
    app.require_subcommand(1);

    auto add_json = [&](CLI::App* c, bool& flag) { c->add_flag("--json", flag, "JSON output"); };
    auto add_poly = [](CLI::App* c, std::string& poly, std::string& file) {
        c->add_option("poly", poly, "polynomial, e.g. \"738 - 10*x^2 + x^20\"");
        c->add_option("--file", file, "read the polynomial (text or JSON) from a file");
    };

    SolveArgs sa;
    auto add_solve_opts = [&](CLI::App* c) {
        c->add_option("--p", sa.p, "prime")->required();
        add_poly(c, sa.poly, sa.file);
        c->add_option("--digits", sa.digits, "base-p digits per root (Newton refined)")->capture_default_str();
        add_json(c, sa.json_out);
    };
    auto* solve_cmd = app.add_subcommand("solve", "count and approximate the roots in Q_p");
    add_solve_opts(solve_cmd);
    solve_cmd->add_option("--mode", sa.mode, "full | restricted | small-gcd")
        ->check(CLI::IsMember({"full", "restricted", "small-gcd"}))
        ->capture_default_str();
    solve_cmd->add_flag("--paper-k", sa.paper_k, "use the a-priori precision (can be enormous)");
    solve_cmd->add_flag("--exact", sa.exact, "exact discriminant even for huge exponents");
    solve_cmd->add_flag("--binomial", sa.binomial, "insist on a binomial input");
    solve_cmd->add_option("--prime-cap", sa.prime_cap, "largest p for exhaustive F_p scans")->capture_default_str();

    auto* count_cmd = app.add_subcommand("count", "number of roots in Q_p");
    count_cmd->add_option("--p", sa.p, "prime")->required();
    add_poly(count_cmd, sa.poly, sa.file);
    count_cmd->add_option("--mode", sa.mode, "full | restricted | small-gcd")
        ->check(CLI::IsMember({"full", "restricted", "small-gcd"}));
    count_cmd->add_flag("--exact", sa.exact, "exact discriminant");
    count_cmd->add_option("--prime-cap", sa.prime_cap, "largest p for exhaustive F_p scans");
    add_json(count_cmd, sa.json_out);

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force roots (same JSON layout as solve)");
    add_solve_opts(oracle_cmd);

    TreeArgs ta;
    auto* tree_cmd = app.add_subcommand("tree", "the digit tree of a polynomial at precision k");
    tree_cmd->add_option("--p", ta.p, "prime")->required();
    tree_cmd->add_option("--k", ta.k, "precision")->required();
    add_poly(tree_cmd, ta.poly, ta.file);
    tree_cmd->add_flag("--include-zero", ta.include_zero, "also follow the zero leading digit");
    add_json(tree_cmd, ta.json_out);

    PolygonArgs pa;
    auto* poly_cmd = app.add_subcommand("polygon", "p-adic or Archimedean Newton polygon");
    poly_cmd->add_option("--p", pa.p, "prime");
    poly_cmd->add_flag("--arch", pa.arch, "Archimedean polygon (-log|c|)");
    add_poly(poly_cmd, pa.poly, pa.file);
    add_json(poly_cmd, pa.json_out);

    BoundsArgs ba;
    auto* bounds_cmd = app.add_subcommand("bounds", "separation and precision bounds");
    bounds_cmd->add_option("--p", ba.p, "prime")->required();
    bounds_cmd->add_option("--d", ba.d, "degree")->required();
    bounds_cmd->add_option("--H", ba.H, "height (max |coefficient|)")->required();
    bounds_cmd->add_option("--a2", ba.a2, "middle exponent")->capture_default_str();
    bounds_cmd->add_option("--r", ba.r, "gcd(a2, d) override");
    bounds_cmd->add_flag("--degenerate", ba.degenerate, "vanishing discriminant");
    add_json(bounds_cmd, ba.json_out);

    TetraArgs xa;
    auto* tetra_cmd = app.add_subcommand("tetra", "tetranomial root collision");
    tetra_cmd->set_help_flag("--help", "print this help");  // frees -h for --h
    tetra_cmd->add_option("--p", xa.p, "prime")->required();
    tetra_cmd->add_option("--h", xa.h, "h >= 3")->required();
    tetra_cmd->add_option("--d", xa.d, "even degree in [4, e^h]")->required();
    tetra_cmd->add_option("--precision", xa.precision, "digits of each root");
    add_json(tetra_cmd, xa.json_out);

    BenchArgs bench;
    auto* bench_cmd = app.add_subcommand("bench", "timing grid, CSV on stdout");
    bench_cmd->add_option("--p", bench.ps, "primes")->required()->delimiter(',');
    bench_cmd->add_option("--d", bench.ds, "degrees")->required()->delimiter(',');
    bench_cmd->add_option("--H", bench.H, "height")->capture_default_str();
    bench_cmd->add_option("--repeat", bench.repeat, "timing repetitions (minimum is reported)")->capture_default_str();
    bench_cmd->add_option("--jobs", bench.jobs, "worker threads")->capture_default_str();
    bench_cmd->add_option("--mode", bench.mode, "solver mode")->check(CLI::IsMember({"full", "restricted", "small-gcd"}));
    bench_cmd->add_flag("--oracle", bench.with_oracle, "also time the brute-force oracle (d <= 256)");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    auto* sub = app.get_subcommands().front();
    auto* json_opt = sub->get_option_no_throw("--json");
    bool want_json = json_opt && json_opt->count() > 0;
    try {
        if (sub == solve_cmd) return cmd_solve(sa, out);
        if (sub == count_cmd) return cmd_count(sa, out);
        if (sub == oracle_cmd) return cmd_oracle(sa, out);
        if (sub == tree_cmd) return cmd_tree(ta, out);
        if (sub == poly_cmd) return cmd_polygon(pa, out);
        if (sub == bounds_cmd) return cmd_bounds(ba, out);
        if (sub == tetra_cmd) return cmd_tetra(xa, out);
        if (sub == bench_cmd) return cmd_bench(bench, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n" << sub->help();
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        if (want_json) out << json{{"error", {{"type", error_kind(e)}, {"message", e.what()}}}}.dump(2) << "\n";
        return kExitCompute;
    }
    return kExitUsage;
}

}  // namespace padic::cli
