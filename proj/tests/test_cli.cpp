#include <doctest.h>

#include <fstream>
#include <rapidjson/document.h>
#include <rapidjson/error/en.h>
#include <rapidjson/schema.h>
#include <sstream>

#include "cli.hpp"
#include "frozen.hpp"
#include "padic/polynomial.hpp"

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = padic::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

// Empty string when `text` parses and conforms to schemas/<name>.schema.json.
std::string validate(const std::string& text, const std::string& name) {
    std::ifstream in(std::string(SCHEMA_DIR) + "/" + name + ".schema.json");
    std::stringstream ss;
    ss << in.rdbuf();
    rapidjson::Document sd;
    if (sd.Parse(ss.str().c_str()).HasParseError()) return "schema " + name + " does not parse";
    rapidjson::SchemaDocument schema(sd);
    rapidjson::Document d;
    if (d.Parse(text.c_str()).HasParseError())
        return std::string("output does not parse: ") + rapidjson::GetParseError_En(d.GetParseError());
    rapidjson::SchemaValidator v(schema);
    if (!d.Accept(v)) return std::string("violates ") + v.GetInvalidSchemaKeyword();
    return "";
}

}  // namespace

TEST_CASE("solve output conforms and round-trips the polynomial") {
    for (auto [poly, p, count] : std::vector<std::tuple<std::string, std::string, unsigned>>{
             {"738 - 10*x^2 + x^20", "3", frozen::kCount_x20_m10x2_738_p3},
             {"x^10 + 11*x^2 - 12", "2", frozen::kCount_x10_11x2_m12_p2},
             {"1 - x^340", "17", frozen::kCount_1_mx340_p17},
             {"x^6 - 2*x^3 + 1", "7", 3},
             {"1 + x + x^3 + 7*x^5", "7", 0},
             {"x^3", "5", 0}}) {
        auto r = run({"solve", "--p", p, poly, "--json"});
        REQUIRE(r.code == 0);
        CHECK_MESSAGE(validate(r.out, "solve").empty(), poly << ": " << validate(r.out, "solve"));
        rapidjson::Document d;
        d.Parse(r.out.c_str());
        CHECK(d["count"].GetUint() == count);
        CHECK(padic::parse_poly(d["poly"].GetString()) == padic::parse_poly(poly));
        auto o = run({"oracle", "--p", p, poly, "--json"});
        REQUIRE(o.code == 0);
        CHECK(validate(o.out, "solve").empty());
    }
}

TEST_CASE("other commands conform to their schemas") {
    struct C {
        std::vector<std::string> args;
        std::string schema;
    };
    for (auto& c : std::vector<C>{
             {{"count", "--p", "3", "738 - 10*x^2 + x^20", "--json"}, "count"},
             {{"tree", "--p", "3", "--k", "7", "x^10 - 10*x + 738", "--json"}, "tree"},
             {{"tree", "--p", "3", "--k", "9", "x^2", "--include-zero", "--json"}, "tree"},
             {{"polygon", "--p", "3", "729*x^5 - x^2 + 18*x - 81", "--json"}, "polygon"},
             {{"polygon", "--arch", "x^5 - 64*x^2 + 32*x - 4", "--json"}, "polygon"},
             {{"bounds", "--p", "3", "--d", "3", "--H", "10", "--json"}, "bounds"},
             {{"bounds", "--p", "3", "--d", "6", "--H", "10", "--a2", "2", "--r", "2", "--degenerate", "--json"},
              "bounds"},
             {{"tetra", "--p", "3", "--h", "3", "--d", "4", "--json"}, "tetra"},
         }) {
        auto r = run(c.args);
        REQUIRE(r.code == 0);
        CHECK_MESSAGE(validate(r.out, c.schema).empty(), c.args[0] << ": " << validate(r.out, c.schema));
    }
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == 2);
    CHECK(run({"solve"}).code == 2);
    CHECK(run({"solve", "--p", "4", "x + 1"}).code == 2);
    CHECK(run({"solve", "--p", "3", "x +* 1"}).code == 2);
    CHECK(run({"tetra", "--p", "3", "--h", "3", "--d", "5"}).code == 2);
    auto e = run({"oracle", "--p", "3", "1 + x + x^5000", "--json"});
    CHECK(e.code == 1);
    CHECK(validate(e.out, "error").empty());
    auto pk = run({"solve", "--p", "3", "--paper-k", "1 + 2*x^3 + 7*x^50", "--json"});
    CHECK(pk.code == 1);
    CHECK(validate(pk.out, "error").empty());
    CHECK(run({"solve", "--p", "3", "1 + x^2"}).code == 0);
}

TEST_CASE("text output") {
    auto r = run({"tree", "--p", "3", "--k", "7", "x^10 - 10*x + 738"});
    CHECK(r.out.find("3 node(s), depth 2") != std::string::npos);
    auto s = run({"solve", "--p", "17", "1 - x^340", "--digits", "2"});
    CHECK(s.code == 0);
    CHECK(s.out.find("4") != std::string::npos);
}

TEST_CASE("bench emits one CSV row per configuration") {
    auto r = run({"bench", "--p", "3", "--d", "64,128", "--H", "100", "--repeat", "1"});
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line))
        if (!line.empty()) lines.push_back(line);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0].rfind("p,d,H,wall_time,k_used,k_cap,root_count,status", 0) == 0);
}
