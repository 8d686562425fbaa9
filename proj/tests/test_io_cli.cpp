/*
   Copyright 2026 the tschirn authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <cstdio>
#include <functional>
#include <string>
#include <sys/wait.h>

#include <catch2/catch_amalgamated.hpp>

#include "tschirn/fields.hpp"
#include "tschirn/io.hpp"
#include "tschirn/suites.hpp"

using namespace tschirn;

using Q = Rational;
using PQ = Poly<Rational>;
using RQ = RationalFunction<Rational>;
using BQ = BiPoly<Rational>;

static std::string thrown_message(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const std::exception& e) {
        return e.what();
    }
    return "";
}

TEST_CASE("polynomial strings round-trip through the parser") {
    PQ p = parse_poly<Q>("x^4+x+1");
    REQUIRE(p.degree() == 4);
    REQUIRE(poly_str(p) == "x^4 + x + 1");
    REQUIRE(parse_poly<Q>(poly_str(p)) == p);

    PQ q = parse_poly<Q>("3/2*x^4 - x + 1");
    REQUIRE(q.coeff(4) == Q(3, 2));
    REQUIRE(poly_str(q) == "3/2*x^4 - x + 1");

    REQUIRE(poly_str(PQ()) == "0");
    REQUIRE(parse_poly<Q>("0") == PQ());
    REQUIRE(poly_str(-PQ::x()) == "-x");
    // quotients of polynomials that cancel are still polynomials
    REQUIRE(parse_poly<Q>("(x^2 - 1)/(x - 1)") == parse_poly<Q>("x + 1"));

    StreamRng rng(7, "io-poly-roundtrip");
    for (int t = 0; t < 50; ++t) {
        PQ r = random_poly<Q>(rng, static_cast<int>(rng.uniform(0, 6)));
        REQUIRE(parse_poly<Q>(poly_str(r)) == r);
    }
}

TEST_CASE("laurent and rational-function strings round-trip") {
    REQUIRE(rf_str(RQ::x_power(-2)) == "x^-2");
    REQUIRE(parse_ratfun<Q>("x^-2") == RQ::x_power(-2));
    REQUIRE(parse_ratfun<Q>("1/x^2") == RQ::x_power(-2));
    REQUIRE(rf_str(parse_ratfun<Q>("-3*x^-1")) == "-3*x^-1");
    REQUIRE(rf_str(parse_ratfun<Q>("(x + 1)/x^2")) == "(x + 1)/x^2");
    REQUIRE(rf_str(parse_ratfun<Q>("1/(x + 1)")) == "1/(x + 1)");

    StreamRng rng(7, "io-rf-roundtrip");
    for (int t = 0; t < 50; ++t) {
        RQ f(random_poly<Q>(rng, static_cast<int>(rng.uniform(0, 4))),
             random_monic<Q>(rng, static_cast<int>(rng.uniform(0, 3))));
        REQUIRE(parse_ratfun<Q>(rf_str(f)) == f);
    }
}

TEST_CASE("plane model strings round-trip") {
    BQ f = parse_bipoly<Q>("y^2 - (x^3 - x)");
    REQUIRE(f.ydeg() == 2);
    REQUIRE(bipoly_str(f) == "y^2 - (x^3 - x)");
    REQUIRE(bipoly_str(parse_bipoly<Q>("y^3 - x*y - 1")) == "y^3 - x*y - 1");
    REQUIRE(bipoly_str(parse_bipoly<Q>("y^4 + (x^2 + 1)*y^2 + 3*x*y")) ==
            "y^4 + (x^2 + 1)*y^2 + 3*x*y");

    StreamRng rng(7, "io-bipoly-roundtrip");
    for (int t = 0; t < 30; ++t) {
        std::vector<PQ> c;
        const int yd = static_cast<int>(rng.uniform(0, 3));
        for (int i = 0; i <= yd; ++i) c.push_back(random_poly<Q>(rng, static_cast<int>(rng.uniform(0, 3))));
        BQ g(std::move(c));
        REQUIRE(parse_bipoly<Q>(bipoly_str(g)) == g);
    }
}

TEST_CASE("syntax errors carry the offending offset") {
    try {
        parse_bipoly<Q>("y^2 -");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        REQUIRE(e.offset == 5);
        REQUIRE(std::string(e.what()).find("syntax error at offset 5") != std::string::npos);
    }
    try {
        parse_poly<Q>("x $");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        REQUIRE(e.offset == 2);
    }
    REQUIRE_THROWS_AS(parse_poly<Q>("x^(2)"), ParseError);
    REQUIRE_THROWS_AS(parse_poly<Q>("1/0"), ParseError);
    REQUIRE_THROWS_AS(parse_poly<Q>("x)"), ParseError);
    REQUIRE_THROWS_AS(parse_poly<Q>("(x"), ParseError);
    REQUIRE_THROWS_AS(parse_poly<Q>(""), ParseError);
    REQUIRE_THROWS_AS(parse_poly<Q>("x^99999"), ParseError);
    REQUIRE_THROWS_AS(parse_poly<Q>("y + 1"), ParseError);    // y is reserved for models
    REQUIRE_THROWS_AS(parse_bipoly<Q>("1/y"), ParseError);
    REQUIRE_THROWS_AS(parse_bipoly<Q>("y^-1"), ParseError);
    REQUIRE_THROWS_AS(parse_poly<Q>("1/x"), std::domain_error);
    REQUIRE_THROWS_AS(parse_scalar<Q>("x + 1"), std::domain_error);
    REQUIRE_THROWS_AS(parse_bipoly<Q>("y/x"), std::domain_error);
}

TEST_CASE("bundle JSON round-trips and rejects singular charts") {
    BundleLattice<Q> b = standard_bundle<Q>({-2, 1});
    Json j = bundle_to_json(b);
    REQUIRE(j.at("rank") == 2);
    REQUIRE(j.at("infinity")[0][0] == "x^-2");
    BundleLattice<Q> back = bundle_from_json<Q>(j);
    REQUIRE(splitting_type(back) == splitting_type(b));
    REQUIRE(bundle_to_json(back).dump() == j.dump());

    Json bad = Json::parse(R"({"rank": 2, "finite": [["1","1"],["1","1"]],
                               "infinity": [["1","0"],["0","1"]]})");
    REQUIRE(thrown_message([&] { bundle_from_json<Q>(bad); }) == "finite chart basis singular");
    Json missing = Json::parse(R"({"rank": 1, "finite": [["1"]]})");
    REQUIRE_THROWS_AS(bundle_from_json<Q>(missing), std::domain_error);
}

TEST_CASE("cover JSON round-trips") {
    CoverAlgebra<Q> cov = kummer_cover<Q>(3, parse_poly<Q>("x^4 + x + 1"));
    Json j = cover_to_json(cov);
    REQUIRE(j.at("d") == 3);
    REQUIRE(j.at("char") == 0);
    CoverAlgebra<Q> back = cover_from_json<Q>(j);
    REQUIRE(back.provenance == "kummer");
    REQUIRE(tschirnhausen(back).type == SplittingType({2, 3}));
    REQUIRE(cover_to_json(back).dump() == j.dump());

    Json wrong = j;
    wrong["char"] = 7;
    REQUIRE(thrown_message([&] { cover_from_json<Q>(wrong); }).find("characteristic mismatch") !=
            std::string::npos);
}

TEST_CASE("model text dispatches to the right parser") {
    ParsedModel<Q> plane = parse_model<Q>("y^2 - (x^3 - x)");
    REQUIRE(std::holds_alternative<BQ>(plane));
    ParsedModel<Q> planej = parse_model<Q>("{\"f\": \"y^3 - x*y - 1\"}");
    REQUIRE(std::get<BQ>(planej).ydeg() == 3);
    ParsedModel<Q> cov = parse_model<Q>(cover_to_json(split_cover<Q>(2)).dump());
    REQUIRE(std::holds_alternative<CoverAlgebra<Q>>(cov));
    ParsedModel<Q> bun = parse_model<Q>(bundle_to_json(standard_bundle<Q>({0, 1})).dump());
    REQUIRE(std::holds_alternative<BundleLattice<Q>>(bun));

    REQUIRE(thrown_message([&] { parse_model<Q>("2*y^2 - x"); }) == "plane model must be monic in y");
    REQUIRE_THROWS_AS(parse_model<Q>("{\"zzz\": 1}"), std::domain_error);
    REQUIRE_THROWS_AS(parse_model<Q>("{broken"), ParseError);
    // a bundle with a singular finite chart is a semantic error, not a syntax one
    REQUIRE(thrown_message([&] {
                parse_model<Q>(R"({"rank": 2, "finite": [["1","1"],["1","1"]],
                                   "infinity": [["1","0"],["0","1"]]})");
            }) == "finite chart basis singular");
}

TEST_CASE("suite reports are deterministic and sized by the config") {
    RunConfig cfg;
    cfg.seed = 11;
    cfg.trials = 40;
    SuiteReport a = run_suite<Q>("dims", cfg);
    SuiteReport b = run_suite<Q>("dims", cfg);
    REQUIRE(a.pass);
    REQUIRE(a.data.dump() == b.data.dump());
    REQUIRE(a.data.at("identity_trials") == 40);

    cfg.trials = 8;
    SuiteReport p1 = run_suite<Q>("popov", cfg);
    SuiteReport p2 = run_suite<Q>("popov", cfg);
    REQUIRE(p1.pass);
    REQUIRE(p1.data.dump() == p2.data.dump());

    REQUIRE_THROWS_AS(run_suite<Q>("unknown", cfg), std::domain_error);
}

#ifdef TSCHIRN_CLI_PATH

struct CliResult {
    int code = -1;
    std::string out;
};

static CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(TSCHIRN_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    CliResult res;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) res.out.append(buf, n);
    int st = pclose(p);
    res.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return res;
}

TEST_CASE("command line drives the library end to end") {
    CliResult kummer = run_cli("kummer --d 2 --p \"x^3 - x\" --json");
    REQUIRE(kummer.code == 0);
    Json out = Json::parse(kummer.out);
    REQUIRE(out.at("type").at("type") == Json::array({2}));
    REQUIRE(out.at("branch_degree") == 4);
    REQUIRE(out.at("p_a") == 1);

    CliResult lingen = run_cli("lingen --d 3 --trials 40 --seed 7 --json");
    REQUIRE(lingen.code == 0);
    Json lg = Json::parse(lingen.out);
    REQUIRE(lg.at("rank") == 6);
    REQUIRE(lg.at("full") == true);

    CliResult verify = run_cli("verify dims --trials 30 --json");
    REQUIRE(verify.code == 0);
    REQUIRE(Json::parse(verify.out).at("pass") == true);

    CliResult again = run_cli("verify dims --trials 30 --json");
    REQUIRE(again.out == verify.out);

    CliResult modp = run_cli("kummer --d 3 --p \"x^4 + x + 1\" --char 10007 --json");
    REQUIRE(modp.code == 0);
    REQUIRE(Json::parse(modp.out).at("type").at("type") == Json::array({2, 3}));

    REQUIRE(run_cli("").code == 2);
    REQUIRE(run_cli("kummer --d 3").code == 2);
    REQUIRE(run_cli("verify nope").code == 2);
    REQUIRE(run_cli("scrollar --model /nonexistent.json").code == 2);
    REQUIRE(run_cli("verify lingen --trials 3").code == 1);
}

#endif
