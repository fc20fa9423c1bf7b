#include <doctest.h>

#include "psilab/parse.hpp"
#include "psilab/psi_ideal.hpp"
#include "psilab_cli/acceptance.hpp"
#include "psilab_cli/commands.hpp"

using namespace psilab;
using namespace psilab::cli;

TEST_CASE("polynomial JSON round trip") {
    auto f = parse_polynomial("3*x1^2*x3 - 1/2*x2*x4", 4);
    CHECK(polynomial_from_json(to_json(f)) == f);
    CHECK(polynomial_from_json(json::parse(to_json(f).dump())) == f);
    auto g = parse_dual("y1^(2)*y3 - y2", 3);
    CHECK(dual_from_json(to_json(g)) == g);
    CHECK_THROWS(polynomial_from_json(json::parse(R"({"n":2,"terms":[{"coeff":"1","exps":[1]}]})")));
}

TEST_CASE("report echoes the input polynomial exactly") {
    RunConfig cfg;
    cfg.n = 4;
    cfg.d = 3;
    cfg.seed = 5;
    auto rep = run("betti", cfg);
    auto echoed = polynomial_from_json(rep.to_json()["inputs"]["f"]);
    CHECK(echoed == sample_general_f(4, 3, 5, 5));
    CHECK(rep.to_json()["inputs"]["seed"] == 5);
}

TEST_CASE("partitions from text") {
    CHECK(parse_partition("[3,2,1]") == Partition{3, 2, 1});
    CHECK(parse_partition("(2, 2)") == Partition{2, 2});
    CHECK(parse_partition("4") == Partition{4});
    CHECK_THROWS(parse_partition("[1,x]"));
}

TEST_CASE("betti command agrees with the closed form") {
    RunConfig cfg;
    cfg.n = 5;
    cfg.d = 3;
    cfg.seed = 7;
    auto rep = run("betti", cfg);
    CHECK(rep.exit_code() == 0);
    CHECK(rep.results["oracle"]["source"] == "oracle");
    CHECK(rep.results["formula"]["source"] == "formula");
}

TEST_CASE("exit code reflects verdicts and status") {
    Report rep;
    rep.check("a", true);
    CHECK(rep.exit_code() == 0);
    rep.check("b", false, "why");
    CHECK(rep.exit_code() == 1);
    Report partial;
    partial.status = "guard";
    CHECK(partial.exit_code() == 1);
    CHECK(rep.to_text().find("[FAIL] b: why") != std::string::npos);
}

TEST_CASE("configuration errors") {
    RunConfig cfg;
    CHECK_THROWS_AS(run("betti", cfg), ConfigError);
    cfg.n = 3;
    cfg.d = 3;
    cfg.field = "fp:7";
    CHECK_THROWS_AS(run("betti", cfg), ConfigError);
    CHECK_THROWS_AS(run("nonsense", cfg), ConfigError);
    CHECK_THROWS_AS(criteria_for_suite("11"), ConfigError);
    CHECK(criteria_for_suite("1,4") == std::vector<int>{1, 4});
}

TEST_CASE("restrict command") {
    RunConfig cfg;
    cfg.n = 5;
    cfg.schur = "[2,1]";
    auto rep = run("restrict", cfg);
    CHECK(rep.exit_code() == 0);
    CHECK(rep.results["schur_dimension"] == 40);
}

TEST_CASE("linrel command") {
    RunConfig cfg;
    cfg.n = 6;
    cfg.d = 4;
    cfg.t_zero = true;
    auto rep = run("linrel", cfg);
    CHECK(rep.exit_code() == 0);
    CHECK(rep.results["dim_L"]["value"] == 1);
    cfg.t_zero = false;
    cfg.t_json = R"({"[3,1]": "2", "[2,2]": 5})";
    CHECK(run("linrel", cfg).exit_code() == 0);
}

TEST_CASE("equivariant command") {
    RunConfig cfg;
    cfg.n = 4;
    cfg.d = 2;
    auto rep = run("equivariant", cfg);
    CHECK(rep.exit_code() == 0);
    cfg.i = 1;
    cfg.j = 2;
    CHECK(run("equivariant", cfg).exit_code() == 0);
}
