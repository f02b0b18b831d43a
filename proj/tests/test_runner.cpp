#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "udw/errors.hpp"
#include "udw/runner.hpp"

using namespace udw;

namespace {
std::string csv(const SweepTable& t) {
    std::ostringstream os;
    write_csv(os, t);
    return os.str();
}
}  // namespace

TEST_CASE("eta grids") {
    EtaRange r{1, 5000, 5, Spacing::Log};
    auto g = eta_grid(r);
    REQUIRE(g.size() == 5);
    CHECK(g.front() == 1);
    CHECK(g.back() == 5000);
    CHECK(g[2] == doctest::Approx(std::sqrt(5000.0)));
    CHECK(eta_grid({2, 9, 1, Spacing::Linear}) == std::vector<double>{2});
    CHECK_THROWS_AS(eta_grid({0, 9, 3, Spacing::Log}), DomainError);
    CHECK_THROWS_AS(eta_grid({1, 9, 0, Spacing::Log}), DomainError);
}

TEST_CASE("eval reproduces the reference row") {
    RunConfig c;
    c.a = 0.1, c.omega = 1, c.lambda0 = 0.3, c.eta = 30;
    auto t = run_eval(c);
    REQUIRE(t.rows.size() == 1);
    CHECK(t.rows[0].total == doctest::Approx(1.24589).epsilon(0.005));
    CHECK(t.exit_code() == 0);
    auto s = csv(t);
    CHECK(s.find("# prefactor=maintext") != std::string::npos);
    CHECK(s.find("# renorm_offsets=excluded") != std::string::npos);
    CHECK(s.find("\neta,v1,neg_v2,total\n") != std::string::npos);
}

TEST_CASE("single point sweep equals eval") {
    RunConfig c;
    c.range = {7, 7, 1, Spacing::Log};
    auto sw = run_sweep(c);
    c.eta = 7;
    auto ev = run_eval(c);
    REQUIRE(sw.rows.size() == 1);
    CHECK(sw.rows[0].total == ev.rows[0].total);
}

TEST_CASE("csv round trip and determinism") {
    RunConfig c;
    c.range = {1, 300, 17, Spacing::Log};
    c.jobs = 4;
    auto a = csv(run_sweep(c));
    c.jobs = 1;
    auto b = csv(run_sweep(c));
    CHECK(a == b);
    std::istringstream in(a);
    auto rows = read_csv_rows(in);
    auto t = run_sweep(c);
    REQUIRE(rows.size() == t.rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.12g", t.rows[i].total);
        CHECK(rows[i].total == std::stod(buf));
        std::snprintf(buf, sizeof buf, "%.12g", t.rows[i].eta);
        CHECK(rows[i].eta == std::stod(buf));
    }
    for (size_t i = 1; i < t.rows.size(); ++i) CHECK(t.rows[i - 1].eta < t.rows[i].eta);
}

TEST_CASE("compare with the wrong prefactor shows the factor two") {
    RunConfig c;
    c.range = {1, 11, 3, Spacing::Log};
    c.correlator.v2_form = V2Form::PartialFraction;
    auto ok = run_compare(c);
    REQUIRE(ok.summary);
    CHECK(ok.summary->pass);
    CHECK(ok.exit_code() == 0);
    c.correlator.prefactor = Prefactor::AppendixD;
    auto bad = run_compare(c);
    CHECK_FALSE(bad.summary->pass);
    CHECK(bad.summary->max_rel_diff == doctest::Approx(0.5).epsilon(1e-3));
    CHECK(bad.exit_code() == 3);
}

TEST_CASE("improper gamma still runs and is flagged") {
    RunConfig c;
    c.a = 0.001, c.omega = 2.3, c.lambda0 = lambda0_for_gamma(0.1), c.eta = 50;
    auto t = run_eval(c);
    bool warned = false;
    for (auto& [k, v] : t.meta) warned |= k == "warning" && v.find("PerturbationViolated") == 0;
    CHECK(warned);
}

TEST_CASE("sweep collects failures per point") {
    RunConfig c;
    c.oracle = true;
    c.quadrature.kappa_max = 0.5;
    c.range = {1, 5, 2, Spacing::Linear};
    auto t = run_sweep(c);
    CHECK(t.rows.empty());
    CHECK(t.errors.size() == 2);
    CHECK(t.exit_code() == 2);
    CHECK(csv(t).find("# error eta=1 exit_code=2") != std::string::npos);
}

TEST_CASE("figures") {
    auto ids = figure_ids();
    CHECK(ids.size() == 9);
    CHECK_THROWS_AS(figure_curves("nope", {}), UnknownFigure);
    auto c = figure_curves("C", {});
    REQUIRE(c.size() == 2);
    CHECK(c[0].omega == 2.3);
    CHECK(c[0].a == 0.001);
    auto im = figure_curves("impro", {});
    CHECK(resolve_params(im[0]).gamma == doctest::Approx(0.1).epsilon(1e-12));
    RunConfig base;
    base.figure = "B";
    base.range.count = 3;
    auto tables = run_figure(base);
    REQUIRE(tables.size() == 2);
    CHECK(tables[0].rows.back().eta == 5000);
    CHECK(tables[0].rows.back().total == doctest::Approx(1.24974).epsilon(0.005));
}

TEST_CASE("config file and json") {
    auto c = config_from_json_text(R"({"command":"sweep","traj":"inertial","observable":"pp","eta_count":4,
        "eta_start":1,"eta_stop":10,"prefactor":"appendixd","format":"json"})");
    CHECK(c.command == Command::Sweep);
    CHECK(c.inertial);
    CHECK(c.observable == Observable::PP);
    CHECK(c.correlator.prefactor == Prefactor::AppendixD);
    CHECK_THROWS_AS(config_from_json_text(R"({"omgea":1})"), DomainError);
    CHECK_THROWS_AS(config_from_json_text(R"({"traj":"circular"})"), DomainError);
    std::ostringstream os;
    write_json(os, {run_sweep(c)});
    CHECK(os.str().find("\"rows\"") != std::string::npos);
    CHECK(os.str().find("\"neg_v2\": 0.0") != std::string::npos);
}

TEST_CASE("validate") {
    RunConfig c;
    c.lambda0 = 1.585;
    auto r = run_validate(c);
    CHECK_FALSE(r.ok());
    c.lambda0 = 0.1;
    c.a = 0.001;
    CHECK(run_validate(c).ok());
    c.v = 1.2;
    c.inertial = true;
    CHECK(run_validate(c).has_hard());
}

TEST_CASE("cli exit codes") {
    std::string cli = UDW_CLI;
    auto run = [&](const std::string& args) {
        int s = std::system((cli + " " + args + " > /dev/null 2>&1").c_str());
        return WEXITSTATUS(s);
    };
    CHECK(run("eval --a 0.1 --lambda0 0.3 --eta 30") == 0);
    CHECK(run("eval --traj inertial --eta 0") == 1);
    CHECK(run("eval --eta 5 --oracle --kappa-max 0.1") == 2);
    CHECK(run("compare --eta 5") == 3);
    CHECK(run("compare --eta 5 --v2-form partial-fraction") == 0);
    CHECK(run("validate --lambda0 1.585") == 1);

    const char* path = "udw_test_config.json";
    {
        std::ofstream f(path);
        f << R"({"a":0.1,"lambda0":0.3,"eta":30,"omega":5})";
    }
    std::string out = "udw_test_out.csv";
    CHECK(run(std::string("eval --config ") + path + " --omega 1 --output " + out) == 0);
    std::ifstream in(out);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str().find("# omega=1\n") != std::string::npos);
    std::remove(path);
    std::remove(out.c_str());
}
