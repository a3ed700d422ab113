#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cesaro/ergodic_lab.hpp"
#include "cesaro/named_functions.hpp"
#include "cesaro/norms.hpp"
#include "cesaro/selftest.hpp"
#include "oracle.hpp"

using namespace cesaro;

TEST_CASE("iterates of x^3 decay like 4^-n")
{
    const GridFunction f = build_named_function(NamedFunction::monomial(3), standard_grid(SpaceSpec::c01(), 256));
    const auto r = iterate_convergence(f, SpaceSpec::c01(), 12);
    REQUIRE(r.series.size() == 12);
    CHECK(r.series.front().index == 1);
    for (const auto& pt : r.series) CHECK(pt.value == doctest::Approx(std::pow(0.25, pt.index)).epsilon(1e-12));
    CHECK(r.verdict == Verdict::Consistent);
    CHECK_NOTHROW(r.validate());
}

TEST_CASE("iterates on C(R+) report per-seminorm series")
{
    const GridFunction f = build_named_function(NamedFunction::cos_over_1px(), standard_grid(SpaceSpec::cplus(), 600));
    const auto r = iterate_convergence(f, SpaceSpec::cplus(), 60, QuadratureRule::gauss_legendre(), 1e-3, 3);
    CHECK(r.extra.count("q1") == 1);
    CHECK(r.extra.count("q3") == 1);
    CHECK(r.series.back().value < 1e-3);
}

TEST_CASE("range counterexample at eps = exp(-e)")
{
    const double eps = std::exp(-std::exp(1.0));
    const auto r = range_counterexample({eps, 1e-3});
    CHECK(r.series[0].value == doctest::Approx(1.0 - std::log(std::log(2.0))).epsilon(1e-8));
    CHECK(r.series[0].value == doctest::Approx(1.36651).epsilon(1e-5));
    // independent check of the second value
    const double want = oracle::singular([](double t) { return -1.0 / (t * std::log(t)); }, 1e-3, 0.5);
    CHECK(r.series[1].value == doctest::Approx(want).epsilon(1e-9));
    CHECK(r.verdict == Verdict::Consistent);
    CHECK_THROWS(range_counterexample({1e-3, 1e-2}));
    CHECK_THROWS(range_counterexample({0.7}));
}

TEST_CASE("range witness: trivial and exact cases")
{
    const double cuts[] = {1.0, 2.0};
    const GridPtr g = share(Grid::uniform(Domain::half_line_with_limit(50.0), 2048, cuts));
    const auto zero = range_density_witness(constant(g, 0.0), 0.05);
    CHECK(zero.metrics.at("sup_error") == 0.0);
    const auto exact = range_density_witness(build_named_function(NamedFunction::witness_g(2, 1), g), 0.05);
    CHECK(exact.metrics.at("sup_error") < 1e-12);
    CHECK(exact.verdict == Verdict::Consistent);
    CHECK_THROWS(range_density_witness(constant(g, 1.0), 0.05)); // psi(0) != 0
}

TEST_CASE("periodic points: gate arithmetic")
{
    const auto r = periodic_points({parse_rational("0/1"), parse_rational("1/6"), parse_rational("1/12")}, 2.0);
    const auto& gate = r.extra.at("gate");
    // Re(exp(-2 pi i theta)) - 1/q
    CHECK(gate[0].value == doctest::Approx(0.5));
    CHECK(gate[1].value == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(gate[2].value == doctest::Approx(std::cos(M_PI / 6) - 0.5));
    CHECK(r.metrics.at("admitted") == 2.0); // theta = 1/6 sits on the boundary
    CHECK(r.extra.at("single_residual")[0].value < 1e-14);
}

TEST_CASE("density probe: exact spans give zero residual")
{
    const double cuts[] = {1.0, 2.0};
    const GridPtr g = share(Grid::geometric_from(Domain::half_line(3.0), 1024, 1e-12, cuts));
    const GridFunction target = sample(g, [](double x) { return Complex(x + x * x); });
    const auto r = density_probe(target, {0.5, 1.0, 2.0, 3.0}, 2.0);
    CHECK(r.series[0].value > 0.01);
    CHECK(r.series[2].value < 1e-8);
    CHECK(r.verdict == Verdict::Consistent);
    const auto single = density_probe(build_named_function(NamedFunction::power(0.5), g), {0.5}, 2.0);
    CHECK(single.series[0].value < 1e-8);
    CHECK_THROWS(density_probe(target, {1.0, 1.0}, 2.0));
    CHECK_THROWS(density_probe(target, {-0.7}, 2.0));
}

TEST_CASE("orbit growth is a labeled demonstration")
{
    const auto flat = orbit_growth(constant(standard_grid(SpaceSpec::lp01(2.0), 128), 1.0), SpaceSpec::lp01(2.0), 5);
    for (const auto& pt : flat.series) CHECK(pt.value == doctest::Approx(1.0));
    CHECK(flat.verdict == Verdict::Inconclusive);
    const auto grow = orbit_growth(hardy_trial(SpaceSpec::lp01(2.0)), SpaceSpec::lp01(2.0), 5);
    CHECK(grow.metrics.at("last_ratio") == doctest::Approx(1.0 / 0.55).epsilon(1e-6));
}

TEST_CASE("norm growth: C-spaces contract, Hardy trial grows at 1/(1/2+eps)")
{
    std::vector<GridFunction> trials;
    for (const auto& fn : sup_corpus()) trials.push_back(build_named_function(fn, grid_for(fn, Domain::interval(1.0), 512)));
    const auto c = norm_growth(SpaceSpec::c01(), 20, trials);
    CHECK(c.metrics.at("max_ratio") <= 1.0 + 1e-8);
    CHECK(c.verdict == Verdict::Consistent);
    const auto h = norm_growth(SpaceSpec::lp01(2.0), 6, {hardy_trial(SpaceSpec::lp01(2.0))});
    CHECK(h.metrics.at("first_ratio") == doctest::Approx(1.0 / 0.55).epsilon(1e-6));
    CHECK(h.verdict == Verdict::Consistent);
}

TEST_CASE("mean ergodic behavior on C([0,1]) and Cl")
{
    const GridFunction x = build_named_function(NamedFunction::monomial(1), standard_grid(SpaceSpec::c01(), 256));
    const auto r = mean_ergodic_experiment(x, SpaceSpec::c01(), 64);
    // C_[n] x = (1/n) sum 2^-m x, so the sup is (1 - 2^-n)/n
    CHECK(r.series.back().value == doctest::Approx((1.0 - std::pow(2.0, -64)) / 64.0).epsilon(1e-10));
    CHECK(r.verdict == Verdict::Consistent);

    const double cuts[] = {1.0, 2.0};
    const GridFunction f = build_named_function(NamedFunction::cos_over_1px(),
                                                share(Grid::uniform(Domain::half_line_with_limit(50.0), 2048, cuts)));
    const auto cl = mean_ergodic_experiment(f, SpaceSpec::cl(), 300, QuadratureRule::gauss_legendre(), 1e-4, 2);
    CHECK(cl.metrics.at("value_at_infinity_drift") == 0.0);
    CHECK(cl.metrics.at("gap") >= 0.9);
}

TEST_CASE("reports: JSON round trip, CSV shape, stems, validation")
{
    ExperimentReport r;
    r.experiment_id = "demo";
    r.space = SpaceSpec::lp01(3.0);
    r.parameters["n"] = "3";
    r.push(0, 1.0);
    r.push(1, 0.5);
    r.push("side", 0, std::nan(""));
    r.metrics["m"] = 1.0 / 0.0;
    r.verdict = Verdict::Consistent;
    const auto j = to_json(r);
    CHECK(j["series"][1]["value"] == 0.5);
    CHECK(j["extra"]["side"][0]["value"] == "nan");
    CHECK(j["space"]["q"] == doctest::Approx(1.5));
    const ExperimentReport back = experiment_report_from_json(j);
    CHECK(to_json(back).dump() == j.dump());
    CHECK(series_csv(r) == "n,value\n0,1\n1,0.5\n");
    CHECK(report_stem("demo", true) == "demo-seedless");
    CHECK(report_stem("demo", false).size() == std::string("demo-20260101T000000Z").size());
    r.push(1, 0.1);
    CHECK_THROWS(r.validate());

    const auto dir = std::filesystem::temp_directory_path() / "cesaro-report-test";
    std::filesystem::remove_all(dir);
    r.series.pop_back();
    const auto path = write_report(r, dir, true);
    CHECK(path.filename() == "demo-seedless.json");
    CHECK(std::filesystem::exists(dir / "demo-seedless.csv"));
    std::filesystem::remove_all(dir);
}

TEST_CASE("selftest filter and fault injection")
{
    SelftestOptions o;
    o.filter = "resolvent/sections";
    const auto only = run_selftest(o);
    REQUIRE(only.size() == 1);
    CHECK(only[0].pass);
    o.filter = "funcspace/quadrature_exactness";
    o.inject_fault = true;
    const auto bad = run_selftest(o);
    REQUIRE(bad.size() == 1);
    CHECK(!bad[0].pass);
    CHECK(selftest_table(bad).find("FAIL") != std::string::npos);
    CHECK(selftest_names().size() >= 25);
}
