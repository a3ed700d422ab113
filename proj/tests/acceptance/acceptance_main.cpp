// Acceptance suite: one PASS/FAIL line per criterion, each with its runtime
// budget. Exit status is the number of failed criteria (capped at 100).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "cesaro/cesaro_op.hpp"
#include "cesaro/ergodic_lab.hpp"
#include "cesaro/named_functions.hpp"
#include "cesaro/norms.hpp"
#include "cesaro/resolvent.hpp"
#include "cesaro/selftest.hpp"
#include "cesaro/spectra.hpp"

using namespace cesaro;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int id;
    const char* title;
    double budget_seconds;
    std::function<Outcome()> run;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0, double d = 0.0)
{
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c, d);
    return buf;
}

GridPtr cl_uniform(int intervals)
{
    const double cuts[] = {1.0, 2.0};
    return share(Grid::uniform(Domain::half_line_with_limit(50.0), intervals, cuts));
}

Outcome monomial_eigen()
{
    const GridPtr g = standard_grid(SpaceSpec::c01(), 1024);
    const CesaroOperator C(g);
    double worst = 0.0;
    for (int k = 0; k <= 10; ++k) {
        GridFunction f = build_named_function(NamedFunction::monomial(k), g);
        const ComplexVector x_k = f.values;
        for (int n = 1; n <= 20; ++n) {
            f = C.apply(f);
            worst = std::max(worst, max_abs(f.values - x_k / std::pow(k + 1.0, n)));
        }
    }
    return {worst <= 1e-10, fmt("max error %.3g (bound 1e-10)", worst)};
}

Outcome sup_contraction()
{
    std::vector<GridFunction> trials;
    for (const auto& fn : sup_corpus()) trials.push_back(build_named_function(fn, grid_for(fn, Domain::interval(1.0), 1024)));
    const auto r = norm_growth(SpaceSpec::c01(), 50, trials);
    const double m = r.metrics.at("max_ratio");
    return {m <= 1.0 + 1e-8, fmt("max ratio - 1 = %.3g over %g functions, n <= 50", m - 1.0, double(trials.size()))};
}

Outcome iterate_cos()
{
    const GridFunction f = build_named_function(NamedFunction::cos_over_1px(), standard_grid(SpaceSpec::c01(), 1024));
    const auto r = iterate_convergence(f, SpaceSpec::c01(), 200, QuadratureRule::gauss_legendre(), 1e-3);
    const double last = r.series.back().value;
    return {last <= 1e-3, fmt("||C^200 f - f(0)|| = %.3g (bound 1e-3)", last)};
}

Outcome range_obstruction()
{
    const auto r = range_counterexample({1e-2, 1e-4, 1e-6, 1e-8});
    const double err = r.metrics.at("max_relative_error");
    const double inc = r.metrics.at("min_squared_step_increase");
    return {err <= 1e-6 && inc >= 0.5, fmt("relative error %.3g (1e-6), smallest squared-step increase %.4f (0.5)", err, inc)};
}

Outcome cl_gap()
{
    const GridFunction f = build_named_function(NamedFunction::cos_over_1px(), cl_uniform(4096));
    const auto r = mean_ergodic_experiment(f, SpaceSpec::cl(), 500, QuadratureRule::gauss_legendre(), 1e-4, 2);
    const double dist = r.metrics.at("restricted_distance");
    const double drift = r.metrics.at("value_at_infinity_drift");
    const double gap = r.metrics.at("gap");
    return {dist <= 0.1 && drift == 0.0 && gap >= 0.9,
            fmt("[0,2] mean distance to 1: %.3g, value at infinity drift %.3g, gap %.4f", dist, drift, gap)};
}

Outcome resolvent_both_branches()
{
    double p_worst = 0.0;
    for (const auto& spec : {SpaceSpec::c01(), SpaceSpec::cplus(), SpaceSpec::cl()}) {
        const GridPtr g = standard_grid(spec, 1024);
        for (Complex lambda : {Complex(2, 0), Complex(-1, 0), Complex(3, 2)}) {
            for (const auto& fn : resolvent_corpus(spec)) {
                p_worst = std::max(p_worst, resolvent_residual(build_named_function(fn, g), lambda, spec));
            }
        }
    }
    double q_worst = 0.0;
    const GridPtr g = standard_grid(SpaceSpec::cl(), 1024);
    for (const auto& fn : resolvent_corpus(SpaceSpec::cl())) {
        q_worst = std::max(q_worst, resolvent_residual(build_named_function(fn, g), 0.4, SpaceSpec::cl()));
    }
    return {p_worst <= 1e-6 && q_worst <= 1e-5,
            fmt("P branch residual %.3g (1e-6), Q branch at 0.4 on Cl %.3g (1e-5)", p_worst, q_worst)};
}

Outcome p_xi_witness()
{
    const Complex xi(0.3, 0.7);
    double worst = 0.0;
    for (double eps : {0.1, 0.01}) {
        const Complex a(eps, xi.imag());
        const GridFunction g = build_named_function(NamedFunction::power(a), eigen_grid(a, Domain::interval(1.0), 2048));
        const GridFunction pg = apply_P_xi(g, xi);
        worst = std::max(worst, std::abs(pg[pg.size() - 1] - 1.0 / (1.0 - xi.real() + eps)));
    }
    return {worst <= 1e-6, fmt("max |P g(1) - 1/(1 - Re xi + eps)| = %.3g", worst)};
}

Outcome point_spectrum_lp()
{
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
        const Complex lambda = 1.0 + std::polar(0.95 * std::sqrt(u(rng)), 2.0 * std::numbers::pi * u(rng));
        worst = std::max(worst, eigen_residual(lambda, SpaceSpec::lploc(2.0), QuadratureRule::gauss_legendre(), 2048, 3));
    }
    return {worst <= 1e-5, fmt("max eigen residual in q_1..q_3 over 20 samples: %.3g", worst)};
}

Outcome hardy_bound()
{
    const auto r = norm_growth(SpaceSpec::lp01(2.0), 10, {hardy_trial(SpaceSpec::lp01(2.0))});
    const double first = r.metrics.at("first_ratio");
    const double spread = r.metrics.at("ratio_spread");
    return {first >= 1.8 && spread <= 0.01, fmt("||C f||/||f|| = %.6f (>= 1.8), step-ratio spread %.3g (<= 0.01)", first, spread)};
}

Outcome chaos_periodic()
{
    const auto r = periodic_points({parse_rational("1/12")}, 2.0);
    if (r.series.empty()) return {false, "theta = 1/12 was not admitted"};
    const double single = r.extra.at("single_residual")[0].value;
    const double periodic = r.series[0].value;
    return {single <= 1e-5 && periodic <= 1e-4,
            fmt("single-step residual %.3g (1e-5), 12-step residual %.3g (1e-4)", single, periodic)};
}

Outcome sections()
{
    const OperatorMatrix m1 = discretize_monomial(SpaceSpec::c01(), 32, 1.0);
    const auto e1 = eigenvalues(m1);
    bool ok = true;
    for (double j : {2.0, 5.0, 10.0}) {
        const OperatorMatrix mj = discretize_monomial(SpaceSpec::c01(), 32, j);
        ok = ok && mj.entries == m1.entries && eigenvalues(mj) == e1;
    }
    for (int k = 0; k < 32; ++k) ok = ok && e1[k] == Complex(1.0 / (k + 1), 0.0);
    return {ok, ok ? "sections coincide exactly, eigenvalues {1/(k+1)}" : "sections differ"};
}

Outcome range_witness()
{
    const GridFunction psi = sample(cl_uniform(4096), [](double x) { return Complex(x * std::exp(-x)); }, 0.0);
    const auto r = range_density_witness(psi, 0.05);
    const double err = r.metrics.at("sup_error");
    return {err <= 0.05 && r.verdict == Verdict::Consistent,
            fmt("||psi - h|| = %.4g (0.05), M = %.3g, degree %g", err, r.metrics.at("M"), r.metrics.at("degree"))};
}

Outcome selftest()
{
    const auto results = run_selftest();
    std::string failed;
    for (const auto& c : results) {
        if (!c.pass) failed += (failed.empty() ? "" : ", ") + c.module + "/" + c.name;
    }
    int passed = 0;
    for (const auto& c : results) passed += c.pass;
    std::string detail = std::to_string(passed) + "/" + std::to_string(results.size()) + " checks";
    if (!failed.empty()) detail += "; failing: " + failed;
    return {failed.empty(), detail};
}

} // namespace

int main()
{
    const std::vector<Criterion> all = {
        {1, "monomial eigen-relations", 5, monomial_eigen},
        {2, "sup contraction on C([0,1])", 10, sup_contraction},
        {3, "iterate convergence", 10, iterate_cos},
        {4, "range obstruction closed form", 2, range_obstruction},
        {5, "Cl mean gap", 30, cl_gap},
        {6, "resolvent identity", 20, resolvent_both_branches},
        {7, "P_xi norm witness", 2, p_xi_witness},
        {8, "L^p point spectrum residuals", 60, point_spectrum_lp},
        {9, "Hardy lower bound", 10, hardy_bound},
        {10, "periodic points", 20, chaos_periodic},
        {11, "sectional consistency", 1, sections},
        {12, "range witness", 10, range_witness},
        {13, "selftest", 180, selftest},
    };
    int failures = 0;
    for (const auto& c : all) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = s <= c.budget_seconds;
        const bool pass = o.pass && in_time;
        failures += !pass;
        std::printf("criterion %2d %-4s %-32s %7.2fs/%gs  %s%s\n", c.id, pass ? "PASS" : "FAIL", c.title, s,
                    c.budget_seconds, o.detail.c_str(), in_time ? "" : " [over budget]");
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", int(all.size()) - failures, all.size());
    return std::min(failures, 100);
}
