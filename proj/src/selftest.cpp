#include "cesaro/selftest.hpp"

#include <algorithm>
#include <cstdio>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <numbers>
#include <random>
#include <sstream>

#include "cesaro/cesaro_op.hpp"
#include "cesaro/ergodic_lab.hpp"
#include "cesaro/named_functions.hpp"
#include "cesaro/norms.hpp"
#include "cesaro/portrait.hpp"
#include "cesaro/resolvent.hpp"
#include "cesaro/serialization.hpp"
#include "cesaro/spectra.hpp"

namespace cesaro {

namespace {

struct Ctx {
    QuadratureRule rule = QuadratureRule::gauss_legendre();
    double delta = 0.0;
    std::uint64_t seed = 0;

    QuadratureRule perturb(const QuadratureRule& r) const { return delta == 0.0 ? r : r.with_weight_perturbation(delta); }
};

struct Outcome {
    double value = 0.0;
    double bound = 0.0;
    bool pass = false;
    std::string detail;
};

// pass when value <= bound
Outcome at_most(double value, double bound, std::string detail = {})
{
    return {value, bound, value <= bound, std::move(detail)};
}

Outcome at_least(double value, double bound, std::string detail = {})
{
    return {value, bound, value >= bound, std::move(detail)};
}

struct Check {
    const char* module;
    const char* name;
    std::function<Outcome(const Ctx&)> run;
};

ComplexVector random_values(std::mt19937_64& rng, Eigen::Index n)
{
    std::normal_distribution<double> d;
    ComplexVector v(n);
    for (auto& z : v) z = Complex(d(rng), d(rng));
    return v;
}

ComplexMatrix random_matrix(std::mt19937_64& rng, Eigen::Index n)
{
    std::normal_distribution<double> d;
    ComplexMatrix m(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index i = 0; i < n; ++i) m(i, j) = Complex(d(rng), d(rng));
    return m;
}

// largest distance in a greedy nearest matching of two eigenvalue lists
double multiset_distance(std::vector<Complex> a, std::vector<Complex> b)
{
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    for (Complex z : a) {
        auto it = std::min_element(b.begin(), b.end(),
                                   [&](Complex u, Complex v) { return std::abs(u - z) < std::abs(v - z); });
        worst = std::max(worst, std::abs(*it - z));
        b.erase(it);
    }
    return worst;
}

GridPtr cl_grid(int intervals = 4096)
{
    const double cuts[] = {1.0, 2.0};
    return share(Grid::uniform(Domain::half_line_with_limit(50.0), intervals, cuts));
}

std::vector<NamedFunction> cl_corpus()
{
    return {NamedFunction::one(), NamedFunction::cos_over_1px(), NamedFunction::plateau_h(2, 1),
            NamedFunction::witness_g(2, 1)};
}

std::vector<Check> all_checks()
{
    std::vector<Check> c;

    // funcspace
    c.push_back({"funcspace", "quadrature_exactness", [](const Ctx& ctx) {
        const GridPtr g = share(Grid::uniform(Domain::interval(1.0), 48));
        double worst = 0.0;
        for (const auto& base : {QuadratureRule::trapezoid(), QuadratureRule::simpson(), QuadratureRule::gauss_legendre(4),
                                 QuadratureRule::gauss_legendre(6)}) {
            const QuadratureRule r = ctx.perturb(base);
            for (int k = 0; k <= base.degree(); ++k) {
                const GridFunction f = build_named_function(NamedFunction::monomial(k), g);
                const double exact = 1.0 / (k + 1);
                worst = std::max(worst, std::abs(integrate(*g, f.values, r).real() - exact) / exact);
            }
        }
        return at_most(worst, 1e-13, "max relative error on x^k up to each rule's degree");
    }});
    c.push_back({"funcspace", "simpson_order", [](const Ctx& ctx) {
        const QuadratureRule r = ctx.perturb(QuadratureRule::simpson());
        std::vector<double> err;
        for (int n : {16, 32, 64, 128}) {
            const GridPtr g = share(Grid::uniform(Domain::interval(1.0), n));
            const GridFunction f = build_named_function(NamedFunction::monomial(5), g);
            err.push_back(std::abs(integrate(*g, f.values, r).real() - 1.0 / 6.0));
        }
        double order = std::numeric_limits<double>::infinity();
        for (std::size_t i = 1; i < err.size(); ++i) order = std::min(order, std::log2(err[i - 1] / err[i]));
        return at_least(order, 3.5, "observed order on x^5 under grid halving (expected 4)");
    }});
    c.push_back({"funcspace", "seminorm_monotone", [](const Ctx& ctx) {
        const double cuts[] = {1.0, 2.0};
        const GridPtr g = share(Grid::uniform(Domain::half_line(3.0), 768, cuts));
        const double js[] = {1.0, 2.0, 3.0};
        int violations = 0;
        for (const auto& spec : {SpaceSpec::cplus(), SpaceSpec::lploc(2.0), SpaceSpec::lploc(1.5)}) {
            for (const auto& fn : resolvent_corpus(SpaceSpec::cplus())) {
                const auto q = seminorm_family(build_named_function(fn, g), spec, js, ctx.rule);
                for (std::size_t i = 1; i < q.size(); ++i) violations += q[i] < q[i - 1];
            }
        }
        return at_most(violations, 0, "pairs with q_(j+1) < q_j");
    }});
    c.push_back({"funcspace", "sup_insertion", [](const Ctx& ctx) {
        std::mt19937_64 rng(ctx.seed);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        int violations = 0;
        for (const auto& fn : sup_corpus()) {
            GridPtr g = grid_for(fn, Domain::interval(1.0), 256);
            const double before = sup_norm(build_named_function(fn, g));
            for (int k = 0; k < 20; ++k) {
                const double x = g->front() + (g->back() - g->front()) * u(rng);
                if (!g->find_node(x)) g = share(g->with_node(x));
            }
            violations += sup_norm(build_named_function(fn, g)) < before;
        }
        return at_most(violations, 0, "corpus functions whose sup norm dropped after node insertion");
    }});
    c.push_back({"funcspace", "lp_power_oracle", [](const Ctx& ctx) {
        double worst = 0.0;
        for (double p : {1.5, 2.0, 3.0}) {
            for (Complex a : {Complex(-0.25, 0), Complex(0.5, 1), Complex(-0.29, 2), Complex(1, 0), Complex(3, -1)}) {
                if (!(p * a.real() > -0.9)) continue;
                const GridFunction f =
                    build_named_function(NamedFunction::power(a), eigen_grid(a, Domain::half_line(1.0), 512));
                const double got = seminorm(f, SpaceSpec::lploc(p), 1.0, ctx.rule);
                const double want = std::pow(1.0 / (p * a.real() + 1.0), 1.0 / p);
                worst = std::max(worst, std::abs(got - want) / want);
            }
        }
        return at_most(worst, 1e-6, "relative error of q_1(x^a) against (1/(p Re a + 1))^(1/p)");
    }});
    c.push_back({"funcspace", "restriction_composition", [](const Ctx& ctx) {
        std::mt19937_64 rng(ctx.seed + 1);
        const GridPtr g = share(Grid::uniform(Domain::half_line(5.0), 320));
        const GridFunction f(g, random_values(rng, g->size()));
        double worst = 0.0;
        for (int j = 1; j <= 4; ++j) {
            const GridFunction a = restrict_to(restrict_to(f, j + 1, ctx.rule), j, ctx.rule);
            const GridFunction b = restrict_to(f, j, ctx.rule);
            if (!(a.mesh() == b.mesh())) return Outcome{1.0, 0.0, false, "grids differ"};
            worst = std::max(worst, max_abs(a.values - b.values));
            worst = std::max(worst, std::abs(sup_norm(b) - seminorm(f, SpaceSpec::cplus(), j)));
        }
        return at_most(worst, 0.0, "composition law and ||Q_j f||_j = q_j(f), exact");
    }});

    // cesaro_op
    c.push_back({"cesaro_op", "linearity", [](const Ctx& ctx) {
        std::mt19937_64 rng(ctx.seed + 2);
        const GridPtr g = share(Grid::uniform(Domain::interval(1.0), 512));
        const GridFunction f(g, random_values(rng, g->size())), h(g, random_values(rng, g->size()));
        const Complex a(0.7, -1.3), b(-2.1, 0.4);
        const GridFunction lhs = apply_cesaro(combine(a, f, b, h), ctx.rule);
        const GridFunction rhs = combine(a, apply_cesaro(f, ctx.rule), b, apply_cesaro(h, ctx.rule));
        return at_most(max_abs(lhs.values - rhs.values), 1e-12, "C(a f + b g) - a C f - b C g");
    }});
    c.push_back({"cesaro_op", "sup_contraction", [](const Ctx& ctx) {
        double worst = -1.0;
        for (const auto& fn : sup_corpus()) {
            const GridFunction f = build_named_function(fn, grid_for(fn, Domain::interval(1.0), 1024));
            worst = std::max(worst, sup_norm(apply_cesaro(f, ctx.rule)) - sup_norm(f));
        }
        const GridPtr g = cl_grid();
        for (const auto& fn : cl_corpus()) {
            const GridFunction f = build_named_function(fn, g);
            worst = std::max(worst, sup_norm(apply_cesaro(f, ctx.rule)) - sup_norm(f));
        }
        return at_most(worst, 1e-10, "max of ||C f|| - ||f|| over C([0,1]) and Cl corpora");
    }});
    c.push_back({"cesaro_op", "eigen_relation", [](const Ctx& ctx) {
        double worst = 0.0;
        for (Complex a : {Complex(0.5, 0), Complex(0.25, 3), Complex(2, -1), Complex(-0.5, 0.5), Complex(-0.9, 0)}) {
            const GridFunction g =
                build_named_function(NamedFunction::power(a), eigen_grid(a, Domain::interval(1.0), 1024));
            const GridFunction r = combine(1.0, apply_cesaro(g, ctx.rule), -1.0 / (a + 1.0), g);
            worst = std::max(worst, sup_norm(r) / sup_norm(g));
        }
        return at_most(worst, 1e-8, "||C x^a - x^a/(a+1)|| / ||x^a|| at the nodes");
    }});
    c.push_back({"cesaro_op", "semigroup", [](const Ctx& ctx) {
        const GridFunction f =
            build_named_function(NamedFunction::cos_over_1px(), standard_grid(SpaceSpec::c01(), 512));
        const GridFunction a = apply_cesaro_power(f, 5, ctx.rule);
        const GridFunction b = apply_cesaro_power(apply_cesaro_power(f, 2, ctx.rule), 3, ctx.rule);
        return at_most(max_abs(a.values - b.values), 0.0, "C^5 f against C^3 C^2 f, exact");
    }});
    c.push_back({"cesaro_op", "fixed_point_kernel", [](const Ctx& ctx) {
        int wrong = 0;
        std::string names;
        auto corpus = sup_corpus();
        for (const auto& fn : corpus) {
            const GridFunction f = build_named_function(fn, grid_for(fn, Domain::interval(1.0), 1024));
            const bool fixed = sup_norm(apply_cesaro(f, ctx.rule) - f) <= 1e-8 * sup_norm(f);
            const bool is_const = fn.kind == NamedKind::One || (fn.kind == NamedKind::Monomial && fn.n == 0);
            if (fixed != is_const) {
                ++wrong;
                names += fn.name() + " ";
            }
        }
        const GridFunction two = constant(standard_grid(SpaceSpec::c01(), 256), 2.5);
        if (sup_norm(apply_cesaro(two, ctx.rule) - two) > 1e-8 * 2.5) {
            ++wrong;
            names += "2.5*one";
        }
        return at_most(wrong, 0, names.empty() ? "fixed points are exactly the constants" : "mismatch: " + names);
    }});
    c.push_back({"cesaro_op", "commutation", [](const Ctx& ctx) {
        const GridFunction f = build_named_function(NamedFunction::cos_over_1px(), standard_grid(SpaceSpec::cplus(), 1024));
        double worst = 0.0;
        for (double j : {1.0, 2.0}) {
            worst = std::max(worst, commutation_residual(f, j, Conjugation::Restriction, SpaceSpec::cplus(), ctx.rule));
        }
        const GridFunction m = build_named_function(NamedFunction::monomial(3), standard_grid(SpaceSpec::c01(), 512));
        for (double j : {2.0, 5.0}) {
            worst = std::max(worst, commutation_residual(m, j, Conjugation::Scaling, SpaceSpec::c01(), ctx.rule));
        }
        const GridFunction one = constant(standard_grid(SpaceSpec::cplus(), 256), 1.0);
        worst = std::max(worst, commutation_residual(one, 2.0, Conjugation::Restriction, SpaceSpec::cplus(), ctx.rule));
        return at_most(worst, 1e-8, "restriction and scaling commutation residuals");
    }});

    // resolvent_spectra
    c.push_back({"resolvent", "identity_both_ways", [](const Ctx& ctx) {
        auto worst_at = [&](int intervals) {
            double worst = 0.0;
            for (const auto& spec : {SpaceSpec::c01(), SpaceSpec::lp01(2.0), SpaceSpec::cplus()}) {
                const GridPtr g = standard_grid(spec, intervals);
                for (Complex lambda : {Complex(3, 0), Complex(-1, 0), Complex(3, 2)}) {
                    for (const auto& fn : resolvent_corpus(spec)) {
                        const GridFunction f = build_named_function(fn, g);
                        worst = std::max(worst, resolvent_residual(f, lambda, spec, ctx.rule));
                        worst = std::max(worst, resolvent_left_residual(f, lambda, spec, ctx.rule));
                    }
                }
            }
            return worst;
        };
        const double coarse = worst_at(64), fine = worst_at(1024);
        // refinement must not make things worse unless both are at round-off
        if (fine > std::max(coarse, 1e-12)) {
            return Outcome{fine, coarse, false, "residual grew under refinement (bound shows N = 64)"};
        }
        char detail[96];
        std::snprintf(detail, sizeof detail, "P branch, both identities at N = 1024 (N = 64: %.3g)", coarse);
        return at_most(fine, 1e-6, detail);
    }});
    c.push_back({"resolvent", "q_branch_right_identity", [](const Ctx& ctx) {
        double worst = 0.0;
        const std::pair<SpaceSpec, Complex> cases[] = {
            {SpaceSpec::cl(), Complex(0.4, 0)}, {SpaceSpec::cl(), Complex(0.5, 0.3)}, {SpaceSpec::lphalf(2.0), Complex(1.5, 0)}};
        for (const auto& [spec, lambda] : cases) {
            const GridPtr g = standard_grid(spec, 4096);
            for (const auto& fn : resolvent_corpus(spec)) {
                worst = std::max(worst, resolvent_residual(build_named_function(fn, g), lambda, spec, ctx.rule));
            }
        }
        return at_most(worst, 1e-5, "Q branch on Cl and L^2(R+), (lambda-C)R f - f");
    }});
    c.push_back({"resolvent", "p_xi_norm_witness", [](const Ctx& ctx) {
        const Complex xi(0.3, 0.7);
        double worst = 0.0;
        for (double eps : {0.1, 0.01}) {
            const Complex e(eps, xi.imag());
            const GridFunction g = build_named_function(NamedFunction::power(e), eigen_grid(e, Domain::interval(1.0), 2048));
            const GridFunction pg = apply_P_xi(g, xi, ctx.rule);
            worst = std::max(worst, std::abs(pg.values[pg.size() - 1] - 1.0 / (1.0 - xi.real() + eps)));
        }
        return at_most(worst, 1e-6, "P_xi g_eps(1) against 1/(1 - Re xi + eps)");
    }});
    c.push_back({"resolvent", "p_xi_upper_bound", [](const Ctx& ctx) {
        double worst = -1.0;
        for (Complex xi : {Complex(0.3, 0.7), Complex(-1, 0), Complex(0.5, -2)}) {
            for (const auto& fn : sup_corpus()) {
                const GridFunction f = build_named_function(fn, grid_for(fn, Domain::interval(1.0), 1024));
                worst = std::max(worst, sup_norm(apply_P_xi(f, xi, ctx.rule)) - sup_norm(f) / (1.0 - xi.real()));
            }
        }
        return at_most(worst, 1e-8, "||P_xi f|| - ||f||/(1 - Re xi) over the corpus");
    }});
    c.push_back({"resolvent", "sections_identical", [](const Ctx&) {
        const OperatorMatrix m1 = discretize_monomial(SpaceSpec::c01(), 32, 1.0);
        int mismatches = 0;
        for (double j : {2.0, 5.0, 10.0}) {
            const OperatorMatrix mj = discretize_monomial(SpaceSpec::c01(), 32, j);
            mismatches += !(mj.entries == m1.entries) || eigenvalues(mj) != eigenvalues(m1);
        }
        return at_most(mismatches, 0, "sections C_j (j = 2, 5, 10) that differ from C_1");
    }});
    c.push_back({"resolvent", "eigensolver_contract", [](const Ctx& ctx) {
        std::mt19937_64 rng(ctx.seed + 3);
        double worst = 0.0;
        const ComplexMatrix mats[] = {random_matrix(rng, 64),
                                      discretize_grid(SpaceSpec::c01(), standard_grid(SpaceSpec::c01(), 256), ctx.rule).entries,
                                      discretize_grid(SpaceSpec::lploc(2.0), standard_grid(SpaceSpec::lploc(2.0), 128), ctx.rule).entries};
        for (const auto& m : mats) {
            const double nrm = spectral_norm(m);
            for (const auto& p : eigenpairs(m)) worst = std::max(worst, p.residual / nrm);
        }
        return at_most(worst, 1e-8, "max ||M v - lambda v|| / ||M||_2");
    }});
    c.push_back({"resolvent", "similarity_invariance", [](const Ctx& ctx) {
        std::mt19937_64 rng(ctx.seed + 4);
        double worst = 0.0;
        const ComplexMatrix mats[] = {discretize_monomial(SpaceSpec::c01(), 64).entries, random_matrix(rng, 48),
                                      discretize_monomial(SpaceSpec::c01(), 8).entries};
        for (const auto& m : mats) {
            const Eigen::HouseholderQR<ComplexMatrix> qr(random_matrix(rng, m.rows()));
            const ComplexMatrix U = qr.householderQ();
            const ComplexMatrix s = U * m * U.adjoint();
            worst = std::max(worst, multiset_distance(eigenvalues(m), eigenvalues(s)));
        }
        return at_most(worst, 1e-8, "eigenvalue multiset change under U M U*");
    }});
    c.push_back({"resolvent", "portrait_classes", [](const Ctx& ctx) {
        PortraitOptions o;
        o.rule = ctx.rule;
        o.matrix_intervals = 64;
        const auto a = spectral_portrait(SpaceSpec::lp01(2.0), {1.5, 3.0, -1.0, {1.0, 0.5}}, o);
        const auto b = spectral_portrait(SpaceSpec::lphalf(2.0), {3.0, {1.0, 1.0}}, o);
        int bad = (a.verdict() != Verdict::Consistent) + (b.verdict() != Verdict::Consistent);
        bad += a.records[0].predicted != SpectralClass::PointSpectrum;
        bad += b.records[1].evidence != EvidenceType::CriticalRejection;
        bad += a.eigenvalues_in_region != static_cast<int>(a.eigenvalues.size());
        return at_most(bad, 0, "portrait classes and evidence on L^2(0,1) and L^2(R+)");
    }});

    // ergodic_lab
    c.push_back({"ergodic", "telescoping", [](const Ctx& ctx) {
        double worst = 0.0;
        for (const auto& fn : sup_corpus()) {
            const GridFunction f = build_named_function(fn, grid_for(fn, Domain::interval(1.0), 512));
            for (int n = 2; n <= 6; ++n) worst = std::max(worst, telescoping_residual(f, n, ctx.rule) / sup_norm(f));
        }
        return at_most(worst, 1e-13, "C^n/n - (C_[n] - (n-1)/n C_[n-1]) at the nodes");
    }});
    c.push_back({"ergodic", "c_space_norm_growth", [](const Ctx& ctx) {
        std::vector<GridFunction> trials;
        for (const auto& fn : sup_corpus()) trials.push_back(build_named_function(fn, grid_for(fn, Domain::interval(1.0), 1024)));
        const auto r = norm_growth(SpaceSpec::c01(), 50, trials, ctx.rule);
        return at_most(r.metrics.at("max_ratio"), 1.0 + 1e-8, "max_n ||C^n f|| / ||f|| on C([0,1])");
    }});
    c.push_back({"ergodic", "hardy_lower_bound", [](const Ctx& ctx) {
        const auto r = norm_growth(SpaceSpec::lp01(2.0), 10, {hardy_trial(SpaceSpec::lp01(2.0))}, ctx.rule);
        double margin = std::numeric_limits<double>::infinity();
        for (const auto& pt : r.series) margin = std::min(margin, pt.value / std::pow(1.8, pt.index));
        return at_least(margin, 1.0, "min_n ratio_n / 1.8^n for x^(-1/2+0.05)");
    }});
    c.push_back({"ergodic", "range_counterexample", [](const Ctx& ctx) {
        const auto r = range_counterexample({1e-2, 1e-3, 1e-4, 1e-5, 1e-6}, ctx.rule);
        return at_most(r.verdict == Verdict::Consistent ? r.metrics.at("max_relative_error") : 1.0, 1e-6,
                       "relative error against log(-log eps) - log(log 2), increasing");
    }});
    c.push_back({"ergodic", "periodic_accumulation", [](const Ctx& ctx) {
        const auto r = periodic_points({parse_rational("1/12"), parse_rational("1/8")}, 2.0, ctx.rule);
        double worst = 0.0;
        const auto& single = r.extra.at("single_residual");
        for (std::size_t i = 0; i < r.series.size(); ++i) {
            worst = std::max(worst, r.series[i].value / std::max(single[i].value, 1e-300));
        }
        return at_most(worst, 10.0, "d-fold iterate residual / single-step residual, theta in {1/12, 1/8}");
    }});
    c.push_back({"ergodic", "cl_mean_gap", [](const Ctx& ctx) {
        const GridFunction f = build_named_function(NamedFunction::cos_over_1px(), cl_grid());
        const auto r = mean_ergodic_experiment(f, SpaceSpec::cl(), 500, ctx.rule, kDefaultTolerance, 3);
        return at_least(r.metrics.at("gap"), 0.9, "gap between the [0,j] means (j <= 3) and the value at infinity");
    }});
    c.push_back({"ergodic", "iterate_monomial", [](const Ctx& ctx) {
        const GridFunction f = build_named_function(NamedFunction::monomial(3), standard_grid(SpaceSpec::c01(), 1024));
        const auto r = iterate_convergence(f, SpaceSpec::c01(), 20, ctx.rule);
        double worst = 0.0;
        for (const auto& pt : r.series) worst = std::max(worst, std::abs(pt.value * std::pow(4.0, pt.index) - 1.0));
        return at_most(worst, 1e-10, "4^n ||C^n x^3|| - 1");
    }});

    // cli plumbing
    c.push_back({"cli", "seedless_reports", [](const Ctx& ctx) {
        const GridFunction f = build_named_function(NamedFunction::monomial(2), standard_grid(SpaceSpec::c01(), 256));
        const auto a = iterate_convergence(f, SpaceSpec::c01(), 10, ctx.rule);
        const auto b = iterate_convergence(f, SpaceSpec::c01(), 10, ctx.rule);
        int bad = series_csv(a) != series_csv(b);
        bad += report_stem("iterate", true) != report_stem("iterate", true);
        bad += to_json(experiment_report_from_json(to_json(a))).dump() != to_json(a).dump();
        return at_most(bad, 0, "byte-identical CSV, stable names, JSON round trip");
    }});
    return c;
}

} // namespace

std::vector<std::string> selftest_names()
{
    std::vector<std::string> out;
    for (const auto& c : all_checks()) out.push_back(std::string(c.module) + "/" + c.name);
    return out;
}

std::vector<CheckResult> run_selftest(const SelftestOptions& options)
{
    Ctx ctx;
    ctx.seed = options.seed;
    if (options.inject_fault) {
        ctx.delta = 1e-3;
        ctx.rule = ctx.rule.with_weight_perturbation(ctx.delta);
    }
    std::vector<CheckResult> results;
    for (const auto& c : all_checks()) {
        const std::string full = std::string(c.module) + "/" + c.name;
        if (!options.filter.empty() && full.find(options.filter) == std::string::npos) continue;
        CheckResult r;
        r.module = c.module;
        r.name = c.name;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            const Outcome o = c.run(ctx);
            r.pass = o.pass;
            r.value = o.value;
            r.bound = o.bound;
            r.detail = o.detail;
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("threw: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        results.push_back(std::move(r));
    }
    return results;
}

std::string selftest_table(const std::vector<CheckResult>& results)
{
    std::ostringstream os;
    auto num = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%-12.4g", v);
        return std::string(buf);
    };
    os << std::left << std::setw(42) << "check" << std::setw(6) << "ok" << std::setw(13) << "value" << std::setw(13)
       << "bound" << std::setw(8) << "sec" << "detail\n";
    int passed = 0;
    for (const auto& r : results) {
        passed += r.pass;
        char sec[16];
        std::snprintf(sec, sizeof sec, "%-7.2f", r.seconds);
        os << std::left << std::setw(42) << (r.module + "/" + r.name) << std::setw(6) << (r.pass ? "PASS" : "FAIL")
           << num(r.value) << ' ' << num(r.bound) << ' ' << sec << ' ' << r.detail << '\n';
    }
    os << passed << "/" << results.size() << " checks passed\n";
    return os.str();
}

} // namespace cesaro
