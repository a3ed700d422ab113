// cesaro-lab: spectral portraits, experiments and the invariant selftest.
//
// Exit codes: 0 consistent, 1 inconsistent (or failed selftest), 2 bad
// configuration. Flags may also come from an INI file given with --config;
// [spectrum], [experiment] and [selftest] sections feed the subcommands.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cesaro/ergodic_lab.hpp"
#include "cesaro/named_functions.hpp"
#include "cesaro/parse.hpp"
#include "cesaro/portrait.hpp"
#include "cesaro/resolvent.hpp"
#include "cesaro/selftest.hpp"
#include "cesaro/serialization.hpp"

namespace fs = std::filesystem;
using namespace cesaro;

namespace {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string out;
    bool seedless = false;
    std::string quadrature = "gl4";
    bool quiet = false;
};

struct SpectrumArgs {
    std::string space = "c01";
    double p = 2.0;
    std::vector<std::string> lambdas;
    std::string lambda_grid;
    int n = 128;
    int evidence_n = 0;
    double tolerance = 1e-4;
    int threads = 0;
};

struct ExperimentArgs {
    std::string name;
    std::string space;
    double p = 2.0;
    std::string f;
    std::string n = "auto";
    int intervals = 0;
    std::vector<double> eps;
    std::vector<std::string> theta;
    std::vector<std::string> alpha;
    std::vector<double> j;
    std::string conjugation = "restriction";
    int J = 3;
    std::optional<double> tolerance;
};

fs::path output_dir(const Common& c)
{
    if (!c.out.empty()) return c.out;
    if (const char* env = std::getenv("CESARO_LAB_OUT"); env && *env) return env;
    return "cesaro-out";
}

QuadratureRule rule_of(const Common& c)
{
    try {
        return QuadratureRule::parse(c.quadrature);
    } catch (const std::exception& e) {
        throw ConfigError(e.what());
    }
}

SpaceSpec space_of(const std::string& name, double p)
{
    try {
        return SpaceSpec::parse(name, p);
    } catch (const std::exception& e) {
        throw ConfigError(e.what());
    }
}

int n_or(const std::string& text, int fallback)
{
    if (text.empty() || text == "auto") return fallback;
    const int n = parse_int(text);
    if (n < 0) throw ConfigError("--n must be nonnegative");
    return n;
}

// psi(x) = x exp(-x), the default target of range-witness; not a named function.
constexpr const char* kXExp = "x_exp_neg_x";

// Samples a named function where it is resolved: the eigen grid for powers,
// the space's working grid otherwise.
GridFunction make_function(const std::string& text, const SpaceSpec& spec, int intervals)
{
    if (text == kXExp) {
        return sample(standard_grid(spec, intervals), [](double x) { return Complex(x * std::exp(-x)); },
                      spec.default_domain().has_limit() ? std::optional<Complex>(0.0) : std::nullopt);
    }
    NamedFunction fn;
    try {
        fn = NamedFunction::parse(text);
    } catch (const std::exception& e) {
        throw ConfigError(e.what());
    }
    if (fn.kind == NamedKind::Power) return build_named_function(fn, eigen_grid(fn.alpha, spec.default_domain(), intervals));
    if (fn.singular_at_origin()) return build_named_function(fn, grid_for(fn, spec.default_domain(), intervals));
    return build_named_function(fn, standard_grid(spec, intervals));
}

void emit(const std::string& json, const std::string& csv, const fs::path& dir, const std::string& stem,
          const Common& c)
{
    fs::create_directories(dir);
    std::ofstream(dir / (stem + ".json")) << json << '\n';
    std::ofstream(dir / (stem + ".csv")) << csv;
    if (!c.quiet) std::cout << "wrote " << (dir / (stem + ".json")).string() << "\n";
}

int verdict_code(Verdict v) { return v == Verdict::Consistent ? 0 : 1; }

int run_spectrum(const SpectrumArgs& a, const Common& c)
{
    const SpaceSpec spec = space_of(a.space, a.p);
    std::vector<Complex> lambdas;
    try {
        for (const auto& s : a.lambdas) lambdas.push_back(parse_complex(s));
        if (!a.lambda_grid.empty()) {
            const auto g = parse_lambda_grid(a.lambda_grid);
            lambdas.insert(lambdas.end(), g.begin(), g.end());
        }
    } catch (const std::exception& e) {
        throw ConfigError(e.what());
    }
    if (lambdas.empty()) throw ConfigError("give --lambda or --lambda-grid");
    if (a.n < 1 || a.n > kDenseCap) throw ConfigError("--n must lie in [1, " + std::to_string(kDenseCap) + "]");

    PortraitOptions o;
    o.matrix_intervals = a.n;
    o.evidence_intervals = a.evidence_n;
    o.tolerance = a.tolerance;
    o.threads = a.threads;
    o.rule = rule_of(c);
    const auto rep = spectral_portrait(spec, lambdas, o);

    emit(to_json(rep).dump(2), portrait_csv(rep), output_dir(c), report_stem("spectrum-" + spec.key(), c.seedless), c);
    if (!c.quiet) {
        int counts[3] = {0, 0, 0};
        for (const auto& r : rep.records) ++counts[static_cast<int>(r.verdict)];
        std::cout << spec.name() << ": " << rep.records.size() << " samples, " << counts[0] << " consistent, "
                  << counts[1] << " inconsistent, " << counts[2] << " inconclusive; verdict " << to_string(rep.verdict())
                  << "\n";
    }
    return verdict_code(rep.verdict());
}

std::vector<Complex> default_density_exponents(double p)
{
    // beta = 1/lambda - 1 for admitted roots of unity exp(2 pi i / m)
    std::vector<Complex> out;
    for (int m = 13; m <= 22; ++m) {
        const Complex lambda = std::polar(1.0, 2.0 * std::numbers::pi / m);
        const Complex beta = 1.0 / lambda - 1.0;
        if (beta.real() > -1.0 / p && beta.real() > -0.5) out.push_back(beta);
    }
    return out;
}

ExperimentReport run_named(const ExperimentArgs& a, const Common& c)
{
    const QuadratureRule rule = rule_of(c);
    auto tol = [&](double d) { return a.tolerance.value_or(d); };
    const std::string& name = a.name;

    if (name == "iterate") {
        const SpaceSpec spec = space_of(a.space.empty() ? "c01" : a.space, a.p);
        const int N = a.intervals > 0 ? a.intervals : 1024;
        return iterate_convergence(make_function(a.f.empty() ? "cos_over_1px" : a.f, spec, N), spec, n_or(a.n, 200),
                                   rule, tol(kDefaultTolerance), a.J);
    }
    if (name == "means") {
        const SpaceSpec spec = space_of(a.space.empty() ? "c01" : a.space, a.p);
        const bool wide = spec.space == Space::Cl || spec.space == Space::LpHalf;
        const int N = a.intervals > 0 ? a.intervals : (wide ? 4096 : 1024);
        GridFunction f;
        if (spec.space == Space::Cl && a.f.empty()) {
            const double cuts[] = {1.0, 2.0};
            f = build_named_function(NamedFunction::cos_over_1px(),
                                     share(Grid::uniform(Domain::half_line_with_limit(50.0), N, cuts)));
        } else if (spec.is_lp() && a.f.empty()) {
            f = hardy_trial(spec, 0.05, N);
        } else {
            f = make_function(a.f.empty() ? "cos_over_1px" : a.f, spec, N);
        }
        return mean_ergodic_experiment(f, spec, n_or(a.n, spec.space == Space::Cl ? 500 : 200), rule,
                                       tol(kDefaultTolerance), a.J);
    }
    if (name == "norm-growth") {
        const SpaceSpec spec = space_of(a.space.empty() ? "c01" : a.space, a.p);
        const int N = a.intervals > 0 ? a.intervals : (spec.is_lp() ? 2048 : 1024);
        std::vector<GridFunction> trials;
        if (!a.f.empty()) {
            trials.push_back(make_function(a.f, spec, N));
        } else if (spec.is_lp()) {
            trials.push_back(hardy_trial(spec, 0.05, N));
        } else if (spec.space == Space::C01) {
            for (const auto& fn : sup_corpus()) trials.push_back(build_named_function(fn, grid_for(fn, spec.default_domain(), N)));
        } else {
            for (const auto& fn : resolvent_corpus(spec)) trials.push_back(build_named_function(fn, standard_grid(spec, N)));
        }
        return norm_growth(spec, n_or(a.n, spec.is_lp() ? 10 : 50), trials, rule, tol(kDefaultTolerance));
    }
    if (name == "range-counterexample") {
        const std::vector<double> eps = a.eps.empty() ? std::vector<double>{1e-2, 1e-4, 1e-6, 1e-8} : a.eps;
        return range_counterexample(eps, rule, tol(1e-6), a.intervals > 0 ? a.intervals : 512);
    }
    if (name == "range-witness") {
        const SpaceSpec spec = SpaceSpec::cl();
        const int N = a.intervals > 0 ? a.intervals : 4096;
        GridFunction psi;
        if (a.f.empty() || a.f == kXExp) {
            const double cuts[] = {1.0, 2.0};
            psi = sample(share(Grid::uniform(Domain::half_line_with_limit(50.0), N, cuts)),
                         [](double x) { return Complex(x * std::exp(-x)); }, 0.0);
        } else {
            psi = make_function(a.f, spec, N);
        }
        return range_density_witness(psi, a.eps.empty() ? 0.05 : a.eps.front(), rule);
    }
    if (name == "chaos") {
        std::vector<Rational> thetas;
        try {
            for (const auto& t : a.theta.empty() ? std::vector<std::string>{"1/12", "1/8"} : a.theta)
                thetas.push_back(parse_rational(t));
        } catch (const std::exception& e) {
            throw ConfigError(e.what());
        }
        const int N = a.intervals > 0 ? a.intervals : n_or(a.n, 2048);
        return periodic_points(thetas, a.p, rule, N, a.J);
    }
    if (name == "density") {
        const int N = a.intervals > 0 ? a.intervals : 2048;
        const SpaceSpec spec = SpaceSpec::lploc(a.p);
        const double cuts[] = {1.0, 2.0};
        const GridPtr g = share(Grid::geometric_from(Domain::half_line(3.0), N, 1e-12, cuts));
        GridFunction target;
        if (a.f.empty()) {
            target = build_named_function(NamedFunction::cos_over_1px(), g);
        } else {
            target = make_function(a.f, spec, N);
        }
        std::vector<Complex> alphas;
        try {
            for (const auto& s : a.alpha) alphas.push_back(parse_complex(s));
        } catch (const std::exception& e) {
            throw ConfigError(e.what());
        }
        if (alphas.empty()) alphas = default_density_exponents(a.p);
        return density_probe(target, alphas, a.p, rule, a.J, tol(kDefaultTolerance));
    }
    if (name == "orbit") {
        const SpaceSpec spec = space_of(a.space.empty() ? "lp01" : a.space, a.p);
        const int N = a.intervals > 0 ? a.intervals : 2048;
        const GridFunction f = a.f.empty() ? (spec.is_lp() ? hardy_trial(spec, 0.05, N)
                                                           : make_function("power:0.05", spec, N))
                                           : make_function(a.f, spec, N);
        return orbit_growth(f, spec, n_or(a.n, 10), rule);
    }
    if (name == "commutation") {
        const SpaceSpec spec = space_of(a.space.empty() ? "cplus" : a.space, a.p);
        Conjugation which;
        if (a.conjugation == "restriction") which = Conjugation::Restriction;
        else if (a.conjugation == "scaling") which = Conjugation::Scaling;
        else throw ConfigError("--conjugation is restriction or scaling");
        const int N = a.intervals > 0 ? a.intervals : 1024;
        // scaling conjugates a function on [0,1]
        const SpaceSpec source = which == Conjugation::Scaling ? (spec.is_lp() ? SpaceSpec::lp01(spec.p) : SpaceSpec::c01()) : spec;
        const GridFunction f = make_function(a.f.empty() ? "cos_over_1px" : a.f, source, N);
        const std::vector<double> js = a.j.empty() ? std::vector<double>{1.0, 2.0, 3.0} : a.j;
        return commutation_experiment(f, js, which, spec, rule, tol(1e-8));
    }
    throw ConfigError("unknown experiment '" + name +
                      "'; expected iterate, means, norm-growth, range-counterexample, range-witness, chaos, density, "
                      "orbit or commutation");
}

int run_experiment(const ExperimentArgs& a, const Common& c)
{
    ExperimentReport r;
    try {
        r = run_named(a, c);
    } catch (const ConfigError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    } catch (const std::domain_error& e) {
        throw ConfigError(e.what());
    }
    const fs::path path = write_report(r, output_dir(c), c.seedless);
    if (!c.quiet) {
        std::cout << "wrote " << path.string() << "\n" << r.experiment_id << " on " << r.space.name() << ": verdict "
                  << to_string(r.verdict) << "\n";
        for (const auto& [k, v] : r.metrics) std::cout << "  " << k << " = " << format_number(v) << "\n";
        for (const auto& n : r.notes) std::cout << "  note: " << n << "\n";
    }
    if (a.name == "orbit") return 0; // a demonstration, inconclusive by design
    return verdict_code(r.verdict);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Numerical laboratory for the continuous Cesaro operator"};
    app.require_subcommand(1);
    app.set_config("--config", "", "INI file with [spectrum], [experiment], [selftest] sections");
    app.get_config_ptr()->configurable(false);

    Common common;
    app.add_option("--out", common.out, "output directory (default $CESARO_LAB_OUT, then ./cesaro-out)");
    app.add_flag("--seedless", common.seedless, "timestamp-free file names");
    app.add_option("--quadrature", common.quadrature, "trapezoid, simpson, gl<k>");
    app.add_flag("-q,--quiet", common.quiet);

    SpectrumArgs sa;
    auto* spectrum = app.add_subcommand("spectrum", "classify lambda samples and attach numerical evidence");
    spectrum->add_option("--space", sa.space, "c01, cl, lp01, lphalf, cplus, lploc");
    spectrum->add_option("--p", sa.p);
    spectrum->add_option("--lambda", sa.lambdas, "explicit samples, e.g. 2 or 1+1i")->delimiter(',');
    spectrum->add_option("--lambda-grid", sa.lambda_grid, "re_min:re_max:step,im_min:im_max:step");
    spectrum->add_option("--n", sa.n, "intervals of the finite section whose eigenvalues are listed");
    spectrum->add_option("--evidence-n", sa.evidence_n, "intervals for residual evidence (0: automatic)");
    spectrum->add_option("--tolerance", sa.tolerance);
    spectrum->add_option("--threads", sa.threads);

    ExperimentArgs ea;
    auto* experiment = app.add_subcommand("experiment", "run one ergodic-lab experiment");
    experiment->add_option("name", ea.name,
                           "iterate, means, norm-growth, range-counterexample, range-witness, chaos, density, orbit, "
                           "commutation")
        ->required();
    experiment->add_option("--space", ea.space);
    experiment->add_option("--p", ea.p);
    experiment->add_option("--f", ea.f, "named function, e.g. monomial:3, cos_over_1px, power:0.5");
    experiment->add_option("--n", ea.n, "iterations (grid intervals for chaos), or auto");
    experiment->add_option("--intervals", ea.intervals, "grid intervals (0: automatic)");
    experiment->add_option("--eps", ea.eps)->delimiter(',');
    experiment->add_option("--theta", ea.theta, "rationals, e.g. 1/12,1/8")->delimiter(',');
    experiment->add_option("--alpha", ea.alpha, "density exponents")->delimiter(',');
    experiment->add_option("--j", ea.j, "section lengths for commutation")->delimiter(',');
    experiment->add_option("--conjugation", ea.conjugation, "restriction or scaling");
    experiment->add_option("--J", ea.J, "seminorms q_1..q_J");
    experiment->add_option("--tolerance", ea.tolerance);

    SelftestOptions so;
    bool list = false;
    auto* selftest = app.add_subcommand("selftest", "run the invariant suite");
    selftest->add_option("--filter", so.filter, "substring of module/name");
    selftest->add_flag("--inject-fault", so.inject_fault, "perturb quadrature weights; the suite must fail");
    selftest->add_option("--seed", so.seed);
    selftest->add_flag("--list", list);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*spectrum) return run_spectrum(sa, common);
        if (*experiment) return run_experiment(ea, common);
        if (list) {
            for (const auto& n : selftest_names()) std::cout << n << "\n";
            return 0;
        }
        const auto results = run_selftest(so);
        std::cout << selftest_table(results);
        if (results.empty()) {
            std::cerr << "no check matches '" << so.filter << "'\n";
            return 2;
        }
        for (const auto& r : results) {
            if (!r.pass) return 1;
        }
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
