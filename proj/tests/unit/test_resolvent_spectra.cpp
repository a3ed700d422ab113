#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "cesaro/cesaro_op.hpp"
#include "cesaro/named_functions.hpp"
#include "cesaro/norms.hpp"
#include "cesaro/portrait.hpp"
#include "cesaro/resolvent.hpp"
#include "cesaro/spectra.hpp"
#include "oracle.hpp"

using namespace cesaro;

TEST_CASE("P_xi against the defining integral")
{
    const Complex xi(0.3, 0.7);
    const GridPtr g = standard_grid(SpaceSpec::c01(), 512);
    const NamedFunction fn = NamedFunction::cos_over_1px();
    const GridFunction pf = apply_P_xi(build_named_function(fn, g), xi);
    for (int i : {0, 17, 256, 512}) {
        const double x = g->node(i);
        const Complex want = oracle::csingular([&](double s) { return std::pow(Complex(s), -xi) * fn(x * s); }, 0.0, 1.0);
        CHECK(std::abs(pf[i] - want) < 1e-10);
    }
    CHECK_THROWS(apply_P_xi(constant(g, 1.0), Complex(1.0, 0.0)));
}

TEST_CASE("Q_xi against the defining integral on the truncated model")
{
    const Complex xi(2.5, 0.0);
    const GridPtr g = standard_grid(SpaceSpec::cl(), 2048);
    const NamedFunction fn = NamedFunction::cos_over_1px();
    const GridFunction qf = apply_Q_xi(build_named_function(fn, g), xi);
    for (double x : {0.5, 1.0, 2.0}) {
        const auto i = g->find_node(x);
        REQUIRE(i);
        // f(inf) = 0, so nothing is added beyond R = 50
        const Complex want = oracle::csmooth([&](double s) { return std::pow(Complex(s), -xi) * fn(x * s); }, 1.0, 50.0 / x);
        CHECK(std::abs(qf[*i] - want) < 1e-9);
    }
}

TEST_CASE("closed form: P_xi x^a = x^a / (1 - xi + a)")
{
    const Complex xi(-0.5, 1.0), a(0.4, -2.0);
    const GridFunction f = build_named_function(NamedFunction::power(a), eigen_grid(a, Domain::interval(1.0), 2048));
    const GridFunction pf = apply_P_xi(f, xi);
    CHECK(sup_norm(pf - (1.0 / (1.0 - xi + a)) * f) < 1e-9);
}

TEST_CASE("branch selection and the critical circle")
{
    CHECK(resolvent_branch(2.0, SpaceSpec::c01()) == ResolventBranch::P);
    CHECK(resolvent_branch(0.4, SpaceSpec::cl()) == ResolventBranch::Q);
    CHECK(resolvent_branch(1.5, SpaceSpec::lphalf(2.0)) == ResolventBranch::Q);
    CHECK_THROWS_AS(resolvent_branch(Complex(1, 1), SpaceSpec::lphalf(2.0)), CriticalCircleError);
    CHECK_THROWS_AS(resolvent_branch(1.0, SpaceSpec::c01()), CriticalCircleError);
    CHECK_THROWS_AS(resolvent_branch(0.4, SpaceSpec::c01()), std::domain_error);
    CHECK(critical_real_part(SpaceSpec::lp01(3.0)) == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("resolvent identities on the C-spaces and L^p(0,1)")
{
    for (const auto& spec : {SpaceSpec::c01(), SpaceSpec::cplus(), SpaceSpec::lp01(2.0)}) {
        const GridPtr g = standard_grid(spec, 512);
        for (Complex lambda : {Complex(3.0, 0.0), Complex(-1.0, 0.0), Complex(3.0, 2.0)}) {
            for (const auto& fn : resolvent_corpus(spec)) {
                const GridFunction f = build_named_function(fn, g);
                CHECK(resolvent_residual(f, lambda, spec) < 1e-8);
                CHECK(resolvent_left_residual(f, lambda, spec) < 1e-8);
            }
        }
    }
}

TEST_CASE("resolvent on C([0,1]) applied to 1 is 1/(lambda-1)")
{
    const GridPtr g = standard_grid(SpaceSpec::c01(), 64);
    const Complex lambda(2.0, 1.0);
    const GridFunction u = resolvent_apply(constant(g, 1.0), lambda, SpaceSpec::c01());
    CHECK(max_abs(u.values - ComplexVector::Constant(u.size(), 1.0 / (lambda - 1.0))) < 1e-13);
}

TEST_CASE("eigen membership follows the exponent gate")
{
    // alpha = 1/lambda - 1: on L^2 the gate is Re alpha > -1/2
    CHECK(eigen_membership(1.5, SpaceSpec::lp01(2.0)) == Membership::Yes);   // alpha = -1/3
    CHECK(eigen_membership(2.0, SpaceSpec::lp01(2.0)) == Membership::No);     // alpha = -1/2, x^-1/2 not in L^2
    CHECK(eigen_membership(Complex(0.5, 0.5), SpaceSpec::c01()) == Membership::Boundary); // Re alpha = 0, alpha != 0
    CHECK(eigen_membership(2.5, SpaceSpec::lp01(2.0)) == Membership::No);
    CHECK(eigen_membership(0.5, SpaceSpec::c01()) == Membership::Yes);       // alpha = 1
    CHECK(eigen_membership(1.0, SpaceSpec::cl()) == Membership::Yes);
    CHECK(eigen_membership(0.5, SpaceSpec::cl()) == Membership::No);         // x fails to converge at infinity
    CHECK(eigen_membership(1.5, SpaceSpec::lphalf(2.0)) == Membership::No);
    const Eigenfunction e = eigenfunction(Complex(0.5, 0.5));
    CHECK(std::abs(e.alpha - Complex(0.0, -1.0)) < 1e-15);
}

TEST_CASE("eigen residuals are small inside the L^2 disc")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < 4; ++k) {
        const Complex lambda = 1.0 + std::polar(0.9 * std::sqrt(u(rng)), 2 * M_PI * u(rng));
        CHECK(eigen_residual(lambda, SpaceSpec::lploc(2.0)) < 1e-5);
    }
    CHECK_THROWS(eigen_residual(2.5, SpaceSpec::lp01(2.0)));
}

TEST_CASE("analytic regions and classification")
{
    const SpectralRegion c = analytic_region(SpaceSpec::c01());
    CHECK(c.shape == RegionShape::Disc);
    CHECK(c.center == Complex(0.5, 0.0));
    CHECK(c.radius == 0.5);
    const SpectralRegion l = analytic_region(SpaceSpec::lphalf(3.0));
    CHECK(l.shape == RegionShape::Circle);
    CHECK(l.radius == doctest::Approx(0.75));

    CHECK(classify(0.0, SpaceSpec::c01()) == SpectralClass::ContinuousSpectrum);
    CHECK(classify(0.25, SpaceSpec::c01()) == SpectralClass::PointSpectrum);
    CHECK(classify(2.0, SpaceSpec::c01()) == SpectralClass::Resolvent);
    CHECK(classify(1.0, SpaceSpec::c01()) == SpectralClass::Critical);
    CHECK(classify(1.0, SpaceSpec::cl()) == SpectralClass::PointSpectrum);
    CHECK(classify(0.4, SpaceSpec::cl()) == SpectralClass::Resolvent);
    CHECK(classify(1.5, SpaceSpec::lp01(2.0)) == SpectralClass::PointSpectrum);
    CHECK(classify(Complex(1, 1), SpaceSpec::lphalf(2.0)) == SpectralClass::Critical);
    CHECK(classify(1.5, SpaceSpec::lphalf(2.0)) == SpectralClass::Resolvent);
}

TEST_CASE("monomial sections: diagonal 1/(k+1), independent of j")
{
    const OperatorMatrix m = discretize_monomial(SpaceSpec::c01(), 12, 5.0);
    CHECK(is_triangular(m.entries));
    const auto ev = eigenvalues(m);
    REQUIRE(ev.size() == 12);
    for (int k = 0; k < 12; ++k) CHECK(ev[k] == Complex(1.0 / (k + 1), 0.0));
    CHECK(discretize_monomial(SpaceSpec::c01(), 12, 1.0).entries == m.entries);
}

TEST_CASE("grid sections act like C on sampled functions")
{
    const GridPtr g = standard_grid(SpaceSpec::c01(), 64);
    const OperatorMatrix m = discretize_grid(SpaceSpec::c01(), g);
    const GridFunction f = build_named_function(NamedFunction::cos_over_1px(), g);
    CHECK(max_abs(m.entries * f.values - apply_cesaro(f).values) < 1e-13);
    CHECK_THROWS(discretize_grid(SpaceSpec::c01(), standard_grid(SpaceSpec::c01(), 64), QuadratureRule::gauss_legendre(), 32));
}

TEST_CASE("dense eigensolver: residuals and known spectra")
{
    ComplexMatrix m(3, 3);
    m << 2, 1, 0, 0, 3, 1, 1, 0, 4;
    auto pairs = eigenpairs(m);
    REQUIRE(pairs.size() == 3);
    Complex trace = 0.0;
    for (const auto& p : pairs) {
        CHECK(p.residual < 1e-12);
        CHECK(std::abs(p.vector.norm() - 1.0) < 1e-12);
        trace += p.value;
    }
    CHECK(std::abs(trace - 9.0) < 1e-12);
    ComplexMatrix bad = m;
    bad(0, 0) = std::nan("");
    CHECK_THROWS(eigenvalues(bad));
    CHECK(spectral_norm(ComplexMatrix::Identity(4, 4) * 3.0) == doctest::Approx(3.0));
}

TEST_CASE("lambda grid parsing")
{
    const auto pts = parse_lambda_grid("-0.5:0.5:0.5,0:1:1");
    CHECK(pts.size() == 5); // (0,0) skipped
    CHECK(std::find(pts.begin(), pts.end(), Complex(0, 0)) == pts.end());
    CHECK(parse_lambda_grid("-0.5:2.5:0.1,-1.5:1.5:0.1").size() == 31 * 31 - 1);
    CHECK_THROWS(parse_lambda_grid("0:1:0,0:1:1"));
    CHECK_THROWS(parse_lambda_grid("0:1:1"));
}

TEST_CASE("portrait records carry evidence per class")
{
    PortraitOptions o;
    o.matrix_intervals = 32;
    const auto rep = spectral_portrait(SpaceSpec::c01(), {2.0, 0.25, 1.0, Complex(-1, 1)}, o);
    REQUIRE(rep.records.size() == 4);
    CHECK(rep.records[0].evidence == EvidenceType::ResolventResidual);
    CHECK(*rep.records[0].residual < 1e-8);
    CHECK(*rep.records[0].resolvent_norm_estimate > 0.0);
    CHECK(rep.records[1].evidence == EvidenceType::EigenResidual);
    CHECK(rep.records[2].evidence == EvidenceType::CriticalRejection);
    CHECK(rep.verdict() == Verdict::Consistent);
    const std::string csv = portrait_csv(rep);
    CHECK(csv.rfind("re_lambda,im_lambda,class,residual\n", 0) == 0);
    const auto j = to_json(rep);
    CHECK(j["records"].size() == 4);
    CHECK(j["region"]["shape"] == "disc");
}
