#include <doctest.h>

#include <cmath>

#include "cesaro/cesaro_op.hpp"
#include "cesaro/ergodic_lab.hpp"
#include "cesaro/named_functions.hpp"
#include "cesaro/norms.hpp"
#include "cesaro/resolvent.hpp"
#include "oracle.hpp"

using namespace cesaro;

TEST_CASE("C f at the nodes against the adaptive oracle")
{
    const GridPtr g = standard_grid(SpaceSpec::cplus(), 600);
    for (const auto& fn : {NamedFunction::cos_over_1px(), NamedFunction::plateau_h(2, 1), NamedFunction::witness_g(1, 2)}) {
        CAPTURE(fn.name());
        const GridFunction f = build_named_function(fn, g);
        const GridFunction cf = apply_cesaro(f);
        double worst = 0.0;
        for (int i : {0, 3, 100, 200, 333, 400, 600}) {
            const double x = g->node(i);
            // split at the breaks so the oracle sees smooth pieces
            oracle::Fn h = [&](double t) { return fn(t); };
            Complex want = 0.0;
            if (x == 0.0) {
                want = fn(0.0);
            } else {
                double a = 0.0;
                for (double b : {1.0, 2.0, x}) {
                    if (b > x) b = x;
                    if (b > a) want += oracle::csmooth(h, a, b);
                    a = b;
                }
                want /= x;
            }
            worst = std::max(worst, std::abs(cf[i] - want));
        }
        CHECK(worst < 1e-11);
    }
}

TEST_CASE("neg_inv_log under C: singular derivative at 0")
{
    const NamedFunction fn = NamedFunction::neg_inv_log();
    const GridPtr g = grid_for(fn, Domain::interval(1.0), 1024);
    const GridFunction cf = apply_cesaro(build_named_function(fn, g));
    for (double x : {0.01, 0.3, 1.0}) {
        const auto i = g->find_node(x);
        if (!i) continue;
        const Complex want = oracle::cesaro_at([&](double t) { return fn(t); }, x);
        CHECK(std::abs(cf[*i] - want) < 1e-8);
    }
}

TEST_CASE("monomials are eigenfunctions: C^n x^k = x^k/(k+1)^n")
{
    const GridPtr g = standard_grid(SpaceSpec::c01(), 256);
    const CesaroOperator C(g);
    for (int k : {0, 2, 5}) {
        const GridFunction f = build_named_function(NamedFunction::monomial(k), g);
        const GridFunction c5 = C.power(f, 5);
        CHECK(max_abs(c5.values - f.values / std::pow(k + 1.0, 5)) < 1e-11);
    }
}

TEST_CASE("x^alpha with complex alpha on an offset grid")
{
    for (Complex a : {Complex(-0.4, 0.0), Complex(0.3, 4.0), Complex(-0.45, -1.0)}) {
        const GridFunction g = build_named_function(NamedFunction::power(a), eigen_grid(a, Domain::interval(1.0), 2048));
        const GridFunction r = combine(1.0, apply_cesaro(g), -1.0 / (a + 1.0), g);
        CHECK(sup_norm(r) / sup_norm(g) < 1e-9);
    }
}

TEST_CASE("audited application keeps the cumulative integrals")
{
    const GridPtr g = standard_grid(SpaceSpec::c01(), 64);
    const auto audit = apply_cesaro_audited(constant(g, 2.0));
    CHECK(std::abs(audit.cumulative_integrals[64] - 2.0) < 1e-14);
    CHECK(max_abs(audit.output.values - audit.input.values) < 1e-14);
}

TEST_CASE("Cesaro means equal the explicit average of powers")
{
    const GridFunction f = build_named_function(NamedFunction::cos_over_1px(), standard_grid(SpaceSpec::c01(), 128));
    const int n = 7;
    GridFunction sum = constant(f.grid, 0.0);
    for (int m = 1; m <= n; ++m) sum = sum + apply_cesaro_power(f, m);
    const GridFunction mean = cesaro_mean(f, n);
    CHECK(max_abs(mean.values - sum.values / double(n)) < 1e-14);
    CHECK(telescoping_residual(f, n) < 1e-14);
}

TEST_CASE("values at infinity are preserved by C")
{
    const GridFunction f = build_named_function(NamedFunction::cos_over_1px(), standard_grid(SpaceSpec::cl(), 512));
    const GridFunction one = constant(f.grid, 1.0);
    CHECK(apply_cesaro(f).value_at_infinity == Complex(0.0));
    CHECK(*apply_cesaro(one).value_at_infinity == Complex(1.0));
}

TEST_CASE("scaling and restriction commute with C")
{
    const GridFunction f = build_named_function(NamedFunction::cos_over_1px(), standard_grid(SpaceSpec::c01(), 256));
    const GridFunction t = scale_map(f, 3.0);
    CHECK(t.mesh().back() == doctest::Approx(3.0));
    CHECK(max_abs(scale_map_inverse(t, 3.0).values - f.values) == 0.0);
    CHECK(commutation_residual(f, 3.0, Conjugation::Scaling, SpaceSpec::c01()) < 1e-12);
    CHECK(commutation_residual(f, 3.0, Conjugation::Scaling, SpaceSpec::lp01(2.0)) < 1e-12);
    const GridFunction h = build_named_function(NamedFunction::plateau_h(2, 1), standard_grid(SpaceSpec::cplus(), 300));
    CHECK(commutation_residual(h, 2.0, Conjugation::Restriction, SpaceSpec::cplus()) < 1e-14);
    const auto rep = commutation_experiment(h, {1.0, 2.0}, Conjugation::Restriction, SpaceSpec::lploc(2.0));
    CHECK(rep.verdict == Verdict::Consistent);
}

TEST_CASE("mismatched grids are rejected")
{
    const GridFunction a = constant(standard_grid(SpaceSpec::c01(), 16), 1.0);
    const GridFunction b = constant(standard_grid(SpaceSpec::c01(), 32), 1.0);
    CHECK_THROWS(a + b);
    const CesaroOperator C(b.grid);
    CHECK_THROWS(C.apply(a));
}
