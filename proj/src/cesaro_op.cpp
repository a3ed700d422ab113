#include "cesaro/cesaro_op.hpp"

#include <cmath>
#include <stdexcept>

#include "cesaro/norms.hpp"

namespace cesaro {

CesaroOperator::CesaroOperator(GridPtr grid, QuadratureRule rule)
    : integral_(std::move(grid), rule, 0.0, TailPolicy::Strict)
{
}

void CesaroOperator::check(const GridFunction& f) const
{
    if (!(f.grid.get() == &integral_.grid() || *f.grid == integral_.grid())) {
        throw std::invalid_argument("function grid differs from the operator grid");
    }
    if (!f.values.allFinite()) {
        throw NotIntegrableError("input has non-finite samples");
    }
}

CesaroApplication CesaroOperator::apply_audited(const GridFunction& f) const
{
    check(f);
    const auto& x = grid().nodes();
    ComplexVector F = integral_.forward(f.values);
    ComplexVector out(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        out[i] = x[i] == 0.0 ? f.values[i] : F[i] / x[i];
    }
    GridFunction g = f.with_values(std::move(out), f.value_at_infinity);
    return {f, std::move(g), std::move(F), rule()};
}

GridFunction CesaroOperator::apply(const GridFunction& f) const
{
    check(f);
    const auto& x = grid().nodes();
    const ComplexVector F = integral_.forward(f.values);
    ComplexVector out(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        out[i] = x[i] == 0.0 ? f.values[i] : F[i] / x[i];
    }
    return f.with_values(std::move(out), f.value_at_infinity);
}

GridFunction CesaroOperator::power(const GridFunction& f, int n) const
{
    if (n < 0) throw std::invalid_argument("negative iterate count");
    GridFunction g = f;
    for (int m = 0; m < n; ++m) g = apply(g);
    return g;
}

GridFunction CesaroOperator::mean(const GridFunction& f, int n) const
{
    if (n < 1) throw std::invalid_argument("Cesaro mean needs n >= 1");
    GridFunction g = f;
    ComplexVector sum = ComplexVector::Zero(f.size());
    Complex sum_inf = 0.0;
    for (int m = 1; m <= n; ++m) {
        g = apply(g);
        sum += g.values;
        if (g.value_at_infinity) sum_inf += *g.value_at_infinity;
    }
    const double inv = 1.0 / n;
    std::optional<Complex> inf;
    if (f.value_at_infinity) inf = sum_inf * inv;
    return f.with_values(sum * inv, inf);
}

GridFunction apply_cesaro(const GridFunction& f, const QuadratureRule& rule)
{
    return CesaroOperator(f.grid, rule).apply(f);
}

CesaroApplication apply_cesaro_audited(const GridFunction& f, const QuadratureRule& rule)
{
    return CesaroOperator(f.grid, rule).apply_audited(f);
}

GridFunction apply_cesaro_power(const GridFunction& f, int n, const QuadratureRule& rule)
{
    if (n < 0) throw std::invalid_argument("negative iterate count");
    if (n == 0) return f;
    return CesaroOperator(f.grid, rule).power(f, n);
}

GridFunction cesaro_mean(const GridFunction& f, int n, const QuadratureRule& rule)
{
    if (n < 1) throw std::invalid_argument("Cesaro mean needs n >= 1");
    return CesaroOperator(f.grid, rule).mean(f, n);
}

GridFunction scale_map(const GridFunction& f, double j)
{
    if (f.domain().kind != DomainKind::Interval) {
        throw std::invalid_argument("scale_map acts on interval functions");
    }
    GridFunction out(share(f.mesh().scaled(j)), f.values);
    out.notes = f.notes;
    return out;
}

GridFunction scale_map(const GridFunction& f, double j, const GridPtr& target)
{
    GridFunction out = scale_map(f, j);
    const Grid& t = *target;
    if (t.size() != out.mesh().size() || t.domain() != out.domain() ||
        !t.nodes().isApprox(out.mesh().nodes(), 1e-14)) {
        throw std::invalid_argument("target grid is not the scaled copy of the source grid");
    }
    out.grid = target;
    return out;
}

GridFunction scale_map_inverse(const GridFunction& h, double j)
{
    if (!(j > 0.0)) throw std::invalid_argument("scale factor must be positive");
    return scale_map(h, 1.0 / j);
}

namespace {

double section_distance(const GridFunction& a, const GridFunction& b, const SpaceSpec& spec,
                        const QuadratureRule& rule)
{
    const GridFunction d = a - b;
    const SpaceSpec sec = spec.section();
    return sec.is_sup() ? max_abs(d.values) : std::pow(lp_integral(d, sec.p, rule), 1.0 / sec.p);
}

} // namespace

double commutation_residual(const GridFunction& f, double j, Conjugation which, const SpaceSpec& spec,
                            const QuadratureRule& rule)
{
    if (!(j > 0.0)) throw std::invalid_argument("section index must be positive");
    if (which == Conjugation::Restriction) {
        const GridFunction fj = restrict_to(f, j, rule);
        const GridFunction lhs = apply_cesaro(fj, rule);
        GridFunction rhs = restrict_to(apply_cesaro(f, rule), j, rule);
        rhs.grid = lhs.grid;
        return section_distance(lhs, rhs, spec, rule);
    }
    if (f.domain().kind != DomainKind::Interval || std::abs(f.domain().extent - 1.0) > 1e-14) {
        throw std::invalid_argument("scaling conjugation starts from a function on [0,1]");
    }
    const GridFunction lhs = scale_map(apply_cesaro(f, rule), j);
    const GridFunction tf = scale_map(f, j, lhs.grid);
    const GridFunction rhs = apply_cesaro(tf, rule);
    return section_distance(lhs, rhs, spec, rule);
}

} // namespace cesaro
