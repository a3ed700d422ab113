#include "cesaro/resolvent.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "cesaro/cesaro_op.hpp"
#include "cesaro/named_functions.hpp"
#include "cesaro/norms.hpp"

namespace cesaro {

namespace {

Complex cpow(double x, Complex e) { return std::exp(e * std::log(x)); }

} // namespace

GridFunction apply_P_xi(const GridFunction& f, Complex xi, const QuadratureRule& rule)
{
    if (!(xi.real() < 1.0)) {
        throw std::domain_error("P_xi needs Re xi < 1");
    }
    RunningIntegral ri(f.grid, rule, xi, TailPolicy::Strict);
    const ComplexVector F = ri.forward(f.values);
    const auto& x = f.mesh().nodes();
    ComplexVector out(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        out[i] = x[i] == 0.0 ? f.values[i] / (1.0 - xi) : cpow(x[i], xi - 1.0) * F[i];
    }
    std::optional<Complex> inf;
    if (f.value_at_infinity) inf = *f.value_at_infinity / (1.0 - xi);
    GridFunction g = f.with_values(std::move(out), inf);
    g.note("P_xi evaluated on the nodes via t = xs; no interpolation of f");
    return g;
}

GridFunction apply_Q_xi(const GridFunction& f, Complex xi, const QuadratureRule& rule, double min_real_part)
{
    if (!(xi.real() > min_real_part)) {
        std::ostringstream os;
        os << "Q_xi needs Re xi > " << min_real_part;
        throw std::domain_error(os.str());
    }
    const auto& x = f.mesh().nodes();
    if (x[0] == 0.0 && !(xi.real() > 1.0)) {
        throw std::domain_error("Q_xi with Re xi <= 1 is unbounded at 0; use a grid with an offset first node");
    }
    RunningIntegral ri(f.grid, rule, xi, TailPolicy::Strict);
    const ComplexVector G = ri.backward(f.values);
    const double R = f.mesh().back();
    const Eigen::Index n = x.size() - 1;
    Complex tail = 0.0;
    std::string tail_note;
    if (f.value_at_infinity) {
        const Complex finf = *f.value_at_infinity;
        tail = finf * cpow(R, 1.0 - xi) / (xi - 1.0);
        // f - f(inf) beyond R as a decaying power fitted on the last two nodes
        const Complex d1 = f.values[n] - finf;
        const Complex d0 = f.values[n - 1] - finf;
        Complex b = std::log(d1 / d0) / std::log(x[n] / x[n - 1]);
        if (d1 != Complex(0.0) && std::isfinite(b.real()) && std::isfinite(b.imag()) && b.real() < 0.0) {
            tail += d1 * cpow(R, 1.0 - xi) / (xi - 1.0 - b);
            tail_note = "Q_xi far tail: f(inf) plus a decaying power fitted at R";
        } else {
            tail_note = "Q_xi far tail: f taken equal to f(inf) beyond R";
        }
    } else {
        std::ostringstream os;
        os << "Q_xi truncated at R=" << R << " without a value at infinity; tail beyond R dropped";
        tail_note = os.str();
    }
    ComplexVector out(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        out[i] = x[i] == 0.0 ? f.values[i] / (xi - 1.0) : cpow(x[i], xi - 1.0) * (G[i] + tail);
    }
    std::optional<Complex> inf;
    if (f.value_at_infinity) inf = *f.value_at_infinity / (xi - 1.0);
    GridFunction g = f.with_values(std::move(out), inf);
    g.note(tail_note);
    return g;
}

double critical_real_part(const SpaceSpec& spec)
{
    return spec.is_lp() ? 1.0 / spec.q() : 1.0;
}

ResolventBranch resolvent_branch(Complex lambda, const SpaceSpec& spec)
{
    if (lambda == Complex(0.0)) {
        throw std::domain_error("lambda = 0 lies in the spectrum");
    }
    const double c = critical_real_part(spec);
    const double re = (1.0 / lambda).real();
    if (std::abs(re - c) < kCriticalTolerance) {
        std::ostringstream os;
        os << "lambda=" << lambda.real() << (lambda.imag() < 0 ? "" : "+") << lambda.imag()
           << "i is on the critical circle Re(1/lambda)=" << c << " (within " << kCriticalTolerance << ")";
        throw CriticalCircleError(os.str());
    }
    if (re < c) return ResolventBranch::P;
    if (spec.space == Space::Cl || spec.space == Space::LpHalf) return ResolventBranch::Q;
    throw std::domain_error("lambda lies inside the spectral disc of " + spec.name());
}

GridFunction resolvent_apply(const GridFunction& f, Complex lambda, const SpaceSpec& spec, const QuadratureRule& rule)
{
    spec.require(f.domain());
    const ResolventBranch branch = resolvent_branch(lambda, spec);
    const Complex xi = 1.0 / lambda;
    const Complex l2 = lambda * lambda;
    if (branch == ResolventBranch::P) {
        return combine(1.0 / lambda, f, 1.0 / l2, apply_P_xi(f, xi, rule));
    }
    return combine(1.0 / lambda, f, -1.0 / l2, apply_Q_xi(f, xi, rule, critical_real_part(spec)));
}

double resolvent_residual(const GridFunction& f, Complex lambda, const SpaceSpec& spec, const QuadratureRule& rule)
{
    const GridFunction u = resolvent_apply(f, lambda, spec, rule);
    const GridFunction r = combine(lambda, u, -1.0, apply_cesaro(u, rule)) - f;
    return space_measure(r, spec, 3, rule);
}

double resolvent_left_residual(const GridFunction& f, Complex lambda, const SpaceSpec& spec,
                               const QuadratureRule& rule)
{
    const GridFunction v = combine(lambda, f, -1.0, apply_cesaro(f, rule));
    const GridFunction r = resolvent_apply(v, lambda, spec, rule) - f;
    return space_measure(r, spec, 3, rule);
}

std::string to_string(Membership m)
{
    switch (m) {
    case Membership::Yes: return "yes";
    case Membership::No: return "no";
    case Membership::Boundary: return "boundary";
    }
    return "?";
}

Membership eigen_membership(Complex lambda, const SpaceSpec& spec)
{
    if (lambda == Complex(0.0)) throw std::domain_error("lambda = 0 has no eigenfunction");
    const Complex alpha = 1.0 / lambda - 1.0;
    const bool is_one = std::abs(lambda - 1.0) <= 1e-14;
    switch (spec.space) {
    case Space::C01:
    case Space::CPlus: {
        if (is_one) return Membership::Yes;
        const double re = (1.0 / lambda).real();
        if (std::abs(re - 1.0) <= 1e-12) return Membership::Boundary;
        return re > 1.0 ? Membership::Yes : Membership::No;
    }
    case Space::Lp01:
    case Space::LpLoc: {
        const double gap = alpha.real() + 1.0 / spec.p;
        return gap > 1e-12 ? Membership::Yes : Membership::No;
    }
    case Space::LpHalf: return Membership::No;
    case Space::Cl: return is_one ? Membership::Yes : Membership::No;
    }
    return Membership::No;
}

Eigenfunction eigenfunction(Complex lambda, double p)
{
    if (lambda == Complex(0.0)) throw std::domain_error("lambda = 0 has no eigenfunction");
    Eigenfunction e{lambda, 1.0 / lambda - 1.0, {}};
    for (const SpaceSpec& s : {SpaceSpec::c01(), SpaceSpec::cl(), SpaceSpec::cplus(), SpaceSpec::lp01(p),
                               SpaceSpec::lphalf(p), SpaceSpec::lploc(p)}) {
        e.membership[s.key()] = eigen_membership(lambda, s);
    }
    return e;
}

GridPtr eigen_grid(Complex alpha, const Domain& domain, int intervals)
{
    std::vector<double> bps;
    for (int j = 1; j < domain.extent; ++j) bps.push_back(j);
    const bool polynomial = alpha.imag() == 0.0 && alpha.real() >= 0.0 && alpha.real() == std::floor(alpha.real());
    if (polynomial) {
        return share(Grid::uniform(domain, intervals, bps));
    }
    const double step = std::min(16.0 * std::log(10.0) / intervals, 0.015 / std::abs(alpha + 1.0));
    const double first = domain.extent * std::exp(-step * intervals);
    return share(Grid::geometric_from(domain, intervals, first, bps));
}

double eigen_residual(Complex lambda, const SpaceSpec& spec, const QuadratureRule& rule, int intervals, int J)
{
    const Membership m = eigen_membership(lambda, spec);
    if (m != Membership::Yes) {
        throw std::domain_error("g_lambda is not an eigenfunction in " + spec.name() + " (membership " + to_string(m) +
                                ")");
    }
    const Complex alpha = 1.0 / lambda - 1.0;
    Domain d = spec.default_domain();
    if (spec.is_frechet()) d = Domain::half_line(J);
    const GridPtr grid = eigen_grid(alpha, d, intervals);
    const GridFunction g = build_named_function(NamedFunction::power(alpha), grid);
    const GridFunction r = combine(1.0, apply_cesaro(g, rule), -lambda, g);
    if (!spec.is_frechet()) {
        const double ng = norm(g, spec, rule);
        return norm(r, spec, rule) / ng;
    }
    double worst = 0.0;
    for (int j = 1; j <= J; ++j) {
        worst = std::max(worst, seminorm(r, spec, j, rule) / seminorm(g, spec, j, rule));
    }
    return worst;
}

} // namespace cesaro
