#include "cesaro/norms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cesaro {

double sup_norm(const GridFunction& f)
{
    double s = max_abs(f.values);
    if (f.value_at_infinity) s = std::max(s, std::abs(*f.value_at_infinity));
    return s;
}

double lp_integral(const GridFunction& f, double p, const QuadratureRule& rule)
{
    if (!(p >= 1.0)) throw std::invalid_argument("L^p integral needs p >= 1");
    const ComplexVector a = f.values.cwiseAbs().array().pow(p).cast<Complex>();
    RunningIntegral ri(f.grid, rule, 0.0, TailPolicy::Lenient);
    const ComplexVector F = ri.forward(a);
    return std::max(0.0, F[F.size() - 1].real());
}

double norm(const GridFunction& f, const SpaceSpec& spec, const QuadratureRule& rule)
{
    if (spec.is_frechet()) {
        throw std::invalid_argument(spec.name() + " is a Frechet space; use seminorm() or seminorm_family()");
    }
    spec.require(f.domain());
    if (spec.is_sup()) return sup_norm(f);
    return std::pow(lp_integral(f, spec.p, rule), 1.0 / spec.p);
}

double seminorm(const GridFunction& f, const SpaceSpec& spec, double j, const QuadratureRule& rule)
{
    if (!(j > 0.0)) throw std::invalid_argument("seminorm index must be positive");
    if (j > f.mesh().back() * (1.0 + 1e-12)) {
        throw std::out_of_range("seminorm index beyond the grid support");
    }
    const SpaceSpec sec = spec.section();
    if (f.mesh().find_node(j) == f.mesh().size() - 1) {
        // whole grid; the value at infinity is not part of a section
        return sec.is_sup() ? max_abs(f.values) : std::pow(lp_integral(f, sec.p, rule), 1.0 / sec.p);
    }
    const GridFunction r = restrict_to(f, j, rule);
    return sec.is_sup() ? max_abs(r.values) : std::pow(lp_integral(r, sec.p, rule), 1.0 / sec.p);
}

std::vector<double> seminorm_family(const GridFunction& f, const SpaceSpec& spec, std::span<const double> j_list,
                                    const QuadratureRule& rule)
{
    std::vector<double> out;
    out.reserve(j_list.size());
    for (double j : j_list) out.push_back(seminorm(f, spec, j, rule));
    return out;
}

double space_measure(const GridFunction& f, const SpaceSpec& spec, int J, const QuadratureRule& rule)
{
    if (!spec.is_frechet()) return norm(f, spec, rule);
    double s = 0.0;
    for (int j = 1; j <= J; ++j) s = std::max(s, seminorm(f, spec, j, rule));
    return s;
}

} // namespace cesaro
