#pragma once

#include <span>
#include <vector>

#include "cesaro/grid_function.hpp"
#include "cesaro/space.hpp"

namespace cesaro {

/// max |f(x_i)|, including |f(inf)| when present.
double sup_norm(const GridFunction& f);

/// ∫ |f|^p over the whole grid. On offset grids the piece [0, x_0] comes from
/// the power-law tail model (constant fallback when the fit is not integrable).
double lp_integral(const GridFunction& f, double p, const QuadratureRule& rule = QuadratureRule::gauss_legendre());

/// Norm of a Banach space. Throws for C(R+) and L^p_loc, which only carry
/// seminorms.
double norm(const GridFunction& f, const SpaceSpec& spec, const QuadratureRule& rule = QuadratureRule::gauss_legendre());

/// q_j(f): sup or L^p norm of the restriction to [0, j].
double seminorm(const GridFunction& f, const SpaceSpec& spec, double j,
                const QuadratureRule& rule = QuadratureRule::gauss_legendre());

std::vector<double> seminorm_family(const GridFunction& f, const SpaceSpec& spec, std::span<const double> j_list,
                                    const QuadratureRule& rule = QuadratureRule::gauss_legendre());

/// The norm used to measure residuals for `spec`: the space norm, or the
/// largest of q_1..q_J for the Frechet spaces.
double space_measure(const GridFunction& f, const SpaceSpec& spec, int J = 3,
                     const QuadratureRule& rule = QuadratureRule::gauss_legendre());

} // namespace cesaro
