#pragma once

#include "cesaro/grid_function.hpp"
#include "cesaro/quadrature.hpp"
#include "cesaro/space.hpp"

namespace cesaro {

/// One application of C with its audit trail. output[i] = cumulative[i] / x_i
/// for x_i > 0; at x_0 = 0 the output copies the input value.
struct CesaroApplication {
    GridFunction input;
    GridFunction output;
    ComplexVector cumulative_integrals;
    QuadratureRule rule = QuadratureRule::gauss_legendre();
};

/// C f(x) = (1/x) ∫_0^x f on a fixed grid; the quadrature stencil is built
/// once, so iterating is O(N) per step.
class CesaroOperator {
public:
    explicit CesaroOperator(GridPtr grid, QuadratureRule rule = QuadratureRule::gauss_legendre());

    const Grid& grid() const { return integral_.grid(); }
    const QuadratureRule& rule() const { return integral_.rule(); }

    GridFunction apply(const GridFunction& f) const;
    CesaroApplication apply_audited(const GridFunction& f) const;

    /// n = 0 returns f unchanged.
    GridFunction power(const GridFunction& f, int n) const;

    /// (1/n) Σ_{m=1..n} C^m f, keeping only the running sum.
    GridFunction mean(const GridFunction& f, int n) const;

private:
    void check(const GridFunction& f) const;
    RunningIntegral integral_;
};

GridFunction apply_cesaro(const GridFunction& f, const QuadratureRule& rule = QuadratureRule::gauss_legendre());
CesaroApplication apply_cesaro_audited(const GridFunction& f,
                                       const QuadratureRule& rule = QuadratureRule::gauss_legendre());
GridFunction apply_cesaro_power(const GridFunction& f, int n,
                                const QuadratureRule& rule = QuadratureRule::gauss_legendre());
GridFunction cesaro_mean(const GridFunction& f, int n, const QuadratureRule& rule = QuadratureRule::gauss_legendre());

/// T_j g(x) = g(x/j): an Interval(a) function becomes an Interval(j a)
/// function on the scaled grid, values unchanged.
GridFunction scale_map(const GridFunction& f, double j);
/// Same, onto a prescribed grid that must be the scaled copy of f's grid.
GridFunction scale_map(const GridFunction& f, double j, const GridPtr& target);
/// T_j^{-1} h(x) = h(j x).
GridFunction scale_map_inverse(const GridFunction& h, double j);

enum class Conjugation { Restriction, Scaling };

/// Restriction: ||C_j(f|[0,j]) - (C f)|[0,j]||_j.
/// Scaling (f on [0,1]): ||T_j C_1 f - C_j T_j f||_j.
/// The norm is the section norm of `spec` (sup or L^p on [0,j]).
double commutation_residual(const GridFunction& f, double j, Conjugation which, const SpaceSpec& spec,
                            const QuadratureRule& rule = QuadratureRule::gauss_legendre());

} // namespace cesaro
