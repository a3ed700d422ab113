#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cesaro/grid.hpp"
#include "cesaro/quadrature.hpp"
#include "cesaro/types.hpp"

namespace cesaro {

/// Complex samples on a grid. `value_at_infinity` is present exactly when the
/// domain is a half-line with limit. `notes` carries audit remarks (inserted
/// nodes, dropped tails, interpolation used) through the pipeline.
struct GridFunction {
    GridPtr grid;
    ComplexVector values;
    std::optional<Complex> value_at_infinity;
    std::vector<std::string> notes;

    GridFunction() = default;
    GridFunction(GridPtr g, ComplexVector v, std::optional<Complex> at_inf = std::nullopt);

    const Grid& mesh() const { return *grid; }
    const Domain& domain() const { return grid->domain(); }
    Eigen::Index size() const { return values.size(); }
    Complex operator[](Eigen::Index i) const { return values[i]; }

    void validate() const;
    GridFunction with_values(ComplexVector v, std::optional<Complex> at_inf) const;
    GridFunction& note(std::string text);
};

GridFunction sample(GridPtr grid, const std::function<Complex(double)>& fn,
                    std::optional<Complex> at_infinity = std::nullopt);

GridFunction constant(GridPtr grid, Complex c);

/// a·f + b·g on a common grid (grids compared by value).
GridFunction combine(Complex a, const GridFunction& f, Complex b, const GridFunction& g);
GridFunction operator+(const GridFunction& f, const GridFunction& g);
GridFunction operator-(const GridFunction& f, const GridFunction& g);
GridFunction operator*(Complex a, const GridFunction& f);

bool same_grid(const GridFunction& f, const GridFunction& g);

/// Value at an arbitrary point by the Lagrange interpolant of the panel that
/// contains x (panels of `rule` on f's grid). Points past the last node
/// return the value at infinity when there is one.
Complex evaluate(const GridFunction& f, double x, const QuadratureRule& rule = QuadratureRule::gauss_legendre());

/// Restriction to [0, j] as an Interval(j) function. If j is not a node it is
/// inserted with an interpolated value and a note is recorded.
GridFunction restrict_to(const GridFunction& f, double j,
                         const QuadratureRule& rule = QuadratureRule::gauss_legendre());

} // namespace cesaro
