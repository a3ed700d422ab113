#include "cesaro/grid_function.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace cesaro {

GridFunction::GridFunction(GridPtr g, ComplexVector v, std::optional<Complex> at_inf)
    : grid(std::move(g)), values(std::move(v)), value_at_infinity(at_inf)
{
    validate();
}

void GridFunction::validate() const
{
    if (!grid) {
        throw std::invalid_argument("grid function without a grid");
    }
    if (values.size() != grid->size()) {
        throw std::invalid_argument("value count does not match node count");
    }
    if (value_at_infinity.has_value() != grid->domain().has_limit()) {
        throw std::invalid_argument("value at infinity must be present exactly on half-line-with-limit domains");
    }
}

GridFunction GridFunction::with_values(ComplexVector v, std::optional<Complex> at_inf) const
{
    GridFunction out(grid, std::move(v), at_inf);
    out.notes = notes;
    return out;
}

GridFunction& GridFunction::note(std::string text)
{
    if (std::find(notes.begin(), notes.end(), text) == notes.end()) {
        notes.push_back(std::move(text));
    }
    return *this;
}

GridFunction sample(GridPtr grid, const std::function<Complex(double)>& fn, std::optional<Complex> at_infinity)
{
    ComplexVector v(grid->size());
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        v[i] = fn(grid->node(i));
    }
    return GridFunction(std::move(grid), std::move(v), at_infinity);
}

GridFunction constant(GridPtr grid, Complex c)
{
    const bool lim = grid->domain().has_limit();
    const auto n = grid->size();
    return GridFunction(std::move(grid), ComplexVector::Constant(n, c),
                        lim ? std::optional<Complex>(c) : std::nullopt);
}

bool same_grid(const GridFunction& f, const GridFunction& g)
{
    return f.grid == g.grid || *f.grid == *g.grid;
}

GridFunction combine(Complex a, const GridFunction& f, Complex b, const GridFunction& g)
{
    if (!same_grid(f, g)) {
        throw std::invalid_argument("linear combination of functions on different grids");
    }
    std::optional<Complex> inf;
    if (f.value_at_infinity) {
        inf = a * *f.value_at_infinity + b * *g.value_at_infinity;
    }
    GridFunction out(f.grid, a * f.values + b * g.values, inf);
    out.notes = f.notes;
    for (const auto& n : g.notes) out.note(n);
    return out;
}

GridFunction operator+(const GridFunction& f, const GridFunction& g) { return combine(1.0, f, 1.0, g); }
GridFunction operator-(const GridFunction& f, const GridFunction& g) { return combine(1.0, f, -1.0, g); }

GridFunction operator*(Complex a, const GridFunction& f)
{
    std::optional<Complex> inf;
    if (f.value_at_infinity) inf = a * *f.value_at_infinity;
    return f.with_values(a * f.values, inf);
}

Complex evaluate(const GridFunction& f, double x, const QuadratureRule& rule)
{
    const Grid& g = f.mesh();
    if (const auto k = g.find_node(x)) {
        return f.values[*k];
    }
    if (x > g.back()) {
        if (f.value_at_infinity) return *f.value_at_infinity;
        throw std::out_of_range("evaluation point beyond the grid");
    }
    if (x < g.front()) {
        throw std::out_of_range("evaluation point before the first node");
    }
    const auto panels = panel_layout(g, rule);
    auto it = std::upper_bound(panels.begin(), panels.end(), x,
                               [&](double v, const Panel& p) { return v < g.node(p.first); });
    const Panel& p = *(it - 1);
    Complex acc = 0.0;
    for (int l = 0; l <= p.width; ++l) {
        const double xl = g.node(p.first + l);
        double basis = 1.0;
        for (int m = 0; m <= p.width; ++m) {
            if (m != l) basis *= (x - g.node(p.first + m)) / (xl - g.node(p.first + m));
        }
        acc += basis * f.values[p.first + l];
    }
    return acc;
}

GridFunction restrict_to(const GridFunction& f, double j, const QuadratureRule& rule)
{
    const Grid& g = f.mesh();
    if (!(j > g.front()) || j > g.back() * (1.0 + 1e-12)) {
        throw std::out_of_range("restriction point outside the grid support");
    }
    if (const auto k = g.find_node(j)) {
        if (*k < 2) {
            throw std::out_of_range("restriction keeps fewer than two intervals");
        }
        GridFunction out(share(g.truncated(*k)), f.values.head(*k + 1));
        out.notes = f.notes;
        return out;
    }
    const Complex fj = evaluate(f, j, rule);
    Grid refined = g.with_node(j);
    const int k = *refined.find_node(j);
    ComplexVector v(k + 1);
    v.head(k) = f.values.head(k);
    v[k] = fj;
    GridFunction out(share(refined.truncated(k)), std::move(v));
    out.notes = f.notes;
    std::ostringstream os;
    os << "node inserted at x=" << j << " by panel Lagrange interpolation";
    out.note(os.str());
    return out;
}

} // namespace cesaro
