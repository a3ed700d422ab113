#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cesaro/grid.hpp"
#include "cesaro/types.hpp"

namespace cesaro {

enum class QuadratureScheme { Trapezoid, Simpson, GaussLegendre };

/// Composite interpolatory rule. Each panel spans `panel_width()` grid
/// intervals; the integrand is replaced by its Lagrange interpolant through
/// the panel nodes and that polynomial is integrated exactly with
/// Gauss-Legendre points, so cumulative values at interior panel nodes are
/// available as well as panel totals.
class QuadratureRule {
public:
    static QuadratureRule trapezoid();
    static QuadratureRule simpson();
    static QuadratureRule gauss_legendre(int points = 4);

    /// "trapezoid", "simpson", "gl", "gl6", "gauss-legendre:6".
    static QuadratureRule parse(std::string_view text);

    QuadratureScheme scheme() const { return scheme_; }
    int order() const { return order_; }
    int panel_width() const;
    /// Polynomial degree integrated exactly over a full panel.
    int degree() const;
    std::string name() const;

    /// Scales every quadrature weight by (1 + delta). Only used to check that
    /// the self-test notices broken weights.
    QuadratureRule with_weight_perturbation(double delta) const;
    double weight_perturbation() const { return perturbation_; }

    friend bool operator==(const QuadratureRule&, const QuadratureRule&) = default;

private:
    QuadratureRule(QuadratureScheme s, int order) : scheme_(s), order_(order) {}

    QuadratureScheme scheme_;
    int order_;
    double perturbation_ = 0.0;
};

struct Panel {
    int first = 0;
    int width = 0;
    int last() const { return first + width; }
};

/// Panels never straddle a grid break. A segment shorter than the nominal
/// width becomes one narrow panel; a leftover of r intervals at the end of a
/// segment is absorbed into the segment's last panel.
std::vector<Panel> panel_layout(const Grid& grid, const QuadratureRule& rule);

struct GaussLegendreTable {
    RealVector nodes;   // on [-1, 1]
    RealVector weights;
};

/// Golub-Welsch nodes and weights.
GaussLegendreTable gauss_legendre_table(int points);

enum class TailPolicy {
    Strict,  ///< non-integrable fits throw NotIntegrableError
    Lenient  ///< non-integrable fits fall back to a locally constant model
};

/// ∫_0^{x0} t^{-xi} f(t) dt under the power-law model f ≈ f0 (t/x0)^b, with b
/// fitted from (x0, f0) and (x1, f1). Exact when f is a pure power.
Complex origin_tail(double x0, double x1, Complex f0, Complex f1, Complex xi, TailPolicy policy);

/// Cumulative weighted integrals on a fixed grid,
///   forward:  F_i = ∫_0^{x_i}   t^{-xi} f(t) dt
///   backward: G_i = ∫_{x_i}^{x_N} t^{-xi} f(t) dt
/// Stencils are built once and reused for every sampled f.
///
/// When the grid starts at 0 the first panel integrates the weight exactly
/// against the interpolant (needs Re xi < 1 for forward sums). When it starts
/// at an offset x_0 > 0, forward sums begin with origin_tail().
class RunningIntegral {
public:
    RunningIntegral(GridPtr grid, QuadratureRule rule, Complex xi = 0.0, TailPolicy policy = TailPolicy::Strict);

    const Grid& grid() const { return *grid_; }
    const QuadratureRule& rule() const { return rule_; }
    Complex weight_exponent() const { return xi_; }
    bool forward_available() const { return forward_ok_; }

    ComplexVector forward(const ComplexVector& f) const;

    /// Entry 0 is NaN when the grid starts at 0 and Re xi >= 1.
    ComplexVector backward(const ComplexVector& f) const;

    /// Linear map f -> F with the tail frozen at b = 0 (for operator matrices).
    ComplexMatrix forward_matrix() const;

    /// Sum of all forward weights on [x_0, x_N]; equals x_N - x_0 when xi = 0.
    Complex total_weight() const;

private:
    struct Block {
        Panel panel;
        ComplexMatrix forward;   // row k: ∫_{y0}^{yk}, k = 0..w
        ComplexMatrix backward;  // row k: ∫_{yk}^{yw}, k = 0..w
    };

    GridPtr grid_;
    QuadratureRule rule_;
    Complex xi_;
    TailPolicy policy_;
    bool forward_ok_ = true;
    std::vector<Block> blocks_;
};

/// ∫_{x_0}^{x_N} f over the grid (no origin tail), unweighted.
Complex integrate(const Grid& grid, const ComplexVector& f, const QuadratureRule& rule);

} // namespace cesaro
