#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cesaro/grid_function.hpp"
#include "cesaro/space.hpp"

namespace cesaro {

enum class NamedKind { One, Monomial, Power, NegInvLog, CosOver1px, PlateauH, WitnessG };

/// The test functions used throughout:
///   one, monomial(n) = x^n, power(a) = x^a,
///   neg_inv_log = -1/log x on (0,1/2], 1/log 2 on [1/2,1], 0 at 0,
///   cos_over_1px = cos(x)/(1+x),
///   plateau_h(m,n) = x^n on [0,m], m^n beyond,
///   witness_g(m,n) = x^n on [0,m], m^(n+1)/x beyond.
struct NamedFunction {
    NamedKind kind = NamedKind::One;
    int n = 0;
    double m = 0.0;
    Complex alpha = 0.0;

    static NamedFunction one() { return {}; }
    static NamedFunction monomial(int n);
    static NamedFunction power(Complex alpha);
    static NamedFunction neg_inv_log() { return {NamedKind::NegInvLog}; }
    static NamedFunction cos_over_1px() { return {NamedKind::CosOver1px}; }
    static NamedFunction plateau_h(double m, int n);
    static NamedFunction witness_g(double m, int n);

    /// "one", "monomial:3", "power:0.5+1i", "neg_inv_log", "cos_over_1px",
    /// "plateau_h:2,1", "witness_g:2,1".
    static NamedFunction parse(std::string_view text);
    std::string name() const;

    /// Throws std::domain_error where the function is not evaluable
    /// (x^a at 0 with Re a <= 0, a != 0; neg_inv_log outside [0,1]).
    Complex operator()(double x) const;

    std::optional<Complex> limit_at_infinity() const;
    std::vector<double> breakpoints() const;
    bool singular_at_origin() const;
    bool integrable_at_origin() const;
};

/// Samples `fn` on `grid`. Missing breakpoint nodes are inserted (and noted);
/// on half-line-with-limit domains the limit becomes the value at infinity.
GridFunction build_named_function(const NamedFunction& fn, GridPtr grid);

/// A grid suited to `fn` on `domain`: uniform with breakpoints forced, or
/// geometric from 1e-16·extent when fn is singular at the origin.
GridPtr grid_for(const NamedFunction& fn, const Domain& domain, int intervals);

/// Working grid for a space with `intervals` intervals in total:
///   C01, Lp01        uniform on [0,1], node at 1/2
///   C(R+), L^p_loc   uniform on [0,3], breaks at 1 and 2
///   Cl, L^p(R+)      R = 50; geometric from 1e-24 to 1/2 on a quarter of the
///                    intervals, uniform beyond, breaks at 1 and 2
GridPtr standard_grid(const SpaceSpec& spec, int intervals);

/// Functions used to probe resolvent identities on each space.
std::vector<NamedFunction> resolvent_corpus(const SpaceSpec& spec);

/// The bounded functions on [0,1] used for sup-norm checks.
std::vector<NamedFunction> sup_corpus();

} // namespace cesaro
