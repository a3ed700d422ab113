#pragma once

#include <map>
#include <string>
#include <vector>

#include "cesaro/grid_function.hpp"
#include "cesaro/space.hpp"

namespace cesaro {

/// P_xi f(x) = ∫_0^1 s^-xi f(xs) ds, evaluated as x^(xi-1) ∫_0^x t^-xi f(t) dt
/// on the nodes themselves (no interpolation of f is needed). Requires
/// Re xi < 1. P_xi f(0) = f(0)/(1-xi); value at infinity f(inf)/(1-xi).
GridFunction apply_P_xi(const GridFunction& f, Complex xi,
                        const QuadratureRule& rule = QuadratureRule::gauss_legendre());

/// Q_xi f(x) = ∫_1^inf s^-xi f(xs) ds = x^(xi-1) ∫_x^inf t^-xi f(t) dt. The
/// piece beyond the last node R is f(inf) R^(1-xi)/(xi-1) when f carries a
/// value at infinity and is dropped (with a note) otherwise. Requires
/// Re xi > min_real_part; the default 1 is the C-space bound.
GridFunction apply_Q_xi(const GridFunction& f, Complex xi,
                        const QuadratureRule& rule = QuadratureRule::gauss_legendre(), double min_real_part = 1.0);

/// The value c with critical circle Re(1/lambda) = c: 1 on C-spaces, 1/q on L^p.
double critical_real_part(const SpaceSpec& spec);

/// |Re(1/lambda) - c| below this counts as on the critical circle.
inline constexpr double kCriticalTolerance = 1e-3;

enum class ResolventBranch { P, Q };

/// Which resolvent formula applies at lambda; throws CriticalCircleError on
/// the critical circle and std::domain_error when lambda is in the spectrum
/// (interior of the disc on C01, C(R+), L^p(0,1), L^p_loc) or lambda = 0.
ResolventBranch resolvent_branch(Complex lambda, const SpaceSpec& spec);

/// (lambda I - C)^-1 f = f/lambda + P_{1/lambda} f / lambda^2    (P branch)
///                     = f/lambda - Q_{1/lambda} f / lambda^2    (Q branch)
GridFunction resolvent_apply(const GridFunction& f, Complex lambda, const SpaceSpec& spec,
                             const QuadratureRule& rule = QuadratureRule::gauss_legendre());

/// ||(lambda I - C) R f - f|| in the space norm (max of q_1..q_3 on Frechet spaces).
double resolvent_residual(const GridFunction& f, Complex lambda, const SpaceSpec& spec,
                          const QuadratureRule& rule = QuadratureRule::gauss_legendre());

/// ||R (lambda I - C) f - f||.
double resolvent_left_residual(const GridFunction& f, Complex lambda, const SpaceSpec& spec,
                               const QuadratureRule& rule = QuadratureRule::gauss_legendre());

enum class Membership { Yes, No, Boundary };
std::string to_string(Membership m);

/// g_lambda(x) = x^alpha with alpha = 1/lambda - 1.
struct Eigenfunction {
    Complex lambda;
    Complex alpha;
    std::map<std::string, Membership> membership; // keyed by SpaceSpec::key()
};

Membership eigen_membership(Complex lambda, const SpaceSpec& spec);
Eigenfunction eigenfunction(Complex lambda, double p = 2.0);

/// Grid on which x^alpha is resolved: uniform for alpha a nonnegative
/// integer, otherwise geometric with step in log x at most 0.015/|alpha+1|
/// (and at most 16 decades overall). Breaks at the integers below the extent.
GridPtr eigen_grid(Complex alpha, const Domain& domain, int intervals);

/// ||C g - lambda g|| / ||g||; for the Frechet spaces the max over j <= J of
/// q_j(C g - lambda g) / q_j(g). Throws when g_lambda is not a member.
double eigen_residual(Complex lambda, const SpaceSpec& spec,
                      const QuadratureRule& rule = QuadratureRule::gauss_legendre(), int intervals = 2048, int J = 3);

} // namespace cesaro
