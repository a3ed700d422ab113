#pragma once

#include <vector>

#include "cesaro/cesaro_op.hpp"
#include "cesaro/experiment_report.hpp"
#include "cesaro/grid_function.hpp"
#include "cesaro/parse.hpp"

namespace cesaro {

inline constexpr double kDefaultTolerance = 1e-4;

/// series[n] = ||C^n f - f(0) 1||: sup on [0,1] for C01, the largest sup
/// seminorm q_1..q_J for C(R+) and Cl (per-j series in `extra`). Consistent
/// when the last value is below tolerance * max(1, ||f||).
ExperimentReport iterate_convergence(const GridFunction& f, const SpaceSpec& spec, int n_max,
                                     const QuadratureRule& rule = QuadratureRule::gauss_legendre(),
                                     double tolerance = kDefaultTolerance, int J = 3);

/// series[n] = ||C_[n] f - f(0) 1|| on the C-type spaces, ||C_[n] f|| on the
/// L^p spaces. On Cl the means are measured on [0,j], j <= J, and compared with
/// their value at infinity; metrics carry the gap between the two.
ExperimentReport mean_ergodic_experiment(const GridFunction& f, const SpaceSpec& spec, int n_max,
                                         const QuadratureRule& rule = QuadratureRule::gauss_legendre(),
                                         double tolerance = kDefaultTolerance, int J = 3);

/// series[n] = max over trials of ||C^n f|| / ||f||, a lower bound for ||C^n||.
ExperimentReport norm_growth(const SpaceSpec& spec, int n_max, const std::vector<GridFunction>& trials,
                             const QuadratureRule& rule = QuadratureRule::gauss_legendre(),
                             double tolerance = kDefaultTolerance);

/// The Hardy near-extremal trial x^(-1/p + eps) on a grid that resolves it.
GridFunction hardy_trial(const SpaceSpec& spec, double eps = 0.05, int intervals = 2048);

/// series[i] = ∫_{eps_i}^{1/2} g(t)/t dt for g = neg_inv_log, against the
/// closed form log(-log eps) - log(log 2).
ExperimentReport range_counterexample(const std::vector<double>& eps_list,
                                      const QuadratureRule& rule = QuadratureRule::gauss_legendre(),
                                      double tolerance = 1e-6, int intervals = 512);

/// Builds h = sum_j a_j witness_g(M, j) with ||psi - h||_inf <= eps for psi
/// vanishing at 0 and at infinity (Cl model).
ExperimentReport range_density_witness(const GridFunction& psi, double eps,
                                       const QuadratureRule& rule = QuadratureRule::gauss_legendre(),
                                       int max_degree = 64);

/// Roots of unity lambda = exp(2 pi i theta) as eigenvalues on L^p_loc, with
/// the periodicity check C^d g = g for d the denominator of theta.
ExperimentReport periodic_points(const std::vector<Rational>& thetas, double p,
                                 const QuadratureRule& rule = QuadratureRule::gauss_legendre(), int intervals = 2048,
                                 int J = 3, double single_tolerance = 1e-5, double periodic_tolerance = 1e-4);

/// series[k] = q_J(target - best approximation from span{x^a_1..x^a_k}) / q_J(target).
/// The projection is the L^2(0,J) one (quadrature Gram matrix) with a
/// relative ridge 1e-12 * trace.
ExperimentReport density_probe(const GridFunction& target, const std::vector<Complex>& alphas, double p,
                               const QuadratureRule& rule = QuadratureRule::gauss_legendre(), int J = 3,
                               double tolerance = kDefaultTolerance);

/// series[n] = ||C^n f||, n = 0..n_max. A demonstration; the verdict is
/// always inconclusive.
ExperimentReport orbit_growth(const GridFunction& f, const SpaceSpec& spec, int n_max,
                              const QuadratureRule& rule = QuadratureRule::gauss_legendre());

/// Restriction or scaling commutation residuals for each j.
ExperimentReport commutation_experiment(const GridFunction& f, const std::vector<double>& j_list,
                                        Conjugation which, const SpaceSpec& spec,
                                        const QuadratureRule& rule = QuadratureRule::gauss_legendre(),
                                        double tolerance = 1e-8);

/// max_i |C^n f/n - (C_[n] f - (n-1)/n C_[n-1] f)| at the nodes (n >= 2).
double telescoping_residual(const GridFunction& f, int n,
                            const QuadratureRule& rule = QuadratureRule::gauss_legendre());

} // namespace cesaro
