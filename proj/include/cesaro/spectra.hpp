#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cesaro/grid.hpp"
#include "cesaro/quadrature.hpp"
#include "cesaro/space.hpp"

namespace cesaro {

enum class RegionShape { Disc, Circle };
enum class PointSpectrumShape { DiscMinusZero, OpenDisc, SingletonOne, Empty };

std::string to_string(RegionShape s);
std::string to_string(PointSpectrumShape s);

/// Known spectrum of C on a space: a closed disc or a circle through 0 with
/// center c and radius c, plus the shape of the point spectrum.
struct SpectralRegion {
    SpaceSpec space;
    RegionShape shape = RegionShape::Disc;
    Complex center;
    double radius = 0.0;
    bool closed = true;
    PointSpectrumShape point = PointSpectrumShape::DiscMinusZero;

    /// Signed distance to the boundary circle (negative inside).
    double boundary_distance(Complex lambda) const;
    bool in_spectrum(Complex lambda, double tol = 0.0) const;
    bool in_point_spectrum(Complex lambda) const;
    std::string describe() const;
};

SpectralRegion analytic_region(const SpaceSpec& spec);

enum class SpectralClass { PointSpectrum, ContinuousSpectrum, Resolvent, Critical };
std::string to_string(SpectralClass c);

/// Classification of lambda against the analytic region. Points with
/// |Re(1/lambda) - c| below the critical tolerance are Critical; lambda = 1
/// on the Cl circle is PointSpectrum.
SpectralClass classify(Complex lambda, const SpaceSpec& spec);

enum class BasisKind { Monomial, Grid };

/// Dense finite section of C.
struct OperatorMatrix {
    BasisKind basis = BasisKind::Monomial;
    SpaceSpec space;
    ComplexMatrix entries;
    double extent = 1.0;                 // j of the section C_j for the monomial basis
    GridPtr grid;                        // grid basis only
    std::optional<QuadratureRule> rule;  // grid basis only

    Eigen::Index size() const { return entries.rows(); }
    std::string describe() const;
};

inline constexpr int kDenseCap = 4096;

/// diag(1, 1/2, ..., 1/N) in the basis (x/j)^k, k = 0..N-1. Independent of j.
OperatorMatrix discretize_monomial(const SpaceSpec& spec, int N, double extent = 1.0);

/// The quadrature matrix of f -> C f at the nodes of `grid`:
/// row i = (cumulative weights up to x_i) / x_i, and row 0 = e_0 when x_0 = 0.
/// On offset grids the origin piece uses the locally constant model.
OperatorMatrix discretize_grid(const SpaceSpec& spec, const GridPtr& grid,
                               const QuadratureRule& rule = QuadratureRule::gauss_legendre(), int cap = kDenseCap);

bool is_triangular(const ComplexMatrix& m);

/// All eigenvalues; triangular matrices short-circuit to their diagonal.
std::vector<Complex> eigenvalues(const OperatorMatrix& m);
std::vector<Complex> eigenvalues(const ComplexMatrix& m);

struct EigenPair {
    Complex value;
    ComplexVector vector; // unit 2-norm
    double residual = 0.0; // ||M v - value v||_2
};

/// Eigenpairs from the complex Schur form (Hessenberg reduction + shifted QR).
std::vector<EigenPair> eigenpairs(const ComplexMatrix& m);

/// Largest singular value.
double spectral_norm(const ComplexMatrix& m);

} // namespace cesaro
