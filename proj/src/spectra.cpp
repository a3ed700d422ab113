#include "cesaro/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "cesaro/resolvent.hpp"

namespace cesaro {

std::string to_string(RegionShape s)
{
    return s == RegionShape::Disc ? "disc" : "circle";
}

std::string to_string(PointSpectrumShape s)
{
    switch (s) {
    case PointSpectrumShape::DiscMinusZero: return "disc-minus-zero";
    case PointSpectrumShape::OpenDisc: return "open-disc";
    case PointSpectrumShape::SingletonOne: return "singleton-one";
    case PointSpectrumShape::Empty: return "empty";
    }
    return "?";
}

double SpectralRegion::boundary_distance(Complex lambda) const
{
    return std::abs(lambda - center) - radius;
}

bool SpectralRegion::in_spectrum(Complex lambda, double tol) const
{
    const double d = boundary_distance(lambda);
    if (shape == RegionShape::Circle) return std::abs(d) <= tol;
    return d <= tol;
}

bool SpectralRegion::in_point_spectrum(Complex lambda) const
{
    switch (point) {
    case PointSpectrumShape::DiscMinusZero:
        // interior plus lambda = 1; the rest of the boundary is left to eigen_membership
        return lambda != Complex(0.0) && (boundary_distance(lambda) < 0.0 || lambda == Complex(1.0));
    case PointSpectrumShape::OpenDisc: return boundary_distance(lambda) < 0.0;
    case PointSpectrumShape::SingletonOne: return lambda == Complex(1.0);
    case PointSpectrumShape::Empty: return false;
    }
    return false;
}

std::string SpectralRegion::describe() const
{
    std::ostringstream os;
    os << (shape == RegionShape::Disc ? "closed disc" : "circle") << " |lambda - " << center.real()
       << "| " << (shape == RegionShape::Disc ? "<=" : "=") << " " << radius << ", point spectrum "
       << to_string(point);
    return os.str();
}

SpectralRegion analytic_region(const SpaceSpec& spec)
{
    SpectralRegion r;
    r.space = spec;
    const double half = spec.q() / 2.0;
    r.center = half;
    r.radius = half;
    switch (spec.space) {
    case Space::C01:
    case Space::CPlus:
        r.shape = RegionShape::Disc;
        r.point = PointSpectrumShape::DiscMinusZero;
        break;
    case Space::Lp01:
    case Space::LpLoc:
        r.shape = RegionShape::Disc;
        r.point = PointSpectrumShape::OpenDisc;
        break;
    case Space::LpHalf:
        r.shape = RegionShape::Circle;
        r.point = PointSpectrumShape::Empty;
        break;
    case Space::Cl:
        r.shape = RegionShape::Circle;
        r.point = PointSpectrumShape::SingletonOne;
        break;
    }
    return r;
}

std::string to_string(SpectralClass c)
{
    switch (c) {
    case SpectralClass::PointSpectrum: return "point_spectrum";
    case SpectralClass::ContinuousSpectrum: return "continuous_spectrum";
    case SpectralClass::Resolvent: return "resolvent";
    case SpectralClass::Critical: return "critical";
    }
    return "?";
}

SpectralClass classify(Complex lambda, const SpaceSpec& spec)
{
    if (lambda == Complex(0.0)) return SpectralClass::ContinuousSpectrum;
    if (spec.space == Space::Cl && std::abs(lambda - 1.0) <= 1e-14) return SpectralClass::PointSpectrum;
    // |lambda - q/2| < q/2  <=>  Re(1/lambda) > 1/q
    const double c = critical_real_part(spec);
    const double re = (1.0 / lambda).real();
    if (std::abs(re - c) < kCriticalTolerance) return SpectralClass::Critical;
    if (re < c) return SpectralClass::Resolvent;
    const SpectralRegion region = analytic_region(spec);
    return region.shape == RegionShape::Disc ? SpectralClass::PointSpectrum : SpectralClass::Resolvent;
}

std::string OperatorMatrix::describe() const
{
    std::ostringstream os;
    if (basis == BasisKind::Monomial) {
        os << "monomial(" << size() << ") on [0," << extent << "]";
    } else {
        os << "grid(" << size() << ", " << rule->name() << ")";
    }
    return os.str();
}

OperatorMatrix discretize_monomial(const SpaceSpec& spec, int N, double extent)
{
    if (N < 1) throw std::invalid_argument("monomial discretization needs N >= 1");
    if (N > kDenseCap) throw std::invalid_argument("N exceeds the dense storage cap");
    if (!(extent > 0.0)) throw std::invalid_argument("section extent must be positive");
    OperatorMatrix m;
    m.basis = BasisKind::Monomial;
    m.space = spec;
    m.extent = extent;
    m.entries = ComplexMatrix::Zero(N, N);
    // C (x/j)^k = (x/j)^k / (k+1) whatever j is
    for (int k = 0; k < N; ++k) m.entries(k, k) = 1.0 / (k + 1.0);
    return m;
}

OperatorMatrix discretize_grid(const SpaceSpec& spec, const GridPtr& grid, const QuadratureRule& rule, int cap)
{
    if (grid->size() > cap) {
        std::ostringstream os;
        os << "grid discretization of size " << grid->size() << " exceeds the dense cap " << cap;
        throw std::invalid_argument(os.str());
    }
    spec.require(grid->domain());
    RunningIntegral ri(grid, rule, 0.0, TailPolicy::Lenient);
    ComplexMatrix W = ri.forward_matrix();
    const RealVector& x = grid->nodes();
    for (Eigen::Index i = 0; i < W.rows(); ++i) {
        if (x[i] == 0.0) {
            W.row(i).setZero();
            W(i, i) = 1.0;
        } else {
            W.row(i) /= x[i];
        }
    }
    OperatorMatrix m;
    m.basis = BasisKind::Grid;
    m.space = spec;
    m.extent = grid->back();
    m.entries = std::move(W);
    m.grid = grid;
    m.rule = rule;
    return m;
}

bool is_triangular(const ComplexMatrix& m)
{
    const Eigen::Index n = m.rows();
    bool lower = true, upper = true;
    for (Eigen::Index j = 0; j < n && (lower || upper); ++j) {
        for (Eigen::Index i = 0; i < n; ++i) {
            if (m(i, j) == Complex(0.0)) continue;
            if (i < j) lower = false;
            if (i > j) upper = false;
        }
    }
    return lower || upper;
}

namespace {

void check_matrix(const ComplexMatrix& m)
{
    if (m.rows() != m.cols()) throw std::invalid_argument("eigenvalues need a square matrix");
    if (m.rows() > kDenseCap) throw std::invalid_argument("matrix exceeds the dense storage cap");
    if (!m.allFinite()) throw std::invalid_argument("matrix has non-finite entries");
}

} // namespace

std::vector<Complex> eigenvalues(const ComplexMatrix& m)
{
    check_matrix(m);
    std::vector<Complex> out;
    out.reserve(m.rows());
    if (is_triangular(m)) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) out.push_back(m(i, i));
        return out;
    }
    Eigen::ComplexEigenSolver<ComplexMatrix> es(m, false);
    if (es.info() != Eigen::Success) throw std::runtime_error("eigenvalue iteration did not converge");
    for (Eigen::Index i = 0; i < m.rows(); ++i) out.push_back(es.eigenvalues()[i]);
    return out;
}

std::vector<Complex> eigenvalues(const OperatorMatrix& m)
{
    return eigenvalues(m.entries);
}

std::vector<EigenPair> eigenpairs(const ComplexMatrix& m)
{
    check_matrix(m);
    Eigen::ComplexEigenSolver<ComplexMatrix> es(m, true);
    if (es.info() != Eigen::Success) throw std::runtime_error("eigenvalue iteration did not converge");
    std::vector<EigenPair> out;
    out.reserve(m.rows());
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        EigenPair p;
        p.value = es.eigenvalues()[i];
        p.vector = es.eigenvectors().col(i);
        const double nv = p.vector.norm();
        if (nv > 0.0) p.vector /= nv;
        p.residual = (m * p.vector - p.value * p.vector).norm();
        out.push_back(std::move(p));
    }
    return out;
}

double spectral_norm(const ComplexMatrix& m)
{
    if (m.size() == 0) return 0.0;
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    return svd.singularValues()[0];
}

} // namespace cesaro
