#pragma once

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace cesaro {

using Complex = std::complex<double>;
using RealVector = Eigen::VectorXd;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

/// Raised when an integrand is not integrable at the origin (e.g. x^a with Re a <= -1).
class NotIntegrableError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when a spectral parameter falls on (or numerically too close to) the
/// critical circle where the resolvent formulas break down.
class CriticalCircleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Largest modulus over an Eigen expression.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& v)
{
    return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
}

} // namespace cesaro
