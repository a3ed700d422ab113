#pragma once
// Reference values computed without the library's quadrature: Boost adaptive
// rules straight on the closed-form integrands.

#include <cmath>
#include <complex>
#include <functional>
#include <limits>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

namespace oracle {

using Complex = std::complex<double>;
using Fn = std::function<Complex(double)>;

inline double smooth(const std::function<double(double)>& f, double a, double b)
{
    if (a == b) return 0.0;
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 15, 1e-14);
}

// endpoint singularities allowed
inline double singular(const std::function<double(double)>& f, double a, double b)
{
    if (a == b) return 0.0;
    boost::math::quadrature::tanh_sinh<double> ts;
    return ts.integrate(f, a, b);
}

inline Complex csingular(const Fn& f, double a, double b)
{
    return {singular([&](double t) { return f(t).real(); }, a, b), singular([&](double t) { return f(t).imag(); }, a, b)};
}

inline Complex csmooth(const Fn& f, double a, double b)
{
    return {smooth([&](double t) { return f(t).real(); }, a, b), smooth([&](double t) { return f(t).imag(); }, a, b)};
}

// ∫_a^inf
inline Complex ctail(const Fn& f, double a)
{
    boost::math::quadrature::exp_sinh<double> es;
    auto re = [&](double t) { return f(t).real(); };
    auto im = [&](double t) { return f(t).imag(); };
    return {es.integrate(re, a, std::numeric_limits<double>::infinity()),
            es.integrate(im, a, std::numeric_limits<double>::infinity())};
}

// (C f)(x) = (1/x) ∫_0^x f
inline Complex cesaro_at(const Fn& f, double x) { return x == 0.0 ? f(0.0) : csingular(f, 0.0, x) / x; }

} // namespace oracle
