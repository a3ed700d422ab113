#include "cesaro/quadrature.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace cesaro {

QuadratureRule QuadratureRule::trapezoid() { return {QuadratureScheme::Trapezoid, 1}; }

QuadratureRule QuadratureRule::simpson() { return {QuadratureScheme::Simpson, 2}; }

QuadratureRule QuadratureRule::gauss_legendre(int points)
{
    if (points < 1 || points > 16) {
        throw std::invalid_argument("Gauss-Legendre order must be in [1, 16]");
    }
    return {QuadratureScheme::GaussLegendre, points};
}

QuadratureRule QuadratureRule::parse(std::string_view text)
{
    std::string s(text);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    if (s == "trapezoid" || s == "trap") return trapezoid();
    if (s == "simpson") return simpson();
    if (s == "gl" || s == "gauss-legendre") return gauss_legendre();
    std::string_view digits;
    if (s.rfind("gauss-legendre:", 0) == 0) {
        digits = std::string_view(s).substr(15);
    } else if (s.rfind("gl", 0) == 0) {
        digits = std::string_view(s).substr(2);
    } else {
        throw std::invalid_argument("unknown quadrature scheme '" + std::string(text) + "'");
    }
    int n = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
        throw std::invalid_argument("bad Gauss-Legendre order in '" + std::string(text) + "'");
    }
    return gauss_legendre(n);
}

int QuadratureRule::panel_width() const { return order_; }

int QuadratureRule::degree() const
{
    switch (scheme_) {
    case QuadratureScheme::Trapezoid: return 1;
    case QuadratureScheme::Simpson: return 3;
    case QuadratureScheme::GaussLegendre: return order_ % 2 == 0 ? order_ + 1 : order_;
    }
    return 0;
}

std::string QuadratureRule::name() const
{
    std::string base;
    switch (scheme_) {
    case QuadratureScheme::Trapezoid: base = "trapezoid"; break;
    case QuadratureScheme::Simpson: base = "simpson"; break;
    case QuadratureScheme::GaussLegendre: base = "gl" + std::to_string(order_); break;
    }
    if (perturbation_ != 0.0) base += "(perturbed)";
    return base;
}

QuadratureRule QuadratureRule::with_weight_perturbation(double delta) const
{
    QuadratureRule r = *this;
    r.perturbation_ = delta;
    return r;
}

std::vector<Panel> panel_layout(const Grid& grid, const QuadratureRule& rule)
{
    const int m = rule.panel_width();
    std::vector<Panel> panels;
    const auto& br = grid.breaks();
    for (std::size_t s = 0; s + 1 < br.size(); ++s) {
        const int a = br[s];
        const int len = br[s + 1] - a;
        if (len <= m) {
            panels.push_back({a, len});
            continue;
        }
        const int full = len / m;
        const int rest = len % m;
        for (int k = 0; k < full; ++k) {
            panels.push_back({a + k * m, m});
        }
        panels.back().width += rest;
    }
    return panels;
}

GaussLegendreTable gauss_legendre_table(int points)
{
    if (points < 1) {
        throw std::invalid_argument("Gauss-Legendre needs at least one point");
    }
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(points, points);
    for (int k = 1; k < points; ++k) {
        const double b = k / std::sqrt(4.0 * k * k - 1.0);
        J(k, k - 1) = b;
        J(k - 1, k) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    GaussLegendreTable t;
    t.nodes = es.eigenvalues();
    t.weights = 2.0 * es.eigenvectors().row(0).transpose().array().square();
    return t;
}

Complex origin_tail(double x0, double x1, Complex f0, Complex f1, Complex xi, TailPolicy policy)
{
    if (f0 == Complex(0.0)) {
        return 0.0;
    }
    Complex b = std::log(f1 / f0) / std::log(x1 / x0);
    if (!std::isfinite(b.real()) || !std::isfinite(b.imag())) {
        b = 0.0;
    }
    Complex d = b + 1.0 - xi;
    if (d.real() <= 0.0) {
        if (policy == TailPolicy::Strict) {
            throw NotIntegrableError("integrand is not integrable at the origin (fitted exponent " +
                                     std::to_string(b.real()) + ")");
        }
        d = 1.0 - xi;
        if (d.real() <= 0.0) {
            throw NotIntegrableError("weight t^-xi is not integrable at the origin");
        }
    }
    return std::exp((1.0 - xi) * std::log(x0)) * f0 / d;
}

namespace {

double lagrange(const RealVector& u, int l, double t)
{
    double v = 1.0;
    for (Eigen::Index m = 0; m < u.size(); ++m) {
        if (m != l) v *= (t - u[m]) / (u[l] - u[m]);
    }
    return v;
}

// Row of ∫_{a}^{b} wt(y0 + H u) L_l(u) H du over l, with GL in u.
Eigen::RowVectorXcd gl_row(const RealVector& u, double y0, double H, double a, double b, Complex xi,
                           const GaussLegendreTable& gl)
{
    Eigen::RowVectorXcd row = Eigen::RowVectorXcd::Zero(u.size());
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    for (Eigen::Index g = 0; g < gl.nodes.size(); ++g) {
        const double s = mid + half * gl.nodes[g];
        Complex w = gl.weights[g] * half * H;
        if (xi != Complex(0.0)) {
            w *= std::exp(-xi * std::log(y0 + H * s));
        }
        for (Eigen::Index l = 0; l < u.size(); ++l) {
            row[l] += w * lagrange(u, static_cast<int>(l), s);
        }
    }
    return row;
}

} // namespace

RunningIntegral::RunningIntegral(GridPtr grid, QuadratureRule rule, Complex xi, TailPolicy policy)
    : grid_(std::move(grid)), rule_(rule), xi_(xi), policy_(policy)
{
    if (!grid_) {
        throw std::invalid_argument("running integral needs a grid");
    }
    const bool weighted = xi_ != Complex(0.0);
    const auto& x = grid_->nodes();
    const double scale = 1.0 + rule_.weight_perturbation();
    if (grid_->starts_at_origin() && xi_.real() >= 1.0) {
        forward_ok_ = false;
    }

    int cached_points = -1;
    GaussLegendreTable gl;
    for (const Panel& p : panel_layout(*grid_, rule_)) {
        const int w = p.width;
        int points = std::max(rule_.order(), (w + 2) / 2);
        if (weighted) points += 12;
        if (points != cached_points) {
            gl = gauss_legendre_table(points);
            cached_points = points;
        }
        const double y0 = x[p.first];
        const double H = x[p.last()] - y0;
        RealVector u(w + 1);
        for (int l = 0; l <= w; ++l) {
            u[l] = (x[p.first + l] - y0) / H;
        }
        u[w] = 1.0;

        Block blk{p, ComplexMatrix::Zero(w + 1, w + 1), ComplexMatrix::Zero(w + 1, w + 1)};
        const bool singular_origin = weighted && y0 == 0.0;
        if (singular_origin && forward_ok_) {
            // Exact moments of u^-xi against the monomial expansion of each basis polynomial.
            Eigen::MatrixXd V(w + 1, w + 1);
            for (int i = 0; i <= w; ++i) {
                for (int j = 0; j <= w; ++j) V(i, j) = std::pow(u[i], j);
            }
            const Eigen::MatrixXd coef = V.fullPivLu().inverse();
            const Complex hpow = std::exp((1.0 - xi_) * std::log(H));
            for (int k = 1; k <= w; ++k) {
                const double lu = std::log(u[k]);
                for (int l = 0; l <= w; ++l) {
                    Complex acc = 0.0;
                    for (int j = 0; j <= w; ++j) {
                        const Complex e = static_cast<double>(j) + 1.0 - xi_;
                        acc += coef(j, l) * std::exp(e * lu) / e;
                    }
                    blk.forward(k, l) = hpow * acc;
                }
            }
        } else if (!singular_origin) {
            for (int k = 1; k <= w; ++k) {
                blk.forward.row(k) = gl_row(u, y0, H, 0.0, u[k], xi_, gl);
            }
        }
        for (int k = 0; k < w; ++k) {
            if (singular_origin && k == 0) {
                if (forward_ok_) {
                    blk.backward.row(0) = blk.forward.row(w);
                } else {
                    blk.backward.row(0).setConstant(Complex(std::numeric_limits<double>::quiet_NaN(), 0.0));
                }
                continue;
            }
            blk.backward.row(k) = gl_row(u, y0, H, u[k], 1.0, xi_, gl);
        }
        blk.forward *= scale;
        blk.backward *= scale;
        blocks_.push_back(std::move(blk));
    }
}

ComplexVector RunningIntegral::forward(const ComplexVector& f) const
{
    if (!forward_ok_) {
        throw NotIntegrableError("t^-xi with Re xi >= 1 is not integrable from the origin");
    }
    const auto& x = grid_->nodes();
    if (f.size() != x.size()) {
        throw std::invalid_argument("sample count does not match the grid");
    }
    ComplexVector F(x.size());
    F[0] = grid_->starts_at_origin() ? Complex(0.0) : origin_tail(x[0], x[1], f[0], f[1], xi_, policy_);
    for (const Block& b : blocks_) {
        const int w = b.panel.width;
        const auto seg = f.segment(b.panel.first, w + 1);
        for (int k = 1; k <= w; ++k) {
            F[b.panel.first + k] = F[b.panel.first] + (b.forward.row(k) * seg).value();
        }
    }
    return F;
}

ComplexVector RunningIntegral::backward(const ComplexVector& f) const
{
    const auto& x = grid_->nodes();
    if (f.size() != x.size()) {
        throw std::invalid_argument("sample count does not match the grid");
    }
    ComplexVector G(x.size());
    G[x.size() - 1] = 0.0;
    for (auto it = blocks_.rbegin(); it != blocks_.rend(); ++it) {
        const int w = it->panel.width;
        const auto seg = f.segment(it->panel.first, w + 1);
        for (int k = 0; k < w; ++k) {
            G[it->panel.first + k] = G[it->panel.last()] + (it->backward.row(k) * seg).value();
        }
    }
    return G;
}

ComplexMatrix RunningIntegral::forward_matrix() const
{
    if (!forward_ok_) {
        throw NotIntegrableError("t^-xi with Re xi >= 1 is not integrable from the origin");
    }
    const auto n = grid_->size();
    ComplexMatrix W = ComplexMatrix::Zero(n, n);
    if (!grid_->starts_at_origin()) {
        const Complex d = 1.0 - xi_;
        if (d.real() <= 0.0) {
            throw NotIntegrableError("weight t^-xi is not integrable at the origin");
        }
        W(0, 0) = std::exp(d * std::log(grid_->front())) / d;
    }
    for (const Block& b : blocks_) {
        const int w = b.panel.width;
        for (int k = 1; k <= w; ++k) {
            W.row(b.panel.first + k) = W.row(b.panel.first);
            W.row(b.panel.first + k).segment(b.panel.first, w + 1) += b.forward.row(k);
        }
    }
    return W;
}

Complex RunningIntegral::total_weight() const
{
    Complex s = 0.0;
    for (const Block& b : blocks_) {
        s += b.forward.row(b.panel.width).sum();
    }
    return s;
}

Complex integrate(const Grid& grid, const ComplexVector& f, const QuadratureRule& rule)
{
    RunningIntegral ri(share(grid), rule, 0.0, TailPolicy::Lenient);
    const ComplexVector F = ri.forward(f);
    return F[F.size() - 1] - F[0];
}

} // namespace cesaro
