#include "cesaro/grid.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace cesaro {

Domain Domain::interval(double a)
{
    if (!(a > 0.0) || !std::isfinite(a)) {
        throw std::invalid_argument("interval domain needs a finite extent a > 0");
    }
    return {DomainKind::Interval, a};
}

Domain Domain::half_line_with_limit(double radius)
{
    if (!(radius >= 1.0) || !std::isfinite(radius)) {
        throw std::invalid_argument("half-line-with-limit needs a truncation radius R >= 1");
    }
    return {DomainKind::HalfLineWithLimit, radius};
}

Domain Domain::half_line(double radius)
{
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        throw std::invalid_argument("half-line needs a finite truncation radius R > 0");
    }
    return {DomainKind::HalfLine, radius};
}

std::string Domain::describe() const
{
    std::ostringstream os;
    switch (kind) {
    case DomainKind::Interval: os << "interval[0," << extent << "]"; break;
    case DomainKind::HalfLineWithLimit: os << "half_line_with_limit(R=" << extent << ")"; break;
    case DomainKind::HalfLine: os << "half_line(R=" << extent << ")"; break;
    }
    return os.str();
}

std::string Grading::describe() const
{
    std::ostringstream os;
    switch (kind) {
    case GradingKind::Uniform: os << "uniform"; break;
    case GradingKind::Geometric: os << "geometric(" << parameter << ")"; break;
    case GradingKind::Graded: os << "graded(" << parameter << ")"; break;
    case GradingKind::Custom: os << "custom"; break;
    }
    return os.str();
}

namespace {

void check_intervals(int intervals)
{
    if (intervals < 2) {
        throw std::invalid_argument("grid needs at least 2 intervals");
    }
}

// Moves the nearest interior node onto each breakpoint and records it as a panel break.
std::vector<int> snap_breakpoints(RealVector& nodes, std::span<const double> breakpoints)
{
    const auto n = static_cast<int>(nodes.size()) - 1;
    std::vector<int> breaks{0, n};
    for (double b : breakpoints) {
        if (!(b > nodes[0]) || !(b < nodes[n])) {
            continue;
        }
        const auto* it = std::lower_bound(nodes.data(), nodes.data() + n + 1, b);
        int k = static_cast<int>(it - nodes.data());
        if (k > 0 && (b - nodes[k - 1]) < (nodes[k] - b)) {
            --k;
        }
        if (k == 0) k = 1;
        if (k == n) k = n - 1;
        if (std::find(breaks.begin(), breaks.end(), k) != breaks.end() && nodes[k] != b) {
            throw std::invalid_argument("grid too coarse to separate breakpoints");
        }
        nodes[k] = b;
        breaks.push_back(k);
    }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    return breaks;
}

} // namespace

Grid::Grid(Domain domain, RealVector nodes, std::vector<int> breaks, Grading grading)
    : domain_(domain), nodes_(std::move(nodes)), breaks_(std::move(breaks)), grading_(grading)
{
    validate();
}

void Grid::validate() const
{
    const auto n = nodes_.size();
    if (n < 3) {
        throw std::invalid_argument("grid needs at least 2 intervals");
    }
    if (!(nodes_[0] >= 0.0)) {
        throw std::invalid_argument("grid must start at 0 or at a positive offset");
    }
    for (Eigen::Index i = 1; i < n; ++i) {
        if (!(nodes_[i] > nodes_[i - 1]) || !std::isfinite(nodes_[i])) {
            throw std::invalid_argument("grid nodes must be finite and strictly increasing");
        }
    }
    if (nodes_[n - 1] > domain_.extent * (1.0 + 1e-12)) {
        throw std::invalid_argument("grid node beyond the domain extent");
    }
    if (breaks_.size() < 2 || breaks_.front() != 0 || breaks_.back() != n - 1 ||
        !std::is_sorted(breaks_.begin(), breaks_.end())) {
        throw std::invalid_argument("grid breaks must be sorted and include both ends");
    }
}

Grid Grid::uniform(const Domain& domain, int intervals, std::span<const double> breakpoints)
{
    check_intervals(intervals);
    RealVector x(intervals + 1);
    for (int i = 0; i <= intervals; ++i) {
        x[i] = domain.extent * static_cast<double>(i) / intervals;
    }
    x[intervals] = domain.extent;
    auto breaks = snap_breakpoints(x, breakpoints);
    return Grid(domain, std::move(x), std::move(breaks), {GradingKind::Uniform, 0.0});
}

Grid Grid::graded(const Domain& domain, int intervals, double exponent, std::span<const double> breakpoints)
{
    check_intervals(intervals);
    if (!(exponent >= 1.0)) {
        throw std::invalid_argument("graded grid exponent must be >= 1");
    }
    RealVector x(intervals + 1);
    for (int i = 0; i <= intervals; ++i) {
        x[i] = domain.extent * std::pow(static_cast<double>(i) / intervals, exponent);
    }
    x[intervals] = domain.extent;
    auto breaks = snap_breakpoints(x, breakpoints);
    return Grid(domain, std::move(x), std::move(breaks), {GradingKind::Graded, exponent});
}

Grid Grid::geometric(const Domain& domain, int intervals, double ratio, std::span<const double> breakpoints)
{
    check_intervals(intervals);
    if (!(ratio > 1.0)) {
        throw std::invalid_argument("geometric grid ratio must exceed 1");
    }
    RealVector x(intervals + 1);
    const double log_r = std::log(ratio);
    for (int i = 0; i <= intervals; ++i) {
        x[i] = domain.extent * std::exp(log_r * (i - intervals));
    }
    x[intervals] = domain.extent;
    if (!(x[0] > 0.0)) {
        throw std::invalid_argument("geometric grid underflows; reduce the ratio or the node count");
    }
    auto breaks = snap_breakpoints(x, breakpoints);
    return Grid(domain, std::move(x), std::move(breaks), {GradingKind::Geometric, ratio});
}

Grid Grid::geometric_from(const Domain& domain, int intervals, double first_node,
                          std::span<const double> breakpoints)
{
    if (!(first_node > 0.0) || !(first_node < domain.extent)) {
        throw std::invalid_argument("geometric grid first node must lie in (0, extent)");
    }
    check_intervals(intervals);
    const double log_span = std::log(domain.extent / first_node);
    RealVector x(intervals + 1);
    for (int i = 0; i <= intervals; ++i) {
        x[i] = first_node * std::exp(log_span * i / intervals);
    }
    x[0] = first_node;
    x[intervals] = domain.extent;
    auto breaks = snap_breakpoints(x, breakpoints);
    return Grid(domain, std::move(x), std::move(breaks), {GradingKind::Geometric, std::exp(log_span / intervals)});
}

Grid Grid::hybrid(const Domain& domain, double first_node, double switch_point, int geometric_intervals,
                  int uniform_intervals, std::span<const double> breakpoints)
{
    if (!(first_node > 0.0) || !(switch_point > first_node) || !(switch_point < domain.extent)) {
        throw std::invalid_argument("hybrid grid needs 0 < first_node < switch_point < extent");
    }
    check_intervals(geometric_intervals);
    check_intervals(uniform_intervals);
    const int n = geometric_intervals + uniform_intervals;
    RealVector x(n + 1);
    const double log_span = std::log(switch_point / first_node);
    for (int i = 0; i <= geometric_intervals; ++i) {
        x[i] = first_node * std::exp(log_span * i / geometric_intervals);
    }
    x[0] = first_node;
    x[geometric_intervals] = switch_point;
    const double h = (domain.extent - switch_point) / uniform_intervals;
    for (int i = 1; i <= uniform_intervals; ++i) {
        x[geometric_intervals + i] = switch_point + h * i;
    }
    x[n] = domain.extent;
    auto breaks = snap_breakpoints(x, breakpoints);
    breaks.push_back(geometric_intervals);
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    return Grid(domain, std::move(x), std::move(breaks), {GradingKind::Custom, 0.0});
}

Grid Grid::from_nodes(const Domain& domain, std::vector<double> nodes, std::vector<int> breaks, Grading grading)
{
    RealVector x = Eigen::Map<const RealVector>(nodes.data(), static_cast<Eigen::Index>(nodes.size()));
    const int n = static_cast<int>(nodes.size()) - 1;
    breaks.push_back(0);
    breaks.push_back(n);
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    return Grid(domain, std::move(x), std::move(breaks), grading);
}

std::optional<int> Grid::find_node(double x, double rel_tol) const
{
    const auto* begin = nodes_.data();
    const auto* end = begin + nodes_.size();
    const auto* it = std::lower_bound(begin, end, x);
    const double tol = rel_tol * std::max(1.0, std::abs(x));
    for (const auto* c : {it - 1, it}) {
        if (c >= begin && c < end && std::abs(*c - x) <= tol) {
            return static_cast<int>(c - begin);
        }
    }
    return std::nullopt;
}

Grid Grid::scaled(double factor) const
{
    if (!(factor > 0.0)) {
        throw std::invalid_argument("scale factor must be positive");
    }
    Domain d = domain_;
    d.extent *= factor;
    RealVector x = nodes_ * factor;
    return Grid(d, std::move(x), breaks_, grading_);
}

Grid Grid::truncated(int last) const
{
    if (last < 2 || last >= nodes_.size()) {
        throw std::invalid_argument("truncation index out of range");
    }
    std::vector<int> breaks;
    for (int b : breaks_) {
        if (b < last) breaks.push_back(b);
    }
    breaks.push_back(last);
    return Grid(Domain::interval(nodes_[last]), nodes_.head(last + 1), std::move(breaks), grading_);
}

Grid Grid::with_node(double x) const
{
    if (find_node(x)) {
        return *this;
    }
    if (!(x > nodes_[0]) || !(x < back())) {
        throw std::invalid_argument("inserted node must lie strictly inside the grid");
    }
    const auto* it = std::lower_bound(nodes_.data(), nodes_.data() + nodes_.size(), x);
    const auto k = static_cast<Eigen::Index>(it - nodes_.data());
    RealVector y(nodes_.size() + 1);
    y.head(k) = nodes_.head(k);
    y[k] = x;
    y.tail(nodes_.size() - k) = nodes_.tail(nodes_.size() - k);
    std::vector<int> breaks;
    for (int b : breaks_) {
        breaks.push_back(b >= k ? b + 1 : b);
    }
    breaks.push_back(static_cast<int>(k));
    std::sort(breaks.begin(), breaks.end());
    return Grid(domain_, std::move(y), std::move(breaks), {GradingKind::Custom, 0.0});
}

bool operator==(const Grid& a, const Grid& b)
{
    return a.domain_ == b.domain_ && a.nodes_.size() == b.nodes_.size() && a.nodes_ == b.nodes_ &&
           a.breaks_ == b.breaks_;
}

} // namespace cesaro
