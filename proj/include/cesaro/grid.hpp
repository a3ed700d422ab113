#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cesaro/types.hpp"

namespace cesaro {

enum class DomainKind { Interval, HalfLineWithLimit, HalfLine };

/// Where a sampled function lives. Half-lines are truncated at `extent`; for
/// HalfLineWithLimit the behaviour beyond the truncation radius is carried by
/// an explicit value at infinity.
struct Domain {
    DomainKind kind = DomainKind::Interval;
    double extent = 1.0;

    static Domain interval(double a);
    static Domain half_line_with_limit(double radius);
    static Domain half_line(double radius);

    bool has_limit() const { return kind == DomainKind::HalfLineWithLimit; }
    bool is_half_line() const { return kind != DomainKind::Interval; }
    std::string describe() const;

    friend bool operator==(const Domain&, const Domain&) = default;
};

enum class GradingKind { Uniform, Geometric, Graded, Custom };

struct Grading {
    GradingKind kind = GradingKind::Uniform;
    double parameter = 0.0; ///< ratio for Geometric, exponent for Graded

    std::string describe() const;
    friend bool operator==(const Grading&, const Grading&) = default;
};

/// Strictly increasing sample nodes x_0 < ... < x_N on a domain.
///
/// x_0 is either exactly 0 or a recorded offset x_0 > 0; in the latter case
/// integrals over [0, x_0] are modelled analytically (see quadrature.hpp).
/// `breaks()` lists node indices that quadrature panels never straddle:
/// always 0 and N, plus every snapped breakpoint of a piecewise function.
class Grid {
public:
    static Grid uniform(const Domain& domain, int intervals, std::span<const double> breakpoints = {});

    /// x_i = a (i/N)^exponent.
    static Grid graded(const Domain& domain, int intervals, double exponent,
                       std::span<const double> breakpoints = {});

    /// x_i = a ratio^(i-N); the first node is the offset a ratio^(-N) > 0.
    static Grid geometric(const Domain& domain, int intervals, double ratio,
                          std::span<const double> breakpoints = {});

    /// Geometric grid whose first node is `first_node` and last node the domain extent.
    static Grid geometric_from(const Domain& domain, int intervals, double first_node,
                               std::span<const double> breakpoints = {});

    /// Geometric from `first_node` up to `switch_point`, then uniform to the
    /// extent; the switch point is a panel break.
    static Grid hybrid(const Domain& domain, double first_node, double switch_point, int geometric_intervals,
                       int uniform_intervals, std::span<const double> breakpoints = {});

    static Grid from_nodes(const Domain& domain, std::vector<double> nodes, std::vector<int> breaks,
                           Grading grading = {GradingKind::Custom, 0.0});

    const Domain& domain() const { return domain_; }
    const RealVector& nodes() const { return nodes_; }
    double node(Eigen::Index i) const { return nodes_[i]; }
    Eigen::Index size() const { return nodes_.size(); }
    int intervals() const { return static_cast<int>(nodes_.size()) - 1; }
    double front() const { return nodes_[0]; }
    double back() const { return nodes_[nodes_.size() - 1]; }
    bool starts_at_origin() const { return nodes_[0] == 0.0; }
    const std::vector<int>& breaks() const { return breaks_; }
    const Grading& grading() const { return grading_; }

    /// Index of a node equal to x within a relative tolerance.
    std::optional<int> find_node(double x, double rel_tol = 1e-12) const;

    /// Copy with every node multiplied by `factor` (domain extent scaled as well).
    Grid scaled(double factor) const;

    /// Nodes 0..last as an Interval(x_last) grid.
    Grid truncated(int last) const;

    /// Copy with an extra node (and panel break) at x.
    Grid with_node(double x) const;

    friend bool operator==(const Grid& a, const Grid& b);

private:
    Grid(Domain domain, RealVector nodes, std::vector<int> breaks, Grading grading);
    void validate() const;

    Domain domain_;
    RealVector nodes_;
    std::vector<int> breaks_;
    Grading grading_;
};

using GridPtr = std::shared_ptr<const Grid>;

inline GridPtr share(Grid g) { return std::make_shared<const Grid>(std::move(g)); }

} // namespace cesaro
