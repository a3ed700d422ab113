#pragma once

#include <string>
#include <string_view>

#include "cesaro/grid.hpp"

namespace cesaro {

enum class Space { C01, Cl, Lp01, LpHalf, CPlus, LpLoc };

/// Which function space a computation targets; fixes norm semantics.
struct SpaceSpec {
    Space space = Space::C01;
    double p = 2.0; // only meaningful for the L^p variants

    static SpaceSpec c01() { return {Space::C01, 2.0}; }
    static SpaceSpec cl() { return {Space::Cl, 2.0}; }
    static SpaceSpec cplus() { return {Space::CPlus, 2.0}; }
    static SpaceSpec lp01(double p);
    static SpaceSpec lphalf(double p);
    static SpaceSpec lploc(double p);

    /// Accepts c01, cl, lp01, lphalf, cplus, lploc (case-insensitive).
    static SpaceSpec parse(std::string_view name, double p = 2.0);

    bool is_lp() const { return space == Space::Lp01 || space == Space::LpHalf || space == Space::LpLoc; }
    bool is_sup() const { return !is_lp(); }
    bool is_frechet() const { return space == Space::CPlus || space == Space::LpLoc; }
    /// Conjugate exponent for L^p variants, 1 for the sup-norm spaces.
    double q() const { return is_lp() ? p / (p - 1.0) : 1.0; }

    /// Banach section on [0, j] used by the seminorm q_j.
    SpaceSpec section() const;
    Domain default_domain() const;
    bool accepts(const Domain& d) const;
    void require(const Domain& d) const;

    std::string name() const;
    std::string key() const;

    friend bool operator==(const SpaceSpec& a, const SpaceSpec& b)
    {
        return a.space == b.space && (!a.is_lp() || a.p == b.p);
    }
};

} // namespace cesaro
