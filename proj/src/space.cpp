#include "cesaro/space.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace cesaro {

namespace {

SpaceSpec make_lp(Space s, double p)
{
    if (!(p > 1.0) || !std::isfinite(p)) {
        throw std::invalid_argument("L^p spaces need a finite p > 1");
    }
    return {s, p};
}

} // namespace

SpaceSpec SpaceSpec::lp01(double p) { return make_lp(Space::Lp01, p); }
SpaceSpec SpaceSpec::lphalf(double p) { return make_lp(Space::LpHalf, p); }
SpaceSpec SpaceSpec::lploc(double p) { return make_lp(Space::LpLoc, p); }

SpaceSpec SpaceSpec::parse(std::string_view name, double p)
{
    std::string s(name);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    if (s == "c01") return c01();
    if (s == "cl") return cl();
    if (s == "cplus") return cplus();
    if (s == "lp01") return lp01(p);
    if (s == "lphalf") return lphalf(p);
    if (s == "lploc") return lploc(p);
    throw std::invalid_argument("unknown space '" + std::string(name) + "'");
}

SpaceSpec SpaceSpec::section() const
{
    return is_lp() ? lp01(p) : c01();
}

Domain SpaceSpec::default_domain() const
{
    switch (space) {
    case Space::C01:
    case Space::Lp01: return Domain::interval(1.0);
    case Space::Cl: return Domain::half_line_with_limit(50.0);
    case Space::LpHalf: return Domain::half_line(50.0);
    case Space::CPlus:
    case Space::LpLoc: return Domain::half_line(3.0);
    }
    return Domain::interval(1.0);
}

bool SpaceSpec::accepts(const Domain& d) const
{
    switch (space) {
    // sections C([0,j]) and L^p(0,j) reuse the [0,1] semantics on any interval
    case Space::C01:
    case Space::Lp01: return d.kind == DomainKind::Interval;
    case Space::Cl: return d.kind == DomainKind::HalfLineWithLimit;
    case Space::LpHalf:
    case Space::CPlus:
    case Space::LpLoc: return d.is_half_line();
    }
    return false;
}

void SpaceSpec::require(const Domain& d) const
{
    if (!accepts(d)) {
        throw std::invalid_argument("domain " + d.describe() + " is incompatible with " + name());
    }
}

std::string SpaceSpec::key() const
{
    switch (space) {
    case Space::C01: return "c01";
    case Space::Cl: return "cl";
    case Space::Lp01: return "lp01";
    case Space::LpHalf: return "lphalf";
    case Space::CPlus: return "cplus";
    case Space::LpLoc: return "lploc";
    }
    return "?";
}

std::string SpaceSpec::name() const
{
    std::ostringstream os;
    switch (space) {
    case Space::C01: os << "C([0,1])"; break;
    case Space::Cl: os << "C_l([0,inf])"; break;
    case Space::Lp01: os << "L^" << p << "(0,1)"; break;
    case Space::LpHalf: os << "L^" << p << "(R+)"; break;
    case Space::CPlus: os << "C(R+)"; break;
    case Space::LpLoc: os << "L^" << p << "_loc(R+)"; break;
    }
    return os.str();
}

} // namespace cesaro
