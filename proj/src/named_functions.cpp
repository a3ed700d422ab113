#include "cesaro/named_functions.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "cesaro/parse.hpp"

namespace cesaro {

NamedFunction NamedFunction::monomial(int n)
{
    if (n < 0) throw std::invalid_argument("monomial degree must be >= 0");
    NamedFunction f{NamedKind::Monomial};
    f.n = n;
    return f;
}

NamedFunction NamedFunction::power(Complex alpha)
{
    NamedFunction f{NamedKind::Power};
    f.alpha = alpha;
    return f;
}

NamedFunction NamedFunction::plateau_h(double m, int n)
{
    if (!(m > 0.0) || n < 0) throw std::invalid_argument("plateau_h needs m > 0 and n >= 0");
    NamedFunction f{NamedKind::PlateauH};
    f.m = m;
    f.n = n;
    return f;
}

NamedFunction NamedFunction::witness_g(double m, int n)
{
    if (!(m > 0.0) || n < 1) throw std::invalid_argument("witness_g needs m > 0 and n >= 1");
    NamedFunction f{NamedKind::WitnessG};
    f.m = m;
    f.n = n;
    return f;
}

NamedFunction NamedFunction::parse(std::string_view text)
{
    const auto colon = text.find(':');
    const std::string_view head = text.substr(0, colon);
    const std::string_view args = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
    auto need_args = [&](std::size_t count) {
        auto parts = split(args, ',');
        if (args.empty() || parts.size() != count) {
            throw std::invalid_argument("'" + std::string(text) + "' expects " + std::to_string(count) + " argument(s)");
        }
        return parts;
    };
    if (head == "one") return one();
    if (head == "neg_inv_log") return neg_inv_log();
    if (head == "cos_over_1px") return cos_over_1px();
    if (head == "monomial") return monomial(parse_int(need_args(1)[0]));
    if (head == "power") return power(parse_complex(need_args(1)[0]));
    if (head == "plateau_h" || head == "witness_g") {
        auto p = need_args(2);
        const double m = parse_double(p[0]);
        const int n = parse_int(p[1]);
        return head == "plateau_h" ? plateau_h(m, n) : witness_g(m, n);
    }
    throw std::invalid_argument("unknown function '" + std::string(text) + "'");
}

std::string NamedFunction::name() const
{
    std::ostringstream os;
    switch (kind) {
    case NamedKind::One: os << "one"; break;
    case NamedKind::Monomial: os << "monomial:" << n; break;
    case NamedKind::Power: os << "power:" << format_complex(alpha); break;
    case NamedKind::NegInvLog: os << "neg_inv_log"; break;
    case NamedKind::CosOver1px: os << "cos_over_1px"; break;
    case NamedKind::PlateauH: os << "plateau_h:" << m << "," << n; break;
    case NamedKind::WitnessG: os << "witness_g:" << m << "," << n; break;
    }
    return os.str();
}

Complex NamedFunction::operator()(double x) const
{
    if (x < 0.0) throw std::domain_error(name() + " is defined on [0, inf) only");
    switch (kind) {
    case NamedKind::One: return 1.0;
    case NamedKind::Monomial: return std::pow(x, n);
    case NamedKind::Power:
        if (x == 0.0) {
            if (alpha == Complex(0.0)) return 1.0;
            if (alpha.real() > 0.0) return 0.0;
            throw std::domain_error(name() + " is not evaluable at 0; use a grid with an offset first node");
        }
        return std::exp(alpha * std::log(x));
    case NamedKind::NegInvLog:
        if (x > 1.0 + 1e-14) throw std::domain_error("neg_inv_log lives on [0,1]");
        if (x == 0.0) return 0.0;
        if (x >= 0.5) return 1.0 / std::log(2.0);
        return -1.0 / std::log(x);
    case NamedKind::CosOver1px: return std::cos(x) / (1.0 + x);
    case NamedKind::PlateauH: return x <= m ? std::pow(x, n) : std::pow(m, n);
    case NamedKind::WitnessG: return x <= m ? std::pow(x, n) : std::pow(m, n + 1) / x;
    }
    return 0.0;
}

std::optional<Complex> NamedFunction::limit_at_infinity() const
{
    switch (kind) {
    case NamedKind::One: return Complex(1.0);
    case NamedKind::Monomial: return n == 0 ? std::optional<Complex>(1.0) : std::nullopt;
    case NamedKind::Power:
        if (alpha == Complex(0.0)) return Complex(1.0);
        if (alpha.real() < 0.0) return Complex(0.0);
        return std::nullopt;
    case NamedKind::NegInvLog: return std::nullopt;
    case NamedKind::CosOver1px: return Complex(0.0);
    case NamedKind::PlateauH: return Complex(std::pow(m, n));
    case NamedKind::WitnessG: return Complex(0.0);
    }
    return std::nullopt;
}

std::vector<double> NamedFunction::breakpoints() const
{
    switch (kind) {
    case NamedKind::NegInvLog: return {0.5};
    case NamedKind::PlateauH:
    case NamedKind::WitnessG: return {m};
    default: return {};
    }
}

bool NamedFunction::singular_at_origin() const
{
    return kind == NamedKind::NegInvLog || (kind == NamedKind::Power && alpha != Complex(0.0) && alpha.real() < 1.0);
}

bool NamedFunction::integrable_at_origin() const
{
    return kind != NamedKind::Power || alpha.real() > -1.0;
}

GridFunction build_named_function(const NamedFunction& fn, GridPtr grid)
{
    const Domain& d = grid->domain();
    if (fn.kind == NamedKind::NegInvLog && d.extent > 1.0 + 1e-14) {
        throw std::invalid_argument("neg_inv_log needs a domain inside [0,1]");
    }
    std::vector<std::string> notes;
    for (double b : fn.breakpoints()) {
        if (b > grid->front() && b < grid->back() && !grid->find_node(b)) {
            grid = share(grid->with_node(b));
            std::ostringstream os;
            os << "breakpoint node inserted at x=" << b;
            notes.push_back(os.str());
        }
    }
    std::optional<Complex> at_inf;
    if (d.has_limit()) {
        at_inf = fn.limit_at_infinity();
        if (!at_inf) {
            throw std::invalid_argument(fn.name() + " has no limit at infinity");
        }
    }
    GridFunction out = sample(std::move(grid), [&](double x) { return fn(x); }, at_inf);
    for (auto& n : notes) out.note(std::move(n));
    if (!fn.integrable_at_origin()) {
        out.note("not integrable at 0 (Re alpha <= -1)");
    }
    return out;
}

GridPtr grid_for(const NamedFunction& fn, const Domain& domain, int intervals)
{
    const auto bps = fn.breakpoints();
    if (fn.singular_at_origin()) {
        return share(Grid::geometric_from(domain, intervals, 1e-16 * domain.extent, bps));
    }
    return share(Grid::uniform(domain, intervals, bps));
}

GridPtr standard_grid(const SpaceSpec& spec, int intervals)
{
    if (intervals < 8) throw std::invalid_argument("standard grid needs at least 8 intervals");
    const Domain d = spec.default_domain();
    switch (spec.space) {
    case Space::C01:
    case Space::Lp01: {
        const double half[] = {0.5};
        return share(Grid::uniform(d, intervals, half));
    }
    case Space::CPlus:
    case Space::LpLoc: {
        const double ints[] = {1.0, 2.0};
        return share(Grid::uniform(d, intervals, ints));
    }
    case Space::Cl:
    case Space::LpHalf: {
        const double ints[] = {1.0, 2.0};
        const int geo = intervals / 4;
        return share(Grid::hybrid(d, 1e-24, 0.5, geo, intervals - geo, ints));
    }
    }
    throw std::invalid_argument("unknown space");
}

std::vector<NamedFunction> resolvent_corpus(const SpaceSpec& spec)
{
    switch (spec.space) {
    case Space::Cl:
        return {NamedFunction::one(), NamedFunction::cos_over_1px(), NamedFunction::plateau_h(2, 1),
                NamedFunction::witness_g(2, 1)};
    case Space::LpHalf: return {NamedFunction::cos_over_1px(), NamedFunction::witness_g(1, 1)};
    default:
        return {NamedFunction::one(), NamedFunction::monomial(1), NamedFunction::monomial(3),
                NamedFunction::cos_over_1px()};
    }
}

std::vector<NamedFunction> sup_corpus()
{
    return {NamedFunction::one(),          NamedFunction::monomial(1),    NamedFunction::monomial(3),
            NamedFunction::monomial(10),   NamedFunction::power({0.5, 0}), NamedFunction::power({0.25, 3.0}),
            NamedFunction::neg_inv_log(),  NamedFunction::cos_over_1px(), NamedFunction::plateau_h(0.5, 2),
            NamedFunction::witness_g(0.5, 1)};
}

} // namespace cesaro
