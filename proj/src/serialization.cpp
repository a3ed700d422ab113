#include "cesaro/serialization.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "cesaro/parse.hpp"

namespace cesaro {

std::string format_number(double v)
{
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

std::string to_csv(const GridFunction& f)
{
    std::string out = "x,re,im\n";
    for (Eigen::Index i = 0; i < f.size(); ++i) {
        out += format_number(f.mesh().node(i)) + ',' + format_number(f.values[i].real()) + ',' +
               format_number(f.values[i].imag()) + '\n';
    }
    if (f.value_at_infinity) {
        out += "inf," + format_number(f.value_at_infinity->real()) + ',' + format_number(f.value_at_infinity->imag()) + '\n';
    }
    return out;
}

GridFunction grid_function_from_csv(const std::string& text, const Domain& domain)
{
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || trim(line) != "x,re,im") {
        throw std::invalid_argument("grid function CSV must start with the header x,re,im");
    }
    std::vector<double> nodes;
    std::vector<Complex> vals;
    std::optional<Complex> at_inf;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        const auto cols = split(line, ',');
        if (cols.size() != 3) throw std::invalid_argument("CSV row needs three columns: " + line);
        const Complex v(parse_double(cols[1]), parse_double(cols[2]));
        if (cols[0] == "inf") {
            at_inf = v;
        } else {
            if (at_inf) throw std::invalid_argument("the inf row must be last");
            nodes.push_back(parse_double(cols[0]));
            vals.push_back(v);
        }
    }
    ComplexVector values = Eigen::Map<const ComplexVector>(vals.data(), static_cast<Eigen::Index>(vals.size()));
    return GridFunction(share(Grid::from_nodes(domain, std::move(nodes), {})), std::move(values), at_inf);
}

nlohmann::json to_json(const Domain& d)
{
    const char* kind = d.kind == DomainKind::Interval            ? "interval"
                       : d.kind == DomainKind::HalfLineWithLimit ? "half_line_with_limit"
                                                                 : "half_line";
    return {{"kind", kind}, {"extent", d.extent}};
}

Domain domain_from_json(const nlohmann::json& j)
{
    const std::string kind = j.at("kind").get<std::string>();
    const double extent = j.at("extent").get<double>();
    if (kind == "interval") return Domain::interval(extent);
    if (kind == "half_line_with_limit") return Domain::half_line_with_limit(extent);
    if (kind == "half_line") return Domain::half_line(extent);
    throw std::invalid_argument("unknown domain kind '" + kind + "'");
}

nlohmann::json to_json(const GridFunction& f)
{
    nlohmann::json nodes = nlohmann::json::array();
    nlohmann::json values = nlohmann::json::array();
    for (Eigen::Index i = 0; i < f.size(); ++i) {
        nodes.push_back(f.mesh().node(i));
        values.push_back({f.values[i].real(), f.values[i].imag()});
    }
    nlohmann::json j{{"domain", to_json(f.domain())},
                     {"nodes", nodes},
                     {"breaks", f.mesh().breaks()},
                     {"values", values},
                     {"value_at_infinity", nullptr},
                     {"notes", f.notes}};
    if (f.value_at_infinity) {
        j["value_at_infinity"] = {f.value_at_infinity->real(), f.value_at_infinity->imag()};
    }
    return j;
}

GridFunction grid_function_from_json(const nlohmann::json& j)
{
    const Domain d = domain_from_json(j.at("domain"));
    auto nodes = j.at("nodes").get<std::vector<double>>();
    std::vector<int> breaks;
    if (j.contains("breaks")) breaks = j.at("breaks").get<std::vector<int>>();
    const auto& vals = j.at("values");
    ComplexVector v(static_cast<Eigen::Index>(vals.size()));
    for (std::size_t i = 0; i < vals.size(); ++i) {
        v[static_cast<Eigen::Index>(i)] = {vals[i].at(0).get<double>(), vals[i].at(1).get<double>()};
    }
    std::optional<Complex> at_inf;
    if (j.contains("value_at_infinity") && !j.at("value_at_infinity").is_null()) {
        const auto& z = j.at("value_at_infinity");
        at_inf = Complex(z.at(0).get<double>(), z.at(1).get<double>());
    }
    GridFunction f(share(Grid::from_nodes(d, std::move(nodes), std::move(breaks))), std::move(v), at_inf);
    if (j.contains("notes")) {
        for (const auto& n : j.at("notes")) f.note(n.get<std::string>());
    }
    return f;
}

} // namespace cesaro
