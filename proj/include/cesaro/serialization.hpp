#pragma once

#include <string>

#include <json.hpp>

#include "cesaro/grid_function.hpp"

namespace cesaro {

/// Header `x,re,im`, one row per node, then `inf,re,im` when the function
/// carries a value at infinity. Numbers use '.' and 17 significant digits.
std::string to_csv(const GridFunction& f);
GridFunction grid_function_from_csv(const std::string& text, const Domain& domain);

nlohmann::json to_json(const Domain& d);
Domain domain_from_json(const nlohmann::json& j);

/// {domain, nodes, breaks, values, value_at_infinity, notes}; values are [re, im] pairs.
nlohmann::json to_json(const GridFunction& f);
GridFunction grid_function_from_json(const nlohmann::json& j);

/// Shortest text that round-trips the double; never locale dependent.
std::string format_number(double v);

} // namespace cesaro
