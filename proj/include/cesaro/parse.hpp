#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cesaro/types.hpp"

namespace cesaro {

std::vector<std::string> split(std::string_view text, char sep);
std::string trim(std::string_view text);

double parse_double(std::string_view text);
int parse_int(std::string_view text);

/// "2", "-1", "3+2i", "0.5-1e-3i", "2i", "-i".
Complex parse_complex(std::string_view text);
std::string format_complex(Complex z);

/// "1/12" or "0" into lowest terms. Decimal input is rejected: the
/// denominator must be known exactly.
struct Rational {
    long num = 0;
    long den = 1;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};
Rational parse_rational(std::string_view text);

} // namespace cesaro
