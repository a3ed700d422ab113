#include "cesaro/parse.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cesaro {

std::vector<std::string> split(std::string_view text, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        out.push_back(trim(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::string trim(std::string_view text)
{
    std::size_t a = 0;
    std::size_t b = text.size();
    while (a < b && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
    return std::string(text.substr(a, b - a));
}

double parse_double(std::string_view text)
{
    const std::string s = trim(text);
    double v = 0.0;
    const char* first = s.data();
    if (!s.empty() && s[0] == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw std::invalid_argument("not a number: '" + std::string(text) + "'");
    }
    return v;
}

int parse_int(std::string_view text)
{
    const std::string s = trim(text);
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    }
    return v;
}

Complex parse_complex(std::string_view text)
{
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    }
    if (s.empty()) throw std::invalid_argument("empty complex number");
    const char last = s.back();
    if (last != 'i' && last != 'j') {
        return parse_double(s);
    }
    s.pop_back();
    std::size_t split_at = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split_at = k;
            break;
        }
    }
    const std::string re = split_at == std::string::npos ? "" : s.substr(0, split_at);
    std::string im = split_at == std::string::npos ? s : s.substr(split_at);
    double imag = 0.0;
    if (im.empty() || im == "+") {
        imag = 1.0;
    } else if (im == "-") {
        imag = -1.0;
    } else {
        imag = parse_double(im);
    }
    return {re.empty() ? 0.0 : parse_double(re), imag};
}

std::string format_complex(Complex z)
{
    std::ostringstream os;
    os << std::setprecision(17);
    if (z.imag() == 0.0) {
        os << z.real();
    } else {
        os << z.real() << (z.imag() < 0 || std::signbit(z.imag()) ? "-" : "+") << std::abs(z.imag()) << "i";
    }
    return os.str();
}

Rational parse_rational(std::string_view text)
{
    const auto parts = split(text, '/');
    Rational r;
    if (parts.size() == 1) {
        if (parts[0].find_first_of(".eE") != std::string::npos) {
            throw std::invalid_argument("'" + std::string(text) + "' is not given as an exact fraction p/q");
        }
        r.num = parse_int(parts[0]);
        return r;
    }
    if (parts.size() != 2) throw std::invalid_argument("bad fraction '" + std::string(text) + "'");
    r.num = parse_int(parts[0]);
    r.den = parse_int(parts[1]);
    if (r.den <= 0) throw std::invalid_argument("fraction needs a positive denominator");
    const long g = std::gcd(r.num, r.den);
    if (g > 1) {
        r.num /= g;
        r.den /= g;
    }
    return r;
}

} // namespace cesaro
