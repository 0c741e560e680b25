#include "stirgamma/text_format.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace stirgamma {

std::string format_double(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    (void)ec;
    return std::string(buf, ptr);
}

std::string format_double_display(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

namespace {

std::string complex_with(std::string (*fmt)(double), std::complex<double> z) {
    double im = z.imag() == 0.0 ? 0.0 : z.imag();  // drop negative zero
    std::string out = fmt(z.real());
    if (std::signbit(im) && !std::isnan(im)) {
        out += "-";
        out += fmt(-im);
    } else {
        out += "+";
        out += fmt(im);
    }
    out += "i";
    return out;
}

}  // namespace

std::string format_complex(std::complex<double> z) { return complex_with(format_double, z); }

std::string format_complex_display(std::complex<double> z) {
    return complex_with(format_double_display, z);
}

std::optional<double> parse_double(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::string owned(text);
    const char* begin = owned.c_str();
    char* end = nullptr;
    double value = std::strtod(begin, &end);
    if (end != begin + owned.size()) return std::nullopt;
    return value;
}

std::optional<std::complex<double>> parse_complex(std::string_view text) {
    const auto comma = text.find(',');
    if (comma == std::string_view::npos) {
        auto re = parse_double(text);
        if (!re) return std::nullopt;
        return std::complex<double>(*re, 0.0);
    }
    auto re = parse_double(text.substr(0, comma));
    auto im = parse_double(text.substr(comma + 1));
    if (!re || !im) return std::nullopt;
    return std::complex<double>(*re, *im);
}

}  // namespace stirgamma
