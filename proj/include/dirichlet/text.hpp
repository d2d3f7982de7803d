#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dirichlet {

// Shortest round-trip decimal form.
std::string format_double(double v);

// Parsers throw ValidationError naming `field` on malformed input.
double parse_double(std::string_view text, std::string_view field);
std::uint64_t parse_uint(std::string_view text, std::string_view field);
// "re" or "re,im"
std::complex<double> parse_complex(std::string_view text, std::string_view field);

std::vector<std::string_view> split(std::string_view text, char sep);
std::string_view trim(std::string_view text);

}  // namespace dirichlet
