#include "dirichlet/text.hpp"

#include <charconv>
#include <cmath>

#include "dirichlet/error.hpp"

namespace dirichlet {

std::string format_double(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

std::string_view trim(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\n' ||
                           text.back() == '\r')) {
    text.remove_suffix(1);
  }
  return text;
}

double parse_double(std::string_view text, std::string_view field) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v)) {
    throw ValidationError(std::string(field) + ": cannot parse '" + std::string(text) +
                          "' as a number");
  }
  return v;
}

std::uint64_t parse_uint(std::string_view text, std::string_view field) {
  text = trim(text);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ValidationError(std::string(field) + ": cannot parse '" + std::string(text) +
                          "' as a nonnegative integer");
  }
  return v;
}

std::complex<double> parse_complex(std::string_view text, std::string_view field) {
  const auto parts = split(text, ',');
  if (parts.size() == 1) return {parse_double(parts[0], field), 0.0};
  if (parts.size() == 2) return {parse_double(parts[0], field), parse_double(parts[1], field)};
  throw ValidationError(std::string(field) + ": expected 're' or 're,im', got '" +
                        std::string(text) + "'");
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace dirichlet
