#include "cmub_eur/format.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <stdexcept>

namespace cmub {

std::string format_number(double x) {
  if (x == 0.0) return "0";
  char buf[32];
  for (int precision = 1; precision <= 12; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, x);
    if (std::strtod(buf, nullptr) == x) return buf;
  }
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

namespace {

double parse_plain(std::string_view text, std::string_view whole) {
  const std::string s(text);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) {
    throw std::invalid_argument("cannot parse angle '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

double parse_angle(std::string_view text) {
  const auto pi_pos = text.find("pi");
  if (pi_pos == std::string_view::npos) return parse_plain(text, text);

  std::string_view coeff = text.substr(0, pi_pos);
  std::string_view rest = text.substr(pi_pos + 2);
  double c = 1.0;
  if (coeff == "-") {
    c = -1.0;
  } else if (!coeff.empty() && coeff != "+") {
    if (coeff.back() == '*') coeff.remove_suffix(1);
    c = parse_plain(coeff, text);
  }
  double denom = 1.0;
  if (!rest.empty()) {
    if (rest.front() != '/') {
      throw std::invalid_argument("cannot parse angle '" + std::string(text) + "'");
    }
    denom = parse_plain(rest.substr(1), text);
    if (denom == 0.0) {
      throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
  }
  return c * std::numbers::pi / denom;
}

}  // namespace cmub
