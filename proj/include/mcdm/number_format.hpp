#ifndef MCDM_NUMBER_FORMAT_HPP
#define MCDM_NUMBER_FORMAT_HPP

#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <system_error>

// Locale-independent number <-> text conversion built on <charconv>.

namespace mcdm::fmt {

/// Shortest plain decimal (no exponent) that parses back to the same double.
inline std::string shortest(double value) {
  char buf[512];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed);
  if (ec != std::errc{}) return "nan";
  return {buf, end};
}

/// Fixed-point with `digits` decimals. Rounds the exact binary value, so an
/// exact tie goes to the even digit.
inline std::string fixed(double value, int digits) {
  char buf[512];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, digits);
  if (ec != std::errc{}) return "nan";
  std::string out(buf, end);
  if (out.front() == '-' && out.find_first_not_of("-0.") == std::string::npos) out.erase(0, 1);
  return out;
}

/// Plain decimal with '.' separator and optional sign; no exponent,
/// no thousands separators, no surrounding whitespace.
inline std::optional<double> parse_decimal(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::string_view body = text;
  bool negative = false;
  if (body.front() == '-' || body.front() == '+') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (body.empty() || body.front() == '-' || body.front() == '+') return std::nullopt;
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value, std::chars_format::fixed);
  if (ec != std::errc{} || ptr != body.data() + body.size()) return std::nullopt;
  return negative ? -value : value;
}

}  // namespace mcdm::fmt

#endif  // MCDM_NUMBER_FORMAT_HPP
