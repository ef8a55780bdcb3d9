#include "heilbronn/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace heilbronn {

std::string rat_to_string(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += '/';
    s += denominator(r).str();
  }
  return s;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// Parses an optionally signed integer body, or a decimal "a.b".
std::optional<Rat> parse_signed_term(std::string_view s) {
  if (s.empty()) return std::nullopt;
  bool neg = false;
  if (s.front() == '+' || s.front() == '-') {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  auto dot = s.find('.');
  Rat value;
  if (dot == std::string_view::npos) {
    if (!all_digits(s)) return std::nullopt;
    value = Rat(BigInt(std::string(s)));
  } else {
    std::string_view ip = s.substr(0, dot);
    std::string_view fp = s.substr(dot + 1);
    if (ip.empty() && fp.empty()) return std::nullopt;
    if (!ip.empty() && !all_digits(ip)) return std::nullopt;
    if (!fp.empty() && !all_digits(fp)) return std::nullopt;
    BigInt scale = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
    BigInt num = ip.empty() ? BigInt(0) : BigInt(std::string(ip));
    num *= scale;
    if (!fp.empty()) num += BigInt(std::string(fp));
    value = Rat(num, scale);
  }
  if (neg) value = -value;
  return value;
}

}  // namespace

std::optional<Rat> rat_from_string(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) return std::nullopt;
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return parse_signed_term(s);
  auto num = parse_signed_term(s.substr(0, slash));
  auto den = parse_signed_term(s.substr(slash + 1));
  if (!num || !den || *den == 0) return std::nullopt;
  if (denominator(*num) != 1 || denominator(*den) != 1) return std::nullopt;
  return Rat(numerator(*num), numerator(*den));
}

Rat rat_from_rounded(double x, std::int64_t den) {
  return Rat(BigInt(std::llround(x * static_cast<double>(den))), BigInt(den));
}

}  // namespace heilbronn
