#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace heilbronn {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar. Always stored in lowest terms with a positive
// denominator; arithmetic never rounds.
using Rat = boost::multiprecision::cpp_rational;

inline double rat_to_double(const Rat& r) { return r.convert_to<double>(); }

// "p" for integers, "p/q" otherwise.
std::string rat_to_string(const Rat& r);

// Accepts "p", "p/q" and plain decimals like "0.25" (parsed exactly as
// p/10^k). Returns nullopt on malformed input or a zero denominator.
std::optional<Rat> rat_from_string(std::string_view s);

// Nearest rational with the given denominator: round(x * den) / den.
Rat rat_from_rounded(double x, std::int64_t den);

}  // namespace heilbronn
