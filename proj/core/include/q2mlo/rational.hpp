#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <functional>
#include <string>

namespace q2mlo {

// Exact rational time point. All semantics in this library compare and
// shift endpoints exactly; floating point is never used for time values.
using Rat = boost::rational<std::int64_t>;

inline Rat rat(std::int64_t num, std::int64_t den = 1) { return Rat(num, den); }

std::int64_t floor_rat(const Rat& r);
std::int64_t ceil_rat(const Rat& r);

// Parses "p/q" or "k" (decimal, optionally negative). Throws
// std::invalid_argument on malformed input or zero denominator.
Rat parse_rat(const std::string& text);

// Formats as "p/q", or "p" when the denominator is 1.
std::string rat_to_string(const Rat& r);

std::size_t hash_rat(const Rat& r);

}  // namespace q2mlo
