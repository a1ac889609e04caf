#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace satforge {

/// Exact rational charge; always kept in lowest terms by the backend.
using Charge = boost::multiprecision::cpp_rational;

inline Charge frac(long long num, long long den) { return Charge(num) / Charge(den); }

/// Renders `p/q`, or `p` when the denominator is one.
std::string to_string(const Charge& c);

}  // namespace satforge
