#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace k3q {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int numer(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denom(const Rat& r) { return boost::multiprecision::denominator(r); }

inline std::string to_string(const Int& x) { return x.str(); }
inline std::string to_string(const Rat& r) {
    if (denom(r) == 1) return numer(r).str();
    return numer(r).str() + "/" + denom(r).str();
}

inline bool is_integer(const Rat& r) { return denom(r) == 1; }

}  // namespace k3q
