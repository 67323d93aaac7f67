#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace qshuf {

// Exact scalar types. Every coefficient in the library is a rational number
// kept in canonical form (reduced, positive denominator); cpp_rational
// maintains that invariant for us.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Thrown when a request exceeds a configured resource cap (CLI exit code 3).
struct cap_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Integer factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Integer r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Integer int_pow(Integer base, int e) {
    Integer r = 1;
    while (e-- > 0) r *= base;
    return r;
}

// Canonical string form "p" or "p/q" with q > 1.
inline std::string rational_str(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

} // namespace qshuf
