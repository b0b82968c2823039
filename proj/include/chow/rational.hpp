#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "chow/errors.hpp"

namespace chow {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string to_string(const Int& n) { return n.str(); }

inline std::string to_string(const Rat& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

inline Int factorial(unsigned n) {
    Int r = 1;
    for (unsigned i = 2; i <= n; i++) r *= i;
    return r;
}

// binomial coefficient for arbitrary integer top argument (C(n,k) with n < 0 allowed)
inline Int binomial(const Int& n, unsigned k) {
    Int num = 1;
    for (unsigned i = 0; i < k; i++) num *= n - i;
    Int den = factorial(k);
    Int q = num / den;
    if (q * den != num) throw algebra_error("binomial: non-exact division");
    return q;
}

inline bool is_integer(const Rat& q) { return denominator(q) == 1; }

}  // namespace chow
