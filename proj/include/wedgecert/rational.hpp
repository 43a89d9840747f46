#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

#include "wedgecert/errors.hpp"

namespace wedgecert {

using Integer = boost::multiprecision::cpp_int;

// Exact rational scalar.  cpp_rational keeps values in lowest terms with a
// positive denominator, which is exactly the canonical form we need.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(Integer num, Integer den) {
    if (den == 0)
        throw DomainError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(std::move(num), std::move(den));
}

inline Integer rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline Rational rat_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline int rat_sign(const Rational& r) { return r < 0 ? -1 : (r > 0 ? 1 : 0); }

// Integer exponent power, e >= 0.
inline Rational rat_pow(const Rational& base, unsigned e) {
    Rational acc(1);
    Rational b = base;
    while (e != 0) {
        if (e & 1u)
            acc *= b;
        b *= b;
        e >>= 1u;
    }
    return acc;
}

inline Integer int_pow(Integer base, unsigned e) {
    Integer acc(1);
    while (e != 0) {
        if (e & 1u)
            acc *= base;
        base *= base;
        e >>= 1u;
    }
    return acc;
}

inline Integer factorial(unsigned n) {
    Integer acc(1);
    for (unsigned k = 2; k <= n; ++k)
        acc *= k;
    return acc;
}

inline Integer binomial(unsigned n, unsigned k) {
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    Integer acc(1);
    for (unsigned i = 1; i <= k; ++i) {
        acc *= (n - k + i);
        acc /= i;
    }
    return acc;
}

// Token grammar: optional sign, digits, optionally "/" and a nonzero
// denominator.  Whitespace is not consumed here.
std::optional<Rational> parse_rational(std::string_view token);

// Canonical rendering: "p" when the denominator is 1, else "p/q".
std::string rational_str(const Rational& r);

double to_double(const Rational& r);

} // namespace wedgecert
