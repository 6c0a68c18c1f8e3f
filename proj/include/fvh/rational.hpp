#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fvh {

// Arbitrary-precision rationals. cpp_rational keeps gcd(|num|,den)=1 and
// den>0 as class invariants, which is exactly the canonical form we need.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat &r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat &r) { return boost::multiprecision::denominator(r); }

inline Rat rat(long long n, long long d = 1) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    return Rat(n, d);
}

inline bool is_integer(const Rat &r) { return den(r) == 1; }

// Exact conversion; throws unless r is an integer that fits in long long.
inline long long to_ll(const Rat &r) {
    if (!is_integer(r)) throw std::domain_error("to_ll: not an integer");
    return static_cast<long long>(num(r));
}

inline Int factorial(unsigned k) {
    Int f = 1;
    for (unsigned i = 2; i <= k; ++i) f *= i;
    return f;
}

inline Rat pow_rat(const Rat &b, long e) {
    if (e == 0) return Rat(1);
    if (e < 0) {
        if (b == 0) throw std::domain_error("pow_rat: 0^negative");
        return Rat(1) / pow_rat(b, -e);
    }
    Rat acc = 1, base = b;
    long k = e;
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

inline std::string to_string(const Rat &r) {
    std::string s = num(r).str();
    if (den(r) != 1) s += "/" + den(r).str();
    return s;
}

} // namespace fvh
