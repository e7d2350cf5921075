#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace fgeo {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string rat_to_string(const Rat& r) {
    BigInt num = numerator(r), den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline double rat_to_double(const Rat& r) { return r.template convert_to<double>(); }

// Exact integer n-th root, or nullopt if x has none.
inline std::optional<BigInt> int_root(const BigInt& x, int n) {
    if (x < 0) return std::nullopt;
    if (x == 0 || x == 1) return x;
    BigInt lo = 1, hi = x;
    while (lo < hi) {
        BigInt mid = (lo + hi + 1) / 2;
        BigInt p = 1;
        bool over = false;
        for (int i = 0; i < n; ++i) {
            p *= mid;
            if (p > x) { over = true; break; }
        }
        if (over) hi = mid - 1; else lo = mid;
    }
    BigInt p = 1;
    for (int i = 0; i < n; ++i) p *= lo;
    if (p == x) return lo;
    return std::nullopt;
}

// Exact nonnegative n-th root of a rational, when one exists. Even n requires
// r >= 0; odd n of a negative value yields the negative real root.
inline std::optional<Rat> rat_root(const Rat& r, int n) {
    if (n <= 0) return std::nullopt;
    if (n == 1) return r;
    bool neg = r < 0;
    if (neg && n % 2 == 0) return std::nullopt;
    Rat a = neg ? Rat(-r) : r;
    auto rn = int_root(numerator(a), n);
    if (!rn) return std::nullopt;
    auto rd = int_root(denominator(a), n);
    if (!rd) return std::nullopt;
    Rat out(*rn, *rd);
    return neg ? Rat(-out) : out;
}

inline std::optional<Rat> rat_sqrt(const Rat& r) { return rat_root(r, 2); }

// r^e for integer e; e < 0 inverts (caller must reject r == 0 in that case).
inline Rat rat_pow(const Rat& r, long e) {
    Rat base = e < 0 ? Rat(denominator(r), numerator(r)) : r;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Rat out = 1;
    while (k) {
        if (k & 1) out *= base;
        base *= base;
        k >>= 1;
    }
    return out;
}

}  // namespace fgeo
