#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "ccd/error.hpp"

namespace ccd {

// All counting is exact: weight distributions, MacWilliams coefficients and
// moment identities overflow 64 bits well inside the supported q range.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_pow(const BigInt& base, uint64_t exp) {
    BigInt acc = 1, b = base;
    while (exp) {
        if (exp & 1) acc *= b;
        b *= b;
        exp >>= 1;
    }
    return acc;
}

inline BigInt binomial(uint64_t n, uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt acc = 1;
    for (uint64_t i = 1; i <= k; ++i) {
        acc *= BigInt(n - k + i);
        acc /= BigInt(i);  // exact at every step: partial products are binomials
    }
    return acc;
}

// Exact rational in lowest terms, denominator positive. Used for report
// fields like net rates and thresholds; never converted to floating point.
struct Rational {
    BigInt num = 0;
    BigInt den = 1;

    Rational() = default;
    Rational(BigInt n, BigInt d) : num(std::move(n)), den(std::move(d)) {
        require(den != 0, Errc::bad_argument, "rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        BigInt g = boost::multiprecision::gcd(num < 0 ? BigInt(-num) : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }

    std::string str() const {
        if (num == 0) return "0";
        if (den == 1) return num.str();
        return num.str() + "/" + den.str();
    }
};

}  // namespace ccd
