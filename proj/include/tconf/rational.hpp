#ifndef TCONF_RATIONAL_HPP
#define TCONF_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace tconf {

// Exact arbitrary-precision rationals back every "zero tolerance" check in
// this library: pmfs of the p-value law, enumeration oracles, level
// calibration.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt factorial_big(int k) {
    BigInt f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

inline BigInt binomial_big(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt b = 1;
    for (int i = 0; i < k; ++i) {
        b *= (n - i);
        b /= (i + 1);  // exact at every step: product of i+1 consecutive integers
    }
    return b;
}

inline double to_double(const Rational& q) {
    return q.convert_to<double>();
}

}  // namespace tconf

#endif
