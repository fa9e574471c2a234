#pragma once

#include <cstdint>

namespace minkball {

// The curve x^(2n) + y^(2n) = 1 and its genus (2n-1)(n-1).
struct CurveGenus {
    long long n = 1;
    long long genus = 0;
};

// Degree of a replete divisor and its base-2 normalization deg / log 2.
struct ArakelovDegree {
    double deg = 0.0;
    double deg2 = 0.0;
};

ArakelovDegree make_arakelov_degree(double deg);
CurveGenus make_curve_genus(long long n);

/// Genus (2n-1)(n-1) of the projective model of x^(2n) + y^(2n) = 1.
long long genus(long long n);

/// Euler characteristic l(D) - l(K-D) = deg + 1 - g.
long long rr_euler(long long deg, long long g);

// Right-continuous modification of the ceiling: agrees with ceil(x) for
// positive non-integers and with -ceil(-x) for negative non-integers; at
// integers it takes the limit from the right (so 0 -> 1, -2 -> -2).
long long ceil_prime(double x);

/// ceil_prime(deg / log 2).
long long rr_arakelov_rhs(double deg);

}  // namespace minkball
