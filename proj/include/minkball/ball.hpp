#pragma once

#include <cstdint>
#include <vector>

#include "minkball/numerics.hpp"

namespace minkball {

// The planar ball D_p: |x|^p + |y|^p < 1, dilated to the domain 2^m D_p.
struct Ball {
    double p = 2.0;
    int m = 0;
};

enum class Regime { Minkowski, Davis, ChebyshevMordell, LimitP1, LimitPInf };

const char* regime_name(Regime r);

// The two candidate critical determinants and the selected minimum.
//   delta0 = sigma_p / 2                      (lattice with (1,0) on the curve)
//   delta1 = 4^(-1/p) (1+tau_p)/(1-tau_p)     (lattice with (-2^(-1/p), 2^(-1/p)))
struct CriticalData {
    double p = 0.0;
    double sigma_p = 0.0;
    double tau_p = 0.0;
    double delta0 = 0.0;
    double delta1 = 0.0;
    double delta_crit = 0.0;
    Regime regime = Regime::Davis;
};

/// Area of D_p: 4*Gamma(1+1/p)^2 / Gamma(1+2/p). Accepts p = 1 and infinity.
double volume(double p);

/// sigma_p = (2^p - 1)^(1/p).
double sigma(double p);

/// The root tau_p in [0, 1) of 2(1-tau)^p = 1 + tau^p.
double tau(double p);

/// The exponent p0 in (2.57, 2.58) where delta0 = delta1. Cached.
double davis_constant();

Regime regime(double p);

CriticalData critical_data(double p);

/// Critical determinant of 2^m D_p: 4^m * delta_crit(p).
double scaled_critical_determinant(double p, int m);

// Number of integer vectors x in [-box, box]^n with
// sum_i floor(|x_i|^c) = m, by exhaustive enumeration. n in {2,3,4};
// box must cover every coordinate that can contribute (box ~ (m+1)^(1/c)).
long long count_arithmetic_sphere(int n, double c, long long m, long long box);

/// The vectors behind count_arithmetic_sphere, in odometer order.
std::vector<std::vector<long long>> arithmetic_sphere_points(int n, double c, long long m,
                                                             long long box);

/// Smallest box that covers every contributing coordinate.
long long arithmetic_sphere_box(double c, long long m);

/// Scales each vector by lambda^(-1/c); order preserved, no filtering.
std::vector<std::vector<double>> project_to_unit_sphere(
    const std::vector<std::vector<long long>>& points, double c, long long lambda);

}  // namespace minkball
