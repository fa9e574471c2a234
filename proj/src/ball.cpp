#include "minkball/ball.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace minkball {

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::Minkowski: return "minkowski";
        case Regime::Davis: return "davis";
        case Regime::ChebyshevMordell: return "chebyshev-mordell";
        case Regime::LimitP1: return "limit-p1";
        case Regime::LimitPInf: return "limit-pinf";
    }
    return "?";
}

double volume(double p) {
    if (!(p >= 1.0)) throw std::domain_error("volume: p must be >= 1");
    if (std::isinf(p)) return 4.0;
    return 4.0 * std::pow(gamma_fn(1.0 + 1.0 / p), 2) / gamma_fn(1.0 + 2.0 / p);
}

double sigma(double p) {
    if (!(p >= 1.0) || std::isinf(p)) throw std::domain_error("sigma: p must be finite and >= 1");
    return std::pow(std::pow(2.0, p) - 1.0, 1.0 / p);
}

double tau(double p) {
    if (!(p >= 1.0) || std::isinf(p)) throw std::domain_error("tau: p must be finite and >= 1");
    auto f = [p](double t) { return 2.0 * std::pow(1.0 - t, p) - 1.0 - std::pow(t, p); };
    // f(0) = 1, f(1-) < 0, strictly decreasing
    return solve_bracketed(f, 0.0, 1.0 - 1e-14, Tolerance{1e-14, 0.0, 300});
}

namespace {

double delta0_of(double p) { return 0.5 * sigma(p); }

double delta1_of(double p) {
    const double t = tau(p);
    return std::pow(4.0, -1.0 / p) * (1.0 + t) / (1.0 - t);
}

double compute_davis_constant() {
    auto f = [](double p) { return delta0_of(p) - delta1_of(p); };
    return solve_bracketed(f, 2.57, 2.58, Tolerance{1e-13, 0.0, 300});
}

}  // namespace

double davis_constant() {
    static const double p0 = compute_davis_constant();
    return p0;
}

Regime regime(double p) {
    if (!(p >= 1.0)) throw std::domain_error("regime: p must be >= 1");
    if (p == 1.0) return Regime::LimitP1;
    if (std::isinf(p)) return Regime::LimitPInf;
    if (p < 2.0) return Regime::Minkowski;
    if (p < davis_constant()) return Regime::Davis;
    return Regime::ChebyshevMordell;
}

CriticalData critical_data(double p) {
    if (!(p > 1.0) || std::isinf(p))
        throw std::domain_error("critical_data: p must be finite and > 1");
    CriticalData d;
    d.p = p;
    d.sigma_p = sigma(p);
    d.tau_p = tau(p);
    d.delta0 = 0.5 * d.sigma_p;
    d.delta1 = std::pow(4.0, -1.0 / p) * (1.0 + d.tau_p) / (1.0 - d.tau_p);
    // delta1 branch on (1,2] and [p0,inf), delta0 branch on [2,p0];
    // that selection is exactly the smaller of the two, and the branches
    // agree at both seams.
    d.delta_crit = std::fmin(d.delta0, d.delta1);
    d.regime = regime(p);
    return d;
}

double scaled_critical_determinant(double p, int m) {
    if (m < 0) throw std::domain_error("scaled_critical_determinant: m must be >= 0");
    // planar critical determinants are homogeneous of degree 2 in the dilation
    return std::exp2(2.0 * m) * critical_data(p).delta_crit;
}

namespace {

long long floor_pow(long long x, double c) {
    return static_cast<long long>(std::floor(std::pow(std::abs(static_cast<double>(x)), c)));
}

}  // namespace

namespace {

template <typename Visit>
void enumerate_arithmetic_sphere(int n, double c, long long m, long long box, Visit&& visit) {
    if (n < 2 || n > 4) throw std::domain_error("count_arithmetic_sphere: n must be 2, 3 or 4");
    if (!(c > 1.0)) throw std::domain_error("count_arithmetic_sphere: c must be > 1");
    if (m < 0 || box < 1) throw std::domain_error("count_arithmetic_sphere: need m >= 0, box >= 1");
    const double width = 2.0 * static_cast<double>(box) + 1.0;
    if (std::pow(width, n) > 2e8)
        throw std::domain_error("count_arithmetic_sphere: enumeration too large");

    // per-coordinate terms are symmetric in the sign, so precompute floor(|x|^c)
    std::vector<long long> term(static_cast<size_t>(box) + 1);
    for (long long x = 0; x <= box; ++x) term[static_cast<size_t>(x)] = floor_pow(x, c);

    std::vector<long long> x(static_cast<size_t>(n), -box);
    while (true) {
        long long s = 0;
        for (int i = 0; i < n; ++i)
            s += term[static_cast<size_t>(std::llabs(x[static_cast<size_t>(i)]))];
        if (s == m) visit(x);
        int i = 0;
        while (i < n && ++x[static_cast<size_t>(i)] > box) x[static_cast<size_t>(i++)] = -box;
        if (i == n) break;
    }
}

}  // namespace

long long count_arithmetic_sphere(int n, double c, long long m, long long box) {
    long long count = 0;
    enumerate_arithmetic_sphere(n, c, m, box, [&count](const std::vector<long long>&) { ++count; });
    return count;
}

std::vector<std::vector<long long>> arithmetic_sphere_points(int n, double c, long long m,
                                                             long long box) {
    std::vector<std::vector<long long>> pts;
    enumerate_arithmetic_sphere(n, c, m, box,
                                [&pts](const std::vector<long long>& x) { pts.push_back(x); });
    return pts;
}

long long arithmetic_sphere_box(double c, long long m) {
    if (!(c > 1.0)) throw std::domain_error("arithmetic_sphere_box: c must be > 1");
    if (m < 0) throw std::domain_error("arithmetic_sphere_box: m must be >= 0");
    long long box = static_cast<long long>(std::ceil(std::pow(static_cast<double>(m) + 1.0, 1.0 / c)));
    while (box > 1 && floor_pow(box, c) > m) --box;
    return std::max<long long>(box, 1);
}

std::vector<std::vector<double>> project_to_unit_sphere(
    const std::vector<std::vector<long long>>& points, double c, long long lambda) {
    if (!(c > 1.0)) throw std::domain_error("project_to_unit_sphere: c must be > 1");
    if (lambda < 1) throw std::domain_error("project_to_unit_sphere: lambda must be >= 1");
    const double scale = std::pow(static_cast<double>(lambda), -1.0 / c);
    std::vector<std::vector<double>> out;
    out.reserve(points.size());
    for (const auto& pt : points) {
        std::vector<double> q;
        q.reserve(pt.size());
        for (long long xi : pt) q.push_back(scale * static_cast<double>(xi));
        out.push_back(std::move(q));
    }
    return out;
}

}  // namespace minkball
