#include "minkball/numerics.hpp"

#include <cmath>

namespace minkball {

double gamma_fn(double x) {
    if (!std::isfinite(x) || x <= 0.0)
        throw std::domain_error("gamma_fn: argument must be finite and positive");

    // Lanczos, g = 7, 9 coefficients.
    static const double g = 7.0;
    static const double coef[9] = {
        0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
        771.32342877765313,     -176.61502916214059,    12.507343278686905,
        -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

    if (x < 0.5) {
        // reflection; x in (0, 0.5) here so 1-x is in the main branch
        return M_PI / (std::sin(M_PI * x) * gamma_fn(1.0 - x));
    }

    const double z = x - 1.0;
    double s = coef[0];
    for (int i = 1; i < 9; ++i) s += coef[i] / (z + i);
    const double t = z + g + 0.5;
    return std::sqrt(2.0 * M_PI) * std::pow(t, z + 0.5) * std::exp(-t) * s;
}

double solve_bracketed(const std::function<double(double)>& f, double a, double b,
                       const Tolerance& tol) {
    double fa = f(a);
    double fb = f(b);
    if (std::abs(fa) <= tol.abs_tol) return a;
    if (std::abs(fb) <= tol.abs_tol) return b;
    if ((fa > 0.0) == (fb > 0.0))
        throw bracket_error("solve_bracketed: no sign change on [a, b]");

    double x = a, fx = fa;
    for (int it = 0; it < tol.max_iter; ++it) {
        const double width = std::abs(b - a);
        const double mid = 0.5 * (a + b);

        // secant candidate, accepted only if it lands strictly inside and
        // makes reasonable progress; otherwise bisect
        x = mid;
        const double denom = fb - fa;
        if (denom != 0.0) {
            const double sx = (a * fb - b * fa) / denom;
            const double lo = std::fmin(a, b), hi = std::fmax(a, b);
            const double guard = 0.01 * width;
            if (sx > lo + guard && sx < hi - guard) x = sx;
        }

        fx = f(x);
        if (std::abs(fx) <= tol.abs_tol) return x;
        if ((fx > 0.0) == (fa > 0.0)) {
            a = x;
            fa = fx;
        } else {
            b = x;
            fb = fx;
        }
        if (std::abs(b - a) <= tol.abs_tol + tol.rel_tol * std::abs(x)) return x;
    }
    throw convergence_error("solve_bracketed: max_iter exceeded");
}

double pnorm(double p, Vec2 v) {
    if (!(p >= 1.0)) throw std::domain_error("pnorm: p must be >= 1");
    const double ax = std::abs(v.x);
    const double ay = std::abs(v.y);
    if (std::isinf(p)) return std::fmax(ax, ay);
    const double m = std::fmax(ax, ay);
    if (m == 0.0) return 0.0;
    return m * std::pow(std::pow(ax / m, p) + std::pow(ay / m, p), 1.0 / p);
}

Vec2 boundary_point(double p, double theta) {
    if (!(p >= 1.0) || std::isinf(p))
        throw std::domain_error("boundary_point: p must be finite and >= 1");
    double c = std::cos(theta);
    double s = std::sin(theta);
    // sin/cos at multiples of pi/2 leave ~1e-16 residue that the 2/p power
    // would inflate badly for large p; snap it out
    if (std::abs(c) < 1e-15) c = 0.0;
    if (std::abs(s) < 1e-15) s = 0.0;
    const double e = 2.0 / p;
    return {std::copysign(std::pow(std::abs(c), e), c),
            std::copysign(std::pow(std::abs(s), e), s)};
}

}  // namespace minkball
