#pragma once

#include <functional>
#include <limits>
#include <stdexcept>

namespace minkball {

// Flag value for the limit exponent p = infinity.
inline constexpr double p_infinity = std::numeric_limits<double>::infinity();

struct Tolerance {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    int max_iter = 200;
};

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

struct bracket_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct convergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct consistency_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Gamma function for x > 0 (Lanczos approximation, g = 7).
double gamma_fn(double x);

// Root of f on [a, b] given f(a)*f(b) <= 0. Bisection with secant
// acceleration; deterministic. Stops when |f(r)| <= abs_tol or the
// bracket width drops below abs_tol + rel_tol*|r|.
double solve_bracketed(const std::function<double(double)>& f, double a, double b,
                       const Tolerance& tol = {});

/// (|x|^p + |y|^p)^(1/p); max(|x|,|y|) for the p = infinity flag.
double pnorm(double p, Vec2 v);

/// Point of the curve |x|^p + |y|^p = 1 at parameter theta:
/// (sgn(cos)|cos|^(2/p), sgn(sin)|sin|^(2/p)).
Vec2 boundary_point(double p, double theta);

}  // namespace minkball
