#include "minkball/lattice.hpp"

#include <algorithm>
#include <cmath>

#include "minkball/ball.hpp"

namespace minkball {

LatticeBasis::LatticeBasis(Vec2 u_, Vec2 v_) : u(u_), v(v_), det(cross(u_, v_)) {
    if (det == 0.0) throw std::domain_error("LatticeBasis: degenerate basis");
}

namespace {

// All curve points where the residual g vanishes. The curve is covered
// by four arcs, each parameterized by its smaller coordinate over
// [-knee, knee]; in that parameter the coordinates are Lipschitz with
// constant 1, unlike the angle parameterization, which degrades badly
// near the axes and corners for large p.
std::vector<Vec2> curve_roots(double p, const std::function<double(Vec2)>& g) {
    const double knee = std::pow(2.0, -1.0 / p);
    auto on_arc = [&](int arc, double t) -> Vec2 {
        const double other = std::pow(1.0 - std::pow(std::abs(t), p), 1.0 / p);
        switch (arc) {
            case 0: return {other, t};
            case 1: return {-other, t};
            case 2: return {t, other};
            default: return {t, -other};
        }
    };

    const int n = 2048;
    const double step = 2.0 * knee / n;
    std::vector<Vec2> found;
    for (int arc = 0; arc < 4; ++arc) {
        auto f = [&](double t) { return g(on_arc(arc, t)); };
        double prev = f(-knee);
        for (int i = 1; i <= n; ++i) {
            const double t = -knee + i * step;
            const double cur = f(t);
            if (prev == 0.0 || (prev > 0.0) != (cur > 0.0)) {
                const double r =
                    solve_bracketed(f, -knee + (i - 1) * step, t, Tolerance{1e-15, 1e-14, 300});
                found.push_back(on_arc(arc, r));
            }
            prev = cur;
        }
        // a root exactly at the far corner leaves no sign change behind
        if (std::abs(f(knee)) <= 1e-12) found.push_back(on_arc(arc, knee));
    }
    // arc seams produce duplicates
    std::sort(found.begin(), found.end(), [](Vec2 lhs, Vec2 rhs) {
        return std::atan2(lhs.y, lhs.x) < std::atan2(rhs.y, rhs.x);
    });
    std::vector<Vec2> out;
    for (const Vec2& q : found) {
        if (!out.empty() && std::abs(q.x - out.back().x) < 1e-8 &&
            std::abs(q.y - out.back().y) < 1e-8)
            continue;
        out.push_back(q);
    }
    return out;
}

}  // namespace

LatticeBasis critical_lattice_0(double p) {
    return {{1.0, 0.0}, {0.5, 0.5 * sigma(p)}};
}

LatticeBasis critical_lattice_1(double p) {
    if (!(p > 1.0) || std::isinf(p))
        throw std::domain_error("critical_lattice_1: p must be finite and > 1");
    const double a = std::pow(2.0, -1.0 / p);
    const Vec2 u{-a, a};

    // v is the boundary point with v - u on the boundary as well. The
    // residual has exactly two roots (v and u - v); take the upper one,
    // which matches the closed-form vector known for p = 2.
    const std::vector<Vec2> roots =
        curve_roots(p, [&](Vec2 q) { return pnorm(p, q - u) - 1.0; });
    if (roots.empty()) throw convergence_error("critical_lattice_1: no companion point found");
    const Vec2 v = *std::max_element(roots.begin(), roots.end(), [](Vec2 lhs, Vec2 rhs) {
        return lhs.y != rhs.y ? lhs.y < rhs.y : lhs.x < rhs.x;
    });

    LatticeBasis basis{u, v};
    const double want = critical_data(p).delta1;
    if (std::abs(basis.abs_det() - want) > 1e-9)
        throw consistency_error("critical_lattice_1: determinant does not match delta1");
    return basis;
}

ShellSet shell(double p, const LatticeBasis& basis, const Tolerance& tol) {
    const double boundary_tol = std::max(tol.abs_tol, 1e-9);
    std::vector<Vec2> pts;
    for (int a = -3; a <= 3; ++a) {
        for (int b = -3; b <= 3; ++b) {
            if (a == 0 && b == 0) continue;
            const Vec2 xi = static_cast<double>(a) * basis.u + static_cast<double>(b) * basis.v;
            if (std::abs(pnorm(p, xi) - 1.0) <= boundary_tol) pts.push_back(xi);
        }
    }
    if (pts.size() != 6) throw consistency_error("shell: expected exactly 6 boundary points");
    std::sort(pts.begin(), pts.end(), [](Vec2 lhs, Vec2 rhs) {
        return std::atan2(lhs.y, lhs.x) < std::atan2(rhs.y, rhs.x);
    });
    ShellSet s;
    std::copy(pts.begin(), pts.end(), s.points.begin());
    return s;
}

std::vector<Vec2> solve_companion_point(double p, Vec2 P, double d) {
    if (std::abs(pnorm(p, P) - 1.0) > 1e-9)
        throw std::domain_error("solve_companion_point: P must lie on the curve");
    if (!(d > 0.0)) throw std::domain_error("solve_companion_point: d must be > 0");

    // |P x Q| = d splits into the two branches P x Q = +/- d
    std::vector<Vec2> found = curve_roots(p, [&](Vec2 q) { return cross(P, q) - d; });
    const std::vector<Vec2> lower = curve_roots(p, [&](Vec2 q) { return cross(P, q) + d; });
    found.insert(found.end(), lower.begin(), lower.end());

    std::sort(found.begin(), found.end(), [](Vec2 lhs, Vec2 rhs) {
        return std::atan2(lhs.y, lhs.x) < std::atan2(rhs.y, rhs.x);
    });
    std::vector<Vec2> out;
    for (const Vec2& q : found) {
        if (!out.empty() && std::abs(q.x - out.back().x) < 1e-8 &&
            std::abs(q.y - out.back().y) < 1e-8)
            continue;
        out.push_back(q);
    }
    return out;
}

bool is_admissible(double p, double scale, const LatticeBasis& basis) {
    if (!(p > 1.0) || std::isinf(p)) throw std::domain_error("is_admissible: p must be finite and > 1");
    if (!(scale > 0.0)) throw std::domain_error("is_admissible: scale must be > 0");

    // coefficient bound: (a,b) = B^-1 xi, so |a|,|b| are at most the max
    // row sum of B^-1 times a sup-norm bound for points with pnorm <= scale
    const double inv = 1.0 / basis.det;
    const double r1 = std::abs(basis.v.y * inv) + std::abs(basis.v.x * inv);
    const double r2 = std::abs(basis.u.y * inv) + std::abs(basis.u.x * inv);
    const double reach = scale * std::pow(2.0, 1.0 - 1.0 / p);
    const long long bound = static_cast<long long>(std::ceil(std::max(r1, r2) * reach));
    if (bound > 20000) throw std::domain_error("is_admissible: basis too skew to enumerate");

    const double limit = scale * (1.0 - 1e-9);
    for (long long a = -bound; a <= bound; ++a) {
        for (long long b = -bound; b <= bound; ++b) {
            if (a == 0 && b == 0) continue;
            const Vec2 xi = static_cast<double>(a) * basis.u + static_cast<double>(b) * basis.v;
            if (pnorm(p, xi) < limit) return false;
        }
    }
    return true;
}

LatticeBasis sublattice(const LatticeBasis& basis, const Mat2i& M) {
    if (M.det() == 0) throw std::domain_error("sublattice: det M must be nonzero");
    const Vec2 u = static_cast<double>(M.a11) * basis.u + static_cast<double>(M.a12) * basis.v;
    const Vec2 v = static_cast<double>(M.a21) * basis.u + static_cast<double>(M.a22) * basis.v;
    return {u, v};
}

}  // namespace minkball
