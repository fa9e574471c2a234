#include "minkball/covering.hpp"

#include <algorithm>
#include <cmath>

namespace minkball {

namespace {

// boundary pair generators of the moduli lattice at (sigma, tau)
Vec2 moduli_u(double p, double t) {
    const double s = std::pow(1.0 + std::pow(t, p), -1.0 / p);
    return {s, s * t};
}

Vec2 moduli_v(double p, double sig) {
    const double s = std::pow(1.0 + std::pow(sig, p), -1.0 / p);
    return {-s, s * sig};
}

double third_point_residual(double p, double sig, double t) {
    return pnorm(p, moduli_u(p, t) + moduli_v(p, sig)) - 1.0;
}

double shoelace(const std::array<Vec2, 6>& v) {
    double s = 0.0;
    for (size_t i = 0; i < 6; ++i) s += cross(v[i], v[(i + 1) % 6]);
    return 0.5 * std::abs(s);
}

std::array<Vec2, 6> sorted_by_angle(std::array<Vec2, 6> v) {
    std::sort(v.begin(), v.end(), [](Vec2 a, Vec2 b) {
        return std::atan2(a.y, a.x) < std::atan2(b.y, b.x);
    });
    return v;
}

std::array<Vec2, 6> symmetric_hexagon(double p, double t1, double t2, double t3) {
    const Vec2 w1 = boundary_point(p, t1);
    const Vec2 w2 = boundary_point(p, t2);
    const Vec2 w3 = boundary_point(p, t3);
    return sorted_by_angle({w1, w2, w3, -w1, -w2, -w3});
}

double check_sigma_domain(double p, double sig) {
    const double top = sigma(p);
    if (sig < 1.0 - 1e-12 || sig > top + 1e-12)
        throw std::domain_error("sigma outside the moduli domain [1, sigma_p]");
    return std::clamp(sig, 1.0, top);
}

}  // namespace

const char* hex_kind_name(HexKind k) {
    switch (k) {
        case HexKind::InscribedAl: return "inscribed-al";
        case HexKind::InscribedFree: return "inscribed-free";
        case HexKind::Circumscribed: return "circumscribed";
    }
    return "?";
}

double tau_of_sigma(double p, double sig) {
    if (!(p > 1.0) || std::isinf(p))
        throw std::domain_error("tau_of_sigma: p must be finite and > 1");
    sig = check_sigma_domain(p, sig);
    const double tp = tau(p);
    auto f = [&](double t) { return third_point_residual(p, sig, t); };

    // the root sits at an endpoint for sigma = sigma_p (tau = 0) and
    // sigma = 1 (tau = tau_p)
    double root;
    if (std::abs(f(0.0)) <= 1e-13)
        root = 0.0;
    else if (std::abs(f(tp)) <= 1e-13)
        root = tp;
    else
        root = solve_bracketed(f, 0.0, tp, Tolerance{1e-14, 0.0, 300});

    root = std::clamp(root, 0.0, tp);
    if (std::abs(f(root)) > 1e-10)
        throw convergence_error("tau_of_sigma: third-point residual too large");
    return root;
}

ModuliPoint moduli_point(double p, double sig) {
    sig = check_sigma_domain(p, sig);
    ModuliPoint mp;
    mp.p = p;
    mp.sigma = sig;
    mp.tau = tau_of_sigma(p, sig);
    mp.delta = (mp.tau + sig) * std::pow(1.0 + std::pow(mp.tau, p), -1.0 / p) *
               std::pow(1.0 + std::pow(sig, p), -1.0 / p);
    mp.third_point_residual = std::abs(third_point_residual(p, sig, mp.tau));
    return mp;
}

double moduli_area(double p, double sig) { return 3.0 * moduli_point(p, sig).delta; }

FreeModuliValue moduli_area_free(double p, double sig, double tau_free) {
    if (!(p > 1.0) || std::isinf(p))
        throw std::domain_error("moduli_area_free: p must be finite and > 1");
    if (!(sig >= 1.0) || !(tau_free >= 0.0) || !(tau_free < 1.0))
        throw std::domain_error("moduli_area_free: need sigma >= 1 and 0 <= tau < 1");
    FreeModuliValue out;
    out.area = 3.0 * (tau_free + sig) * std::pow(1.0 + std::pow(tau_free, p), -1.0 / p) *
               std::pow(1.0 + std::pow(sig, p), -1.0 / p);
    out.residual = std::abs(third_point_residual(p, sig, tau_free));
    return out;
}

double sigma_alpha(double p, double alpha) {
    if (!(p > 1.0) || std::isinf(p)) throw std::domain_error("sigma_alpha: p must be finite and > 1");
    if (!(alpha >= 1.0)) throw std::domain_error("sigma_alpha: alpha must be >= 1");
    return std::pow(std::pow(2.0, p) - 1.0, 1.0 / (alpha * p));
}

double section_curve(double p, double alpha) { return moduli_area(p, sigma_alpha(p, alpha)); }

double min_A(double p) {
    const CriticalData d = critical_data(p);
    return 3.0 * std::fmin(d.delta0, d.delta1);
}

double i_min_A(double p) {
    const CriticalData d = critical_data(p);
    return 3.0 * std::fmax(d.delta0, d.delta1);
}

CoveringBounds covering_bounds(double p) {
    CoveringBounds b;
    const double vol = volume(p);
    b.sas_lower = 1.5 * std::sqrt(3.0) / M_PI * vol;
    b.i_min_lower = i_min_A(p);
    b.trivial_upper = vol;
    return b;
}

HexagonReport al_hexagon(double p, double sig) {
    const ModuliPoint mp = moduli_point(p, sig);
    const Vec2 u = moduli_u(p, mp.tau);
    const Vec2 v = moduli_v(p, sig);
    const Vec2 w = u + v;
    HexagonReport rep;
    rep.vertices = sorted_by_angle({u, w, v, -u, -w, -v});
    rep.area = shoelace(rep.vertices);
    rep.kind = HexKind::InscribedAl;
    return rep;
}

HexagonReport max_inscribed_hexagon(double p) {
    if (!(p > 1.0) || std::isinf(p))
        throw std::domain_error("max_inscribed_hexagon: p must be finite and > 1");

    // coarse pass: 1-degree grid over three angles in [0, pi)
    constexpr int n = 180;
    std::array<Vec2, n> pts;
    for (int i = 0; i < n; ++i) pts[i] = boundary_point(p, i * M_PI / n);

    double best = 0.0;
    std::array<double, 3> th{0.0, 0.0, 0.0};
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double cij = cross(pts[i], pts[j]);
            for (int k = j + 1; k < n; ++k) {
                const double a = cij + cross(pts[j], pts[k]) + cross(pts[i], pts[k]);
                if (a > best) {
                    best = a;
                    th = {i * M_PI / n, j * M_PI / n, k * M_PI / n};
                }
            }
        }
    }

    // deterministic pattern refinement down to 1e-8 in theta
    auto area_of = [&](const std::array<double, 3>& t) {
        return shoelace(symmetric_hexagon(p, t[0], t[1], t[2]));
    };
    best = area_of(th);
    double step = M_PI / n;
    while (step > 1e-8) {
        bool improved = false;
        for (int i = 0; i < 3; ++i) {
            for (double d : {-step, step}) {
                std::array<double, 3> cand = th;
                cand[i] += d;
                const double a = area_of(cand);
                if (a > best + 1e-15) {
                    best = a;
                    th = cand;
                    improved = true;
                }
            }
        }
        if (!improved) step *= 0.5;
    }

    HexagonReport rep;
    rep.vertices = symmetric_hexagon(p, th[0], th[1], th[2]);
    rep.area = best;
    rep.kind = HexKind::InscribedFree;
    return rep;
}

double covering_density(double p, double gamma) {
    if (!(gamma > 0.0)) throw std::domain_error("covering_density: gamma must be > 0");
    return volume(p) / gamma;
}

double inscribed_min_area(double p, int m) { return 3.0 * scaled_critical_determinant(p, m); }

double circumscribed_min_area(double p, int m) { return 4.0 * scaled_critical_determinant(p, m); }

HexagonReport circumscribed_hexagon(double p, const ShellSet& sh) {
    if (!(p > 1.0) || std::isinf(p))
        throw std::domain_error("circumscribed_hexagon: p must be finite and > 1");

    // tangent line at a curve point (x0, y0) is n . z = 1 with
    // n = (sgn(x0)|x0|^(p-1), sgn(y0)|y0|^(p-1)); the hexagon vertices are
    // the intersections of tangents at angularly consecutive shell points
    std::array<Vec2, 6> normals;
    for (size_t i = 0; i < 6; ++i) {
        const Vec2 q = sh.points[i];
        normals[i] = {std::copysign(std::pow(std::abs(q.x), p - 1.0), q.x),
                      std::copysign(std::pow(std::abs(q.y), p - 1.0), q.y)};
    }
    HexagonReport rep;
    for (size_t i = 0; i < 6; ++i) {
        const Vec2 n1 = normals[i];
        const Vec2 n2 = normals[(i + 1) % 6];
        const double det = cross(n1, n2);
        if (std::abs(det) < 1e-12)
            throw consistency_error("circumscribed_hexagon: parallel tangents");
        rep.vertices[i] = {(n2.y - n1.y) / det, (n1.x - n2.x) / det};
    }
    rep.area = shoelace(rep.vertices);
    rep.kind = HexKind::Circumscribed;
    return rep;
}

}  // namespace minkball
