#pragma once

#include <array>

#include "minkball/ball.hpp"
#include "minkball/lattice.hpp"

namespace minkball {

// A point of the hexagon moduli surface. The admissible lattice with
// boundary pairs at
//   u = (1+tau^p)^(-1/p) (1, tau),   v = (1+sigma^p)^(-1/p) (-1, sigma)
// has determinant
//   delta = (tau + sigma) (1+tau^p)^(-1/p) (1+sigma^p)^(-1/p),
// where tau is fixed by requiring u + v to lie on the curve as well
// (the third boundary pair). third_point_residual is |pnorm(u+v) - 1|.
struct ModuliPoint {
    double p = 0.0;
    double sigma = 0.0;
    double tau = 0.0;
    double delta = 0.0;
    double third_point_residual = 0.0;
};

enum class HexKind { InscribedAl, InscribedFree, Circumscribed };

const char* hex_kind_name(HexKind k);

struct HexagonReport {
    std::array<Vec2, 6> vertices{};
    double area = 0.0;
    HexKind kind = HexKind::InscribedAl;
};

/// The tau in [0, tau_p] closing the third boundary pair for given sigma.
double tau_of_sigma(double p, double sigma);

ModuliPoint moduli_point(double p, double sigma);

/// A(sigma, p) = 3 * delta(p, sigma) over the domain 1 <= sigma <= sigma_p.
double moduli_area(double p, double sigma);

// A evaluated at a freely chosen tau, with the third-point constraint
// residual reported instead of enforced.
struct FreeModuliValue {
    double area = 0.0;
    double residual = 0.0;
};
FreeModuliValue moduli_area_free(double p, double sigma, double tau_free);

/// sigma_{alpha,p} = (2^p - 1)^(1/(alpha p)).
double sigma_alpha(double p, double alpha);

/// Section of the moduli surface along sigma_{alpha,p}.
double section_curve(double p, double alpha);

/// min over the moduli surface section at p: 3 * min(delta0, delta1).
double min_A(double p);

/// The complementary branch: 3 * max(delta0, delta1).
double i_min_A(double p);

struct CoveringBounds {
    double sas_lower = 0.0;     // (3*sqrt(3) / 2*pi) * V(D_p)
    double i_min_lower = 0.0;   // i_min_A(p)
    double trivial_upper = 0.0; // V(D_p)
};
CoveringBounds covering_bounds(double p);

/// Hexagon with vertices u, u+v, v and antipodes for the moduli point at sigma.
HexagonReport al_hexagon(double p, double sigma);

// Maximal-area centrally symmetric hexagon inscribed in D_p, vertices
// boundary_point(theta_1..3) and antipodes. Coarse 1-degree grid over the
// three angles followed by deterministic pattern refinement to 1e-8.
HexagonReport max_inscribed_hexagon(double p);

/// V(D_p) / gamma.
double covering_density(double p, double gamma);

/// 3 * Delta(2^m D_p): least area among inscribed hexagons with three
/// boundary pairs.
double inscribed_min_area(double p, int m);

/// 4 * Delta(2^m D_p): least area among circumscribed hexagons touching
/// at three boundary pairs.
double circumscribed_min_area(double p, int m);

/// Hexagon bounded by the tangent lines at the six shell points.
HexagonReport circumscribed_hexagon(double p, const ShellSet& sh);

}  // namespace minkball
