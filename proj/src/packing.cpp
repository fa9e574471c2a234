#include "minkball/packing.hpp"

#include <cmath>

namespace minkball {

bool is_packing_lattice(double p, int m, const LatticeBasis& basis) {
    if (m < 0) throw std::domain_error("is_packing_lattice: m must be >= 0");
    // translates of 2^m D_p do not overlap iff the lattice is admissible
    // for the doubled domain
    return is_admissible(p, std::exp2(m + 1), basis);
}

LatticeBasis optimal_packing_lattice(double p, int m) {
    if (m < 0) throw std::domain_error("optimal_packing_lattice: m must be >= 0");
    const Regime r = regime(p);
    const LatticeBasis critical =
        (r == Regime::Davis) ? critical_lattice_0(p) : critical_lattice_1(p);
    return critical.scaled(std::exp2(m + 1));
}

double packing_density(double p, int m) {
    if (m < 0) throw std::domain_error("packing_density: m must be >= 0");
    return volume(p) * std::exp2(2.0 * m) / scaled_critical_determinant(p, m + 1);
}

int kissing_number(double p, int m) {
    const LatticeBasis lat = optimal_packing_lattice(p, m);
    const double s = std::exp2(m + 1);
    // same enumeration bound as the admissibility check
    const double inv = 1.0 / lat.det;
    const double r1 = std::abs(lat.v.y * inv) + std::abs(lat.v.x * inv);
    const double r2 = std::abs(lat.u.y * inv) + std::abs(lat.u.x * inv);
    const long long bound =
        static_cast<long long>(std::ceil(std::max(r1, r2) * s * std::pow(2.0, 1.0 - 1.0 / p))) + 1;

    int count = 0;
    for (long long a = -bound; a <= bound; ++a) {
        for (long long b = -bound; b <= bound; ++b) {
            if (a == 0 && b == 0) continue;
            const Vec2 xi = static_cast<double>(a) * lat.u + static_cast<double>(b) * lat.v;
            if (std::abs(pnorm(p, xi) - s) <= 1e-9) ++count;
        }
    }
    return count;
}

PackingReport packing_report(double p, int m) {
    PackingReport rep{Ball{p, m}, optimal_packing_lattice(p, m), packing_density(p, m), false,
                      kissing_number(p, m)};
    rep.optimal = is_packing_lattice(p, m, rep.lattice);
    return rep;
}

}  // namespace minkball
