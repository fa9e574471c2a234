#pragma once

#include <array>
#include <vector>

#include "minkball/numerics.hpp"

namespace minkball {

struct LatticeBasis {
    Vec2 u;
    Vec2 v;
    double det = 0.0;  // signed cross product u x v

    LatticeBasis(Vec2 u_, Vec2 v_);
    double abs_det() const { return det < 0 ? -det : det; }
    LatticeBasis scaled(double s) const { return {s * u, s * v}; }
};

// 2x2 integer matrix, row-major.
struct Mat2i {
    long long a11 = 1, a12 = 0, a21 = 0, a22 = 1;
    long long det() const { return a11 * a22 - a12 * a21; }
};

// The six lattice points on the curve |x|^p + |y|^p = 1, sorted by
// polar angle. Three antipodal pairs.
struct ShellSet {
    std::array<Vec2, 6> points{};
};

/// Basis ((1,0), (1/2, sigma_p/2)).
LatticeBasis critical_lattice_0(double p);

// Basis (u, v) with u = (-2^(-1/p), 2^(-1/p)) and v the boundary point
// for which v - u is also on the boundary. v has no closed form for
// general p; it is found by a theta scan plus bisection and checked
// against delta1.
LatticeBasis critical_lattice_1(double p);

/// Shell of an admissible basis with three boundary pairs; throws
/// consistency_error unless exactly 6 points are found.
ShellSet shell(double p, const LatticeBasis& basis, const Tolerance& tol = {});

// All boundary points Q with |P x Q| = d (two residual branches scanned
// over theta). Empty result means no solution; not an error.
std::vector<Vec2> solve_companion_point(double p, Vec2 P, double d);

/// True iff no nonzero lattice point lies strictly inside scale * D_p.
bool is_admissible(double p, double scale, const LatticeBasis& basis);

/// Basis (a11*u + a12*v, a21*u + a22*v); determinant scales by |det M|.
LatticeBasis sublattice(const LatticeBasis& basis, const Mat2i& M);

}  // namespace minkball
