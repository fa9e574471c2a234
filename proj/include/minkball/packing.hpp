#pragma once

#include "minkball/ball.hpp"
#include "minkball/lattice.hpp"

namespace minkball {

struct PackingReport {
    Ball ball;
    LatticeBasis lattice;
    double density = 0.0;
    bool optimal = false;
    int kissing = 0;
};

/// A lattice packs 2^m D_p iff it is admissible for 2^(m+1) D_p.
bool is_packing_lattice(double p, int m, const LatticeBasis& basis);

// 2^(m+1) times the critical lattice of D_p (Lambda^(1) in the Minkowski
// and Chebyshev-Mordell regimes, Lambda^(0) in the Davis regime).
LatticeBasis optimal_packing_lattice(double p, int m);

/// V(2^m D_p) / Delta(2^(m+1) D_p); independent of m.
double packing_density(double p, int m);

/// Number of optimal-packing-lattice points at p-distance 2^(m+1).
int kissing_number(double p, int m);

PackingReport packing_report(double p, int m);

}  // namespace minkball
