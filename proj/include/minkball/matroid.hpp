#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "minkball/numerics.hpp"

namespace minkball {

// Finite matroid given by its independent sets. Subsets of the ground
// set are bitmasks over the label indices; |ground| <= 10 so every
// axiom can be checked exhaustively.
struct FiniteMatroid {
    std::vector<std::string> ground;
    std::vector<uint32_t> independents;  // sorted, unique

    bool is_independent(uint32_t mask) const;
    int rank(uint32_t mask) const;
    int rank() const;
    std::vector<uint32_t> bases() const;
};

FiniteMatroid uniform(int k, int n);

/// Linear matroid of a list of labeled vectors (dimension <= 4,
/// at most 10 vectors); independence by Gaussian elimination at tol 1e-10.
FiniteMatroid from_vectors(
    const std::vector<std::pair<std::string, std::vector<double>>>& vectors,
    double tol = 1e-10);

/// Minimal dependent sets.
std::vector<uint32_t> circuits(const FiniteMatroid& M);

/// Rank-closed sets: F with rank(F + e) > rank(F) for every e outside F.
std::vector<uint32_t> flats(const FiniteMatroid& M);

/// Exhaustive search for a relabeling bijection mapping independents onto
/// independents. Ground sets up to 8 elements.
bool is_isomorphic(const FiniteMatroid& M, const FiniteMatroid& N);

// Exhaustive axiom checkers. Used both as library validators and as the
// oracles behind the test suite.
bool check_independence_axioms(const FiniteMatroid& M);
bool check_circuit_axioms(const FiniteMatroid& M, const std::vector<uint32_t>& C);
bool check_flat_axioms(const FiniteMatroid& M, const std::vector<uint32_t>& F);

// Matroid whose elements carry coordinates and whose bases carry the
// area/volume of the lattice cell they span.
struct MetrizedMatroid {
    FiniteMatroid matroid;
    std::vector<std::vector<double>> vectors;          // per ground element
    std::vector<std::pair<uint32_t, double>> metric;   // basis mask -> |det|
};

// Ground-set choices for the shell matroid of Lambda^(0)_p:
//   Basis     - the two (dim 2) or three (dim 3) basis vectors only
//   PairRepresentatives - one point per antipodal shell pair
//   AllPoints - every shell point; antipodes become parallel elements
enum class ShellExtent { Basis, PairRepresentatives, AllPoints };

MetrizedMatroid shell_matroid(double p, int dimension,
                              ShellExtent extent = ShellExtent::PairRepresentatives);

}  // namespace minkball
