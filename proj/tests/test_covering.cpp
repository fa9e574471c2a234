#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "minkball/covering.hpp"
#include "oracles.hpp"

using namespace minkball;

namespace {
const double kGrid[] = {1.2, 1.5, 2.0, 2.3, 2.5725, 3.0, 5.0};
}

TEST_CASE("tau_of_sigma endpoints") {
    for (double p : kGrid) {
        const double sp = sigma(p);
        CHECK(std::abs(tau_of_sigma(p, sp)) <= 1e-12);
        CHECK(std::abs(tau_of_sigma(p, 1.0) - tau(p)) <= 1e-10);
    }
    CHECK_THROWS_AS(tau_of_sigma(3.0, 0.5), std::domain_error);
    CHECK_THROWS_AS(tau_of_sigma(3.0, sigma(3.0) + 0.1), std::domain_error);
}

TEST_CASE("tau_of_sigma matches the disk closed form at p = 2") {
    // for the disk the third-pair condition reads atan(sigma) + atan(tau) = pi/3
    for (double s = 1.0; s <= std::sqrt(3.0); s += 0.1) {
        const double expected = std::tan(M_PI / 3.0 - std::atan(s));
        CHECK(std::abs(tau_of_sigma(2.0, s) - expected) <= 1e-10);
    }
    CHECK(std::abs(tau_of_sigma(2.0, 1.2) - 0.17283012937709018) <= 1e-10);
}

TEST_CASE("moduli point residuals and endpoint anchoring") {
    for (double p : kGrid) {
        const CriticalData d = critical_data(p);
        CHECK(std::abs(moduli_point(p, 1.0).delta - d.delta1) <= 1e-9);
        CHECK(std::abs(moduli_point(p, d.sigma_p).delta - d.delta0) <= 1e-9);
        for (int i = 0; i <= 16; ++i) {
            const double s = 1.0 + (d.sigma_p - 1.0) * i / 16.0;
            const ModuliPoint mp = moduli_point(p, s);
            CHECK(mp.third_point_residual <= 1e-9);
            CHECK(mp.delta >= d.delta_crit - 1e-9);  // no admissible cell is smaller
            CHECK(mp.tau >= 0.0);
            CHECK(mp.tau <= d.tau_p);
        }
    }
}

TEST_CASE("the p = 2 section is flat") {
    const double target = 1.5 * std::sqrt(3.0);
    for (int i = 0; i < 100; ++i) {
        const double s = 1.0 + (std::sqrt(3.0) - 1.0) * i / 99.0;
        CHECK(std::abs(moduli_area(2.0, s) - target) <= 1e-8);
    }
}

TEST_CASE("moduli area anchors at p = 3") {
    CHECK(std::abs(moduli_area(3.0, 1.0) - 2.8589095202047912) <= 1e-9);
    CHECK(std::abs(moduli_area(3.0, 1.0) - 2.859) <= 5e-4);
    const double s3 = sigma(3.0);
    CHECK(std::abs(moduli_area(3.0, s3) - 1.5 * s3) <= 1e-9);
    CHECK(std::abs(moduli_area(3.0, s3) - 2.8693967741585834) <= 1e-9);
}

TEST_CASE("moduli area agrees with the hexagon shoelace") {
    for (double p : kGrid) {
        const double sp = sigma(p);
        for (double f : {0.0, 0.25, 0.5, 0.75, 1.0}) {
            const double s = 1.0 + (sp - 1.0) * f;
            CHECK(std::abs(moduli_area(p, s) - al_hexagon(p, s).area) <= 1e-9);
        }
    }
}

TEST_CASE("al hexagon report invariants") {
    const HexagonReport rep = al_hexagon(3.0, 1.2);
    CHECK(rep.kind == HexKind::InscribedAl);
    for (size_t i = 0; i < 6; ++i) {
        CHECK(std::abs(pnorm(3.0, rep.vertices[i]) - 1.0) <= 1e-9);
        // centrally symmetric: the antipode of every vertex is a vertex
        bool found = false;
        for (size_t j = 0; j < 6; ++j)
            if (std::abs(rep.vertices[j].x + rep.vertices[i].x) <= 1e-12 &&
                std::abs(rep.vertices[j].y + rep.vertices[i].y) <= 1e-12)
                found = true;
        CHECK(found);
    }
    std::vector<Vec2> verts(rep.vertices.begin(), rep.vertices.end());
    CHECK(std::abs(oracles::polygon_area(verts) - rep.area) <= 1e-12);
}

TEST_CASE("free-tau evaluation") {
    const double stated = moduli_area_free(3.0, sigma_alpha(3.0, 2.0), 0.12).area;
    CHECK(std::abs(stated - 2.9281495172544471) <= 1e-9);

    // consistency with the constrained evaluation
    for (double p : {1.5, 2.0, 3.0}) {
        const double s = 0.5 * (1.0 + sigma(p));
        const double t = tau_of_sigma(p, s);
        const FreeModuliValue fv = moduli_area_free(p, s, t);
        CHECK(std::abs(fv.area - moduli_area(p, s)) <= 1e-10);
        CHECK(fv.residual <= 1e-10);
    }

    const FreeModuliValue disk = moduli_area_free(2.0, 1.0, 2.0 - std::sqrt(3.0));
    CHECK(std::abs(disk.area - 1.5 * std::sqrt(3.0)) <= 1e-12);
    CHECK_THROWS_AS(moduli_area_free(3.0, 0.5, 0.1), std::domain_error);
}

TEST_CASE("sigma_alpha") {
    CHECK(std::abs(sigma_alpha(3.0, 2.0) - 1.3830875542684885) <= 1e-12);
    CHECK(std::abs(sigma_alpha(3.0, 2.0) - 1.3830) <= 1e-4);  // quoted value
    for (double p : kGrid)
        CHECK(std::abs(sigma_alpha(p, 1.0) - sigma(p)) <= 1e-12);
    CHECK(std::abs(sigma_alpha(3.0, 64.0) - 1.0) < 0.04);
    CHECK_THROWS_AS(sigma_alpha(3.0, 0.5), std::domain_error);
}

TEST_CASE("section curves") {
    CHECK(std::abs(section_curve(3.0, 1.0) - 1.5 * sigma(3.0)) <= 1e-9);
    CHECK(std::abs(section_curve(2.0, 2.0) - 1.5 * std::sqrt(3.0)) <= 1e-9);
    CHECK(std::abs(section_curve(3.0, 2.0) - 2.8646303392601285) <= 1e-9);
    // independent geometric oracle for the same hexagon area
    CHECK(std::abs(section_curve(3.0, 2.0) -
                   oracles::al_hexagon_area_geometric(3.0, sigma_alpha(3.0, 2.0))) <= 1e-9);
    for (double p : {1.5, 2.3, 5.0})
        CHECK(std::abs(section_curve(p, 1.7) -
                       oracles::al_hexagon_area_geometric(p, sigma_alpha(p, 1.7))) <= 1e-9);
}

TEST_CASE("minimum and inverse minimum of the section") {
    CHECK(std::abs(min_A(3.0) - 2.8589095202047912) <= 1e-12);
    CHECK(std::abs(i_min_A(3.0) - 2.8693967741585834) <= 1e-12);
    CHECK(std::abs(min_A(2.0) - 1.5 * std::sqrt(3.0)) <= 1e-9);
    CHECK(std::abs(i_min_A(2.0) - 1.5 * std::sqrt(3.0)) <= 1e-9);
    for (double p : kGrid) {
        CHECK(min_A(p) <= i_min_A(p));
        CHECK(std::abs(min_A(p) - 3.0 * critical_data(p).delta_crit) <= 1e-12);
    }
}

TEST_CASE("grid minimum of A sits at an endpoint and equals 3 delta_crit") {
    for (double p : kGrid) {
        const double sp = sigma(p);
        double grid_min = 1e300;
        for (int i = 0; i <= 40; ++i)
            grid_min = std::fmin(grid_min, moduli_area(p, 1.0 + (sp - 1.0) * i / 40.0));
        const double end_min = std::fmin(moduli_area(p, 1.0), moduli_area(p, sp));
        CHECK(grid_min >= min_A(p) - 1e-9);
        CHECK(std::abs(grid_min - end_min) <= 1e-9);
        CHECK(std::abs(grid_min - 3.0 * critical_data(p).delta_crit) <= 1e-9);
    }
}

TEST_CASE("covering bounds") {
    const CoveringBounds b2 = covering_bounds(2.0);
    CHECK(std::abs(b2.sas_lower - 1.5 * std::sqrt(3.0)) <= 1e-12);
    CHECK(std::abs(b2.i_min_lower - 1.5 * std::sqrt(3.0)) <= 1e-9);
    CHECK(std::abs(b2.trivial_upper - M_PI) <= 1e-12);

    const CoveringBounds b3 = covering_bounds(3.0);
    CHECK(std::abs(b3.sas_lower - 2.9219969724126369) <= 1e-9);
    CHECK(b3.sas_lower > b3.i_min_lower);  // the Sas bound wins at p = 3

    for (double p : kGrid) {
        const CoveringBounds b = covering_bounds(p);
        CHECK(b.sas_lower <= b.trivial_upper);
        CHECK(b.i_min_lower <= b.trivial_upper);
    }
}

TEST_CASE("max inscribed hexagon of the disk") {
    const HexagonReport rep = max_inscribed_hexagon(2.0);
    CHECK(std::abs(rep.area - 1.5 * std::sqrt(3.0)) <= 1e-6);
    // a regular hexagon up to rotation: unit vertices, consecutive gaps pi/3
    for (size_t i = 0; i < 6; ++i) {
        CHECK(std::abs(pnorm(2.0, rep.vertices[i]) - 1.0) <= 1e-9);
        const Vec2 a = rep.vertices[i];
        const Vec2 b = rep.vertices[(i + 1) % 6];
        const double gap = std::remainder(std::atan2(b.y, b.x) - std::atan2(a.y, a.x), 2.0 * M_PI);
        CHECK(std::abs(std::abs(gap) - M_PI / 3.0) <= 1e-3);
    }
}

TEST_CASE("max inscribed hexagon reference values") {
    // frozen from an independent multistart optimizer
    CHECK(std::abs(max_inscribed_hexagon(3.0).area - 2.9882400278) <= 1e-6);
    CHECK(std::abs(max_inscribed_hexagon(50.0).area - 3.9398217565) <= 1e-6);
    CHECK(std::abs(max_inscribed_hexagon(1.02).area - 2.0136839003) <= 1e-6);
}

TEST_CASE("max inscribed hexagon dominates the al-hexagons") {
    for (double p : kGrid) {
        const HexagonReport rep = max_inscribed_hexagon(p);
        CHECK(rep.kind == HexKind::InscribedFree);
        CHECK(rep.area <= volume(p));
        for (const Vec2& q : rep.vertices) CHECK(std::abs(pnorm(p, q) - 1.0) <= 1e-9);
        const double sp = sigma(p);
        double best_al = 0.0;
        for (int i = 0; i <= 24; ++i)
            best_al = std::fmax(best_al, moduli_area(p, 1.0 + (sp - 1.0) * i / 24.0));
        CHECK(rep.area >= best_al - 1e-6);
    }
}

TEST_CASE("covering density") {
    CHECK(std::abs(covering_density(2.0, 1.5 * std::sqrt(3.0)) - 1.2091995761561452) <= 1e-12);
    CHECK(covering_density(3.0, volume(3.0)) == 1.0);
    CHECK_THROWS_AS(covering_density(3.0, 0.0), std::domain_error);
    const double cap = 2.0 * M_PI / (3.0 * std::sqrt(3.0));
    for (double p : kGrid) {
        const double theta = covering_density(p, max_inscribed_hexagon(p).area);
        CHECK(theta >= 1.0);
        CHECK(theta <= cap + 1e-6);
    }
}

TEST_CASE("inscribed and circumscribed minima") {
    CHECK(std::abs(inscribed_min_area(2.0, 0) - 1.5 * std::sqrt(3.0)) <= 1e-9);
    CHECK(std::abs(circumscribed_min_area(2.0, 0) - 2.0 * std::sqrt(3.0)) <= 1e-9);
    CHECK(std::abs(inscribed_min_area(3.0, 0) - 3.0 * 0.9529698400682637) <= 1e-9);
    CHECK(std::abs(circumscribed_min_area(3.0, 0) - 3.8118793602730548) <= 1e-9);
    for (double p : kGrid) {
        for (int m : {0, 1, 2}) {
            CHECK(std::abs(inscribed_min_area(p, m + 1) - 4.0 * inscribed_min_area(p, m)) <=
                  1e-12 * inscribed_min_area(p, m + 1));
            // both are exact multiples of the same determinant
            CHECK(inscribed_min_area(p, m) * 4.0 == circumscribed_min_area(p, m) * 3.0);
        }
    }
}

TEST_CASE("randomized moduli samples stay within the structural bounds") {
    std::mt19937 rng(31337);
    std::uniform_real_distribution<double> pick_p(1.05, 8.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 60; ++trial) {
        const double p = pick_p(rng);
        const CriticalData d = critical_data(p);
        const double s = 1.0 + (d.sigma_p - 1.0) * unit(rng);
        const ModuliPoint mp = moduli_point(p, s);
        CHECK(mp.third_point_residual <= 1e-9);
        CHECK(mp.tau >= 0.0);
        CHECK(mp.tau <= d.tau_p + 1e-12);
        CHECK(mp.delta >= d.delta_crit - 1e-9);   // admissible cells are never smaller
        CHECK(3.0 * mp.delta <= volume(p));       // inscribed hexagons fit inside
    }
}

TEST_CASE("circumscribed tangent hexagon") {
    const HexagonReport disk = circumscribed_hexagon(2.0, shell(2.0, critical_lattice_0(2.0)));
    CHECK(disk.kind == HexKind::Circumscribed);
    CHECK(std::abs(disk.area - 2.0 * std::sqrt(3.0)) <= 1e-9);

    const HexagonReport h3 = circumscribed_hexagon(3.0, shell(3.0, critical_lattice_0(3.0)));
    CHECK(std::abs(h3.area - 4.0 * critical_data(3.0).delta0) <= 1e-6);

    for (double p : kGrid) {
        for (int kind = 0; kind < 2; ++kind) {
            const LatticeBasis b = kind ? critical_lattice_1(p) : critical_lattice_0(p);
            const HexagonReport rep = circumscribed_hexagon(p, shell(p, b));
            CHECK(std::abs(rep.area - 4.0 * b.abs_det()) <= 1e-6);
            for (size_t i = 0; i < 6; ++i) {
                bool found = false;
                for (size_t j = 0; j < 6; ++j)
                    if (std::abs(rep.vertices[j].x + rep.vertices[i].x) <= 1e-9 &&
                        std::abs(rep.vertices[j].y + rep.vertices[i].y) <= 1e-9)
                        found = true;
                CHECK(found);
            }
        }
    }
}
