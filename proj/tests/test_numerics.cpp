#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "minkball/ball.hpp"
#include "minkball/numerics.hpp"

using namespace minkball;

TEST_CASE("gamma_fn anchor values") {
    CHECK(std::abs(gamma_fn(1.0) - 1.0) <= 1e-14);
    CHECK(std::abs(gamma_fn(0.5) - std::sqrt(M_PI)) <= 1e-14);
    // high-precision reference for Gamma(4/3)
    CHECK(std::abs(gamma_fn(4.0 / 3.0) - 0.8929795115692492) <= 1e-12);
    CHECK(std::abs(gamma_fn(2.0) - 1.0) <= 1e-14);
    CHECK(std::abs(gamma_fn(6.0) - 120.0) <= 1e-12);
}

TEST_CASE("gamma_fn matches libm over (0, 50]") {
    for (double x = 0.05; x <= 50.0; x += 0.173) {
        const double ours = gamma_fn(x);
        const double ref = std::tgamma(x);
        CHECK(std::abs(ours - ref) <= 1e-10 * std::abs(ref));
    }
}

TEST_CASE("gamma_fn recurrence") {
    for (double x = 0.1; x <= 10.0; x += 0.1) {
        const double lhs = gamma_fn(x + 1.0);
        CHECK(std::abs(lhs - x * gamma_fn(x)) <= 1e-9 * lhs);
    }
}

TEST_CASE("gamma_fn domain errors") {
    CHECK_THROWS_AS(gamma_fn(0.0), std::domain_error);
    CHECK_THROWS_AS(gamma_fn(-1.5), std::domain_error);
    CHECK_THROWS_AS(gamma_fn(std::nan("")), std::domain_error);
    CHECK_THROWS_AS(gamma_fn(p_infinity), std::domain_error);
}

TEST_CASE("solve_bracketed roots") {
    auto sq2 = solve_bracketed([](double x) { return x * x - 2.0; }, 1.0, 2.0);
    CHECK(std::abs(sq2 - std::sqrt(2.0)) <= 1e-12);
    CHECK(sq2 >= 1.0);
    CHECK(sq2 <= 2.0);

    auto t2 = solve_bracketed(
        [](double t) { return 2.0 * (1.0 - t) * (1.0 - t) - 1.0 - t * t; }, 0.0, 0.999999);
    CHECK(std::abs(t2 - (2.0 - std::sqrt(3.0))) <= 1e-12);

    auto t3 = solve_bracketed(
        [](double t) { return 2.0 * std::pow(1.0 - t, 3) - 1.0 - std::pow(t, 3); }, 0.0, 0.999999);
    CHECK(std::abs(t3 - 0.20405781723545581) <= 1e-12);  // quoted as ~0.20406
}

TEST_CASE("solve_bracketed error paths") {
    CHECK_THROWS_AS(solve_bracketed([](double x) { return x * x + 1.0; }, -1.0, 1.0),
                    bracket_error);
    Tolerance strict;
    strict.abs_tol = 1e-30;
    strict.rel_tol = 0.0;
    strict.max_iter = 3;
    CHECK_THROWS_AS(solve_bracketed([](double x) { return std::cos(x); }, 1.0, 2.0, strict),
                    convergence_error);
}

TEST_CASE("solve_bracketed stays inside the bracket") {
    auto f = [](double x) { return std::expm1(x) - 0.8; };
    const double r = solve_bracketed(f, 0.0, 3.0);
    CHECK(r >= 0.0);
    CHECK(r <= 3.0);
    CHECK(std::abs(f(r)) <= 1e-10);
}

TEST_CASE("pnorm") {
    CHECK(pnorm(2.0, {3.0, 4.0}) == doctest::Approx(5.0).epsilon(1e-14));
    CHECK(pnorm(1.0, {0.5, 0.5}) == doctest::Approx(1.0).epsilon(1e-14));
    const double s3 = sigma(3.0);
    CHECK(std::abs(pnorm(3.0, {0.5, s3 / 2.0}) - 1.0) <= 1e-12);
    CHECK(pnorm(p_infinity, {0.3, -0.9}) == 0.9);
    CHECK(pnorm(2.0, {0.0, 0.0}) == 0.0);
    CHECK_THROWS_AS(pnorm(0.5, {1.0, 1.0}), std::domain_error);
}

TEST_CASE("boundary_point anchors") {
    const Vec2 a = boundary_point(3.0, 0.0);
    CHECK(std::abs(a.x - 1.0) <= 1e-12);
    CHECK(std::abs(a.y) <= 1e-12);
    const Vec2 b = boundary_point(3.0, M_PI / 2.0);
    CHECK(std::abs(b.x) <= 1e-10);
    CHECK(std::abs(b.y - 1.0) <= 1e-12);
    const Vec2 c = boundary_point(2.0, M_PI / 4.0);
    CHECK(std::abs(c.x - std::sqrt(0.5)) <= 1e-12);
    CHECK(std::abs(c.y - std::sqrt(0.5)) <= 1e-12);
}

TEST_CASE("boundary_point stays on the curve, is periodic and antipodal under a half turn") {
    for (double p : {1.2, 1.7, 2.0, 2.9, 4.0, 17.0}) {
        for (int k = 0; k < 97; ++k) {
            const double th = 2.0 * M_PI * k / 97.0;
            const Vec2 q = boundary_point(p, th);
            CHECK(std::abs(pnorm(p, q) - 1.0) <= 1e-12);
            const Vec2 r = boundary_point(p, th + M_PI);
            CHECK(std::abs(q.x + r.x) <= 1e-12);
            CHECK(std::abs(q.y + r.y) <= 1e-12);
            const Vec2 s = boundary_point(p, th + 2.0 * M_PI);
            CHECK(std::abs(q.x - s.x) <= 1e-12);
            CHECK(std::abs(q.y - s.y) <= 1e-12);
        }
    }
}
