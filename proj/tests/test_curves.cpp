#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "minkball/curves.hpp"

using namespace minkball;

TEST_CASE("genus") {
    CHECK(genus(1) == 0);
    CHECK(make_curve_genus(2).genus == 3);
    CHECK(make_curve_genus(2).n == 2);
    CHECK(genus(2) == 3);
    CHECK(genus(3) == 10);
    CHECK_THROWS_AS(genus(0), std::domain_error);

    long long prev = -1;
    for (long long n = 1; n <= 200; ++n) {
        const long long g = genus(n);
        CHECK(g > prev);
        prev = g;
    }

    // wide-integer recomputation up to 10^6
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const long long n = 1 + static_cast<long long>(rng() % 1000000);
        const __int128 wide = (__int128{2} * n - 1) * (__int128{n} - 1);
        CHECK(static_cast<__int128>(genus(n)) == wide);
    }
}

TEST_CASE("rr_euler") {
    CHECK(rr_euler(0, 0) == 1);
    CHECK(rr_euler(5, 3) == 3);
    for (long long g = 0; g <= 7; ++g) CHECK(rr_euler(2 * g - 2, g) == g - 1);
    CHECK_THROWS_AS(rr_euler(1, -1), std::domain_error);
}

TEST_CASE("rr_euler antisymmetry under deg -> 2g-2-deg") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 100; ++i) {
        const long long g = static_cast<long long>(rng() % 50);
        const long long deg = static_cast<long long>(rng() % 200) - 100;
        CHECK(rr_euler(deg, g) + rr_euler(2 * g - 2 - deg, g) == 0);
    }
}

TEST_CASE("ceil_prime on the quoted sample points") {
    CHECK(ceil_prime(0.5) == 1);
    CHECK(ceil_prime(1.5) == 2);
    CHECK(ceil_prime(2.5) == 3);
    CHECK(ceil_prime(-0.5) == -1);
    CHECK(ceil_prime(-1.5) == -2);
    CHECK(ceil_prime(-2.5) == -3);
    CHECK(ceil_prime(0.0) == 1);
    CHECK_THROWS_AS(ceil_prime(std::nan("")), std::domain_error);
}

TEST_CASE("ceil_prime is odd away from the integers") {
    for (double x : {0.25, 0.75, 1.5, 2.25, 3.75, 10.5}) {
        CHECK(ceil_prime(-x) == -ceil_prime(x));
        CHECK(ceil_prime(x) == static_cast<long long>(std::ceil(x)));
    }
}

TEST_CASE("ceil_prime is right-continuous at the integers") {
    for (long long n = -5; n <= 5; ++n) {
        const double x = static_cast<double>(n);
        for (double eps : {1e-9, 1e-6, 1e-3, 0.49}) {
            CHECK(ceil_prime(x) == ceil_prime(x + eps));
        }
    }
}

TEST_CASE("arakelov right-hand side") {
    CHECK(rr_arakelov_rhs(0.0) == 1);
    CHECK(rr_arakelov_rhs(std::log(2.0) * 1.5) == 2);
    CHECK(rr_arakelov_rhs(-std::log(2.0) * 1.5) == -2);
    const ArakelovDegree d = make_arakelov_degree(3.0);
    CHECK(std::abs(d.deg2 * std::log(2.0) - d.deg) <= 1e-12);
}
