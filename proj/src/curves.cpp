#include "minkball/curves.hpp"

#include <cmath>
#include <stdexcept>

namespace minkball {

ArakelovDegree make_arakelov_degree(double deg) {
    if (!std::isfinite(deg)) throw std::domain_error("make_arakelov_degree: deg must be finite");
    return {deg, deg / std::log(2.0)};
}

CurveGenus make_curve_genus(long long n) { return {n, genus(n)}; }

long long genus(long long n) {
    if (n < 1) throw std::domain_error("genus: n must be >= 1");
    if (n > (1ll << 30)) throw std::domain_error("genus: n too large");
    return (2 * n - 1) * (n - 1);
}

long long rr_euler(long long deg, long long g) {
    if (g < 0) throw std::domain_error("rr_euler: genus must be >= 0");
    return deg + 1 - g;
}

long long ceil_prime(double x) {
    if (!std::isfinite(x)) throw std::domain_error("ceil_prime: argument must be finite");
    // right-continuous: at integers take the limit from the right, which
    // gives floor(x) + 1 on x >= 0 and -ceil(-x) on x < 0
    if (x >= 0.0) return static_cast<long long>(std::floor(x)) + 1;
    return -static_cast<long long>(std::ceil(-x));
}

long long rr_arakelov_rhs(double deg) { return ceil_prime(deg / std::log(2.0)); }

}  // namespace minkball
