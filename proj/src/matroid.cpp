#include "minkball/matroid.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "minkball/ball.hpp"

namespace minkball {

namespace {

constexpr int kMaxGround = 10;

void check_ground_size(size_t n) {
    if (n > kMaxGround) throw std::domain_error("matroid: ground set capped at 10 elements");
}

// rank of a set of columns by Gaussian elimination with partial pivoting
int numeric_rank(std::vector<std::vector<double>> rows, double tol) {
    const size_t nr = rows.size();
    if (nr == 0) return 0;
    const size_t nc = rows[0].size();
    int rank = 0;
    size_t col = 0;
    for (size_t r = 0; r < nr && col < nc; ++col) {
        size_t piv = r;
        for (size_t i = r + 1; i < nr; ++i)
            if (std::abs(rows[i][col]) > std::abs(rows[piv][col])) piv = i;
        if (std::abs(rows[piv][col]) <= tol) continue;
        std::swap(rows[r], rows[piv]);
        for (size_t i = r + 1; i < nr; ++i) {
            const double f = rows[i][col] / rows[r][col];
            for (size_t j = col; j < nc; ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
        ++rank;
    }
    return rank;
}

std::vector<std::string> default_labels(int n) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
    return out;
}

double gram_cell_measure(const std::vector<std::vector<double>>& vecs) {
    // sqrt(det(G)) with G_ij = <v_i, v_j>; the area/volume of the spanned cell
    const size_t k = vecs.size();
    std::vector<std::vector<double>> g(k, std::vector<double>(k, 0.0));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j)
            g[i][j] = std::inner_product(vecs[i].begin(), vecs[i].end(), vecs[j].begin(), 0.0);
    // determinant by elimination
    double det = 1.0;
    for (size_t c = 0; c < k; ++c) {
        size_t piv = c;
        for (size_t i = c + 1; i < k; ++i)
            if (std::abs(g[i][c]) > std::abs(g[piv][c])) piv = i;
        if (piv != c) {
            std::swap(g[c], g[piv]);
            det = -det;
        }
        if (g[c][c] == 0.0) return 0.0;
        det *= g[c][c];
        for (size_t i = c + 1; i < k; ++i) {
            const double f = g[i][c] / g[c][c];
            for (size_t j = c; j < k; ++j) g[i][j] -= f * g[c][j];
        }
    }
    return std::sqrt(std::abs(det));
}

}  // namespace

bool FiniteMatroid::is_independent(uint32_t mask) const {
    return std::binary_search(independents.begin(), independents.end(), mask);
}

int FiniteMatroid::rank(uint32_t mask) const {
    int best = 0;
    for (uint32_t s : independents)
        if ((s & mask) == s) best = std::max(best, std::popcount(s));
    return best;
}

int FiniteMatroid::rank() const {
    int best = 0;
    for (uint32_t s : independents) best = std::max(best, std::popcount(s));
    return best;
}

std::vector<uint32_t> FiniteMatroid::bases() const {
    const int r = rank();
    std::vector<uint32_t> out;
    for (uint32_t s : independents)
        if (std::popcount(s) == r) out.push_back(s);
    return out;
}

FiniteMatroid uniform(int k, int n) {
    if (k < 0 || n < k) throw std::domain_error("uniform: need 0 <= k <= n");
    check_ground_size(static_cast<size_t>(n));
    FiniteMatroid M;
    M.ground = default_labels(n);
    for (uint32_t mask = 0; mask < (1u << n); ++mask)
        if (std::popcount(mask) <= k) M.independents.push_back(mask);
    std::sort(M.independents.begin(), M.independents.end());
    return M;
}

FiniteMatroid from_vectors(
    const std::vector<std::pair<std::string, std::vector<double>>>& vectors, double tol) {
    check_ground_size(vectors.size());
    const int n = static_cast<int>(vectors.size());
    for (const auto& [label, v] : vectors) {
        if (v.empty() || v.size() > 4)
            throw std::domain_error("from_vectors: dimension must be 1..4");
        if (v.size() != vectors.front().second.size())
            throw std::domain_error("from_vectors: vectors must share one dimension");
    }

    FiniteMatroid M;
    for (const auto& [label, v] : vectors) M.ground.push_back(label);
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<std::vector<double>> chosen;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) chosen.push_back(vectors[static_cast<size_t>(i)].second);
        if (numeric_rank(chosen, tol) == std::popcount(mask)) M.independents.push_back(mask);
    }
    std::sort(M.independents.begin(), M.independents.end());
    return M;
}

std::vector<uint32_t> circuits(const FiniteMatroid& M) {
    check_ground_size(M.ground.size());
    const int n = static_cast<int>(M.ground.size());
    std::vector<uint32_t> out;
    for (uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (M.is_independent(mask)) continue;
        bool minimal = true;
        for (int i = 0; i < n && minimal; ++i)
            if ((mask & (1u << i)) && !M.is_independent(mask & ~(1u << i))) minimal = false;
        if (minimal) out.push_back(mask);
    }
    return out;
}

std::vector<uint32_t> flats(const FiniteMatroid& M) {
    check_ground_size(M.ground.size());
    const int n = static_cast<int>(M.ground.size());
    std::vector<uint32_t> out;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        const int r = M.rank(mask);
        bool closed = true;
        for (int i = 0; i < n && closed; ++i)
            if (!(mask & (1u << i)) && M.rank(mask | (1u << i)) == r) closed = false;
        if (closed) out.push_back(mask);
    }
    return out;
}

bool is_isomorphic(const FiniteMatroid& M, const FiniteMatroid& N) {
    if (M.ground.size() != N.ground.size()) return false;
    if (M.independents.size() != N.independents.size()) return false;
    const int n = static_cast<int>(M.ground.size());
    if (n > 8) throw std::domain_error("is_isomorphic: ground sets capped at 8 elements");

    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<uint32_t> mapped;
        mapped.reserve(M.independents.size());
        for (uint32_t s : M.independents) {
            uint32_t t = 0;
            for (int i = 0; i < n; ++i)
                if (s & (1u << i)) t |= 1u << perm[static_cast<size_t>(i)];
            mapped.push_back(t);
        }
        std::sort(mapped.begin(), mapped.end());
        if (mapped == N.independents) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

bool check_independence_axioms(const FiniteMatroid& M) {
    if (M.ground.size() > kMaxGround) return false;
    // IM-1
    if (M.independents.empty() || !M.is_independent(0)) return false;
    // IM-2: downward closed
    for (uint32_t s : M.independents) {
        const int n = static_cast<int>(M.ground.size());
        for (int i = 0; i < n; ++i)
            if ((s & (1u << i)) && !M.is_independent(s & ~(1u << i))) return false;
    }
    // IM-3: exchange
    for (uint32_t I : M.independents) {
        for (uint32_t J : M.independents) {
            if (std::popcount(I) <= std::popcount(J)) continue;
            bool found = false;
            uint32_t candidates = I & ~J;
            while (candidates && !found) {
                const uint32_t bit = candidates & (~candidates + 1);
                if (M.is_independent(J | bit)) found = true;
                candidates &= candidates - 1;
            }
            if (!found) return false;
        }
    }
    return true;
}

bool check_circuit_axioms(const FiniteMatroid& M, const std::vector<uint32_t>& C) {
    auto is_circuit = [&C](uint32_t s) {
        return std::find(C.begin(), C.end(), s) != C.end();
    };
    for (uint32_t c : C)
        if (c == 0) return false;  // circuits are non-empty
    // pairwise incomparable
    for (uint32_t c1 : C)
        for (uint32_t c2 : C)
            if (c1 != c2 && (c1 & c2) == c1) return false;
    // elimination
    const int n = static_cast<int>(M.ground.size());
    for (uint32_t c1 : C) {
        for (uint32_t c2 : C) {
            if (c1 == c2) continue;
            uint32_t common = c1 & c2;
            while (common) {
                const uint32_t bit = common & (~common + 1);
                const uint32_t target = (c1 | c2) & ~bit;
                bool contains = false;
                for (uint32_t mask = target; mask && !contains; mask = (mask - 1) & target)
                    if (is_circuit(mask)) contains = true;
                if (!contains) return false;
                common &= common - 1;
            }
        }
    }
    (void)n;
    return true;
}

bool check_flat_axioms(const FiniteMatroid& M, const std::vector<uint32_t>& F) {
    const int n = static_cast<int>(M.ground.size());
    const uint32_t ground = (n == 32) ? ~0u : ((1u << n) - 1);
    auto is_flat = [&F](uint32_t s) { return std::find(F.begin(), F.end(), s) != F.end(); };
    // FM-3
    if (!is_flat(ground)) return false;
    // FM-1: intersection closed
    for (uint32_t f1 : F)
        for (uint32_t f2 : F)
            if (!is_flat(f1 & f2)) return false;
    // FM-2: every outside element lies in exactly one cover
    for (uint32_t f : F) {
        // covers of f: minimal flats properly containing it
        std::vector<uint32_t> covers;
        for (uint32_t g : F) {
            if (g == f || (g & f) != f) continue;
            bool minimal = true;
            for (uint32_t h : F)
                if (h != f && h != g && (h & f) == f && (g & h) == h) minimal = false;
            if (minimal) covers.push_back(g);
        }
        for (int e = 0; e < n; ++e) {
            if (f & (1u << e)) continue;
            int hits = 0;
            for (uint32_t g : covers)
                if (g & (1u << e)) ++hits;
            if (hits != 1) return false;
        }
    }
    return true;
}

MetrizedMatroid shell_matroid(double p, int dimension, ShellExtent extent) {
    if (dimension != 2 && dimension != 3)
        throw std::domain_error("shell_matroid: dimension must be 2 or 3");
    const double half_sigma = 0.5 * sigma(p);

    // antipodal pair representatives of the Lambda^(0) shell
    const std::vector<double> a{1.0, 0.0};
    const std::vector<double> b{0.5, half_sigma};
    const std::vector<double> c{-0.5, half_sigma};

    std::vector<std::pair<std::string, std::vector<double>>> elems;
    switch (extent) {
        case ShellExtent::Basis:
            elems = {{"a", a}, {"b", b}};
            break;
        case ShellExtent::PairRepresentatives:
            elems = {{"a", a}, {"b", b}, {"c", c}};
            break;
        case ShellExtent::AllPoints:
            elems = {{"a", a},
                     {"b", b},
                     {"c", c},
                     {"a'", {-1.0, 0.0}},
                     {"b'", {-0.5, -half_sigma}},
                     {"c'", {0.5, -half_sigma}}};
            break;
    }
    if (dimension == 3) {
        for (auto& [label, v] : elems) v.push_back(0.0);
        elems.emplace_back(extent == ShellExtent::Basis ? "c" : "d",
                           std::vector<double>{0.0, 0.0, 1.0});
        if (extent == ShellExtent::AllPoints)
            elems.emplace_back("d'", std::vector<double>{0.0, 0.0, -1.0});
    }

    MetrizedMatroid mm;
    mm.matroid = from_vectors(elems);
    for (const auto& [label, v] : elems) mm.vectors.push_back(v);
    for (uint32_t basis : mm.matroid.bases()) {
        std::vector<std::vector<double>> chosen;
        for (size_t i = 0; i < elems.size(); ++i)
            if (basis & (1u << i)) chosen.push_back(elems[i].second);
        mm.metric.emplace_back(basis, gram_cell_measure(chosen));
    }
    return mm;
}

}  // namespace minkball
