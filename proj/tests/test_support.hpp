#pragma once

// Shared helpers for the test suites: deterministic random elements, the
// presentation grid, and the independent oracles (exhaustive multiplicative
// dependence, linear-system conformality search).

#include <optional>
#include <random>
#include <vector>

#include "gdua/invariants.hpp"
#include "gdua/text.hpp"

namespace gdua::test {

inline std::mt19937_64 make_rng(unsigned seed) { return std::mt19937_64(seed); }

inline Scalar random_coeff(std::mt19937_64& rng) {
    static const std::vector<Scalar> pool = {Scalar(1),  Scalar(-1),    Scalar(2),
                                             Scalar(-2), Scalar(3),     Scalar(1, 2),
                                             Scalar(-1, 2), Scalar(5, 3)};
    return pool[rng() % pool.size()];
}

inline Monomial random_monomial(std::mt19937_64& rng, int max_total_degree) {
    long a = long(rng() % (max_total_degree + 1));
    long b = long(rng() % (max_total_degree + 1 - a));
    long c = long(rng() % (max_total_degree + 1 - a - b));
    return {a, b, c};
}

inline Element random_element(std::mt19937_64& rng, int max_total_degree = 3, int max_terms = 4,
                              bool force_nonzero = true) {
    Element e;
    size_t n = 1 + rng() % max_terms;
    for (size_t i = 0; i < n; ++i)
        e.add_term(random_monomial(rng, max_total_degree), random_coeff(rng));
    if (force_nonzero && e.is_zero()) e.add_term({0, 0, 0}, Scalar(1));
    return e;
}

inline Poly make_poly(std::vector<long long> coeffs) {
    std::vector<Scalar> v;
    for (long long c : coeffs) v.emplace_back(c);
    return Poly(std::move(v));
}

// The 12-point presentation grid used across the acceptance suite.  All
// entries have rs != 0; the last one exercises quadratic scalars.
inline std::vector<Presentation> presentation_grid() {
    Scalar root2 = sqrt_of_rational(BigRat(2));
    std::vector<Presentation> grid;
    grid.emplace_back(make_poly({0, 1}), Scalar(2), Scalar(3), Scalar(0));       // (X,2,3,0)
    grid.emplace_back(make_poly({0, 1}), Scalar(2), Scalar(3), Scalar(1));       // (X,2,3,1)
    grid.emplace_back(Poly(), Scalar(2), Scalar(1, 2), Scalar(0));               // (0,2,1/2,0)
    grid.emplace_back(make_poly({0, 1, 1}), Scalar(3), Scalar(5), Scalar(0));    // (X^2+X,3,5,0)
    grid.emplace_back(Poly(), Scalar(4), Scalar(2), Scalar(0));                  // (0,4,2,0)
    grid.emplace_back(make_poly({1}), Scalar(4), Scalar(2), Scalar(0));          // (1,4,2,0)
    grid.emplace_back(make_poly({0, 1}), Scalar(2), Scalar(1, 2), Scalar(0));    // (X,2,1/2,0)
    grid.emplace_back(make_poly({1, 1}), Scalar(2), Scalar(1, 2), Scalar(0));    // (X+1,2,1/2,0)
    grid.emplace_back(make_poly({0, -4}), Scalar(2), Scalar(-2), Scalar(0));     // (-4X,2,-2,0)
    grid.emplace_back(make_poly({0, 1}), Scalar(1), Scalar(2), Scalar(1));       // (X,1,2,1)
    grid.emplace_back(make_poly({0, 1, 1}), Scalar(3), Scalar(5), Scalar(2));    // (X^2+X,3,5,2)
    grid.emplace_back(make_poly({0, 1}), root2, -root2, Scalar(0));              // (X,s2,-s2,0)
    return grid;
}

// Independent oracle: smallest i in [1, bound] admitting j with s^i = r^j,
// |j| <= bound, by exhaustive exact evaluation.
inline std::optional<TauEpsilon> exhaustive_dependence(const Scalar& r, const Scalar& s,
                                                       long long bound = 10) {
    for (long long i = 1; i <= bound; ++i)
        for (long long j = -bound; j <= bound; ++j)
            if (s.pow(i) == r.pow(j)) return TauEpsilon{i, j};
    return std::nullopt;
}

// Gaussian elimination over the exact scalar field.  Returns any solution of
// M x = b, or nullopt when the system is inconsistent.
inline std::optional<std::vector<Scalar>> solve_linear(std::vector<std::vector<Scalar>> M,
                                                       std::vector<Scalar> b) {
    size_t rows = M.size();
    size_t cols = rows ? M[0].size() : 0;
    std::vector<size_t> pivot_col;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t p = row;
        while (p < rows && M[p][col].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(M[p], M[row]);
        std::swap(b[p], b[row]);
        Scalar inv = M[row][col].inverse();
        for (size_t j = col; j < cols; ++j) M[row][j] = M[row][j] * inv;
        b[row] = b[row] * inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || M[i][col].is_zero()) continue;
            Scalar factor = M[i][col];
            for (size_t j = col; j < cols; ++j) M[i][j] = M[i][j] - factor * M[row][j];
            b[i] = b[i] - factor * b[row];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (size_t i = row; i < rows; ++i)
        if (!b[i].is_zero()) return std::nullopt;
    std::vector<Scalar> x(cols, Scalar(0));
    for (size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[i];
    return x;
}

// Independent conformality oracle: search for g of degree <= deg_bound with
// s g(X) - g(rX - gamma) = f(X), coefficientwise, as a linear system.
inline std::optional<Poly> brute_force_conformal_g(const Presentation& pres, int deg_bound) {
    int rows = std::max(deg_bound, pres.f.degree()) + 1;
    std::vector<std::vector<Scalar>> M(rows, std::vector<Scalar>(deg_bound + 1, Scalar(0)));
    std::vector<Scalar> rhs(rows, Scalar(0));
    for (int j = 0; j <= deg_bound; ++j) {
        // contribution of the unknown coefficient of X^j:  s X^j - (rX - gamma)^j
        Poly col = Poly::monomial(pres.s, j);
        Poly shift = Poly::constant(Scalar(1));
        Poly base({-pres.gamma, pres.r});
        for (int t = 0; t < j; ++t) shift = shift * base;
        col = col - shift;
        for (int t = 0; t < rows; ++t) M[t][j] = col.coeff(t);
    }
    for (int t = 0; t < rows; ++t) rhs[t] = pres.f.coeff(t);
    auto sol = solve_linear(std::move(M), std::move(rhs));
    if (!sol) return std::nullopt;
    return Poly(std::move(*sol));
}

inline Element E(const Presentation& pres, const std::string& expr) {
    return parse_element(pres, expr);
}

} // namespace gdua::test
