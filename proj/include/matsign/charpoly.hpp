// Characteristic polynomial of a symmetric matrix via Householder
// tridiagonalization and the three-term determinant recurrence. Does not use
// any external eigensolver, so results can cross-check spectral routines.
#pragma once

#include <cmath>
#include <vector>

#include "matsign/matrix.hpp"
#include "matsign/polynomial.hpp"

namespace matsign {

namespace detail {

struct Tridiagonal {
    std::vector<double> diag;  // d[0..n-1]
    std::vector<double> off;   // e[0..n-2], subdiagonal
};

// Symmetric Householder reduction (Golub & Van Loan alg. 8.3.1 layout).
inline Tridiagonal tridiagonalize(const SymMatrix& a) {
    const int n = a.dim();
    std::vector<std::vector<double>> b(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b[i][j] = a(i, j);

    for (int k = 0; k + 2 < n; ++k) {
        double sq = 0.0;
        for (int i = k + 1; i < n; ++i) sq += b[i][k] * b[i][k];
        const double alpha = std::sqrt(sq);
        if (alpha == 0.0) continue;
        const double pivot = b[k + 1][k];
        const double sign = (pivot >= 0.0) ? 1.0 : -1.0;
        // v = x + sign(x1)*|x|*e1 on the trailing column
        std::vector<double> v(n, 0.0);
        v[k + 1] = pivot + sign * alpha;
        for (int i = k + 2; i < n; ++i) v[i] = b[i][k];
        double vtv = 0.0;
        for (int i = k + 1; i < n; ++i) vtv += v[i] * v[i];
        if (vtv == 0.0) continue;
        const double beta = 2.0 / vtv;

        // p = beta * B v
        std::vector<double> p(n, 0.0);
        for (int i = 0; i < n; ++i) {
            double s = 0.0;
            for (int j = k + 1; j < n; ++j) s += b[i][j] * v[j];
            p[i] = beta * s;
        }
        double vtp = 0.0;
        for (int i = k + 1; i < n; ++i) vtp += v[i] * p[i];
        const double kappa = 0.5 * beta * vtp;
        // w = p - kappa v;  B <- B - v w^T - w v^T
        std::vector<double> w(n);
        for (int i = 0; i < n; ++i) w[i] = p[i] - kappa * v[i];
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) b[i][j] -= v[i] * w[j] + w[i] * v[j];
    }

    Tridiagonal t;
    t.diag.resize(n);
    t.off.resize(n > 0 ? n - 1 : 0);
    for (int i = 0; i < n; ++i) t.diag[i] = b[i][i];
    for (int i = 0; i + 1 < n; ++i) t.off[i] = b[i + 1][i];
    return t;
}

}  // namespace detail

// det(xI - A) as a monic polynomial of degree dim(A). dim 0 yields the
// constant 1 (empty product), which the conditional-expectation sum relies on.
inline Polynomial char_poly(const SymMatrix& a) {
    const int n = a.dim();
    if (n == 0) return Polynomial{1.0};
    const detail::Tridiagonal t = detail::tridiagonalize(a);

    // p_k(x) = (x - d_{k-1}) p_{k-1}(x) - e_{k-2}^2 p_{k-2}(x)
    Polynomial prev{1.0};
    Polynomial cur{-t.diag[0], 1.0};
    for (int k = 2; k <= n; ++k) {
        Polynomial x_minus_d{-t.diag[k - 1], 1.0};
        const double e2 = t.off[k - 2] * t.off[k - 2];
        Polynomial next = x_minus_d * cur - e2 * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace matsign
