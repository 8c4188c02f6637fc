// Shared helpers for the test suite: seeded random instances and
// coefficientwise polynomial comparison.
#pragma once

#include <cstdint>
#include <random>

#include "matsign/matsign.hpp"

namespace ts {

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64{seed}; }

inline matsign::SymMatrix random_symmetric(std::mt19937_64& g, int n, bool zero_diag = false) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    matsign::SymMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            if (i == j && zero_diag) continue;
            a.set(i, j, d(g));
        }
    return a;
}

inline matsign::SymMatrix random_nonnegative_symmetric(std::mt19937_64& g, int n,
                                                       bool zero_diag = true) {
    std::uniform_real_distribution<double> d(0.0, 1.0);
    matsign::SymMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            if (i == j && zero_diag) continue;
            a.set(i, j, d(g));
        }
    return a;
}

inline matsign::DenseMatrix random_dense(std::mt19937_64& g, int m, int n) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    matsign::DenseMatrix a(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = d(g);
    return a;
}

inline double coeff_distance(const matsign::Polynomial& p, const matsign::Polynomial& q) {
    double diff = 0.0;
    const int deg = p.degree() > q.degree() ? p.degree() : q.degree();
    for (int k = 0; k <= deg; ++k) {
        const double d = p[k] - q[k];
        diff = diff > (d < 0 ? -d : d) ? diff : (d < 0 ? -d : d);
    }
    return diff;
}

// Relative to the larger coefficient scale, with an absolute floor of 1.
inline bool coeffs_close(const matsign::Polynomial& p, const matsign::Polynomial& q,
                         double rel_tol) {
    double scale = 1.0;
    if (p.max_abs_coeff() > scale) scale = p.max_abs_coeff();
    if (q.max_abs_coeff() > scale) scale = q.max_abs_coeff();
    return coeff_distance(p, q) <= rel_tol * scale;
}

inline matsign::SymMatrix unit_triangle() {
    matsign::SymMatrix a(3);
    a.set(0, 1, 1.0);
    a.set(0, 2, 1.0);
    a.set(1, 2, 1.0);
    return a;
}

inline matsign::SymMatrix unit_edge() {
    matsign::SymMatrix a(2);
    a.set(0, 1, 1.0);
    return a;
}

inline matsign::SymMatrix unit_path3() {
    matsign::SymMatrix a(3);
    a.set(0, 1, 1.0);
    a.set(1, 2, 1.0);
    return a;
}

}  // namespace ts
