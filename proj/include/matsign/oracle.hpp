// Exhaustive brute-force references at tiny dimension: exact averages of
// characteristic polynomials over symmetric signings, and true optimal
// signing norms. Everything here is the slow, obviously-correct route used
// to validate the production pipeline.
#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "matsign/charpoly.hpp"
#include "matsign/errors.hpp"
#include "matsign/matrix.hpp"
#include "matsign/partial_signing.hpp"
#include "matsign/polynomial.hpp"
#include "matsign/rational.hpp"
#include "matsign/spectral.hpp"

namespace matsign {

inline constexpr int k_max_oracle_support = 20;
inline constexpr int k_max_brute_entries = 20;
inline constexpr int k_max_rational_dim = 4;

// Deterministic walk over all sign assignments of a fixed position list:
// bit b of the index selects the sign at positions()[b], 0 meaning +1.
class SigningEnumeration {
  public:
    SigningEnumeration(int n, std::vector<std::pair<int, int>> support)
        : n_(n), support_(std::move(support)) {
        if (n_ < 1) throw dimension_error("SigningEnumeration: n must be positive");
        if (support_.size() > 62)
            throw capacity_error("SigningEnumeration: support too large to index");
        for (const auto& [i, j] : support_)
            if (i < 0 || j < i || j >= n_)
                throw std::out_of_range("SigningEnumeration: bad support position");
    }

    explicit SigningEnumeration(const SymMatrix& a)
        : SigningEnumeration(a.dim(), support_positions(a)) {}

    int dim() const { return n_; }
    int support_size() const { return static_cast<int>(support_.size()); }
    const std::vector<std::pair<int, int>>& positions() const { return support_; }

    std::uint64_t count() const { return std::uint64_t{1} << support_.size(); }

    SymSignMatrix assignment(std::uint64_t index) const {
        if (index >= count()) throw std::out_of_range("SigningEnumeration: index exceeds count");
        SymSignMatrix s(n_, +1);
        for (std::size_t b = 0; b < support_.size(); ++b)
            if (index & (std::uint64_t{1} << b))
                s.set(support_[b].first, support_[b].second, -1);
        return s;
    }

  private:
    int n_;
    std::vector<std::pair<int, int>> support_;
};

namespace detail {

// Per-coefficient compensated accumulator.
class KahanSums {
  public:
    explicit KahanSums(std::size_t n) : sum_(n, 0.0), comp_(n, 0.0) {}

    void add(std::size_t k, double v) {
        const double y = v - comp_[k];
        const double t = sum_[k] + y;
        comp_[k] = (t - sum_[k]) - y;
        sum_[k] = t;
    }

    std::vector<double> take() && { return std::move(sum_); }

  private:
    std::vector<double> sum_;
    std::vector<double> comp_;
};

using RationalMatrix = std::vector<std::vector<Rational>>;

// det(xI - A), ascending coefficients, by the trace recurrence
//   M_1 = I, c_{n-1} = -tr(A M_1), M_k = A M_{k-1} + c_{n-k+1} I,
//   c_{n-k} = -tr(A M_k)/k.
// Exact; throws rational_overflow if any intermediate leaves 64-bit range.
inline std::vector<Rational> rational_char_poly(const RationalMatrix& a) {
    const int n = static_cast<int>(a.size());
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    c[static_cast<std::size_t>(n)] = Rational(1);
    RationalMatrix m(static_cast<std::size_t>(n),
                     std::vector<Rational>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i) m[i][i] = Rational(1);
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            RationalMatrix am(static_cast<std::size_t>(n),
                              std::vector<Rational>(static_cast<std::size_t>(n)));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    Rational s;
                    for (int t = 0; t < n; ++t) s += a[i][t] * m[t][j];
                    am[i][j] = s;
                }
            for (int i = 0; i < n; ++i) am[i][i] += c[static_cast<std::size_t>(n - k + 1)];
            m = std::move(am);
        }
        Rational tr;
        for (int i = 0; i < n; ++i)
            for (int t = 0; t < n; ++t) tr += a[i][t] * m[t][i];
        c[static_cast<std::size_t>(n - k)] = -(tr / Rational(k));
    }
    return c;
}

inline bool rational_path_eligible(const SymMatrix& a) {
    if (a.dim() > k_max_rational_dim) return false;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = i; j < a.dim(); ++j)
            if (!Rational::is_small_dyadic(a(i, j))) return false;
    return true;
}

}  // namespace detail

// Exact average of char_poly(hadamard(A, S)) over all completions of the free
// positions of sigma. Runs in rational arithmetic when the matrix is tiny
// with small dyadic entries, otherwise in compensated floating point.
inline Polynomial exact_conditional_average(const SymMatrix& a, const PartialSigning& sigma,
                                            int max_support = k_max_oracle_support) {
    const int n = a.dim();
    if (n == 0) throw std::domain_error("exact_conditional_average: empty matrix");
    require_matching_support(a, sigma, "exact_conditional_average");

    std::vector<std::pair<int, int>> free_positions;
    SymSignMatrix base(n, +1);
    for (int k = 0; k < sigma.size(); ++k) {
        const auto [i, j] = sigma.positions()[static_cast<std::size_t>(k)];
        switch (sigma.state(k)) {
            case SignState::free_choice:
                free_positions.emplace_back(i, j);
                break;
            case SignState::minus:
                base.set(i, j, -1);
                break;
            case SignState::plus:
                break;
        }
    }
    if (static_cast<int>(free_positions.size()) > max_support)
        throw capacity_error("exact_conditional_average: " +
                             std::to_string(free_positions.size()) +
                             " free positions exceed limit " + std::to_string(max_support));
    const SigningEnumeration enumeration(n, free_positions);

    if (detail::rational_path_eligible(a)) {
        try {
            std::vector<Rational> acc(static_cast<std::size_t>(n) + 1);
            for (std::uint64_t idx = 0; idx < enumeration.count(); ++idx) {
                const SymSignMatrix flips = enumeration.assignment(idx);
                detail::RationalMatrix signed_a(static_cast<std::size_t>(n),
                                                std::vector<Rational>(static_cast<std::size_t>(n)));
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        signed_a[i][j] = Rational::from_small_dyadic(a(i, j)) *
                                         Rational(base(i, j) * flips(i, j));
                const auto chi = detail::rational_char_poly(signed_a);
                for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += chi[k];
            }
            const Rational scale(1, static_cast<std::int64_t>(enumeration.count()));
            std::vector<double> coeffs(acc.size());
            for (std::size_t k = 0; k < acc.size(); ++k) coeffs[k] = (acc[k] * scale).to_double();
            return Polynomial(std::move(coeffs));
        } catch (const rational_overflow&) {
            // fall through to the floating route
        }
    }

    detail::KahanSums sums(static_cast<std::size_t>(n) + 1);
    for (std::uint64_t idx = 0; idx < enumeration.count(); ++idx) {
        SymSignMatrix s = enumeration.assignment(idx);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
                if (base(i, j) == -1) s.set(i, j, -s(i, j));
        const Polynomial chi = char_poly(hadamard(a, s));
        for (int k = 0; k <= n; ++k) sums.add(static_cast<std::size_t>(k), chi[k]);
    }
    std::vector<double> coeffs = std::move(sums).take();
    const double inv = 1.0 / static_cast<double>(enumeration.count());
    for (double& v : coeffs) v *= inv;
    return Polynomial(std::move(coeffs));
}

inline Polynomial exact_average_charpoly(const SymMatrix& a,
                                         int max_support = k_max_oracle_support) {
    return exact_conditional_average(a, PartialSigning::all_free(a), max_support);
}

struct BruteForceNorm {
    SignMatrix signs;
    double norm;
};

namespace detail {

// Row-major comparison with +1 ordered before -1.
inline bool sign_lex_less(const SignMatrix& a, const SignMatrix& b) {
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a(i, j) == b(i, j)) continue;
            return a(i, j) == +1;
        }
    return false;
}

}  // namespace detail

// True optimum of the spectral norm over all sign matrices; ties resolve to
// the lexicographically first signing (row-major, +1 before -1).
inline BruteForceNorm brute_force_min_norm(const DenseMatrix& a,
                                           int max_entries = k_max_brute_entries) {
    const int m = a.rows(), n = a.cols();
    if (m * n > max_entries)
        throw capacity_error("brute_force_min_norm: " + std::to_string(m * n) +
                             " entries exceed limit " + std::to_string(max_entries));
    std::vector<std::pair<int, int>> support;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            if (a(i, j) != 0.0) support.emplace_back(i, j);

    SignMatrix best(m, n, +1);
    double best_norm = operator_norm(a);
    const std::uint64_t total = std::uint64_t{1} << support.size();
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        SignMatrix s(m, n, +1);
        for (std::size_t b = 0; b < support.size(); ++b)
            if (idx & (std::uint64_t{1} << b)) s.set(support[b].first, support[b].second, -1);
        const double norm = operator_norm(hadamard(a, s));
        if (norm < best_norm || (norm == best_norm && detail::sign_lex_less(s, best))) {
            best_norm = norm;
            best = s;
        }
    }
    return BruteForceNorm{std::move(best), best_norm};
}

struct BruteForceLambdaMax {
    SymSignMatrix signs;
    double lambda_max;
};

// Minimum largest eigenvalue over all symmetric signings; same tie rule.
inline BruteForceLambdaMax brute_force_min_lambda_max(const SymMatrix& a,
                                                      int max_support = k_max_oracle_support) {
    if (a.dim() == 0) throw std::domain_error("brute_force_min_lambda_max: empty matrix");
    const SigningEnumeration enumeration(a);
    if (enumeration.support_size() > max_support)
        throw capacity_error("brute_force_min_lambda_max: support " +
                             std::to_string(enumeration.support_size()) + " exceeds limit " +
                             std::to_string(max_support));
    SymSignMatrix best = enumeration.assignment(0);
    double best_lambda = max_eigenvalue(hadamard(a, best));
    for (std::uint64_t idx = 1; idx < enumeration.count(); ++idx) {
        const SymSignMatrix s = enumeration.assignment(idx);
        const double lambda = max_eigenvalue(hadamard(a, s));
        if (lambda < best_lambda ||
            (lambda == best_lambda &&
             detail::sign_lex_less(s.as_sign_matrix(), best.as_sign_matrix()))) {
            best_lambda = lambda;
            best = s;
        }
    }
    return BruteForceLambdaMax{std::move(best), best_lambda};
}

}  // namespace matsign
