// Weighted matching polynomials by subset dynamic programming. For a
// symmetric nonnegative weight matrix A on n vertices,
//
//   mu_A(x) = sum_d (-1)^d Z_d x^{n-2d},
//
// where Z_d is the total weight of d-edge matchings (product of edge weights
// A(i,j) over each matching, summed). Diagonal entries never contribute; an
// edge requires i < j.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "matsign/errors.hpp"
#include "matsign/matrix.hpp"
#include "matsign/polynomial.hpp"

namespace matsign {

inline constexpr int k_max_subset_dp_dim = 24;
inline constexpr int k_max_enumeration_dim = 16;

namespace detail {

inline int popcount32(std::uint32_t m) { return __builtin_popcount(m); }

}  // namespace detail

// A set of vertex-disjoint pairs, normalized i < j and sorted.
struct DimerArrangement {
    std::vector<std::pair<int, int>> pairs;

    int size() const { return static_cast<int>(pairs.size()); }

    bool operator==(const DimerArrangement&) const = default;
};

// All size-d sets of pairwise vertex-disjoint edges from the allowed list, in
// lexicographic order of the sorted pair sequence. The direct enumeration
// route; matching_polynomial uses subset DP instead, and tests compare the
// two.
inline std::vector<DimerArrangement> enumerate_dimer_arrangements(
    int n, std::vector<std::pair<int, int>> allowed, int d) {
    if (n < 1) throw dimension_error("enumerate_dimer_arrangements: n must be positive");
    if (n > k_max_enumeration_dim)
        throw capacity_error("enumerate_dimer_arrangements: n " + std::to_string(n) +
                             " exceeds enumeration capacity " +
                             std::to_string(k_max_enumeration_dim));
    if (d < 0) throw std::domain_error("enumerate_dimer_arrangements: d must be nonnegative");
    for (auto& [i, j] : allowed) {
        if (i == j) throw std::domain_error("enumerate_dimer_arrangements: self-loop edge");
        if (i > j) std::swap(i, j);
        if (i < 0 || j >= n) throw std::out_of_range("enumerate_dimer_arrangements: edge endpoint out of range");
    }
    std::sort(allowed.begin(), allowed.end());
    allowed.erase(std::unique(allowed.begin(), allowed.end()), allowed.end());

    std::vector<DimerArrangement> out;
    std::vector<std::pair<int, int>> picked;
    std::uint32_t used = 0;
    auto recurse = [&](auto&& self, std::size_t from) -> void {
        if (static_cast<int>(picked.size()) == d) {
            out.push_back(DimerArrangement{picked});
            return;
        }
        for (std::size_t k = from; k < allowed.size(); ++k) {
            const auto [i, j] = allowed[k];
            const std::uint32_t mask = (std::uint32_t{1} << i) | (std::uint32_t{1} << j);
            if (used & mask) continue;
            used |= mask;
            picked.push_back(allowed[k]);
            self(self, k + 1);
            picked.pop_back();
            used &= ~mask;
        }
    };
    recurse(recurse, 0);
    return out;
}

// Product of edge weights of one arrangement.
inline double arrangement_weight(const SymMatrix& a, const DimerArrangement& d) {
    double w = 1.0;
    for (const auto& [i, j] : d.pairs) w *= a(i, j);
    return w;
}

// Table of total matched weights m(W) over all vertex subsets W, where m(W)
// is the summed product-weight of perfect matchings of the induced subgraph
// on W. m(empty) = 1; m(W) = 0 for odd |W|. Weights come from a symmetric
// matrix restricted to off-diagonal positions; entries flagged inactive are
// treated as absent edges.
class MatchedWeightTable {
  public:
    // active(i, j) gates whether the edge {i, j} participates; pass nullptr
    // to use every off-diagonal entry.
    template <typename ActiveFn>
    MatchedWeightTable(const SymMatrix& weights, ActiveFn&& active) {
        n_ = weights.dim();
        if (n_ > k_max_subset_dp_dim)
            throw capacity_error("MatchedWeightTable: dimension " + std::to_string(n_) +
                                 " exceeds subset-DP capacity " +
                                 std::to_string(k_max_subset_dp_dim));
        m_.assign(std::size_t{1} << n_, 0.0);
        m_[0] = 1.0;
        for (std::uint32_t w = 1; w < m_.size(); ++w) {
            if (detail::popcount32(w) % 2 != 0) continue;
            const int lo = __builtin_ctz(w);
            const std::uint32_t rest = w & (w - std::uint32_t{1});
            double total = 0.0;
            for (std::uint32_t bits = rest; bits != 0; bits &= bits - 1) {
                const int j = __builtin_ctz(bits);
                const double wt = weights(lo, j);
                if (wt == 0.0 || !active(lo, j)) continue;
                total += wt * m_[w & ~(std::uint32_t{1} << lo) & ~(std::uint32_t{1} << j)];
            }
            m_[w] = total;
        }
    }

    explicit MatchedWeightTable(const SymMatrix& weights)
        : MatchedWeightTable(weights, [](int, int) { return true; }) {}

    int dim() const { return n_; }

    double operator()(std::uint32_t subset_mask) const { return m_[subset_mask]; }

    // Z_d: total weight over matchings with exactly d edges.
    double layer_sum(int d) const {
        double z = 0.0;
        for (std::uint32_t w = 0; w < m_.size(); ++w)
            if (detail::popcount32(w) == 2 * d) z += m_[w];
        return z;
    }

  private:
    int n_ = 0;
    std::vector<double> m_;
};

// Z_d: total weight of d-edge dimer arrangements, by subset DP. Z_0 = 1; the
// diagonal never participates.
inline double dimer_partition(const SymMatrix& a, int d) {
    if (d < 0) throw std::domain_error("dimer_partition: d must be nonnegative");
    if (d == 0) return 1.0;
    if (2 * d > a.dim()) return 0.0;
    const MatchedWeightTable table(a);
    return table.layer_sum(d);
}

// mu_A(x); weights may be any sign, the Heilmann-Lieb root bound applies only
// to nonnegative ones.
inline Polynomial matching_polynomial(const SymMatrix& a) {
    const int n = a.dim();
    const MatchedWeightTable table(a);
    std::vector<double> coeffs(static_cast<std::size_t>(n) + 1, 0.0);
    for (int d = 0; 2 * d <= n; ++d) {
        const double z = table.layer_sum(d);
        coeffs[n - 2 * d] = (d % 2 == 0) ? z : -z;
    }
    return Polynomial(std::move(coeffs));
}

// Entrywise square, the bridge between sign-average char polys and matching
// polynomials.
inline SymMatrix entrywise_square(const SymMatrix& a) {
    SymMatrix b(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = i; j < a.dim(); ++j) b.set(i, j, a(i, j) * a(i, j));
    return b;
}

// Strict upper bound 2*sqrt(max row sum) on every root of mu_A, valid for
// entrywise-nonnegative symmetric A (row sums include the diagonal).
inline double heilmann_lieb_bound(const SymMatrix& a) {
    const int n = a.dim();
    if (n == 0) throw std::domain_error("heilmann_lieb_bound: empty matrix");
    double max_row = 0.0;
    for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int j = 0; j < n; ++j) {
            if (a(i, j) < 0.0)
                throw std::domain_error("heilmann_lieb_bound: negative entry");
            row += a(i, j);
        }
        max_row = std::max(max_row, row);
    }
    return 2.0 * std::sqrt(max_row);
}

}  // namespace matsign
