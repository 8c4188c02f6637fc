// Conditional expectation of det(xI - hadamard(A, S)) over uniform random
// signs on the free positions of a partial assignment. Splits as
//
//   E[chi] = sum over even vertex subsets W of
//            (-1)^{|W|/2} * m_free(W) * chi(B restricted to V minus W),
//
// where m_free is the matched-weight table of squared entries over free
// off-diagonal positions and B is A with fixed signs applied and free
// positions zeroed. Fully free reduces to the matching polynomial of the
// entrywise square; fully fixed reduces to the plain characteristic
// polynomial.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "matsign/charpoly.hpp"
#include "matsign/errors.hpp"
#include "matsign/matching.hpp"
#include "matsign/matrix.hpp"
#include "matsign/partial_signing.hpp"
#include "matsign/polynomial.hpp"

namespace matsign {

inline constexpr int k_max_expected_charpoly_dim = 14;

// Signed entries where fixed, zero where free (free diagonal included: an
// unpaired sign averages to zero).
inline SymMatrix fixed_background_matrix(const SymMatrix& a, const PartialSigning& sigma) {
    require_matching_support(a, sigma, "fixed_background_matrix");
    SymMatrix b(a.dim());
    const auto& pos = sigma.positions();
    for (int k = 0; k < sigma.size(); ++k) {
        const auto [i, j] = pos[static_cast<std::size_t>(k)];
        if (sigma.state(k) == SignState::plus) b.set(i, j, a(i, j));
        if (sigma.state(k) == SignState::minus) b.set(i, j, -a(i, j));
    }
    return b;
}

inline Polynomial expected_char_poly(const SymMatrix& a, const PartialSigning& sigma,
                                     int max_dim = k_max_expected_charpoly_dim) {
    const int n = a.dim();
    if (n == 0) throw std::domain_error("expected_char_poly: empty matrix");
    if (n > max_dim)
        throw capacity_error("expected_char_poly: dimension " + std::to_string(n) +
                             " exceeds limit " + std::to_string(max_dim));
    require_matching_support(a, sigma, "expected_char_poly");

    const SymMatrix background = fixed_background_matrix(a, sigma);
    SymMatrix free_squared(n);
    const auto& pos = sigma.positions();
    for (int k = 0; k < sigma.size(); ++k) {
        const auto [i, j] = pos[static_cast<std::size_t>(k)];
        if (sigma.state(k) == SignState::free_choice && i != j)
            free_squared.set(i, j, a(i, j) * a(i, j));
    }

    const MatchedWeightTable table(free_squared);

    std::vector<double> acc(static_cast<std::size_t>(n) + 1, 0.0);
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;  // n <= 24 past the guards
    std::vector<int> keep;
    keep.reserve(static_cast<std::size_t>(n));
    for (std::uint32_t w = 0; w <= full; ++w) {
        const int pc = detail::popcount32(w);
        if (pc % 2 != 0) continue;
        const double mw = table(w);
        if (mw == 0.0) continue;
        keep.clear();
        for (int v = 0; v < n; ++v)
            if (!(w & (std::uint32_t{1} << v))) keep.push_back(v);
        const Polynomial chi = char_poly(principal_submatrix(background, keep));
        const double coeff = ((pc / 2) % 2 == 0) ? mw : -mw;
        for (int d = 0; d <= chi.degree(); ++d) acc[static_cast<std::size_t>(d)] += coeff * chi[d];
    }
    return Polynomial(std::move(acc));
}

}  // namespace matsign
