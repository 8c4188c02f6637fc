// Prints matching polynomials, their largest roots, and the classical root
// bound for a weighted cycle.
#include <cstdio>

#include "matsign/matsign.hpp"

int main() {
    using namespace matsign;

    const int n = 6;
    SymMatrix cycle(n);
    for (int i = 0; i < n; ++i) cycle.set(i, (i + 1) % n, 1.0 + 0.25 * i);

    const Polynomial mu = matching_polynomial(cycle);
    std::printf("mu coefficients (ascending):");
    for (double c : mu.coeffs()) std::printf(" %g", c);
    std::printf("\n");
    std::printf("real rooted: %s\n", is_real_rooted(mu) ? "yes" : "no");

    const double root = largest_real_root(square_free_part(mu), 1e-10);
    const double bound = heilmann_lieb_bound(cycle);
    std::printf("largest root = %.12f\n", root);
    std::printf("2 sqrt(max row sum) = %.12f\n", bound);

    for (int d = 0; d <= n / 2; ++d)
        std::printf("dimer arrangements of size %d: weight sum %.6f\n", d,
                    dimer_partition(cycle, d));
    return 0;
}
