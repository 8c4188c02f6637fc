#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace matsign;

TEST_CASE("characteristic polynomial of small fixed matrices") {
    SymMatrix a(2);
    a.set(0, 0, 1.0);
    a.set(1, 1, 3.0);
    a.set(0, 1, 2.0);
    // x^2 - (tr)x + det = x^2 - 4x - 1
    Polynomial chi = char_poly(a);
    REQUIRE(chi.degree() == 2);
    REQUIRE(chi[2] == Catch::Approx(1.0));
    REQUIRE(chi[1] == Catch::Approx(-4.0));
    REQUIRE(chi[0] == Catch::Approx(-1.0));

    SymMatrix edge = ts::unit_edge();
    REQUIRE(ts::coeffs_close(char_poly(edge), Polynomial{-1.0, 0.0, 1.0}, 1e-14));

    SymMatrix zero(4);
    REQUIRE(ts::coeffs_close(char_poly(zero), Polynomial{0.0, 0.0, 0.0, 0.0, 1.0}, 0.0));
}

TEST_CASE("dimension zero gives the empty product") {
    SymMatrix empty(0);
    Polynomial chi = char_poly(empty);
    REQUIRE(chi.degree() == 0);
    REQUIRE(chi[0] == 1.0);
}

TEST_CASE("characteristic polynomial vanishes on the spectrum") {
    auto g = ts::make_rng(53);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + trial % 8;
        SymMatrix a = ts::random_symmetric(g, n);
        Polynomial chi = char_poly(a);
        REQUIRE(chi.degree() == n);
        REQUIRE(chi.is_monic(1e-12));
        for (double lambda : symmetric_eigenvalues(a))
            REQUIRE(std::abs(chi.evaluate(lambda)) < 1e-7 * (1.0 + chi.max_abs_coeff()));
    }
}

TEST_CASE("characteristic polynomial matches the eigenvalue product form") {
    auto g = ts::make_rng(59);
    for (int trial = 0; trial < 10; ++trial) {
        SymMatrix a = ts::random_symmetric(g, 6);
        Polynomial from_recurrence = char_poly(a);
        Polynomial from_spectrum{1.0};
        for (double lambda : symmetric_eigenvalues(a))
            from_spectrum = from_spectrum * Polynomial{-lambda, 1.0};
        REQUIRE(ts::coeffs_close(from_recurrence, from_spectrum, 1e-10));
    }
}
