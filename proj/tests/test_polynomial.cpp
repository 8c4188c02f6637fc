#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace matsign;

TEST_CASE("polynomial normalization and evaluation") {
    Polynomial p{-1.0, 0.0, 1.0};  // x^2 - 1
    REQUIRE(p.degree() == 2);
    REQUIRE(p.evaluate(2.0) == 3.0);
    REQUIRE(p.evaluate(1.0) == 0.0);

    Polynomial one{1.0};
    REQUIRE(one.evaluate(123.0) == 1.0);

    Polynomial padded{2.0, 0.0, 0.0};
    REQUIRE(padded.degree() == 0);

    Polynomial zero{0.0, 0.0};
    REQUIRE(zero.is_zero());
    REQUIRE(zero.degree() == 0);

    REQUIRE_THROWS_AS(Polynomial{std::numeric_limits<double>::quiet_NaN()}, std::domain_error);
}

TEST_CASE("polynomial arithmetic") {
    Polynomial p{-1.0, 0.0, 1.0};
    Polynomial q{1.0, 1.0};  // x + 1
    Polynomial sum = p + q;
    REQUIRE(sum[0] == 0.0);
    REQUIRE(sum[1] == 1.0);
    REQUIRE(sum[2] == 1.0);

    Polynomial prod = q * Polynomial{-1.0, 1.0};  // (x+1)(x-1)
    REQUIRE(ts::coeffs_close(prod, p, 0.0));

    Polynomial diff = p - p;
    REQUIRE(diff.is_zero());

    Polynomial d = p.derivative();
    REQUIRE(d.degree() == 1);
    REQUIRE(d[1] == 2.0);
}

TEST_CASE("largest real root on the worked fixtures") {
    REQUIRE(largest_real_root(Polynomial{-1.0, 0.0, 1.0}, 1e-9) == Catch::Approx(1.0));
    REQUIRE(largest_real_root(Polynomial{0.0, -3.0, 0.0, 1.0}, 1e-9) ==
            Catch::Approx(std::sqrt(3.0)));
    REQUIRE(largest_real_root(Polynomial{2.0, 0.0, -4.0, 0.0, 1.0}, 1e-9) ==
            Catch::Approx(std::sqrt(2.0 + std::sqrt(2.0))));

    REQUIRE_THROWS_AS(largest_real_root(Polynomial{1.0, 0.0, 1.0}, 1e-9), std::domain_error);
    REQUIRE_THROWS_AS(largest_real_root(Polynomial{5.0}, 1e-9), std::domain_error);
    REQUIRE_THROWS_AS(largest_real_root(Polynomial{-1.0, 0.0, 1.0}, 0.0), std::domain_error);
}

TEST_CASE("sturm root counting") {
    Polynomial p{-1.0, 0.0, 1.0};
    REQUIRE(real_root_count(p, -2.0, 2.0) == 2);
    REQUIRE(real_root_count(Polynomial{1.0, 0.0, 1.0}, -10.0, 10.0) == 0);
    REQUIRE(real_root_count(Polynomial{0.0, -3.0, 0.0, 1.0}, 0.1, 2.0) == 1);
    // endpoint exactly on a root is nudged outward
    REQUIRE(real_root_count(p, -1.0, 1.0) >= 1);

    REQUIRE_THROWS_AS(real_root_count(Polynomial{}, -1.0, 1.0), std::domain_error);
    REQUIRE_THROWS_AS(real_root_count(p, 1.0, -1.0), std::domain_error);
}

TEST_CASE("real rootedness including multiple roots") {
    REQUIRE(is_real_rooted(Polynomial{-1.0, 0.0, 1.0}));
    REQUIRE_FALSE(is_real_rooted(Polynomial{1.0, 0.0, 1.0}));
    REQUIRE(is_real_rooted(Polynomial{1.0, -2.0, 1.0}));  // (x-1)^2
    REQUIRE(is_real_rooted(Polynomial{0.0, 0.0, 0.0, 1.0}));  // x^3
    REQUIRE_FALSE(is_real_rooted(Polynomial{2.0, 0.0, 1.0}));  // x^2 + 2
}

TEST_CASE("square free part drops multiplicity") {
    // (x-1)^2 (x+2) = x^3 - 3x + 2
    Polynomial p{2.0, -3.0, 0.0, 1.0};
    Polynomial q = square_free_part(p);
    REQUIRE(q.degree() == 2);
    REQUIRE(std::abs(q.evaluate(1.0)) < 1e-10);
    REQUIRE(std::abs(q.evaluate(-2.0)) < 1e-9);

    Polynomial simple{-1.0, 0.0, 1.0};
    REQUIRE(square_free_part(simple).degree() == 2);
}

TEST_CASE("sturm count of a square free real rooted polynomial equals its degree") {
    auto g = ts::make_rng(31);
    std::uniform_real_distribution<double> d(-3.0, 3.0);
    for (int trial = 0; trial < 30; ++trial) {
        // build from random distinct-ish roots
        Polynomial p{1.0};
        for (int k = 0; k < 5; ++k) p = p * Polynomial{-d(g), 1.0};
        const double bound = cauchy_root_bound(p);
        REQUIRE(real_root_count(p, -bound, bound) == 5);
        REQUIRE(is_real_rooted(p));
    }
}

TEST_CASE("convex combinations of monic polynomials") {
    Polynomial p{-1.0, 0.0, 1.0};
    Polynomial q{-4.0, 0.0, 1.0};
    REQUIRE(ts::coeffs_close(convex_combination(p, q, 1.0), p, 0.0));
    REQUIRE(ts::coeffs_close(convex_combination(p, q, 0.0), q, 0.0));
    Polynomial mid = convex_combination(p, q, 0.5);
    REQUIRE(mid[0] == -2.5);
    REQUIRE(mid[2] == 1.0);

    REQUIRE_THROWS_AS(convex_combination(p, Polynomial{1.0, 1.0}, 0.5), std::domain_error);
    REQUIRE_THROWS_AS(convex_combination(p, 2.0 * q, 0.5), std::domain_error);
    REQUIRE_THROWS_AS(convex_combination(p, q, 1.5), std::domain_error);
}

TEST_CASE("sampled common interlacing witness") {
    Polynomial p{-1.0, 0.0, 1.0};
    Polynomial q{-4.0, 0.0, 1.0};
    REQUIRE(common_interlacing_witness(p, p, 8));
    REQUIRE(common_interlacing_witness(p, q, 32));

    // (x-1)(x-2) and (x+1)(x+2): the midpoint combination is x^2 + 2
    Polynomial far_right{2.0, -3.0, 1.0};
    Polynomial far_left{2.0, 3.0, 1.0};
    REQUIRE_FALSE(common_interlacing_witness(far_right, far_left, 2));
}

TEST_CASE("largest root agrees with an independent eigensolver") {
    auto g = ts::make_rng(47);
    for (int trial = 0; trial < 25; ++trial) {
        SymMatrix a = ts::random_symmetric(g, 2 + trial % 9);
        const double from_roots = largest_real_root(char_poly(a), 1e-9);
        const double from_eigen = max_eigenvalue(a);
        REQUIRE(from_roots == Catch::Approx(from_eigen).margin(1e-7));
    }
}
