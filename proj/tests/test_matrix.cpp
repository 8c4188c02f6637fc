#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace matsign;

TEST_CASE("dense matrix construction and validation") {
    DenseMatrix a{{1.0, 2.0}, {3.0, 4.0}};
    REQUIRE(a.rows() == 2);
    REQUIRE(a.cols() == 2);
    REQUIRE(a(1, 0) == 3.0);

    REQUIRE_THROWS_AS(DenseMatrix(0, 3), dimension_error);
    REQUIRE_THROWS_AS(DenseMatrix(2, -1), dimension_error);
    REQUIRE_THROWS_AS((DenseMatrix{{1.0}, {2.0, 3.0}}), dimension_error);

    double inf = std::numeric_limits<double>::infinity();
    REQUIRE_THROWS_AS((DenseMatrix{{inf}}), std::domain_error);

    const DenseMatrix& c = a;
    REQUIRE_THROWS_AS(c(2, 0), std::out_of_range);
    REQUIRE_THROWS_AS(c(0, -1), std::out_of_range);
}

TEST_CASE("symmetric matrix enforces exact symmetry") {
    DenseMatrix good{{1.0, 2.0}, {2.0, 5.0}};
    SymMatrix s = SymMatrix::from_dense(good);
    REQUIRE(s(0, 1) == 2.0);
    REQUIRE_FALSE(s.zero_diagonal());

    DenseMatrix bad{{1.0, 2.0}, {2.0000001, 5.0}};
    REQUIRE_THROWS_AS(SymMatrix::from_dense(bad), std::domain_error);

    DenseMatrix rect{{1.0, 2.0, 3.0}, {4.0, 5.0, 6.0}};
    REQUIRE_THROWS_AS(SymMatrix::from_dense(rect), dimension_error);

    SymMatrix z(3);
    REQUIRE(z.zero_diagonal());
    z.set(0, 2, 7.0);
    REQUIRE(z(2, 0) == 7.0);
    REQUIRE(z.zero_diagonal());
    z.set(1, 1, 1.0);
    REQUIRE_FALSE(z.zero_diagonal());
}

TEST_CASE("sign matrices only hold plus or minus one") {
    SignMatrix s(2, 3);
    REQUIRE(s(0, 0) == 1);
    s.set(1, 2, -1);
    REQUIRE(s(1, 2) == -1);
    REQUIRE_THROWS_AS(s.set(0, 0, 0), std::domain_error);
    REQUIRE_THROWS_AS(s.set(0, 0, 2), std::domain_error);

    SymSignMatrix t(3);
    t.set(0, 2, -1);
    REQUIRE(t(2, 0) == -1);
    REQUIRE(t.as_sign_matrix()(0, 2) == -1);
}

TEST_CASE("hadamard products respect shapes and signs") {
    DenseMatrix a{{1.0, -2.0}, {3.0, 4.0}};
    SignMatrix s(2, 2);
    s.set(0, 1, -1);
    DenseMatrix p = hadamard(a, s);
    REQUIRE(p(0, 1) == 2.0);
    REQUIRE(p(1, 0) == 3.0);

    DenseMatrix b{{2.0, 2.0}, {2.0, 2.0}};
    DenseMatrix q = hadamard(a, b);
    REQUIRE(q(1, 1) == 8.0);

    DenseMatrix wrong(3, 2);
    REQUIRE_THROWS_AS(hadamard(a, wrong), dimension_error);

    SymMatrix sym = ts::unit_edge();
    SymSignMatrix flip(2);
    flip.set(0, 1, -1);
    SymMatrix signed_sym = hadamard(sym, flip);
    REQUIRE(signed_sym(0, 1) == -1.0);
    REQUIRE(signed_sym(1, 0) == -1.0);
}

TEST_CASE("transpose swaps indices") {
    DenseMatrix a{{1.0, 2.0, 3.0}, {4.0, 5.0, 6.0}};
    DenseMatrix t = transpose(a);
    REQUIRE(t.rows() == 3);
    REQUIRE(t.cols() == 2);
    REQUIRE(t(2, 1) == 6.0);
}

TEST_CASE("dilation places the matrix in the top right block") {
    DenseMatrix a{{1.0, 2.0}};
    SymMatrix d = dilate(a);
    REQUIRE(d.dim() == 3);
    REQUIRE(d(0, 1) == 1.0);
    REQUIRE(d(0, 2) == 2.0);
    REQUIRE(d(1, 0) == 1.0);
    REQUIRE(d(1, 2) == 0.0);
    REQUIRE(d.zero_diagonal());
}

TEST_CASE("column norm and dilation bound") {
    DenseMatrix a{{3.0, 4.0}, {0.0, 0.0}};
    REQUIRE(linf_l2_norm(a) == Catch::Approx(4.0));
    // rows have norms 5 and 0, columns 3 and 4
    REQUIRE(dilation_bound(a) == Catch::Approx(5.0));

    // symmetric input: dilation bound collapses to the column norm
    auto g = ts::make_rng(11);
    SymMatrix s = ts::random_symmetric(g, 5);
    REQUIRE(dilation_bound(s.to_dense()) == Catch::Approx(linf_l2_norm(s)));
}

TEST_CASE("column norms ignore sign flips and bound the operator norm") {
    auto g = ts::make_rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        DenseMatrix a = ts::random_dense(g, 3, 4);
        SignMatrix s(3, 4);
        std::uniform_int_distribution<int> coin(0, 1);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 4; ++j) s.set(i, j, coin(g) ? 1 : -1);
        REQUIRE(linf_l2_norm(hadamard(a, s)) == Catch::Approx(linf_l2_norm(a)));
        REQUIRE(linf_l2_norm(a) <= operator_norm(a) + 1e-12);
    }
}

TEST_CASE("principal submatrix selects sorted unique indices") {
    SymMatrix a(4);
    a.set(0, 1, 1.0);
    a.set(2, 3, 5.0);
    SymMatrix sub = principal_submatrix(a, {3, 2, 2});
    REQUIRE(sub.dim() == 2);
    REQUIRE(sub(0, 1) == 5.0);

    SymMatrix empty = principal_submatrix(a, {});
    REQUIRE(empty.dim() == 0);

    REQUIRE_THROWS_AS(principal_submatrix(a, {4}), std::out_of_range);
}

TEST_CASE("dilation eigenvalues of a single row are plus minus the norm and zero") {
    DenseMatrix a{{1.0, 2.0}};
    auto ev = symmetric_eigenvalues(dilate(a));
    REQUIRE(ev.size() == 3);
    REQUIRE(ev[0] == Catch::Approx(-std::sqrt(5.0)));
    REQUIRE(ev[1] == Catch::Approx(0.0).margin(1e-12));
    REQUIRE(ev[2] == Catch::Approx(std::sqrt(5.0)));
}
