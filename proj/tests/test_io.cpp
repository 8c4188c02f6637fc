#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace matsign;

TEST_CASE("csv parsing accepts plain and padded numeric grids") {
    DenseMatrix a = parse_matrix_csv("1,2\n3,4\n");
    REQUIRE(a.rows() == 2);
    REQUIRE(a.cols() == 2);
    REQUIRE(a(1, 0) == 3.0);

    DenseMatrix padded = parse_matrix_csv("  1.5 , -2e-1 \n\n 0 , 4 \n");
    REQUIRE(padded(0, 1) == -0.2);
    REQUIRE(padded(1, 1) == 4.0);

    DenseMatrix single = parse_matrix_csv("7");
    REQUIRE(single.rows() == 1);
    REQUIRE(single(0, 0) == 7.0);
}

TEST_CASE("csv parsing rejects malformed grids") {
    REQUIRE_THROWS_AS(parse_matrix_csv("1,2\n3\n"), parse_error);
    REQUIRE_THROWS_AS(parse_matrix_csv("1,2,\n3,4\n"), parse_error);
    REQUIRE_THROWS_AS(parse_matrix_csv("1,2, \n3,4\n"), parse_error);
    REQUIRE_THROWS_AS(parse_matrix_csv("1,two\n"), parse_error);
    REQUIRE_THROWS_AS(parse_matrix_csv("1 2\n"), parse_error);
    REQUIRE_THROWS_AS(parse_matrix_csv(""), parse_error);
    REQUIRE_THROWS_AS(parse_matrix_csv("\n\n"), parse_error);
    REQUIRE_THROWS_AS(parse_matrix_csv("nan\n"), parse_error);
}

TEST_CASE("json parsing validates the shape contract") {
    DenseMatrix a = parse_matrix_json(R"({"rows":2,"cols":3,"data":[[1,2,3],[4,5,6]]})");
    REQUIRE(a.rows() == 2);
    REQUIRE(a.cols() == 3);
    REQUIRE(a(1, 2) == 6.0);

    REQUIRE_THROWS_AS(parse_matrix_json(R"({"rows":2,"cols":2,"data":[[1,2],[3]]})"),
                      parse_error);
    REQUIRE_THROWS_AS(parse_matrix_json(R"({"rows":3,"cols":2,"data":[[1,2],[3,4]]})"),
                      parse_error);
    REQUIRE_THROWS_AS(parse_matrix_json(R"({"cols":2,"data":[[1,2]]})"), parse_error);
    REQUIRE_THROWS_AS(parse_matrix_json("{not json"), parse_error);
    REQUIRE_THROWS_AS(parse_matrix_json(R"({"rows":1,"cols":1,"data":[["x"]]})"), parse_error);
}

TEST_CASE("format sniffing picks json only for a leading brace") {
    DenseMatrix j = parse_matrix(R"(  {"rows":1,"cols":2,"data":[[9,8]]})");
    REQUIRE(j(0, 1) == 8.0);
    DenseMatrix c = parse_matrix("9,8\n");
    REQUIRE(c(0, 0) == 9.0);
    REQUIRE_THROWS_AS(parse_matrix("   "), parse_error);
    REQUIRE_THROWS_AS(read_file("/nonexistent/matsign-no-such-file"), parse_error);
}

TEST_CASE("fnv1a64 matches the published reference values") {
    REQUIRE(fnv1a64("") == 0xcbf29ce484222325ULL);
    REQUIRE(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
    REQUIRE(fnv1a64_hex("") == "cbf29ce484222325");
    REQUIRE(fnv1a64_hex("a").size() == 16);
    REQUIRE(fnv1a64("ab") != fnv1a64("ba"));
}

TEST_CASE("json serialization keeps ascending coefficients and full certificates") {
    nlohmann::json p = to_json(Polynomial{-1.0, 0.0, 1.0});
    REQUIRE(p.is_array());
    REQUIRE(p[0] == -1.0);
    REQUIRE(p[2] == 1.0);

    SymmetricSigning r = greedy_symmetric_signing(ts::unit_triangle());
    nlohmann::json cert = to_json(r.certificate);
    for (const char* key :
         {"sign_matrix", "achieved_norm", "mu_max_root", "hl_bound", "linf_l2",
          "dilation_linf_l2", "descent_roots", "position_order", "chosen_signs",
          "guarantee_asserted"})
        REQUIRE(cert.contains(key));
    REQUIRE(cert["sign_matrix"].size() == 3);
    REQUIRE(cert["position_order"][0] == nlohmann::json::array({0, 1}));
    REQUIRE(cert["guarantee_asserted"] == true);

    nlohmann::json s = to_json(r.signs.as_sign_matrix());
    REQUIRE(s.size() == 3);
    for (const auto& row : s)
        for (const auto& v : row) REQUIRE((v == 1 || v == -1));
}
