// Matrix parsing (CSV and JSON), JSON serialization of results, and input
// hashing. JSON objects use nlohmann's default sorted keys, so serialized
// reports are byte-deterministic for identical values.
#pragma once

#include <cctype>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "matsign/errors.hpp"
#include "matsign/matrix.hpp"
#include "matsign/polynomial.hpp"
#include "matsign/signing.hpp"

namespace matsign {

inline constexpr const char k_version[] = "0.1.0";

namespace detail {

inline std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

inline double parse_cell(const std::string& cell, int row, int col) {
    const std::string t = trim(cell);
    const auto fail = [&] {
        throw parse_error("bad numeric literal '" + t + "' at row " + std::to_string(row) +
                          ", column " + std::to_string(col));
    };
    if (t.empty()) fail();
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(t, &pos);
    } catch (const std::exception&) {
        fail();
    }
    if (pos != t.size()) fail();
    return v;
}

}  // namespace detail

// One row per line, comma-separated decimals, no header. Blank lines skipped.
inline DenseMatrix parse_matrix_csv(const std::string& text) {
    std::vector<std::vector<double>> rows;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string content = detail::trim(line);
        if (content.empty()) continue;
        if (content.back() == ',')
            throw parse_error("trailing comma at row " + std::to_string(lineno));
        std::vector<double> row;
        std::istringstream cells(content);
        std::string cell;
        int col = 0;
        while (std::getline(cells, cell, ',')) row.push_back(detail::parse_cell(cell, lineno, col++));
        if (!rows.empty() && row.size() != rows.front().size())
            throw parse_error("ragged rows: row " + std::to_string(lineno) + " has " +
                              std::to_string(row.size()) + " cells, expected " +
                              std::to_string(rows.front().size()));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw parse_error("no matrix rows found");
    try {
        return DenseMatrix::from_rows(rows);
    } catch (const std::exception& e) {
        throw parse_error(e.what());
    }
}

// {"rows": m, "cols": n, "data": [[...], ...]}
inline DenseMatrix parse_matrix_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
    try {
        if (!doc.is_object() || !doc.contains("rows") || !doc.contains("cols") ||
            !doc.contains("data"))
            throw parse_error("matrix JSON requires rows, cols, data fields");
        const int m = doc.at("rows").get<int>();
        const int n = doc.at("cols").get<int>();
        const auto& data = doc.at("data");
        if (!data.is_array() || static_cast<int>(data.size()) != m)
            throw parse_error("data has wrong row count");
        std::vector<std::vector<double>> rows;
        for (const auto& row : data) {
            if (!row.is_array() || static_cast<int>(row.size()) != n)
                throw parse_error("data has wrong column count");
            rows.push_back(row.get<std::vector<double>>());
        }
        return DenseMatrix::from_rows(rows);
    } catch (const parse_error&) {
        throw;
    } catch (const std::exception& e) {
        throw parse_error(e.what());
    }
}

// Sniffs the format: leading '{' means JSON, anything else CSV.
inline DenseMatrix parse_matrix(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{' ? parse_matrix_json(text) : parse_matrix_csv(text);
    }
    throw parse_error("empty matrix input");
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline DenseMatrix load_matrix(const std::string& path) { return parse_matrix(read_file(path)); }

inline std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

inline std::string fnv1a64_hex(std::string_view bytes) {
    static const char digits[] = "0123456789abcdef";
    std::uint64_t h = fnv1a64(bytes);
    std::string out(16, '0');
    for (int k = 15; k >= 0; --k) {
        out[static_cast<std::size_t>(k)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

inline nlohmann::json to_json(const Polynomial& p) { return nlohmann::json(p.coeffs()); }

inline nlohmann::json to_json(const SignMatrix& s) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < s.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < s.cols(); ++j) row.push_back(s(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline nlohmann::json to_json(const DenseMatrix& a) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < a.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < a.cols(); ++j) row.push_back(a(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline nlohmann::json to_json(const SigningCertificate& cert) {
    nlohmann::json positions = nlohmann::json::array();
    for (const auto& [i, j] : cert.position_order)
        positions.push_back(nlohmann::json::array({i, j}));
    return nlohmann::json{{"sign_matrix", to_json(cert.sign_matrix)},
                          {"achieved_norm", cert.achieved_norm},
                          {"mu_max_root", cert.mu_max_root},
                          {"hl_bound", cert.hl_bound},
                          {"linf_l2", cert.linf_l2},
                          {"dilation_linf_l2", cert.dilation_linf_l2},
                          {"descent_roots", cert.descent_roots},
                          {"position_order", positions},
                          {"chosen_signs", cert.chosen_signs},
                          {"guarantee_asserted", cert.guarantee_asserted}};
}

}  // namespace matsign
