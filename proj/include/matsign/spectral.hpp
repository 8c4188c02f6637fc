// Eigen-backed spectral routines: operator norm, symmetric eigenvalues,
// singular values. Kept separate from char_poly so the two root pipelines
// stay independent of each other.
#pragma once

#include <algorithm>
#include <vector>

#include <Eigen/Dense>

#include "matsign/matrix.hpp"

namespace matsign {

namespace detail {

inline Eigen::MatrixXd to_eigen(const DenseMatrix& a) {
    Eigen::MatrixXd m(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    return m;
}

inline Eigen::MatrixXd to_eigen(const SymMatrix& a) {
    Eigen::MatrixXd m(a.dim(), a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) m(i, j) = a(i, j);
    return m;
}

}  // namespace detail

// Eigenvalues in ascending order.
inline std::vector<double> symmetric_eigenvalues(const SymMatrix& a) {
    if (a.dim() == 0) return {};
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(detail::to_eigen(a),
                                                          Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("symmetric_eigenvalues: eigensolver failed to converge");
    const auto& ev = solver.eigenvalues();
    return std::vector<double>(ev.data(), ev.data() + ev.size());
}

inline double max_eigenvalue(const SymMatrix& a) {
    const auto ev = symmetric_eigenvalues(a);
    if (ev.empty()) throw std::domain_error("max_eigenvalue: empty matrix");
    return ev.back();
}

// Singular values in descending order.
inline std::vector<double> singular_values(const DenseMatrix& a) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(detail::to_eigen(a));
    const auto& sv = svd.singularValues();
    return std::vector<double>(sv.data(), sv.data() + sv.size());
}

// Spectral norm (largest singular value).
inline double operator_norm(const DenseMatrix& a) {
    const auto sv = singular_values(a);
    return sv.empty() ? 0.0 : sv.front();
}

inline double operator_norm(const SymMatrix& a) {
    const auto ev = symmetric_eigenvalues(a);
    double m = 0.0;
    for (double v : ev) m = std::max(m, std::abs(v));
    return m;
}

}  // namespace matsign
