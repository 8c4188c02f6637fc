// Dense real matrices, symmetric matrices, sign matrices, and the basic
// entrywise operations: Schur products, dilation, and l_inf(l_2) norms.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include "matsign/errors.hpp"

namespace matsign {

namespace detail {
inline void require_finite(double v, const char* where) {
    if (!std::isfinite(v)) throw std::domain_error(std::string(where) + ": non-finite entry");
}
}  // namespace detail

// Rectangular real matrix, row-major. Entries must stay finite.
class DenseMatrix {
  public:
    DenseMatrix(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(check_shape(rows, cols), fill) {
        detail::require_finite(fill, "DenseMatrix");
    }

    DenseMatrix(std::initializer_list<std::initializer_list<double>> rows)
        : rows_(static_cast<int>(rows.size())), cols_(0) {
        if (rows_ == 0) throw dimension_error("DenseMatrix: rows must be positive");
        cols_ = static_cast<int>(rows.begin()->size());
        check_shape(rows_, cols_);
        data_.reserve(static_cast<std::size_t>(rows_) * cols_);
        for (const auto& r : rows) {
            if (static_cast<int>(r.size()) != cols_)
                throw dimension_error("DenseMatrix: ragged initializer");
            for (double v : r) {
                detail::require_finite(v, "DenseMatrix");
                data_.push_back(v);
            }
        }
    }

    static DenseMatrix from_rows(const std::vector<std::vector<double>>& rows) {
        if (rows.empty() || rows.front().empty())
            throw dimension_error("DenseMatrix: rows and cols must be positive");
        DenseMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
        for (int i = 0; i < m.rows_; ++i) {
            if (static_cast<int>(rows[i].size()) != m.cols_)
                throw dimension_error("DenseMatrix: ragged row data");
            for (int j = 0; j < m.cols_; ++j) {
                detail::require_finite(rows[i][j], "DenseMatrix");
                m(i, j) = rows[i][j];
            }
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double operator()(int i, int j) const { return data_[index(i, j)]; }
    double& operator()(int i, int j) { return data_[index(i, j)]; }

    const std::vector<double>& data() const { return data_; }

  private:
    static int check_shape(int rows, int cols) {
        if (rows < 1 || cols < 1) throw dimension_error("DenseMatrix: rows and cols must be positive");
        return rows * cols;
    }
    std::size_t index(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            throw std::out_of_range("DenseMatrix: index out of range");
        return static_cast<std::size_t>(i) * cols_ + j;
    }

    int rows_;
    int cols_;
    std::vector<double> data_;
};

// Symmetric real matrix of dimension n >= 0. Symmetry is enforced at the
// representation level: set() writes both (i,j) and (j,i).
class SymMatrix {
  public:
    explicit SymMatrix(int n = 0, double fill = 0.0)
        : n_(n), data_(check_dim(n), fill) {
        detail::require_finite(fill, "SymMatrix");
    }

    // Exact symmetry required; use symmetrize() for near-symmetric data.
    static SymMatrix from_dense(const DenseMatrix& d) {
        if (d.rows() != d.cols()) throw dimension_error("SymMatrix: input not square");
        SymMatrix m(d.rows());
        for (int i = 0; i < d.rows(); ++i)
            for (int j = i; j < d.cols(); ++j) {
                if (d(i, j) != d(j, i))
                    throw std::domain_error("SymMatrix: input not symmetric");
                m.set(i, j, d(i, j));
            }
        return m;
    }

    DenseMatrix to_dense() const {
        if (n_ == 0) throw dimension_error("SymMatrix: cannot densify empty matrix");
        DenseMatrix d(n_, n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) d(i, j) = (*this)(i, j);
        return d;
    }

    int dim() const { return n_; }

    double operator()(int i, int j) const { return data_[index(i, j)]; }

    void set(int i, int j, double v) {
        detail::require_finite(v, "SymMatrix");
        data_[index(i, j)] = v;
        data_[index(j, i)] = v;
    }

    bool zero_diagonal() const {
        for (int i = 0; i < n_; ++i)
            if ((*this)(i, i) != 0.0) return false;
        return true;
    }

  private:
    static std::size_t check_dim(int n) {
        if (n < 0) throw dimension_error("SymMatrix: negative dimension");
        return static_cast<std::size_t>(n) * n;
    }
    std::size_t index(int i, int j) const {
        if (i < 0 || i >= n_ || j < 0 || j >= n_)
            throw std::out_of_range("SymMatrix: index out of range");
        return static_cast<std::size_t>(i) * n_ + j;
    }

    int n_;
    std::vector<double> data_;
};

// Rectangular matrix with every entry +1 or -1.
class SignMatrix {
  public:
    SignMatrix(int rows, int cols, int fill = +1)
        : rows_(rows), cols_(cols), signs_(check_shape(rows, cols), check_sign(fill)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    int operator()(int i, int j) const { return signs_[index(i, j)]; }
    void set(int i, int j, int s) { signs_[index(i, j)] = check_sign(s); }

    bool operator==(const SignMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && signs_ == o.signs_;
    }

  private:
    static int check_shape(int rows, int cols) {
        if (rows < 1 || cols < 1) throw dimension_error("SignMatrix: rows and cols must be positive");
        return rows * cols;
    }
    static std::int8_t check_sign(int s) {
        if (s != 1 && s != -1) throw std::domain_error("SignMatrix: entry must be +1 or -1");
        return static_cast<std::int8_t>(s);
    }
    std::size_t index(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            throw std::out_of_range("SignMatrix: index out of range");
        return static_cast<std::size_t>(i) * cols_ + j;
    }

    int rows_;
    int cols_;
    std::vector<std::int8_t> signs_;
};

// Symmetric sign matrix: s(i,j) = s(j,i), entries +1/-1.
class SymSignMatrix {
  public:
    explicit SymSignMatrix(int n, int fill = +1) : m_(n, n, fill) {}

    int dim() const { return m_.rows(); }
    int operator()(int i, int j) const { return m_(i, j); }
    void set(int i, int j, int s) {
        m_.set(i, j, s);
        m_.set(j, i, s);
    }

    const SignMatrix& as_sign_matrix() const { return m_; }

    bool operator==(const SymSignMatrix& o) const { return m_ == o.m_; }

  private:
    SignMatrix m_;
};

// --- Schur (entrywise) products -------------------------------------------

inline DenseMatrix hadamard(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw dimension_error("hadamard: shape mismatch");
    DenseMatrix r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) * b(i, j);
    return r;
}

inline DenseMatrix hadamard(const DenseMatrix& a, const SignMatrix& s) {
    if (a.rows() != s.rows() || a.cols() != s.cols())
        throw dimension_error("hadamard: shape mismatch");
    DenseMatrix r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) * s(i, j);
    return r;
}

inline SymMatrix hadamard(const SymMatrix& a, const SymMatrix& b) {
    if (a.dim() != b.dim()) throw dimension_error("hadamard: shape mismatch");
    SymMatrix r(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = i; j < a.dim(); ++j) r.set(i, j, a(i, j) * b(i, j));
    return r;
}

inline SymMatrix hadamard(const SymMatrix& a, const SymSignMatrix& s) {
    if (a.dim() != s.dim()) throw dimension_error("hadamard: shape mismatch");
    SymMatrix r(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = i; j < a.dim(); ++j) r.set(i, j, a(i, j) * s(i, j));
    return r;
}

inline DenseMatrix transpose(const DenseMatrix& a) {
    DenseMatrix r(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
    return r;
}

// Dilation A_D = [[0, A], [A^T, 0]], symmetric of dimension m+n with zero
// diagonal blocks; its eigenvalues are the +/- singular values of A.
inline SymMatrix dilate(const DenseMatrix& a) {
    const int m = a.rows(), n = a.cols();
    SymMatrix d(m + n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) d.set(i, m + j, a(i, j));
    return d;
}

// max_j sqrt(sum_i a_ij^2): the largest Euclidean column norm.
inline double linf_l2_norm(const DenseMatrix& a) {
    double best = 0.0;
    for (int j = 0; j < a.cols(); ++j) {
        double s = 0.0;
        for (int i = 0; i < a.rows(); ++i) s += a(i, j) * a(i, j);
        best = std::max(best, s);
    }
    return std::sqrt(best);
}

inline double linf_l2_norm(const SymMatrix& a) {
    double best = 0.0;
    for (int j = 0; j < a.dim(); ++j) {
        double s = 0.0;
        for (int i = 0; i < a.dim(); ++i) s += a(i, j) * a(i, j);
        best = std::max(best, s);
    }
    return std::sqrt(best);
}

// linf_l2_norm of the dilation: max over all row and column l2 norms of A.
inline double dilation_bound(const DenseMatrix& a) {
    double best = 0.0;
    for (int j = 0; j < a.cols(); ++j) {
        double s = 0.0;
        for (int i = 0; i < a.rows(); ++i) s += a(i, j) * a(i, j);
        best = std::max(best, s);
    }
    for (int i = 0; i < a.rows(); ++i) {
        double s = 0.0;
        for (int j = 0; j < a.cols(); ++j) s += a(i, j) * a(i, j);
        best = std::max(best, s);
    }
    return std::sqrt(best);
}

// Symmetric submatrix indexed by `keep` in ascending order. Duplicates are
// collapsed; an empty keep set yields the 0x0 matrix.
inline SymMatrix principal_submatrix(const SymMatrix& m, std::vector<int> keep) {
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    for (int v : keep)
        if (v < 0 || v >= m.dim()) throw std::out_of_range("principal_submatrix: index out of range");
    SymMatrix r(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i; j < keep.size(); ++j)
            r.set(static_cast<int>(i), static_cast<int>(j), m(keep[i], keep[j]));
    return r;
}

}  // namespace matsign
