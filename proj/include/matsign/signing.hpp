// Greedy descent through the tree of partial sign assignments. At each free
// position both one-step extensions are scored by the largest root of their
// conditional expected characteristic polynomial and the smaller root wins;
// the leaf signing then satisfies
//
//   lambda_max(hadamard(A, S)) <= largest root of mu of the entrywise square,
//
// which for dilated rectangular instances becomes the spectral-norm bound
// against twice the max row/column l2 norm. Every result carries a
// certificate that is re-audited before returning; violations throw, they are
// never silently dropped.
#pragma once

#include <algorithm>
#include <cmath>
#include <future>
#include <string>
#include <utility>
#include <vector>

#include "matsign/charpoly.hpp"
#include "matsign/errors.hpp"
#include "matsign/expected_charpoly.hpp"
#include "matsign/matching.hpp"
#include "matsign/matrix.hpp"
#include "matsign/partial_signing.hpp"
#include "matsign/polynomial.hpp"
#include "matsign/spectral.hpp"

namespace matsign {

inline constexpr double k_default_root_tol = 1e-7;

struct DescentStep {
    int position_index;            // index into the certificate's position order
    std::pair<int, int> position;  // upper-triangular coordinates
    Polynomial plus_poly;
    Polynomial minus_poly;
    double plus_root;
    double minus_root;
    int chosen;  // +1 or -1
};

struct DescentTrace {
    Polynomial root_poly;  // fully free expectation, equals mu of the square
    std::vector<DescentStep> steps;
};

// Audit data for one signing run. achieved_norm is the largest eigenvalue of
// the signed symmetric instance; on the rectangular route that instance is
// the dilation, so the value equals the spectral norm of the signed block.
struct SigningCertificate {
    SignMatrix sign_matrix;
    double achieved_norm;
    double mu_max_root;
    double hl_bound;
    double linf_l2;
    double dilation_linf_l2;
    std::vector<double> descent_roots;  // per-depth roots, starting at the tree root
    std::vector<std::pair<int, int>> position_order;
    std::vector<int> chosen_signs;
    bool guarantee_asserted;
};

struct SymmetricSigning {
    SymSignMatrix signs;
    SigningCertificate certificate;
    DescentTrace trace;
};

struct RectangularSigning {
    SignMatrix signs;             // the m x n block
    SymSignMatrix dilation_signs; // the full symmetric signing it was cut from
    SigningCertificate certificate;
    DescentTrace trace;
};

namespace detail {

// Root extraction for descent scoring. Bisection runs on the square-free
// part: a near-double largest root can otherwise be pushed off the real line
// by coefficient rounding and vanish from the Sturm count entirely.
inline double stable_largest_root(const Polynomial& p, double root_tol) {
    return largest_real_root(square_free_part(p), root_tol);
}

inline double root_tol_for(double tol) { return std::min(tol, 1e-9); }

inline void check_descent_monotone(const std::vector<double>& roots, double tol) {
    for (std::size_t k = 1; k < roots.size(); ++k)
        if (roots[k] > roots[k - 1] + tol)
            throw certification_error(
                "descent root increased at step " + std::to_string(k) + ": " +
                std::to_string(roots[k - 1]) + " -> " + std::to_string(roots[k]));
}

}  // namespace detail

inline SymmetricSigning greedy_symmetric_signing(const SymMatrix& a, double tol = 1e-7,
                                                 int max_dim = k_max_expected_charpoly_dim,
                                                 bool parallel = false) {
    if (!(tol > 0.0)) throw std::domain_error("greedy_symmetric_signing: tol must be positive");
    const int n = a.dim();
    if (n == 0) throw std::domain_error("greedy_symmetric_signing: empty matrix");
    if (n > max_dim)
        throw capacity_error("greedy_symmetric_signing: dimension " + std::to_string(n) +
                             " exceeds limit " + std::to_string(max_dim));
    const double root_tol = detail::root_tol_for(tol);

    PartialSigning cur = PartialSigning::all_free(a);
    DescentTrace trace;
    trace.root_poly = expected_char_poly(a, cur, max_dim);
    const double mu_root = detail::stable_largest_root(trace.root_poly, root_tol);

    std::vector<double> descent_roots{mu_root};
    std::vector<int> chosen_signs;
    for (int idx = cur.first_free(); idx != -1; idx = cur.first_free()) {
        const PartialSigning ps_plus = cur.fixed(idx, +1);
        const PartialSigning ps_minus = cur.fixed(idx, -1);
        Polynomial f_plus, f_minus;
        if (parallel) {
            auto plus_task = std::async(std::launch::async, [&] {
                return expected_char_poly(a, ps_plus, max_dim);
            });
            f_minus = expected_char_poly(a, ps_minus, max_dim);
            f_plus = plus_task.get();
        } else {
            f_plus = expected_char_poly(a, ps_plus, max_dim);
            f_minus = expected_char_poly(a, ps_minus, max_dim);
        }
        const double r_plus = detail::stable_largest_root(f_plus, root_tol);
        const double r_minus = detail::stable_largest_root(f_minus, root_tol);
        // Ties within tol resolve to +1.
        const int chosen = (r_plus <= r_minus + tol) ? +1 : -1;
        trace.steps.push_back(DescentStep{idx, cur.positions()[static_cast<std::size_t>(idx)],
                                          f_plus, f_minus, r_plus, r_minus, chosen});
        descent_roots.push_back(chosen == +1 ? r_plus : r_minus);
        chosen_signs.push_back(chosen);
        cur = cur.fixed(idx, chosen);
    }

    const SymSignMatrix signs = cur.to_sym_sign_matrix();
    const double achieved = max_eigenvalue(hadamard(a, signs));
    const double linf = linf_l2_norm(a);
    const double hl = heilmann_lieb_bound(entrywise_square(a));
    const bool guarantee = a.zero_diagonal();

    detail::check_descent_monotone(descent_roots, tol);
    if (guarantee) {
        if (achieved > mu_root + tol)
            throw certification_error("achieved largest eigenvalue " + std::to_string(achieved) +
                                      " exceeds expected-polynomial root " +
                                      std::to_string(mu_root));
        if (mu_root > 2.0 * linf + tol)
            throw certification_error("expected-polynomial root " + std::to_string(mu_root) +
                                      " exceeds twice the max column norm " +
                                      std::to_string(linf));
    }

    SigningCertificate cert{signs.as_sign_matrix(), achieved,  mu_root,
                            hl,                     linf,      linf,
                            descent_roots,          cur.positions(), chosen_signs,
                            guarantee};
    return SymmetricSigning{signs, std::move(cert), std::move(trace)};
}

inline RectangularSigning sign_rectangular(const DenseMatrix& a, double tol = 1e-7,
                                           int max_dim = k_max_expected_charpoly_dim,
                                           bool parallel = false) {
    const int m = a.rows(), n = a.cols();
    if (m + n > max_dim)
        throw capacity_error("sign_rectangular: dilated dimension " + std::to_string(m + n) +
                             " exceeds limit " + std::to_string(max_dim));
    SymmetricSigning sym = greedy_symmetric_signing(dilate(a), tol, max_dim, parallel);

    SignMatrix block(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) block.set(i, j, sym.signs(i, m + j));

    const double achieved = operator_norm(hadamard(a, block));
    // The dilation's top eigenvalue and the signed block's top singular value
    // are the same number computed by two different factorizations.
    if (std::abs(achieved - sym.certificate.achieved_norm) >
        1e-8 * (1.0 + std::abs(achieved)))
        throw certification_error("signed block norm " + std::to_string(achieved) +
                                  " disagrees with dilation eigenvalue " +
                                  std::to_string(sym.certificate.achieved_norm));
    if (achieved > sym.certificate.mu_max_root + tol)
        throw certification_error("signed block norm " + std::to_string(achieved) +
                                  " exceeds expected-polynomial root " +
                                  std::to_string(sym.certificate.mu_max_root));

    SigningCertificate cert{block,
                            achieved,
                            sym.certificate.mu_max_root,
                            sym.certificate.hl_bound,
                            linf_l2_norm(a),
                            dilation_bound(a),
                            sym.certificate.descent_roots,
                            sym.certificate.position_order,
                            sym.certificate.chosen_signs,
                            true};
    return RectangularSigning{std::move(block), sym.signs, std::move(cert),
                              std::move(sym.trace)};
}

// True iff the eigenvalues of the signed dilation are exactly the plus/minus
// singular values of the signed block, padded with |m-n| zeros.
inline bool verify_schur_identity(const DenseMatrix& a, const SignMatrix& s2,
                                  const SymSignMatrix& s_prime, double tol) {
    const int m = a.rows(), n = a.cols();
    if (s2.rows() != m || s2.cols() != n)
        throw dimension_error("verify_schur_identity: block shape mismatch");
    if (s_prime.dim() != m + n)
        throw dimension_error("verify_schur_identity: dilation shape mismatch");
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            if (s_prime(i, m + j) != s2(i, j))
                throw std::domain_error(
                    "verify_schur_identity: dilation block disagrees with the sign matrix");

    std::vector<double> lhs = symmetric_eigenvalues(hadamard(dilate(a), s_prime));
    std::vector<double> rhs;
    for (double s : singular_values(hadamard(a, s2))) {
        rhs.push_back(s);
        rhs.push_back(-s);
    }
    for (int k = 0; k < std::abs(m - n); ++k) rhs.push_back(0.0);
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    if (lhs.size() != rhs.size()) return false;
    for (std::size_t k = 0; k < lhs.size(); ++k)
        if (std::abs(lhs[k] - rhs[k]) > tol) return false;
    return true;
}

struct CertifyResult {
    bool ok;
    std::string diagnostic;  // empty when ok
};

namespace detail {

inline bool agree(double recomputed, double stored, double tol) {
    return std::abs(recomputed - stored) <= std::max(tol, 1e-9) * (1.0 + std::abs(recomputed));
}

inline CertifyResult fail(const std::string& why) { return CertifyResult{false, why}; }

// Checks shared by both routes once the per-route scalars are recomputed.
inline CertifyResult certify_core(const SigningCertificate& cert, double tol, double achieved_re,
                                  double mu_re, double hl_re, double linf_re, double dil_re) {
    if (!agree(achieved_re, cert.achieved_norm, tol))
        return fail("achieved_norm does not match recomputation: stored " +
                    std::to_string(cert.achieved_norm) + ", recomputed " +
                    std::to_string(achieved_re));
    if (!agree(mu_re, cert.mu_max_root, tol))
        return fail("mu_max_root does not match recomputation");
    if (!agree(hl_re, cert.hl_bound, tol)) return fail("hl_bound does not match recomputation");
    if (!agree(linf_re, cert.linf_l2, tol)) return fail("linf_l2 does not match recomputation");
    if (!agree(dil_re, cert.dilation_linf_l2, tol))
        return fail("dilation_linf_l2 does not match recomputation");

    if (cert.chosen_signs.size() != cert.position_order.size())
        return fail("chosen_signs and position_order lengths differ");
    if (cert.descent_roots.size() != cert.position_order.size() + 1)
        return fail("descent_roots length does not cover every position plus the root");
    for (int s : cert.chosen_signs)
        if (s != 1 && s != -1) return fail("chosen sign outside {+1,-1}");
    if (std::abs(cert.descent_roots.front() - cert.mu_max_root) > tol)
        return fail("first descent root differs from mu_max_root");
    for (std::size_t k = 1; k < cert.descent_roots.size(); ++k)
        if (cert.descent_roots[k] > cert.descent_roots[k - 1] + tol)
            return fail("descent_roots increase at step " + std::to_string(k));

    if (cert.guarantee_asserted) {
        if (cert.achieved_norm > cert.mu_max_root + tol)
            return fail("chain broken: achieved_norm > mu_max_root + tol");
        if (cert.mu_max_root > cert.hl_bound + tol)
            return fail("chain broken: mu_max_root > hl_bound + tol");
        if (cert.mu_max_root > 2.0 * cert.dilation_linf_l2 + tol)
            return fail("chain broken: mu_max_root > 2*dilation_linf_l2 + tol");
    }
    return CertifyResult{true, ""};
}

}  // namespace detail

// Recomputes every certified quantity for a symmetric signing from scratch
// and audits the certificate against them.
inline CertifyResult certify(const SymMatrix& a, const SymSignMatrix& s,
                             const SigningCertificate& cert, double tol = 1e-7) {
    if (a.dim() != s.dim()) throw dimension_error("certify: signing dimension mismatch");
    if (!(cert.sign_matrix == s.as_sign_matrix()))
        return detail::fail("certificate sign matrix differs from the signing");
    if (cert.guarantee_asserted && !a.zero_diagonal())
        return detail::fail("guarantee asserted for a matrix with nonzero diagonal");
    if (cert.position_order != support_positions(a))
        return detail::fail("position_order does not match the input support");
    if (cert.chosen_signs.size() != cert.position_order.size())
        return detail::fail("chosen_signs and position_order lengths differ");
    for (std::size_t k = 0; k < cert.position_order.size(); ++k) {
        const auto [i, j] = cert.position_order[k];
        if (s(i, j) != cert.chosen_signs[k])
            return detail::fail("chosen_signs disagree with the signing at step " +
                                std::to_string(k));
    }
    const double root_tol = detail::root_tol_for(tol);
    const double achieved_re = max_eigenvalue(hadamard(a, s));
    const double mu_re =
        detail::stable_largest_root(matching_polynomial(entrywise_square(a)), root_tol);
    const double hl_re = heilmann_lieb_bound(entrywise_square(a));
    const double linf_re = linf_l2_norm(a);
    return detail::certify_core(cert, tol, achieved_re, mu_re, hl_re, linf_re, linf_re);
}

// Rectangular-route audit: the guarantee always applies (dilations have zero
// diagonal).
inline CertifyResult certify(const DenseMatrix& a, const SignMatrix& s2,
                             const SigningCertificate& cert, double tol = 1e-7) {
    if (a.rows() != s2.rows() || a.cols() != s2.cols())
        throw dimension_error("certify: signing shape mismatch");
    if (!(cert.sign_matrix == s2))
        return detail::fail("certificate sign matrix differs from the signing");
    if (!cert.guarantee_asserted)
        return detail::fail("rectangular certificate must assert the guarantee");
    const double root_tol = detail::root_tol_for(tol);
    const SymMatrix ad = dilate(a);
    if (cert.position_order != support_positions(ad))
        return detail::fail("position_order does not match the dilation support");
    if (cert.chosen_signs.size() != cert.position_order.size())
        return detail::fail("chosen_signs and position_order lengths differ");
    const int m = a.rows();
    for (std::size_t k = 0; k < cert.position_order.size(); ++k) {
        const auto [i, j] = cert.position_order[k];
        if (s2(i, j - m) != cert.chosen_signs[k])
            return detail::fail("chosen_signs disagree with the signing at step " +
                                std::to_string(k));
    }
    const double achieved_re = operator_norm(hadamard(a, s2));
    const double mu_re =
        detail::stable_largest_root(matching_polynomial(entrywise_square(ad)), root_tol);
    const double hl_re = heilmann_lieb_bound(entrywise_square(ad));
    return detail::certify_core(cert, tol, achieved_re, mu_re, hl_re, linf_l2_norm(a),
                                dilation_bound(a));
}

}  // namespace matsign
