// Real-coefficient univariate polynomials with Sturm-sequence root counting,
// largest-root extraction by bisection, and interlacing diagnostics.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "matsign/errors.hpp"

namespace matsign {

// Coefficients ascending by degree; the representation is normalized so the
// stored leading coefficient is nonzero (trailing entries below
// 1e-14 * max|coeff| are trimmed). The zero polynomial is stored as {0}.
class Polynomial {
  public:
    Polynomial() : c_{0.0} {}

    explicit Polynomial(std::vector<double> ascending) : c_(std::move(ascending)) {
        if (c_.empty()) c_ = {0.0};
        for (double v : c_)
            if (!std::isfinite(v)) throw std::domain_error("Polynomial: non-finite coefficient");
        normalize();
    }

    Polynomial(std::initializer_list<double> ascending)
        : Polynomial(std::vector<double>(ascending)) {}

    static Polynomial constant(double c) { return Polynomial{c}; }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.size() == 1 && c_[0] == 0.0; }
    bool is_constant() const { return c_.size() == 1; }

    double leading() const { return c_.back(); }
    bool is_monic(double tol = 1e-9) const { return std::abs(c_.back() - 1.0) <= tol; }

    // Coefficient of x^k; zero beyond the degree.
    double operator[](int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : 0.0;
    }

    const std::vector<double>& coeffs() const { return c_; }

    double evaluate(double x) const {
        double r = 0.0;
        for (std::size_t k = c_.size(); k-- > 0;) r = r * x + c_[k];
        return r;
    }

    Polynomial derivative() const {
        if (is_constant()) return Polynomial{};
        std::vector<double> d(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<double>(k);
        return Polynomial(std::move(d));
    }

    double max_abs_coeff() const {
        double m = 0.0;
        for (double v : c_) m = std::max(m, std::abs(v));
        return m;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<double> r(std::max(a.c_.size(), b.c_.size()), 0.0);
        for (std::size_t k = 0; k < r.size(); ++k) r[k] = a[static_cast<int>(k)] + b[static_cast<int>(k)];
        return Polynomial(std::move(r));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<double> r(std::max(a.c_.size(), b.c_.size()), 0.0);
        for (std::size_t k = 0; k < r.size(); ++k) r[k] = a[static_cast<int>(k)] - b[static_cast<int>(k)];
        return Polynomial(std::move(r));
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial{};
        std::vector<double> r(a.c_.size() + b.c_.size() - 1, 0.0);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(r));
    }

    friend Polynomial operator*(double s, const Polynomial& p) {
        std::vector<double> r(p.c_);
        for (double& v : r) v *= s;
        return Polynomial(std::move(r));
    }

  private:
    void normalize() {
        double m = max_abs_coeff();
        if (m == 0.0) {
            c_ = {0.0};
            return;
        }
        const double thr = 1e-14 * m;
        while (c_.size() > 1 && std::abs(c_.back()) <= thr) c_.pop_back();
    }

    std::vector<double> c_;
};

inline double evaluate(const Polynomial& p, double x) { return p.evaluate(x); }

namespace detail {

// Remainder of num / den; quotient optionally returned. den must be nonzero.
inline Polynomial poly_rem(const Polynomial& num, const Polynomial& den, Polynomial* quot = nullptr) {
    if (den.is_zero()) throw std::domain_error("poly_rem: division by zero polynomial");
    std::vector<double> r(num.coeffs());
    const int dd = den.degree();
    const double lead = den.leading();
    std::vector<double> q(std::max<std::size_t>(1, r.size() > static_cast<std::size_t>(dd)
                                                        ? r.size() - dd
                                                        : 1),
                          0.0);
    for (int k = static_cast<int>(r.size()) - 1; k >= dd; --k) {
        double f = r[k] / lead;
        if (f == 0.0) continue;
        q[k - dd] = f;
        for (int j = 0; j <= dd; ++j) r[k - dd + j] -= f * den[j];
        r[k] = 0.0;
    }
    if (quot) *quot = Polynomial(std::move(q));
    r.resize(std::max<std::size_t>(1, dd));
    return Polynomial(std::move(r));
}

// Zero out coefficients below rel_tol * max|coeff|; rescale to unit max.
inline Polynomial cleanup_and_scale(const Polynomial& p, double rel_tol) {
    double m = p.max_abs_coeff();
    if (m == 0.0) return Polynomial{};
    std::vector<double> c(p.coeffs());
    for (double& v : c)
        if (std::abs(v) < rel_tol * m) v = 0.0;
    for (double& v : c) v /= m;
    return Polynomial(std::move(c));
}

// Sturm chain of p: p, p', then negated remainders, each rescaled to unit
// max-coefficient (positive scaling preserves sign variation counts). The
// chain stops early when a remainder vanishes at the cleanup threshold, which
// handles polynomials with multiple roots (counts are then of distinct roots).
inline std::vector<Polynomial> sturm_chain(const Polynomial& p, double rel_tol = 1e-12) {
    std::vector<Polynomial> chain;
    Polynomial a = cleanup_and_scale(p, 0.0);
    if (a.is_zero()) throw std::domain_error("sturm_chain: zero polynomial");
    chain.push_back(a);
    if (a.is_constant()) return chain;
    Polynomial b = cleanup_and_scale(a.derivative(), 0.0);
    chain.push_back(b);
    while (!chain.back().is_constant()) {
        const Polynomial& prev = chain[chain.size() - 2];
        const Polynomial& cur = chain.back();
        Polynomial r = poly_rem(prev, cur);
        if (r.max_abs_coeff() <= rel_tol) break;
        r = cleanup_and_scale(-1.0 * r, rel_tol);
        chain.push_back(std::move(r));
        if (chain.size() > static_cast<std::size_t>(p.degree()) + 2)
            throw std::domain_error("sturm_chain: sequence failed to terminate");
    }
    return chain;
}

inline int sign_variations(const std::vector<Polynomial>& chain, double x) {
    int count = 0;
    int last = 0;
    for (const Polynomial& p : chain) {
        double v = p.evaluate(x);
        int s = (v > 0.0) - (v < 0.0);
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

}  // namespace detail

// Strict upper bound on the modulus of every root: 1 + max |c_i / c_deg|.
inline double cauchy_root_bound(const Polynomial& p) {
    if (p.is_zero() || p.is_constant())
        throw std::domain_error("cauchy_root_bound: constant polynomial");
    double m = 0.0;
    for (int k = 0; k < p.degree(); ++k) m = std::max(m, std::abs(p[k]));
    return 1.0 + m / std::abs(p.leading());
}

// Number of distinct real roots in (a, b] by Sturm sign-variation difference.
// Endpoints landing exactly on a root are nudged outward.
inline int real_root_count(const Polynomial& p, double a, double b) {
    if (p.is_zero()) throw std::domain_error("real_root_count: zero polynomial");
    if (!(a < b)) throw std::domain_error("real_root_count: requires a < b");
    if (p.is_constant()) return 0;
    auto chain = detail::sturm_chain(p);
    auto nudge = [&](double x, double dir) {
        for (int tries = 0; tries < 8 && p.evaluate(x) == 0.0; ++tries)
            x += dir * 1e-12 * (1.0 + std::abs(x));
        return x;
    };
    a = nudge(a, -1.0);
    b = nudge(b, +1.0);
    return detail::sign_variations(chain, a) - detail::sign_variations(chain, b);
}

// Largest real root to absolute tolerance tol: bracket by the Cauchy bound,
// then bisect on the Sturm count of roots above the midpoint.
inline double largest_real_root(const Polynomial& p, double tol) {
    if (!(tol > 0.0)) throw std::domain_error("largest_real_root: tol must be positive");
    if (p.is_zero() || p.is_constant())
        throw std::domain_error("largest_real_root: constant polynomial has no roots");
    const double bound = cauchy_root_bound(p);
    auto chain = detail::sturm_chain(p);
    double lo = -bound, hi = bound;
    int v_hi = detail::sign_variations(chain, hi);
    if (detail::sign_variations(chain, lo) - v_hi < 1)
        throw std::domain_error("largest_real_root: no real root within the Cauchy bound");
    for (int it = 0; it < 200 && (hi - lo) > tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        const int v_mid = detail::sign_variations(chain, mid);
        if (v_mid - v_hi >= 1) {
            lo = mid;  // largest root stays in (mid, hi]
        } else {
            hi = mid;
            v_hi = v_mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Square-free part p / gcd(p, p'), with the Euclidean gcd cut off at a
// relative coefficient threshold (absorbs floating-point noise on char polys).
inline Polynomial square_free_part(const Polynomial& p, double rel_tol = 1e-12) {
    if (p.is_zero()) throw std::domain_error("square_free_part: zero polynomial");
    const Polynomial p0 = detail::cleanup_and_scale(p, 0.0);
    if (p0.degree() < 2) return p0;
    Polynomial a = p0;
    Polynomial b = detail::cleanup_and_scale(a.derivative(), 0.0);
    while (!b.is_zero() && !b.is_constant()) {
        Polynomial r = detail::poly_rem(a, b);
        if (r.max_abs_coeff() <= rel_tol) {
            // b is the (approximate) gcd of p and p'
            Polynomial q;
            detail::poly_rem(p0, b, &q);
            return detail::cleanup_and_scale(q, rel_tol);
        }
        a = b;
        b = detail::cleanup_and_scale(r, rel_tol);
    }
    // gcd is a constant: p already square-free
    return p0;
}

// True iff the square-free part has as many distinct real roots as its
// degree. tol governs the square-free splitting threshold.
inline bool is_real_rooted(const Polynomial& p, double tol = 1e-12) {
    if (p.is_zero()) throw std::domain_error("is_real_rooted: zero polynomial");
    if (p.is_constant()) return true;
    Polynomial q = square_free_part(p, tol);
    if (q.is_constant()) return true;
    const double bound = cauchy_root_bound(q);
    return real_root_count(q, -bound, bound) == q.degree();
}

// lambda*p + (1-lambda)*q for monic p, q of equal degree.
inline Polynomial convex_combination(const Polynomial& p, const Polynomial& q, double lambda) {
    if (p.degree() != q.degree())
        throw std::domain_error("convex_combination: degree mismatch");
    if (!p.is_monic() || !q.is_monic())
        throw std::domain_error("convex_combination: operands must be monic");
    if (!(lambda >= 0.0 && lambda <= 1.0))
        throw std::domain_error("convex_combination: lambda outside [0,1]");
    std::vector<double> r(static_cast<std::size_t>(p.degree()) + 1);
    for (int k = 0; k <= p.degree(); ++k) r[k] = lambda * p[k] + (1.0 - lambda) * q[k];
    r.back() = 1.0;
    return Polynomial(std::move(r));
}

// Sampled check of the convex-combination characterization of a common
// interlacing: true iff lambda*p + (1-lambda)*q is real-rooted for lambda in
// {0, 1/samples, ..., 1}. A necessary check, not a proof.
inline bool common_interlacing_witness(const Polynomial& p, const Polynomial& q, int samples) {
    if (samples < 1) throw std::domain_error("common_interlacing_witness: samples must be >= 1");
    for (int k = 0; k <= samples; ++k) {
        const double lambda = static_cast<double>(k) / samples;
        if (!is_real_rooted(convex_combination(p, q, lambda))) return false;
    }
    return true;
}

}  // namespace matsign
