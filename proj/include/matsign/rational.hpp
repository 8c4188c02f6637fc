// Overflow-checked rational arithmetic on 64-bit integers. Backs the exact
// oracle path at tiny dimension; any overflow throws so callers can fall back
// to floating point instead of computing garbage.
#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace matsign {

struct rational_overflow : std::overflow_error {
    rational_overflow() : std::overflow_error("rational arithmetic overflow") {}
};

class Rational {
  public:
    Rational() = default;
    Rational(std::int64_t whole) : num_(whole) {}  // NOLINT: implicit by intent
    Rational(std::int64_t num, std::int64_t den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        *this = reduce(num, den);
    }

    std::int64_t numerator() const { return num_; }
    std::int64_t denominator() const { return den_; }
    bool is_zero() const { return num_ == 0; }

    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    // Exact conversion for entries v with 16v integral and |v| <= 1024; such
    // values round-trip through double without error.
    static bool is_small_dyadic(double v) {
        if (!std::isfinite(v) || std::abs(v) > 1024.0) return false;
        const double scaled = v * 16.0;
        return scaled == std::nearbyint(scaled);
    }

    static Rational from_small_dyadic(double v) {
        if (!is_small_dyadic(v))
            throw std::domain_error("Rational: value is not a small dyadic");
        return Rational(static_cast<std::int64_t>(v * 16.0), 16);
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        const __int128 n = i128(a.num_) * b.den_ + i128(b.num_) * a.den_;
        return reduce128(n, i128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        const __int128 n = i128(a.num_) * b.den_ - i128(b.num_) * a.den_;
        return reduce128(n, i128(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return reduce128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        return reduce128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

  private:
    static __int128 i128(std::int64_t v) { return static_cast<__int128>(v); }

    static unsigned __int128 uabs(__int128 v) {
        return v < 0 ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    }

    static Rational reduce128(__int128 num, __int128 den) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        unsigned __int128 a = uabs(num), b = static_cast<unsigned __int128>(den);
        while (b != 0) {
            const unsigned __int128 t = a % b;
            a = b;
            b = t;
        }
        if (a > 1) {
            num /= static_cast<__int128>(a);
            den /= static_cast<__int128>(a);
        }
        constexpr __int128 lo = static_cast<__int128>(INT64_MIN);
        constexpr __int128 hi = static_cast<__int128>(INT64_MAX);
        if (num < lo || num > hi || den > hi) throw rational_overflow();
        Rational r;
        r.num_ = static_cast<std::int64_t>(num);
        r.den_ = static_cast<std::int64_t>(den);
        return r;
    }

    static Rational reduce(std::int64_t num, std::int64_t den) {
        return reduce128(i128(num), i128(den));
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace matsign
