#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

#include "tessera/errors.hpp"

namespace tessera {

// Exact rational arithmetic on 64-bit numerator/denominator with 128-bit
// intermediates. Canonical form: gcd(|num|, den) = 1 and den > 0.
//
// The quantities this library manipulates (curvature sums, turn sums,
// isoperimetric ratios of finite patches) have denominators dividing the lcm
// of the face/vertex degrees involved and numerators bounded by walk lengths
// times that lcm, which keeps every reduced value far below 2^63. Overflow
// past the checked intermediates throws RationalOverflow instead of wrapping,
// so a hostile input produces an error, never a wrong answer. This is ~2
// orders of magnitude faster than allocation-backed bignum rationals, which
// matters for the exhaustive identity-checking suites.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
        if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        reduce();
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }
    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }

    // Largest integer <= value.
    std::int64_t floor() const {
        std::int64_t q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        // Knuth's gcd form keeps intermediates small before the final check.
        std::int64_t g = std::gcd(a.den_, b.den_);
        __int128 num = static_cast<__int128>(a.num_) * (b.den_ / g) +
                       static_cast<__int128>(b.num_) * (a.den_ / g);
        __int128 den = static_cast<__int128>(a.den_) * (b.den_ / g);
        return from_i128(num, den);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        std::int64_t g1 = std::gcd(std::abs(a.num_), b.den_);
        std::int64_t g2 = std::gcd(std::abs(b.num_), a.den_);
        __int128 num = static_cast<__int128>(a.num_ / g1) * (b.num_ / g2);
        __int128 den = static_cast<__int128>(a.den_ / g2) * (b.den_ / g1);
        return from_i128(num, den);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::invalid_argument("Rational: division by zero");
        Rational inv;
        inv.num_ = b.den_;
        inv.den_ = b.num_;
        if (inv.den_ < 0) { inv.num_ = -inv.num_; inv.den_ = -inv.den_; }
        return a * inv;  // b was reduced, so the inverse is too
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;  // canonical form
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
        __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    // Parses "n" or "n/d"; throws ParseError on malformed input.
    static Rational parse(const std::string& s) {
        try {
            auto slash = s.find('/');
            if (slash == std::string::npos) {
                size_t used = 0;
                std::int64_t n = std::stoll(s, &used);
                if (used != s.size()) throw ParseError("Rational: trailing characters in '" + s + "'");
                return Rational(n);
            }
            size_t used = 0;
            std::int64_t n = std::stoll(s.substr(0, slash), &used);
            if (used != slash) throw ParseError("Rational: bad numerator in '" + s + "'");
            std::string dpart = s.substr(slash + 1);
            std::int64_t d = std::stoll(dpart, &used);
            if (used != dpart.size()) throw ParseError("Rational: bad denominator in '" + s + "'");
            return Rational(n, d);
        } catch (const std::invalid_argument&) {
            throw ParseError("Rational: cannot parse '" + s + "'");
        } catch (const std::out_of_range&) {
            throw ParseError("Rational: out of range '" + s + "'");
        }
    }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;

    static __int128 abs128(__int128 v) { return v < 0 ? -v : v; }

    static __int128 gcd128(__int128 a, __int128 b) {
        a = abs128(a);
        b = abs128(b);
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static Rational from_i128(__int128 num, __int128 den) {
        if (den < 0) { num = -num; den = -den; }
        __int128 g = gcd128(num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
        constexpr __int128 lo = INT64_MIN, hi = INT64_MAX;
        if (num < lo || num > hi || den > hi)
            throw RationalOverflow("Rational: value exceeds 64-bit range after reduction");
        Rational r;
        r.num_ = static_cast<std::int64_t>(num);
        r.den_ = static_cast<std::int64_t>(den);
        return r;
    }

    void reduce() {
        std::int64_t g = std::gcd(std::abs(num_), den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }
};

// Number of the form a + b*sqrt(root) with rational a, b and integer root >= 0.
// Closed under addition/subtraction of rationals and same-root surds and under
// rational scaling; that is all the sharp-constant comparisons need. Sign is
// decided exactly via 128-bit cross-multiplied squaring with overflow checks,
// so "ratio >= sharp constant" is a machine-checked exact statement.
class QuadraticSurd {
public:
    QuadraticSurd(Rational a, Rational b, std::int64_t root) : a_(a), b_(b), root_(root) {
        if (root_ < 0) throw std::invalid_argument("QuadraticSurd: negative radicand");
        std::int64_t s = isqrt(root_);
        if (s * s == root_) {  // perfect square collapses to a rational
            a_ = a_ + b_ * Rational(s);
            b_ = Rational(0);
            root_ = 0;
        }
        if (b_.is_zero()) root_ = 0;
    }
    explicit QuadraticSurd(Rational a) : QuadraticSurd(a, Rational(0), 0) {}

    const Rational& rational_part() const { return a_; }
    const Rational& surd_coeff() const { return b_; }
    std::int64_t root() const { return root_; }

    double to_double() const { return a_.to_double() + b_.to_double() * std::sqrt(static_cast<double>(root_)); }

    friend QuadraticSurd operator+(const QuadraticSurd& x, const Rational& r) {
        return QuadraticSurd(x.a_ + r, x.b_, x.root_);
    }
    friend QuadraticSurd operator-(const QuadraticSurd& x, const Rational& r) {
        return QuadraticSurd(x.a_ - r, x.b_, x.root_);
    }
    friend QuadraticSurd operator*(const QuadraticSurd& x, const Rational& r) {
        return QuadraticSurd(x.a_ * r, x.b_ * r, x.root_);
    }
    friend QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y) {
        return QuadraticSurd(x.a_ + y.a_, x.b_ + y.b_, merged_root(x, y));
    }
    friend QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y) {
        return QuadraticSurd(x.a_ - y.a_, x.b_ - y.b_, merged_root(x, y));
    }
    QuadraticSurd operator-() const { return QuadraticSurd(-a_, -b_, root_); }

    // Exact sign of a + b*sqrt(root).
    int sign() const {
        if (b_.is_zero()) return a_.sign();
        // Clear denominators: sign(a + b*sqrt(r)) = sign(X + Y*sqrt(r)) with
        // X = a.num * b.den, Y = b.num * a.den (both denominators positive).
        __int128 x = checked_mul(a_.num(), b_.den());
        __int128 y = checked_mul(b_.num(), a_.den());
        if (x >= 0 && y >= 0) return (x == 0 && y == 0) ? 0 : 1;
        if (x <= 0 && y <= 0) return (x == 0 && y == 0) ? 0 : -1;
        // Mixed signs: compare X^2 against Y^2 * r.
        __int128 x2 = checked_sq(x);
        __int128 y2r = checked_mul128(checked_sq(y), root_);
        if (x2 == y2r) return 0;
        return x2 > y2r ? (x > 0 ? 1 : -1) : (y > 0 ? 1 : -1);
    }

    bool operator<(const Rational& r) const { return (*this - r).sign() < 0; }
    bool operator<=(const Rational& r) const { return (*this - r).sign() <= 0; }
    bool operator>(const Rational& r) const { return (*this - r).sign() > 0; }
    bool operator>=(const Rational& r) const { return (*this - r).sign() >= 0; }

private:
    Rational a_, b_;
    std::int64_t root_;

    static std::int64_t merged_root(const QuadraticSurd& x, const QuadraticSurd& y) {
        if (x.root_ == 0) return y.root_;
        if (y.root_ == 0) return x.root_;
        if (x.root_ != y.root_)
            throw std::invalid_argument("QuadraticSurd: mixing distinct radicands");
        return x.root_;
    }

    static std::int64_t isqrt(std::int64_t v) {
        if (v < 2) return v;
        auto s = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
        while (s > 0 && s * s > v) --s;
        while ((s + 1) * (s + 1) <= v) ++s;
        return s;
    }

    static __int128 checked_mul(std::int64_t a, std::int64_t b) {
        return static_cast<__int128>(a) * b;  // always fits in 128 bits
    }
    static __int128 checked_sq(__int128 v) {
        __int128 out;
        if (__builtin_mul_overflow(v, v, &out))
            throw RationalOverflow("QuadraticSurd: square exceeds 128-bit range");
        return out;
    }
    static __int128 checked_mul128(__int128 a, std::int64_t b) {
        __int128 out;
        if (__builtin_mul_overflow(a, static_cast<__int128>(b), &out))
            throw RationalOverflow("QuadraticSurd: product exceeds 128-bit range");
        return out;
    }
};

}  // namespace tessera
