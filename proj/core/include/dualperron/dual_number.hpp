#pragma once

#include <cmath>
#include <compare>
#include <iosfwd>

#include "dualperron/errors.hpp"

namespace dualperron {

/// A real dual number a = a_s + a_d*eps with eps^2 = 0.
///
/// The standard part a_s and dual part a_d are finite doubles; NaN and
/// infinity are rejected at construction so that the lexicographic total
/// order below stays lawful. A dual number is *appreciable* when its
/// standard part is nonzero.
class DualNumber {
public:
    constexpr DualNumber() = default;

    DualNumber(double s, double d = 0.0) : s_(s), d_(d) {
        if (!std::isfinite(s_) || !std::isfinite(d_))
            throw OverflowError("dual number has non-finite part");
    }

    double s() const { return s_; }
    double d() const { return d_; }

    bool appreciable() const { return s_ != 0.0; }

    DualNumber operator-() const { return DualNumber(-s_, -d_); }

    friend DualNumber operator+(const DualNumber& a, const DualNumber& b) {
        return DualNumber(a.s_ + b.s_, a.d_ + b.d_);
    }

    friend DualNumber operator-(const DualNumber& a, const DualNumber& b) {
        return DualNumber(a.s_ - b.s_, a.d_ - b.d_);
    }

    // (a_s + a_d e)(b_s + b_d e) = a_s b_s + (a_s b_d + a_d b_s) e
    friend DualNumber operator*(const DualNumber& a, const DualNumber& b) {
        return DualNumber(a.s_ * b.s_, a.s_ * b.d_ + a.d_ * b.s_);
    }

    friend DualNumber operator/(const DualNumber& a, const DualNumber& b);

    /// Lexicographic total order: standard parts first, dual parts break ties.
    friend std::strong_ordering operator<=>(const DualNumber& a, const DualNumber& b) {
        if (a.s_ < b.s_) return std::strong_ordering::less;
        if (a.s_ > b.s_) return std::strong_ordering::greater;
        if (a.d_ < b.d_) return std::strong_ordering::less;
        if (a.d_ > b.d_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend bool operator==(const DualNumber& a, const DualNumber& b) {
        return a.s_ == b.s_ && a.d_ == b.d_;
    }

private:
    double s_ = 0.0;
    double d_ = 0.0;
};

/// Quotient of two dual numbers plus a uniqueness marker.
///
/// Division of a pure dual number by a pure dual number determines only the
/// standard part of the quotient; the dual part is an arbitrary constant,
/// fixed here to zero. `unique` is false exactly in that case so callers can
/// reject such quotients where uniqueness matters.
struct DivisionResult {
    DualNumber value;
    bool unique = true;
};

/// Divide a by b.
///
/// Defined when b is appreciable, or when both standard parts vanish and
/// b_d != 0 (the non-unique pure dual branch). Anything else throws
/// DivisionError.
inline DivisionResult divide(const DualNumber& a, const DualNumber& b) {
    if (b.s() != 0.0) {
        const double qs = a.s() / b.s();
        const double qd = a.d() / b.s() - a.s() * b.d() / (b.s() * b.s());
        return {DualNumber(qs, qd), true};
    }
    if (a.s() == 0.0 && b.d() != 0.0)
        return {DualNumber(a.d() / b.d(), 0.0), false};
    throw DivisionError("dual division undefined: divisor standard part is zero");
}

inline DualNumber operator/(const DualNumber& a, const DualNumber& b) {
    return divide(a, b).value;
}

/// Magnitude |a|: (|a_s|, sgn(a_s) a_d) when appreciable, else (|a_d|, 0).
/// Always a nonnegative dual number.
inline DualNumber magnitude(const DualNumber& a) {
    if (a.s() != 0.0) {
        const double sign = a.s() > 0.0 ? 1.0 : -1.0;
        return DualNumber(std::abs(a.s()), sign * a.d());
    }
    return DualNumber(std::abs(a.d()), 0.0);
}

/// Conjugation is the identity on real dual numbers.
inline DualNumber conjugate(const DualNumber& a) { return a; }

enum class Ordering { less, equal, greater };

/// Three-way comparison under the lexicographic dual order.
inline Ordering compare(const DualNumber& a, const DualNumber& b) {
    const auto c = a <=> b;
    if (c == std::strong_ordering::less) return Ordering::less;
    if (c == std::strong_ordering::greater) return Ordering::greater;
    return Ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const DualNumber& a);

} // namespace dualperron
