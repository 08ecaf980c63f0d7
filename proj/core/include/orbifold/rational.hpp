#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace orbifold {

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer addition overflow");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("integer subtraction overflow");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer multiplication overflow");
    return r;
}

inline std::int64_t checked_negate(std::int64_t a) {
    return checked_sub(0, a);
}

// gcd on magnitudes, safe for all int64 values except INT64_MIN (rejected
// upstream by the checked arithmetic).
inline std::int64_t gcd_magnitude(std::int64_t a, std::int64_t b) {
    std::uint64_t ua = a < 0 ? 0ull - static_cast<std::uint64_t>(a) : static_cast<std::uint64_t>(a);
    std::uint64_t ub = b < 0 ? 0ull - static_cast<std::uint64_t>(b) : static_cast<std::uint64_t>(b);
    return static_cast<std::int64_t>(std::gcd(ua, ub));
}

} // namespace detail

/// Exact rational number over checked 64-bit integers. Always stored
/// reduced with a positive denominator, so two equal values compare equal
/// field-wise. Overflow throws std::overflow_error instead of wrapping.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value) : num_(value), den_(1) {}

    Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den_ == 0)
            throw std::invalid_argument("rational with zero denominator");
        if (den_ < 0) {
            num_ = detail::checked_negate(num_);
            den_ = detail::checked_negate(den_);
        }
        reduce();
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    /// The value as an integer; the caller asserts integrality.
    std::int64_t as_integer() const {
        if (den_ != 1)
            throw std::logic_error("rational " + str() + " is not an integer");
        return num_;
    }

    std::int64_t floor() const {
        std::int64_t q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }

    /// Fractional part in [0, 1).
    Rational frac() const { return *this - Rational(floor()); }

    Rational operator-() const { return Rational(detail::checked_negate(num_), den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        std::int64_t g = detail::gcd_magnitude(a.den_, b.den_);
        std::int64_t bd = b.den_ / g;
        std::int64_t num = detail::checked_add(detail::checked_mul(a.num_, bd),
                                               detail::checked_mul(b.num_, a.den_ / g));
        return Rational(num, detail::checked_mul(a.den_, bd));
    }

    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

    friend Rational operator*(const Rational& a, const Rational& b) {
        std::int64_t g1 = detail::gcd_magnitude(a.num_, b.den_);
        std::int64_t g2 = detail::gcd_magnitude(b.num_, a.den_);
        return Rational(detail::checked_mul(a.num_ / g1, b.num_ / g2),
                        detail::checked_mul(a.den_ / g2, b.den_ / g1));
    }

    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero())
            throw std::invalid_argument("rational division by zero");
        return a * Rational(b.den_, b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) = default;

    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return detail::checked_mul(a.num_, b.den_) <=> detail::checked_mul(b.num_, a.den_);
    }

    /// "p/q" with the fraction reduced; integers render as "p".
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    void reduce() {
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        std::int64_t g = detail::gcd_magnitude(num_, den_);
        num_ /= g;
        den_ /= g;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

} // namespace orbifold
