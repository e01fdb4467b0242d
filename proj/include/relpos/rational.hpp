#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "relpos/errors.hpp"

namespace relpos {

// Exact rational over int64 with __int128 intermediates. Always reduced,
// denominator > 0. Overflow past int64 after reduction throws
// ArithmeticOverflow; the quantities in this project are desk scale, so
// hitting it indicates a usage bug rather than a precision need.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit by design
    Rational(std::int64_t num, std::int64_t den);

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }
    bool is_integer() const noexcept { return den_ == 1; }
    int sign() const noexcept { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    Rational operator-() const;
    Rational operator+(const Rational& rhs) const;
    Rational operator-(const Rational& rhs) const;
    Rational operator*(const Rational& rhs) const;
    Rational operator/(const Rational& rhs) const;  // throws BadInput on zero divisor

    Rational& operator+=(const Rational& rhs) { return *this = *this + rhs; }
    Rational& operator-=(const Rational& rhs) { return *this = *this - rhs; }
    Rational& operator*=(const Rational& rhs) { return *this = *this * rhs; }
    Rational& operator/=(const Rational& rhs) { return *this = *this / rhs; }

    friend bool operator==(const Rational&, const Rational&) = default;
    bool operator<(const Rational& rhs) const;
    bool operator<=(const Rational& rhs) const { return *this == rhs || *this < rhs; }
    bool operator>(const Rational& rhs) const { return rhs < *this; }
    bool operator>=(const Rational& rhs) const { return rhs <= *this; }

    double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string str() const;

private:
    static Rational make_reduced(__int128 num, __int128 den);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace relpos
