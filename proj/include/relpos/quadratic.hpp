#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "relpos/rational.hpp"

namespace relpos {

// Exact element x + y*sqrt(D) of a real quadratic field. D is squarefree
// and > 1 whenever y != 0; rationals are normalized to y = 0, D = 0, so
// equality is plain field comparison. Mixing two distinct irrational
// discriminants throws FieldMismatch.
class QuadraticNumber {
public:
    QuadraticNumber() = default;
    QuadraticNumber(Rational value) : x_(std::move(value)) {}  // NOLINT: implicit by design
    QuadraticNumber(std::int64_t value) : x_(value) {}         // NOLINT: implicit by design
    QuadraticNumber(Rational x, Rational y, std::int64_t d);   // normalizes

    const Rational& rational_part() const noexcept { return x_; }
    const Rational& surd_coeff() const noexcept { return y_; }
    std::int64_t discriminant() const noexcept { return d_; }

    bool is_rational() const noexcept { return y_.is_zero(); }
    // Only valid for rationals; throws FieldMismatch otherwise.
    Rational as_rational() const;

    bool is_zero() const noexcept { return x_.is_zero() && y_.is_zero(); }

    QuadraticNumber conjugate() const { return QuadraticNumber(x_, -y_, d_); }
    // x^2 - y^2 D, a rational.
    Rational norm() const { return x_ * x_ - y_ * y_ * Rational(d_); }

    QuadraticNumber operator-() const { return QuadraticNumber(-x_, -y_, d_); }
    QuadraticNumber operator+(const QuadraticNumber& rhs) const;
    QuadraticNumber operator-(const QuadraticNumber& rhs) const;
    QuadraticNumber operator*(const QuadraticNumber& rhs) const;
    QuadraticNumber operator/(const QuadraticNumber& rhs) const;  // throws BadInput on zero

    friend bool operator==(const QuadraticNumber&, const QuadraticNumber&) = default;

    int sign() const;  // exact
    bool operator<(const QuadraticNumber& rhs) const { return (*this - rhs).sign() < 0; }
    bool operator>(const QuadraticNumber& rhs) const { return (*this - rhs).sign() > 0; }

    double to_double() const;
    std::string str() const;

    // sqrt of a nonnegative rational, with square factors extracted from
    // the discriminant; exact in all cases.
    static QuadraticNumber sqrt_of(const Rational& value);

private:
    static std::int64_t common_field(const QuadraticNumber& lhs, const QuadraticNumber& rhs);

    Rational x_;
    Rational y_;
    std::int64_t d_ = 0;
};

// sqrt of s inside the field of s itself, when it exists there (covers
// rationals and perfect squares of quadratic elements).
std::optional<QuadraticNumber> sqrt_in_field(const QuadraticNumber& s);

// Extended real: a quadratic number or a signed infinity tag.
class ExtendedQuad {
public:
    enum class Kind { finite, plus_infinity, minus_infinity };

    ExtendedQuad(QuadraticNumber value) : kind_(Kind::finite), value_(std::move(value)) {}  // NOLINT
    static ExtendedQuad plus_infinity() { return ExtendedQuad(Kind::plus_infinity); }
    static ExtendedQuad minus_infinity() { return ExtendedQuad(Kind::minus_infinity); }

    Kind kind() const noexcept { return kind_; }
    bool finite() const noexcept { return kind_ == Kind::finite; }
    const QuadraticNumber& value() const { return value_; }

    std::string str() const;

private:
    explicit ExtendedQuad(Kind kind) : kind_(kind) {}
    Kind kind_;
    QuadraticNumber value_;
};

}  // namespace relpos
