#include "relpos/quadratic.hpp"

#include <cmath>

namespace relpos {

namespace {

// value = square * squarefree. Trial division; fine for desk-scale inputs.
void split_square(std::int64_t value, std::int64_t& square_root, std::int64_t& squarefree) {
    square_root = 1;
    squarefree = 1;
    for (std::int64_t p = 2; p * p <= value; ++p) {
        if (value % p != 0) continue;
        int exp = 0;
        while (value % p == 0) {
            value /= p;
            ++exp;
        }
        for (int i = 0; i < exp / 2; ++i) square_root *= p;
        if (exp % 2 == 1) squarefree *= p;
    }
    squarefree *= value;  // leftover prime
}

std::optional<std::int64_t> integer_sqrt(std::int64_t value) {
    if (value < 0) return std::nullopt;
    auto root = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(value))));
    for (std::int64_t r = std::max<std::int64_t>(0, root - 2); r <= root + 2; ++r)
        if (r * r == value) return r;
    return std::nullopt;
}

// Exact sqrt of a nonnegative rational, when rational itself.
std::optional<Rational> rational_sqrt(const Rational& value) {
    if (value.sign() < 0) return std::nullopt;
    auto num = integer_sqrt(value.num());
    auto den = integer_sqrt(value.den());
    if (!num || !den) return std::nullopt;
    return Rational(*num, *den);
}

}  // namespace

QuadraticNumber::QuadraticNumber(Rational x, Rational y, std::int64_t d)
    : x_(std::move(x)), y_(std::move(y)), d_(d) {
    if (y_.is_zero()) {
        d_ = 0;
        return;
    }
    if (d_ <= 0) throw BadInput("discriminant must be a positive integer");
    std::int64_t root = 1;
    std::int64_t free_part = 1;
    split_square(d_, root, free_part);
    if (free_part == 1) {
        // Perfect square: collapse to a rational.
        x_ = x_ + y_ * Rational(root);
        y_ = Rational(0);
        d_ = 0;
        return;
    }
    y_ = y_ * Rational(root);
    d_ = free_part;
}

Rational QuadraticNumber::as_rational() const {
    if (!is_rational()) throw FieldMismatch("value " + str() + " is not rational");
    return x_;
}

std::int64_t QuadraticNumber::common_field(const QuadraticNumber& lhs, const QuadraticNumber& rhs) {
    if (lhs.d_ == 0) return rhs.d_;
    if (rhs.d_ == 0 || lhs.d_ == rhs.d_) return lhs.d_;
    throw FieldMismatch("cannot mix sqrt(" + std::to_string(lhs.d_) + ") with sqrt(" +
                        std::to_string(rhs.d_) + ")");
}

QuadraticNumber QuadraticNumber::operator+(const QuadraticNumber& rhs) const {
    std::int64_t d = common_field(*this, rhs);
    return QuadraticNumber(x_ + rhs.x_, y_ + rhs.y_, d == 0 ? 1 : d);
}

QuadraticNumber QuadraticNumber::operator-(const QuadraticNumber& rhs) const {
    std::int64_t d = common_field(*this, rhs);
    return QuadraticNumber(x_ - rhs.x_, y_ - rhs.y_, d == 0 ? 1 : d);
}

QuadraticNumber QuadraticNumber::operator*(const QuadraticNumber& rhs) const {
    std::int64_t d = common_field(*this, rhs);
    Rational dd(d);
    return QuadraticNumber(x_ * rhs.x_ + y_ * rhs.y_ * dd, x_ * rhs.y_ + y_ * rhs.x_,
                           d == 0 ? 1 : d);
}

QuadraticNumber QuadraticNumber::operator/(const QuadraticNumber& rhs) const {
    if (rhs.is_zero()) throw BadInput("division by zero");
    std::int64_t d = common_field(*this, rhs);
    Rational n = rhs.norm();
    QuadraticNumber numerator = *this * rhs.conjugate();
    return QuadraticNumber(numerator.x_ / n, numerator.y_ / n, d == 0 ? 1 : d);
}

int QuadraticNumber::sign() const {
    if (y_.is_zero()) return x_.sign();
    if (x_.is_zero()) return y_.sign();
    int sx = x_.sign();
    int sy = y_.sign();
    if (sx == sy) return sx;
    // Signs differ: compare x^2 against y^2 D exactly.
    Rational lhs = x_ * x_;
    Rational rhs = y_ * y_ * Rational(d_);
    if (lhs == rhs) return 0;  // cannot happen with squarefree d > 1
    return (lhs > rhs) ? sx : sy;
}

double QuadraticNumber::to_double() const {
    double out = x_.to_double();
    if (!y_.is_zero()) out += y_.to_double() * std::sqrt(static_cast<double>(d_));
    return out;
}

std::string QuadraticNumber::str() const {
    if (is_rational()) return x_.str();
    std::string out;
    if (!x_.is_zero()) out += x_.str() + " + ";
    out += y_.str() + "*sqrt(" + std::to_string(d_) + ")";
    return out;
}

QuadraticNumber QuadraticNumber::sqrt_of(const Rational& value) {
    if (value.sign() < 0) throw BadInput("square root of a negative rational");
    if (value.is_zero()) return QuadraticNumber(Rational(0));
    // sqrt(p/q) = sqrt(p q) / q; the constructor extracts square factors.
    return QuadraticNumber(Rational(0), Rational(1, value.den()), value.num() * value.den());
}

std::optional<QuadraticNumber> sqrt_in_field(const QuadraticNumber& s) {
    if (s.sign() < 0) return std::nullopt;
    if (s.is_rational()) {
        QuadraticNumber root = QuadraticNumber::sqrt_of(s.as_rational());
        return root;
    }
    // Want t = g + h sqrt(D) with t^2 = s: g^2 + h^2 D = x, 2 g h = y.
    // Then g^2 solves a quadratic with discriminant norm(s) = x^2 - y^2 D.
    auto norm_root = rational_sqrt(s.norm());
    if (!norm_root) return std::nullopt;
    for (int sign : {+1, -1}) {
        Rational g2 = (s.rational_part() + (sign > 0 ? *norm_root : -*norm_root)) / Rational(2);
        if (g2.sign() <= 0) continue;
        auto g = rational_sqrt(g2);
        if (!g || g->is_zero()) continue;
        Rational h = s.surd_coeff() / (Rational(2) * *g);
        QuadraticNumber candidate(*g, h, s.discriminant());
        if (candidate * candidate == s)
            return candidate.sign() >= 0 ? candidate : -candidate;
    }
    return std::nullopt;
}

std::string ExtendedQuad::str() const {
    switch (kind_) {
        case Kind::plus_infinity: return "+inf";
        case Kind::minus_infinity: return "-inf";
        case Kind::finite: return value_.str();
    }
    return "?";
}

}  // namespace relpos
