#include "relpos/rational.hpp"

#include <limits>

namespace relpos {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t narrow(__int128 value) {
    if (value > std::numeric_limits<std::int64_t>::max() ||
        value < std::numeric_limits<std::int64_t>::min())
        throw ArithmeticOverflow("rational arithmetic exceeded 64-bit range");
    return static_cast<std::int64_t>(value);
}

}  // namespace

Rational Rational::make_reduced(__int128 num, __int128 den) {
    if (den == 0) throw BadInput("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    __int128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    Rational out;
    out.num_ = narrow(num);
    out.den_ = narrow(den);
    return out;
}

Rational::Rational(std::int64_t num, std::int64_t den) {
    *this = make_reduced(num, den);
}

Rational Rational::operator-() const {
    Rational out;
    out.num_ = narrow(-static_cast<__int128>(num_));
    out.den_ = den_;
    return out;
}

Rational Rational::operator+(const Rational& rhs) const {
    return make_reduced(static_cast<__int128>(num_) * rhs.den_ +
                            static_cast<__int128>(rhs.num_) * den_,
                        static_cast<__int128>(den_) * rhs.den_);
}

Rational Rational::operator-(const Rational& rhs) const {
    return make_reduced(static_cast<__int128>(num_) * rhs.den_ -
                            static_cast<__int128>(rhs.num_) * den_,
                        static_cast<__int128>(den_) * rhs.den_);
}

Rational Rational::operator*(const Rational& rhs) const {
    return make_reduced(static_cast<__int128>(num_) * rhs.num_,
                        static_cast<__int128>(den_) * rhs.den_);
}

Rational Rational::operator/(const Rational& rhs) const {
    if (rhs.num_ == 0) throw BadInput("division by zero rational");
    return make_reduced(static_cast<__int128>(num_) * rhs.den_,
                        static_cast<__int128>(den_) * rhs.num_);
}

bool Rational::operator<(const Rational& rhs) const {
    return static_cast<__int128>(num_) * rhs.den_ < static_cast<__int128>(rhs.num_) * den_;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace relpos
