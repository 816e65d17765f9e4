#include "pwt/rational.hpp"

#include "pwt/errors.hpp"

namespace pwt {

void Rational::reduce() {
    if (den_.is_zero()) throw ValidationError("Rational: zero denominator");
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (g != BigInt(1)) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

Rational Rational::from_string(std::string_view s) {
    if (s.find_first_of(".eE") != std::string_view::npos)
        throw ValidationError("Rational: decimal notation rejected, use \"p/q\": '" +
                              std::string(s) + "'");
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return {BigInt::from_string(s), BigInt(1)};
    if (s.find('/', slash + 1) != std::string_view::npos)
        throw ValidationError("Rational: multiple '/' in '" + std::string(s) + "'");
    return {BigInt::from_string(s.substr(0, slash)), BigInt::from_string(s.substr(slash + 1))};
}

Rational Rational::operator-() const {
    Rational out;
    out.num_ = -num_;
    out.den_ = den_;
    return out;
}

Rational operator+(const Rational& a, const Rational& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

Rational operator-(const Rational& a, const Rational& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

Rational operator*(const Rational& a, const Rational& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DomainError("Rational: division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
}

BigInt Rational::floor() const {
    BigInt q, r;
    BigInt::divrem(num_, den_, q, r);
    if (r.sign() < 0) q = q - BigInt(1);
    return q;
}

Rational Rational::frac() const {
    return *this - Rational(floor(), BigInt(1));
}

std::string Rational::to_string() const {
    return num_.to_string() + "/" + den_.to_string();
}

}  // namespace pwt
