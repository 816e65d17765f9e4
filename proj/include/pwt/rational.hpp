#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "pwt/bigint.hpp"

namespace pwt {

/// Exact rational in canonical form: denominator > 0, gcd(|num|, den) = 1,
/// zero is 0/1. All arithmetic is exact; equality is structural.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) { reduce(); }
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

    // "p/q" or "p"; decimal/scientific notation is rejected.
    static Rational from_string(std::string_view s);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == BigInt(1); }

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const Rational& o) const {
        return num_ * o.den_ <=> o.num_ * den_;
    }

    BigInt floor() const;
    Rational frac() const;  // this - floor(this), in [0, 1)
    Rational abs() const { return num_.sign() < 0 ? -*this : *this; }

    std::string to_string() const;  // always "p/q"
    double to_double() const { return num_.to_double() / den_.to_double(); }

private:
    BigInt num_;
    BigInt den_;
    void reduce();
};

inline Rational min(const Rational& a, const Rational& b) { return a <= b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a >= b ? a : b; }

}  // namespace pwt
