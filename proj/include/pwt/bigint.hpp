#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pwt {

/// Arbitrary-precision signed integer, sign/magnitude over 32-bit limbs
/// (little-endian, no trailing zero limbs; zero is sign 0 with no limbs).
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);

    // Decimal digits with optional leading '-'. Throws ValidationError.
    static BigInt from_string(std::string_view s);

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }

    BigInt operator-() const;
    BigInt abs() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);

    // Truncated division: q = a/b toward zero, r = a - q*b (r carries a's sign).
    // Throws DomainError on b = 0.
    static void divrem(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);

    static BigInt gcd(const BigInt& a, const BigInt& b);  // nonnegative

    bool operator==(const BigInt& o) const { return sign_ == o.sign_ && limbs_ == o.limbs_; }
    std::strong_ordering operator<=>(const BigInt& o) const;

    std::string to_string() const;
    bool fits_ll() const;
    long long to_ll() const;  // throws DomainError if out of range
    double to_double() const;

private:
    int sign_ = 0;
    std::vector<std::uint32_t> limbs_;

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // Requires |a| >= |b|.
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static void divrem_mag(const std::vector<std::uint32_t>& u, const std::vector<std::uint32_t>& v,
                           std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r);
};

}  // namespace pwt
