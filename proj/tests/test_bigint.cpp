#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <string>

#include "pwt/bigint.hpp"
#include "pwt/errors.hpp"
#include "pwt/rng.hpp"

using pwt::BigInt;

namespace {

std::string i128_to_string(__int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 m = neg ? -static_cast<unsigned __int128>(v) : v;
    std::string s;
    while (m) {
        s.push_back(static_cast<char>('0' + static_cast<int>(m % 10)));
        m /= 10;
    }
    if (neg) s.push_back('-');
    return {s.rbegin(), s.rend()};
}

BigInt from_i128(__int128 v) { return BigInt::from_string(i128_to_string(v)); }

}  // namespace

TEST_CASE("small construction and printing") {
    CHECK(BigInt(0).to_string() == "0");
    CHECK(BigInt(-1).to_string() == "-1");
    CHECK(BigInt(1234567890123456789ll).to_string() == "1234567890123456789");
    CHECK(BigInt::from_string("-000123").to_string() == "-123");
    CHECK(BigInt::from_string("-0").to_string() == "0");
    CHECK_THROWS_AS(BigInt::from_string(""), pwt::ValidationError);
    CHECK_THROWS_AS(BigInt::from_string("12x"), pwt::ValidationError);
    CHECK_THROWS_AS(BigInt::from_string("-"), pwt::ValidationError);
}

TEST_CASE("arithmetic agrees with __int128 on random operands") {
    pwt::Rng rng(42);
    for (int trial = 0; trial < 20000; ++trial) {
        // Mix magnitudes so both 1-limb and multi-limb paths are hit.
        int bits_a = 1 + static_cast<int>(rng.below(62));
        int bits_b = 1 + static_cast<int>(rng.below(62));
        long long a = static_cast<long long>(rng.next_u64() >> (64 - bits_a));
        long long b = static_cast<long long>(rng.next_u64() >> (64 - bits_b));
        if (rng.below(2)) a = -a;
        if (rng.below(2)) b = -b;
        BigInt A(a), B(b);
        CHECK(A + B == from_i128(static_cast<__int128>(a) + b));
        CHECK(A - B == from_i128(static_cast<__int128>(a) - b));
        CHECK(A * B == from_i128(static_cast<__int128>(a) * b));
        if (b != 0) {
            BigInt q, r;
            BigInt::divrem(A, B, q, r);
            CHECK(q == BigInt(a / b));
            CHECK(r == BigInt(a % b));
        }
        CHECK((A <=> B) == (a <=> b));
    }
}

TEST_CASE("multi-limb division round-trips") {
    pwt::Rng rng(7);
    for (int trial = 0; trial < 5000; ++trial) {
        __int128 a = static_cast<__int128>(rng.next_u64()) * static_cast<__int128>(rng.next_u64() >> 8);
        __int128 b = static_cast<__int128>(rng.next_u64() >> (rng.below(40)));
        if (b == 0) continue;
        if (rng.below(2)) a = -a;
        if (rng.below(2)) b = -b;
        BigInt A = from_i128(a), B = from_i128(b);
        BigInt q, r;
        BigInt::divrem(A, B, q, r);
        CHECK(q * B + r == A);
        CHECK(r.abs() < B.abs());
        // Remainder carries the dividend's sign.
        if (!r.is_zero()) CHECK(r.sign() == A.sign());
    }
}

TEST_CASE("division stress near limb boundaries") {
    // Divisors with high limb close to 2^32 exercise the qhat correction.
    BigInt a = BigInt::from_string("340282366920938463463374607431768211455");  // 2^128-1
    BigInt b = BigInt::from_string("18446744073709551615");                    // 2^64-1
    BigInt q, r;
    BigInt::divrem(a, b, q, r);
    CHECK(q.to_string() == "18446744073709551617");
    CHECK(r.to_string() == "0");
    BigInt::divrem(a - BigInt(1), b, q, r);
    CHECK(q.to_string() == "18446744073709551616");
    CHECK(r.to_string() == "18446744073709551614");
}

TEST_CASE("gcd matches std::gcd") {
    pwt::Rng rng(99);
    for (int trial = 0; trial < 5000; ++trial) {
        long long a = static_cast<long long>(rng.next_u64() >> 33);
        long long b = static_cast<long long>(rng.next_u64() >> 33);
        CHECK(BigInt::gcd(BigInt(a), BigInt(-b)) == BigInt(std::gcd(a, b)));
    }
}

TEST_CASE("to_ll bounds") {
    CHECK(BigInt(-9223372036854775807ll - 1).to_ll() == -9223372036854775807ll - 1);
    CHECK(BigInt::from_string("9223372036854775807").to_ll() == 9223372036854775807ll);
    CHECK_THROWS_AS(BigInt::from_string("9223372036854775808").to_ll(), pwt::DomainError);
    CHECK(BigInt::from_string("-9223372036854775808").to_ll() == -9223372036854775807ll - 1);
}
