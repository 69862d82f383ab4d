#pragma once

// Arbitrary-precision integers plus the handful of elementary number-theory
// helpers the rest of the library leans on (2-adic valuation, integer square
// roots, Legendre symbol, figurate-number tests).

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace qv0 {

using BigInt = boost::multiprecision::cpp_int;

// 2-adic valuation of an integer; std::nullopt encodes +infinity (valuation
// of zero).
inline std::optional<long> val2(const BigInt& n) {
    if (n.is_zero()) return std::nullopt;
    return static_cast<long>(boost::multiprecision::lsb(boost::multiprecision::abs(n)));
}

inline BigInt isqrt(const BigInt& n) {
    if (n < 0) throw std::domain_error("isqrt of negative value");
    return boost::multiprecision::sqrt(n);
}

inline bool is_square(const BigInt& n) {
    if (n < 0) return false;
    BigInt r = boost::multiprecision::sqrt(n);
    return r * r == n;
}

// n == k(k+1)/2 for some k >= 0.
inline bool is_triangular(const BigInt& n) { return n >= 0 && is_square(8 * n + 1); }

// n == k(3k+1)/2 for some integer k (k may be negative): 24n+1 must be an
// odd square, and every odd square root of 1 mod 24 is automatically +-1
// mod 6, so a plain square test suffices.
inline bool is_pentagonal_index(const BigInt& n) { return n >= 0 && is_square(24 * n + 1); }

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t acc = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) acc = mulmod_u64(acc, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return acc;
}

// Legendre symbol (a|p) for an odd prime p, via Euler's criterion.
inline int legendre(long long a, std::uint64_t p) {
    long long r = a % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    if (r == 0) return 0;
    std::uint64_t e = powmod_u64(static_cast<std::uint64_t>(r), (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

}  // namespace qv0
