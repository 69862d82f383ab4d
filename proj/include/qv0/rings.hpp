#pragma once

// Coefficient rings for the truncated power-series carrier:
//
//   ZRing      exact arbitrary-precision integers
//   ModRing    integers mod m with m < 2^63 (word-sized residues; the hot
//              path for long modular expansions)
//   ModBigRing integers mod m for arbitrary m
//   DyadicRing rationals of the form num / 2^e
//
// All rings expose the same element vocabulary (zero/one/add/sub/mul/...),
// so series code is written once and instantiated per ring.  RingTag is the
// runtime descriptor used by the expression evaluator and the CLI; it picks
// the concrete ring via dispatch_ring.

#include "qv0/bigint.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace qv0 {

// num / 2^exp2, kept with exp2 minimal: either num is odd or exp2 == 0
// (zero is stored as (0, 0)).  Integer values therefore always carry
// exp2 == 0, which is what the coefficient-vector invariants test.
struct Dyadic {
    BigInt num;
    unsigned exp2 = 0;

    Dyadic() = default;
    Dyadic(BigInt n, unsigned e) : num(std::move(n)), exp2(e) { normalize(); }
    Dyadic(long long n) : num(n), exp2(0) {}  // NOLINT: implicit by design

    void normalize() {
        if (num.is_zero()) {
            exp2 = 0;
            return;
        }
        while (exp2 > 0 && (num & 1) == 0) {
            num >>= 1;
            --exp2;
        }
    }

    // p / q with q an exact power of two (sign allowed); anything else is
    // not a dyadic rational and is rejected.
    static Dyadic from_fraction(const BigInt& p, const BigInt& q) {
        if (q.is_zero()) throw std::domain_error("dyadic denominator is zero");
        BigInt qa = boost::multiprecision::abs(q);
        unsigned long bit = boost::multiprecision::lsb(qa);
        if ((BigInt(1) << bit) != qa)
            throw std::domain_error("dyadic denominator " + q.str() + " is not a power of two");
        BigInt num = q < 0 ? BigInt(-p) : p;
        return Dyadic(num, static_cast<unsigned>(bit));
    }

    bool operator==(const Dyadic& o) const { return num == o.num && exp2 == o.exp2; }

    std::string str() const {
        if (exp2 == 0) return num.str();
        return num.str() + "/" + (BigInt(1) << exp2).str();
    }
};

// 2-adic valuation extended to dyadic rationals.
inline std::optional<long> val2(const Dyadic& d) {
    auto v = val2(d.num);
    if (!v) return std::nullopt;
    return *v - static_cast<long>(d.exp2);
}

class ZRing {
public:
    using Elem = BigInt;

    static constexpr const char* name() { return "Z"; }
    bool compatible(const ZRing&) const { return true; }

    Elem zero() const { return BigInt(0); }
    Elem one() const { return BigInt(1); }
    Elem from_int(long long v) const { return BigInt(v); }
    Elem from_bigint(const BigInt& v) const { return v; }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    void add_assign(Elem& a, const Elem& b) const { a += b; }

    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }

    bool is_unit(const Elem& a) const { return a == 1 || a == -1; }
    Elem inverse(const Elem& a) const {
        if (!is_unit(a))
            throw std::domain_error("constant term " + a.str() + " is not a unit in Z");
        return a;
    }

    std::string to_string(const Elem& a) const { return a.str(); }
};

// Residues mod m stored reduced to [0, m); m < 2^63 so that a + b never
// overflows and a single conditional subtraction reduces.
class ModRing {
public:
    using Elem = std::uint64_t;

    explicit ModRing(std::uint64_t m) : m_(m) {
        if (m < 2) throw std::invalid_argument("modulus must be >= 2");
        if (m >= (std::uint64_t(1) << 63))
            throw std::invalid_argument("modulus too large for word ring; use ModBigRing");
    }

    std::uint64_t modulus() const { return m_; }
    std::string name() const { return "Z/" + std::to_string(m_); }
    bool compatible(const ModRing& o) const { return m_ == o.m_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % m_; }
    Elem from_int(long long v) const {
        long long r = v % static_cast<long long>(m_);
        if (r < 0) r += static_cast<long long>(m_);
        return static_cast<Elem>(r);
    }
    Elem from_bigint(const BigInt& v) const {
        BigInt r = v % BigInt(m_);
        if (r < 0) r += m_;
        return r.convert_to<std::uint64_t>();
    }

    Elem add(Elem a, Elem b) const {
        Elem s = a + b;
        return s >= m_ ? s - m_ : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + (m_ - b); }
    Elem mul(Elem a, Elem b) const { return mulmod_u64(a, b, m_); }
    Elem neg(Elem a) const { return a == 0 ? 0 : m_ - a; }
    void add_assign(Elem& a, Elem b) const {
        a += b;
        if (a >= m_) a -= m_;
    }

    bool is_zero(Elem a) const { return a == 0; }
    bool equal(Elem a, Elem b) const { return a == b; }

    bool is_unit(Elem a) const {
        std::uint64_t x = a, y = m_;
        while (y) {
            std::uint64_t t = x % y;
            x = y;
            y = t;
        }
        return x == 1;
    }

    Elem inverse(Elem a) const {
        // extended Euclid; valid for composite m as long as gcd(a, m) = 1
        long long t = 0, new_t = 1;
        long long r = static_cast<long long>(m_), new_r = static_cast<long long>(a);
        while (new_r != 0) {
            long long q = r / new_r;
            t = std::exchange(new_t, t - q * new_t);
            r = std::exchange(new_r, r - q * new_r);
        }
        if (r != 1)
            throw std::domain_error("constant term " + std::to_string(a) +
                                    " is not invertible mod " + std::to_string(m_));
        if (t < 0) t += static_cast<long long>(m_);
        return static_cast<Elem>(t);
    }

    std::string to_string(Elem a) const { return std::to_string(a); }

private:
    std::uint64_t m_;
};

class ModBigRing {
public:
    using Elem = BigInt;

    explicit ModBigRing(BigInt m) : m_(std::move(m)) {
        if (m_ < 2) throw std::invalid_argument("modulus must be >= 2");
    }

    const BigInt& modulus() const { return m_; }
    std::string name() const { return "Z/" + m_.str(); }
    bool compatible(const ModBigRing& o) const { return m_ == o.m_; }

    Elem zero() const { return BigInt(0); }
    Elem one() const { return BigInt(1) % m_; }
    Elem from_int(long long v) const { return from_bigint(BigInt(v)); }
    Elem from_bigint(const BigInt& v) const {
        BigInt r = v % m_;
        if (r < 0) r += m_;
        return r;
    }

    Elem add(const Elem& a, const Elem& b) const {
        BigInt s = a + b;
        if (s >= m_) s -= m_;
        return s;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        BigInt s = a - b;
        if (s < 0) s += m_;
        return s;
    }
    Elem mul(const Elem& a, const Elem& b) const { return (a * b) % m_; }
    Elem neg(const Elem& a) const { return a.is_zero() ? a : BigInt(m_ - a); }
    void add_assign(Elem& a, const Elem& b) const {
        a += b;
        if (a >= m_) a -= m_;
    }

    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }

    bool is_unit(const Elem& a) const { return boost::multiprecision::gcd(a, m_) == 1; }

    Elem inverse(const Elem& a) const {
        BigInt t = 0, new_t = 1, r = m_, new_r = a;
        while (!new_r.is_zero()) {
            BigInt q = r / new_r;
            BigInt tmp = t - q * new_t;
            t = std::exchange(new_t, tmp);
            tmp = r - q * new_r;
            r = std::exchange(new_r, tmp);
        }
        if (r != 1)
            throw std::domain_error("constant term " + a.str() + " is not invertible mod " +
                                    m_.str());
        if (t < 0) t += m_;
        return t;
    }

    std::string to_string(const Elem& a) const { return a.str(); }

private:
    BigInt m_;
};

class DyadicRing {
public:
    using Elem = Dyadic;

    static constexpr const char* name() { return "Z[1/2]"; }
    bool compatible(const DyadicRing&) const { return true; }

    Elem zero() const { return Dyadic(); }
    Elem one() const { return Dyadic(1); }
    Elem from_int(long long v) const { return Dyadic(v); }
    Elem from_bigint(const BigInt& v) const { return Dyadic(v, 0); }

    Elem add(const Elem& a, const Elem& b) const {
        unsigned e = std::max(a.exp2, b.exp2);
        return Dyadic((a.num << (e - a.exp2)) + (b.num << (e - b.exp2)), e);
    }
    Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }
    Elem mul(const Elem& a, const Elem& b) const { return Dyadic(a.num * b.num, a.exp2 + b.exp2); }
    Elem neg(const Elem& a) const { return Dyadic(-a.num, a.exp2); }
    void add_assign(Elem& a, const Elem& b) const { a = add(a, b); }

    bool is_zero(const Elem& a) const { return a.num.is_zero(); }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }

    // units of Z[1/2] are +-2^k
    bool is_unit(const Elem& a) const {
        if (a.num.is_zero()) return false;
        BigInt n = boost::multiprecision::abs(a.num);
        return (BigInt(1) << boost::multiprecision::lsb(n)) == n;
    }

    Elem inverse(const Elem& a) const {
        if (!is_unit(a))
            throw std::domain_error("constant term " + a.str() + " is not a unit in Z[1/2]");
        long k = *val2(a);  // a = sign * 2^k
        bool negative = a.num < 0;
        BigInt num = 1;
        unsigned e = 0;
        if (k > 0)
            e = static_cast<unsigned>(k);
        else
            num <<= static_cast<unsigned>(-k);
        if (negative) num = -num;
        return Dyadic(num, e);
    }

    std::string to_string(const Elem& a) const { return a.str(); }
};

// Runtime coefficient-domain descriptor.
struct RingTag {
    enum class Kind { ExactInteger, Modular, Dyadic };

    Kind kind = Kind::ExactInteger;
    BigInt modulus;  // Modular only

    static RingTag exact() { return {Kind::ExactInteger, 0}; }
    static RingTag dyadic() { return {Kind::Dyadic, 0}; }
    static RingTag modular(BigInt m) {
        if (m < 2) throw std::invalid_argument("modulus must be >= 2");
        return {Kind::Modular, std::move(m)};
    }
};

// Calls f with the concrete ring object named by the tag.  Word-sized moduli
// get the fast ModRing; anything larger falls back to ModBigRing.
template <class F>
decltype(auto) dispatch_ring(const RingTag& tag, F&& f) {
    switch (tag.kind) {
        case RingTag::Kind::ExactInteger:
            return f(ZRing{});
        case RingTag::Kind::Dyadic:
            return f(DyadicRing{});
        case RingTag::Kind::Modular:
            if (tag.modulus < (BigInt(1) << 63))
                return f(ModRing{tag.modulus.convert_to<std::uint64_t>()});
            return f(ModBigRing{tag.modulus});
    }
    throw std::logic_error("unreachable ring kind");
}

}  // namespace qv0
