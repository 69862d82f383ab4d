#pragma once

// Dense truncated formal power series in one variable q over a pluggable
// coefficient ring.
//
// A series of order N stores the coefficients of q^0 .. q^{N-1}; everything
// from q^N on is unknown, not zero.  Binary operations truncate to the
// smaller operand order, so a result never claims coefficients beyond what
// both inputs can support.  That convention is what makes the identity
// checks in this project trustworthy: an equality that "holds to order N"
// has genuinely been compared coefficient by coefficient N times.
//
// Multiplication is schoolbook convolution.  The expansions this library
// runs are either short (identity checks, order <= a few hundred) or use the
// structured linear passes in theta.hpp, so no FFT is needed and every
// operation stays exact.

#include "qv0/rings.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qv0 {

template <class R>
class Series {
public:
    using Ring = R;
    using Elem = typename R::Elem;

    // make(): order = number of supplied coefficients, each normalized by
    // the ring on entry.
    Series(R ring, std::vector<Elem> coeffs) : ring_(std::move(ring)), c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("series needs at least one coefficient");
    }

    static Series zero(const R& ring, std::size_t order) {
        check_order(order);
        return Series(ring, std::vector<Elem>(order, ring.zero()));
    }

    static Series constant(const R& ring, Elem value, std::size_t order) {
        Series s = zero(ring, order);
        s.c_[0] = std::move(value);
        return s;
    }

    static Series one(const R& ring, std::size_t order) { return constant(ring, ring.one(), order); }

    // q^k truncated to the given order (identically zero when k >= order).
    static Series monomial(const R& ring, std::size_t k, std::size_t order) {
        Series s = zero(ring, order);
        if (k < order) s.c_[k] = ring.one();
        return s;
    }

    std::size_t order() const { return c_.size(); }
    const R& ring() const { return ring_; }
    const std::vector<Elem>& coeffs() const { return c_; }
    std::vector<Elem>& mutable_coeffs() { return c_; }

    // Stored coefficient of q^n; asking beyond the order is an error, never
    // a silent zero.
    const Elem& coefficient(std::size_t n) const {
        if (n >= c_.size())
            throw std::out_of_range("coefficient index " + std::to_string(n) +
                                    " is at or beyond series order " + std::to_string(c_.size()));
        return c_[n];
    }

    Series truncated(std::size_t new_order) const {
        check_order(new_order);
        if (new_order > c_.size())
            throw std::invalid_argument("cannot extend a series by truncation");
        return Series(ring_, std::vector<Elem>(c_.begin(), c_.begin() + new_order));
    }

private:
    static void check_order(std::size_t order) {
        if (order == 0) throw std::invalid_argument("series order must be positive");
    }

    R ring_;
    std::vector<Elem> c_;
};

namespace detail {
template <class R>
void require_same_ring(const Series<R>& a, const Series<R>& b) {
    if (!a.ring().compatible(b.ring()))
        throw std::invalid_argument("ring mismatch between series operands");
}
}  // namespace detail

template <class R>
Series<R> add(const Series<R>& a, const Series<R>& b) {
    detail::require_same_ring(a, b);
    const R& r = a.ring();
    std::size_t n = std::min(a.order(), b.order());
    std::vector<typename R::Elem> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = r.add(a.coeffs()[i], b.coeffs()[i]);
    return Series<R>(r, std::move(out));
}

template <class R>
Series<R> sub(const Series<R>& a, const Series<R>& b) {
    detail::require_same_ring(a, b);
    const R& r = a.ring();
    std::size_t n = std::min(a.order(), b.order());
    std::vector<typename R::Elem> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = r.sub(a.coeffs()[i], b.coeffs()[i]);
    return Series<R>(r, std::move(out));
}

template <class R>
Series<R> neg(const Series<R>& a) {
    const R& r = a.ring();
    std::vector<typename R::Elem> out(a.order());
    for (std::size_t i = 0; i < a.order(); ++i) out[i] = r.neg(a.coeffs()[i]);
    return Series<R>(r, std::move(out));
}

// Cauchy product truncated to the smaller order.
template <class R>
Series<R> mul(const Series<R>& a, const Series<R>& b) {
    detail::require_same_ring(a, b);
    const R& r = a.ring();
    std::size_t n = std::min(a.order(), b.order());
    std::vector<typename R::Elem> out(n, r.zero());
    for (std::size_t i = 0; i < n; ++i) {
        if (r.is_zero(a.coeffs()[i])) continue;
        for (std::size_t j = 0; i + j < n; ++j) {
            if (r.is_zero(b.coeffs()[j])) continue;
            r.add_assign(out[i + j], r.mul(a.coeffs()[i], b.coeffs()[j]));
        }
    }
    return Series<R>(r, std::move(out));
}

// Multiplicative inverse to the series order; the constant term must be a
// unit of the coefficient ring.
template <class R>
Series<R> invert(const Series<R>& a) {
    const R& r = a.ring();
    typename R::Elem c0 = r.inverse(a.coeffs()[0]);  // throws, naming the constant
    std::size_t n = a.order();
    std::vector<typename R::Elem> out(n, r.zero());
    out[0] = c0;
    for (std::size_t k = 1; k < n; ++k) {
        typename R::Elem acc = r.zero();
        for (std::size_t i = 1; i <= k; ++i)
            r.add_assign(acc, r.mul(a.coeffs()[i], out[k - i]));
        out[k] = r.neg(r.mul(c0, acc));
    }
    return Series<R>(r, std::move(out));
}

template <class R>
Series<R> pow(const Series<R>& a, long long k) {
    const R& r = a.ring();
    if (k < 0) return pow(invert(a), -k);
    Series<R> acc = Series<R>::one(r, a.order());
    Series<R> base = a;
    unsigned long long e = static_cast<unsigned long long>(k);
    while (e) {
        if (e & 1) acc = mul(acc, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return acc;
}

// q -> q^k substitution.  The order is preserved: coefficient of q^{ki}
// comes from the input's q^i, all other coefficients are zero.
template <class R>
Series<R> substitute_power(const Series<R>& a, std::size_t k) {
    if (k == 0) throw std::invalid_argument("substitution power must be >= 1");
    const R& r = a.ring();
    std::size_t n = a.order();
    std::vector<typename R::Elem> out(n, r.zero());
    for (std::size_t i = 0; i * k < n; ++i) out[i * k] = a.coeffs()[i];
    return Series<R>(r, std::move(out));
}

// Multiplication by q^k with the order preserved (top coefficients fall off).
template <class R>
Series<R> shift(const Series<R>& a, std::size_t k) {
    const R& r = a.ring();
    std::size_t n = a.order();
    std::vector<typename R::Elem> out(n, r.zero());
    for (std::size_t i = k; i < n; ++i) out[i] = a.coeffs()[i - k];
    return Series<R>(r, std::move(out));
}

template <class R>
Series<R> scale(const Series<R>& a, const typename R::Elem& c) {
    const R& r = a.ring();
    std::vector<typename R::Elem> out(a.order());
    for (std::size_t i = 0; i < a.order(); ++i) out[i] = r.mul(a.coeffs()[i], c);
    return Series<R>(r, std::move(out));
}

// Exact coefficientwise comparison on indices < n; comparing beyond either
// order is an error rather than an implicit zero-extension.
template <class R>
bool equal_to_order(const Series<R>& a, const Series<R>& b, std::size_t n) {
    detail::require_same_ring(a, b);
    if (n > a.order() || n > b.order())
        throw std::invalid_argument("comparison order " + std::to_string(n) +
                                    " exceeds a series order");
    const R& r = a.ring();
    for (std::size_t i = 0; i < n; ++i)
        if (!r.equal(a.coeffs()[i], b.coeffs()[i])) return false;
    return true;
}

template <class R>
bool is_zero_to_order(const Series<R>& a, std::size_t n) {
    if (n > a.order()) throw std::invalid_argument("comparison order exceeds series order");
    const R& r = a.ring();
    for (std::size_t i = 0; i < n; ++i)
        if (!r.is_zero(a.coeffs()[i])) return false;
    return true;
}

// First index < n where a and b disagree, or npos if none.
template <class R>
std::size_t first_difference(const Series<R>& a, const Series<R>& b, std::size_t n) {
    detail::require_same_ring(a, b);
    if (n > a.order() || n > b.order())
        throw std::invalid_argument("comparison order exceeds a series order");
    const R& r = a.ring();
    for (std::size_t i = 0; i < n; ++i)
        if (!r.equal(a.coeffs()[i], b.coeffs()[i])) return i;
    return static_cast<std::size_t>(-1);
}

inline Series<ModRing> reduce_mod(const Series<ZRing>& a, const ModRing& r) {
    std::vector<ModRing::Elem> out(a.order());
    for (std::size_t i = 0; i < a.order(); ++i) out[i] = r.from_bigint(a.coeffs()[i]);
    return Series<ModRing>(r, std::move(out));
}

inline Series<ModBigRing> reduce_mod(const Series<ZRing>& a, const ModBigRing& r) {
    std::vector<ModBigRing::Elem> out(a.order());
    for (std::size_t i = 0; i < a.order(); ++i) out[i] = r.from_bigint(a.coeffs()[i]);
    return Series<ModBigRing>(r, std::move(out));
}

// Reduction between moduli is a ring map only when d divides m.
inline Series<ModRing> reduce_mod(const Series<ModRing>& a, const ModRing& r) {
    if (a.ring().modulus() % r.modulus() != 0)
        throw std::invalid_argument("target modulus must divide source modulus");
    std::vector<ModRing::Elem> out(a.order());
    for (std::size_t i = 0; i < a.order(); ++i) out[i] = a.coeffs()[i] % r.modulus();
    return Series<ModRing>(r, std::move(out));
}

template <class R>
Series<R> operator+(const Series<R>& a, const Series<R>& b) { return add(a, b); }
template <class R>
Series<R> operator-(const Series<R>& a, const Series<R>& b) { return sub(a, b); }
template <class R>
Series<R> operator-(const Series<R>& a) { return neg(a); }
template <class R>
Series<R> operator*(const Series<R>& a, const Series<R>& b) { return mul(a, b); }

}  // namespace qv0
