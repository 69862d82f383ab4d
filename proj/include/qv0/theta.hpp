#pragma once

// Classical theta series and Euler products as truncated power series, each
// available through at least two independent constructions so identities can
// be cross-checked rather than assumed:
//
//   psi(q)  = sum_{n>=0} q^{n(n+1)/2}                 = (q^2;q^2)/(q;q^2)
//   phi(q)  = sum_{n in Z} q^{n^2}                    = (-q;q^2)^2 (q^2;q^2)
//   f(a,b)  = sum_{n in Z} a^{n(n+1)/2} b^{n(n-1)/2}  = (-a;ab)(-b;ab)(ab;ab)
//   f_k     = (q^k;q^k)_inf, by the pentagonal number theorem
//
// plus the counting series
//
//   sum_{n>=0} v0(n) q^n = sum_{n>=0} q^{n^2} (-q;q^2)_n / (q;q^2)_n,
//
// where v0(n) is the number of overpartitions of n into odd parts without
// gaps between the non-overlined parts.  v0() evaluates the sum by updating
// the term ratio
//
//   T_n = T_{n-1} * q^{2n-1} * (1 + q^{2n-1}) / (1 - q^{2n-1}),  T_0 = 1,
//
// which costs three linear passes per term and O(sqrt(N)) terms in total.
// v0_oracle() expands the same sum by a deliberately separate naive route
// (explicit numerator products, denominator inverses by geometric-series
// convolution) and is the reference the fast path is tested against.

#include "qv0/series.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace qv0::theta {

// +-q^e with e >= 1; the admissible argument shape for f(a, b).
struct Monomial {
    int sign = 1;
    unsigned long long exponent = 1;
};

inline void check_monomial(const Monomial& m) {
    if (m.sign != 1 && m.sign != -1) throw std::invalid_argument("monomial sign must be +-1");
    if (m.exponent == 0) throw std::invalid_argument("monomial exponent must be >= 1");
}

namespace detail {

// In-place multiplication by (1 + c q^e), the workhorse for all product
// forms.  Descending scan so each old coefficient is read before overwrite.
template <class R>
void mul_binomial(const R& r, std::vector<typename R::Elem>& t, const typename R::Elem& c,
                  std::size_t e) {
    if (e == 0) throw std::invalid_argument("binomial exponent must be >= 1");
    for (std::size_t i = t.size(); i-- > e;) r.add_assign(t[i], r.mul(c, t[i - e]));
}

}  // namespace detail

// f_k = (q^k; q^k)_inf via the pentagonal number theorem:
//   sum over j in Z of (-1)^j q^{k j(3j-1)/2}.
template <class R>
Series<R> euler(const R& r, unsigned long long k, std::size_t order) {
    if (k == 0) throw std::invalid_argument("euler product index must be >= 1");
    std::vector<typename R::Elem> c(order, r.zero());
    c[0] = r.one();  // j = 0
    auto apply = [&](unsigned long long g, bool odd) {
        if (g * k >= order) return;
        std::size_t e = static_cast<std::size_t>(g * k);
        if (odd)
            c[e] = r.sub(c[e], r.one());
        else
            r.add_assign(c[e], r.one());
    };
    for (unsigned long long j = 1; j * (3 * j - 1) / 2 * k < order; ++j) {
        apply(j * (3 * j - 1) / 2, j % 2 == 1);  // index  j
        apply(j * (3 * j + 1) / 2, j % 2 == 1);  // index -j
    }
    return Series<R>(r, std::move(c));
}

// The same f_k as a finite truncated product prod_{i>=1} (1 - q^{ki}); used
// as the independent oracle for euler().
template <class R>
Series<R> euler_product_form(const R& r, unsigned long long k, std::size_t order) {
    if (k == 0) throw std::invalid_argument("euler product index must be >= 1");
    std::vector<typename R::Elem> c(order, r.zero());
    c[0] = r.one();
    typename R::Elem minus_one = r.neg(r.one());
    for (unsigned long long i = 1; k * i < order; ++i)
        detail::mul_binomial(r, c, minus_one, static_cast<std::size_t>(k * i));
    return Series<R>(r, std::move(c));
}

// psi(q^k) = sum_{n>=0} q^{k n(n+1)/2}.
template <class R>
Series<R> psi(const R& r, unsigned long long k, std::size_t order) {
    if (k == 0) throw std::invalid_argument("psi argument power must be >= 1");
    std::vector<typename R::Elem> c(order, r.zero());
    for (unsigned long long n = 0;; ++n) {
        unsigned long long t = n * (n + 1) / 2;
        if (t * k >= order) break;
        r.add_assign(c[t * k], r.one());
    }
    return Series<R>(r, std::move(c));
}

// phi(sign * q^k) = 1 + 2 sum_{n>=1} sign^{n^2} q^{k n^2}; sign^{n^2} =
// sign^n, so phi(-q^k) alternates.
template <class R>
Series<R> phi(const R& r, int sign, unsigned long long k, std::size_t order) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("phi sign must be +-1");
    if (k == 0) throw std::invalid_argument("phi argument power must be >= 1");
    std::vector<typename R::Elem> c(order, r.zero());
    c[0] = r.one();
    typename R::Elem two = r.from_int(2);
    for (unsigned long long n = 1; n * n * k < order; ++n) {
        std::size_t e = static_cast<std::size_t>(n * n * k);
        if (sign == -1 && n % 2 == 1)
            c[e] = r.sub(c[e], two);
        else
            r.add_assign(c[e], two);
    }
    return Series<R>(r, std::move(c));
}

// f(a, b) = sum_{n in Z} a^{n(n+1)/2} b^{n(n-1)/2} by the bilateral sum.
template <class R>
Series<R> f(const R& r, Monomial a, Monomial b, std::size_t order) {
    check_monomial(a);
    check_monomial(b);
    std::vector<typename R::Elem> c(order, r.zero());
    auto tri = [](long long x) { return x * (x + 1) / 2; };
    auto accumulate = [&](long long n) -> bool {
        long long ta = tri(n), tb = tri(n - 1);  // exponents on a and b
        unsigned long long e = a.exponent * static_cast<unsigned long long>(ta) +
                               b.exponent * static_cast<unsigned long long>(tb);
        if (e >= order) return false;
        bool negative = (a.sign == -1 && (ta & 1)) != (b.sign == -1 && (tb & 1));
        if (negative)
            c[e] = r.sub(c[e], r.one());
        else
            r.add_assign(c[e], r.one());
        return true;
    };
    for (long long n = 0; accumulate(n); ++n) {}
    for (long long n = -1; accumulate(n); --n) {}
    return Series<R>(r, std::move(c));
}

namespace detail {

// prod_{i>=0} (1 - x y^i) for signed monomials x, y, truncated.
template <class R>
void mul_pochhammer_inf(const R& r, std::vector<typename R::Elem>& c, Monomial x, Monomial y) {
    unsigned long long e = x.exponent;
    int factor_sign = x.sign;  // sign of x y^i
    while (e < c.size()) {
        mul_binomial(r, c, r.from_int(-factor_sign), static_cast<std::size_t>(e));
        e += y.exponent;
        factor_sign *= y.sign;
    }
}

}  // namespace detail

// Jacobi triple product form of f(a, b): (-a; ab)_inf (-b; ab)_inf (ab; ab)_inf.
template <class R>
Series<R> f_product_form(const R& r, Monomial a, Monomial b, std::size_t order) {
    check_monomial(a);
    check_monomial(b);
    Monomial ab{a.sign * b.sign, a.exponent + b.exponent};
    std::vector<typename R::Elem> c(order, r.zero());
    c[0] = r.one();
    detail::mul_pochhammer_inf(r, c, Monomial{-a.sign, a.exponent}, ab);
    detail::mul_pochhammer_inf(r, c, Monomial{-b.sign, b.exponent}, ab);
    detail::mul_pochhammer_inf(r, c, ab, ab);
    return Series<R>(r, std::move(c));
}

// (sign * q^r ; q^step)_n, i.e. prod_{i=0}^{n-1} (1 - sign q^{r + step i});
// n == nullopt means the infinite product, where factors with exponent at or
// beyond the order are 1 + O(q^order) and may be dropped.
template <class R>
Series<R> pochhammer(const R& r, int sign, unsigned long long first, unsigned long long step,
                     std::optional<unsigned long long> n, std::size_t order) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("pochhammer sign must be +-1");
    if (first == 0 || step == 0)
        throw std::invalid_argument("pochhammer offsets must be >= 1");
    std::vector<typename R::Elem> c(order, r.zero());
    c[0] = r.one();
    typename R::Elem coef = r.from_int(-sign);
    unsigned long long e = first;
    for (unsigned long long i = 0; !n || i < *n; ++i, e += step) {
        if (e >= order) break;
        detail::mul_binomial(r, c, coef, static_cast<std::size_t>(e));
    }
    return Series<R>(r, std::move(c));
}

// sum_{n>=0} v0(n) q^n to the given order, by the incremental term-ratio
// update described at the top of this header.
template <class R>
Series<R> v0(const R& r, std::size_t order) {
    std::vector<typename R::Elem> term(order, r.zero());
    term[0] = r.one();
    std::vector<typename R::Elem> acc = term;
    for (std::size_t n = 1; n * n < order; ++n) {
        std::size_t d = 2 * n - 1;
        std::size_t low = n * n;  // lowest live exponent after this update
        // term *= q^d (1 + q^d)
        for (std::size_t i = order; i-- > low;) {
            typename R::Elem v = term[i - d];
            if (i >= 2 * d) r.add_assign(v, term[i - 2 * d]);
            term[i] = std::move(v);
        }
        for (std::size_t i = (n - 1) * (n - 1); i < low; ++i) term[i] = r.zero();
        // term /= (1 - q^d): running sums with stride d
        for (std::size_t i = low + d; i < order; ++i) r.add_assign(term[i], term[i - d]);
        for (std::size_t i = low; i < order; ++i) r.add_assign(acc[i], term[i]);
    }
    return Series<R>(r, std::move(acc));
}

// Independent expansion of the same sum: each term is built from scratch as
//   q^{n^2} * prod_i (1 + q^{2i-1}) * prod_i (1/(1 - q^{2i-1})),
// the inverses realized by convolving with the explicit geometric series
// 1 + q^d + q^{2d} + ...  Shares nothing with v0() beyond integer addition.
std::vector<BigInt> v0_oracle(std::size_t order);

// Even part of the generating function in closed form: checks
//   2 * sum_{n} v0(2n) q^{2n} - 1 = (-q^2; q^4)^4_inf (q^8; q^8)_inf
// exactly to the given order.
bool even_part_identity_holds(std::size_t order);

}  // namespace qv0::theta
