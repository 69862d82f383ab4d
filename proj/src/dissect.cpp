#include "qv0/dissect.hpp"

#include <set>

namespace qv0::dissect {

bool psi_dissection_holds(unsigned long long p, std::size_t order) {
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("p must be an odd prime");
    ZRing z;
    Series<ZRing> lhs = theta::psi(z, 1, order);
    Series<ZRing> rhs = Series<ZRing>::zero(z, order);
    for (unsigned long long k = 0; 2 * k <= p - 3; ++k) {
        unsigned long long shift_exp = (k * k + k) / 2;
        theta::Monomial a{1, (p * p + (2 * k + 1) * p) / 2};
        theta::Monomial b{1, (p * p - (2 * k + 1) * p) / 2};
        rhs = add(rhs, shift(theta::f(z, a, b, order), shift_exp));
    }
    rhs = add(rhs, shift(theta::psi(z, p * p, order), (p * p - 1) / 8));
    if (!equal_to_order(lhs, rhs, order)) return false;

    // residue separation: (k^2+k)/2 mod p never meets (p^2-1)/8 mod p
    unsigned long long tail = ((p * p - 1) / 8) % p;
    for (unsigned long long k = 0; 2 * k <= p - 3; ++k)
        if ((k * k + k) / 2 % p == tail) return false;
    return true;
}

bool f12_dissection_holds(unsigned long long p1, std::size_t order) {
    if (p1 < 5 || p1 % 2 == 0 || p1 % 3 == 0)
        throw std::invalid_argument("p1 must be a prime >= 5");
    ZRing z;
    Series<ZRing> lhs = theta::f(z, {1, 1}, {1, 2}, order);
    Series<ZRing> rhs = Series<ZRing>::zero(z, order);
    long long half = static_cast<long long>((p1 - 1) / 2);
    long long sp = static_cast<long long>(p1);
    auto excluded = [&](long long k) {
        return 6 * k == sp - 1 || 6 * k == -sp - 1;  // k = (:+-p1 - 1)/6 when integral
    };
    for (long long k = -half; k <= half; ++k) {
        if (excluded(k)) continue;
        unsigned long long shift_exp = static_cast<unsigned long long>((3 * k * k + k) / 2);
        long long m = 6 * k + 1;  // may be negative; both f-exponents stay positive
        theta::Monomial a{1, static_cast<unsigned long long>((3 * sp * sp + m * sp) / 2)};
        theta::Monomial b{1, static_cast<unsigned long long>((3 * sp * sp - m * sp) / 2)};
        rhs = add(rhs, shift(theta::f(z, a, b, order), shift_exp));
    }
    rhs = add(rhs, shift(theta::f(z, {1, p1 * p1}, {1, 2 * p1 * p1}, order),
                         (p1 * p1 - 1) / 24));
    if (!equal_to_order(lhs, rhs, order)) return false;

    unsigned long long tail = ((p1 * p1 - 1) / 24) % p1;
    for (long long k = -half; k <= half; ++k) {
        if (excluded(k)) continue;
        long long res = ((3 * k * k + k) / 2) % sp;
        if (res < 0) res += sp;
        if (static_cast<unsigned long long>(res) == tail) return false;
    }
    return true;
}

bool triangular_coefficient_properties(unsigned long long p, unsigned alpha,
                                       std::size_t n_limit) {
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("p must be an odd prime");
    unsigned long long p2a = 1;
    for (unsigned i = 0; i < 2 * alpha; ++i) p2a *= p;
    unsigned long long p2a1 = p2a * p, p2a2 = p2a1 * p;

    // largest psi-coefficient index any family touches
    unsigned long long max_arg = p2a * (n_limit - 1) + (p2a - 1) / 8;
    max_arg = std::max(max_arg, p2a2 * (n_limit - 1) + ((8 * (p - 1) + p) * p2a1 - 1) / 8);
    max_arg = std::max(max_arg, p2a1 * (n_limit - 1) + ((8 * (p - 1) + 1) * p2a - 1) / 8);

    ZRing z;
    Series<ZRing> psi_series = theta::psi(z, 1, static_cast<std::size_t>(max_arg + 1));
    const auto& a = psi_series.coeffs();

    for (std::size_t n = 0; n < n_limit; ++n)
        if (a[p2a * n + (p2a - 1) / 8] != a[n]) return false;

    for (unsigned long long i = 1; i <= p - 1; ++i)
        for (std::size_t n = 0; n < n_limit; ++n)
            if (!a[p2a2 * n + ((8 * i + p) * p2a1 - 1) / 8].is_zero()) return false;

    for (unsigned long long j = 0; j <= p - 1; ++j) {
        if (legendre(static_cast<long long>(8 * j + 1), p) != -1) continue;
        for (std::size_t n = 0; n < n_limit; ++n)
            if (!a[p2a1 * n + ((8 * j + 1) * p2a - 1) / 8].is_zero()) return false;
    }
    return true;
}

}  // namespace qv0::dissect
