#include "qv0/theta.hpp"

namespace qv0::theta {

std::vector<BigInt> v0_oracle(std::size_t order) {
    if (order == 0) throw std::invalid_argument("order must be positive");
    std::vector<BigInt> sum(order, 0);
    sum[0] = 1;  // the empty (n = 0) term
    for (std::size_t n = 1; n * n < order; ++n) {
        std::size_t base = n * n;
        std::size_t len = order - base;  // only exponents n^2 .. order-1 matter
        std::vector<BigInt> t(len, 0);
        t[0] = 1;
        // numerator prod_{i=1..n} (1 + q^{2i-1})
        for (std::size_t i = 1; i <= n; ++i) {
            std::size_t d = 2 * i - 1;
            for (std::size_t j = len; j-- > d;) t[j] += t[j - d];
        }
        // denominator: convolve with 1 + q^d + q^{2d} + ... for each d = 2i-1
        for (std::size_t i = 1; i <= n; ++i) {
            std::size_t d = 2 * i - 1;
            std::vector<BigInt> u(len);
            for (std::size_t k = 0; k < len; ++k) {
                BigInt s = t[k];
                for (std::size_t off = d; off <= k; off += d) s += t[k - off];
                u[k] = std::move(s);
            }
            t.swap(u);
        }
        for (std::size_t j = 0; j < len; ++j) sum[base + j] += t[j];
    }
    return sum;
}

bool even_part_identity_holds(std::size_t order) {
    ZRing z;
    Series<ZRing> v = v0(z, order);
    // 2 * (even part of v) - 1, with the even part kept at its exponents
    std::vector<BigInt> lhs(order, 0);
    for (std::size_t i = 0; i < order; i += 2) lhs[i] = 2 * v.coeffs()[i];
    lhs[0] -= 1;
    Series<ZRing> rhs =
        mul(pow(pochhammer(z, -1, 2, 4, std::nullopt, order), 4), euler(z, 8, order));
    return equal_to_order(Series<ZRing>(z, std::move(lhs)), rhs, order);
}

}  // namespace qv0::theta
