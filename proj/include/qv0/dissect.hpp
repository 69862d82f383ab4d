#pragma once

// Coefficient extraction along arithmetic progressions, the Huffing operator
//
//   H(sum a_n q^n) = sum a_{2n} q^{2n}
//
// (even-exponent terms kept at their original exponents), and verifiers for
// two classical prime dissections:
//
//   psi(q)   = sum_{k=0}^{(p-3)/2} q^{(k^2+k)/2}
//                 f(q^{(p^2+(2k+1)p)/2}, q^{(p^2-(2k+1)p)/2})
//              + q^{(p^2-1)/8} psi(q^{p^2})              (p an odd prime)
//
//   f(q,q^2) = sum_{|k|<=(p1-1)/2, k != (+-p1-1)/6} q^{(3k^2+k)/2}
//                 f(q^{(3p1^2+(6k+1)p1)/2}, q^{(3p1^2-(6k+1)p1)/2})
//              + q^{(p1^2-1)/24} f(q^{p1^2}, q^{2p1^2})  (p1 >= 5 prime)
//
// together with the standard consequences for the triangular-number
// indicator a(n) (the coefficients of psi).

#include "qv0/theta.hpp"

#include <cstdint>
#include <stdexcept>

namespace qv0::dissect {

// Exponents a*n + r of an arithmetic progression, 0 <= r < a.
struct Progression {
    std::size_t modulus = 1;
    std::size_t residue = 0;
};

template <class R>
Series<R> huffing(const Series<R>& s) {
    const R& r = s.ring();
    std::vector<typename R::Elem> out(s.coeffs());
    for (std::size_t i = 1; i < out.size(); i += 2) out[i] = r.zero();
    return Series<R>(r, std::move(out));
}

// Compressed extraction: coefficient n of the result is coefficient
// p*n + r of the input.  The result order is exactly the number of indices
// of the progression that the input covers.
template <class R>
Series<R> extract(const Series<R>& s, Progression prog) {
    if (prog.modulus == 0) throw std::invalid_argument("progression modulus must be >= 1");
    if (prog.residue >= prog.modulus)
        throw std::invalid_argument("progression residue must satisfy 0 <= r < p");
    if (prog.residue >= s.order())
        throw std::out_of_range("progression residue " + std::to_string(prog.residue) +
                                " is at or beyond series order " + std::to_string(s.order()));
    std::size_t n = (s.order() - 1 - prog.residue) / prog.modulus + 1;
    std::vector<typename R::Elem> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = s.coeffs()[prog.modulus * i + prog.residue];
    return Series<R>(s.ring(), std::move(out));
}

// p-dissection of psi for odd primes p.  Also checks the residue-class
// separation that makes the dissection useful: the shifts (k^2+k)/2 stay
// away from (p^2-1)/8 mod p.
bool psi_dissection_holds(unsigned long long p, std::size_t order);

// p1-dissection of f(q, q^2) for primes p1 >= 5, with the analogous
// residue-class separation of the shifts (3k^2+k)/2 from (p1^2-1)/24 mod p1.
bool f12_dissection_holds(unsigned long long p1, std::size_t order);

// With a(n) the coefficients of psi(q), verifies for all n < n_limit:
//   a(p^{2a} n + (p^{2a}-1)/8)                 = a(n)
//   a(p^{2a+2} n + ((8i+p) p^{2a+1} - 1)/8)    = 0   for i = 1 .. p-1
//   a(p^{2a+1} n + ((8j+1) p^{2a} - 1)/8)      = 0   whenever (8j+1|p) = -1
bool triangular_coefficient_properties(unsigned long long p, unsigned alpha,
                                       std::size_t n_limit);

}  // namespace qv0::dissect
