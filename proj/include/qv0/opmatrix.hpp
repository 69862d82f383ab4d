#pragma once

// The recurrence matrices behind the even/odd 2-dissection bookkeeping of
// the v0 generating function, and the coefficient vectors they evolve.
//
// Three base tables, all strictly banded (entry = 0 for column > row) and
// generated by a two-term diagonal recurrence:
//
//   M: rows (1), (-1, 2);        e(i,j) = 2 e(i-1,j-1) - e(i-2,j-1)
//   N: rows (2), (1, 8);         e(i,j) = 4 e(i-1,j-1) + e(i-2,j-1)
//   P: rows (4), (1, 32);        e(i,j) = 8 e(i-1,j-1) + e(i-2,j-1)
//
// with e(i,1) = 0 for i >= 3 in every table.  M records the Huffing images
// of powers of phi(q^4)/phi(-q), N those of q psi(q^8)/phi(-q), P those of
// q psi(q^4)^2 / phi(-q)^2 (each written over the matching squared base).
//
// Derived matrices select the rows that survive the odd-row vanishing
// e(2i-1, j) = 0 for j < i:
//
//   A(i,j) = m(8i-7, j+4i-4)     B(i,j) = m(i-1, j-1), unit top-left corner
//   C(i,j) = n(8i-7, j+4i-4)     D(i,j) = p(i-1, j-1), unit top-left corner
//
// The coefficient vectors start from x_1 = (-3/2, 2, 0, ...) and evolve by
// x_{2a} = x_{2a-1} A, x_{2a+1} = x_{2a} B, y_a = x_{2a-1} C, z_a = y_a D.
// Entries are dyadic rationals; every entry past the first is an integer.

#include "qv0/rings.hpp"
#include "qv0/series.hpp"

#include <cstddef>
#include <deque>
#include <vector>

namespace qv0::opmatrix {

enum class Base { M, N, P };
enum class DerivedName { A, B, C, D };

// Lazily generated, memoized rows of one base table.
class MatrixTable {
public:
    explicit MatrixTable(Base base);

    // 1-based indices; anything above the band (j > i) is zero.
    const BigInt& entry(std::size_t i, std::size_t j) const;

private:
    void extend(std::size_t rows) const;

    long long lead_;
    long long trail_;
    std::vector<long long> seed1_, seed2_;
    mutable std::vector<std::vector<BigInt>> rows_;
};

// The three base tables plus derived-matrix access and the vector tower.
class Tables {
public:
    const BigInt& base_entry(Base which, std::size_t i, std::size_t j) const;
    BigInt derived_entry(DerivedName which, std::size_t i, std::size_t j) const;

    // a(i,j) = m(2i-1, j+i-1) and c(i,j) = n(2i-1, j+i-1): the contracted
    // odd-row coefficients appearing in the Huffing-image expansions.
    const BigInt& odd_row_entry(Base which, std::size_t i, std::size_t j) const;

    // Coefficient vectors (1-based positions, trailing zeros trimmed).
    const std::vector<Dyadic>& x(unsigned alpha);
    std::vector<Dyadic> y(unsigned alpha);
    std::vector<Dyadic> z(unsigned alpha);

private:
    std::vector<Dyadic> apply(const std::vector<Dyadic>& v, DerivedName which) const;

    MatrixTable m_{Base::M}, n_{Base::N}, p_{Base::P};
    // deque keeps references to earlier vectors stable while later ones
    // are appended
    std::deque<std::vector<Dyadic>> x_memo_;
};

enum class ImageFamily { Zeta, Xi, Mu, Rho };

// Huffing-image identities in denominator-cleared polynomial form.  Writing
// 1/phi(-q) = phi(q)/phi(-q^2)^2 turns each quotient identity into an
// equality of entire series; the checks below are those cleared forms:
//
//   Zeta: H(phi(q)^{2i-1})
//           = sum_j a(i,j) phi(q^4)^{2j-1} phi(-q^2)^{2i-2j}
//   Xi:   H(phi(q^2)^{2i+1} phi(q)^{2i})
//           = sum_j m(i,j) phi(q^2)^{4j+1} phi(-q^2)^{4i-4j}
//   Mu:   H(q phi(q)^{2i-1})
//           = sum_j c(i,j) q^{2j} psi(q^8)^{2j-1} phi(-q^2)^{2i-2j}
//   Rho:  H(q^i psi(q^4)^{2i+1} phi(q)^{2i})
//           = sum_j p(i,j) q^{2j} psi(q^4)^{4j+1} phi(-q^2)^{4i-4j}
bool huffing_image_holds(Tables& tables, ImageFamily family, unsigned i, std::size_t order);

// The quadratic relations each family's recurrence is built on, cleared of
// denominators:
//
//   Zeta: phi(-q)^2 - 2 phi(-q) phi(q^4)     + phi(-q^2)^2 = 0
//   Xi:   phi(-q)^4 - 2 phi(-q)^2 phi(q^2)^2 + phi(-q^2)^4 = 0
//   Mu:   phi(-q)^2 + 4 q psi(q^8)   phi(-q)   - phi(-q^2)^2 = 0
//   Rho:  phi(-q)^4 + 8 q psi(q^4)^2 phi(-q)^2 - phi(-q^2)^4 = 0
bool quadratic_relation_holds(ImageFamily family, std::size_t order);

}  // namespace qv0::opmatrix
