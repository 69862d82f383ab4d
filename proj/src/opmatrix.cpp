#include "qv0/opmatrix.hpp"

#include "qv0/dissect.hpp"
#include "qv0/theta.hpp"

#include <stdexcept>

namespace qv0::opmatrix {

namespace {
const BigInt kZero = 0;
}

MatrixTable::MatrixTable(Base base) {
    switch (base) {
        case Base::M: lead_ = 2; trail_ = -1; seed1_ = {1}; seed2_ = {-1, 2}; break;
        case Base::N: lead_ = 4; trail_ = 1; seed1_ = {2}; seed2_ = {1, 8}; break;
        case Base::P: lead_ = 8; trail_ = 1; seed1_ = {4}; seed2_ = {1, 32}; break;
    }
}

void MatrixTable::extend(std::size_t rows) const {
    if (rows_.empty()) {
        rows_.push_back({BigInt(seed1_[0])});
        rows_.push_back({BigInt(seed2_[0]), BigInt(seed2_[1])});
    }
    while (rows_.size() < rows) {
        std::size_t i = rows_.size() + 1;  // 1-based row being built
        const auto& prev1 = rows_[i - 2];
        const auto& prev2 = rows_[i - 3];
        std::vector<BigInt> row(i);
        row[0] = 0;
        for (std::size_t j = 2; j <= i; ++j) {
            BigInt v = lead_ * prev1[j - 2];
            if (j - 2 < prev2.size()) v += trail_ * prev2[j - 2];
            row[j - 1] = std::move(v);
        }
        rows_.push_back(std::move(row));
    }
}

const BigInt& MatrixTable::entry(std::size_t i, std::size_t j) const {
    if (i == 0 || j == 0) throw std::invalid_argument("matrix indices are 1-based");
    if (j > i) return kZero;
    extend(i);
    return rows_[i - 1][j - 1];
}

const BigInt& Tables::base_entry(Base which, std::size_t i, std::size_t j) const {
    switch (which) {
        case Base::M: return m_.entry(i, j);
        case Base::N: return n_.entry(i, j);
        case Base::P: return p_.entry(i, j);
    }
    throw std::logic_error("unreachable base table");
}

const BigInt& Tables::odd_row_entry(Base which, std::size_t i, std::size_t j) const {
    return base_entry(which, 2 * i - 1, j + i - 1);
}

BigInt Tables::derived_entry(DerivedName which, std::size_t i, std::size_t j) const {
    if (i == 0 || j == 0) throw std::invalid_argument("matrix indices are 1-based");
    switch (which) {
        case DerivedName::A: return m_.entry(8 * i - 7, j + 4 * i - 4);
        case DerivedName::C: return n_.entry(8 * i - 7, j + 4 * i - 4);
        case DerivedName::B:
        case DerivedName::D: {
            if (i == 1 || j == 1) return BigInt(i == 1 && j == 1 ? 1 : 0);
            const MatrixTable& t = which == DerivedName::B ? m_ : p_;
            return t.entry(i - 1, j - 1);
        }
    }
    throw std::logic_error("unreachable derived table");
}

std::vector<Dyadic> Tables::apply(const std::vector<Dyadic>& v, DerivedName which) const {
    DyadicRing d;
    std::size_t s = v.size();
    // row i of A/C reaches columns up to 4i-3; B/D are lower triangular
    std::size_t cols =
        (which == DerivedName::A || which == DerivedName::C) ? 4 * s - 3 : s;
    std::vector<Dyadic> out(cols, Dyadic());
    for (std::size_t j = 1; j <= s; ++j) {
        if (d.is_zero(v[j - 1])) continue;
        for (std::size_t k = 1; k <= cols; ++k) {
            BigInt e = derived_entry(which, j, k);
            if (e.is_zero()) continue;
            d.add_assign(out[k - 1], Dyadic(v[j - 1].num * e, v[j - 1].exp2));
        }
    }
    while (out.size() > 1 && d.is_zero(out.back())) out.pop_back();
    return out;
}

const std::vector<Dyadic>& Tables::x(unsigned alpha) {
    if (alpha == 0) throw std::invalid_argument("vector index alpha is 1-based");
    if (x_memo_.empty()) x_memo_.push_back({Dyadic(-3, 1), Dyadic(2)});
    while (x_memo_.size() < alpha) {
        std::size_t next = x_memo_.size() + 1;
        DerivedName step = (next % 2 == 0) ? DerivedName::A : DerivedName::B;
        x_memo_.push_back(apply(x_memo_.back(), step));
    }
    return x_memo_[alpha - 1];
}

std::vector<Dyadic> Tables::y(unsigned alpha) { return apply(x(2 * alpha - 1), DerivedName::C); }

std::vector<Dyadic> Tables::z(unsigned alpha) { return apply(y(alpha), DerivedName::D); }

bool huffing_image_holds(Tables& tables, ImageFamily family, unsigned i, std::size_t order) {
    if (i == 0) throw std::invalid_argument("image index i must be >= 1");
    ZRing zr;
    const auto phi_q = theta::phi(zr, 1, 1, order);
    const auto phi_q2 = theta::phi(zr, 1, 2, order);
    const auto phi_q4 = theta::phi(zr, 1, 4, order);
    const auto phi_nq2 = theta::phi(zr, -1, 2, order);

    Series<ZRing> lhs = Series<ZRing>::one(zr, order);
    Series<ZRing> rhs = Series<ZRing>::zero(zr, order);
    switch (family) {
        case ImageFamily::Zeta: {
            lhs = dissect::huffing(pow(phi_q, 2 * i - 1));
            for (unsigned j = 1; j <= i; ++j) {
                const BigInt& a = tables.odd_row_entry(Base::M, i, j);
                rhs = add(rhs, scale(mul(pow(phi_q4, 2 * j - 1), pow(phi_nq2, 2 * i - 2 * j)), a));
            }
            break;
        }
        case ImageFamily::Xi: {
            lhs = dissect::huffing(mul(pow(phi_q2, 2 * i + 1), pow(phi_q, 2 * i)));
            for (unsigned j = 1; j <= i; ++j) {
                const BigInt& m = tables.base_entry(Base::M, i, j);
                rhs = add(rhs, scale(mul(pow(phi_q2, 4 * j + 1), pow(phi_nq2, 4 * i - 4 * j)), m));
            }
            break;
        }
        case ImageFamily::Mu: {
            const auto psi_q8 = theta::psi(zr, 8, order);
            lhs = dissect::huffing(shift(pow(phi_q, 2 * i - 1), 1));
            for (unsigned j = 1; j <= i; ++j) {
                const BigInt& c = tables.odd_row_entry(Base::N, i, j);
                rhs = add(rhs, scale(shift(mul(pow(psi_q8, 2 * j - 1),
                                               pow(phi_nq2, 2 * i - 2 * j)),
                                           2 * j),
                                     c));
            }
            break;
        }
        case ImageFamily::Rho: {
            const auto psi_q4 = theta::psi(zr, 4, order);
            lhs = dissect::huffing(shift(mul(pow(psi_q4, 2 * i + 1), pow(phi_q, 2 * i)), i));
            for (unsigned j = 1; j <= i; ++j) {
                const BigInt& p = tables.base_entry(Base::P, i, j);
                rhs = add(rhs, scale(shift(mul(pow(psi_q4, 4 * j + 1),
                                               pow(phi_nq2, 4 * i - 4 * j)),
                                           2 * j),
                                     p));
            }
            break;
        }
    }
    return equal_to_order(lhs, rhs, order);
}

bool quadratic_relation_holds(ImageFamily family, std::size_t order) {
    ZRing zr;
    const auto phi_nq = theta::phi(zr, -1, 1, order);
    const auto phi_nq2 = theta::phi(zr, -1, 2, order);
    Series<ZRing> rel = Series<ZRing>::zero(zr, order);
    switch (family) {
        case ImageFamily::Zeta: {
            const auto phi_q4 = theta::phi(zr, 1, 4, order);
            rel = add(sub(mul(phi_nq, phi_nq),
                          scale(mul(phi_nq, phi_q4), BigInt(2))),
                      mul(phi_nq2, phi_nq2));
            break;
        }
        case ImageFamily::Xi: {
            const auto phi_q2 = theta::phi(zr, 1, 2, order);
            rel = add(sub(pow(phi_nq, 4),
                          scale(mul(pow(phi_nq, 2), pow(phi_q2, 2)), BigInt(2))),
                      pow(phi_nq2, 4));
            break;
        }
        case ImageFamily::Mu: {
            const auto psi_q8 = theta::psi(zr, 8, order);
            rel = sub(add(mul(phi_nq, phi_nq),
                          scale(shift(mul(psi_q8, phi_nq), 1), BigInt(4))),
                      mul(phi_nq2, phi_nq2));
            break;
        }
        case ImageFamily::Rho: {
            const auto psi_q4 = theta::psi(zr, 4, order);
            rel = sub(add(pow(phi_nq, 4),
                          scale(shift(mul(pow(psi_q4, 2), pow(phi_nq, 2)), 1), BigInt(8))),
                      pow(phi_nq2, 4));
            break;
        }
    }
    return is_zero_to_order(rel, order);
}

}  // namespace qv0::opmatrix
