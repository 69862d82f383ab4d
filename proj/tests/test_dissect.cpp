#include "qv0/dissect.hpp"

#include <doctest.h>

#include <random>

using namespace qv0;

namespace {
Series<ZRing> zseries(std::vector<long long> cs) {
    std::vector<BigInt> v(cs.begin(), cs.end());
    return Series<ZRing>(ZRing{}, std::move(v));
}
}  // namespace

TEST_CASE("huffing keeps even exponents in place") {
    auto h = dissect::huffing(zseries({1, 1, 1, 1}));
    CHECK(h.coefficient(0) == 1);
    CHECK(h.coefficient(1) == 0);
    CHECK(h.coefficient(2) == 1);
    CHECK(h.coefficient(3) == 0);
    CHECK(equal_to_order(dissect::huffing(h), h, 4));
}

TEST_CASE("compressed extraction") {
    auto e = dissect::extract(zseries({1, 2, 3, 4}), {2, 1});
    CHECK(e.order() == 2);
    CHECK(e.coefficient(0) == 2);
    CHECK(e.coefficient(1) == 4);
    CHECK_THROWS_AS(dissect::extract(zseries({1, 2}), {2, 5}), std::out_of_range);
    CHECK_THROWS_AS(dissect::extract(zseries({1, 2}), {2, 3}), std::out_of_range);
}

TEST_CASE("even part of psi matches the triangular indicator") {
    ZRing z;
    auto even = dissect::extract(theta::psi(z, 1, 400), {2, 0});
    for (std::size_t n = 0; n < even.order(); ++n) {
        bool tri = is_triangular(BigInt(2 * n));
        CHECK(even.coefficient(n) == (tri ? 1 : 0));
    }
}

TEST_CASE("extractions reassemble the original series") {
    std::mt19937 rng(5150);
    std::uniform_int_distribution<int> d(-50, 50);
    ZRing z;
    std::vector<BigInt> cs(97);
    for (auto& c : cs) c = d(rng);
    Series<ZRing> s(z, cs);
    for (std::size_t p : {2, 3, 5}) {
        std::vector<BigInt> rebuilt(s.order(), 0);
        for (std::size_t r = 0; r < p; ++r) {
            auto part = dissect::extract(s, {p, r});
            for (std::size_t i = 0; i < part.order(); ++i)
                rebuilt[p * i + r] = part.coefficient(i);
        }
        CHECK(equal_to_order(Series<ZRing>(z, rebuilt), s, s.order()));
    }
}

TEST_CASE("huffing is compressed extraction re-spread") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> d(-9, 9);
    ZRing z;
    std::vector<BigInt> cs(61);
    for (auto& c : cs) c = d(rng);
    Series<ZRing> s(z, cs);
    CHECK(equal_to_order(dissect::huffing(s),
                         substitute_power(dissect::extract(s, {2, 0}), 2), s.order()));
    // linearity
    std::vector<BigInt> ct(61);
    for (auto& c : ct) c = d(rng);
    Series<ZRing> t(z, ct);
    CHECK(equal_to_order(dissect::huffing(add(s, t)),
                         add(dissect::huffing(s), dissect::huffing(t)), 61));
}

TEST_CASE("extraction and huffing commute with reduction") {
    std::mt19937 rng(808);
    std::uniform_int_distribution<int> d(-99, 99);
    ZRing z;
    ModRing m(8);
    std::vector<BigInt> cs(50);
    for (auto& c : cs) c = d(rng);
    Series<ZRing> s(z, cs);
    CHECK(equal_to_order(reduce_mod(dissect::huffing(s), m),
                         dissect::huffing(reduce_mod(s, m)), 50));
    CHECK(equal_to_order(reduce_mod(dissect::extract(s, {3, 1}), m),
                         dissect::extract(reduce_mod(s, m), {3, 1}),
                         dissect::extract(s, {3, 1}).order()));
}

TEST_CASE("prime dissections of psi") {
    CHECK(dissect::psi_dissection_holds(3, 300));
    CHECK(dissect::psi_dissection_holds(5, 300));
    CHECK(dissect::psi_dissection_holds(7, 300));
    // shift residues for p = 7 are {0, 1, 3} and the tail residue is 6
    std::vector<unsigned long long> shifts;
    for (unsigned long long k = 0; 2 * k <= 7 - 3; ++k) shifts.push_back((k * k + k) / 2 % 7);
    CHECK(shifts == std::vector<unsigned long long>{0, 1, 3});
    CHECK((7ull * 7 - 1) / 8 % 7 == 6);
}

TEST_CASE("prime dissections of the cube-free theta quotient") {
    CHECK(dissect::f12_dissection_holds(5, 300));
    CHECK(dissect::f12_dissection_holds(7, 300));
    CHECK_THROWS_AS(dissect::f12_dissection_holds(9, 100), std::invalid_argument);
}

TEST_CASE("triangular-number coefficient families") {
    // no m(m+1)/2 is congruent to 2 mod 3
    for (long long m = 0; m < 1000; ++m) CHECK(m * (m + 1) / 2 % 3 != 2);
    ZRing z;
    auto a = theta::psi(z, 1, 9 * 500 + 2);
    for (std::size_t n = 0; n < 500; ++n) CHECK(a.coefficient(9 * n + 1) == a.coefficient(n));
    CHECK(a.coefficient(0) == 1);

    CHECK(dissect::triangular_coefficient_properties(3, 0, 500));
    CHECK(dissect::triangular_coefficient_properties(3, 1, 500));
    CHECK(dissect::triangular_coefficient_properties(5, 0, 500));
    CHECK(dissect::triangular_coefficient_properties(5, 1, 500));
}
