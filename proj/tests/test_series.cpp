#include "qv0/series.hpp"
#include "qv0/theta.hpp"

#include <doctest.h>

#include <random>

using namespace qv0;

namespace {

Series<ZRing> zseries(std::vector<long long> cs) {
    ZRing z;
    std::vector<BigInt> v(cs.begin(), cs.end());
    return Series<ZRing>(z, std::move(v));
}

// uniformly random small integer series for the ring-axiom properties
Series<ZRing> random_series(std::mt19937& rng, std::size_t order) {
    ZRing z;
    std::uniform_int_distribution<int> d(-9, 9);
    std::vector<BigInt> v(order);
    for (auto& c : v) c = d(rng);
    return Series<ZRing>(z, std::move(v));
}

}  // namespace

TEST_CASE("construction normalizes per ring") {
    auto s = zseries({1, 0, 2});
    CHECK(s.order() == 3);
    CHECK(s.coefficient(0) == 1);
    CHECK(s.coefficient(2) == 2);

    ModRing m4(4);
    Series<ModRing> t(m4, {m4.from_int(5)});
    CHECK(t.coefficient(0) == 1);

    DyadicRing dr;
    Series<DyadicRing> u(dr, {Dyadic(-3, 1)});
    CHECK(u.coefficient(0).num == -3);
    CHECK(u.coefficient(0).exp2 == 1);

    CHECK_THROWS_AS(Series<ZRing>(ZRing{}, {}), std::invalid_argument);
}

TEST_CASE("dyadic fractions must have power-of-two denominators") {
    CHECK(Dyadic::from_fraction(BigInt(-3), BigInt(2)) == Dyadic(-3, 1));
    CHECK(Dyadic::from_fraction(BigInt(6), BigInt(4)) == Dyadic(3, 1));
    CHECK(Dyadic::from_fraction(BigInt(5), BigInt(-1)) == Dyadic(-5, 0));
    CHECK_THROWS_AS(Dyadic::from_fraction(BigInt(1), BigInt(3)), std::domain_error);
    CHECK_THROWS_AS(Dyadic::from_fraction(BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("addition truncates to the smaller order") {
    auto a = zseries({1, 1});
    auto b = zseries({1, -1, 1});
    auto s = add(a, b);
    CHECK(s.order() == 2);
    CHECK(s.coefficient(0) == 2);
    CHECK(s.coefficient(1) == 0);

    ModRing m13(13);
    auto x = Series<ModRing>(m13, {12});
    auto y = Series<ModRing>(m13, {5});
    CHECK(add(x, y).coefficient(0) == 4);
}

TEST_CASE("multiplication and geometric inverse") {
    auto p = mul(zseries({1, 1}), zseries({1, -1, 0}));
    CHECK(p.coefficient(0) == 1);
    CHECK(p.coefficient(1) == 0);
    CHECK(p.coefficient(2) == -1);

    ZRing z;
    auto geo = invert(zseries({1, -1, 0, 0, 0, 0}));
    for (std::size_t i = 0; i < 6; ++i) CHECK(geo.coefficient(i) == 1);
    CHECK(equal_to_order(mul(zseries({1, -1, 0, 0, 0, 0}), geo),
                         Series<ZRing>::one(z, 6), 6));
}

TEST_CASE("inverse requires a unit constant term") {
    CHECK_THROWS_WITH_AS(invert(zseries({2, 1})), doctest::Contains("2"), std::domain_error);

    ModRing m27(27);
    auto phi_neg = theta::phi(m27, -1, 1, 100);
    CHECK(equal_to_order(mul(phi_neg, invert(phi_neg)), Series<ModRing>::one(m27, 100), 100));
    // 3 is not invertible mod 27
    CHECK_THROWS_AS(invert(Series<ModRing>(m27, {3, 1})), std::domain_error);
}

TEST_CASE("powers, including negative") {
    auto sq = pow(zseries({1, 1, 0}), 2);
    CHECK(sq.coefficient(1) == 2);
    CHECK(sq.coefficient(2) == 1);
    CHECK(equal_to_order(pow(zseries({1, 1, 0, 0}), 0), Series<ZRing>::one(ZRing{}, 4), 4));

    auto s = zseries({1, 3, -2, 5});
    CHECK(equal_to_order(pow(s, -1), invert(s), 4));

    ModRing m13(13);
    CHECK(equal_to_order(pow(theta::euler(m13, 1, 300), 13), theta::euler(m13, 13, 300), 300));
}

TEST_CASE("power substitution and shifts") {
    auto s = substitute_power(zseries({1, 1, 0}), 2);
    CHECK(s.coefficient(0) == 1);
    CHECK(s.coefficient(1) == 0);
    CHECK(s.coefficient(2) == 1);

    ZRing z;
    CHECK(equal_to_order(substitute_power(theta::psi(z, 1, 200), 4), theta::psi(z, 4, 200), 200));
    auto t = zseries({4, 5, 6});
    CHECK(equal_to_order(substitute_power(t, 1), t, 3));

    auto sh = shift(zseries({1, 1, 0}), 1);
    CHECK(sh.coefficient(0) == 0);
    CHECK(sh.coefficient(1) == 1);
    CHECK(sh.coefficient(2) == 1);
    CHECK(equal_to_order(shift(t, 0), t, 3));
}

TEST_CASE("reduction to a modulus") {
    ModRing m2(2);
    auto r = reduce_mod(zseries({3, -1}), m2);
    CHECK(r.coefficient(0) == 1);
    CHECK(r.coefficient(1) == 1);

    ZRing z;
    auto v = theta::v0(z, 5);
    CHECK(reduce_mod(v, ModRing(4)).coefficient(4) == 3);

    // reducing mod 12 then mod 3 equals reducing mod 3 directly
    auto s = zseries({35, -7, 100, 13});
    CHECK(equal_to_order(reduce_mod(reduce_mod(s, ModRing(12)), ModRing(3)),
                         reduce_mod(s, ModRing(3)), 4));
    CHECK_THROWS_AS(reduce_mod(reduce_mod(s, ModRing(12)), ModRing(5)), std::invalid_argument);
}

TEST_CASE("coefficient access beyond the order is an error") {
    auto s = zseries({1, 0, 2});
    CHECK(s.coefficient(2) == 2);
    CHECK_THROWS_AS(s.coefficient(3), std::out_of_range);
    CHECK_THROWS_AS(equal_to_order(s, s, 4), std::invalid_argument);
}

TEST_CASE("ring mismatch is rejected") {
    ModRing m5(5), m7(7);
    Series<ModRing> a(m5, {1}), b(m7, {1});
    CHECK_THROWS_AS(add(a, b), std::invalid_argument);
    CHECK_THROWS_AS(mul(a, b), std::invalid_argument);
}

TEST_CASE("ring axioms hold exactly for random series") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 25; ++trial) {
        auto a = random_series(rng, 24), b = random_series(rng, 24), c = random_series(rng, 24);
        CHECK(equal_to_order(add(add(a, b), c), add(a, add(b, c)), 24));
        CHECK(equal_to_order(mul(a, add(b, c)), add(mul(a, b), mul(a, c)), 24));
        CHECK(equal_to_order(mul(a, b), mul(b, a), 24));
    }
}

TEST_CASE("inverse is two-sided for unit-constant series") {
    std::mt19937 rng(7);
    ZRing z;
    for (int trial = 0; trial < 10; ++trial) {
        auto a = random_series(rng, 30);
        a.mutable_coeffs()[0] = (trial % 2) ? 1 : -1;
        auto inv = invert(a);
        CHECK(equal_to_order(mul(a, inv), Series<ZRing>::one(z, 30), 30));
        CHECK(equal_to_order(mul(inv, a), Series<ZRing>::one(z, 30), 30));
    }
}

TEST_CASE("substitutions compose multiplicatively") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        auto s = random_series(rng, 60);
        CHECK(equal_to_order(substitute_power(substitute_power(s, 2), 3),
                             substitute_power(s, 6), 60));
    }
}

TEST_CASE("reduction commutes with arithmetic") {
    std::mt19937 rng(4242);
    ModRing m9(9);
    for (int trial = 0; trial < 10; ++trial) {
        auto a = random_series(rng, 20), b = random_series(rng, 20);
        CHECK(equal_to_order(reduce_mod(mul(a, b), m9), mul(reduce_mod(a, m9), reduce_mod(b, m9)),
                             20));
        CHECK(equal_to_order(reduce_mod(add(a, b), m9), add(reduce_mod(a, m9), reduce_mod(b, m9)),
                             20));
        CHECK(equal_to_order(reduce_mod(pow(a, 3), m9), pow(reduce_mod(a, m9), 3), 20));
    }
}

TEST_CASE("dyadic elements stay normalized through arithmetic") {
    DyadicRing d;
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> num(-20, 20), ex(0, 4);
    for (int trial = 0; trial < 200; ++trial) {
        Dyadic a(num(rng), static_cast<unsigned>(ex(rng)));
        Dyadic b(num(rng), static_cast<unsigned>(ex(rng)));
        for (const Dyadic& v : {d.add(a, b), d.sub(a, b), d.mul(a, b), d.neg(a)}) {
            bool normalized = (v.num.is_zero() && v.exp2 == 0) || v.exp2 == 0 || (v.num & 1) == 1;
            CHECK(normalized);
        }
    }
}
