#include "qv0/theta.hpp"

#include <doctest.h>

using namespace qv0;

namespace {
std::vector<long long> ints(const Series<ZRing>& s, std::size_t n) {
    std::vector<long long> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(s.coefficient(i).convert_to<long long>());
    return out;
}
}  // namespace

TEST_CASE("pentagonal expansion of the Euler products") {
    ZRing z;
    CHECK(ints(theta::euler(z, 1, 8), 8) == std::vector<long long>{1, -1, -1, 0, 0, 1, 0, 1});
    CHECK(ints(theta::euler(z, 2, 5), 5) == std::vector<long long>{1, 0, -1, 0, -1});
    for (unsigned k : {1u, 2u, 3u})
        CHECK(equal_to_order(theta::euler(z, k, 500), theta::euler_product_form(z, k, 500), 500));
}

TEST_CASE("psi and phi sum forms") {
    ZRing z;
    CHECK(ints(theta::psi(z, 1, 8), 8) == std::vector<long long>{1, 1, 0, 1, 0, 0, 1, 0});
    CHECK(ints(theta::phi(z, 1, 1, 5), 5) == std::vector<long long>{1, 2, 0, 0, 2});
    CHECK(ints(theta::phi(z, -1, 1, 5), 5) == std::vector<long long>{1, -2, 0, 0, 2});

    // psi(q) (q;q^2)_inf = (q^2;q^2)_inf and the two phi product forms
    CHECK(equal_to_order(mul(theta::psi(z, 1, 500),
                             theta::pochhammer(z, 1, 1, 2, std::nullopt, 500)),
                         theta::euler(z, 2, 500), 500));
    CHECK(equal_to_order(theta::phi(z, 1, 1, 500),
                         mul(pow(theta::pochhammer(z, -1, 1, 2, std::nullopt, 500), 2),
                             theta::euler(z, 2, 500)),
                         500));
}

TEST_CASE("two-variable theta specializations") {
    ZRing z;
    CHECK(equal_to_order(theta::f(z, {1, 1}, {1, 1}, 300), theta::phi(z, 1, 1, 300), 300));
    CHECK(ints(theta::f(z, {1, 1}, {1, 2}, 8), 8) ==
          std::vector<long long>{1, 1, 1, 0, 0, 1, 0, 1});
    // psi(q) = f(q^3, q^6) + q psi(q^9)
    CHECK(equal_to_order(theta::psi(z, 1, 500),
                         add(theta::f(z, {1, 3}, {1, 6}, 500), shift(theta::psi(z, 9, 500), 1)),
                         500));
    CHECK_THROWS_AS(theta::f(z, {1, 0}, {1, 2}, 10), std::invalid_argument);
    CHECK_THROWS_AS(theta::f(z, {2, 1}, {1, 2}, 10), std::invalid_argument);
}

TEST_CASE("finite and infinite q-Pochhammer products") {
    ZRing z;
    // (-q; q^2)_2 = (1+q)(1+q^3)
    CHECK(ints(theta::pochhammer(z, -1, 1, 2, 2, 6), 6) ==
          std::vector<long long>{1, 1, 0, 1, 1, 0});
    // (q;q^2)_inf psi(q) = f_2
    CHECK(equal_to_order(mul(theta::pochhammer(z, 1, 1, 2, std::nullopt, 300),
                             theta::psi(z, 1, 300)),
                         theta::euler(z, 2, 300), 300));
    // (-q^2;q^4)^4_inf (q^8;q^8)_inf = 1 + 4q^2 + 6q^4 + ... (the q^4
    // coefficient is 2 v0(4) = 6 by the even-part identity)
    auto prod = mul(pow(theta::pochhammer(z, -1, 2, 4, std::nullopt, 8), 4),
                    theta::euler(z, 8, 8));
    CHECK(ints(prod, 6) == std::vector<long long>{1, 0, 4, 0, 6, 0});
}

TEST_CASE("counting series first values and parity facts") {
    ZRing z;
    auto v = theta::v0(z, 40);
    CHECK(ints(v, 6) == std::vector<long long>{1, 1, 2, 2, 3, 4});
    CHECK(v.coefficient(4) % 4 == 3);   // signed square pattern at n = 1^2
    CHECK(v.coefficient(13) == 20);     // forces modulus 20, not 40, below
    ModRing m20(20);
    auto vm = theta::v0(m20, 40);
    CHECK(vm.coefficient(13) == 0);
    CHECK(vm.coefficient(37) == 0);
}

TEST_CASE("naive expansion agrees with the incremental recurrence") {
    ZRing z;
    auto fast = theta::v0(z, 400);
    auto naive = theta::v0_oracle(400);
    CHECK(naive[0] == 1);
    CHECK(naive[1] == 1);
    for (std::size_t n = 0; n < 400; ++n) CHECK(fast.coefficient(n) == naive[n]);
}

TEST_CASE("modular expansion equals reduced exact expansion") {
    ZRing z;
    auto exact = theta::v0(z, 2001);
    for (std::uint64_t m : {4, 13, 25, 27, 40}) {
        ModRing r(m);
        CHECK(equal_to_order(theta::v0(r, 2001), reduce_mod(exact, r), 2001));
    }
}

TEST_CASE("even part of the counting series in closed form") {
    CHECK(theta::even_part_identity_holds(1000));
}
