#include "qv0/opmatrix.hpp"

#include <doctest.h>

using namespace qv0;
using opmatrix::Base;
using opmatrix::DerivedName;
using opmatrix::ImageFamily;

TEST_CASE("base table rows match the recurrences") {
    opmatrix::Tables t;
    // row 7 of the first table
    std::vector<long long> row7 = {0, 0, 0, -7, 56, -112, 64, 0};
    for (std::size_t j = 1; j <= 8; ++j) CHECK(t.base_entry(Base::M, 7, j) == row7[j - 1]);
    // one recurrence step past the displayed rows: 2*(-32) - 56
    CHECK(t.base_entry(Base::M, 9, 6) == -120);
    CHECK(t.base_entry(Base::N, 2, 2) == 8);
    CHECK(t.base_entry(Base::P, 2, 2) == 32);
    // strict band
    CHECK(t.base_entry(Base::M, 3, 5).is_zero());
    CHECK_THROWS_AS(t.base_entry(Base::M, 0, 1), std::invalid_argument);
}

TEST_CASE("derived matrices select the surviving rows") {
    opmatrix::Tables t;
    CHECK(t.derived_entry(DerivedName::A, 1, 1) == 1);
    CHECK(t.derived_entry(DerivedName::A, 1, 2) == 0);
    CHECK(t.derived_entry(DerivedName::A, 2, 1) == 9);  // 2*1 - (-7)
    CHECK(t.derived_entry(DerivedName::B, 2, 2) == 1);
    CHECK(t.derived_entry(DerivedName::B, 1, 3) == 0);
    CHECK(t.derived_entry(DerivedName::C, 2, 1) == 18);
    CHECK(t.derived_entry(DerivedName::D, 2, 2) == 4);
}

TEST_CASE("coefficient vectors evolve exactly") {
    opmatrix::Tables t;
    CHECK(t.x(1) == std::vector<Dyadic>{Dyadic(-3, 1), Dyadic(2)});
    // hand contraction of the first entry: -3/2 + 2*9 = 33/2
    CHECK(t.x(2)[0] == Dyadic(33, 1));
    CHECK(t.x(2) == std::vector<Dyadic>{Dyadic(33, 1), Dyadic(-240), Dyadic(864), Dyadic(-1152),
                                        Dyadic(512)});
    CHECK(t.x(3) == std::vector<Dyadic>{Dyadic(33, 1), Dyadic(-1104), Dyadic(5696),
                                        Dyadic(-8704), Dyadic(4096)});
    auto y1 = t.y(1);
    REQUIRE(y1.size() == 5);
    CHECK(y1[0] == Dyadic(33));
    CHECK(y1[1] == Dyadic(1920));
    auto z1 = t.z(1);
    CHECK(z1[0] == Dyadic(33));
    CHECK(z1[1] == Dyadic(35328));
}

TEST_CASE("2-adic valuation on integers and dyadic rationals") {
    CHECK(val2(BigInt(-120)) == 3);
    CHECK(val2(BigInt(128)) == 7);
    CHECK_FALSE(val2(BigInt(0)).has_value());  // +infinity
    CHECK(val2(Dyadic(33, 1)) == -1);
    CHECK(val2(Dyadic(2)) == 1);
    opmatrix::Tables t;
    CHECK(val2(t.base_entry(Base::M, 8, 8)) == 7);       // 2k-j-1 with equality
    CHECK(val2(t.x(2)[1]) == 4);                          // 3a+k at a=k=1
    CHECK(val2(t.y(1)[1]) == 7);                          // 3a+4 at a=1
}

TEST_CASE("Huffing images over all four bases") {
    opmatrix::Tables t;
    CHECK(opmatrix::huffing_image_holds(t, ImageFamily::Zeta, 2, 400));
    CHECK(opmatrix::huffing_image_holds(t, ImageFamily::Mu, 2, 400));
    CHECK(opmatrix::huffing_image_holds(t, ImageFamily::Xi, 3, 200));
    CHECK(opmatrix::huffing_image_holds(t, ImageFamily::Rho, 1, 200));
}

TEST_CASE("cleared quadratic relations hold far past the defining order") {
    for (auto fam : {ImageFamily::Zeta, ImageFamily::Xi, ImageFamily::Mu, ImageFamily::Rho})
        CHECK(opmatrix::quadratic_relation_holds(fam, 600));
}
