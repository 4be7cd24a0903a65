#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ffrt/errors.hpp"
#include "ffrt/frobenius.hpp"
#include "ffrt/parse.hpp"
#include "test_util.hpp"

using namespace ffrt;
using ffrt::testing::random_poly;

TEST_CASE("index and monomial are inverse bijections") {
    auto r = Ring::make(Prime(2), 2);
    FrobeniusBasis basis(r, 1);
    CHECK(basis.size() == 4);
    CHECK(basis.rank_count() == 4);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        CHECK(basis.index(basis.monomial(i)) == i);
    }
    CHECK(basis.index(Monomial{0, 0}) == 0);
}

TEST_CASE("one-variable rank equals the exponent") {
    auto r = Ring::make(Prime(3), 1);
    FrobeniusBasis basis(r, 1);
    CHECK(basis.index(Monomial{2}) == 2);
    CHECK_THROWS_AS(basis.index(Monomial{3}), domain_error);
}

TEST_CASE("rank count uses exact arithmetic") {
    auto r = Ring::make(Prime(5), 4);
    FrobeniusBasis basis(r, 8);
    CHECK(basis.rank_count() == big_pow(big_pow(5, 8), 4));
}

TEST_CASE("coordinate routing") {
    auto r = Ring::make(Prime(3), 2);
    FrobeniusBasis basis(r, 1);

    SUBCASE("x^q lands on the empty profile") {
        auto coords = basis.coordinates(parse_poly("x^3", r));
        REQUIRE(coords.size() == 1);
        CHECK(coords.begin()->first == Monomial{0, 0});
        CHECK(coords.begin()->second == parse_poly("x", r));
    }
    SUBCASE("a bare variable is its own profile") {
        auto coords = basis.coordinates(parse_poly("x", r));
        REQUIRE(coords.size() == 1);
        CHECK(coords.begin()->first == Monomial{1, 0});
        CHECK(coords.begin()->second == Poly::constant(r, 1));
    }
    SUBCASE("worked two-term decomposition") {
        auto coords = basis.coordinates(parse_poly("x^3 + x^2*y", r));
        REQUIRE(coords.size() == 2);
        CHECK(coords.at(Monomial{0, 0}) == parse_poly("x", r));
        CHECK(coords.at(Monomial{2, 1}) == Poly::constant(r, 1));
    }
}

TEST_CASE("reconstruction, linearity and degree bound") {
    std::mt19937 rng(1234);
    for (std::uint64_t p : {2ull, 3ull}) {
        for (std::uint32_t e : {1u, 2u}) {
            auto r = Ring::make(Prime(p), 2);
            FrobeniusBasis basis(r, e);
            std::uint64_t q = basis.q();
            for (int i = 0; i < 40; ++i) {
                Poly g = random_poly(rng, r, 5, static_cast<Exp>(2 * q));
                Poly h = random_poly(rng, r, 5, static_cast<Exp>(2 * q));

                Poly rebuilt = Poly::zero(r);
                for (const auto& [rho, piece] : basis.coordinates(g)) {
                    rebuilt = rebuilt + pow(piece, q) * Poly::from_monomial(r, rho);
                    CHECK(piece.degree() * q <= g.degree());
                }
                CHECK(rebuilt == g);

                auto sum_coords = basis.coordinates(g + h);
                auto gc = basis.coordinates(g);
                auto hc = basis.coordinates(h);
                for (const auto& [rho, piece] : sum_coords) {
                    Poly expected = Poly::zero(r);
                    if (auto it = gc.find(rho); it != gc.end()) expected = expected + it->second;
                    if (auto it = hc.find(rho); it != hc.end()) expected = expected + it->second;
                    CHECK(piece == expected);
                }
            }
        }
    }
}
