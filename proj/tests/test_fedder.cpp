#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ffrt/errors.hpp"
#include "ffrt/fedder.hpp"
#include "ffrt/parse.hpp"

using namespace ffrt;

TEST_CASE("principal examples") {
    auto r2 = Ring::make(Prime(2), 2);
    PurityVerdict xy = fedder_principal(parse_poly("x*y", r2));
    CHECK(xy.f_pure);
    REQUIRE(xy.witness.has_value());
    CHECK(*xy.witness == Monomial{1, 1});

    PurityVerdict xx = fedder_principal(parse_poly("x^2", r2));
    CHECK_FALSE(xx.f_pure);
    CHECK_FALSE(xx.witness.has_value());

    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        for (std::size_t n : {2u, 3u, 4u}) {
            auto r = Ring::make(Prime(p), n);
            Poly f = Poly::from_monomial(r, Monomial(n, 1));
            PurityVerdict v = fedder_principal(f);
            CHECK(v.f_pure);
            CHECK(*v.witness == Monomial(n, static_cast<Exp>(p - 1)));
        }
    }
}

TEST_CASE("principal contract") {
    auto r = Ring::make(Prime(3), 1);
    CHECK_THROWS_AS(fedder_principal(Poly::zero(r)), domain_error);
    CHECK_THROWS_AS(fedder_principal(parse_poly("1+x", r)), domain_error);
}

TEST_CASE("monomial-ideal examples") {
    Prime p3(3);
    PurityVerdict principal = fedder_monomial_ideal({Monomial{1}}, p3);
    CHECK(principal.f_pure);
    CHECK(*principal.witness == Monomial{2}); // colon is (x^2), outside (x^3)

    Prime p2(2);
    PurityVerdict squares = fedder_monomial_ideal({Monomial{2, 0}, Monomial{0, 2}}, p2);
    CHECK_FALSE(squares.f_pure);

    PurityVerdict xy = fedder_monomial_ideal({Monomial{1, 1}}, p2);
    CHECK(xy.f_pure);
    CHECK(*xy.witness == *fedder_principal(parse_poly("x*y", Ring::make(p2, 2))).witness);
}

TEST_CASE("colon generators multiply back into the bracket ideal") {
    std::mt19937 rng(4321);
    for (int trial = 0; trial < 50; ++trial) {
        std::uint64_t p = trial % 2 ? 2 : 3;
        std::size_t n = 1 + trial % 3;
        std::size_t count = 1 + trial % 3;
        std::vector<Monomial> gens;
        for (std::size_t g = 0; g < count; ++g) {
            Monomial m(n);
            bool nonzero = false;
            for (Exp& x : m) {
                x = rng() % 3;
                nonzero |= x > 0;
            }
            if (!nonzero) m[rng() % n] = 1;
            gens.push_back(std::move(m));
        }

        std::vector<Monomial> bracket;
        for (const Monomial& g : gens) {
            Monomial gp(g);
            for (Exp& x : gp) x *= static_cast<Exp>(p);
            bracket.push_back(std::move(gp));
        }

        for (const Monomial& c : frobenius_colon(gens, p)) {
            for (const Monomial& g : gens) {
                Monomial prod(c);
                for (std::size_t v = 0; v < prod.size(); ++v) prod[v] += g[v];
                CHECK(monomial_ideal_contains(bracket, prod));
            }
        }
    }
}

TEST_CASE("principal and ideal routes agree on random monomials") {
    std::mt19937 rng(2024);
    int checked = 0;
    while (checked < 100) {
        std::uint64_t p = (checked % 3 == 0) ? 2 : (checked % 3 == 1 ? 3 : 5);
        std::size_t n = 1 + checked % 3;
        Monomial m(n);
        bool nonzero = false;
        for (Exp& x : m) {
            x = rng() % 4;
            nonzero |= x > 0;
        }
        if (!nonzero) continue;
        ++checked;

        auto r = Ring::make(Prime(p), n);
        PurityVerdict a = fedder_principal(Poly::from_monomial(r, m));
        PurityVerdict b = fedder_monomial_ideal({m}, Prime(p));
        CHECK(a.f_pure == b.f_pure);
        if (a.f_pure) {
            REQUIRE(a.witness.has_value());
            REQUIRE(b.witness.has_value());
            CHECK(*a.witness == *b.witness);
        }
    }
}

TEST_CASE("monomial ideal plumbing") {
    // (x^2, y^3) : x y = (x, y^2)
    std::vector<Monomial> colon = monomial_colon_by_monomial({Monomial{2, 0}, Monomial{0, 3}}, Monomial{1, 1});
    CHECK(colon == std::vector<Monomial>{Monomial{1, 0}, Monomial{0, 2}});

    // (x) intersect (y) = (xy)
    CHECK(monomial_intersect({Monomial{1, 0}}, {Monomial{0, 1}}) == std::vector<Monomial>{Monomial{1, 1}});

    CHECK(monomial_ideal_contains({Monomial{1, 0}}, Monomial{2, 1}));
    CHECK_FALSE(monomial_ideal_contains({Monomial{1, 0}}, Monomial{0, 5}));

    CHECK_THROWS_AS(fedder_monomial_ideal({Monomial{0, 0}}, Prime(2)), domain_error);
    CHECK_THROWS_AS(fedder_monomial_ideal({}, Prime(2)), domain_error);
}
