#include "doctest.h"

#include "oracles.hpp"

using namespace sphtrop;
using oracle::Index;

namespace {

PuiseuxPoly P(const std::string& s) { return parsePuiseux(s); }

RatVector rv(std::initializer_list<long> e) { return makeRatVector(e); }

std::vector<Rational> rats(std::initializer_list<long> e)
{
    std::vector<Rational> out;
    for (long x : e) out.emplace_back(x);
    return out;
}

PuiseuxPoly nonzeroPuiseux(std::mt19937_64& rng)
{
    for (;;)
        if (PuiseuxPoly p = oracle::randomPuiseux(rng); !p.isZero()) return p;
}

}   // namespace

TEST_CASE("torus tropicalization")
{
    CHECK(equalVectors(tropTorus({P("t^2"), P("t^-1")}), rv({2, -1})));
    CHECK(equalVectors(tropTorus({P("1 + t"), P("1 - t")}), rv({0, 0})));
    CHECK_THROWS_AS(tropTorus({P("0"), P("t")}), MembershipError);

    std::mt19937_64 rng(31);
    for (int k = 0; k < 100; ++k)
    {
        std::vector<PuiseuxPoly> x, y, xy;
        for (int i = 0; i < 3; ++i)
        {
            x.push_back(nonzeroPuiseux(rng));
            y.push_back(nonzeroPuiseux(rng));
            xy.push_back(x.back() * y.back());
        }
        CHECK(equalVectors(tropTorus(xy), RatVector(tropTorus(x) + tropTorus(y))));
    }
}

TEST_CASE("SL2/U tropicalization")
{
    CHECK(equalVectors(tropSL2ModU(P("t"), P("t^2")), rv({1})));
    CHECK(equalVectors(tropSL2ModU(P("1 + t"), P("t^-1")), rv({-1})));
    CHECK(equalVectors(tropSL2ModU(P("0"), P("t^3")), rv({3})));
    CHECK_THROWS_AS(tropSL2ModU(P("0"), P("0")), MembershipError);
}

TEST_CASE("invariant factor examples")
{
    CHECK(invariantFactorValuations(parsePuiseuxMatrix("[[t,0],[0,t^2]]")) == rats({2, 1}));
    CHECK(invariantFactorValuations(parsePuiseuxMatrix("[[t+1,t],[t,0]]")) == rats({2, 0}));
    CHECK(invariantFactorValuations(parsePuiseuxMatrix("[[1,0],[0,1]]")) == rats({0, 0}));
    CHECK(invariantFactorValuations(parsePuiseuxMatrix("[[t^-1+1,t^-1],[t^-1,0]]")) == rats({-1, -1}));
    CHECK_THROWS_AS(invariantFactorValuations(parsePuiseuxMatrix("[[1,t],[1,t]]")), MembershipError);
}

TEST_CASE("invariant factors of diagonal matrices are the sorted exponents")
{
    std::mt19937_64 rng(37);
    for (int k = 0; k < 100; ++k)
    {
        const Index n = oracle::uniform(rng, 1, 4);
        PuiseuxMatrix m = PuiseuxMatrix::Zero(n, n);
        std::vector<Rational> exps;
        for (Index i = 0; i < n; ++i)
        {
            exps.push_back(Rational(oracle::uniform(rng, -6, 6)) / oracle::uniform(rng, 1, 3));
            m(i, i) = PuiseuxPoly::monomial(Rational(oracle::uniform(rng, 1, 4)), exps.back());
        }
        std::sort(exps.begin(), exps.end(), std::greater<>());
        CHECK(invariantFactorValuations(m) == exps);
    }
}

TEST_CASE("invariant factors agree with elimination and are Cartan invariants")
{
    std::mt19937_64 rng(41);
    for (int k = 0; k < 80; ++k)
    {
        const Index n = oracle::uniform(rng, 1, 4);
        const PuiseuxMatrix m = oracle::randomInvertible(rng, n);
        const auto mu = invariantFactorValuations(m);
        CHECK(mu == oracle::eliminationInvariantFactors(m));
        CHECK(std::is_sorted(mu.begin(), mu.end(), std::greater<>()));
        CHECK(std::accumulate(mu.begin(), mu.end(), Rational(0)) == determinant(m).valuation().value());
        CHECK(mu.back() == minMinorValuation(m, 1).value());
        const PuiseuxMatrix g = oracle::randomIntegralUnit(rng, n), h = oracle::randomIntegralUnit(rng, n);
        CHECK(invariantFactorValuations(PuiseuxMatrix(g * m * h)) == mu);
    }
}

TEST_CASE("tropical points of branches")
{
    const SphericalSpace gl2 = builtinSpace("gln", 2);
    const CurveBranch atZero{P("t+1"), P("t"), P("t"), P("0")};
    CHECK(equalVectors(tropPoint(gl2, atZero), rv({2, 0})));
    auto ray = tropBranchRay(gl2, atZero);
    CHECK(equalVectors(ray.ray, makeIntVector({1, 0})));
    CHECK(ray.multiplicity == 2);
    ray = tropBranchRay(gl2, {P("t^-1+1"), P("t^-1"), P("t^-1"), P("0")});
    CHECK(equalVectors(ray.ray, makeIntVector({-1, -1})));
    CHECK(ray.multiplicity == 1);

    CHECK(equalVectors(tropPoint(builtinSpace("torus", 2), {P("t"), P("t")}), rv({1, 1})));
    CHECK(equalVectors(tropPoint(builtinSpace("sl2_u"), {P("t^2"), P("t^2")}), rv({2})));
    ray = tropBranchRay(builtinSpace("torus", 2), {P("t"), P("-1 - t")});
    CHECK(equalVectors(ray.ray, makeIntVector({1, 0})));
    CHECK(ray.multiplicity == 1);

    CHECK_THROWS_AS(tropBranchRay(builtinSpace("torus", 2), {P("1 + t"), P("2")}), std::domain_error);
    CHECK_THROWS_AS(tropBranchRay(builtinSpace("torus", 1), {P("t^(1/2)")}), std::domain_error);
    CHECK_THROWS_AS(tropPoint(gl2, {P("t")}), std::invalid_argument);
    SphericalSpace generic = gl2;
    generic.kind = SpaceKind::Generic;
    CHECK_THROWS_AS(tropPoint(generic, atZero), std::invalid_argument);
}

TEST_CASE("tropical points land in the valuation cone")
{
    std::mt19937_64 rng(43);
    const SphericalSpace gl3 = builtinSpace("gln", 3);
    for (int k = 0; k < 40; ++k)
    {
        const PuiseuxMatrix m = oracle::randomInvertible(rng, 3);
        CurveBranch b;
        for (Index i = 0; i < 3; ++i)
            for (Index j = 0; j < 3; ++j) b.push_back(m(i, j));
        CHECK(gl3.valuationCone.contains(tropPoint(gl3, b)));
    }
}

TEST_CASE("semi-invariants")
{
    const auto h = glnSemiInvariants(parsePuiseuxMatrix("[[t+1,t],[t,0]]"));
    REQUIRE(h.size() == 2);
    CHECK(h[0] == P("-t^2"));
    CHECK(h[1].isZero());
}
