#include "doctest.h"

#include "oracles.hpp"

using namespace sphtrop;
using oracle::Index;

namespace {

IntVector iv(std::initializer_list<long> e) { return makeIntVector(e); }

}   // namespace

TEST_CASE("assemble")
{
    const SphericalSpace gl2 = builtinSpace("gln", 2);
    auto fan = assemble(gl2, {{iv({1, 0}), 2}, {iv({-1, -1}), 1}}, {{0, 1}});
    REQUIRE(fan.rays.size() == 2);
    CHECK(equalVectors(fan.rays[0].ray, iv({-1, -1})));
    CHECK(fan.rays[1].weight == 2);

    fan = assemble(gl2, {{iv({1, 0}), 2}, {iv({1, 0}), 3}}, {});
    REQUIRE(fan.rays.size() == 1);
    CHECK(fan.rays[0].weight == 5);

    CHECK(assemble(gl2, {}, {}).rays.empty());

    std::vector<std::string> warnings;
    fan = assemble(gl2, {{iv({1, 0}), 0}}, {}, &warnings);
    CHECK(fan.rays.empty());
    CHECK(warnings.size() == 1);

    CHECK_THROWS_AS(assemble(gl2, {{iv({0, 1}), 1}}, {}), std::invalid_argument);
    CHECK_THROWS_AS(assemble(gl2, {{iv({2, 0}), 1}}, {}), std::invalid_argument);
    CHECK_THROWS_AS(assemble(gl2, {}, {{3, 1}}), std::invalid_argument);
}

TEST_CASE("balancing examples")
{
    const SphericalSpace gl2 = builtinSpace("gln", 2);
    auto report = checkBalancing(assemble(gl2, {{iv({-1, -1}), 1}, {iv({1, 0}), 2}}, {{0, 1}}));
    CHECK(report.balanced);
    CHECK(oracle::allZero(report.residual));

    const SphericalSpace t2 = builtinSpace("torus", 2);
    report = checkBalancing(assemble(t2, {{iv({1, 0}), 1}, {iv({0, 1}), 1}, {iv({-1, -1}), 1}}, {}));
    CHECK(report.balanced);

    CHECK(checkBalancing(sl2uFamily(3, 1)).balanced);

    report = checkBalancing(assemble(t2, {{iv({1, 0}), 1}}, {}));
    CHECK_FALSE(report.balanced);
    CHECK(equalVectors(report.residual, iv({1, 0})));
    REQUIRE(report.perCharacter.size() == 2);
    CHECK(report.perCharacter[0].first == "chi1");
    CHECK(report.perCharacter[0].second == 1);
}

TEST_CASE("pairing residual")
{
    const SphericalSpace gl2 = builtinSpace("gln", 2);
    const auto fan = assemble(gl2, {{iv({-1, -1}), 1}, {iv({1, 0}), 2}}, {{0, 1}});
    CHECK(pairingResidual(fan, iv({1, 0})) == 0);
    const auto bad = assemble(gl2, {{iv({1, 0}), 1}}, {});
    CHECK(pairingResidual(bad, iv({1, 0})) == 1);
    CHECK(pairingResidual(bad, iv({0, 0})) == 0);
    CHECK_THROWS_AS(pairingResidual(bad, iv({1})), std::invalid_argument);
}

TEST_CASE("quotient balancing")
{
    const SphericalSpace gl2 = builtinSpace("gln", 2);
    const auto fan = assemble(gl2, {{iv({-1, -1}), 1}, {iv({1, 0}), 2}}, {{0, 1}});
    CHECK(equalVectors(checkQuotientBalancing(fan), iv({0})));
    const auto torus = assemble(builtinSpace("torus", 2), {{iv({1, 0}), 1}, {iv({0, 1}), 3}}, {});
    CHECK(equalVectors(checkQuotientBalancing(torus), balancingResidual(torus)));
    CHECK(equalVectors(checkQuotientBalancing(assemble(gl2, {{iv({1, 0}), 1}}, {})), iv({1})));
}

TEST_CASE("colored weight solver")
{
    const SphericalSpace gl2 = builtinSpace("gln", 2);
    auto sol = solveColoredWeights(gl2, {{iv({1, 0}), 2}, {iv({-1, -1}), 1}});
    REQUIRE(sol);
    REQUIRE(sol->size() == 1);
    CHECK((*sol)[0].color == 0);
    CHECK((*sol)[0].weight == 1);

    const SphericalSpace t2 = builtinSpace("torus", 2);
    sol = solveColoredWeights(t2, {{iv({1, 0}), 1}, {iv({-1, 0}), 1}});
    REQUIRE(sol);
    CHECK(sol->empty());
    CHECK_FALSE(solveColoredWeights(t2, {{iv({1, 0}), 1}}));

    sol = solveColoredWeights(builtinSpace("sl2_u"), {{iv({-1}), 3}, {iv({1}), 2}});
    REQUIRE(sol);
    REQUIRE(sol->size() == 1);
    CHECK((*sol)[0].weight == 1);

    // Dependent palette: minimal total weight, then lexicographic.
    SphericalSpace dep = t2;
    dep.palette = {{"A", iv({1, 0})}, {"B", iv({2, 0})}, {"C", iv({0, 1})}};
    sol = solveColoredWeights(dep, {{iv({-4, -1}), 1}});
    REQUIRE(sol);
    REQUIRE(sol->size() == 2);
    CHECK((*sol)[0].color == 1);
    CHECK((*sol)[0].weight == 2);
    CHECK((*sol)[1].color == 2);
    CHECK((*sol)[1].weight == 1);
}

TEST_CASE("balancing properties on random fans")
{
    std::mt19937_64 rng(47);
    for (int k = 0; k < 300; ++k)
    {
        const int n = static_cast<int>(oracle::uniform(rng, 2, 3));
        const SphericalSpace space = builtinSpace("gln", n);
        std::vector<BranchRay> rays;
        for (long r = oracle::uniform(rng, 1, 4); r > 0; --r)
            rays.push_back({oracle::randomWeylRay(rng, n, 3), oracle::uniform(rng, 1, 4)});
        const auto fan = assemble(space, rays, {});

        // Solver output substituted back balances.
        const auto sol = solveColoredWeights(space, fan.rays);
        if (sol)
        {
            WeightedRayFan withColors = fan;
            withColors.coloredWeights = *sol;
            CHECK(checkBalancing(withColors).balanced);

            // Scaling every weight keeps the fan balanced.
            const long c = oracle::uniform(rng, 2, 5);
            for (auto& r : withColors.rays) r.weight *= c;
            for (auto& w : withColors.coloredWeights) w.weight *= c;
            CHECK(checkBalancing(withColors).balanced);
        }

        // Splitting a ray's weight before assembly changes nothing.
        std::vector<BranchRay> split;
        for (const auto& r : fan.rays)
        {
            if (r.weight > 1)
            {
                split.push_back({r.ray, 1});
                split.push_back({r.ray, r.weight - 1});
            }
            else
            {
                split.push_back({r.ray, r.weight});
            }
        }
        CHECK(equalVectors(checkBalancing(assemble(space, split, {})).residual, checkBalancing(fan).residual));

        // Per-character pairings reconstruct the residual.
        const auto report = checkBalancing(fan);
        for (Index i = 0; i < n; ++i)
            CHECK(report.perCharacter[static_cast<std::size_t>(i)].second == report.residual(i));
    }
}
