/**
 * Weighted ray fans of tropicalized curves and the balancing condition
 *
 *     sum_σ m_σ v_σ + sum_j m_j v_j = 0,
 *
 * where v_σ are the primitive rays with weights m_σ and v_j are the color
 * vectors with colored weights m_j.
 */

#ifndef SPHTROP_BALANCE_HPP
#define SPHTROP_BALANCE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sphtrop/luna_vust.hpp"
#include "sphtrop/tropicalize.hpp"

namespace sphtrop {

struct WeightedRay
{
    IntVector ray;
    Integer weight;
};

struct ColoredWeight
{
    std::size_t color;   // palette index
    Integer weight;
};

struct WeightedRayFan
{
    SphericalSpace space;
    std::vector<WeightedRay> rays;
    std::vector<ColoredWeight> coloredWeights;
};

struct BalanceReport
{
    IntVector residual;
    bool balanced = false;
    IntVector quotientResidual;
    std::vector<std::pair<std::string, Integer>> perCharacter;
};

/**
 * Merges branch contributions: equal rays have their multiplicities summed,
 * rays are sorted lexicographically, zero-weight rays are dropped with a
 * warning. Throws std::invalid_argument for non-primitive rays, rays outside
 * the valuation cone, negative weights or unknown colors.
 */
WeightedRayFan assemble(const SphericalSpace& space, const std::vector<BranchRay>& rays,
                        const std::vector<ColoredWeight>& colored,
                        std::vector<std::string>* warnings = nullptr);

/// Tropicalizes every branch and assembles the result. Branches with zero
/// tropicalization are skipped and reported through `warnings`.
WeightedRayFan assembleFromBranches(const SphericalSpace& space, const std::vector<CurveBranch>& branches,
                                    const std::vector<ColoredWeight>& colored,
                                    std::vector<std::string>* warnings = nullptr);

/// sum m_σ v_σ + sum m_j v_j
IntVector balancingResidual(const WeightedRayFan& fan);

BalanceReport checkBalancing(const WeightedRayFan& fan);

/// <residual, character> for a character written in the basis of M(G/H).
Integer pairingResidual(const WeightedRayFan& fan, const IntVector& character);

/// Image of sum m_σ v_σ in N / sat(span of the palette); the colored terms
/// vanish there by construction.
IntVector checkQuotientBalancing(const WeightedRayFan& fan);

/**
 * Nonnegative integer colored weights with sum m_j v_j = -sum m_σ v_σ,
 * minimizing sum m_j and then lexicographically by palette index; only
 * nonzero weights are returned. std::nullopt means infeasible.
 */
std::optional<std::vector<ColoredWeight>> solveColoredWeights(const SphericalSpace& space,
                                                              const std::vector<WeightedRay>& rays);

}   // namespace sphtrop

#endif
