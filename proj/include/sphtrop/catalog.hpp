/**
 * Built-in spherical homogeneous spaces and the reference fans and curves
 * shipped as JSON fixtures.
 *
 *   torus(n)  rank n, V = R^n, no colors
 *   sl2_u     SL2/U = A^2 minus the origin; rank 1, V = R, E1 -> (1)
 *   gln(n)    GL_n x GL_n / diag; V = {mu_1 >= ... >= mu_n},
 *             E_i -> e_{i+1} - e_i (the color where h_{i+1} vanishes)
 */

#ifndef SPHTROP_CATALOG_HPP
#define SPHTROP_CATALOG_HPP

#include <string>
#include <vector>

#include "sphtrop/balance.hpp"
#include "sphtrop/luna_vust.hpp"

namespace sphtrop {

/// name in {"torus", "sl2_u", "gln"}; n is ignored for sl2_u. Throws
/// std::invalid_argument for an unknown name or n < 1.
SphericalSpace builtinSpace(const std::string& name, int n = 1);

/// Space from a compact id: "torus3", "gln2", "sl2u" or "sl2_u".
SphericalSpace spaceFromId(const std::string& id);

/// Compact id of a built-in space, or "" when the space is not one of them
/// (compared field by field, so a modified copy has no id).
std::string builtinId(const SphericalSpace& space);

struct ReferenceCurve
{
    std::string name;
    std::string description;
    SphericalSpace space;
    std::vector<std::string> branchLabels;
    std::vector<CurveBranch> branches;
    std::vector<ColoredWeight> coloredWeights;
    WeightedRayFan expected;
};

enum class FixtureKind
{
    Fan,
    Curve
};

struct FixtureInfo
{
    std::string name;
    FixtureKind kind;
    std::string space;
    std::string description;
};

std::vector<FixtureInfo> listFixtures();

/// Raw JSON text of an embedded fixture; throws std::out_of_range when unknown.
const std::string& fixtureText(const std::string& name);

ColoredFan referenceFan(const std::string& name);
ReferenceCurve referenceCurve(const std::string& name);

/// Degree-d curve in SL2/U meeting the x-axis with multiplicity e:
/// rays (-1) with weight d and (1) with weight d - e, colored weight e on E1.
WeightedRayFan sl2uFamily(int d, int e);

}   // namespace sphtrop

#endif
