/**
 * Colored cones and colored fans of a spherical homogeneous space G/H.
 *
 * Constructors accept raw data; validity (CC1-CC3, CF1-CF2 and strict
 * convexity) is an explicit check that returns a structured report, so
 * failing inputs can be inspected rather than rejected on sight.
 */

#ifndef SPHTROP_LUNA_VUST_HPP
#define SPHTROP_LUNA_VUST_HPP

#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "sphtrop/lattice.hpp"

namespace sphtrop {

enum class SpaceKind
{
    Torus,
    SL2ModU,
    GLn,
    Generic
};

std::string toString(SpaceKind kind);
SpaceKind parseSpaceKind(const std::string& text);

/// A color: a B-stable, non-G-stable prime divisor, recorded through the
/// image of its valuation in N(G/H).
struct Color
{
    std::string label;
    IntVector vector;
};

struct SphericalSpace
{
    std::string name;
    SpaceKind kind = SpaceKind::Generic;
    Eigen::Index rank = 0;
    Cone valuationCone;
    std::vector<Color> palette;
    std::vector<std::string> characterBasis;   // labels of the chosen basis of M(G/H)

    std::optional<std::size_t> colorIndex(const std::string& label) const;
};

struct ColoredCone
{
    Cone cone;
    std::set<std::size_t> colors;
};

struct ColoredFan
{
    SphericalSpace space;
    std::vector<ColoredCone> cones;
};

enum class Axiom
{
    Space,              // malformed space data (dimensions, zero color vector)
    StrictConvexity,
    CC1,
    CC2,
    CC3,
    CF1,
    CF2
};

std::string toString(Axiom axiom);

struct Violation
{
    std::optional<std::size_t> member;   // fan member the violation is about
    std::optional<std::size_t> other;    // second member, for CF2
    Axiom axiom;
    std::string message;
    std::vector<RatVector> witness;      // CF1: generators of the missing face; CF2: a shared point
};

struct ValidationReport
{
    std::vector<Violation> violations;

    bool valid() const { return violations.empty(); }
    bool has(Axiom axiom) const;
};

class InvalidColoredCone : public std::invalid_argument
{
    public:
        InvalidColoredCone(const std::string& what, ValidationReport report)
            : std::invalid_argument(what), report_(std::move(report)) {}
        const ValidationReport& report() const { return report_; }

    private:
        ValidationReport report_;
};

ValidationReport validateSpace(const SphericalSpace& space);

/**
 * Checks strict convexity and CC1-CC3. CC1 holds when the cone equals the
 * cone generated by the selected color vectors together with the generators
 * of cone ∩ V. Throws std::out_of_range for an unknown palette index and
 * std::invalid_argument for a dimension mismatch.
 */
ValidationReport validateColoredCone(const SphericalSpace& space, const ColoredCone& cc);

enum class FaceSelection
{
    /// Faces whose relative interior meets the valuation cone; these are the
    /// colored faces proper.
    ColoredOnly,
    /// Every face of the underlying cone, with inherited colors.
    AllFaces
};

/// Colored faces, ordered by dimension. Throws InvalidColoredCone if cc
/// fails validation.
std::vector<ColoredCone> coloredFaces(const SphericalSpace& space, const ColoredCone& cc,
                                      FaceSelection selection = FaceSelection::ColoredOnly);

bool sameColoredCone(const ColoredCone& a, const ColoredCone& b);

/// Space invariants, every member, CF1 (face closure) and CF2 (relative
/// interiors pairwise disjoint inside V).
ValidationReport validateColoredFan(const ColoredFan& fan);

bool isToroidal(const ColoredFan& fan);

struct DecolorResult
{
    ColoredFan fan;
    ValidationReport report;
};

/// Replaces every (σ, F) by (σ ∩ V, ∅) and closes the result under faces.
DecolorResult decolor(const ColoredFan& fan);

struct StarResult
{
    IntMatrix projection;       // Z^n -> Z^n / sat(span σ)
    SphericalSpace quotient;
    ColoredFan fan;
};

/**
 * Fan of the orbit closure attached to fan.cones[member]. `survivingColors`
 * lists the palette indices whose restriction to the orbit stays a divisor;
 * it must be supplied when the member carries colors and defaults to ∅
 * otherwise.
 */
StarResult star(const ColoredFan& fan, std::size_t member,
                const std::optional<std::set<std::size_t>>& survivingColors = std::nullopt);

// ---------------------------------------------------------------------------
// Mutation fuzzer

enum class Mutation
{
    DropFace,                    // -> CF1
    DuplicateCone,               // -> CF2
    ShiftOffValuationCone,       // -> CC1
    ColorOutsideValuationCone,   // -> CC2
    ZeroColorVector              // -> CC3
};

std::string toString(Mutation kind);

struct MutatedFan
{
    ColoredFan fan;
    Mutation kind;
    Axiom expected;
    std::string description;
};

/// Applies one random mutation of the given kind to a valid fan, or returns
/// std::nullopt when the fan offers nothing to mutate that way.
std::optional<MutatedFan> mutateFan(const ColoredFan& fan, Mutation kind, std::mt19937_64& rng);

}   // namespace sphtrop

#endif
