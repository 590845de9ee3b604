#include "sphtrop/luna_vust.hpp"

#include <algorithm>
#include <map>

namespace sphtrop {

namespace {

using Index = Eigen::Index;

std::string colorList(const SphericalSpace& space, const std::set<std::size_t>& colors)
{
    std::string out = "{";
    bool first = true;
    for (auto j : colors)
    {
        if (!first) out += ",";
        first = false;
        out += j < space.palette.size() ? space.palette[j].label : std::to_string(j);
    }
    return out + "}";
}

std::vector<RatVector> asWitness(const std::vector<IntVector>& vs)
{
    std::vector<RatVector> out;
    for (const auto& v : vs) out.push_back(toRational(v));
    return out;
}

bool coneOrder(const Cone& x, const Cone& y)
{
    if (x.dimension() != y.dimension()) return x.dimension() < y.dimension();
    return std::lexicographical_compare(
        x.generators().begin(), x.generators().end(), y.generators().begin(), y.generators().end(),
        [](const IntVector& p, const IntVector& q) { return lexLess(p, q); });
}

void checkColorIndices(const SphericalSpace& space, const ColoredCone& cc)
{
    for (auto j : cc.colors)
        if (j >= space.palette.size())
            throw std::out_of_range("unknown palette index " + std::to_string(j) + " in space " +
                                    space.name);
}

}   // namespace

std::string toString(SpaceKind kind)
{
    switch (kind)
    {
        case SpaceKind::Torus: return "torus";
        case SpaceKind::SL2ModU: return "sl2_u";
        case SpaceKind::GLn: return "gln";
        case SpaceKind::Generic: return "generic";
    }
    return "generic";
}

SpaceKind parseSpaceKind(const std::string& text)
{
    if (text == "torus") return SpaceKind::Torus;
    if (text == "sl2_u") return SpaceKind::SL2ModU;
    if (text == "gln") return SpaceKind::GLn;
    if (text == "generic") return SpaceKind::Generic;
    throw ParseError("unknown space kind '" + text + "'");
}

std::optional<std::size_t> SphericalSpace::colorIndex(const std::string& label) const
{
    for (std::size_t j = 0; j < palette.size(); ++j)
        if (palette[j].label == label) return j;
    return std::nullopt;
}

std::string toString(Axiom axiom)
{
    switch (axiom)
    {
        case Axiom::Space: return "space";
        case Axiom::StrictConvexity: return "strict-convexity";
        case Axiom::CC1: return "CC1";
        case Axiom::CC2: return "CC2";
        case Axiom::CC3: return "CC3";
        case Axiom::CF1: return "CF1";
        case Axiom::CF2: return "CF2";
    }
    return "?";
}

bool ValidationReport::has(Axiom axiom) const
{
    return std::any_of(violations.begin(), violations.end(),
                       [axiom](const Violation& v) { return v.axiom == axiom; });
}

// ---------------------------------------------------------------------------

ValidationReport validateSpace(const SphericalSpace& space)
{
    ValidationReport report;
    auto fail = [&](const std::string& message) {
        report.violations.push_back({std::nullopt, std::nullopt, Axiom::Space, message, {}});
    };
    if (space.valuationCone.ambientDim() != space.rank)
        fail("valuation cone lives in dimension " + std::to_string(space.valuationCone.ambientDim()) +
             ", rank is " + std::to_string(space.rank));
    if (!space.characterBasis.empty() && static_cast<Index>(space.characterBasis.size()) != space.rank)
        fail("character basis has " + std::to_string(space.characterBasis.size()) + " labels");
    for (const auto& color : space.palette)
    {
        if (color.vector.size() != space.rank)
            fail("color " + color.label + " has dimension " + std::to_string(color.vector.size()));
        else if ((color.vector.array() == 0).all())
            fail("color " + color.label + " has zero vector");
    }
    return report;
}

ValidationReport validateColoredCone(const SphericalSpace& space, const ColoredCone& cc)
{
    if (cc.cone.ambientDim() != space.rank)
        throw std::invalid_argument("colored cone of dimension " + std::to_string(cc.cone.ambientDim()) +
                                    " in a space of rank " + std::to_string(space.rank));
    checkColorIndices(space, cc);

    ValidationReport report;
    auto fail = [&](Axiom axiom, const std::string& message, std::vector<RatVector> witness = {}) {
        report.violations.push_back({std::nullopt, std::nullopt, axiom, message, std::move(witness)});
    };

    if (!cc.cone.isStrictlyConvex())
        fail(Axiom::StrictConvexity, toString(cc.cone) + " contains a line");

    std::vector<IntVector> generators = intersect(cc.cone, space.valuationCone).generators();
    for (auto j : cc.colors)
    {
        const auto& v = space.palette[j].vector;
        if ((v.array() == 0).all())
            fail(Axiom::CC3, "color " + space.palette[j].label + " maps to 0");
        else
            generators.push_back(v);
    }

    const Cone generated = Cone::fromGenerators(space.rank, generators);
    if (!sameCone(generated, cc.cone))
    {
        std::vector<IntVector> witness;
        for (const auto& g : cc.cone.generators())
            if (!generated.contains(g)) witness.push_back(g);
        for (const auto& g : generated.generators())
            if (!cc.cone.contains(g)) witness.push_back(g);
        fail(Axiom::CC1,
             toString(cc.cone) + " is not generated by " + colorList(space, cc.colors) +
                 " and elements of the valuation cone",
             asWitness(witness));
    }

    if (!relintMeets(cc.cone, space.valuationCone))
        fail(Axiom::CC2, "relative interior of " + toString(cc.cone) + " misses the valuation cone");
    return report;
}

std::vector<ColoredCone> coloredFaces(const SphericalSpace& space, const ColoredCone& cc,
                                      FaceSelection selection)
{
    const ValidationReport report = validateColoredCone(space, cc);
    if (!report.valid())
        throw InvalidColoredCone("colored faces of an invalid colored cone " + toString(cc.cone),
                                 report);
    std::vector<ColoredCone> out;
    for (const auto& face : faces(cc.cone))
    {
        if (selection == FaceSelection::ColoredOnly && !relintMeets(face, space.valuationCone))
            continue;
        ColoredCone colored{face, {}};
        for (auto j : cc.colors)
            if (face.contains(space.palette[j].vector)) colored.colors.insert(j);
        out.push_back(std::move(colored));
    }
    return out;
}

bool sameColoredCone(const ColoredCone& a, const ColoredCone& b)
{
    return a.colors == b.colors && sameCone(a.cone, b.cone);
}

ValidationReport validateColoredFan(const ColoredFan& fan)
{
    ValidationReport report = validateSpace(fan.space);
    // Members can still be checked as long as the dimensions agree.
    if (fan.space.valuationCone.ambientDim() != fan.space.rank) return report;
    for (const auto& color : fan.space.palette)
        if (color.vector.size() != fan.space.rank) return report;

    const auto& members = fan.cones;
    std::vector<bool> memberValid(members.size(), false);
    for (std::size_t i = 0; i < members.size(); ++i)
    {
        ValidationReport own = validateColoredCone(fan.space, members[i]);
        memberValid[i] = own.valid();
        for (auto& v : own.violations)
        {
            v.member = i;
            report.violations.push_back(std::move(v));
        }
    }

    for (std::size_t i = 0; i < members.size(); ++i)
    {
        if (!memberValid[i]) continue;
        for (const auto& face : coloredFaces(fan.space, members[i]))
        {
            const bool present = std::any_of(members.begin(), members.end(), [&](const ColoredCone& m) {
                return sameColoredCone(m, face);
            });
            if (!present)
            {
                report.violations.push_back(
                    {i, std::nullopt, Axiom::CF1,
                     "colored face " + toString(face.cone) + " " + colorList(fan.space, face.colors) +
                         " of member " + std::to_string(i) + " is missing",
                     asWitness(face.cone.generators())});
            }
        }
    }

    for (std::size_t i = 0; i < members.size(); ++i)
    {
        for (std::size_t j = i + 1; j < members.size(); ++j)
        {
            auto witness = commonRelintWitness(members[i].cone, members[j].cone, fan.space.valuationCone);
            if (witness)
            {
                report.violations.push_back(
                    {i, j, Axiom::CF2,
                     "members " + std::to_string(i) + " and " + std::to_string(j) +
                         " share a relative-interior point in the valuation cone",
                     {*witness}});
            }
        }
    }
    return report;
}

bool isToroidal(const ColoredFan& fan)
{
    return std::all_of(fan.cones.begin(), fan.cones.end(),
                       [](const ColoredCone& cc) { return cc.colors.empty(); });
}

DecolorResult decolor(const ColoredFan& fan)
{
    std::vector<Cone> cones;
    auto addUnique = [&](const Cone& c) {
        for (const auto& existing : cones)
            if (sameCone(existing, c)) return;
        cones.push_back(c);
    };
    for (const auto& member : fan.cones)
    {
        const Cone trimmed = intersect(member.cone, fan.space.valuationCone);
        for (const auto& face : faces(trimmed)) addUnique(face);
    }
    std::sort(cones.begin(), cones.end(), coneOrder);

    DecolorResult result;
    result.fan.space = fan.space;
    for (auto& c : cones) result.fan.cones.push_back({std::move(c), {}});
    result.report = validateColoredFan(result.fan);
    return result;
}

StarResult star(const ColoredFan& fan, std::size_t member,
                const std::optional<std::set<std::size_t>>& survivingColors)
{
    if (member >= fan.cones.size())
        throw std::out_of_range("star: no fan member " + std::to_string(member));
    const ColoredCone& base = fan.cones[member];
    if (!base.colors.empty() && !survivingColors)
        throw std::invalid_argument("star: the colored cone " + toString(base.cone) +
                                    " needs the set of surviving colors");
    const std::set<std::size_t> surviving = survivingColors.value_or(std::set<std::size_t>{});
    for (auto j : surviving)
        if (j >= fan.space.palette.size())
            throw std::out_of_range("star: unknown palette index " + std::to_string(j));

    StarResult result;
    result.projection = quotientProjection(base.cone.generators(), fan.space.rank);
    const IntMatrix& pi = result.projection;

    std::map<std::size_t, std::size_t> renumber;
    SphericalSpace& quotient = result.quotient;
    quotient.name = fan.space.name + "/star";
    quotient.kind = SpaceKind::Generic;
    quotient.rank = pi.rows();
    quotient.valuationCone = image(pi, fan.space.valuationCone);
    for (auto j : surviving)
    {
        renumber[j] = quotient.palette.size();
        quotient.palette.push_back({fan.space.palette[j].label, pi * fan.space.palette[j].vector});
    }
    for (Index i = 0; i < quotient.rank; ++i)
        quotient.characterBasis.push_back("m" + std::to_string(i + 1));

    result.fan.space = quotient;
    for (const auto& candidate : fan.cones)
    {
        if (!candidate.cone.contains(base.cone) || !isFaceOf(base.cone, candidate.cone)) continue;
        std::set<std::size_t> inherited;
        for (auto j : candidate.colors)
            if (base.cone.contains(fan.space.palette[j].vector)) inherited.insert(j);
        if (inherited != base.colors) continue;

        ColoredCone imageCone{image(pi, candidate.cone), {}};
        for (auto j : candidate.colors)
            if (surviving.count(j)) imageCone.colors.insert(renumber[j]);
        const bool duplicate = std::any_of(result.fan.cones.begin(), result.fan.cones.end(),
                                           [&](const ColoredCone& c) { return sameColoredCone(c, imageCone); });
        if (!duplicate) result.fan.cones.push_back(std::move(imageCone));
    }
    std::sort(result.fan.cones.begin(), result.fan.cones.end(),
              [](const ColoredCone& a, const ColoredCone& b) { return coneOrder(a.cone, b.cone); });
    return result;
}

// ---------------------------------------------------------------------------

std::string toString(Mutation kind)
{
    switch (kind)
    {
        case Mutation::DropFace: return "drop-face";
        case Mutation::DuplicateCone: return "duplicate-cone";
        case Mutation::ShiftOffValuationCone: return "shift-off-valuation-cone";
        case Mutation::ColorOutsideValuationCone: return "color-outside-valuation-cone";
        case Mutation::ZeroColorVector: return "zero-color-vector";
    }
    return "?";
}

namespace {

std::size_t pick(std::size_t n, std::mt19937_64& rng)
{
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

Integer dotInt(const IntVector& a, const IntVector& b)
{
    Integer s = 0;
    for (Index i = 0; i < a.size(); ++i) s += a(i) * b(i);
    return s;
}

}   // namespace

std::optional<MutatedFan> mutateFan(const ColoredFan& fan, Mutation kind, std::mt19937_64& rng)
{
    MutatedFan out{fan, kind, Axiom::CF1, ""};
    auto& cones = out.fan.cones;

    switch (kind)
    {
        case Mutation::DropFace:
        {
            // Members that are proper colored faces of some other member.
            std::vector<std::size_t> candidates;
            for (std::size_t i = 0; i < cones.size(); ++i)
            {
                for (std::size_t j = 0; j < cones.size(); ++j)
                {
                    if (i == j || cones[j].cone.dimension() <= cones[i].cone.dimension()) continue;
                    const auto fs = coloredFaces(fan.space, cones[j]);
                    if (std::any_of(fs.begin(), fs.end(),
                                    [&](const ColoredCone& f) { return sameColoredCone(f, cones[i]); }))
                    {
                        candidates.push_back(i);
                        break;
                    }
                }
            }
            if (candidates.empty()) return std::nullopt;
            const std::size_t victim = candidates[pick(candidates.size(), rng)];
            out.description = "removed member " + std::to_string(victim) + " " + toString(cones[victim].cone);
            cones.erase(cones.begin() + static_cast<std::ptrdiff_t>(victim));
            out.expected = Axiom::CF1;
            return out;
        }
        case Mutation::DuplicateCone:
        {
            if (cones.empty()) return std::nullopt;
            const std::size_t source = pick(cones.size(), rng);
            std::vector<IntVector> gens = cones[source].cone.generators();
            for (auto& g : gens) g *= Integer(static_cast<long>(1 + pick(3, rng)));
            std::shuffle(gens.begin(), gens.end(), rng);
            ColoredCone copy{Cone::fromGenerators(fan.space.rank, gens), cones[source].colors};
            const std::size_t slot = pick(cones.size() + 1, rng);
            cones.insert(cones.begin() + static_cast<std::ptrdiff_t>(slot), copy);
            out.description = "duplicated member " + std::to_string(source) + " at " + std::to_string(slot);
            out.expected = Axiom::CF2;
            return out;
        }
        case Mutation::ShiftOffValuationCone:
        {
            const auto& valuationFacets = fan.space.valuationCone.facetNormals();
            if (valuationFacets.empty()) return std::nullopt;
            std::vector<std::size_t> candidates;
            for (std::size_t i = 0; i < cones.size(); ++i)
                if (cones[i].colors.empty() && !cones[i].cone.isZero()) candidates.push_back(i);
            if (candidates.empty()) return std::nullopt;
            const std::size_t target = candidates[pick(candidates.size(), rng)];
            std::vector<IntVector> gens = cones[target].cone.generators();
            IntVector& g = gens[pick(gens.size(), rng)];
            const IntVector& normal = valuationFacets[pick(valuationFacets.size(), rng)];
            // Push g across the chosen facet of V: <normal, g'> < 0.
            const Integer steps = dotInt(normal, g) / dotInt(normal, normal) + 1 +
                                  static_cast<long>(pick(2, rng));
            g -= steps * normal;
            cones[target].cone = Cone::fromGenerators(fan.space.rank, gens);
            out.description = "moved a generator of member " + std::to_string(target) + " to " + toString(g);
            out.expected = Axiom::CC1;
            return out;
        }
        case Mutation::ColorOutsideValuationCone:
        {
            std::vector<std::size_t> outside;
            for (std::size_t j = 0; j < fan.space.palette.size(); ++j)
            {
                const auto& v = fan.space.palette[j].vector;
                if (!(v.array() == 0).all() && !fan.space.valuationCone.contains(v)) outside.push_back(j);
            }
            if (outside.empty()) return std::nullopt;
            const std::size_t j = outside[pick(outside.size(), rng)];
            cones.push_back({Cone::ray(fan.space.palette[j].vector), {j}});
            out.description = "added the color ray of " + fan.space.palette[j].label;
            out.expected = Axiom::CC2;
            return out;
        }
        case Mutation::ZeroColorVector:
        {
            if (fan.space.palette.empty()) return std::nullopt;
            const std::size_t j = pick(fan.space.palette.size(), rng);
            out.fan.space.palette[j].vector = IntVector::Zero(fan.space.rank);
            auto zero = std::find_if(cones.begin(), cones.end(),
                                     [](const ColoredCone& c) { return c.cone.isZero(); });
            if (zero == cones.end())
                cones.push_back({Cone::zero(fan.space.rank), {j}});
            else
                zero->colors.insert(j);
            out.description = "set the vector of " + fan.space.palette[j].label + " to zero";
            out.expected = Axiom::CC3;
            return out;
        }
    }
    return std::nullopt;
}

}   // namespace sphtrop
