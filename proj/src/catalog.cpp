#include "sphtrop/catalog.hpp"

#include <map>
#include <regex>

#include "sphtrop/formats.hpp"

namespace sphtrop {

namespace detail {
const std::map<std::string, std::string>& embeddedFixtures();
}

namespace {

using Index = Eigen::Index;

std::vector<std::string> characterLabels(int n)
{
    std::vector<std::string> out;
    for (int i = 1; i <= n; ++i) out.push_back("chi" + std::to_string(i));
    return out;
}

bool sameSpace(const SphericalSpace& a, const SphericalSpace& b)
{
    if (a.name != b.name || a.kind != b.kind || a.rank != b.rank) return false;
    if (a.characterBasis != b.characterBasis || a.palette.size() != b.palette.size()) return false;
    for (std::size_t j = 0; j < a.palette.size(); ++j)
        if (a.palette[j].label != b.palette[j].label || !equalVectors(a.palette[j].vector, b.palette[j].vector))
            return false;
    return a.valuationCone.ambientDim() == b.valuationCone.ambientDim() && sameCone(a.valuationCone, b.valuationCone);
}

}   // namespace

SphericalSpace builtinSpace(const std::string& name, int n)
{
    SphericalSpace space;
    if (name == "sl2_u" || name == "sl2u")
    {
        space.name = "sl2u";
        space.kind = SpaceKind::SL2ModU;
        space.rank = 1;
        space.valuationCone = Cone::whole(1);
        space.palette.push_back({"E1", makeIntVector({1})});
        space.characterBasis = characterLabels(1);
        return space;
    }
    if (name != "torus" && name != "gln") throw std::invalid_argument("unknown space '" + name + "'");
    if (n < 1) throw std::invalid_argument("space " + name + " needs n >= 1");

    space.name = name + std::to_string(n);
    space.rank = n;
    space.characterBasis = characterLabels(n);
    if (name == "torus")
    {
        space.kind = SpaceKind::Torus;
        space.valuationCone = Cone::whole(n);
        return space;
    }

    space.kind = SpaceKind::GLn;
    std::vector<IntVector> inequalities;
    for (int i = 0; i + 1 < n; ++i)
    {
        IntVector chamberWall = IntVector::Zero(n);
        chamberWall(i) = 1;
        chamberWall(i + 1) = -1;
        inequalities.push_back(chamberWall);
        space.palette.push_back({"E" + std::to_string(i + 1), IntVector(-chamberWall)});
    }
    space.valuationCone = Cone::fromInequalities(n, inequalities);
    return space;
}

SphericalSpace spaceFromId(const std::string& id)
{
    static const std::regex pattern(R"((torus|gln)([0-9]+))");
    if (id == "sl2u" || id == "sl2_u") return builtinSpace("sl2_u");
    std::smatch m;
    if (!std::regex_match(id, m, pattern)) throw std::invalid_argument("unknown space id '" + id + "'");
    if (m[2].length() > 3) throw std::invalid_argument("space id '" + id + "' has an absurd rank");
    return builtinSpace(m[1], std::stoi(m[2]));
}

std::string builtinId(const SphericalSpace& space)
{
    std::string candidate;
    switch (space.kind)
    {
        case SpaceKind::Torus: candidate = "torus" + std::to_string(space.rank); break;
        case SpaceKind::GLn: candidate = "gln" + std::to_string(space.rank); break;
        case SpaceKind::SL2ModU: candidate = "sl2u"; break;
        case SpaceKind::Generic: return "";
    }
    if (space.rank < 1) return "";
    return sameSpace(space, spaceFromId(candidate)) ? candidate : "";
}

// ---------------------------------------------------------------------------

const std::string& fixtureText(const std::string& name)
{
    const auto& all = detail::embeddedFixtures();
    auto it = all.find(name);
    if (it == all.end()) throw std::out_of_range("unknown fixture '" + name + "'");
    return it->second;
}

std::vector<FixtureInfo> listFixtures()
{
    std::vector<FixtureInfo> out;
    for (const auto& [name, text] : detail::embeddedFixtures())
    {
        const Json doc = parseJson(text);
        const std::string fmt = documentFormat(doc);
        FixtureInfo info{name, fmt == format::curve ? FixtureKind::Curve : FixtureKind::Fan, "", ""};
        const Json& space = doc.at("space");
        info.space = space.is_string() ? space.get<std::string>() : space.at("name").get<std::string>();
        if (doc.contains("description")) info.description = doc["description"].get<std::string>();
        out.push_back(info);
    }
    return out;
}

ColoredFan referenceFan(const std::string& name)
{
    const Json doc = parseJson(fixtureText(name));
    if (documentFormat(doc) != format::fan) throw std::invalid_argument("fixture '" + name + "' is not a fan");
    return fanFromJson(doc);
}

ReferenceCurve referenceCurve(const std::string& name)
{
    const Json doc = parseJson(fixtureText(name));
    if (documentFormat(doc) != format::curve) throw std::invalid_argument("fixture '" + name + "' is not a curve");
    return curveFromJson(doc);
}

WeightedRayFan sl2uFamily(int d, int e)
{
    if (d < 0 || e < 0 || e > d) throw std::invalid_argument("sl2u family needs 0 <= e <= d");
    const SphericalSpace space = builtinSpace("sl2_u");
    return assemble(space, {{makeIntVector({-1}), d}, {makeIntVector({1}), d - e}}, {{0, e}});
}

}   // namespace sphtrop
