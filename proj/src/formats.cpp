#include "sphtrop/formats.hpp"

#include <algorithm>

namespace sphtrop {

namespace {

using Index = Eigen::Index;

[[noreturn]] void fail(const std::string& where, const std::string& what)
{
    throw ParseError(where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where)
{
    if (!j.is_object()) fail(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
    return *it;
}

std::string stringField(const Json& j, const char* key, const std::string& where)
{
    const Json& v = field(j, key, where);
    if (!v.is_string()) fail(where, std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

void expectFormat(const Json& j, const char* tag)
{
    const std::string found = documentFormat(j);
    if (found != tag) fail("document", "expected format '" + std::string(tag) + "', found '" + found + "'");
}

// Numbers are accepted on input for convenience; output always uses strings.
Integer integerFrom(const Json& j, const std::string& where)
{
    if (j.is_string()) return parseInteger(j.get<std::string>());
    if (j.is_number_integer()) return Integer(j.get<long long>());
    fail(where, "expected an integer string, got " + j.dump());
}

Json toJson(const Integer& z) { return toString(z); }
Json toJson(const Rational& q) { return toString(q); }

template <typename Scalar>
Json vectorToJson(const Vector<Scalar>& v)
{
    Json out = Json::array();
    for (Index i = 0; i < v.size(); ++i) out.push_back(toJson(v(i)));
    return out;
}

IntVector intVectorFrom(const Json& j, Index dim, const std::string& where)
{
    if (!j.is_array()) fail(where, "expected an array");
    if (dim >= 0 && static_cast<Index>(j.size()) != dim)
        fail(where, "expected " + std::to_string(dim) + " entries, got " + std::to_string(j.size()));
    IntVector v(static_cast<Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Index>(i)) = integerFrom(j[i], where);
    return v;
}

std::vector<IntVector> intVectorsFrom(const Json& j, Index dim, const std::string& where)
{
    if (!j.is_array()) fail(where, "expected an array of vectors");
    std::vector<IntVector> out;
    for (const auto& e : j) out.push_back(intVectorFrom(e, dim, where));
    return out;
}

Json vectorsToJson(const std::vector<IntVector>& vs)
{
    Json out = Json::array();
    for (const auto& v : vs) out.push_back(vectorToJson(v));
    return out;
}

std::size_t colorFrom(const SphericalSpace& space, const Json& j, const std::string& where)
{
    if (!j.is_string()) fail(where, "colors are referred to by label");
    const auto idx = space.colorIndex(j.get<std::string>());
    if (!idx) fail(where, "unknown color '" + j.get<std::string>() + "' in space " + space.name);
    return *idx;
}

Json coloredWeightsArray(const SphericalSpace& space, const std::vector<ColoredWeight>& weights)
{
    Json out = Json::array();
    for (const auto& c : weights)
        out.push_back(Json{{"color", space.palette.at(c.color).label}, {"weight", toJson(c.weight)}});
    return out;
}

std::vector<ColoredWeight> coloredWeightsFrom(const SphericalSpace& space, const Json& j,
                                              const std::string& where)
{
    std::vector<ColoredWeight> out;
    if (j.is_null()) return out;
    if (!j.is_array()) fail(where, "expected an array of colored weights");
    for (const auto& e : j)
        out.push_back({colorFrom(space, field(e, "color", where), where), integerFrom(field(e, "weight", where), where)});
    return out;
}

Json raysArray(const std::vector<WeightedRay>& rays)
{
    Json out = Json::array();
    for (const auto& r : rays) out.push_back(Json{{"ray", vectorToJson(r.ray)}, {"weight", toJson(r.weight)}});
    return out;
}

// Shared body of weighted-fan documents and the "expected" block of curves.
WeightedRayFan weightedFanBody(const SphericalSpace& space, const Json& j, const std::string& where)
{
    std::vector<BranchRay> rays;
    if (j.contains("rays"))
    {
        const Json& arr = j["rays"];
        if (!arr.is_array()) fail(where, "'rays' must be an array");
        for (const auto& e : arr)
            rays.push_back({intVectorFrom(field(e, "ray", where), space.rank, where),
                            integerFrom(field(e, "weight", where), where)});
    }
    const auto colored =
        coloredWeightsFrom(space, j.contains("colored_weights") ? j["colored_weights"] : Json(), where);
    try
    {
        return assemble(space, rays, colored);
    }
    catch (const std::invalid_argument& e)
    {
        fail(where, e.what());
    }
}

bool isGlnSpace(const SphericalSpace& space) { return space.kind == SpaceKind::GLn; }

}   // namespace

Json parseJson(const std::string& text)
{
    try
    {
        return Json::parse(text);
    }
    catch (const nlohmann::json::exception& e)
    {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

std::string documentFormat(const Json& j)
{
    if (!j.is_object()) return "";
    auto it = j.find("format");
    if (it == j.end() || !it->is_string()) return "";
    return it->get<std::string>();
}

// ---------------------------------------------------------------------------

Json spaceToJson(const SphericalSpace& space)
{
    const std::string id = builtinId(space);
    if (!id.empty()) return id;

    Json palette = Json::array();
    for (const auto& c : space.palette) palette.push_back(Json{{"label", c.label}, {"vector", vectorToJson(c.vector)}});
    return Json{{"name", space.name},
                {"kind", toString(space.kind)},
                {"rank", space.rank},
                {"valuation_cone", Json{{"inequalities", vectorsToJson(space.valuationCone.normals())}}},
                {"palette", palette},
                {"character_basis", space.characterBasis}};
}

SphericalSpace spaceFromJson(const Json& j)
{
    if (j.is_string())
    {
        try
        {
            return spaceFromId(j.get<std::string>());
        }
        catch (const std::invalid_argument& e)
        {
            throw ParseError(e.what());
        }
    }
    const std::string where = "space";
    SphericalSpace space;
    space.name = stringField(j, "name", where);
    space.kind = parseSpaceKind(stringField(j, "kind", where));
    const Json& rank = field(j, "rank", where);
    if (!rank.is_number_integer() || rank.get<long long>() < 0) fail(where, "'rank' must be a nonnegative integer");
    space.rank = static_cast<Index>(rank.get<long long>());

    const Json& cone = field(j, "valuation_cone", where);
    space.valuationCone =
        Cone::fromInequalities(space.rank, intVectorsFrom(field(cone, "inequalities", where), space.rank, where));

    if (j.contains("palette"))
    {
        for (const auto& c : j["palette"])
        {
            const std::string label = stringField(c, "label", where);
            if (space.colorIndex(label)) fail(where, "duplicate color label '" + label + "'");
            space.palette.push_back({label, intVectorFrom(field(c, "vector", where), space.rank, where)});
        }
    }
    if (j.contains("character_basis"))
    {
        for (const auto& l : j["character_basis"])
        {
            if (!l.is_string()) fail(where, "character labels must be strings");
            space.characterBasis.push_back(l.get<std::string>());
        }
    }
    return space;
}

// ---------------------------------------------------------------------------

Json fanToJson(const ColoredFan& fan)
{
    Json cones = Json::array();
    for (const auto& cc : fan.cones)
    {
        Json colors = Json::array();
        for (auto j : cc.colors) colors.push_back(fan.space.palette.at(j).label);
        cones.push_back(Json{{"generators", vectorsToJson(cc.cone.generators())}, {"colors", colors}});
    }
    return Json{{"format", format::fan}, {"space", spaceToJson(fan.space)}, {"cones", cones}};
}

ColoredFan fanFromJson(const Json& j)
{
    expectFormat(j, format::fan);
    ColoredFan fan;
    fan.space = spaceFromJson(field(j, "space", "fan"));
    const Json& cones = field(j, "cones", "fan");
    if (!cones.is_array()) fail("fan", "'cones' must be an array");
    for (std::size_t k = 0; k < cones.size(); ++k)
    {
        const std::string where = "fan cone " + std::to_string(k);
        ColoredCone cc;
        cc.cone = Cone::fromGenerators(fan.space.rank,
                                       intVectorsFrom(field(cones[k], "generators", where), fan.space.rank, where));
        if (cones[k].contains("colors"))
            for (const auto& c : cones[k]["colors"]) cc.colors.insert(colorFrom(fan.space, c, where));
        fan.cones.push_back(std::move(cc));
    }
    return fan;
}

// ---------------------------------------------------------------------------

Json weightedFanToJson(const WeightedRayFan& fan)
{
    return Json{{"format", format::weightedFan},
                {"space", spaceToJson(fan.space)},
                {"rays", raysArray(fan.rays)},
                {"colored_weights", coloredWeightsArray(fan.space, fan.coloredWeights)}};
}

WeightedRayFan weightedFanFromJson(const Json& j)
{
    expectFormat(j, format::weightedFan);
    const SphericalSpace space = spaceFromJson(field(j, "space", "weighted fan"));
    return weightedFanBody(space, j, "weighted fan");
}

// ---------------------------------------------------------------------------

Json curveToJson(const ReferenceCurve& curve)
{
    Json branches = Json::array();
    for (std::size_t b = 0; b < curve.branches.size(); ++b)
    {
        const auto& coords = curve.branches[b];
        Json out = Json::array();
        if (isGlnSpace(curve.space))
        {
            const auto n = static_cast<std::size_t>(curve.space.rank);
            for (std::size_t i = 0; i < n; ++i)
            {
                Json row = Json::array();
                for (std::size_t k = 0; k < n; ++k) row.push_back(toString(coords.at(i * n + k)));
                out.push_back(row);
            }
        }
        else
        {
            for (const auto& c : coords) out.push_back(toString(c));
        }
        const std::string label = b < curve.branchLabels.size() ? curve.branchLabels[b] : "";
        branches.push_back(Json{{"label", label}, {"coords", out}});
    }
    return Json{{"format", format::curve},
                {"name", curve.name},
                {"description", curve.description},
                {"space", spaceToJson(curve.space)},
                {"branches", branches},
                {"colored_weights", coloredWeightsArray(curve.space, curve.coloredWeights)},
                {"expected", Json{{"rays", raysArray(curve.expected.rays)},
                                  {"colored_weights",
                                   coloredWeightsArray(curve.space, curve.expected.coloredWeights)}}}};
}

ReferenceCurve curveFromJson(const Json& j)
{
    expectFormat(j, format::curve);
    ReferenceCurve curve;
    curve.name = j.contains("name") ? stringField(j, "name", "curve") : "";
    curve.description = j.contains("description") ? stringField(j, "description", "curve") : "";
    curve.space = spaceFromJson(field(j, "space", "curve"));

    const Json& branches = field(j, "branches", "curve");
    if (!branches.is_array()) fail("curve", "'branches' must be an array");
    for (std::size_t b = 0; b < branches.size(); ++b)
    {
        const std::string where = "curve branch " + std::to_string(b);
        const Json& coords = field(branches[b], "coords", where);
        if (!coords.is_array()) fail(where, "'coords' must be an array");
        CurveBranch branch;
        // Matrices may be given as nested rows; they are flattened row-major.
        for (const auto& c : coords)
        {
            if (c.is_array())
                for (const auto& e : c)
                    branch.push_back(parsePuiseux(e.is_string() ? e.get<std::string>() : e.dump()));
            else
                branch.push_back(parsePuiseux(c.is_string() ? c.get<std::string>() : c.dump()));
        }
        curve.branchLabels.push_back(branches[b].contains("label") ? stringField(branches[b], "label", where) : "");
        curve.branches.push_back(std::move(branch));
    }
    curve.coloredWeights = coloredWeightsFrom(
        curve.space, j.contains("colored_weights") ? j["colored_weights"] : Json(), "curve");
    curve.expected.space = curve.space;
    if (j.contains("expected")) curve.expected = weightedFanBody(curve.space, j["expected"], "curve expected");
    return curve;
}

// ---------------------------------------------------------------------------

Json validationReportToJson(const ValidationReport& report, const SphericalSpace& space)
{
    Json violations = Json::array();
    for (const auto& v : report.violations)
    {
        Json e{{"axiom", toString(v.axiom)}};
        e["member"] = v.member ? Json(*v.member) : Json();
        e["other"] = v.other ? Json(*v.other) : Json();
        e["message"] = v.message;
        Json witness = Json::array();
        for (const auto& w : v.witness) witness.push_back(vectorToJson(w));
        e["witness"] = witness;
        violations.push_back(e);
    }
    return Json{{"format", format::validationReport},
                {"space", spaceToJson(space)},
                {"valid", report.valid()},
                {"violations", violations}};
}

Json balanceReportToJson(const BalanceReport& report, const std::vector<std::string>& warnings)
{
    Json perCharacter = Json::object();
    for (const auto& [label, value] : report.perCharacter) perCharacter[label] = toString(value);
    return Json{{"format", format::balanceReport},
                {"balanced", report.balanced},
                {"residual", vectorToJson(report.residual)},
                {"quotient_residual", vectorToJson(report.quotientResidual)},
                {"per_character", perCharacter},
                {"warnings", warnings}};
}

Json tropicalPointToJson(const SphericalSpace& space, const RatVector& point)
{
    Json out{{"format", format::tropicalPoint}, {"space", spaceToJson(space)}, {"point", vectorToJson(point)}};
    if (isGlnSpace(space)) out["mu"] = vectorToJson(point);
    return out;
}

Json coloredWeightsToJson(const SphericalSpace& space, const std::optional<std::vector<ColoredWeight>>& weights)
{
    Json out{{"format", format::coloredWeights}, {"space", spaceToJson(space)}, {"feasible", weights.has_value()}};
    Json byLabel = Json::object();
    if (weights)
        for (const auto& c : *weights) byLabel[space.palette.at(c.color).label] = toString(c.weight);
    out["colored_weights"] = weights ? byLabel : Json();
    return out;
}

Json starToJson(const StarResult& result)
{
    Json projection = Json::array();
    for (Index i = 0; i < result.projection.rows(); ++i)
        projection.push_back(vectorToJson(IntVector(result.projection.row(i).transpose())));
    return Json{{"format", format::star}, {"projection", projection}, {"fan", fanToJson(result.fan)}};
}

}   // namespace sphtrop
