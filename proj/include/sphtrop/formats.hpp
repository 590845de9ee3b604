/**
 * JSON documents exchanged by the command-line tool and stored as fixtures.
 * Every document carries a top-level "format" tag; rationals and integers are
 * strings, Puiseux polynomials use the text syntax of parsePuiseux, colors are
 * referred to by label. Field order is fixed, so printing is deterministic
 * and print(parse(print(x))) == print(x).
 */

#ifndef SPHTROP_FORMATS_HPP
#define SPHTROP_FORMATS_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "sphtrop/balance.hpp"
#include "sphtrop/catalog.hpp"

namespace sphtrop {

using Json = nlohmann::ordered_json;

namespace format {
inline constexpr const char* space = "sphtrop/space/1";
inline constexpr const char* fan = "sphtrop/fan/1";
inline constexpr const char* weightedFan = "sphtrop/weighted-fan/1";
inline constexpr const char* curve = "sphtrop/curve/1";
inline constexpr const char* balanceReport = "sphtrop/balance-report/1";
inline constexpr const char* validationReport = "sphtrop/validation-report/1";
inline constexpr const char* tropicalPoint = "sphtrop/tropical-point/1";
inline constexpr const char* coloredWeights = "sphtrop/colored-weights/1";
inline constexpr const char* star = "sphtrop/star/1";
inline constexpr const char* catalog = "sphtrop/catalog/1";
}   // namespace format

/// All parse functions throw ParseError on malformed or inconsistent input.
Json parseJson(const std::string& text);
std::string dump(const Json& doc);

/// Built-in spaces print as their id string, anything else as an object.
Json spaceToJson(const SphericalSpace& space);
SphericalSpace spaceFromJson(const Json& j);

Json fanToJson(const ColoredFan& fan);
ColoredFan fanFromJson(const Json& j);

/// Parsing goes through assemble(), so rays are validated and merged.
Json weightedFanToJson(const WeightedRayFan& fan);
WeightedRayFan weightedFanFromJson(const Json& j);

Json curveToJson(const ReferenceCurve& curve);
ReferenceCurve curveFromJson(const Json& j);

Json validationReportToJson(const ValidationReport& report, const SphericalSpace& space);
Json balanceReportToJson(const BalanceReport& report, const std::vector<std::string>& warnings = {});
Json tropicalPointToJson(const SphericalSpace& space, const RatVector& point);
Json coloredWeightsToJson(const SphericalSpace& space,
                          const std::optional<std::vector<ColoredWeight>>& weights);
Json starToJson(const StarResult& result);

/// Document format tag, or "" if absent.
std::string documentFormat(const Json& j);

}   // namespace sphtrop

#endif
