// Command-line front end.
//
// Exit status: 0 success / balanced / valid / feasible, 1 unbalanced / invalid
// fan / infeasible, 2 input error, 3 point not on the space.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"

#include "sphtrop/catalog.hpp"
#include "sphtrop/formats.hpp"
#include "sphtrop/plot.hpp"

using namespace sphtrop;

namespace {

enum Exit
{
    kOk = 0,
    kNegative = 1,
    kInputError = 2,
    kMembershipError = 3
};

struct Options
{
    bool json = false;
    std::string out;
    std::string file;
    std::string fixture;
    std::string space;
    std::string coords;
    std::size_t cone = 0;
    std::vector<std::string> surviving;
    bool survivingGiven = false;
};

Json loadDocument(const Options& opt)
{
    if (!opt.fixture.empty())
    {
        if (!opt.file.empty()) throw ParseError("give either a file or --fixture, not both");
        try
        {
            return parseJson(fixtureText(opt.fixture));
        }
        catch (const std::out_of_range& e)
        {
            throw ParseError(e.what());
        }
    }
    if (opt.file.empty()) throw ParseError("no input: give a file, '-' for stdin, or --fixture");
    std::string text;
    if (opt.file == "-")
    {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    }
    else
    {
        std::ifstream in(opt.file);
        if (!in) throw ParseError("cannot read " + opt.file);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    return parseJson(text);
}

void emit(const Options& opt, const Json& doc, const std::string& human)
{
    if (!opt.out.empty())
    {
        std::ofstream out(opt.out);
        if (!out) throw ParseError("cannot write " + opt.out);
        out << dump(doc);
    }
    if (opt.json)
        std::cout << dump(doc);
    else if (opt.out.empty() || !human.empty())
        std::cout << human;
}

// Weighted fans pass through; curves are tropicalized branch by branch.
WeightedRayFan weightedFanFrom(const Json& doc, std::vector<std::string>& warnings)
{
    const std::string fmt = documentFormat(doc);
    if (fmt == format::weightedFan) return weightedFanFromJson(doc);
    if (fmt == format::curve)
    {
        const ReferenceCurve curve = curveFromJson(doc);
        return assembleFromBranches(curve.space, curve.branches, curve.coloredWeights, &warnings);
    }
    throw ParseError("expected a weighted-fan or curve document, found format '" + fmt + "'");
}

std::string describeCone(const SphericalSpace& space, const ColoredCone& cc)
{
    std::string s = toString(cc.cone);
    if (!cc.colors.empty())
    {
        s += " colors {";
        bool first = true;
        for (auto j : cc.colors)
        {
            s += (first ? "" : ", ") + space.palette.at(j).label;
            first = false;
        }
        s += "}";
    }
    return s;
}

std::string describeFan(const ColoredFan& fan)
{
    std::ostringstream out;
    out << "space " << fan.space.name << " (rank " << fan.space.rank << ")\n";
    for (std::size_t k = 0; k < fan.cones.size(); ++k) out << "  [" << k << "] " << describeCone(fan.space, fan.cones[k]) << "\n";
    return out.str();
}

std::string describeReport(const ValidationReport& report)
{
    if (report.valid()) return "valid\n";
    std::ostringstream out;
    out << "invalid\n";
    for (const auto& v : report.violations)
    {
        out << "  " << toString(v.axiom);
        if (v.member) out << " member " << *v.member;
        if (v.other) out << " and " << *v.other;
        out << ": " << v.message;
        for (const auto& w : v.witness) out << " " << toString(w);
        out << "\n";
    }
    return out.str();
}

int cmdTrop(const Options& opt)
{
    const SphericalSpace space = spaceFromJson(Json(opt.space));
    CurveBranch coords;
    if (space.kind == SpaceKind::GLn)
    {
        const PuiseuxMatrix m = parsePuiseuxMatrix(opt.coords);
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            for (Eigen::Index j = 0; j < m.cols(); ++j) coords.push_back(m(i, j));
    }
    else
    {
        coords = parsePuiseuxTuple(opt.coords);
    }
    const RatVector point = tropPoint(space, coords);
    emit(opt, tropicalPointToJson(space, point), space.name + ": " + toString(point) + "\n");
    return kOk;
}

int cmdFanValidate(const Options& opt)
{
    const ColoredFan fan = fanFromJson(loadDocument(opt));
    const ValidationReport report = validateColoredFan(fan);
    emit(opt, validationReportToJson(report, fan.space), describeReport(report));
    return report.valid() ? kOk : kNegative;
}

int cmdFanStar(const Options& opt)
{
    const ColoredFan fan = fanFromJson(loadDocument(opt));
    std::optional<std::set<std::size_t>> surviving;
    if (opt.survivingGiven)
    {
        surviving.emplace();
        for (const auto& label : opt.surviving)
        {
            if (label.empty()) continue;
            const auto j = fan.space.colorIndex(label);
            if (!j) throw ParseError("unknown color '" + label + "'");
            surviving->insert(*j);
        }
    }
    const StarResult result = star(fan, opt.cone, surviving);
    std::ostringstream human;
    human << "projection:";
    for (Eigen::Index i = 0; i < result.projection.rows(); ++i)
        human << " " << toString(IntVector(result.projection.row(i).transpose()));
    human << "\n" << describeFan(result.fan);
    emit(opt, starToJson(result), human.str());
    return kOk;
}

int cmdFanDecolor(const Options& opt)
{
    const ColoredFan fan = fanFromJson(loadDocument(opt));
    const DecolorResult result = decolor(fan);
    if (!result.report.valid())
    {
        std::cerr << describeReport(result.report);
        emit(opt, validationReportToJson(result.report, result.fan.space), "");
        return kNegative;
    }
    emit(opt, fanToJson(result.fan), describeFan(result.fan));
    return kOk;
}

int cmdBalanceCheck(const Options& opt)
{
    std::vector<std::string> warnings;
    const WeightedRayFan fan = weightedFanFrom(loadDocument(opt), warnings);
    const BalanceReport report = checkBalancing(fan);
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
    std::ostringstream human;
    human << (report.balanced ? "balanced" : "unbalanced") << "\n"
          << "residual: " << toString(report.residual) << "\n"
          << "quotient residual: " << toString(report.quotientResidual) << "\n";
    for (const auto& [label, value] : report.perCharacter) human << label << ": " << toString(value) << "\n";
    emit(opt, balanceReportToJson(report, warnings), human.str());
    return report.balanced ? kOk : kNegative;
}

int cmdBalanceSolve(const Options& opt)
{
    std::vector<std::string> warnings;
    const WeightedRayFan fan = weightedFanFrom(loadDocument(opt), warnings);
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
    const auto weights = solveColoredWeights(fan.space, fan.rays);
    std::ostringstream human;
    if (!weights)
        human << "infeasible\n";
    else if (weights->empty())
        human << "no colored weights needed\n";
    else
        for (const auto& c : *weights) human << fan.space.palette[c.color].label << " = " << toString(c.weight) << "\n";
    emit(opt, coloredWeightsToJson(fan.space, weights), human.str());
    return weights ? kOk : kNegative;
}

int cmdCatalogList(const Options& opt)
{
    Json spaces = Json::array();
    std::ostringstream human;
    human << "spaces:\n";
    for (const std::string id : {"torus2", "sl2u", "gln2", "gln3"})
    {
        const SphericalSpace s = spaceFromId(id);
        Json palette = Json::object();
        human << "  " << id << "  rank " << s.rank;
        for (const auto& c : s.palette)
        {
            palette[c.label] = Json::array();
            for (Eigen::Index i = 0; i < c.vector.size(); ++i) palette[c.label].push_back(toString(c.vector(i)));
            human << "  " << c.label << " " << toString(c.vector);
        }
        human << "\n";
        spaces.push_back(Json{{"id", id}, {"rank", s.rank}, {"palette", palette}});
    }
    human << "  (torusN and glnN are available for every N >= 1)\nfixtures:\n";
    Json fixtures = Json::array();
    for (const auto& f : listFixtures())
    {
        const std::string kind = f.kind == FixtureKind::Curve ? "curve" : "fan";
        human << "  " << f.name << "  " << kind << "  " << f.space << "  " << f.description << "\n";
        fixtures.push_back(Json{{"name", f.name}, {"kind", kind}, {"space", f.space}, {"description", f.description}});
    }
    emit(opt, Json{{"format", format::catalog}, {"spaces", spaces}, {"fixtures", fixtures}}, human.str());
    return kOk;
}

int cmdPlot(const Options& opt)
{
    const Json doc = loadDocument(opt);
    std::string svg;
    if (documentFormat(doc) == format::fan)
    {
        svg = plotColoredFan(fanFromJson(doc));
    }
    else
    {
        std::vector<std::string> warnings;
        svg = plotWeightedFan(weightedFanFrom(doc, warnings));
    }
    if (opt.out.empty())
    {
        std::cout << svg;
        return kOk;
    }
    std::ofstream out(opt.out);
    if (!out) throw ParseError("cannot write " + opt.out);
    out << svg;
    return kOk;
}

void addInput(CLI::App* cmd, Options& opt)
{
    cmd->add_option("file", opt.file, "input document ('-' reads stdin)");
    cmd->add_option("--fixture", opt.fixture, "use an embedded fixture instead of a file");
}

}   // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Spherical tropicalization toolkit: colored fans, tropical points of curves, balancing."};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_flag("--json", opt.json, "print the JSON document instead of a summary");
    app.add_option("--out", opt.out, "also write the JSON document (or the SVG for plot) to this file");

    int status = kOk;

    auto* trop = app.add_subcommand("trop", "tropicalize one point: torusN (..), sl2u (x, y), glnN [[..],..]");
    trop->add_option("space,--space", opt.space, "space id: torusN, sl2u, glnN")->required();
    trop->add_option("coords", opt.coords, "coordinates as Puiseux polynomials in t")->required();
    trop->callback([&] { status = cmdTrop(opt); });

    auto* fan = app.add_subcommand("fan", "colored fan operations");
    fan->require_subcommand(1);
    auto* validate = fan->add_subcommand("validate", "check the colored cone and colored fan axioms");
    addInput(validate, opt);
    validate->callback([&] { status = cmdFanValidate(opt); });
    auto* starCmd = fan->add_subcommand("star", "fan of the orbit closure of one member");
    addInput(starCmd, opt);
    starCmd->add_option("--cone", opt.cone, "index of the fan member")->required();
    starCmd->add_option("--surviving", opt.surviving,
                        "colors that stay divisors on the orbit (comma separated; may be empty)")
        ->delimiter(',')
        ->expected(0, -1);
    starCmd->callback([&] {
        if (starCmd->count("--surviving")) opt.survivingGiven = true;
        status = cmdFanStar(opt);
    });
    auto* decolorCmd = fan->add_subcommand("decolor", "toroidal fan obtained by forgetting colors");
    addInput(decolorCmd, opt);
    decolorCmd->callback([&] { status = cmdFanDecolor(opt); });

    auto* balance = app.add_subcommand("balance", "balancing of weighted fans and curves");
    balance->require_subcommand(1);
    auto* check = balance->add_subcommand("check", "residual of the balancing condition");
    addInput(check, opt);
    check->callback([&] { status = cmdBalanceCheck(opt); });
    auto* solve = balance->add_subcommand("solve-colors", "colored weights that balance the rays");
    addInput(solve, opt);
    solve->callback([&] { status = cmdBalanceSolve(opt); });

    auto* catalog = app.add_subcommand("catalog", "built-in spaces and fixtures");
    catalog->require_subcommand(1);
    catalog->add_subcommand("list", "list spaces and fixtures")->callback([&] { status = cmdCatalogList(opt); });

    auto* plot = app.add_subcommand("plot", "SVG drawing of a rank 1 or 2 fan, weighted fan or curve");
    addInput(plot, opt);
    plot->callback([&] { status = cmdPlot(opt); });

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }
    catch (const MembershipError& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return kMembershipError;
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return status;
}
