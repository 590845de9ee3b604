#include "sphtrop/balance.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace sphtrop {

namespace {

using Index = Eigen::Index;

struct LexLessInt
{
    bool operator()(const IntVector& a, const IntVector& b) const { return lexLess(a, b); }
};

}   // namespace

WeightedRayFan assemble(const SphericalSpace& space, const std::vector<BranchRay>& rays,
                        const std::vector<ColoredWeight>& colored, std::vector<std::string>* warnings)
{
    std::map<IntVector, Integer, LexLessInt> merged;
    for (const auto& r : rays)
    {
        if (r.ray.size() != space.rank)
            throw std::invalid_argument("ray " + toString(r.ray) + " has the wrong dimension");
        if (!isPrimitive(r.ray))
            throw std::invalid_argument("ray " + toString(r.ray) + " is not primitive");
        if (!space.valuationCone.contains(r.ray))
            throw std::invalid_argument("ray " + toString(r.ray) + " lies outside the valuation cone");
        if (r.multiplicity < 0)
            throw std::invalid_argument("ray " + toString(r.ray) + " has negative weight");
        merged[r.ray] += r.multiplicity;
    }

    WeightedRayFan fan;
    fan.space = space;
    for (const auto& [ray, weight] : merged)
    {
        if (weight == 0)
        {
            if (warnings) warnings->push_back("dropped zero-weight ray " + toString(ray));
            continue;
        }
        fan.rays.push_back({ray, weight});
    }

    std::map<std::size_t, Integer> colors;
    for (const auto& c : colored)
    {
        if (c.color >= space.palette.size())
            throw std::invalid_argument("unknown palette index " + std::to_string(c.color));
        if (c.weight < 0)
            throw std::invalid_argument("negative colored weight for " + space.palette[c.color].label);
        colors[c.color] += c.weight;
    }
    for (const auto& [j, w] : colors) fan.coloredWeights.push_back({j, w});
    return fan;
}

WeightedRayFan assembleFromBranches(const SphericalSpace& space, const std::vector<CurveBranch>& branches,
                                    const std::vector<ColoredWeight>& colored,
                                    std::vector<std::string>* warnings)
{
    std::vector<BranchRay> rays;
    for (std::size_t b = 0; b < branches.size(); ++b)
    {
        try
        {
            rays.push_back(tropBranchRay(space, branches[b]));
        }
        catch (const MembershipError&)
        {
            throw;
        }
        catch (const std::domain_error& e)
        {
            if (warnings) warnings->push_back("branch " + std::to_string(b) + ": " + e.what());
        }
    }
    return assemble(space, rays, colored, warnings);
}

IntVector balancingResidual(const WeightedRayFan& fan)
{
    IntVector residual = IntVector::Zero(fan.space.rank);
    for (const auto& r : fan.rays) residual += r.weight * r.ray;
    for (const auto& c : fan.coloredWeights) residual += c.weight * fan.space.palette.at(c.color).vector;
    return residual;
}

Integer pairingResidual(const WeightedRayFan& fan, const IntVector& character)
{
    if (character.size() != fan.space.rank)
        throw std::invalid_argument("character " + toString(character) + " has the wrong dimension");
    // Pair each term separately: sum m_σ <v_σ, m> + sum m_j <v_j, m>.
    Integer total = 0;
    for (const auto& r : fan.rays) total += r.weight * r.ray.dot(character);
    for (const auto& c : fan.coloredWeights)
        total += c.weight * fan.space.palette.at(c.color).vector.dot(character);
    return total;
}

IntVector checkQuotientBalancing(const WeightedRayFan& fan)
{
    std::vector<IntVector> palette;
    for (const auto& c : fan.space.palette) palette.push_back(c.vector);
    const IntMatrix pi = quotientProjection(palette, fan.space.rank);
    IntVector out = IntVector::Zero(pi.rows());
    for (const auto& r : fan.rays) out += r.weight * (pi * r.ray);
    return out;
}

BalanceReport checkBalancing(const WeightedRayFan& fan)
{
    BalanceReport report;
    report.residual = balancingResidual(fan);
    report.balanced = (report.residual.array() == 0).all();
    report.quotientResidual = checkQuotientBalancing(fan);
    for (Index i = 0; i < fan.space.rank; ++i)
    {
        const std::string label = static_cast<Index>(fan.space.characterBasis.size()) == fan.space.rank
                                      ? fan.space.characterBasis[static_cast<std::size_t>(i)]
                                      : "chi" + std::to_string(i + 1);
        report.perCharacter.emplace_back(label, pairingResidual(fan, IntVector::Unit(fan.space.rank, i)));
    }
    return report;
}

std::optional<std::vector<ColoredWeight>> solveColoredWeights(const SphericalSpace& space,
                                                              const std::vector<WeightedRay>& rays)
{
    IntVector target = IntVector::Zero(space.rank);
    Integer bound = 0;
    for (const auto& r : rays)
    {
        if (r.ray.size() != space.rank)
            throw std::invalid_argument("ray " + toString(r.ray) + " has the wrong dimension");
        target -= r.weight * r.ray;
        bound += r.weight * r.ray.cwiseAbs().sum();
    }

    const std::size_t colors = space.palette.size();
    if (colors == 0)
    {
        if ((target.array() == 0).all()) return std::vector<ColoredWeight>{};
        return std::nullopt;
    }

    auto pack = [](const std::vector<Integer>& weights) {
        std::vector<ColoredWeight> out;
        for (std::size_t j = 0; j < weights.size(); ++j)
            if (weights[j] != 0) out.push_back({j, weights[j]});
        return out;
    };

    std::vector<IntVector> vectors;
    for (const auto& c : space.palette) vectors.push_back(c.vector);
    const IntMatrix p = columns(vectors, space.rank);

    // Independent palette: the solution is unique, so solve directly.
    if (rank(toRational(p)) == static_cast<Index>(colors))
    {
        RatMatrix aug(space.rank, static_cast<Index>(colors) + 1);
        aug.leftCols(static_cast<Index>(colors)) = toRational(p);
        aug.col(static_cast<Index>(colors)) = toRational(target);
        const auto [rref, pivots] = reducedRowEchelon(aug);
        if (!pivots.empty() && pivots.back() == static_cast<Index>(colors)) return std::nullopt;
        std::vector<Integer> weights(colors);
        for (std::size_t j = 0; j < colors; ++j)
        {
            const Rational w = rref(static_cast<Index>(j), static_cast<Index>(colors));
            if (w < 0 || boost::multiprecision::denominator(w) != 1) return std::nullopt;
            weights[j] = boost::multiprecision::numerator(w);
        }
        return pack(weights);
    }

    // Dependent palette: exhaustive search by increasing total weight; the
    // first hit in lexicographic order wins.
    std::vector<Integer> weights(colors, 0);
    std::function<bool(std::size_t, Integer, const IntVector&)> search =
        [&](std::size_t j, Integer remaining, const IntVector& partial) -> bool {
        if (j + 1 == colors)
        {
            if (remaining > bound) return false;
            weights[j] = remaining;
            return ((partial + remaining * p.col(static_cast<Index>(j)) - target).array() == 0).all();
        }
        for (Integer w = 0; w <= remaining && w <= bound; ++w)
        {
            weights[j] = w;
            if (search(j + 1, remaining - w, partial + w * p.col(static_cast<Index>(j)))) return true;
        }
        return false;
    };
    const Integer maxTotal = bound * static_cast<long>(colors);
    for (Integer total = 0; total <= maxTotal; ++total)
        if (search(0, total, IntVector::Zero(space.rank))) return pack(weights);
    return std::nullopt;
}

}   // namespace sphtrop
