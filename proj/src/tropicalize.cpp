#include "sphtrop/tropicalize.hpp"

#include <algorithm>
#include <cmath>

namespace sphtrop {

RatVector tropTorus(const std::vector<PuiseuxPoly>& coords)
{
    RatVector out(static_cast<Eigen::Index>(coords.size()));
    for (std::size_t i = 0; i < coords.size(); ++i)
    {
        if (coords[i].isZero())
            throw MembershipError("coordinate " + std::to_string(i + 1) + " is zero: not a torus point");
        out(static_cast<Eigen::Index>(i)) = coords[i].valuation().value();
    }
    return out;
}

RatVector tropSL2ModU(const PuiseuxPoly& x, const PuiseuxPoly& y)
{
    const ExtendedRational v = min(x.valuation(), y.valuation());
    if (v.isInfinite())
        throw MembershipError("(0, 0) is not a point of SL2/U");
    RatVector out(1);
    out(0) = v.value();
    return out;
}

std::vector<Rational> invariantFactorValuations(const PuiseuxMatrix& m)
{
    const int n = static_cast<int>(m.rows());
    if (m.cols() != m.rows() || n < 1)
        throw std::invalid_argument("invariant factors need a nonempty square matrix");
    if (determinant(m).isZero())
        throw MembershipError("singular matrix: not a point of GL_n");

    std::vector<Rational> increasing;
    Rational previous = 0;
    for (int k = 1; k <= n; ++k)
    {
        const Rational dk = minMinorValuation(m, k).value();
        increasing.push_back(dk - previous);
        previous = dk;
    }
    return {increasing.rbegin(), increasing.rend()};
}

PuiseuxMatrix branchMatrix(const CurveBranch& coords)
{
    const auto n = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(coords.size()))));
    if (n < 1 || static_cast<std::size_t>(n * n) != coords.size())
        throw std::invalid_argument(std::to_string(coords.size()) + " coordinates do not form a square matrix");
    PuiseuxMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            m(i, j) = coords[static_cast<std::size_t>(i * n + j)];
    return m;
}

RatVector tropPoint(const SphericalSpace& space, const CurveBranch& branch)
{
    RatVector point;
    switch (space.kind)
    {
        case SpaceKind::Torus:
            if (static_cast<Eigen::Index>(branch.size()) != space.rank)
                throw std::invalid_argument("torus point needs " + std::to_string(space.rank) + " coordinates");
            point = tropTorus(branch);
            break;
        case SpaceKind::SL2ModU:
            if (branch.size() != 2)
                throw std::invalid_argument("SL2/U point needs 2 coordinates");
            point = tropSL2ModU(branch[0], branch[1]);
            break;
        case SpaceKind::GLn:
        {
            if (static_cast<Eigen::Index>(branch.size()) != space.rank * space.rank)
                throw std::invalid_argument("GL_n point needs " + std::to_string(space.rank * space.rank) +
                                            " coordinates");
            const auto mu = invariantFactorValuations(branchMatrix(branch));
            point.resize(static_cast<Eigen::Index>(mu.size()));
            for (std::size_t i = 0; i < mu.size(); ++i) point(static_cast<Eigen::Index>(i)) = mu[i];
            break;
        }
        case SpaceKind::Generic:
            throw std::invalid_argument("no tropicalization map for space " + space.name);
    }
    if (!space.valuationCone.contains(point))
        throw std::logic_error("tropical point " + toString(point) + " left the valuation cone");
    return point;
}

BranchRay tropBranchRay(const SphericalSpace& space, const CurveBranch& branch)
{
    const RatVector point = tropPoint(space, branch);
    IntVector integral(point.size());
    for (Eigen::Index i = 0; i < point.size(); ++i)
    {
        if (boost::multiprecision::denominator(point(i)) != 1)
            throw std::domain_error("tropical point " + toString(point) +
                                    " is not integral; rescale the branch parameter");
        integral(i) = boost::multiprecision::numerator(point(i));
    }
    if ((integral.array() == 0).all())
        throw std::domain_error("branch tropicalizes to 0: it does not approach the boundary");
    const auto decomposition = primitive(integral);
    return {decomposition.direction, decomposition.stretch};
}

std::vector<PuiseuxPoly> glnSemiInvariants(const PuiseuxMatrix& m)
{
    const Eigen::Index n = m.rows();
    std::vector<PuiseuxPoly> out;
    for (Eigen::Index i = 0; i < n; ++i)
        out.push_back(determinant(PuiseuxMatrix(m.bottomRightCorner(n - i, n - i))));
    return out;
}

}   // namespace sphtrop
