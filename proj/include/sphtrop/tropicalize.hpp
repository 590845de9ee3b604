/**
 * Spherical tropicalization of K-points of the catalog spaces, where
 * K = Q{{t}} is represented by finite Puiseux polynomials.
 *
 *   torus(n):  coordinate-wise valuations
 *   sl2_u:     min(val x, val y)
 *   gln(n):    invariant-factor (Cartan) valuations, largest first
 */

#ifndef SPHTROP_TROPICALIZE_HPP
#define SPHTROP_TROPICALIZE_HPP

#include <vector>

#include "sphtrop/luna_vust.hpp"
#include "sphtrop/puiseux.hpp"

namespace sphtrop {

/// Coordinates of a point on a curve branch: n entries for torus(n), 2 for
/// sl2_u, n*n (row-major) for gln(n).
using CurveBranch = std::vector<PuiseuxPoly>;

/// Throws MembershipError when a coordinate vanishes.
RatVector tropTorus(const std::vector<PuiseuxPoly>& coords);

/// Throws MembershipError when both coordinates vanish.
RatVector tropSL2ModU(const PuiseuxPoly& x, const PuiseuxPoly& y);

/**
 * Valuations mu_1 >= ... >= mu_n of the diagonal in a Cartan decomposition
 * g * diag(t^mu) * h, g, h in GL_n(O_K). Computed from the minimum
 * valuations d_k of the k x k minors: the increasing invariant factors are
 * d_1, d_2 - d_1, ..., d_n - d_{n-1}. Throws MembershipError when the matrix
 * is singular.
 */
std::vector<Rational> invariantFactorValuations(const PuiseuxMatrix& m);

/// Reshapes n*n row-major coordinates into a square matrix.
PuiseuxMatrix branchMatrix(const CurveBranch& coords);

/// Dispatches on the space kind; the result is checked against the
/// valuation cone.
RatVector tropPoint(const SphericalSpace& space, const CurveBranch& branch);

struct BranchRay
{
    IntVector ray;        // primitive
    Integer multiplicity;
};

/**
 * Primitive ray and lattice stretch factor of the tropicalized branch. The
 * stretch factor is the weight the branch contributes. Throws
 * std::domain_error when the tropicalization is zero (the branch does not
 * approach the boundary) or not integral.
 */
BranchRay tropBranchRay(const SphericalSpace& space, const CurveBranch& branch);

/// Semi-invariants h_i = det of the lower-right block starting at (i, i),
/// i = 1..n, for gln(n).
std::vector<PuiseuxPoly> glnSemiInvariants(const PuiseuxMatrix& m);

}   // namespace sphtrop

#endif
