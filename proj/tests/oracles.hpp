// Independent reference computations and random generators shared by the
// unit and acceptance tests. Nothing here calls the code path it checks.

#ifndef SPHTROP_TESTS_ORACLES_HPP
#define SPHTROP_TESTS_ORACLES_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "sphtrop/catalog.hpp"
#include "sphtrop/lattice.hpp"
#include "sphtrop/puiseux.hpp"

namespace oracle {

using namespace sphtrop;
using Index = Eigen::Index;

inline long uniform(std::mt19937_64& rng, long lo, long hi)
{
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

template <typename Derived>
bool allZero(const Eigen::MatrixBase<Derived>& m)
{
    return (m.array() == 0).all();
}

// ---------------------------------------------------------------------------
// Invariant factors by division-free elimination.
//
// With p the entry of least valuation at (r, s), the Schur complement of p is
// S = (p * a_ij - a_is * a_rj) / p over the remaining rows and columns, and
// the invariant factors of A are val(p) together with those of S. Working
// with B = p * S avoids division: IF(S) = IF(B) - val(p).

inline std::vector<Rational> eliminationInvariantFactors(const PuiseuxMatrix& a)
{
    const Index n = a.rows();
    if (n == 0) return {};
    Index r = -1, s = -1;
    ExtendedRational best;
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            if (a(i, j).valuation() < best)
            {
                best = a(i, j).valuation();
                r = i;
                s = j;
            }
    if (r < 0) throw std::domain_error("singular");
    const PuiseuxPoly& p = a(r, s);
    const Rational vp = best.value();

    PuiseuxMatrix b(n - 1, n - 1);
    for (Index i = 0, bi = 0; i < n; ++i)
    {
        if (i == r) continue;
        for (Index j = 0, bj = 0; j < n; ++j)
        {
            if (j == s) continue;
            b(bi, bj) = p * a(i, j) - a(i, s) * a(r, j);
            ++bj;
        }
        ++bi;
    }
    std::vector<Rational> out{vp};
    for (const auto& f : eliminationInvariantFactors(b)) out.push_back(f - vp);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

// ---------------------------------------------------------------------------
// Smith invariants from determinantal divisors: d_k = gcd of k x k minors.

inline Integer integerDet(IntMatrix m)
{
    // Bareiss elimination over Z.
    const Index n = m.rows();
    if (n == 0) return 1;
    Integer sign = 1, prev = 1;
    for (Index k = 0; k + 1 < n; ++k)
    {
        if (m(k, k) == 0)
        {
            Index swap = k + 1;
            while (swap < n && m(swap, k) == 0) ++swap;
            if (swap == n) return 0;
            m.row(k).swap(m.row(swap));
            sign = -sign;
        }
        for (Index i = k + 1; i < n; ++i)
            for (Index j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

inline void combinations(Index n, Index k, Index start, std::vector<Index>& cur, std::vector<std::vector<Index>>& out)
{
    if (static_cast<Index>(cur.size()) == k)
    {
        out.push_back(cur);
        return;
    }
    for (Index i = start; i < n; ++i)
    {
        cur.push_back(i);
        combinations(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<Index>> subsets(Index n, Index k)
{
    std::vector<std::vector<Index>> out;
    std::vector<Index> cur;
    combinations(n, k, 0, cur, out);
    return out;
}

inline std::vector<Integer> smithByMinors(const IntMatrix& a)
{
    std::vector<Integer> diag;
    Integer previous = 1;
    const Index r = std::min(a.rows(), a.cols());
    for (Index k = 1; k <= r; ++k)
    {
        Integer g = 0;
        for (const auto& rows : subsets(a.rows(), k))
            for (const auto& cols : subsets(a.cols(), k))
            {
                IntMatrix minor(k, k);
                for (Index i = 0; i < k; ++i)
                    for (Index j = 0; j < k; ++j) minor(i, j) = a(rows[i], cols[j]);
                g = boost::multiprecision::gcd(g, abs(integerDet(minor)));
            }
        if (g == 0)
        {
            diag.resize(static_cast<std::size_t>(r), Integer(0));
            return diag;
        }
        diag.push_back(g / previous);
        previous = g;
    }
    return diag;
}

// ---------------------------------------------------------------------------
// Cone membership by Caratheodory: x is in cone(G) iff it is a nonnegative
// combination of some linearly independent subset of G.

inline bool inConeCaratheodory(const std::vector<IntVector>& gens, const RatVector& x, Index dim)
{
    if ((x.array() == 0).all()) return true;
    for (Index k = 1; k <= std::min<Index>(dim, static_cast<Index>(gens.size())); ++k)
    {
        for (const auto& pick : subsets(static_cast<Index>(gens.size()), k))
        {
            RatMatrix aug(dim, k + 1);
            for (Index j = 0; j < k; ++j) aug.col(j) = toRational(gens[static_cast<std::size_t>(pick[j])]);
            aug.col(k) = x;
            const auto [rref, pivots] = reducedRowEchelon(aug);
            if (static_cast<Index>(pivots.size()) != k || pivots.back() != k - 1) continue;   // dependent or inconsistent
            bool nonnegative = true;
            for (Index j = 0; j < k; ++j) nonnegative = nonnegative && rref(j, k) >= 0;
            if (nonnegative) return true;
        }
    }
    return false;
}

// ---------------------------------------------------------------------------
// Color vectors of gln(n) from transversal curves.
//
// In the basis f_i = h_i / h_{i+1} (h_{n+1} = 1) of B-semi-invariants, the
// color where h_j vanishes has coordinates ord(f_i) along a curve crossing
// {h_j = 0} transversally at a point where the other h_i do not vanish.

inline PuiseuxPoly lowerRightMinor(const PuiseuxMatrix& m, Index i)
{
    const Index n = m.rows();
    return determinantCofactor(PuiseuxMatrix(m.bottomRightCorner(n - i, n - i)));
}

inline std::vector<IntVector> glnColorsByCurves(int n, std::mt19937_64& rng)
{
    std::vector<IntVector> colors;
    for (int j = 1; j < n; ++j)   // 0-based index of the vanishing h, i.e. h_{j+1}
    {
        for (int attempt = 0; attempt < 100; ++attempt)
        {
            IntMatrix base(n, n), direction(n, n);
            for (Index r = 0; r < n; ++r)
                for (Index c = 0; c < n; ++c)
                {
                    base(r, c) = uniform(rng, -4, 4);
                    direction(r, c) = uniform(rng, -4, 4);
                }
            // det of the block starting at (j, j) is affine in its corner entry.
            PuiseuxMatrix point(n, n);
            for (Index r = 0; r < n; ++r)
                for (Index c = 0; c < n; ++c) point(r, c) = PuiseuxPoly(Rational(base(r, c)));
            point(j, j) = PuiseuxPoly(Rational(0));
            const PuiseuxPoly constant = lowerRightMinor(point, j);
            point(j, j) = PuiseuxPoly(Rational(1));
            const PuiseuxPoly slope = lowerRightMinor(point, j) - constant;
            if (slope.isZero()) continue;
            const Rational corner = -constant.leadingCoefficient() / slope.leadingCoefficient();
            point(j, j) = PuiseuxPoly(corner);

            PuiseuxMatrix curve(n, n);
            for (Index r = 0; r < n; ++r)
                for (Index c = 0; c < n; ++c)
                    curve(r, c) = point(r, c) + PuiseuxPoly(Rational(direction(r, c))) * PuiseuxPoly::t();

            std::vector<ExtendedRational> ords;
            for (Index i = 0; i < n; ++i) ords.push_back(lowerRightMinor(curve, i).valuation());
            ords.push_back(ExtendedRational(Rational(0)));
            // Transversal: h_{j+1} vanishes to order exactly 1, the others not at all.
            bool ok = true;
            for (Index i = 0; i < n; ++i)
            {
                if (ords[static_cast<std::size_t>(i)].isInfinite()) ok = false;
                else if (ords[static_cast<std::size_t>(i)].value() != (i == j ? 1 : 0)) ok = false;
            }
            if (!ok) continue;
            IntVector v(n);
            for (Index i = 0; i < n; ++i)
                v(i) = boost::multiprecision::numerator(ords[static_cast<std::size_t>(i)].value() -
                                                        ords[static_cast<std::size_t>(i + 1)].value());
            colors.push_back(v);
            break;
        }
        if (static_cast<int>(colors.size()) != j) throw std::runtime_error("no transversal curve found");
    }
    return colors;
}

// ---------------------------------------------------------------------------
// Random data.

inline PuiseuxPoly randomPuiseux(std::mt19937_64& rng, int maxTerms = 3, long denominator = 2)
{
    PuiseuxPoly p;
    const long terms = uniform(rng, 1, maxTerms);
    for (long k = 0; k < terms; ++k)
    {
        const Rational exponent(Rational(uniform(rng, -3 * denominator, 4 * denominator)) / denominator);
        long c = uniform(rng, -5, 5);
        if (c == 0) c = 1;
        p = p + PuiseuxPoly::monomial(Rational(c), exponent);
    }
    return p;
}

/// Random n x n matrix with nonzero determinant; about one entry in five is 0.
inline PuiseuxMatrix randomInvertible(std::mt19937_64& rng, Index n)
{
    for (;;)
    {
        PuiseuxMatrix m(n, n);
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j) m(i, j) = uniform(rng, 0, 4) == 0 ? PuiseuxPoly() : randomPuiseux(rng);
        if (!determinant(m).isZero()) return m;
    }
}

/// Element of GL_n(O): entries of nonnegative valuation whose constant terms
/// form an invertible rational matrix.
inline PuiseuxMatrix randomIntegralUnit(std::mt19937_64& rng, Index n)
{
    for (;;)
    {
        RatMatrix lead(n, n);
        PuiseuxMatrix m(n, n);
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j)
            {
                lead(i, j) = Rational(uniform(rng, -3, 3));
                PuiseuxPoly e(lead(i, j));
                for (int k = 0; k < 2; ++k)
                    e = e + PuiseuxPoly::monomial(Rational(uniform(rng, -3, 3)),
                                                  Rational(uniform(rng, 1, 6)) / 2);
                m(i, j) = e;
            }
        if (rank(lead) == n) return m;
    }
}

inline IntVector randomVector(std::mt19937_64& rng, Index dim, long bound)
{
    IntVector v(dim);
    for (Index i = 0; i < dim; ++i) v(i) = uniform(rng, -bound, bound);
    return v;
}

inline IntVector randomNonzero(std::mt19937_64& rng, Index dim, long bound)
{
    for (;;)
    {
        IntVector v = randomVector(rng, dim, bound);
        if (!(v.array() == 0).all()) return v;
    }
}

/// Random primitive vector of the valuation cone {mu_1 >= ... >= mu_n}.
inline IntVector randomWeylRay(std::mt19937_64& rng, Index dim, long bound)
{
    for (;;)
    {
        IntVector v = randomVector(rng, dim, bound);
        std::sort(v.data(), v.data() + dim, std::greater<>());
        if (!(v.array() == 0).all()) return primitive(v).direction;
    }
}

}   // namespace oracle

#endif
