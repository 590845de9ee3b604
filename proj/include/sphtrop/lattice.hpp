/**
 * Exact integer and rational linear algebra, together with rational
 * polyhedral cones described simultaneously by generators and by inequalities.
 *
 * All arithmetic is carried out over GMP integers and rationals; none of the
 * decision procedures below ever rounds.
 */

#ifndef SPHTROP_LATTICE_HPP
#define SPHTROP_LATTICE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "sphtrop/types.hpp"

namespace sphtrop {

// ---------------------------------------------------------------------------
// Dense exact linear algebra over a field (templated on the scalar)
// ---------------------------------------------------------------------------

/**
 * Reduced row echelon form of a matrix over an exact field. Returns the
 * reduced matrix and the list of pivot columns.
 */
template <typename Derived>
std::pair<Matrix<typename Derived::Scalar>, std::vector<Eigen::Index>>
reducedRowEchelon(const Eigen::MatrixBase<Derived>& input)
{
    using Scalar = typename Derived::Scalar;
    Matrix<Scalar> m = input;
    std::vector<Eigen::Index> pivots;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col)
    {
        Eigen::Index pivot = -1;
        for (Eigen::Index i = row; i < m.rows(); ++i)
        {
            if (m(i, col) != 0) { pivot = i; break; }
        }
        if (pivot < 0) continue;
        m.row(pivot).swap(m.row(row));
        const Scalar lead = m(row, col);
        m.row(row) /= lead;
        for (Eigen::Index i = 0; i < m.rows(); ++i)
        {
            if (i != row && m(i, col) != 0)
            {
                const Scalar factor = m(i, col);
                m.row(i) -= factor * m.row(row);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return {m, pivots};
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m)
{
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return static_cast<Eigen::Index>(reducedRowEchelon(m).second.size());
}

/// Basis (as columns) of the right kernel {x : m x = 0}.
template <typename Derived>
Matrix<typename Derived::Scalar> nullspace(const Eigen::MatrixBase<Derived>& m)
{
    using Scalar = typename Derived::Scalar;
    const Eigen::Index n = m.cols();
    std::vector<Eigen::Index> pivots;
    Matrix<Scalar> rref;
    if (m.rows() > 0)
        std::tie(rref, pivots) = reducedRowEchelon(m);
    std::vector<bool> isPivot(static_cast<std::size_t>(n), false);
    for (auto p : pivots) isPivot[static_cast<std::size_t>(p)] = true;

    Matrix<Scalar> basis = Matrix<Scalar>::Zero(n, n - static_cast<Eigen::Index>(pivots.size()));
    Eigen::Index k = 0;
    for (Eigen::Index free = 0; free < n; ++free)
    {
        if (isPivot[static_cast<std::size_t>(free)]) continue;
        basis(free, k) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            basis(pivots[r], k) = -rref(static_cast<Eigen::Index>(r), free);
        ++k;
    }
    return basis;
}

/// Solves a square nonsingular system exactly; throws std::invalid_argument
/// if the matrix is singular.
RatVector solveLinear(const RatMatrix& a, const RatVector& b);

/// Stacks a list of vectors as the columns of a matrix with `dim` rows.
template <typename Scalar>
Matrix<Scalar> columns(const std::vector<Vector<Scalar>>& vs, Eigen::Index dim)
{
    Matrix<Scalar> m(dim, static_cast<Eigen::Index>(vs.size()));
    for (std::size_t j = 0; j < vs.size(); ++j)
        m.col(static_cast<Eigen::Index>(j)) = vs[j];
    return m;
}

// ---------------------------------------------------------------------------
// Integer lattice primitives
// ---------------------------------------------------------------------------

/// A nonzero integer vector written as stretch * direction with
/// gcd(direction) = 1.
struct PrimitiveDecomposition
{
    IntVector direction;
    Integer stretch;
};

/// Throws std::invalid_argument for the zero vector, which has no direction.
PrimitiveDecomposition primitive(const IntVector& v);

/// The primitive integer vector on the ray spanned by a nonzero rational
/// vector.
IntVector primitiveDirection(const RatVector& v);

bool isPrimitive(const IntVector& v);

struct SmithForm
{
    IntMatrix u;    // unimodular, rows x rows
    IntMatrix d;    // diagonal with d(0,0) | d(1,1) | ...
    IntMatrix v;    // unimodular, cols x cols
};

/**
 * Smith normal form u * a * v = d. The pivot is always the nonzero entry of
 * smallest magnitude in the active block, ties broken in row-major order,
 * so the output is reproducible.
 */
SmithForm smithNormalForm(const IntMatrix& a);

/**
 * Row-style Hermite normal form under left multiplication by unimodular
 * matrices: echelon, positive pivots, entries above each pivot reduced into
 * [0, pivot). Zero rows are kept at the bottom.
 */
IntMatrix hermiteRowForm(const IntMatrix& a);

/**
 * Surjection Z^dim -> Z^m whose kernel is the saturation of span(vs), with
 * m = dim - rank(vs). The rows of the returned m x dim matrix are in
 * Hermite row form.
 */
IntMatrix quotientProjection(const std::vector<IntVector>& vs, Eigen::Index dim);

/**
 * Exact Fourier-Motzkin feasibility test for {x : a x >= b}. Returns a
 * witness point when the system is feasible.
 */
std::optional<RatVector> solveInequalities(const RatMatrix& a, const RatVector& b);

// ---------------------------------------------------------------------------
// Rational polyhedral cones
// ---------------------------------------------------------------------------

/**
 * A rational polyhedral cone in R^n.
 *
 * Generators are primitive integer vectors, sorted lexicographically; for a
 * strictly convex cone they are exactly the extreme rays. The inequality
 * description is cached at construction: a basis of the orthogonal
 * complement of the linear span (used as equations) and one canonical normal
 * per facet, chosen inside the linear span so that it is unique.
 */
class Cone
{
    public:
        Cone() = default;

        static Cone zero(Eigen::Index dim);
        static Cone whole(Eigen::Index dim);
        static Cone ray(const IntVector& v);
        static Cone fromGenerators(Eigen::Index dim, const std::vector<IntVector>& generators);
        static Cone fromInequalities(Eigen::Index dim, const std::vector<IntVector>& normals);

        Eigen::Index ambientDim() const { return dim_; }
        /// Dimension of the linear span.
        Eigen::Index dimension() const { return spanDim_; }
        const std::vector<IntVector>& generators() const { return generators_; }
        const std::vector<IntVector>& facetNormals() const { return facets_; }
        const std::vector<IntVector>& equations() const { return equations_; }

        /// Every normal n with <n, x> >= 0 on the cone: equations as +/- pairs
        /// first, then facet normals.
        std::vector<IntVector> normals() const;

        bool isZero() const { return spanDim_ == 0; }
        /// True when the cone contains no line.
        bool isStrictlyConvex() const { return strictlyConvex_; }

        bool contains(const RatVector& x) const;
        bool contains(const IntVector& x) const { return contains(toRational(x)); }
        bool contains(const Cone& other) const;

        /// Interior point of the cone in its span (sum of the generators).
        IntVector relativeInteriorPoint() const;

    private:
        Eigen::Index dim_ = 0;
        Eigen::Index spanDim_ = 0;
        bool strictlyConvex_ = true;
        std::vector<IntVector> generators_;
        std::vector<IntVector> facets_;
        std::vector<IntVector> equations_;
};

/// Set equality, decided by mutual containment of generators.
bool sameCone(const Cone& a, const Cone& b);

/// Inequality normals whose nonnegativity half-spaces cut out the cone.
std::vector<IntVector> coneDual(const Cone& c);

Cone intersect(const Cone& a, const Cone& b);

/// Image of a cone under an integer linear map.
Cone image(const IntMatrix& map, const Cone& c);

/// All faces, including {0} (or the lineality space) and c itself, ordered by
/// dimension and then lexicographically by generators.
std::vector<Cone> faces(const Cone& c);

bool isFaceOf(const Cone& face, const Cone& c);

/// A point of relint(a) that lies in b, if one exists.
std::optional<RatVector> relintWitness(const Cone& a, const Cone& b);

inline bool relintMeets(const Cone& a, const Cone& b)
{
    return relintWitness(a, b).has_value();
}

/// A point in relint(a) ∩ relint(b) ∩ region, if one exists.
std::optional<RatVector> commonRelintWitness(const Cone& a, const Cone& b, const Cone& region);

std::string toString(const Cone& c);

}   // namespace sphtrop

#endif
