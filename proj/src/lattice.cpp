#include "sphtrop/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sphtrop {

namespace {

using Index = Eigen::Index;

struct LexLessInt
{
    bool operator()(const IntVector& a, const IntVector& b) const { return lexLess(a, b); }
};

struct LexLessRat
{
    bool operator()(const RatVector& a, const RatVector& b) const { return lexLess(a, b); }
};

Integer contentOf(const IntVector& v)
{
    Integer g = 0;
    for (Index i = 0; i < v.size(); ++i)
        g = boost::multiprecision::gcd(g, v(i));
    return boost::multiprecision::abs(g);
}

/// Scales a nonzero integer vector by a positive factor to be primitive.
IntVector normalizeDirection(const IntVector& v)
{
    const Integer g = contentOf(v);
    if (g == 0) return v;
    IntVector out = v;
    for (Index i = 0; i < out.size(); ++i) out(i) /= g;
    return out;
}

bool isZeroVector(const IntVector& v)
{
    for (Index i = 0; i < v.size(); ++i)
        if (v(i) != 0) return false;
    return true;
}

Rational dot(const IntVector& a, const RatVector& x)
{
    Rational s = 0;
    for (Index i = 0; i < a.size(); ++i) s += Rational(a(i)) * x(i);
    return s;
}

Integer dot(const IntVector& a, const IntVector& b)
{
    Integer s = 0;
    for (Index i = 0; i < a.size(); ++i) s += a(i) * b(i);
    return s;
}

std::vector<IntVector> canonicalGenerators(Index dim, const std::vector<IntVector>& gens)
{
    std::set<IntVector, LexLessInt> unique;
    for (const auto& g : gens)
    {
        if (g.size() != dim)
            throw std::invalid_argument("generator " + toString(g) + " has wrong dimension");
        if (isZeroVector(g)) continue;
        unique.insert(normalizeDirection(g));
    }
    return {unique.begin(), unique.end()};
}

/// Integer basis of the orthogonal complement of span(gens).
std::vector<IntVector> orthogonalComplement(Index dim, const std::vector<IntVector>& gens)
{
    RatMatrix rows(static_cast<Index>(gens.size()), dim);
    for (std::size_t i = 0; i < gens.size(); ++i)
        rows.row(static_cast<Index>(i)) = toRational(gens[i]).transpose();
    RatMatrix kernel = gens.empty() ? RatMatrix(RatMatrix::Identity(dim, dim)) : nullspace(rows);
    std::vector<IntVector> out;
    for (Index j = 0; j < kernel.cols(); ++j)
        out.push_back(primitiveDirection(kernel.col(j)));
    return out;
}

/**
 * Eliminates the multipliers from {(x, l) : x = G l, l >= 0}. The surviving
 * inequalities in x contain every facet normal of cone(G), possibly together
 * with redundant ones.
 */
std::vector<IntVector> fourierMotzkinCandidates(Index dim, const std::vector<IntVector>& gens)
{
    const Index k = static_cast<Index>(gens.size());
    const Index width = dim + k;
    std::vector<IntVector> equalities;
    std::vector<IntVector> inequalities;
    for (Index i = 0; i < dim; ++i)
    {
        IntVector row = IntVector::Zero(width);
        row(i) = 1;
        for (Index j = 0; j < k; ++j) row(dim + j) = -gens[static_cast<std::size_t>(j)](i);
        equalities.push_back(row);
    }
    for (Index j = 0; j < k; ++j)
    {
        IntVector row = IntVector::Zero(width);
        row(dim + j) = 1;
        inequalities.push_back(row);
    }

    std::vector<bool> eliminated(static_cast<std::size_t>(k), false);

    // Substitute out multipliers that appear in an equality.
    for (bool progress = true; progress;)
    {
        progress = false;
        for (std::size_t e = 0; e < equalities.size() && !progress; ++e)
        {
            for (Index j = 0; j < k; ++j)
            {
                const Integer pivot = equalities[e](dim + j);
                if (pivot == 0) continue;
                const IntVector pivotRow = equalities[e];
                auto reduce = [&](IntVector& row) {
                    const Integer c = row(dim + j);
                    if (c == 0) return;
                    // row * |pivot| - c * sign(pivot) * pivotRow keeps the
                    // row's orientation, which matters for inequalities.
                    const Integer ap = boost::multiprecision::abs(pivot);
                    const Integer sp = pivot > 0 ? Integer(1) : Integer(-1);
                    row = (row * ap - pivotRow * (c * sp)).eval();
                    row = normalizeDirection(row);
                };
                equalities.erase(equalities.begin() + static_cast<std::ptrdiff_t>(e));
                for (auto& row : equalities) reduce(row);
                for (auto& row : inequalities) reduce(row);
                eliminated[static_cast<std::size_t>(j)] = true;
                progress = true;
                break;
            }
        }
    }

    for (Index j = 0; j < k; ++j)
    {
        if (eliminated[static_cast<std::size_t>(j)]) continue;
        const Index var = dim + j;
        std::vector<IntVector> pos, neg;
        std::set<IntVector, LexLessInt> next;
        for (const auto& row : inequalities)
        {
            if (row(var) > 0) pos.push_back(row);
            else if (row(var) < 0) neg.push_back(row);
            else if (!isZeroVector(row)) next.insert(row);
        }
        for (const auto& p : pos)
        {
            for (const auto& q : neg)
            {
                IntVector combined = (p * (-q(var)) + q * p(var)).eval();
                if (!isZeroVector(combined)) next.insert(normalizeDirection(combined));
            }
        }
        inequalities.assign(next.begin(), next.end());
    }

    std::vector<IntVector> out;
    for (const auto& row : inequalities)
    {
        IntVector x = row.head(dim);
        if (!isZeroVector(x)) out.push_back(normalizeDirection(x));
    }
    return out;
}

/// Generators (by index) on which the normal vanishes.
std::vector<std::size_t> zeroSet(const IntVector& normal, const std::vector<IntVector>& gens)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (dot(normal, gens[i]) == 0) out.push_back(i);
    return out;
}

Index rankOf(const std::vector<IntVector>& vs, Index dim)
{
    if (vs.empty()) return 0;
    return rank(toRational(columns(vs, dim)));
}

/// Normalizes a row for deduplication: first nonzero coefficient has
/// magnitude one. The constant term is carried in the last slot.
RatVector normalizeRow(const RatVector& row)
{
    for (Index i = 0; i + 1 < row.size(); ++i)
    {
        if (row(i) != 0)
        {
            const Rational scale = boost::multiprecision::abs(row(i));
            return row / scale;
        }
    }
    return row;
}

}   // namespace

// ---------------------------------------------------------------------------

RatVector solveLinear(const RatMatrix& a, const RatVector& b)
{
    const Index n = a.rows();
    if (a.cols() != n || b.size() != n)
        throw std::invalid_argument("solveLinear: shape mismatch");
    RatMatrix aug(n, n + 1);
    aug.leftCols(n) = a;
    aug.col(n) = b;
    auto [rref, pivots] = reducedRowEchelon(aug);
    if (static_cast<Index>(pivots.size()) != n || (n > 0 && pivots.back() != n - 1))
        throw std::invalid_argument("solveLinear: singular matrix");
    return rref.col(n);
}

PrimitiveDecomposition primitive(const IntVector& v)
{
    const Integer g = contentOf(v);
    if (g == 0)
        throw std::invalid_argument("primitive: the zero vector has no direction");
    IntVector p = v;
    for (Index i = 0; i < p.size(); ++i) p(i) /= g;
    return {p, g};
}

IntVector primitiveDirection(const RatVector& v)
{
    Integer lcm = 1;
    for (Index i = 0; i < v.size(); ++i)
        lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(v(i)));
    IntVector scaled(v.size());
    for (Index i = 0; i < v.size(); ++i)
        scaled(i) = boost::multiprecision::numerator(v(i) * Rational(lcm));
    return primitive(scaled).direction;
}

bool isPrimitive(const IntVector& v)
{
    return contentOf(v) == 1;
}

// ---------------------------------------------------------------------------

SmithForm smithNormalForm(const IntMatrix& a)
{
    const Index m = a.rows();
    const Index n = a.cols();
    IntMatrix d = a;
    IntMatrix u = IntMatrix::Identity(m, m);
    IntMatrix v = IntMatrix::Identity(n, n);

    for (Index t = 0; t < std::min(m, n); ++t)
    {
        bool blockIsZero = false;
        while (true)
        {
            // Smallest-magnitude nonzero pivot, row-major tie-break.
            Index pi = -1, pj = -1;
            Integer best = 0;
            for (Index i = t; i < m; ++i)
                for (Index j = t; j < n; ++j)
                {
                    if (d(i, j) == 0) continue;
                    Integer mag = boost::multiprecision::abs(d(i, j));
                    if (pi < 0 || mag < best) { pi = i; pj = j; best = mag; }
                }
            if (pi < 0) { blockIsZero = true; break; }
            if (pi != t) { d.row(pi).swap(d.row(t)); u.row(pi).swap(u.row(t)); }
            if (pj != t) { d.col(pj).swap(d.col(t)); v.col(pj).swap(v.col(t)); }

            bool cleared = true;
            for (Index i = t + 1; i < m; ++i)
            {
                if (d(i, t) == 0) continue;
                const Integer q = d(i, t) / d(t, t);
                d.row(i) -= q * d.row(t);
                u.row(i) -= q * u.row(t);
                if (d(i, t) != 0) cleared = false;
            }
            for (Index j = t + 1; j < n; ++j)
            {
                if (d(t, j) == 0) continue;
                const Integer q = d(t, j) / d(t, t);
                d.col(j) -= q * d.col(t);
                v.col(j) -= q * v.col(t);
                if (d(t, j) != 0) cleared = false;
            }
            if (!cleared) continue;

            Index bad = -1;
            for (Index i = t + 1; i < m && bad < 0; ++i)
                for (Index j = t + 1; j < n; ++j)
                    if (d(i, j) % d(t, t) != 0) { bad = i; break; }
            if (bad >= 0)
            {
                d.row(t) += d.row(bad);
                u.row(t) += u.row(bad);
                continue;
            }
            break;
        }
        if (blockIsZero) break;
        if (d(t, t) < 0)
        {
            d.row(t) *= Integer(-1);
            u.row(t) *= Integer(-1);
        }
    }
    return {u, d, v};
}

IntMatrix hermiteRowForm(const IntMatrix& a)
{
    IntMatrix h = a;
    Index row = 0;
    for (Index col = 0; col < h.cols() && row < h.rows(); ++col)
    {
        while (true)
        {
            Index pivot = -1;
            for (Index i = row; i < h.rows(); ++i)
            {
                if (h(i, col) == 0) continue;
                if (pivot < 0 || boost::multiprecision::abs(h(i, col)) <
                                     boost::multiprecision::abs(h(pivot, col)))
                    pivot = i;
            }
            if (pivot < 0) break;
            if (pivot != row) h.row(pivot).swap(h.row(row));
            bool done = true;
            for (Index i = row + 1; i < h.rows(); ++i)
            {
                if (h(i, col) == 0) continue;
                const Integer q = h(i, col) / h(row, col);
                h.row(i) -= q * h.row(row);
                if (h(i, col) != 0) done = false;
            }
            if (done) break;
        }
        if (h(row, col) == 0) continue;
        if (h(row, col) < 0) h.row(row) *= Integer(-1);
        for (Index i = 0; i < row; ++i)
        {
            Integer q = h(i, col) / h(row, col);
            if (h(i, col) - q * h(row, col) < 0) q -= 1;   // floor division
            h.row(i) -= q * h.row(row);
        }
        ++row;
    }
    return h;
}

IntMatrix quotientProjection(const std::vector<IntVector>& vs, Index dim)
{
    if (vs.empty()) return IntMatrix::Identity(dim, dim);
    for (const auto& v : vs)
        if (v.size() != dim)
            throw std::invalid_argument("quotientProjection: dimension mismatch");
    const SmithForm snf = smithNormalForm(columns(vs, dim));
    Index r = 0;
    while (r < std::min(snf.d.rows(), snf.d.cols()) && snf.d(r, r) != 0) ++r;
    if (r == dim) return IntMatrix(0, dim);
    return hermiteRowForm(snf.u.bottomRows(dim - r));
}

// ---------------------------------------------------------------------------

std::optional<RatVector> solveInequalities(const RatMatrix& a, const RatVector& b)
{
    const Index n = a.cols();
    using RowSet = std::set<RatVector, LexLessRat>;

    // Rows are stored as (coefficients..., rhs) meaning coeffs . x >= rhs.
    RowSet current;
    for (Index i = 0; i < a.rows(); ++i)
    {
        RatVector row(n + 1);
        row.head(n) = a.row(i).transpose();
        row(n) = b(i);
        bool zero = true;
        for (Index j = 0; j < n; ++j) if (row(j) != 0) { zero = false; break; }
        if (zero)
        {
            if (row(n) > 0) return std::nullopt;
            continue;
        }
        current.insert(normalizeRow(row));
    }

    std::vector<std::vector<RatVector>> stages;
    for (Index var = n - 1; var >= 0; --var)
    {
        stages.emplace_back(current.begin(), current.end());
        RowSet next;
        std::vector<const RatVector*> pos, neg;
        for (const auto& row : stages.back())
        {
            if (row(var) > 0) pos.push_back(&row);
            else if (row(var) < 0) neg.push_back(&row);
            else next.insert(row);
        }
        for (const auto* p : pos)
        {
            for (const auto* q : neg)
            {
                RatVector combined = (*p) * (-(*q)(var)) + (*q) * (*p)(var);
                bool zero = true;
                for (Index j = 0; j < n; ++j) if (combined(j) != 0) { zero = false; break; }
                if (zero)
                {
                    if (combined(n) > 0) return std::nullopt;
                    continue;
                }
                next.insert(normalizeRow(combined));
            }
        }
        current = std::move(next);
    }

    RatVector x = RatVector::Zero(n);
    for (Index var = 0; var < n; ++var)
    {
        const auto& system = stages[static_cast<std::size_t>(n - 1 - var)];
        std::optional<Rational> lower, upper;
        for (const auto& row : system)
        {
            const Rational c = row(var);
            if (c == 0) continue;
            Rational rest = row(n);
            for (Index i = 0; i < var; ++i) rest -= row(i) * x(i);
            const Rational bound = rest / c;
            if (c > 0) { if (!lower || bound > *lower) lower = bound; }
            else       { if (!upper || bound < *upper) upper = bound; }
        }
        x(var) = lower ? *lower : (upper ? *upper : Rational(0));
    }
    return x;
}

// ---------------------------------------------------------------------------

Cone Cone::zero(Index dim)
{
    return fromGenerators(dim, {});
}

Cone Cone::whole(Index dim)
{
    return fromInequalities(dim, {});
}

Cone Cone::ray(const IntVector& v)
{
    return fromGenerators(v.size(), {v});
}

Cone Cone::fromGenerators(Index dim, const std::vector<IntVector>& generators)
{
    if (dim < 0) throw std::invalid_argument("cone ambient dimension must be nonnegative");
    Cone c;
    c.dim_ = dim;
    c.generators_ = canonicalGenerators(dim, generators);
    c.equations_ = orthogonalComplement(dim, c.generators_);
    c.spanDim_ = dim - static_cast<Index>(c.equations_.size());
    if (c.generators_.empty()) return c;

    // Orthogonal projection onto the span, used to pick the unique facet
    // normal that lies inside the span.
    const RatMatrix all = toRational(columns(c.generators_, dim));
    const auto pivots = reducedRowEchelon(all).second;
    RatMatrix basis(dim, static_cast<Index>(pivots.size()));
    for (std::size_t j = 0; j < pivots.size(); ++j)
        basis.col(static_cast<Index>(j)) = all.col(pivots[j]);
    const RatMatrix gram = basis.transpose() * basis;

    std::set<IntVector, LexLessInt> facets;
    for (const auto& candidate : fourierMotzkinCandidates(dim, c.generators_))
    {
        const RatVector coords = solveLinear(gram, basis.transpose() * toRational(candidate));
        const RatVector projected = basis * coords;
        bool zero = true;
        for (Index i = 0; i < dim; ++i) if (projected(i) != 0) { zero = false; break; }
        if (zero) continue;
        const IntVector normal = primitiveDirection(projected);
        std::vector<IntVector> onFacet;
        for (auto idx : zeroSet(normal, c.generators_)) onFacet.push_back(c.generators_[idx]);
        if (rankOf(onFacet, dim) == c.spanDim_ - 1) facets.insert(normal);
    }
    c.facets_.assign(facets.begin(), facets.end());
    c.strictlyConvex_ = rankOf(c.facets_, dim) == c.spanDim_;

    if (c.strictlyConvex_)
    {
        std::vector<IntVector> extreme;
        for (const auto& g : c.generators_)
        {
            std::vector<IntVector> vanishing;
            for (const auto& f : c.facets_)
                if (dot(f, g) == 0) vanishing.push_back(f);
            if (rankOf(vanishing, dim) == c.spanDim_ - 1) extreme.push_back(g);
        }
        c.generators_ = std::move(extreme);
    }
    return c;
}

Cone Cone::fromInequalities(Index dim, const std::vector<IntVector>& normals)
{
    const Cone dual = fromGenerators(dim, normals);
    return fromGenerators(dim, dual.normals());
}

std::vector<IntVector> Cone::normals() const
{
    std::vector<IntVector> out;
    for (const auto& e : equations_)
    {
        out.push_back(e);
        out.push_back(-e);
    }
    out.insert(out.end(), facets_.begin(), facets_.end());
    return out;
}

bool Cone::contains(const RatVector& x) const
{
    if (x.size() != dim_)
        throw std::invalid_argument("cone membership: dimension mismatch");
    for (const auto& e : equations_)
        if (dot(e, x) != 0) return false;
    for (const auto& f : facets_)
        if (dot(f, x) < 0) return false;
    return true;
}

bool Cone::contains(const Cone& other) const
{
    for (const auto& g : other.generators())
        if (!contains(g)) return false;
    return true;
}

IntVector Cone::relativeInteriorPoint() const
{
    IntVector sum = IntVector::Zero(dim_);
    for (const auto& g : generators_) sum += g;
    return sum;
}

bool sameCone(const Cone& a, const Cone& b)
{
    return a.ambientDim() == b.ambientDim() && a.contains(b) && b.contains(a);
}

std::vector<IntVector> coneDual(const Cone& c)
{
    return c.normals();
}

Cone intersect(const Cone& a, const Cone& b)
{
    if (a.ambientDim() != b.ambientDim())
        throw std::invalid_argument("intersect: dimension mismatch");
    auto normals = a.normals();
    const auto more = b.normals();
    normals.insert(normals.end(), more.begin(), more.end());
    return Cone::fromInequalities(a.ambientDim(), normals);
}

Cone image(const IntMatrix& map, const Cone& c)
{
    if (map.cols() != c.ambientDim())
        throw std::invalid_argument("image: dimension mismatch");
    std::vector<IntVector> gens;
    for (const auto& g : c.generators()) gens.push_back(map * g);
    return Cone::fromGenerators(map.rows(), gens);
}

std::vector<Cone> faces(const Cone& c)
{
    const auto& gens = c.generators();
    std::vector<std::vector<std::size_t>> facetSets;
    for (const auto& f : c.facetNormals()) facetSets.push_back(zeroSet(f, gens));

    std::vector<std::size_t> all(gens.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;

    std::set<std::vector<std::size_t>> seen{all};
    std::vector<std::vector<std::size_t>> queue{all};
    for (std::size_t head = 0; head < queue.size(); ++head)
    {
        for (const auto& facet : facetSets)
        {
            std::vector<std::size_t> meet;
            std::set_intersection(queue[head].begin(), queue[head].end(),
                                  facet.begin(), facet.end(), std::back_inserter(meet));
            if (seen.insert(meet).second) queue.push_back(meet);
        }
    }

    std::vector<Cone> out;
    for (const auto& indices : queue)
    {
        std::vector<IntVector> sub;
        for (auto i : indices) sub.push_back(gens[i]);
        out.push_back(Cone::fromGenerators(c.ambientDim(), sub));
    }
    std::sort(out.begin(), out.end(), [](const Cone& x, const Cone& y) {
        if (x.dimension() != y.dimension()) return x.dimension() < y.dimension();
        return std::lexicographical_compare(
            x.generators().begin(), x.generators().end(),
            y.generators().begin(), y.generators().end(),
            [](const IntVector& p, const IntVector& q) { return lexLess(p, q); });
    });
    return out;
}

bool isFaceOf(const Cone& face, const Cone& c)
{
    if (!c.contains(face)) return false;
    for (const auto& f : faces(c))
        if (sameCone(f, face)) return true;
    return false;
}

std::optional<RatVector> relintWitness(const Cone& a, const Cone& b)
{
    if (a.ambientDim() != b.ambientDim())
        throw std::invalid_argument("relintWitness: dimension mismatch");
    const Index dim = a.ambientDim();
    const auto& gens = a.generators();
    const Index k = static_cast<Index>(gens.size());
    if (k == 0) return RatVector(RatVector::Zero(dim));

    const RatMatrix g = toRational(columns(gens, dim));
    const auto normals = b.normals();
    RatMatrix rows(k + static_cast<Index>(normals.size()), k);
    RatVector rhs(rows.rows());
    for (Index i = 0; i < k; ++i)
    {
        rows.row(i) = RatVector::Unit(k, i).transpose();
        rhs(i) = 1;
    }
    for (std::size_t j = 0; j < normals.size(); ++j)
    {
        rows.row(k + static_cast<Index>(j)) = toRational(normals[j]).transpose() * g;
        rhs(k + static_cast<Index>(j)) = 0;
    }
    const auto lambda = solveInequalities(rows, rhs);
    if (!lambda) return std::nullopt;
    return RatVector(g * *lambda);
}

std::optional<RatVector> commonRelintWitness(const Cone& a, const Cone& b, const Cone& region)
{
    const Index dim = a.ambientDim();
    if (b.ambientDim() != dim || region.ambientDim() != dim)
        throw std::invalid_argument("commonRelintWitness: dimension mismatch");
    const Index ka = static_cast<Index>(a.generators().size());
    const Index kb = static_cast<Index>(b.generators().size());
    const Index vars = ka + kb;
    if (vars == 0) return RatVector(RatVector::Zero(dim));

    const RatMatrix ga = toRational(columns(a.generators(), dim));
    const RatMatrix gb = toRational(columns(b.generators(), dim));
    const auto regionNormals = region.normals();

    std::vector<RatVector> rows;
    std::vector<Rational> rhs;
    for (Index i = 0; i < vars; ++i)
    {
        rows.push_back(RatVector::Unit(vars, i));
        rhs.push_back(1);
    }
    for (Index r = 0; r < dim; ++r)
    {
        RatVector row(vars);
        row.head(ka) = ga.row(r).transpose();
        row.tail(kb) = -gb.row(r).transpose();
        rows.push_back(row);
        rows.push_back(-row);
        rhs.push_back(0);
        rhs.push_back(0);
    }
    for (const auto& nrm : regionNormals)
    {
        RatVector row = RatVector::Zero(vars);
        if (ka > 0) row.head(ka) = (toRational(nrm).transpose() * ga).transpose();
        else row.tail(kb) = (toRational(nrm).transpose() * gb).transpose();
        rows.push_back(row);
        rhs.push_back(0);
    }
    RatMatrix m(static_cast<Index>(rows.size()), vars);
    RatVector b0(static_cast<Index>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
    {
        m.row(static_cast<Index>(i)) = rows[i].transpose();
        b0(static_cast<Index>(i)) = rhs[i];
    }
    const auto sol = solveInequalities(m, b0);
    if (!sol) return std::nullopt;
    if (ka > 0) return RatVector(ga * sol->head(ka));
    return RatVector(gb * sol->tail(kb));
}

std::string toString(const Cone& c)
{
    std::string out = "cone(";
    for (std::size_t i = 0; i < c.generators().size(); ++i)
    {
        if (i > 0) out += ",";
        out += toString(c.generators()[i]);
    }
    return out + ")";
}

}   // namespace sphtrop
