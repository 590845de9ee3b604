#include "doctest.h"

#include "oracles.hpp"

using namespace sphtrop;
using oracle::Index;

namespace {

IntVector iv(std::initializer_list<long> e) { return makeIntVector(e); }

IntMatrix intMatrix(std::initializer_list<std::initializer_list<long>> rows)
{
    IntMatrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
    Index i = 0;
    for (const auto& r : rows)
    {
        Index j = 0;
        for (long x : r) m(i, j++) = x;
        ++i;
    }
    return m;
}

bool isUnimodular(const IntMatrix& m) { return abs(oracle::integerDet(m)) == 1; }

Cone randomCone(std::mt19937_64& rng)
{
    const Index dim = oracle::uniform(rng, 1, 4);
    const long count = oracle::uniform(rng, 0, 5);
    std::vector<IntVector> gens;
    for (long k = 0; k < count; ++k) gens.push_back(oracle::randomNonzero(rng, dim, 3));
    return Cone::fromGenerators(dim, gens);
}

}   // namespace

TEST_CASE("primitive splits off the gcd")
{
    auto p = primitive(iv({2, 4}));
    CHECK(equalVectors(p.direction, iv({1, 2})));
    CHECK(p.stretch == 2);
    p = primitive(iv({-1, -1}));
    CHECK(equalVectors(p.direction, iv({-1, -1})));
    CHECK(p.stretch == 1);
    CHECK_THROWS_AS(primitive(iv({0, 0})), std::invalid_argument);

    std::mt19937_64 rng(7);
    for (int k = 0; k < 200; ++k)
    {
        const IntVector v = primitive(oracle::randomNonzero(rng, 3, 9)).direction;
        const long lambda = oracle::uniform(rng, 1, 12);
        const auto d = primitive(IntVector(lambda * v));
        CHECK(equalVectors(d.direction, v));
        CHECK(d.stretch == lambda);
    }
}

TEST_CASE("smith normal form examples")
{
    auto s = smithNormalForm(IntMatrix::Identity(2, 2));
    CHECK(s.d == IntMatrix::Identity(2, 2));
    CHECK(s.u == IntMatrix::Identity(2, 2));
    CHECK(s.v == IntMatrix::Identity(2, 2));

    s = smithNormalForm(intMatrix({{2, 0}, {0, 3}}));
    CHECK(s.d == intMatrix({{1, 0}, {0, 6}}));
    CHECK(s.u * intMatrix({{2, 0}, {0, 3}}) * s.v == s.d);

    s = smithNormalForm(intMatrix({{0}}));
    CHECK(s.d == intMatrix({{0}}));
}

TEST_CASE("smith normal form agrees with determinantal divisors")
{
    std::mt19937_64 rng(11);
    for (int k = 0; k < 150; ++k)
    {
        const Index rows = oracle::uniform(rng, 1, 4), cols = oracle::uniform(rng, 1, 4);
        IntMatrix a(rows, cols);
        for (Index i = 0; i < rows; ++i)
            for (Index j = 0; j < cols; ++j) a(i, j) = oracle::uniform(rng, 0, 3) == 0 ? 0 : oracle::uniform(rng, -6, 6);
        const auto s = smithNormalForm(a);
        REQUIRE(s.u * a * s.v == s.d);
        CHECK(isUnimodular(s.u));
        CHECK(isUnimodular(s.v));
        const auto expected = oracle::smithByMinors(a);
        for (Index i = 0; i < std::min(rows, cols); ++i)
        {
            CHECK(s.d(i, i) == expected[static_cast<std::size_t>(i)]);
            if (i + 1 < std::min(rows, cols) && s.d(i, i) != 0) CHECK(s.d(i + 1, i + 1) % s.d(i, i) == 0);
        }
        for (Index i = 0; i < rows; ++i)
            for (Index j = 0; j < cols; ++j)
                if (i != j) CHECK(s.d(i, j) == 0);
        CHECK(smithNormalForm(a).u == s.u);   // deterministic
    }
}

TEST_CASE("quotient projection examples")
{
    CHECK(quotientProjection({iv({-1, 1})}, 2) == intMatrix({{1, 1}}));
    CHECK(quotientProjection({}, 2) == IntMatrix::Identity(2, 2));
    CHECK(quotientProjection({iv({2, 0})}, 2) == intMatrix({{0, 1}}));
    const IntMatrix pi = quotientProjection({iv({-1, -1})}, 2);
    CHECK(pi.rows() == 1);
    CHECK((pi * iv({1, 0}))(0) == 1);
    CHECK(quotientProjection({iv({1, 0}), iv({0, 1})}, 2).rows() == 0);
}

TEST_CASE("quotient projection is a saturated surjection")
{
    std::mt19937_64 rng(13);
    for (int k = 0; k < 150; ++k)
    {
        const Index dim = oracle::uniform(rng, 1, 4);
        std::vector<IntVector> vs;
        const long count = oracle::uniform(rng, 0, 3);
        for (long i = 0; i < count; ++i)
        {
            IntVector v = oracle::randomVector(rng, dim, 3);
            v *= Integer(oracle::uniform(rng, 1, 3));   // non-primitive spans
            vs.push_back(v);
        }
        const IntMatrix pi = quotientProjection(vs, dim);
        const Index r = vs.empty() ? 0 : rank(toRational(columns(vs, dim)));
        REQUIRE(pi.rows() + r == dim);
        for (const auto& v : vs) CHECK(oracle::allZero(pi * v));
        if (pi.rows() > 0)
        {
            CHECK(rank(toRational(pi)) == pi.rows());
            for (const auto& d : oracle::smithByMinors(pi)) CHECK(d == 1);   // onto Z^m
        }
    }
}

TEST_CASE("cone membership")
{
    const Cone half = Cone::fromInequalities(2, {iv({1, -1})});
    CHECK(half.contains(iv({1, 0})));
    CHECK_FALSE(half.contains(iv({0, 1})));
    CHECK(half.contains(iv({0, 0})));
    CHECK(Cone::ray(iv({1, 1})).contains(iv({0, 0})));
    CHECK_THROWS(half.contains(iv({1, 0, 0})));
}

TEST_CASE("cone duality examples")
{
    auto normals = coneDual(Cone::fromGenerators(2, {iv({1, 0}), iv({0, 1})}));
    std::sort(normals.begin(), normals.end(), [](auto& a, auto& b) { return lexLess(a, b); });
    REQUIRE(normals.size() == 2);
    CHECK(equalVectors(normals[0], iv({0, 1})));
    CHECK(equalVectors(normals[1], iv({1, 0})));

    const Cone line = Cone::fromGenerators(2, {iv({1, 1}), iv({-1, -1})});
    normals = coneDual(line);
    REQUIRE(normals.size() == 2);
    CHECK(equalVectors(IntVector(normals[0] + normals[1]), iv({0, 0})));
    CHECK(normals[0].dot(iv({1, 1})) == 0);
    CHECK(abs(normals[0](0)) == 1);

    const Cone zero = Cone::zero(2);
    CHECK(sameCone(Cone::fromInequalities(2, coneDual(zero)), zero));
    CHECK(coneDual(zero).size() == 4);
}

TEST_CASE("duality round trip on random cones")
{
    std::mt19937_64 rng(17);
    for (int k = 0; k < 60; ++k)
    {
        const Cone c = randomCone(rng);
        const Index dim = c.ambientDim();
        const Cone back = Cone::fromInequalities(dim, coneDual(c));
        CHECK(sameCone(back, c));
        for (const auto& g : back.generators()) CHECK(c.contains(g));
        for (const auto& g : c.generators()) CHECK(back.contains(g));
        // Inequality membership against Caratheodory on random points.
        for (int p = 0; p < 10; ++p)
        {
            const IntVector x = oracle::randomVector(rng, dim, 4);
            CHECK(c.contains(x) == oracle::inConeCaratheodory(c.generators(), toRational(x), dim));
        }
    }
}

TEST_CASE("faces")
{
    auto fs = faces(Cone::fromGenerators(2, {iv({1, 0}), iv({0, 1})}));
    CHECK(fs.size() == 4);
    CHECK(fs.front().isZero());
    fs = faces(Cone::ray(iv({1, 1})));
    CHECK(fs.size() == 2);
    fs = faces(Cone::fromGenerators(2, {iv({1, 0}), iv({1, 1})}));
    REQUIRE(fs.size() == 4);
    CHECK(sameCone(fs[1], Cone::ray(iv({1, 0}))));
    CHECK(sameCone(fs[2], Cone::ray(iv({1, 1}))));

    // Enumeration oracle: a face is the zero set of a supporting normal.
    std::mt19937_64 rng(19);
    for (int k = 0; k < 30; ++k)
    {
        const Cone c = randomCone(rng);
        if (!c.isStrictlyConvex()) continue;
        const auto all = faces(c);
        for (std::size_t i = 0; i < all.size(); ++i)
        {
            CHECK(isFaceOf(all[i], c));
            for (std::size_t j = i + 1; j < all.size(); ++j) CHECK_FALSE(sameCone(all[i], all[j]));
        }
        for (const auto& g : c.generators())
        {
            const bool found = std::any_of(all.begin(), all.end(), [&](const Cone& f) {
                return f.dimension() == 1 && f.contains(g);
            });
            CHECK(found);
        }
    }
}

TEST_CASE("relative interiors")
{
    const Cone v = Cone::fromInequalities(2, {iv({1, -1})});
    CHECK_FALSE(relintMeets(Cone::ray(iv({-1, 1})), v));
    const auto w = relintWitness(Cone::fromGenerators(2, {iv({-1, 1}), iv({1, 0})}), v);
    REQUIRE(w);
    CHECK(v.contains(*w));
    CHECK(relintMeets(v, v));

    // Symmetry when the relative interiors overlap.
    std::mt19937_64 rng(23);
    for (int k = 0; k < 40; ++k)
    {
        const Cone a = Cone::fromGenerators(2, {oracle::randomNonzero(rng, 2, 3), oracle::randomNonzero(rng, 2, 3)});
        const Cone b = Cone::fromGenerators(2, {oracle::randomNonzero(rng, 2, 3), oracle::randomNonzero(rng, 2, 3)});
        if (a.dimension() == 2 && b.dimension() == 2 && commonRelintWitness(a, b, Cone::whole(2)))
        {
            CHECK(relintMeets(a, b));
            CHECK(relintMeets(b, a));
        }
    }
}

TEST_CASE("intersection and image")
{
    const Cone v = Cone::fromInequalities(2, {iv({1, -1})});
    const Cone c = Cone::fromGenerators(2, {iv({-1, 1}), iv({1, 0})});
    CHECK(sameCone(intersect(c, v), Cone::fromGenerators(2, {iv({1, 1}), iv({1, 0})})));
    const Cone img = image(intMatrix({{1, -1}}), v);
    CHECK(sameCone(img, Cone::ray(iv({1}))));
}
