#ifndef SPHTROP_TYPES_HPP
#define SPHTROP_TYPES_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace sphtrop {

// Expression templates are disabled so that the scalars compose cleanly with
// Eigen's own expression machinery.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntVector = Vector<Integer>;
using RatVector = Vector<Rational>;
using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

/// Raised when text or JSON input cannot be parsed.
class ParseError : public std::runtime_error
{
    public:
        using std::runtime_error::runtime_error;
};

/// Raised when a point does not lie in the homogeneous space it claims to
/// (zero torus coordinate, singular matrix, ...).
class MembershipError : public std::domain_error
{
    public:
        using std::domain_error::domain_error;
};

inline RatVector toRational(const IntVector& v)
{
    return v.template cast<Rational>();
}

inline RatMatrix toRational(const IntMatrix& m)
{
    return m.template cast<Rational>();
}

/// Lexicographic comparison of two vectors of equal length.
template <typename Scalar>
bool lexLess(const Vector<Scalar>& a, const Vector<Scalar>& b)
{
    const Eigen::Index n = std::min(a.size(), b.size());
    for (Eigen::Index i = 0; i < n; ++i)
    {
        if (a(i) < b(i)) return true;
        if (b(i) < a(i)) return false;
    }
    return a.size() < b.size();
}

template <typename Scalar>
bool equalVectors(const Vector<Scalar>& a, const Vector<Scalar>& b)
{
    return a.size() == b.size() && (a.size() == 0 || (a.array() == b.array()).all());
}

inline IntVector makeIntVector(std::initializer_list<long> entries)
{
    IntVector v(static_cast<Eigen::Index>(entries.size()));
    Eigen::Index i = 0;
    for (long e : entries) v(i++) = e;
    return v;
}

inline RatVector makeRatVector(std::initializer_list<long> entries)
{
    return toRational(makeIntVector(entries));
}

/// "p/q" for non-integers, "p" otherwise.
std::string toString(const Rational& q);
std::string toString(const Integer& z);
std::string toString(const IntVector& v);
std::string toString(const RatVector& v);

/// Parses "p", "-p" or "p/q" exactly.
Rational parseRational(const std::string& text);
Integer parseInteger(const std::string& text);

}   // namespace sphtrop

#endif
