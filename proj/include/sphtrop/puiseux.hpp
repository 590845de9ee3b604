/**
 * Finite Puiseux polynomials sum_q c_q t^q (q, c_q rational) with the t-adic
 * valuation, plus square matrices over them.
 *
 * Elements of the valued field are entered as truncations; callers are
 * responsible for truncating beyond every valuation that matters.
 */

#ifndef SPHTROP_PUISEUX_HPP
#define SPHTROP_PUISEUX_HPP

#include <map>
#include <optional>
#include <string>

#include "sphtrop/types.hpp"

namespace sphtrop {

/// A rational number or +infinity (the valuation of zero).
class ExtendedRational
{
    public:
        ExtendedRational() = default;   // +infinity
        ExtendedRational(Rational q) : value_(std::move(q)) {}
        ExtendedRational(long q) : value_(Rational(q)) {}

        static ExtendedRational infinity() { return {}; }

        bool isInfinite() const { return !value_.has_value(); }
        bool isFinite() const { return value_.has_value(); }
        /// Throws std::logic_error on +infinity.
        const Rational& value() const;

        friend ExtendedRational operator+(const ExtendedRational& a, const ExtendedRational& b);
        friend bool operator==(const ExtendedRational& a, const ExtendedRational& b);
        friend bool operator<(const ExtendedRational& a, const ExtendedRational& b);
        friend bool operator<=(const ExtendedRational& a, const ExtendedRational& b) { return !(b < a); }
        friend bool operator>(const ExtendedRational& a, const ExtendedRational& b) { return b < a; }
        friend bool operator>=(const ExtendedRational& a, const ExtendedRational& b) { return !(a < b); }

    private:
        std::optional<Rational> value_;
};

ExtendedRational min(const ExtendedRational& a, const ExtendedRational& b);
std::string toString(const ExtendedRational& v);

class PuiseuxPoly
{
    public:
        using Terms = std::map<Rational, Rational>;   // exponent -> nonzero coefficient

        PuiseuxPoly() = default;
        PuiseuxPoly(long constant);
        PuiseuxPoly(const Rational& constant);

        /// c * t^exponent
        static PuiseuxPoly monomial(const Rational& coefficient, const Rational& exponent);
        /// t^exponent
        static PuiseuxPoly t(const Rational& exponent = Rational(1));

        const Terms& terms() const { return terms_; }
        bool isZero() const { return terms_.empty(); }
        Rational coefficient(const Rational& exponent) const;

        /// Least exponent with nonzero coefficient, +infinity for zero.
        ExtendedRational valuation() const;
        /// Coefficient of the lowest-order term; zero for the zero element.
        Rational leadingCoefficient() const;

        PuiseuxPoly& operator+=(const PuiseuxPoly& other);
        PuiseuxPoly& operator-=(const PuiseuxPoly& other);
        PuiseuxPoly& operator*=(const PuiseuxPoly& other);

        friend PuiseuxPoly operator+(PuiseuxPoly a, const PuiseuxPoly& b) { return a += b; }
        friend PuiseuxPoly operator-(PuiseuxPoly a, const PuiseuxPoly& b) { return a -= b; }
        friend PuiseuxPoly operator*(const PuiseuxPoly& a, const PuiseuxPoly& b);
        friend PuiseuxPoly operator-(const PuiseuxPoly& a);
        friend bool operator==(const PuiseuxPoly& a, const PuiseuxPoly& b) { return a.terms_ == b.terms_; }
        friend bool operator!=(const PuiseuxPoly& a, const PuiseuxPoly& b) { return !(a == b); }

        /// Substitutes t -> t^factor (factor > 0 keeps the valuation's sign).
        PuiseuxPoly rescaleExponents(const Rational& factor) const;

    private:
        void add(const Rational& exponent, const Rational& coefficient);

        Terms terms_;
};

inline ExtendedRational val(const PuiseuxPoly& p) { return p.valuation(); }

/**
 * Exact quotient p / q when q divides p in the ring of Puiseux polynomials;
 * std::nullopt otherwise. Throws std::domain_error if q is zero.
 */
std::optional<PuiseuxPoly> exactQuotient(const PuiseuxPoly& p, const PuiseuxPoly& q);

/// Canonical text, e.g. "1 + 3/2*t^(1/2) - t^2".
std::string toString(const PuiseuxPoly& p);

/**
 * Parses sums of terms `c`, `c*t`, `c*t^k`, `t^-k`, `c*t^(a/b)`. Throws
 * ParseError on malformed input, including any coefficient that is not an
 * exact rational.
 */
PuiseuxPoly parsePuiseux(const std::string& text);

}   // namespace sphtrop

namespace Eigen {

template <>
struct NumTraits<sphtrop::PuiseuxPoly> : GenericNumTraits<sphtrop::PuiseuxPoly>
{
    using Real = sphtrop::PuiseuxPoly;
    using NonInteger = sphtrop::PuiseuxPoly;
    using Nested = sphtrop::PuiseuxPoly;
    enum
    {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 8,
        MulCost = 32
    };
};

}   // namespace Eigen

namespace sphtrop {

using PuiseuxMatrix = Matrix<PuiseuxPoly>;
using PuiseuxVector = Vector<PuiseuxPoly>;

/// Determinant by cofactor expansion for n <= 4 and Bareiss elimination
/// above.
PuiseuxPoly determinant(const PuiseuxMatrix& m);
PuiseuxPoly determinantCofactor(const PuiseuxMatrix& m);
PuiseuxPoly determinantBareiss(const PuiseuxMatrix& m);

/// min val over all k x k minors; +infinity iff every such minor vanishes.
ExtendedRational minMinorValuation(const PuiseuxMatrix& m, int k);

/// Parses "[[a,b],[c,d]]" with Puiseux entries.
PuiseuxMatrix parsePuiseuxMatrix(const std::string& text);
/// Parses "(a, b, ...)" or "[a, b, ...]" with Puiseux entries.
std::vector<PuiseuxPoly> parsePuiseuxTuple(const std::string& text);

}   // namespace sphtrop

#endif
