#include "sphtrop/types.hpp"

#include <regex>

namespace sphtrop {

std::string toString(const Rational& q)
{
    if (boost::multiprecision::denominator(q) == 1)
        return boost::multiprecision::numerator(q).str();
    return boost::multiprecision::numerator(q).str() + "/" +
           boost::multiprecision::denominator(q).str();
}

std::string toString(const Integer& z)
{
    return z.str();
}

namespace {

template <typename Scalar>
std::string vectorString(const Vector<Scalar>& v)
{
    std::string out = "(";
    for (Eigen::Index i = 0; i < v.size(); ++i)
    {
        if (i > 0) out += ",";
        out += toString(v(i));
    }
    return out + ")";
}

}   // namespace

std::string toString(const IntVector& v) { return vectorString(v); }
std::string toString(const RatVector& v) { return vectorString(v); }

Rational parseRational(const std::string& text)
{
    static const std::regex pattern(R"(\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*)");
    std::smatch match;
    if (!std::regex_match(text, match, pattern))
        throw ParseError("not an exact rational: '" + text + "'");
    Integer num(match[1].str().front() == '+' ? match[1].str().substr(1) : match[1].str());
    Integer den(1);
    if (match[2].matched)
    {
        den = Integer(match[2].str());
        if (den == 0) throw ParseError("zero denominator in '" + text + "'");
    }
    return Rational(num, den);
}

Integer parseInteger(const std::string& text)
{
    Rational q = parseRational(text);
    if (boost::multiprecision::denominator(q) != 1)
        throw ParseError("expected an integer, got '" + text + "'");
    return boost::multiprecision::numerator(q);
}

}   // namespace sphtrop
