#include "sphtrop/puiseux.hpp"

#include <cctype>
#include <functional>

namespace sphtrop {

// ---------------------------------------------------------------------------
// ExtendedRational

const Rational& ExtendedRational::value() const
{
    if (!value_) throw std::logic_error("value() of +infinity");
    return *value_;
}

ExtendedRational operator+(const ExtendedRational& a, const ExtendedRational& b)
{
    if (a.isInfinite() || b.isInfinite()) return ExtendedRational::infinity();
    return ExtendedRational(*a.value_ + *b.value_);
}

bool operator==(const ExtendedRational& a, const ExtendedRational& b)
{
    return a.value_ == b.value_;
}

bool operator<(const ExtendedRational& a, const ExtendedRational& b)
{
    if (a.isInfinite()) return false;
    if (b.isInfinite()) return true;
    return *a.value_ < *b.value_;
}

ExtendedRational min(const ExtendedRational& a, const ExtendedRational& b)
{
    return b < a ? b : a;
}

std::string toString(const ExtendedRational& v)
{
    return v.isInfinite() ? std::string("inf") : toString(v.value());
}

// ---------------------------------------------------------------------------
// PuiseuxPoly

PuiseuxPoly::PuiseuxPoly(long constant)
{
    add(Rational(0), Rational(constant));
}

PuiseuxPoly::PuiseuxPoly(const Rational& constant)
{
    add(Rational(0), constant);
}

PuiseuxPoly PuiseuxPoly::monomial(const Rational& coefficient, const Rational& exponent)
{
    PuiseuxPoly p;
    p.add(exponent, coefficient);
    return p;
}

PuiseuxPoly PuiseuxPoly::t(const Rational& exponent)
{
    return monomial(Rational(1), exponent);
}

void PuiseuxPoly::add(const Rational& exponent, const Rational& coefficient)
{
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
    if (!inserted)
    {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational PuiseuxPoly::coefficient(const Rational& exponent) const
{
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

ExtendedRational PuiseuxPoly::valuation() const
{
    if (terms_.empty()) return ExtendedRational::infinity();
    return ExtendedRational(terms_.begin()->first);
}

Rational PuiseuxPoly::leadingCoefficient() const
{
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

PuiseuxPoly& PuiseuxPoly::operator+=(const PuiseuxPoly& other)
{
    for (const auto& [e, c] : other.terms_) add(e, c);
    return *this;
}

PuiseuxPoly& PuiseuxPoly::operator-=(const PuiseuxPoly& other)
{
    for (const auto& [e, c] : other.terms_) add(e, -c);
    return *this;
}

PuiseuxPoly& PuiseuxPoly::operator*=(const PuiseuxPoly& other)
{
    *this = *this * other;
    return *this;
}

PuiseuxPoly operator*(const PuiseuxPoly& a, const PuiseuxPoly& b)
{
    PuiseuxPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            out.add(ea + eb, ca * cb);
    return out;
}

PuiseuxPoly operator-(const PuiseuxPoly& a)
{
    PuiseuxPoly out;
    for (const auto& [e, c] : a.terms_) out.add(e, -c);
    return out;
}

PuiseuxPoly PuiseuxPoly::rescaleExponents(const Rational& factor) const
{
    if (factor == 0) throw std::invalid_argument("rescaleExponents: zero factor");
    PuiseuxPoly out;
    for (const auto& [e, c] : terms_) out.add(e * factor, c);
    return out;
}

std::optional<PuiseuxPoly> exactQuotient(const PuiseuxPoly& p, const PuiseuxPoly& q)
{
    if (q.isZero()) throw std::domain_error("exactQuotient: division by zero");
    if (p.isZero()) return PuiseuxPoly();
    const auto& qTop = *q.terms().rbegin();
    const Rational limit = p.terms().begin()->first - q.terms().begin()->first;
    PuiseuxPoly remainder = p;
    PuiseuxPoly quotient;
    while (!remainder.isZero())
    {
        const auto& top = *remainder.terms().rbegin();
        const Rational exponent = top.first - qTop.first;
        if (exponent < limit) return std::nullopt;
        const PuiseuxPoly term = PuiseuxPoly::monomial(top.second / qTop.second, exponent);
        quotient += term;
        remainder -= term * q;
    }
    return quotient;
}

std::string toString(const PuiseuxPoly& p)
{
    if (p.isZero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms())
    {
        const bool negative = c < 0;
        if (first) out += negative ? "-" : "";
        else out += negative ? " - " : " + ";
        first = false;
        const Rational mag = boost::multiprecision::abs(c);
        if (e == 0)
        {
            out += toString(mag);
            continue;
        }
        if (mag != 1) out += toString(mag) + "*";
        out += "t";
        if (e == 1) continue;
        if (e > 0 && boost::multiprecision::denominator(e) == 1) out += "^" + toString(e);
        else out += "^(" + toString(e) + ")";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class PuiseuxParser
{
    public:
        explicit PuiseuxParser(const std::string& text) : text_(text) {}

        PuiseuxPoly parse()
        {
            skipSpace();
            if (atEnd()) fail("empty expression");
            PuiseuxPoly result;
            bool negative = false;
            if (peek() == '+' || peek() == '-') negative = get() == '-';
            while (true)
            {
                PuiseuxPoly term = parseTerm();
                if (negative) result -= term; else result += term;
                skipSpace();
                if (atEnd()) break;
                const char op = get();
                if (op != '+' && op != '-') fail(std::string("unexpected '") + op + "'");
                negative = op == '-';
                skipSpace();
            }
            return result;
        }

    private:
        PuiseuxPoly parseTerm()
        {
            skipSpace();
            if (atEnd()) fail("missing term");
            Rational coefficient = 1;
            bool hasCoefficient = false;
            if (std::isdigit(static_cast<unsigned char>(peek())))
            {
                coefficient = parseUnsignedRational();
                hasCoefficient = true;
                skipSpace();
                if (!atEnd() && peek() == '*')
                {
                    get();
                    skipSpace();
                    if (atEnd() || peek() != 't') fail("expected 't' after '*'");
                }
            }
            if (!atEnd() && peek() == 't')
            {
                get();
                Rational exponent = 1;
                skipSpace();
                if (!atEnd() && peek() == '^')
                {
                    get();
                    exponent = parseExponent();
                }
                return PuiseuxPoly::monomial(coefficient, exponent);
            }
            if (!hasCoefficient) fail("expected a coefficient or 't'");
            return PuiseuxPoly(coefficient);
        }

        Rational parseExponent()
        {
            skipSpace();
            if (!atEnd() && peek() == '(')
            {
                get();
                skipSpace();
                bool negative = false;
                if (!atEnd() && (peek() == '-' || peek() == '+')) negative = get() == '-';
                Rational e = parseUnsignedRational();
                skipSpace();
                if (atEnd() || get() != ')') fail("expected ')'");
                return negative ? -e : e;
            }
            bool negative = false;
            if (!atEnd() && peek() == '-') { get(); negative = true; }
            Integer e = parseDigits();
            return negative ? Rational(-e) : Rational(e);
        }

        Rational parseUnsignedRational()
        {
            Integer num = parseDigits();
            skipSpace();
            if (!atEnd() && peek() == '/')
            {
                get();
                skipSpace();
                Integer den = parseDigits();
                if (den == 0) fail("zero denominator");
                return Rational(num, den);
            }
            return Rational(num);
        }

        Integer parseDigits()
        {
            const std::size_t start = pos_;
            while (!atEnd() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            if (start == pos_) fail("expected digits");
            return Integer(text_.substr(start, pos_ - start));
        }

        void skipSpace()
        {
            while (!atEnd() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
        }
        bool atEnd() const { return pos_ >= text_.size(); }
        char peek() const { return text_[pos_]; }
        char get() { return text_[pos_++]; }

        [[noreturn]] void fail(const std::string& why) const
        {
            throw ParseError("Puiseux polynomial '" + text_ + "': " + why +
                             " at position " + std::to_string(pos_));
        }

        const std::string& text_;
        std::size_t pos_ = 0;
};

std::string trim(const std::string& s)
{
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

/// Splits on commas outside any bracket or parenthesis.
std::vector<std::string> splitTopLevel(const std::string& s)
{
    std::vector<std::string> out;
    int depth = 0;
    std::string current;
    for (char c : s)
    {
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (c == ',' && depth == 0)
        {
            out.push_back(trim(current));
            current.clear();
            continue;
        }
        current += c;
    }
    out.push_back(trim(current));
    return out;
}

std::string stripBrackets(const std::string& text, const std::string& opens, const std::string& closes)
{
    const std::string s = trim(text);
    if (s.size() < 2) throw ParseError("expected a bracketed list: '" + text + "'");
    const auto open = opens.find(s.front());
    if (open == std::string::npos || s.back() != closes[open])
        throw ParseError("expected a bracketed list: '" + text + "'");
    return s.substr(1, s.size() - 2);
}

}   // namespace

PuiseuxPoly parsePuiseux(const std::string& text)
{
    return PuiseuxParser(text).parse();
}

std::vector<PuiseuxPoly> parsePuiseuxTuple(const std::string& text)
{
    std::vector<PuiseuxPoly> out;
    for (const auto& item : splitTopLevel(stripBrackets(text, "([", ")]")))
        out.push_back(parsePuiseux(item));
    return out;
}

PuiseuxMatrix parsePuiseuxMatrix(const std::string& text)
{
    const auto rows = splitTopLevel(stripBrackets(text, "[", "]"));
    std::vector<std::vector<PuiseuxPoly>> entries;
    for (const auto& row : rows) entries.push_back(parsePuiseuxTuple(row));
    const std::size_t n = entries.size();
    PuiseuxMatrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i)
    {
        if (entries[i].size() != n) throw ParseError("matrix must be square: '" + text + "'");
        for (std::size_t j = 0; j < n; ++j)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = entries[i][j];
    }
    return m;
}

// ---------------------------------------------------------------------------
// Determinants and minors

PuiseuxPoly determinantCofactor(const PuiseuxMatrix& m)
{
    const Eigen::Index n = m.rows();
    if (m.cols() != n) throw std::invalid_argument("determinant of a non-square matrix");
    if (n == 0) return PuiseuxPoly(1);
    if (n == 1) return m(0, 0);
    if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    PuiseuxPoly det;
    for (Eigen::Index j = 0; j < n; ++j)
    {
        if (m(0, j).isZero()) continue;
        PuiseuxMatrix minor(n - 1, n - 1);
        for (Eigen::Index r = 1; r < n; ++r)
            for (Eigen::Index c = 0, cc = 0; c < n; ++c)
                if (c != j) minor(r - 1, cc++) = m(r, c);
        const PuiseuxPoly term = m(0, j) * determinantCofactor(minor);
        if (j % 2 == 0) det += term; else det -= term;
    }
    return det;
}

PuiseuxPoly determinantBareiss(const PuiseuxMatrix& input)
{
    const Eigen::Index n = input.rows();
    if (input.cols() != n) throw std::invalid_argument("determinant of a non-square matrix");
    if (n == 0) return PuiseuxPoly(1);
    PuiseuxMatrix m = input;
    PuiseuxPoly previous(1);
    bool negate = false;
    for (Eigen::Index k = 0; k + 1 < n; ++k)
    {
        if (m(k, k).isZero())
        {
            Eigen::Index swapRow = -1;
            for (Eigen::Index i = k + 1; i < n; ++i)
                if (!m(i, k).isZero()) { swapRow = i; break; }
            if (swapRow < 0) return PuiseuxPoly();
            m.row(k).swap(m.row(swapRow));
            negate = !negate;
        }
        for (Eigen::Index i = k + 1; i < n; ++i)
        {
            for (Eigen::Index j = k + 1; j < n; ++j)
            {
                const PuiseuxPoly numerator = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                auto q = exactQuotient(numerator, previous);
                if (!q) throw std::logic_error("Bareiss step produced an inexact division");
                m(i, j) = std::move(*q);
            }
            m(i, k) = PuiseuxPoly();
        }
        previous = m(k, k);
    }
    return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

PuiseuxPoly determinant(const PuiseuxMatrix& m)
{
    return m.rows() <= 4 ? determinantCofactor(m) : determinantBareiss(m);
}

ExtendedRational minMinorValuation(const PuiseuxMatrix& m, int k)
{
    const int n = static_cast<int>(m.rows());
    if (m.cols() != m.rows()) throw std::invalid_argument("minMinorValuation: non-square matrix");
    if (k < 1 || k > n)
        throw std::invalid_argument("minMinorValuation: minor size " + std::to_string(k) +
                                    " out of range 1.." + std::to_string(n));

    std::vector<std::vector<int>> subsets;
    std::vector<int> chosen;
    std::function<void(int)> choose = [&](int start) {
        if (static_cast<int>(chosen.size()) == k) { subsets.push_back(chosen); return; }
        for (int i = start; i < n; ++i)
        {
            chosen.push_back(i);
            choose(i + 1);
            chosen.pop_back();
        }
    };
    choose(0);

    ExtendedRational best = ExtendedRational::infinity();
    PuiseuxMatrix sub(k, k);
    for (const auto& rows : subsets)
    {
        for (const auto& cols : subsets)
        {
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    sub(i, j) = m(rows[static_cast<std::size_t>(i)], cols[static_cast<std::size_t>(j)]);
            best = min(best, determinant(sub).valuation());
        }
    }
    return best;
}

}   // namespace sphtrop
