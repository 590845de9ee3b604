#include "sphtrop/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace sphtrop {

namespace {

using Index = Eigen::Index;
using Point = Eigen::Vector2d;

constexpr double kExtent = 3.0;   // lattice units visible on each side of 0
constexpr double kScale = 60.0;   // pixels per lattice unit
constexpr double kSize = 2 * kExtent * kScale + 80;

std::string num(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", std::abs(x) < 5e-3 ? 0.0 : x);
    return buf;
}

double toDouble(const Integer& z) { return z.convert_to<double>(); }

Point toPoint(const IntVector& v) { return {toDouble(v(0)), toDouble(v(1))}; }

// Lattice coordinates to pixels; y grows upwards on the page.
Point pixel(const Point& p) { return {kSize / 2 + kScale * p.x(), kSize / 2 - kScale * p.y()}; }

std::string escape(const std::string& s)
{
    std::string out;
    for (char c : s)
    {
        if (c == '<') out += "&lt;";
        else if (c == '>') out += "&gt;";
        else if (c == '&') out += "&amp;";
        else out += c;
    }
    return out;
}

class Canvas
{
    public:
        void line(const Point& a, const Point& b, const std::string& style)
        {
            const Point pa = pixel(a), pb = pixel(b);
            out_ << "  <line x1=\"" << num(pa.x()) << "\" y1=\"" << num(pa.y()) << "\" x2=\"" << num(pb.x())
                 << "\" y2=\"" << num(pb.y()) << "\" " << style << "/>\n";
        }
        void polygon(const std::vector<Point>& ps, const std::string& style)
        {
            if (ps.size() < 3) return;
            out_ << "  <polygon points=\"";
            for (std::size_t i = 0; i < ps.size(); ++i)
            {
                const Point p = pixel(ps[i]);
                out_ << (i ? " " : "") << num(p.x()) << "," << num(p.y());
            }
            out_ << "\" " << style << "/>\n";
        }
        void dot(const Point& p, const std::string& style)
        {
            const Point q = pixel(p);
            out_ << "  <circle cx=\"" << num(q.x()) << "\" cy=\"" << num(q.y()) << "\" r=\"5\" " << style << "/>\n";
        }
        void text(const Point& p, const std::string& s, const std::string& style = "")
        {
            const Point q = pixel(p);
            out_ << "  <text x=\"" << num(q.x()) << "\" y=\"" << num(q.y()) << "\" font-family=\"sans-serif\" "
                 << "font-size=\"14\"" << (style.empty() ? "" : " " + style) << ">" << escape(s) << "</text>\n";
        }
        void comment(const std::string& s) { out_ << "  <!-- " << escape(s) << " -->\n"; }

        std::string finish(const std::string& title)
        {
            std::ostringstream doc;
            doc << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(kSize) << "\" height=\"" << num(kSize)
                << "\" viewBox=\"0 0 " << num(kSize) << " " << num(kSize) << "\">\n"
                << "  <title>" << escape(title) << "</title>\n"
                << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
                << out_.str() << "</svg>\n";
            return doc.str();
        }

    private:
        std::ostringstream out_;
};

// Clips the square [-e, e]^2 to the half-planes <n, x> >= 0.
std::vector<Point> clipToCone(const Cone& cone, double e)
{
    std::vector<Point> poly{{-e, -e}, {e, -e}, {e, e}, {-e, e}};
    for (const auto& normal : cone.normals())
    {
        const Point n = toPoint(normal);
        std::vector<Point> next;
        for (std::size_t i = 0; i < poly.size(); ++i)
        {
            const Point& a = poly[i];
            const Point& b = poly[(i + 1) % poly.size()];
            const double fa = n.dot(a), fb = n.dot(b);
            if (fa >= 0) next.push_back(a);
            if ((fa >= 0) != (fb >= 0)) next.push_back(a + (b - a) * (fa / (fa - fb)));
        }
        poly = std::move(next);
    }
    return poly;
}

// Point where the ray through v leaves the visible square.
Point rayEnd(const Point& v, double e) { return v * (e / std::max(std::abs(v.x()), std::abs(v.y()))); }

void frame2(Canvas& c, const SphericalSpace& space)
{
    const auto e = static_cast<int>(kExtent);
    for (int k = -e; k <= e; ++k)
    {
        const std::string style = k == 0 ? "stroke=\"#888\" stroke-width=\"1.5\"" : "stroke=\"#ddd\" stroke-width=\"1\"";
        c.line({double(k), -kExtent}, {double(k), kExtent}, style);
        c.line({-kExtent, double(k)}, {kExtent, double(k)}, style);
    }
    c.comment("valuation cone");
    c.polygon(clipToCone(space.valuationCone, kExtent), "fill=\"#4a90d9\" fill-opacity=\"0.15\" stroke=\"none\"");
    c.comment("colors");
    for (const auto& color : space.palette)
    {
        const Point p = toPoint(color.vector);
        c.dot(p, "fill=\"#d94a4a\"");
        c.text(p + Point(0.12, 0.12), color.label, "fill=\"#d94a4a\"");
    }
}

void frame1(Canvas& c, const SphericalSpace& space)
{
    c.line({-kExtent, 0}, {kExtent, 0}, "stroke=\"#888\" stroke-width=\"1.5\"");
    const auto e = static_cast<int>(kExtent);
    for (int k = -e; k <= e; ++k)
    {
        c.line({double(k), -0.08}, {double(k), 0.08}, "stroke=\"#888\" stroke-width=\"1\"");
        c.text({double(k) - 0.05, -0.35}, std::to_string(k), "fill=\"#888\"");
    }
    c.comment("valuation cone");
    double lo = -kExtent, hi = kExtent;
    for (const auto& n : space.valuationCone.normals())
    {
        if (n(0) > 0) lo = std::max(lo, 0.0);
        if (n(0) < 0) hi = std::min(hi, 0.0);
    }
    if (lo < hi)
        c.polygon({{lo, -0.15}, {hi, -0.15}, {hi, 0.15}, {lo, 0.15}},
                  "fill=\"#4a90d9\" fill-opacity=\"0.15\" stroke=\"none\"");
    c.comment("colors");
    for (const auto& color : space.palette)
    {
        const Point p(toDouble(color.vector(0)), 0);
        c.dot(p, "fill=\"#d94a4a\"");
        c.text(p + Point(-0.1, 0.35), color.label, "fill=\"#d94a4a\"");
    }
}

void requirePlottable(const SphericalSpace& space)
{
    if (space.rank < 1 || space.rank > 2)
        throw std::invalid_argument("plotting supports rank 1 and 2 only; space " + space.name + " has rank " +
                                    std::to_string(space.rank));
}

}   // namespace

std::string plotWeightedFan(const WeightedRayFan& fan)
{
    requirePlottable(fan.space);
    Canvas c;
    const bool flat = fan.space.rank == 1;
    flat ? frame1(c, fan.space) : frame2(c, fan.space);
    c.comment("rays");
    for (const auto& r : fan.rays)
    {
        const Point v = flat ? Point(toDouble(r.ray(0)), 0) : toPoint(r.ray);
        const Point end = rayEnd(v, kExtent - 0.4);
        c.line({0, 0}, end, "stroke=\"black\" stroke-width=\"2.5\"");
        c.text(end + end.normalized() * 0.2 + Point(-0.05, flat ? 0.25 : -0.05), toString(r.weight));
    }
    return c.finish(fan.space.name + " weighted fan");
}

std::string plotColoredFan(const ColoredFan& fan)
{
    requirePlottable(fan.space);
    Canvas c;
    const bool flat = fan.space.rank == 1;
    flat ? frame1(c, fan.space) : frame2(c, fan.space);
    c.comment("cones");
    if (!flat)
        for (const auto& cc : fan.cones)
            if (cc.cone.dimension() == 2)
                c.polygon(clipToCone(cc.cone, kExtent - 0.4),
                          cc.colors.empty() ? "fill=\"#999\" fill-opacity=\"0.25\" stroke=\"none\""
                                            : "fill=\"#d94a4a\" fill-opacity=\"0.2\" stroke=\"none\"");
    for (const auto& cc : fan.cones)
    {
        if (cc.cone.dimension() != 1) continue;
        const IntVector& g = cc.cone.generators().front();
        const Point v = flat ? Point(toDouble(g(0)), 0) : toPoint(g);
        c.line({0, 0}, rayEnd(v, kExtent - 0.4), "stroke=\"black\" stroke-width=\"2.5\"");
    }
    return c.finish(fan.space.name + " colored fan");
}

}   // namespace sphtrop
