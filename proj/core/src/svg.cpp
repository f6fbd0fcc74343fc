#include "choreme/svg.hpp"

#include <cstdio>
#include <sstream>

namespace choreme {

namespace {

class Writer {
public:
    explicit Writer(const BBox& box) : flip_(box.ymin + box.ymax) {}

    std::string num(double v) const {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.10g", v);
        return buf;
    }
    std::string x(double v) const { return num(v); }
    std::string y(double v) const { return num(flip_ - v); }

    void ring(std::ostringstream& out, const Ring& r) const {
        for (std::size_t i = 0; i < r.size(); ++i)
            out << (i == 0 ? "M" : "L") << x(r[i].x) << ' ' << y(r[i].y) << ' ';
        out << "Z ";
    }

private:
    double flip_;
};

const char* fill_for(ClassId c) { return c == ClassId::first ? "#f2c57c" : "#d4d4d4"; }

}  // namespace

std::string render_svg(const RegionMap& map, const std::optional<Disk>& disk,
                       std::span<const WeightedPoint> markers) {
    const BBox& box = map.bbox();
    const Writer w(box);
    const double mx = 0.02 * box.width(), my = 0.02 * box.height();
    const double diag = box.diagonal();
    const double glyph = 0.004 * diag;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << w.num(box.xmin - mx) << ' '
        << w.num(box.ymin - my) << ' ' << w.num(box.width() + 2 * mx) << ' ' << w.num(box.height() + 2 * my)
        << "\">\n";

    out << "<g id=\"regions\" stroke=\"#ffffff\" stroke-width=\"" << w.num(0.001 * diag) << "\">\n";
    for (const Region& r : map.regions()) {
        std::ostringstream d;
        for (const PolygonWithHoles& p : r.shape) {
            w.ring(d, p.outer);
            for (const Ring& h : p.holes) w.ring(d, h);
        }
        std::string path = d.str();
        if (!path.empty()) path.pop_back();
        out << "<path class=\"class-" << to_int(r.class_id) << "\" fill=\"" << fill_for(r.class_id)
            << "\" fill-rule=\"evenodd\" d=\"" << path << "\"/>\n";
    }
    out << "</g>\n";

    if (!markers.empty()) {
        out << "<g id=\"samples\">\n";
        for (const WeightedPoint& p : markers) {
            const double px = p.position.x, py = p.position.y;
            if (p.weight > 0.0) {
                out << "<circle cx=\"" << w.x(px) << "\" cy=\"" << w.y(py) << "\" r=\"" << w.num(glyph)
                    << "\" fill=\"#2166ac\"/>\n";
            } else {
                out << "<path stroke=\"#7f7f7f\" stroke-width=\"" << w.num(0.4 * glyph) << "\" d=\"M"
                    << w.x(px - glyph) << ' ' << w.y(py - glyph) << " L" << w.x(px + glyph) << ' '
                    << w.y(py + glyph) << " M" << w.x(px - glyph) << ' ' << w.y(py + glyph) << " L"
                    << w.x(px + glyph) << ' ' << w.y(py - glyph) << "\"/>\n";
            }
        }
        out << "</g>\n";
    }

    if (disk)
        out << "<circle id=\"disk\" cx=\"" << w.x(disk->center.x) << "\" cy=\"" << w.y(disk->center.y)
            << "\" r=\"" << w.num(disk->radius) << "\" fill=\"none\" stroke=\"#b2182b\" stroke-width=\""
            << w.num(0.005 * diag) << "\"/>\n";
    else
        out << "<!-- empty disk: no placement with positive weight -->\n";
    out << "</svg>\n";
    return out.str();
}

}  // namespace choreme
