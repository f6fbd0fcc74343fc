#include "choreme/geometry.hpp"

#include <algorithm>
#include <numeric>

#include "boost_adapt.hpp"

namespace choreme {

BBox bounding_box(const Ring& ring) {
    BBox b;
    for (const Point& p : ring) b.extend(p);
    return b;
}

BBox bounding_box(const PolygonWithHoles& polygon) { return bounding_box(polygon.outer); }

BBox bounding_box(const MultiPolygon& polygons) {
    BBox b;
    for (const auto& p : polygons) b.extend(bounding_box(p));
    return b;
}

BBox bounding_box(std::span<const Point> points) {
    BBox b;
    for (const Point& p : points) b.extend(p);
    return b;
}

double signed_area(const Ring& ring) {
    const std::size_t n = ring.size();
    if (n < 3) return 0.0;
    // Shoelace relative to the first vertex keeps cancellation small for
    // rings far from the origin.
    const Point o = ring[0];
    double twice = 0.0;
    for (std::size_t i = 1; i + 1 < n; ++i) twice += cross(ring[i] - o, ring[i + 1] - o);
    return 0.5 * twice;
}

double polygon_area(const PolygonWithHoles& polygon) {
    double a = std::abs(signed_area(polygon.outer));
    for (const Ring& h : polygon.holes) a -= std::abs(signed_area(h));
    return std::max(a, 0.0);
}

double polygon_area(const MultiPolygon& polygons) {
    double a = 0.0;
    for (const auto& p : polygons) a += polygon_area(p);
    return a;
}

void normalize_orientation(PolygonWithHoles& polygon) {
    if (signed_area(polygon.outer) < 0) std::reverse(polygon.outer.begin(), polygon.outer.end());
    for (Ring& h : polygon.holes)
        if (signed_area(h) > 0) std::reverse(h.begin(), h.end());
}

Ring cleaned_ring(const Ring& ring) {
    Ring out;
    out.reserve(ring.size());
    for (const Point& p : ring)
        if (out.empty() || !(out.back() == p)) out.push_back(p);
    while (out.size() > 1 && out.front() == out.back()) out.pop_back();
    return out;
}

namespace {

bool on_segment(Point q, Point a, Point b) {
    return orient(a, b, q) == 0.0 && std::min(a.x, b.x) <= q.x && q.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= q.y && q.y <= std::max(a.y, b.y);
}

int sign(double v) { return (v > 0) - (v < 0); }

bool segments_touch(Point a, Point b, Point c, Point d) {
    const int o1 = sign(orient(a, b, c));
    const int o2 = sign(orient(a, b, d));
    const int o3 = sign(orient(c, d, a));
    const int o4 = sign(orient(c, d, b));
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    return on_segment(c, a, b) || on_segment(d, a, b) || on_segment(a, c, d) ||
           on_segment(b, c, d);
}

}  // namespace

bool ring_is_simple(const Ring& ring) {
    const std::size_t n = ring.size();
    if (n < 3) return false;
    if (signed_area(ring) == 0.0) return false;

    struct Edge {
        double xmin, xmax;
        std::size_t i;
    };
    std::vector<Edge> edges(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Point a = ring[i];
        const Point b = ring[(i + 1) % n];
        if (a == b) return false;
        edges[i] = {std::min(a.x, b.x), std::max(a.x, b.x), i};
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& l, const Edge& r) {
        return l.xmin < r.xmin || (l.xmin == r.xmin && l.i < r.i);
    });

    for (std::size_t u = 0; u < n; ++u) {
        const std::size_t i = edges[u].i;
        const Point a = ring[i];
        const Point b = ring[(i + 1) % n];
        for (std::size_t v = u + 1; v < n && edges[v].xmin <= edges[u].xmax; ++v) {
            const std::size_t j = edges[v].i;
            const Point c = ring[j];
            const Point d = ring[(j + 1) % n];
            if (std::max(std::min(a.y, b.y), std::min(c.y, d.y)) >
                std::min(std::max(a.y, b.y), std::max(c.y, d.y)))
                continue;
            const bool j_follows = j == (i + 1) % n;
            const bool i_follows = i == (j + 1) % n;
            if (j_follows || i_follows) {
                // Adjacent edges share one vertex; they must not fold back
                // onto each other.
                const Point p = j_follows ? a : c;
                const Point s = j_follows ? b : a;
                const Point r = j_follows ? d : b;
                if (orient(p, s, r) == 0.0 && dot(s - p, r - s) < 0) return false;
                continue;
            }
            if (segments_touch(a, b, c, d)) return false;
        }
    }
    return true;
}

namespace {

// Crossing-number test; `boundary` is set when q lies on an edge.
bool ring_contains(Point q, const Ring& ring, bool& boundary) {
    bool inside = false;
    const std::size_t n = ring.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Point a = ring[j];
        const Point b = ring[i];
        if (on_segment(q, a, b)) {
            boundary = true;
            return true;
        }
        if ((a.y > q.y) != (b.y > q.y)) {
            const double x = a.x + (q.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (q.x < x) inside = !inside;
        }
    }
    return inside;
}

}  // namespace

bool point_in_polygon(Point q, const PolygonWithHoles& polygon) {
    bool boundary = false;
    if (!ring_contains(q, polygon.outer, boundary)) return false;
    if (boundary) return true;
    for (const Ring& h : polygon.holes) {
        boundary = false;
        if (ring_contains(q, h, boundary)) return boundary;
    }
    return true;
}

bool point_in_polygon(Point q, const MultiPolygon& polygons) {
    return std::any_of(polygons.begin(), polygons.end(),
                       [&](const PolygonWithHoles& p) { return point_in_polygon(q, p); });
}

namespace {

Point closest_on_segment(Point q, Point a, Point b) {
    const Point d = b - a;
    const double len2 = squared_norm(d);
    if (len2 == 0.0) return a;
    const double t = std::clamp(dot(q - a, d) / len2, 0.0, 1.0);
    return a + t * d;
}

template <typename F>
void for_each_edge(const PolygonWithHoles& p, F&& f) {
    auto ring_edges = [&](const Ring& r) {
        const std::size_t n = r.size();
        for (std::size_t i = 0; i < n; ++i) f(r[i], r[(i + 1) % n]);
    };
    ring_edges(p.outer);
    for (const Ring& h : p.holes) ring_edges(h);
}

}  // namespace

double point_segment_distance(Point q, Point a, Point b) {
    return norm(q - closest_on_segment(q, a, b));
}

double boundary_distance(Point q, const PolygonWithHoles& polygon) {
    double best = INFINITY;
    for_each_edge(polygon, [&](Point a, Point b) {
        best = std::min(best, point_segment_distance(q, a, b));
    });
    return best;
}

Point nearest_point(Point q, const MultiPolygon& polygons) {
    if (point_in_polygon(q, polygons)) return q;
    Point best = q;
    double best_d2 = INFINITY;
    for (const auto& p : polygons) {
        for_each_edge(p, [&](Point a, Point b) {
            const Point c = closest_on_segment(q, a, b);
            const double d2 = squared_norm(q - c);
            if (d2 < best_d2) {
                best_d2 = d2;
                best = c;
            }
        });
    }
    return best;
}

namespace {

struct Moments {
    double area = 0.0;  // signed
    double mx = 0.0;
    double my = 0.0;
};

void add_ring_moments(const Ring& ring, Point origin, Moments& m) {
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point a = ring[i] - origin;
        const Point b = ring[(i + 1) % n] - origin;
        const double c = cross(a, b);
        m.area += 0.5 * c;
        m.mx += (a.x + b.x) * c / 6.0;
        m.my += (a.y + b.y) * c / 6.0;
    }
}

Moments polygon_moments(const PolygonWithHoles& p, Point origin) {
    // Orientation-independent: outer counted positive, holes negative.
    Moments outer, holes;
    add_ring_moments(p.outer, origin, outer);
    if (outer.area < 0) outer = {-outer.area, -outer.mx, -outer.my};
    for (const Ring& h : p.holes) {
        Moments hm;
        add_ring_moments(h, origin, hm);
        if (hm.area < 0) hm = {-hm.area, -hm.mx, -hm.my};
        holes.area += hm.area;
        holes.mx += hm.mx;
        holes.my += hm.my;
    }
    return {outer.area - holes.area, outer.mx - holes.mx, outer.my - holes.my};
}

}  // namespace

Point centroid(const PolygonWithHoles& polygon) { return centroid(MultiPolygon{polygon}); }

Point centroid(const MultiPolygon& polygons) {
    const BBox box = bounding_box(polygons);
    if (box.empty()) throw GeometryError("centroid of empty geometry");
    const Point origin{box.xmin, box.ymin};
    Moments total;
    for (const auto& p : polygons) {
        const Moments m = polygon_moments(p, origin);
        total.area += m.area;
        total.mx += m.mx;
        total.my += m.my;
    }
    if (!(total.area > 0.0)) throw GeometryError("centroid of zero-area geometry");
    return {origin.x + total.mx / total.area, origin.y + total.my / total.area};
}

double intersection_area(const MultiPolygon& a, const MultiPolygon& b) {
    if (!bounding_box(a).intersects(bounding_box(b))) return 0.0;
    detail::BMultiPolygon out;
    detail::bg::intersection(detail::to_boost(a), detail::to_boost(b), out);
    return std::abs(detail::bg::area(out));
}

MultiPolygon polygon_union(std::span<const PolygonWithHoles> polygons) {
    if (polygons.empty()) return {};
    // Pairwise cascade keeps intermediate results balanced.
    std::vector<detail::BMultiPolygon> level;
    level.reserve(polygons.size());
    for (const auto& p : polygons) level.push_back(detail::BMultiPolygon{detail::to_boost(p)});
    while (level.size() > 1) {
        std::vector<detail::BMultiPolygon> next;
        next.reserve((level.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < level.size(); i += 2) {
            detail::BMultiPolygon merged;
            detail::bg::union_(level[i], level[i + 1], merged);
            next.push_back(std::move(merged));
        }
        if (level.size() % 2 == 1) next.push_back(std::move(level.back()));
        level = std::move(next);
    }
    return detail::from_boost(level.front());
}

}  // namespace choreme
