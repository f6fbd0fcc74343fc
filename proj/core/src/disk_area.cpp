#include <array>
#include <cmath>

#include "choreme/geometry.hpp"

namespace choreme {

namespace {

// Signed contribution of the directed edge a -> b (coordinates relative to
// the disk center) to the area of disk ∩ polygon. The edge is split where it
// crosses the circle; pieces inside contribute the triangle with the center,
// pieces outside contribute the circular sector they subtend.
double edge_contribution(Point a, Point b, double r) {
    const double r2 = r * r;
    const Point d = b - a;
    const double qa = squared_norm(d);
    if (qa == 0.0) return 0.0;

    std::array<double, 4> cuts{0.0, 0.0, 0.0, 1.0};
    std::size_t count = 1;
    // |a + u d|^2 = r^2  <=>  qa u^2 + 2 (a.d) u + (|a|^2 - r^2) = 0
    const double half_b = dot(a, d);
    const double c = squared_norm(a) - r2;
    const double disc = half_b * half_b - qa * c;
    if (disc > 0.0) {
        const double sq = std::sqrt(disc);
        // Numerically stable pair of roots.
        const double q = -(half_b + std::copysign(sq, half_b));
        double u1 = q / qa;
        double u2 = q != 0.0 ? c / q : -half_b / qa;
        if (u1 > u2) std::swap(u1, u2);
        constexpr double tol = 1e-12;
        for (double u : {u1, u2}) {
            if (u > tol && u < 1.0 - tol) cuts[count++] = u;
        }
    }
    cuts[count] = 1.0;

    double total = 0.0;
    for (std::size_t k = 0; k < count; ++k) {
        const Point p0 = a + cuts[k] * d;
        const Point p1 = a + cuts[k + 1] * d;
        const Point mid = a + (0.5 * (cuts[k] + cuts[k + 1])) * d;
        if (squared_norm(mid) <= r2) {
            total += 0.5 * cross(p0, p1);
        } else {
            total += 0.5 * r2 * std::atan2(cross(p0, p1), dot(p0, p1));
        }
    }
    return total;
}

double ring_contribution(const Ring& ring, Point center, double r) {
    double s = 0.0;
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i)
        s += edge_contribution(ring[i] - center, ring[(i + 1) % n] - center, r);
    return s;
}

}  // namespace

double disk_polygon_area(const Disk& disk, const PolygonWithHoles& polygon) {
    if (!(disk.radius > 0.0) || polygon.outer.size() < 3) return 0.0;

    const BBox box = bounding_box(polygon);
    const Point c = disk.center;
    const double r = disk.radius;
    if (c.x + r < box.xmin || c.x - r > box.xmax || c.y + r < box.ymin || c.y - r > box.ymax)
        return 0.0;

    // Orientation-independent: outer ring positive, holes negative.
    double area = std::abs(ring_contribution(polygon.outer, c, r));
    for (const Ring& h : polygon.holes) area -= std::abs(ring_contribution(h, c, r));
    const double cap = std::min(M_PI * r * r, polygon_area(polygon));
    return std::clamp(area, 0.0, cap);
}

double disk_polygon_area(const Disk& disk, const MultiPolygon& polygons) {
    double a = 0.0;
    for (const auto& p : polygons) a += disk_polygon_area(disk, p);
    return a;
}

}  // namespace choreme
