#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace choreme {

/// Raised for invalid or degenerate geometric input.
class GeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
    friend constexpr Point operator*(Point a, double s) { return {s * a.x, s * a.y}; }
    friend constexpr bool operator==(Point a, Point b) = default;
};

constexpr double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
constexpr double squared_norm(Point a) { return dot(a, a); }

/// Orientation of (a, b, c): positive for a left turn.
constexpr double orient(Point a, Point b, Point c) { return cross(b - a, c - a); }

/// Lexicographic (x, then y) ordering.
constexpr bool lex_less(Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

/// Open ring: the closing vertex is not repeated.
using Ring = std::vector<Point>;

/// Outer ring counterclockwise, holes clockwise (see normalize_orientation).
struct PolygonWithHoles {
    Ring outer;
    std::vector<Ring> holes;
};

using MultiPolygon = std::vector<PolygonWithHoles>;

/// Closed disk. A radius of zero is a point-disk.
struct Disk {
    Point center;
    double radius = 0.0;
};

struct Triangle {
    Point a, b, c;
};

struct BBox {
    double xmin = INFINITY;
    double ymin = INFINITY;
    double xmax = -INFINITY;
    double ymax = -INFINITY;

    void extend(Point p) {
        xmin = std::min(xmin, p.x);
        ymin = std::min(ymin, p.y);
        xmax = std::max(xmax, p.x);
        ymax = std::max(ymax, p.y);
    }
    void extend(const BBox& b) {
        xmin = std::min(xmin, b.xmin);
        ymin = std::min(ymin, b.ymin);
        xmax = std::max(xmax, b.xmax);
        ymax = std::max(ymax, b.ymax);
    }
    [[nodiscard]] bool empty() const { return xmin > xmax || ymin > ymax; }
    [[nodiscard]] double width() const { return xmax - xmin; }
    [[nodiscard]] double height() const { return ymax - ymin; }
    [[nodiscard]] double diagonal() const { return std::hypot(width(), height()); }
    [[nodiscard]] bool contains(Point p) const {
        return p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax;
    }
    [[nodiscard]] bool intersects(const BBox& o) const {
        return xmin <= o.xmax && o.xmin <= xmax && ymin <= o.ymax && o.ymin <= ymax;
    }
};

BBox bounding_box(const Ring& ring);
BBox bounding_box(const PolygonWithHoles& polygon);
BBox bounding_box(const MultiPolygon& polygons);
BBox bounding_box(std::span<const Point> points);

/// Shoelace area, positive for counterclockwise rings.
double signed_area(const Ring& ring);

/// Area of the outer ring minus its holes; never negative.
double polygon_area(const PolygonWithHoles& polygon);
double polygon_area(const MultiPolygon& polygons);

/// Reorders rings to outer-counterclockwise / holes-clockwise.
void normalize_orientation(PolygonWithHoles& polygon);

/// Drops repeated consecutive vertices and a repeated closing vertex.
Ring cleaned_ring(const Ring& ring);

/// True when no two non-adjacent edges of the ring touch and adjacent edges
/// only share their common vertex.
bool ring_is_simple(const Ring& ring);

/// Closed containment: points on the outer ring or on a hole boundary count
/// as inside.
bool point_in_polygon(Point q, const PolygonWithHoles& polygon);
bool point_in_polygon(Point q, const MultiPolygon& polygons);

double point_segment_distance(Point q, Point a, Point b);

/// Closest point to q on the closed set covered by the polygons; q itself if
/// it is already inside.
Point nearest_point(Point q, const MultiPolygon& polygons);

/// Smallest distance from q to any ring edge of the polygon.
double boundary_distance(Point q, const PolygonWithHoles& polygon);

/// Area-weighted centroid; holes subtract.
Point centroid(const PolygonWithHoles& polygon);
Point centroid(const MultiPolygon& polygons);

/// Ear-clipping triangulation after bridging holes into the outer ring.
std::vector<Triangle> triangulate(const PolygonWithHoles& polygon);

inline double triangle_area(const Triangle& t) { return 0.5 * std::abs(orient(t.a, t.b, t.c)); }

/// Exact area of the closed disk intersected with the polygon.
double disk_polygon_area(const Disk& disk, const PolygonWithHoles& polygon);
double disk_polygon_area(const Disk& disk, const MultiPolygon& polygons);

/// Area of the intersection of two polygon sets.
double intersection_area(const MultiPolygon& a, const MultiPolygon& b);

/// Union of interior-disjoint polygons, split into connected parts.
MultiPolygon polygon_union(std::span<const PolygonWithHoles> polygons);

}  // namespace choreme
