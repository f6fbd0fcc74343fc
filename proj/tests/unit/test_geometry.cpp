#include <gtest/gtest.h>

#include <cmath>

#include "choreme/geometry.hpp"
#include "choreme/sampling.hpp"
#include "synthetic.hpp"

using namespace choreme;
using choreme::testing::c_shape;
using choreme::testing::l_shape;
using choreme::testing::random_star;
using choreme::testing::regular_polygon;

namespace {

PolygonWithHoles unit_square() { return {{{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {}}; }

// Stratified Monte-Carlo estimate of |disk & polygon|: one jittered sample
// per cell of a k x k grid over the disk's bounding square.
double mc_disk_area(const Disk& d, const PolygonWithHoles& poly, int k, std::uint64_t seed) {
    Rng rng(seed);
    const double side = 2.0 * d.radius, cell = side / k;
    long hits = 0;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            const Point p{d.center.x - d.radius + (i + rng.uniform()) * cell,
                          d.center.y - d.radius + (j + rng.uniform()) * cell};
            if (squared_norm(p - d.center) <= d.radius * d.radius && point_in_polygon(p, poly)) ++hits;
        }
    return side * side * static_cast<double>(hits) / (static_cast<double>(k) * k);
}

}  // namespace

TEST(Area, ShoelaceAndHoles) {
    EXPECT_DOUBLE_EQ(signed_area(unit_square().outer), 1.0);
    const Ring ccw = unit_square().outer;
    const Ring cw(ccw.rbegin(), ccw.rend());
    EXPECT_DOUBLE_EQ(signed_area(cw), -1.0);

    PolygonWithHoles p{{{0, 0}, {4, 0}, {4, 4}, {0, 4}}, {{{1, 1}, {2, 1}, {2, 2}, {1, 2}}}};
    EXPECT_DOUBLE_EQ(polygon_area(p), 15.0);
    normalize_orientation(p);
    EXPECT_GT(signed_area(p.outer), 0.0);
    EXPECT_LT(signed_area(p.holes[0]), 0.0);
    EXPECT_DOUBLE_EQ(polygon_area(l_shape(1.0)), 3.0);
}

TEST(Rings, CleanedAndSimple) {
    const Ring closed{{0, 0}, {1, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0}};
    EXPECT_EQ(cleaned_ring(closed).size(), 4u);
    EXPECT_TRUE(ring_is_simple(unit_square().outer));
    EXPECT_TRUE(ring_is_simple(c_shape(1.0).outer));
    EXPECT_FALSE(ring_is_simple({{0, 0}, {1, 1}, {1, 0}, {0, 1}}));  // bow tie
    EXPECT_FALSE(ring_is_simple({{0, 0}, {2, 0}, {2, 2}, {1, 0}, {0, 2}}));  // vertex on an edge
}

TEST(PointInPolygon, ClosedConvention) {
    const PolygonWithHoles p{{{0, 0}, {4, 0}, {4, 4}, {0, 4}}, {{{1, 1}, {1, 2}, {2, 2}, {2, 1}}}};
    EXPECT_TRUE(point_in_polygon({0.5, 0.5}, p));
    EXPECT_TRUE(point_in_polygon({0, 2}, p));      // outer edge
    EXPECT_TRUE(point_in_polygon({4, 4}, p));      // outer vertex
    EXPECT_TRUE(point_in_polygon({1.5, 1}, p));    // hole edge
    EXPECT_FALSE(point_in_polygon({1.5, 1.5}, p)); // inside the hole
    EXPECT_FALSE(point_in_polygon({4.01, 2}, p));
    EXPECT_FALSE(point_in_polygon({-1, 4}, p));    // ray through a vertex
}

TEST(NearestPoint, ProjectsOntoBoundary) {
    const MultiPolygon m{unit_square()};
    const Point q = nearest_point({2, 0.5}, m);
    EXPECT_DOUBLE_EQ(q.x, 1.0);
    EXPECT_DOUBLE_EQ(q.y, 0.5);
    const Point corner = nearest_point({-1, -2}, m);
    EXPECT_EQ(corner, (Point{0, 0}));
    const Point inside{0.3, 0.4};
    EXPECT_EQ(nearest_point(inside, m), inside);
    EXPECT_DOUBLE_EQ(boundary_distance({0.3, 0.4}, unit_square()), 0.3);
}

TEST(Centroid, MatchesRectangleDecomposition) {
    // L-shape = [0,2]x[0,1] + [0,1]x[1,2]: area-weighted rectangle centroids.
    const Point expected{(2.0 * 1.0 + 1.0 * 0.5) / 3.0, (2.0 * 0.5 + 1.0 * 1.5) / 3.0};
    const Point c = centroid(l_shape(1.0));
    EXPECT_NEAR(c.x, expected.x, 1e-14);
    EXPECT_NEAR(c.y, expected.y, 1e-14);

    // Square with a square hole: (16 * (2,2) - 1 * (1.5,1.5)) / 15.
    const PolygonWithHoles p{{{0, 0}, {4, 0}, {4, 4}, {0, 4}}, {{{1, 1}, {1, 2}, {2, 2}, {2, 1}}}};
    const Point h = centroid(p);
    EXPECT_NEAR(h.x, (32.0 - 1.5) / 15.0, 1e-14);
    EXPECT_NEAR(h.y, (32.0 - 1.5) / 15.0, 1e-14);

    // Far from the origin the result must not lose precision.
    const PolygonWithHoles far{{{1e6, 1e6}, {1e6 + 1, 1e6}, {1e6 + 1, 1e6 + 1}, {1e6, 1e6 + 1}}, {}};
    EXPECT_NEAR(centroid(far).x, 1e6 + 0.5, 1e-9);
    EXPECT_THROW(centroid(PolygonWithHoles{{{0, 0}, {1, 1}, {2, 2}}, {}}), GeometryError);
}

TEST(Triangulate, AreasAddUp) {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const PolygonWithHoles p = random_star(seed, {0.5, -2.0}, 3.0, 8 + static_cast<int>(seed % 30), seed % 2 == 0);
        const auto tris = triangulate(p);
        double sum = 0.0;
        for (const Triangle& t : tris) sum += triangle_area(t);
        EXPECT_NEAR(sum, polygon_area(p), 1e-12 * polygon_area(p) * 10) << "seed " << seed;
        const std::size_t expected = p.outer.size() - 2 + (p.holes.empty() ? 0 : p.holes[0].size() + 2);
        EXPECT_EQ(tris.size(), expected) << "seed " << seed;
    }
    const auto c = triangulate(c_shape(1.0));
    EXPECT_EQ(c.size(), 6u);
}

TEST(Triangulate, SeveralHolesAndCollinearVertices) {
    PolygonWithHoles p{{{0, 0}, {3, 0}, {6, 0}, {6, 4}, {0, 4}},
                       {{{1, 1}, {1, 3}, {2, 3}, {2, 1}}, {{4, 1}, {4, 3}, {5, 3}, {5, 1}}}};
    double sum = 0.0;
    for (const Triangle& t : triangulate(p)) sum += triangle_area(t);
    EXPECT_DOUBLE_EQ(sum, 24.0 - 4.0);
}

TEST(DiskArea, AnalyticCases) {
    const PolygonWithHoles sq = unit_square();
    EXPECT_NEAR(disk_polygon_area({{0.5, 0.5}, 2.0}, sq), 1.0, 1e-12);
    EXPECT_NEAR(disk_polygon_area({{0.5, 0.5}, 0.25}, sq), M_PI / 16.0, 1e-12);
    EXPECT_NEAR(disk_polygon_area({{0.5, 0.0}, 0.25}, sq), M_PI / 32.0, 1e-12);
    EXPECT_NEAR(disk_polygon_area({{0.0, 0.0}, 0.25}, sq), M_PI / 64.0, 1e-12);
    EXPECT_EQ(disk_polygon_area({{5, 5}, 1.0}, sq), 0.0);
    EXPECT_EQ(disk_polygon_area({{0.5, 0.5}, 0.0}, sq), 0.0);

    // Hole removes its covered part.
    const PolygonWithHoles holed{{{-2, -2}, {2, -2}, {2, 2}, {-2, 2}}, {regular_polygon({0, 0}, 0.5, 4)}};
    EXPECT_NEAR(disk_polygon_area({{0, 0}, 1.0}, holed), M_PI - 0.5, 1e-12);
}

TEST(DiskArea, CircularSegment) {
    // Disk centered at the origin cut by the line x = h.
    const double r = 1.0, h = 0.3;
    const PolygonWithHoles half_plane{{{h, -5}, {5, -5}, {5, 5}, {h, 5}}, {}};
    const double segment = r * r * std::acos(h / r) - h * std::sqrt(r * r - h * h);
    EXPECT_NEAR(disk_polygon_area({{0, 0}, r}, half_plane), segment, 1e-12);
}

TEST(DiskArea, AgreesWithStratifiedMonteCarlo) {
    Rng rng(99);
    for (int k = 0; k < 12; ++k) {
        const PolygonWithHoles p = random_star(500 + k, {0, 0}, 1.0, 12, k % 3 == 0);
        const Disk d{{rng.uniform() - 0.5, rng.uniform() - 0.5}, 0.3 + 0.6 * rng.uniform()};
        const double exact = disk_polygon_area(d, p);
        const double mc = mc_disk_area(d, p, 400, 1000 + k);
        EXPECT_NEAR(exact, mc, 5e-3 * exact + 1e-4) << "case " << k;
        EXPECT_LE(exact, M_PI * d.radius * d.radius + 1e-12);
        EXPECT_LE(exact, polygon_area(p) + 1e-12);
    }
}

TEST(DiskArea, InvariantUnderTranslation) {
    const PolygonWithHoles p = random_star(7, {0, 0}, 1.0, 16, true);
    PolygonWithHoles moved = p;
    const Point shift{1000.0, -250.0};
    for (Point& v : moved.outer) v = v + shift;
    for (Ring& h : moved.holes)
        for (Point& v : h) v = v + shift;
    const Disk d{{0.1, 0.2}, 0.7};
    EXPECT_NEAR(disk_polygon_area(d, p), disk_polygon_area({d.center + shift, d.radius}, moved), 1e-10);
}

TEST(Union, MergesAdjacentSquares) {
    const std::vector<PolygonWithHoles> parts{
        {{{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {}}, {{{1, 0}, {2, 0}, {2, 1}, {1, 1}}, {}}, {{{5, 5}, {6, 5}, {6, 6}, {5, 6}}, {}}};
    const MultiPolygon u = polygon_union(parts);
    ASSERT_EQ(u.size(), 2u);
    EXPECT_NEAR(polygon_area(u), 3.0, 1e-12);
    EXPECT_NEAR(intersection_area(MultiPolygon{parts[0]}, MultiPolygon{parts[1]}), 0.0, 1e-12);
}
