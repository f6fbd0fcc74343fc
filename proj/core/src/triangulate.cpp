#include <algorithm>
#include <numeric>

#include "choreme/geometry.hpp"

namespace choreme {

namespace {

// Is direction a -> b inside the interior wedge at vertex a of a CCW ring?
bool locally_inside(Point prev, Point a, Point next, Point b) {
    if (orient(prev, a, next) > 0) return orient(prev, a, b) >= 0 && orient(a, next, b) >= 0;
    return orient(prev, a, b) >= 0 || orient(a, next, b) >= 0;
}

bool in_triangle_closed(Point p, Point a, Point b, Point c) {
    return orient(a, b, p) >= 0 && orient(b, c, p) >= 0 && orient(c, a, p) >= 0;
}

// Splices the hole into `ring` through a mutually visible vertex pair.
void bridge_hole(Ring& ring, const Ring& hole) {
    const std::size_t hm =
        static_cast<std::size_t>(std::max_element(hole.begin(), hole.end(),
                                                  [](Point a, Point b) { return lex_less(a, b); }) -
                                 hole.begin());
    const Point m = hole[hm];
    const std::size_t n = ring.size();

    // Nearest intersection of the ray m + (t, 0), t >= 0, with the ring.
    double best_x = INFINITY;
    std::size_t best_edge = n;
    for (std::size_t i = 0; i < n; ++i) {
        const Point a = ring[i];
        const Point b = ring[(i + 1) % n];
        if ((a.y > m.y) == (b.y > m.y) && a.y != m.y && b.y != m.y) continue;
        if (a.y == b.y) {
            if (a.y != m.y) continue;
            const double x = std::min(a.x, b.x);
            if (std::max(a.x, b.x) >= m.x && std::max(x, m.x) < best_x) {
                best_x = std::max(x, m.x);
                best_edge = i;
            }
            continue;
        }
        const double x = a.x + (m.y - a.y) * (b.x - a.x) / (b.y - a.y);
        if (x >= m.x && x < best_x) {
            best_x = x;
            best_edge = i;
        }
    }
    if (best_edge == n) throw GeometryError("hole is not inside its outer ring");

    const Point hit{best_x, m.y};
    const Point ea = ring[best_edge];
    const Point eb = ring[(best_edge + 1) % n];
    std::size_t candidate = ea.x > eb.x ? best_edge : (best_edge + 1) % n;
    if (ea == hit) candidate = best_edge;
    if (eb == hit) candidate = (best_edge + 1) % n;

    // A reflex vertex inside triangle (m, hit, candidate) would block the
    // bridge; the one with the smallest angle to the ray is visible.
    if (!(ring[candidate] == hit)) {
        const Point p = ring[candidate];
        double best_tan = INFINITY;
        double best_dist = INFINITY;
        const bool upper = p.y > m.y;
        for (std::size_t i = 0; i < n; ++i) {
            const Point v = ring[i];
            if (v.x < m.x || v == p) continue;
            const Point prev = ring[(i + n - 1) % n];
            const Point next = ring[(i + 1) % n];
            if (orient(prev, v, next) > 0) continue;
            const bool inside = upper ? in_triangle_closed(v, m, hit, p)
                                      : in_triangle_closed(v, m, p, hit);
            if (!inside) continue;
            const double tan = std::abs(v.y - m.y) / std::max(v.x - m.x, 1e-300);
            const double dist = squared_norm(v - m);
            if (tan < best_tan || (tan == best_tan && dist < best_dist)) {
                best_tan = tan;
                best_dist = dist;
                candidate = i;
            }
        }
    }

    // Several ring vertices can share the candidate's position once earlier
    // holes are bridged; pick the copy whose wedge faces m.
    const Point target = ring[candidate];
    for (std::size_t i = 0; i < n; ++i) {
        if (!(ring[i] == target)) continue;
        if (locally_inside(ring[(i + n - 1) % n], ring[i], ring[(i + 1) % n], m)) {
            candidate = i;
            break;
        }
    }

    Ring merged;
    merged.reserve(n + hole.size() + 2);
    merged.insert(merged.end(), ring.begin(), ring.begin() + static_cast<std::ptrdiff_t>(candidate) + 1);
    for (std::size_t k = 0; k <= hole.size(); ++k) merged.push_back(hole[(hm + k) % hole.size()]);
    merged.push_back(ring[candidate]);
    merged.insert(merged.end(), ring.begin() + static_cast<std::ptrdiff_t>(candidate) + 1, ring.end());
    ring = std::move(merged);
}

}  // namespace

std::vector<Triangle> triangulate(const PolygonWithHoles& polygon) {
    PolygonWithHoles poly{cleaned_ring(polygon.outer), {}};
    for (const Ring& h : polygon.holes) {
        Ring c = cleaned_ring(h);
        if (c.size() >= 3 && signed_area(c) != 0.0) poly.holes.push_back(std::move(c));
    }
    if (poly.outer.size() < 3 || polygon_area(poly) <= 0.0)
        throw GeometryError("cannot triangulate a zero-area polygon");
    normalize_orientation(poly);

    std::sort(poly.holes.begin(), poly.holes.end(), [](const Ring& a, const Ring& b) {
        const Point ma = *std::max_element(a.begin(), a.end(), lex_less);
        const Point mb = *std::max_element(b.begin(), b.end(), lex_less);
        return lex_less(mb, ma);
    });
    Ring ring = poly.outer;
    for (const Ring& h : poly.holes) bridge_hole(ring, h);

    const std::size_t n = ring.size();
    std::vector<std::size_t> prev(n), next(n);
    for (std::size_t i = 0; i < n; ++i) {
        prev[i] = (i + n - 1) % n;
        next[i] = (i + 1) % n;
    }

    std::vector<Triangle> out;
    out.reserve(n);
    std::size_t remaining = n;
    std::size_t cur = 0;
    std::size_t stalled = 0;

    auto remove = [&](std::size_t v) {
        next[prev[v]] = next[v];
        prev[next[v]] = prev[v];
        --remaining;
    };
    auto is_reflex = [&](std::size_t v) {
        return orient(ring[prev[v]], ring[v], ring[next[v]]) <= 0;
    };
    auto is_ear = [&](std::size_t v) {
        const Point a = ring[prev[v]];
        const Point b = ring[v];
        const Point c = ring[next[v]];
        if (orient(a, b, c) <= 0) return false;
        for (std::size_t w = next[next[v]]; w != prev[v]; w = next[w]) {
            const Point p = ring[w];
            if (p == a || p == b || p == c) continue;
            if (!is_reflex(w)) continue;
            if (in_triangle_closed(p, a, b, c)) return false;
        }
        return true;
    };

    while (remaining > 3) {
        const Point a = ring[prev[cur]];
        const Point b = ring[cur];
        const Point c = ring[next[cur]];
        if (a == b || b == c || orient(a, b, c) == 0.0) {
            // Duplicate, straight or spike vertex: zero area, drop it.
            const std::size_t after = next[cur];
            remove(cur);
            cur = after;
            stalled = 0;
            continue;
        }
        if (is_ear(cur)) {
            out.push_back({a, b, c});
            const std::size_t after = next[cur];
            remove(cur);
            cur = after;
            stalled = 0;
            continue;
        }
        cur = next[cur];
        if (++stalled > remaining) {
            // Numerically stuck: clip the most convex vertex.
            std::size_t pick = cur;
            double best = -INFINITY;
            std::size_t v = cur;
            for (std::size_t k = 0; k < remaining; ++k, v = next[v]) {
                const double o = orient(ring[prev[v]], ring[v], ring[next[v]]);
                if (o > best) {
                    best = o;
                    pick = v;
                }
            }
            if (best > 0) out.push_back({ring[prev[pick]], ring[pick], ring[next[pick]]});
            cur = next[pick];
            remove(pick);
            stalled = 0;
        }
    }
    if (remaining == 3) {
        const Point a = ring[prev[cur]];
        const Point b = ring[cur];
        const Point c = ring[next[cur]];
        if (orient(a, b, c) > 0) out.push_back({a, b, c});
    }
    return out;
}

}  // namespace choreme
