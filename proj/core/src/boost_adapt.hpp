#pragma once

// Conversions between choreme geometry and Boost.Geometry models. Boost is a
// private dependency; nothing here leaks into the public headers.

#include <boost/geometry.hpp>
#include <boost/geometry/geometries/multi_polygon.hpp>
#include <boost/geometry/geometries/point_xy.hpp>
#include <boost/geometry/geometries/polygon.hpp>

#include "choreme/geometry.hpp"

namespace choreme::detail {

namespace bg = boost::geometry;

using BPoint = bg::model::d2::point_xy<double>;
// Counterclockwise outer rings, open (no repeated closing vertex).
using BPolygon = bg::model::polygon<BPoint, false, false>;
using BMultiPolygon = bg::model::multi_polygon<BPolygon>;

inline BPolygon to_boost(const PolygonWithHoles& p) {
    BPolygon out;
    for (const Point& v : p.outer) out.outer().emplace_back(v.x, v.y);
    for (const Ring& h : p.holes) {
        out.inners().emplace_back();
        for (const Point& v : h) out.inners().back().emplace_back(v.x, v.y);
    }
    return out;
}

inline BMultiPolygon to_boost(const MultiPolygon& mp) {
    BMultiPolygon out;
    for (const auto& p : mp) out.push_back(to_boost(p));
    return out;
}

inline Ring from_boost_ring(const auto& ring) {
    Ring out;
    out.reserve(ring.size());
    for (const auto& v : ring) out.push_back({v.x(), v.y()});
    return cleaned_ring(out);
}

inline MultiPolygon from_boost(const BMultiPolygon& mp) {
    MultiPolygon out;
    for (const auto& p : mp) {
        PolygonWithHoles poly;
        poly.outer = from_boost_ring(p.outer());
        if (poly.outer.size() < 3) continue;
        for (const auto& h : p.inners()) {
            Ring ring = from_boost_ring(h);
            if (ring.size() >= 3) poly.holes.push_back(std::move(ring));
        }
        normalize_orientation(poly);
        out.push_back(std::move(poly));
    }
    return out;
}

}  // namespace choreme::detail
