#include "choreme/map_model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace choreme {

ClassId class_from_int(long long value) {
    if (value == 1) return ClassId::first;
    if (value == 2) return ClassId::second;
    throw MapError("class label must be 1 or 2, got " + std::to_string(value));
}

namespace {

PolygonWithHoles validated_polygon(const PolygonWithHoles& in, std::size_t region) {
    const std::string where = "region " + std::to_string(region);
    PolygonWithHoles p{cleaned_ring(in.outer), {}};
    if (p.outer.size() < 3) throw MapError(where + ": outer ring has fewer than 3 vertices");
    if (!ring_is_simple(p.outer)) throw MapError(where + ": self-intersecting outer ring");
    for (const Ring& h : in.holes) {
        Ring ring = cleaned_ring(h);
        if (ring.size() < 3) throw MapError(where + ": hole has fewer than 3 vertices");
        if (!ring_is_simple(ring)) throw MapError(where + ": self-intersecting hole");
        p.holes.push_back(std::move(ring));
    }
    normalize_orientation(p);
    const PolygonWithHoles outer_only{p.outer, {}};
    for (const Ring& h : p.holes) {
        for (const Point& v : h)
            if (!point_in_polygon(v, outer_only))
                throw MapError(where + ": hole outside its outer ring");
    }
    if (!(polygon_area(p) > 0.0)) throw MapError(where + ": zero-area polygon");
    return p;
}

struct Part {
    std::size_t region;
    const PolygonWithHoles* shape;
    BBox box;
    double area;
};

void check_disjoint(const std::vector<Region>& regions) {
    std::vector<Part> parts;
    for (std::size_t r = 0; r < regions.size(); ++r)
        for (const auto& p : regions[r].shape)
            parts.push_back({r, &p, bounding_box(p), polygon_area(p)});
    std::sort(parts.begin(), parts.end(),
              [](const Part& a, const Part& b) { return a.box.xmin < b.box.xmin; });
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (std::size_t j = i + 1; j < parts.size() && parts[j].box.xmin <= parts[i].box.xmax;
             ++j) {
            if (!parts[i].box.intersects(parts[j].box)) continue;
            const double overlap =
                intersection_area(MultiPolygon{*parts[i].shape}, MultiPolygon{*parts[j].shape});
            if (overlap > 1e-9 * std::min(parts[i].area, parts[j].area)) {
                throw MapError("regions " + std::to_string(parts[i].region) + " and " +
                               std::to_string(parts[j].region) + " overlap");
            }
        }
    }
}

}  // namespace

RegionMap RegionMap::create(std::vector<Region> regions, std::string crs_note) {
    if (regions.empty()) throw MapError("no regions");
    RegionMap map;
    map.crs_note_ = std::move(crs_note);
    for (std::size_t r = 0; r < regions.size(); ++r) {
        Region& region = regions[r];
        if (region.shape.empty()) throw MapError("region " + std::to_string(r) + " is empty");
        for (auto& p : region.shape) p = validated_polygon(p, r);
        const double a = polygon_area(region.shape);
        map.area_[to_int(region.class_id) - 1] += a;
        map.bbox_.extend(bounding_box(region.shape));
    }
    check_disjoint(regions);
    if (!(map.total_area() > 0.0)) throw MapError("map has zero total area");
    map.regions_ = std::move(regions);
    return map;
}

std::vector<ClassId> classify_two(std::span<const double> values) {
    const std::size_t n = values.size();
    for (double v : values)
        if (!std::isfinite(v)) throw MapError("classification values must be finite");

    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    if (n < 2 || sorted.front() == sorted.back()) throw MapError("degenerate classification");

    // Shift by the mean so the running sums stay well conditioned.
    const double mean = std::accumulate(sorted.begin(), sorted.end(), 0.0) / static_cast<double>(n);
    std::vector<double> s1(n + 1, 0.0), s2(n + 1, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double d = sorted[i] - mean;
        s1[i + 1] = s1[i] + d;
        s2[i + 1] = s2[i] + d * d;
    }
    auto sse = [&](std::size_t lo, std::size_t hi) {
        const double cnt = static_cast<double>(hi - lo);
        const double sum = s1[hi] - s1[lo];
        return std::max(0.0, (s2[hi] - s2[lo]) - sum * sum / cnt);
    };

    // Only split between distinct values; the first minimum has the
    // smallest first class.
    double best_cost = INFINITY;
    double threshold = sorted.front();
    for (std::size_t k = 1; k < n; ++k) {
        if (sorted[k - 1] == sorted[k]) continue;
        const double cost = sse(0, k) + sse(k, n);
        if (cost < best_cost) {
            best_cost = cost;
            threshold = sorted[k - 1];
        }
    }

    std::vector<ClassId> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = values[i] <= threshold ? ClassId::first : ClassId::second;
    return out;
}

ClassStats class_stats(const RegionMap& map, ClassId target, AlphaMode mode) {
    ClassStats s;
    s.target = target;
    s.area_class1 = map.class_area(ClassId::first);
    s.area_class2 = map.class_area(ClassId::second);
    if (mode.fixed) {
        const double a = *mode.fixed;
        if (!(a >= 0.0 && a <= 1.0)) throw MapError("alpha must lie in [0, 1]");
        s.alpha = a;
        return s;
    }
    if (!(s.target_area() > 0.0)) throw MapError("target class is absent from the map");
    if (!(s.other_area() > 0.0)) throw MapError("the non-target class is absent from the map");
    s.alpha = s.other_area() / (s.target_area() + s.other_area());
    return s;
}

double ClassDistance::operator()(ClassId a, ClassId b) const {
    if (auto it = table_.find({a, b}); it != table_.end()) return it->second;
    if (auto it = table_.find({b, a}); it != table_.end()) return it->second;
    throw MapError("class distance undefined for pair (" + std::to_string(to_int(a)) + ", " +
                   std::to_string(to_int(b)) + ")");
}

ClassDistance ClassDistance::two_class(double alpha) {
    ClassDistance d;
    d.set(ClassId::first, ClassId::first, alpha);
    d.set(ClassId::second, ClassId::second, alpha);
    d.set(ClassId::first, ClassId::second, alpha - 1.0);
    return d;
}

std::vector<Component> components(const RegionMap& map) {
    std::vector<Component> out;
    const auto& regions = map.regions();
    for (std::size_t r = 0; r < regions.size(); ++r)
        for (const auto& part : regions[r].shape) out.push_back({part, regions[r].class_id, r});
    return out;
}

}  // namespace choreme
