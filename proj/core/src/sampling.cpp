#include "choreme/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "choreme/voronoi.hpp"
#include "parallel.hpp"

namespace choreme {

std::string_view to_string(Strategy s) {
    switch (s) {
        case Strategy::random: return "random";
        case Strategy::voronoi: return "voronoi";
        case Strategy::grid_square: return "grid-square";
        case Strategy::grid_hex: return "grid-hex";
    }
    return "?";
}

std::string_view to_string(Scope s) { return s == Scope::local ? "local" : "global"; }

Strategy parse_strategy(std::string_view s) {
    if (s == "random") return Strategy::random;
    if (s == "voronoi") return Strategy::voronoi;
    if (s == "grid-square" || s == "grid_square" || s == "square") return Strategy::grid_square;
    if (s == "grid-hex" || s == "grid_hex" || s == "hex") return Strategy::grid_hex;
    throw std::invalid_argument("unknown strategy '" + std::string(s) + "'");
}

Scope parse_scope(std::string_view s) {
    if (s == "local") return Scope::local;
    if (s == "global") return Scope::global;
    throw std::invalid_argument("unknown scope '" + std::string(s) + "'");
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    // splitmix64 finalizer over the combined value.
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

BinAllocation allocate_bins(std::size_t n, std::span<const double> areas, double total_area) {
    BinAllocation out;
    const std::size_t k = areas.size();
    out.counts.assign(k, 0);
    out.ideals.assign(k, 0.0);
    if (k == 0) return out;
    if (!(total_area > 0.0)) throw std::invalid_argument("total area must be positive");

    std::vector<double> frac(k);
    std::size_t assigned = 0;
    for (std::size_t i = 0; i < k; ++i) {
        if (!(areas[i] > 0.0)) throw std::invalid_argument("bin areas must be positive");
        out.ideals[i] = areas[i] * static_cast<double>(n) / total_area;
        const double fl = std::floor(out.ideals[i]);
        out.counts[i] = static_cast<std::size_t>(fl);
        frac[i] = out.ideals[i] - fl;
        assigned += out.counts[i];
    }

    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const double tol = 1e-12;
        if (std::abs(frac[a] - frac[b]) > tol) return frac[a] > frac[b];
        if (areas[a] != areas[b]) return areas[a] > areas[b];
        return a < b;
    });
    // Rounding in the ideals can leave the floors one off from n.
    while (assigned > n) {
        for (auto it = order.rbegin(); it != order.rend() && assigned > n; ++it)
            if (out.counts[*it] > 0) {
                --out.counts[*it];
                --assigned;
            }
    }
    for (std::size_t r = 0; assigned < n; r = (r + 1) % k) {
        ++out.counts[order[r]];
        ++assigned;
    }
    return out;
}

namespace {

struct TriangleTable {
    std::span<const PolygonWithHoles> polygons;
    std::vector<Triangle> triangles;
    std::vector<std::size_t> owner;
    std::vector<double> cumulative;

    explicit TriangleTable(std::span<const PolygonWithHoles> polys) : polygons(polys) {
        double acc = 0.0;
        for (std::size_t i = 0; i < polys.size(); ++i) {
            for (const Triangle& t : triangulate(polys[i])) {
                const double a = triangle_area(t);
                if (!(a > 0.0)) continue;
                acc += a;
                triangles.push_back(t);
                owner.push_back(i);
                cumulative.push_back(acc);
            }
        }
    }

    [[nodiscard]] Point draw(Rng& rng) const {
        // Points on a boundary edge can round to the outside; those are redrawn.
        for (;;) {
            const double target = rng.uniform() * cumulative.back();
            auto it = std::upper_bound(cumulative.begin(), cumulative.end(), target);
            if (it == cumulative.end()) --it;
            const auto k = static_cast<std::size_t>(it - cumulative.begin());
            const Triangle& t = triangles[k];
            const double su = std::sqrt(rng.uniform());
            const double v = rng.uniform();
            const Point p = (1.0 - su) * t.a + (su * (1.0 - v)) * t.b + (su * v) * t.c;
            if (point_in_polygon(p, polygons[owner[k]])) return p;
        }
    }
};

}  // namespace

std::vector<Point> sample_random(std::span<const PolygonWithHoles> polygons, std::size_t k, Rng& rng) {
    if (k == 0) return {};
    const TriangleTable table(polygons);
    if (table.triangles.empty()) throw GeometryError("cannot sample a zero-area polygon");
    std::vector<Point> out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i) out.push_back(table.draw(rng));
    return out;
}

std::vector<Point> sample_random(const PolygonWithHoles& polygon, std::size_t k, Rng& rng) {
    return sample_random(std::span<const PolygonWithHoles>(&polygon, 1), k, rng);
}

std::vector<Point> sample_random(const PolygonWithHoles& polygon, std::size_t k, std::uint64_t seed) {
    Rng rng(seed);
    return sample_random(polygon, k, rng);
}

namespace {

// Separates coincident points by a seeded jitter that keeps them inside.
void separate_duplicates(std::vector<Point>& points, const PolygonWithHoles& component, Rng& rng) {
    const double step = 1e-9 * bounding_box(component).diagonal();
    for (int round = 0; round < 16; ++round) {
        std::vector<std::size_t> order(points.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return lex_less(points[a], points[b]); });
        bool moved = false;
        for (std::size_t k = 1; k < order.size(); ++k) {
            if (!(points[order[k]] == points[order[k - 1]])) continue;
            const Point base = points[order[k]];
            for (int attempt = 0; attempt < 64; ++attempt) {
                const double angle = 2.0 * M_PI * rng.uniform();
                const double len = step * static_cast<double>(1 + attempt);
                const Point q = base + Point{len * std::cos(angle), len * std::sin(angle)};
                if (point_in_polygon(q, component)) {
                    points[order[k]] = q;
                    moved = true;
                    break;
                }
            }
        }
        if (!moved) return;
    }
}

}  // namespace

std::vector<Point> relax_voronoi(std::vector<Point> points, const PolygonWithHoles& component,
                                 std::size_t iterations, std::uint64_t seed) {
    if (iterations == 0 || points.empty()) return points;
    for (const Point& p : points)
        if (!point_in_polygon(p, component))
            throw GeometryError("relaxation start point outside its component");

    Rng rng(derive_seed(seed, 0x6c6c6f7964ULL));
    const double nudge = 1e-9 * bounding_box(component).diagonal();
    separate_duplicates(points, component, rng);

    for (std::size_t it = 0; it < iterations; ++it) {
        const std::vector<CroppedCell> cells = clipped_voronoi(points, component);
        for (std::size_t i = 0; i < points.size(); ++i) {
            const CroppedCell& cell = cells[i];
            if (cell.degenerate) continue;
            const Point c = cell.centroid();
            // Clipped cells carry rounding from the overlay; the component test keeps moves inside.
            if (point_in_polygon(c, cell.shape) && point_in_polygon(c, component)) {
                points[i] = c;
                continue;
            }
            // Centroid of a nonconvex cell fell outside it: take the nearest
            // point of the cell, pushed slightly inward.
            const Point z = nearest_point(c, cell.shape);
            const Point dir = z - c;
            const double len = norm(dir);
            const Point inward = len > 0.0 ? z + (nudge / len) * dir : z;
            if (point_in_polygon(inward, component))
                points[i] = inward;
            else if (point_in_polygon(z, component))
                points[i] = z;
        }
        separate_duplicates(points, component, rng);
    }
    return points;
}

namespace {

std::size_t locate(Point p, const std::vector<Component>& comps, const std::vector<BBox>& boxes) {
    for (std::size_t i = 0; i < comps.size(); ++i)
        if (boxes[i].contains(p) && point_in_polygon(p, comps[i].shape)) return i;
    // Floating-point slivers between adjacent regions: nearest component.
    std::size_t best = 0;
    double best_d = INFINITY;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const double d = boundary_distance(p, comps[i].shape);
        if (d < best_d) {
            best_d = d;
            best = i;
        }
    }
    return best;
}

GridKind grid_kind(Strategy s) { return s == Strategy::grid_hex ? GridKind::hex : GridKind::square; }

bool is_grid(Strategy s) { return s == Strategy::grid_square || s == Strategy::grid_hex; }

struct Piece {
    std::vector<Point> points;
    bool exact = true;
};

Piece sample_component(const PolygonWithHoles& shape, std::size_t count, const SampleSpec& spec,
                       std::uint64_t seed) {
    Piece out;
    if (count == 0) return out;
    if (is_grid(spec.strategy)) {
        const GridSearchResult g =
            grid_size_search(std::span<const PolygonWithHoles>(&shape, 1), grid_kind(spec.strategy), count);
        out.points = sample_grid(shape, g.params);
        out.exact = g.exact;
        return out;
    }
    Rng rng(seed);
    out.points = sample_random(shape, count, rng);
    if (spec.strategy == Strategy::voronoi)
        out.points = relax_voronoi(std::move(out.points), shape, spec.voronoi_iterations, seed);
    return out;
}

}  // namespace

Sample sample_map(const RegionMap& map, const SampleSpec& spec, unsigned threads) {
    if (spec.n_target == 0) throw std::invalid_argument("sample count must be at least 1");
    const std::vector<Component> comps = components(map);
    std::vector<PolygonWithHoles> shapes;
    std::vector<double> areas;
    std::vector<BBox> boxes;
    for (const auto& c : comps) {
        shapes.push_back(c.shape);
        areas.push_back(polygon_area(c.shape));
        boxes.push_back(bounding_box(c.shape));
    }
    const double total = std::accumulate(areas.begin(), areas.end(), 0.0);

    Sample sample;
    sample.n_requested = spec.n_target;

    if (spec.scope == Scope::local) {
        const BinAllocation bins = allocate_bins(spec.n_target, areas, total);
        std::vector<Piece> pieces(comps.size());
        detail::parallel_for(comps.size(), threads, [&](std::size_t i, unsigned) {
            pieces[i] = sample_component(shapes[i], bins.counts[i], spec, derive_seed(spec.seed, i));
        });
        for (std::size_t i = 0; i < pieces.size(); ++i) {
            sample.exact = sample.exact && pieces[i].exact;
            for (const Point& p : pieces[i].points) {
                sample.points.push_back(p);
                sample.origin_component.push_back(i);
            }
        }
        return sample;
    }

    std::vector<Point> points;
    if (is_grid(spec.strategy)) {
        const GridSearchResult g = grid_size_search(shapes, grid_kind(spec.strategy), spec.n_target);
        points = sample_grid(shapes, g.params);
        sample.exact = g.exact;
    } else {
        Rng rng(spec.seed);
        points = sample_random(shapes, spec.n_target, rng);
        if (spec.strategy == Strategy::voronoi) {
            // Relax per connected part of the union so no point changes part.
            const MultiPolygon parts = polygon_union(shapes);
            if (parts.empty()) throw GeometryError("union of map components is empty");
            std::vector<std::vector<std::size_t>> members(parts.size());
            for (std::size_t k = 0; k < points.size(); ++k) {
                std::size_t home = parts.size();
                for (std::size_t p = 0; p < parts.size() && home == parts.size(); ++p)
                    if (point_in_polygon(points[k], parts[p])) home = p;
                if (home == parts.size()) {
                    double best = INFINITY;
                    for (std::size_t p = 0; p < parts.size(); ++p) {
                        const double d = boundary_distance(points[k], parts[p]);
                        if (d < best) {
                            best = d;
                            home = p;
                        }
                    }
                    points[k] = nearest_point(points[k], MultiPolygon{parts[home]});
                }
                members[home].push_back(k);
            }
            detail::parallel_for(parts.size(), threads, [&](std::size_t p, unsigned) {
                std::vector<Point> local;
                for (std::size_t k : members[p]) local.push_back(points[k]);
                local = relax_voronoi(std::move(local), parts[p], spec.voronoi_iterations,
                                      derive_seed(spec.seed, p));
                for (std::size_t m = 0; m < members[p].size(); ++m) points[members[p][m]] = local[m];
            });
        }
    }
    sample.points = std::move(points);
    sample.origin_component.reserve(sample.points.size());
    for (const Point& p : sample.points) sample.origin_component.push_back(locate(p, comps, boxes));
    return sample;
}

}  // namespace choreme
