#include "choreme/voronoi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "boost_adapt.hpp"

namespace choreme {

namespace {

// Keeps the part of convex `poly` where dot(x - origin, normal) <= 0.
Ring clip_halfplane(const Ring& poly, Point origin, Point normal) {
    Ring out;
    out.reserve(poly.size() + 1);
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point a = poly[i];
        const Point b = poly[(i + 1) % n];
        const double fa = dot(a - origin, normal);
        const double fb = dot(b - origin, normal);
        if (fa <= 0) out.push_back(a);
        if ((fa < 0 && fb > 0) || (fa > 0 && fb < 0)) {
            const double t = fa / (fa - fb);
            out.push_back(a + t * (b - a));
        }
    }
    return out;
}

// Uniform bucket grid over the sites for ring-by-ring neighbor enumeration.
class SiteGrid {
public:
    SiteGrid(std::span<const Point> sites, const BBox& box) : sites_(sites), box_(box) {
        const double n = static_cast<double>(std::max<std::size_t>(sites.size(), 1));
        const double w = std::max(box.width(), 1e-300);
        const double h = std::max(box.height(), 1e-300);
        cell_ = std::sqrt(w * h / n);
        if (!(cell_ > 0) || !std::isfinite(cell_)) cell_ = std::max(w, h);
        nx_ = std::clamp<long>(static_cast<long>(std::ceil(w / cell_)), 1, 4096);
        ny_ = std::clamp<long>(static_cast<long>(std::ceil(h / cell_)), 1, 4096);
        cell_ = std::max(w / static_cast<double>(nx_), h / static_cast<double>(ny_));
        start_.assign(static_cast<std::size_t>(nx_ * ny_) + 1, 0);
        std::vector<std::size_t> bucket(sites.size());
        for (std::size_t i = 0; i < sites.size(); ++i) {
            bucket[i] = index(bucket_of(sites[i]));
            ++start_[bucket[i] + 1];
        }
        std::partial_sum(start_.begin(), start_.end(), start_.begin());
        items_.resize(sites.size());
        std::vector<std::size_t> fill(start_.begin(), start_.end() - 1);
        for (std::size_t i = 0; i < sites.size(); ++i) items_[fill[bucket[i]]++] = i;
    }

    [[nodiscard]] std::pair<long, long> bucket_of(Point p) const {
        const long bx = std::clamp(static_cast<long>((p.x - box_.xmin) / cell_), 0L, nx_ - 1);
        const long by = std::clamp(static_cast<long>((p.y - box_.ymin) / cell_), 0L, ny_ - 1);
        return {bx, by};
    }

    [[nodiscard]] double cell_size() const { return cell_; }
    [[nodiscard]] long max_ring() const { return std::max(nx_, ny_); }

    // Calls f(j) for every site in buckets at Chebyshev distance `ring`.
    template <typename F>
    void for_ring(std::pair<long, long> center, long ring, F&& f) const {
        const auto [cx, cy] = center;
        auto visit = [&](long bx, long by) {
            if (bx < 0 || by < 0 || bx >= nx_ || by >= ny_) return;
            const std::size_t b = index({bx, by});
            for (std::size_t k = start_[b]; k < start_[b + 1]; ++k) f(items_[k]);
        };
        if (ring == 0) {
            visit(cx, cy);
            return;
        }
        for (long dx = -ring; dx <= ring; ++dx) {
            visit(cx + dx, cy - ring);
            visit(cx + dx, cy + ring);
        }
        for (long dy = -ring + 1; dy <= ring - 1; ++dy) {
            visit(cx - ring, cy + dy);
            visit(cx + ring, cy + dy);
        }
    }

private:
    [[nodiscard]] std::size_t index(std::pair<long, long> b) const {
        return static_cast<std::size_t>(b.second * nx_ + b.first);
    }

    std::span<const Point> sites_;
    BBox box_;
    double cell_ = 1.0;
    long nx_ = 1;
    long ny_ = 1;
    std::vector<std::size_t> start_;
    std::vector<std::size_t> items_;
};

}  // namespace

std::vector<Ring> voronoi_cells(std::span<const Point> sites, const BBox& box) {
    std::vector<Ring> cells(sites.size());
    if (sites.empty()) return cells;
    BBox grid_box = box;
    for (const Point& p : sites) grid_box.extend(p);
    const SiteGrid grid(sites, grid_box);
    const Ring frame{{box.xmin, box.ymin}, {box.xmax, box.ymin}, {box.xmax, box.ymax},
                     {box.xmin, box.ymax}};

    for (std::size_t i = 0; i < sites.size(); ++i) {
        const Point s = sites[i];
        Ring cell = frame;
        const auto center = grid.bucket_of(s);
        for (long ring = 0; ring <= grid.max_ring(); ++ring) {
            grid.for_ring(center, ring, [&](std::size_t j) {
                if (j == i || cell.empty()) return;
                const Point t = sites[j];
                cell = clip_halfplane(cell, 0.5 * (s + t), t - s);
            });
            double reach = 0.0;
            for (const Point& v : cell) reach = std::max(reach, norm(v - s));
            // Sites beyond this ring are at least ring * cell_size away and
            // their bisectors cannot cut a cell of radius `reach`.
            if (static_cast<double>(ring) * grid.cell_size() >= 2.0 * reach) break;
        }
        cells[i] = std::move(cell);
    }
    return cells;
}

std::vector<CroppedCell> clipped_voronoi(std::span<const Point> sites,
                                         const PolygonWithHoles& component) {
    std::vector<CroppedCell> out(sites.size());
    if (sites.empty()) return out;

    std::vector<std::size_t> order(sites.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return lex_less(sites[a], sites[b]); });
    for (std::size_t k = 1; k < order.size(); ++k)
        if (sites[order[k]] == sites[order[k - 1]])
            throw GeometryError("duplicate Voronoi sites");
    for (const Point& s : sites)
        if (!point_in_polygon(s, component)) throw GeometryError("Voronoi site outside component");

    const BBox cbox = bounding_box(component);
    const double margin = 1e-6 * std::max(cbox.diagonal(), 1e-300);
    BBox frame = cbox;
    frame.xmin -= margin;
    frame.ymin -= margin;
    frame.xmax += margin;
    frame.ymax += margin;
    const std::vector<Ring> cells = voronoi_cells(sites, frame);

    std::vector<BBox> edge_boxes;
    auto add_edges = [&](const Ring& r) {
        for (std::size_t i = 0; i < r.size(); ++i) {
            BBox b;
            b.extend(r[i]);
            b.extend(r[(i + 1) % r.size()]);
            edge_boxes.push_back(b);
        }
    };
    add_edges(component.outer);
    for (const Ring& h : component.holes) add_edges(h);

    const double component_area = polygon_area(component);
    const detail::BPolygon bcomponent = detail::to_boost(component);

    for (std::size_t i = 0; i < sites.size(); ++i) {
        CroppedCell& cell = out[i];
        cell.site = sites[i];
        const Ring& convex = cells[i];
        if (convex.size() < 3) {
            cell.degenerate = true;
            continue;
        }
        const BBox kbox = bounding_box(convex);
        const bool crosses = std::any_of(edge_boxes.begin(), edge_boxes.end(),
                                         [&](const BBox& e) { return e.intersects(kbox); });
        if (!crosses) {
            // The cell holds its site and no boundary edge reaches it.
            cell.shape = {PolygonWithHoles{convex, {}}};
        } else {
            detail::BPolygon bcell;
            for (const Point& v : convex) bcell.outer().emplace_back(v.x, v.y);
            detail::BMultiPolygon clipped;
            try {
                detail::bg::intersection(bcomponent, bcell, clipped);
            } catch (const std::exception& e) {
                throw GeometryError(std::string("Voronoi cell clipping failed: ") + e.what());
            }
            cell.shape = detail::from_boost(clipped);
        }
        if (polygon_area(cell.shape) < 1e-12 * component_area) {
            cell.shape.clear();
            cell.degenerate = true;
        }
    }
    return out;
}

}  // namespace choreme
