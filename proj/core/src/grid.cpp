#include <algorithm>
#include <cmath>

#include "choreme/sampling.hpp"

namespace choreme {

namespace {

struct Lattice {
    double x0, dx;  // x of column i in row j: x0 + dx * i + row_shift(j)
    double shift;   // extra x offset on odd rows
    double y0, dy;
    long rows, cols_even, cols_odd;

    [[nodiscard]] double x(long i, long j) const {
        return x0 + dx * (static_cast<double>(i) + ((j % 2) ? shift : 0.0));
    }
    [[nodiscard]] double y(long j) const { return y0 + dy * static_cast<double>(j); }
};

Lattice make_lattice(const BBox& frame, GridParams g) {
    Lattice L{};
    const double s = g.cell_size;
    if (g.kind == GridKind::square) {
        L.x0 = frame.xmin + 0.5 * s;
        L.dx = s;
        L.shift = 0.0;
        L.y0 = frame.ymin + 0.5 * s;
        L.dy = s;
    } else {
        L.x0 = frame.xmin;
        L.dx = std::sqrt(3.0) * s;
        L.shift = 0.5;
        L.y0 = frame.ymin;
        L.dy = 1.5 * s;
    }
    // Largest count n with f(n - 1) <= limit, using the same formulas that
    // generate the points.
    auto count_upto = [](auto f, double step, double first, double limit) -> long {
        if (f(0) > limit) return 0;
        long n = static_cast<long>(std::floor((limit - first) / step)) + 1;
        n = std::max(n, 1L);
        while (n > 1 && f(n - 1) > limit) --n;
        while (f(n) <= limit) ++n;
        return n;
    };
    L.rows = count_upto([&](long j) { return L.y(j); }, L.dy, L.y0, frame.ymax);
    L.cols_even = count_upto([&](long i) { return L.x(i, 0); }, L.dx, L.x0, frame.xmax);
    L.cols_odd = count_upto([&](long i) { return L.x(i, 1); }, L.dx, L.x0, frame.xmax);
    return L;
}

// Crossing-number row classification matching point_in_polygon: a lattice
// point at (x, y) is inside iff an odd number of ring crossings lie strictly
// to its right. Points that may sit on the boundary are re-tested with
// point_in_polygon to keep the closed convention.
template <typename Emit>
void scan_polygon_row(const PolygonWithHoles& poly, const BBox& pbox, const Lattice& L, long j,
                      long cols, std::vector<double>& xs, Emit&& emit) {
    const double y = L.y(j);
    if (y < pbox.ymin || y > pbox.ymax) return;
    xs.clear();
    bool vertex_row = false;
    auto ring_crossings = [&](const Ring& r) {
        const std::size_t n = r.size();
        for (std::size_t i = 0, k = n - 1; i < n; k = i++) {
            const Point a = r[k];
            const Point b = r[i];
            if (b.y == y) vertex_row = true;
            if ((a.y > y) != (b.y > y)) xs.push_back(a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y));
        }
    };
    ring_crossings(poly.outer);
    for (const Ring& h : poly.holes) ring_crossings(h);
    std::sort(xs.begin(), xs.end());

    auto col_at_or_after = [&](double x) -> long {
        // Smallest column with lattice x >= x.
        const double base = L.x(0, j);
        long i = static_cast<long>(std::ceil((x - base) / L.dx)) - 1;
        i = std::max(i, 0L);
        while (i < cols && L.x(i, j) < x) ++i;
        while (i > 0 && L.x(i - 1, j) >= x) --i;
        return i;
    };

    if (vertex_row) {
        // Horizontal edges or vertices on this row: full closed test.
        for (long i = col_at_or_after(pbox.xmin); i < cols && L.x(i, j) <= pbox.xmax; ++i)
            if (point_in_polygon({L.x(i, j), y}, poly)) emit(i);
        return;
    }
    for (std::size_t k = 0; k + 1 < xs.size(); k += 2) {
        for (long i = col_at_or_after(xs[k]); i < cols && L.x(i, j) < xs[k + 1]; ++i) emit(i);
    }
    // Lattice points numerically on an edge.
    const double tol = 1e-12 * std::max({1.0, std::abs(pbox.xmin), std::abs(pbox.xmax)});
    for (std::size_t k = 0; k < xs.size(); ++k) {
        const long c = col_at_or_after(xs[k] - tol);
        for (long i = std::max(0L, c - 1); i <= c + 1 && i < cols; ++i) {
            const double x = L.x(i, j);
            if (std::abs(x - xs[k]) > tol) continue;
            if (point_in_polygon({x, y}, poly)) emit(i);
        }
    }
}

template <typename Emit>
void for_each_center(std::span<const PolygonWithHoles> polygons, GridParams g, Emit&& emit) {
    if (!(g.cell_size > 0.0) || !std::isfinite(g.cell_size))
        throw GeometryError("grid cell size must be positive");
    BBox frame;
    std::vector<BBox> boxes;
    boxes.reserve(polygons.size());
    for (const auto& p : polygons) {
        boxes.push_back(bounding_box(p));
        frame.extend(boxes.back());
    }
    if (frame.empty()) return;
    const Lattice L = make_lattice(frame, g);
    std::vector<double> xs;
    std::vector<long> hits;
    for (long j = 0; j < L.rows; ++j) {
        const long cols = (j % 2) ? L.cols_odd : L.cols_even;
        hits.clear();
        for (std::size_t p = 0; p < polygons.size(); ++p)
            scan_polygon_row(polygons[p], boxes[p], L, j, cols, xs,
                             [&](long i) { hits.push_back(i); });
        std::sort(hits.begin(), hits.end());
        hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
        for (long i : hits) emit(Point{L.x(i, j), L.y(j)});
    }
}

}  // namespace

std::vector<Point> sample_grid(std::span<const PolygonWithHoles> polygons, GridParams grid) {
    std::vector<Point> out;
    for_each_center(polygons, grid, [&](Point p) { out.push_back(p); });
    return out;
}

std::vector<Point> sample_grid(const PolygonWithHoles& polygon, GridParams grid) {
    return sample_grid(std::span<const PolygonWithHoles>(&polygon, 1), grid);
}

std::size_t grid_count(std::span<const PolygonWithHoles> polygons, GridParams grid) {
    std::size_t n = 0;
    for_each_center(polygons, grid, [&](Point) { ++n; });
    return n;
}

GridSearchResult grid_size_search(std::span<const PolygonWithHoles> domain, GridKind kind,
                                  std::size_t n_target) {
    if (n_target == 0) throw GeometryError("grid search needs a positive target count");
    BBox box;
    for (const auto& p : domain) box.extend(bounding_box(p));
    if (box.empty() || !(box.diagonal() > 0.0)) throw GeometryError("grid search on empty domain");

    const double diag = box.diagonal();
    double lo = diag / (4.0 * static_cast<double>(n_target));
    double hi = diag;

    GridSearchResult best{{hi, kind}, 0, false};
    std::size_t best_gap = static_cast<std::size_t>(-1);
    double exact_size = -1.0;
    std::size_t exact_count = 0;

    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (!(mid > lo && mid < hi)) break;
        const std::size_t c = grid_count(domain, {mid, kind});
        const std::size_t gap = c > n_target ? c - n_target : n_target - c;
        if (gap < best_gap || (gap == best_gap && mid > best.params.cell_size)) {
            best_gap = gap;
            best = {{mid, kind}, c, false};
        }
        if (c == n_target && mid > exact_size) {
            exact_size = mid;
            exact_count = c;
        }
        // More points than wanted (or exactly enough): try coarser grids.
        if (c >= n_target)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= 1e-13 * hi) break;
    }
    if (exact_size > 0.0) return {{exact_size, kind}, exact_count, true};
    return best;
}

}  // namespace choreme
