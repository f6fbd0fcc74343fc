#pragma once

#include <span>
#include <vector>

#include "choreme/geometry.hpp"

namespace choreme {

/// A Voronoi cell cropped to a polygonal component. Cells whose cropped area
/// is negligible (below 1e-12 of the component) collapse to their site.
struct CroppedCell {
    MultiPolygon shape;
    Point site;
    bool degenerate = false;

    [[nodiscard]] double area() const { return degenerate ? 0.0 : polygon_area(shape); }
    [[nodiscard]] Point centroid() const { return degenerate ? site : choreme::centroid(shape); }
};

/// Convex Euclidean Voronoi cells of `sites`, each clipped to `box`.
std::vector<Ring> voronoi_cells(std::span<const Point> sites, const BBox& box);

/// Voronoi diagram of `sites` intersected with `component`: cell i is the
/// part of the component closer to site i than to any other site.
/// Throws GeometryError on duplicate sites or a site outside the component.
std::vector<CroppedCell> clipped_voronoi(std::span<const Point> sites,
                                         const PolygonWithHoles& component);

}  // namespace choreme
