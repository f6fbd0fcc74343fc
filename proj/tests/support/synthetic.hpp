#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "choreme/geometry.hpp"
#include "choreme/map_model.hpp"

namespace choreme::testing {

enum class Pattern { planted_disk, two_blobs, band, annulus, gradient, noise };

std::string to_string(Pattern p);

struct SynthOptions {
    Pattern pattern = Pattern::planted_disk;
    int nx = 14, ny = 10;
    double width = 1.4, height = 1.0;
    /// Vertex jitter as a fraction of the cell size (kept below 0.3).
    double jitter = 0.25;
    /// Average number of cells merged into one region.
    int region_cells = 3;
    /// Fraction of cells left out of every region (gaps, islands).
    double drop = 0.0;
    /// Amplitude of the value noise added to the pattern.
    double noise = 0.15;
    std::uint64_t seed = 1;
};

struct SynthMap {
    std::vector<Region> regions;
    /// Numeric attribute per region; classes come from classify_two.
    std::vector<double> values;
    RegionMap map;
};

/// Jittered-lattice cells grouped into connected regions (possibly
/// nonconvex, with holes, or with gaps between them), valued by a spatial
/// pattern plus noise.
SynthMap synth_map(const SynthOptions& options);

/// The corpus used for strategy comparisons: one map per pattern, some with
/// gaps and multi-cell regions.
std::vector<SynthMap> synth_corpus(std::uint64_t seed = 7);

/// Unit square split into a regular 64-gon (class 1) and the rest (class 2).
RegionMap planted_disk_map(Point center = {0.35, 0.6}, double radius = 0.2, int sides = 64);

/// Regular polygon with `sides` vertices on a circle.
Ring regular_polygon(Point center, double radius, int sides, double phase = 0.0);

/// GeoJSON FeatureCollection with "class" and "value" properties.
std::string to_geojson(const RegionMap& map, const std::vector<double>& values = {});

// Nonconvex test components.
PolygonWithHoles l_shape(double scale = 1.0);
PolygonWithHoles c_shape(double scale = 1.0);
/// Random star-shaped polygon around `center`; optionally with a star hole.
PolygonWithHoles random_star(std::uint64_t seed, Point center, double radius, int vertices, bool hole);

}  // namespace choreme::testing
