#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "choreme/geometry.hpp"
#include "choreme/map_model.hpp"

namespace choreme {

enum class Strategy { random, voronoi, grid_square, grid_hex };
enum class Scope { local, global };

std::string_view to_string(Strategy s);
std::string_view to_string(Scope s);
/// Accepts both "grid-square" and "grid_square" spellings.
Strategy parse_strategy(std::string_view s);
Scope parse_scope(std::string_view s);

struct SampleSpec {
    Strategy strategy = Strategy::voronoi;
    Scope scope = Scope::local;
    std::size_t n_target = 1000;
    std::size_t voronoi_iterations = 25;
    std::uint64_t seed = 0;
};

/// Deterministic 64-bit generator. Uniform reals are derived from the raw
/// 64-bit stream so results do not depend on the standard library's
/// distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

/// Seed for an independent sub-stream (e.g. one per component).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

struct BinAllocation {
    std::vector<std::size_t> counts;
    std::vector<double> ideals;
};

/// Largest-remainder apportionment of n points over bins proportional to
/// their areas. Remainder ties go to the larger area, then the lower index.
BinAllocation allocate_bins(std::size_t n, std::span<const double> areas, double total_area);

/// k i.i.d. uniform points over the polygon(s), drawn by area-weighted
/// triangle choice followed by a uniform point in the triangle.
std::vector<Point> sample_random(const PolygonWithHoles& polygon, std::size_t k, Rng& rng);
std::vector<Point> sample_random(const PolygonWithHoles& polygon, std::size_t k, std::uint64_t seed);
std::vector<Point> sample_random(std::span<const PolygonWithHoles> polygons, std::size_t k, Rng& rng);

/// Lloyd relaxation restricted to the component: each iteration moves every
/// point to the centroid of its Voronoi cell cropped to the component. A
/// centroid outside the (nonconvex) cropped cell is replaced by the nearest
/// point of that cell. Points never leave the component.
std::vector<Point> relax_voronoi(std::vector<Point> points, const PolygonWithHoles& component,
                                 std::size_t iterations, std::uint64_t seed = 0);

enum class GridKind { square, hex };

struct GridParams {
    double cell_size = 1.0;
    GridKind kind = GridKind::square;
};

/// Grid centers inside the polygon(s), aligned with the bottom-left corner of
/// `frame` (the bounding box of what is sampled). Square: centers at
/// (xmin + (i + 1/2) s, ymin + (j + 1/2) s). Hex (pointy-top hexagons of side
/// s): centers at (xmin + sqrt(3) s (i + (j mod 2) / 2), ymin + 3 s j / 2).
std::vector<Point> sample_grid(const PolygonWithHoles& polygon, GridParams grid);
std::vector<Point> sample_grid(std::span<const PolygonWithHoles> polygons, GridParams grid);

/// Number of grid centers sample_grid would return.
std::size_t grid_count(std::span<const PolygonWithHoles> polygons, GridParams grid);

struct GridSearchResult {
    GridParams params;
    std::size_t count = 0;
    bool exact = false;
};

/// Binary search on the cell size over [diag / (4 n), diag] (at most 200
/// steps) for a grid producing exactly n_target centers. Returns the largest
/// exact size found, else the size whose count came closest.
GridSearchResult grid_size_search(std::span<const PolygonWithHoles> domain, GridKind kind,
                                  std::size_t n_target);

struct Sample {
    std::vector<Point> points;
    /// Index into components(map) of the component holding each point.
    std::vector<std::size_t> origin_component;
    std::size_t n_requested = 0;
    /// False when a grid search could not hit its target count exactly.
    bool exact = true;
};

/// Samples the map with the given strategy, either per component with an
/// area-proportional budget (local) or over the union of all regions
/// (global).
Sample sample_map(const RegionMap& map, const SampleSpec& spec, unsigned threads = 0);

}  // namespace choreme
