#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "choreme/geometry.hpp"

namespace choreme {

/// Raised for malformed maps and invalid class assignments.
class MapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One of the two classes of a classed region map.
enum class ClassId : std::uint8_t { first = 1, second = 2 };

constexpr int to_int(ClassId c) { return static_cast<int>(c); }
constexpr ClassId other(ClassId c) { return c == ClassId::first ? ClassId::second : ClassId::first; }

/// Parses 1 or 2; throws MapError otherwise.
ClassId class_from_int(long long value);

struct Region {
    MultiPolygon shape;
    ClassId class_id = ClassId::first;
};

/// Interior-disjoint classed regions in planar map coordinates.
class RegionMap {
public:
    /// Validates the regions (simple rings, holes inside their outer ring,
    /// no interior overlaps beyond a relative tolerance of 1e-9) and
    /// normalizes ring orientation.
    static RegionMap create(std::vector<Region> regions, std::string crs_note = {});

    [[nodiscard]] const std::vector<Region>& regions() const { return regions_; }
    [[nodiscard]] const std::string& crs_note() const { return crs_note_; }
    [[nodiscard]] double total_area() const { return area_[0] + area_[1]; }
    [[nodiscard]] double class_area(ClassId c) const { return area_[to_int(c) - 1]; }
    [[nodiscard]] const BBox& bbox() const { return bbox_; }

private:
    RegionMap() = default;

    std::vector<Region> regions_;
    std::string crs_note_;
    double area_[2] = {0.0, 0.0};
    BBox bbox_;
};

/// Where region classes come from when loading a map.
struct ClassSource {
    enum class Kind { class_field, value_field };
    Kind kind = Kind::class_field;
    std::string field;

    static ClassSource by_class(std::string f) { return {Kind::class_field, std::move(f)}; }
    static ClassSource by_value(std::string f) { return {Kind::value_field, std::move(f)}; }
};

/// Reads a GeoJSON FeatureCollection of Polygon / MultiPolygon features.
RegionMap load_map(std::string_view geojson, const ClassSource& source);
RegionMap load_map_file(const std::string& path, const ClassSource& source);

/// Two-class natural breaks: the sorted split minimizing the summed
/// within-class squared deviation. Lower values map to the first class.
std::vector<ClassId> classify_two(std::span<const double> values);

/// Either derive alpha from class areas or use a fixed value in [0, 1].
struct AlphaMode {
    std::optional<double> fixed;

    static AlphaMode automatic() { return {}; }
    static AlphaMode fixed_value(double a) { return {a}; }
};

struct ClassStats {
    ClassId target = ClassId::first;
    double area_class1 = 0.0;
    double area_class2 = 0.0;
    double alpha = 0.5;

    [[nodiscard]] double target_area() const {
        return target == ClassId::first ? area_class1 : area_class2;
    }
    [[nodiscard]] double other_area() const {
        return target == ClassId::first ? area_class2 : area_class1;
    }
};

/// Automatic mode sets alpha = |S_other| / (|S_target| + |S_other|).
ClassStats class_stats(const RegionMap& map, ClassId target, AlphaMode mode);

/// Similarity table between a disk value and a region value, used as a
/// symmetric lookup: (a, b) falls back to (b, a) when absent.
class ClassDistance {
public:
    void set(ClassId a, ClassId b, double value) { table_[{a, b}] = value; }
    [[nodiscard]] double operator()(ClassId a, ClassId b) const;

    /// The two-class weighting: alpha on a match, alpha - 1 otherwise.
    static ClassDistance two_class(double alpha);

private:
    std::map<std::pair<ClassId, ClassId>, double> table_;
};

/// A connected piece of a region.
struct Component {
    PolygonWithHoles shape;
    ClassId class_id = ClassId::first;
    std::size_t region = 0;
};

/// Connected components of every region, in region order then part order.
std::vector<Component> components(const RegionMap& map);

}  // namespace choreme
