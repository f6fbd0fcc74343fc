#include "choreme/scoring.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace choreme {

namespace {

// Covered area per class, summed in region order.
std::array<double, 2> covered_by_class(const RegionMap& map, const Disk& disk) {
    std::array<double, 2> cov{0.0, 0.0};
    for (const Region& r : map.regions()) cov[to_int(r.class_id) - 1] += disk_polygon_area(disk, r.shape);
    return cov;
}

}  // namespace

ScoreReport disk_score(const RegionMap& map, const Disk& disk, ClassId target, const ClassStats& stats) {
    const auto cov = covered_by_class(map, disk);
    ScoreReport rep;
    rep.alpha = stats.alpha;
    rep.covered_target = cov[to_int(target) - 1];
    rep.covered_other = cov[to_int(other(target)) - 1];
    rep.raw_score = stats.alpha * rep.covered_target - (1.0 - stats.alpha) * rep.covered_other;
    if (stats.alpha * stats.target_area() > 0.0 && (1.0 - stats.alpha) * stats.other_area() > 0.0)
        rep.normalized = normalize_score(rep.raw_score, stats);
    else
        rep.normalized = std::numeric_limits<double>::quiet_NaN();
    return rep;
}

double disk_score(const RegionMap& map, const Disk& disk, ClassId disk_value, const ClassDistance& delta) {
    const auto cov = covered_by_class(map, disk);
    return delta(disk_value, ClassId::first) * cov[0] + delta(disk_value, ClassId::second) * cov[1];
}

double normalize_score(double raw, const ClassStats& stats) {
    const double top = stats.alpha * stats.target_area();
    const double bottom = (1.0 - stats.alpha) * stats.other_area();
    if (!(top > 0.0) || !(bottom > 0.0)) throw std::invalid_argument("degenerate normalization denominators");
    return raw >= 0.0 ? raw / top : raw / bottom;
}

double symmetric_difference(const RegionMap& map, const Disk& disk, ClassId target) {
    const auto cov = covered_by_class(map, disk);
    const double inter = cov[to_int(target) - 1];
    return map.class_area(target) - inter + (cov[0] + cov[1]) - inter;
}

double relative_quality(double score, double best_score) {
    if (!(best_score > 0.0)) throw std::invalid_argument("relative quality needs a positive best score");
    return score / best_score;
}

}  // namespace choreme
