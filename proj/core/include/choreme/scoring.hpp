#pragma once

#include "choreme/geometry.hpp"
#include "choreme/map_model.hpp"

namespace choreme {

struct ScoreReport {
    double raw_score = 0.0;
    /// NaN when alpha leaves a normalization denominator at zero.
    double normalized = 0.0;
    double covered_target = 0.0;
    double covered_other = 0.0;
    double alpha = 0.5;
};

/// Exact score alpha |S_t & D| - (1 - alpha) |S_o & D| of a disk. Area of the
/// disk outside every region is ignored.
ScoreReport disk_score(const RegionMap& map, const Disk& disk, ClassId target, const ClassStats& stats);

/// Sum over regions of delta(disk_value, region class) * |region & D|.
double disk_score(const RegionMap& map, const Disk& disk, ClassId disk_value, const ClassDistance& delta);

/// Maps raw scores into [-1, 1]: positive scores relative to alpha |S_t|,
/// negative ones relative to (1 - alpha) |S_o|.
double normalize_score(double raw, const ClassStats& stats);

/// |S_t| - |S_t & D| + |D'| - |S_t & D|, with D' the part of D over regions.
double symmetric_difference(const RegionMap& map, const Disk& disk, ClassId target);

double relative_quality(double score, double best_score);

}  // namespace choreme
