#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "choreme/geometry.hpp"
#include "choreme/map_model.hpp"
#include "choreme/sampling.hpp"

namespace choreme {

struct WeightedPoint {
    Point position;
    double weight = 0.0;
};

/// Sample points weighted alpha (target-class component) or alpha - 1,
/// using the component tags recorded by sample_map.
std::vector<WeightedPoint> assign_weights(const Sample& sample, const RegionMap& map, ClassId target,
                                          const ClassStats& stats);

enum class EventKind { start, end };

/// A point entering (start: inside for t >= t0) or leaving (end: inside for
/// t <= t0) the disk as its center moves along the bisector.
struct SweepEvent {
    double t = 0.0;
    EventKind kind = EventKind::start;
    double weight_delta = 0.0;
};

struct PairSweepResult {
    /// Signed arclength along the bisector from the midpoint of the pair.
    double best_t = 0.0;
    double best_weight = 0.0;
};

/// Events of the sweep for pair (i, j), sorted by (t, start before end), with
/// t in arclength units. Points always inside are not listed; their weight is
/// part of `base` (which also holds w_i + w_j).
std::vector<SweepEvent> sweep_events(std::size_t i, std::size_t j, std::span<const WeightedPoint> points,
                                     double* base = nullptr);

/// Best closed disk through points i and j. Centers are
/// midpoint + t * unit normal, the normal being (q - p) rotated by +90 degrees
/// with p = points[i], q = points[j]. Among maximizing t the one closest to
/// zero is returned; if the optimum is an open interval not containing zero,
/// its midpoint (or the finite end plus one unit length, when unbounded).
PairSweepResult pair_sweep(std::size_t i, std::size_t j, std::span<const WeightedPoint> points);

struct FitResult {
    Disk disk;
    double weight = 0.0;
    /// Indices of the points defining the disk: two for a disk through a
    /// pair, one for a radius-0 disk, none for the empty disk.
    std::vector<std::size_t> support;
    bool degenerate = false;

    [[nodiscard]] bool empty() const { return support.empty(); }
};

struct FitOptions {
    /// Worker threads; 0 uses the hardware concurrency.
    unsigned threads = 0;
};

/// Smallest disk of maximum total weight. Sweeps every pair of positive
/// points with distinct positions, also tries radius-0 disks at positive
/// points, and falls back to the empty disk (weight 0) when nothing positive
/// is found. Ties: smaller radius, then lexicographically smaller center.
FitResult max_weight_smallest_disk(std::span<const WeightedPoint> points, FitOptions options = {});

/// Exhaustive reference using exact rational arithmetic for containment.
double brute_force_oracle(std::span<const WeightedPoint> points);

/// Sum of weights of points inside the closed disk, with distances compared
/// against the radius up to `rel_tol` of max(radius, |center|).
double recount_weight(std::span<const WeightedPoint> points, const Disk& disk, double rel_tol = 1e-9);
double recount_weight(std::span<const WeightedPoint> points, const FitResult& fit, double rel_tol = 1e-9);

}  // namespace choreme
