#pragma once

#include <optional>
#include <span>
#include <string>

#include "choreme/disk_fit.hpp"
#include "choreme/map_model.hpp"

namespace choreme {

/// Layered SVG: regions filled by class, optional weighted sample markers
/// (dots for positive weight, crosses otherwise) and the disk outline. An
/// absent disk is replaced by a comment. The y axis points up in map space.
std::string render_svg(const RegionMap& map, const std::optional<Disk>& disk,
                       std::span<const WeightedPoint> markers = {});

}  // namespace choreme
