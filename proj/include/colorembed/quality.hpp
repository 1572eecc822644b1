#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "colorembed/colorspace.hpp"
#include "colorembed/regiongraph.hpp"

namespace colorembed {

/// One color per region, all in the same space, indexed like the graph.
using Coloring = std::vector<ColorPoint>;

/// Dimension of the color spaces.
inline constexpr int kDim = 3;

/// Distances below this fraction of the gamut diameter are clamped; the
/// pair then contributes its maximum energy and no gradient.
inline constexpr double kDistanceFloorFraction = 1e-9;

/// Throws UsageError if the coloring does not match the graph size or mixes spaces.
void check_coloring(std::span<const ColorPoint> chi, const RegionGraph& g, Space space);

/// Repulsive energy of a coloring; smaller is better.
///
///   q = sum_i ( sum_{j != i} d_ij^-(D+1)  +  n^(1+1/D) / diam^D * sum_{j in N_i} 1 / (d_ij |N_i|) )
///
/// The first sum spreads all colors apart, the second pushes adjacent regions
/// apart over long range. `diameter` is the gamut diameter.
double quality(std::span<const ColorPoint> chi, const RegionGraph& g, double diameter);
double quality(std::span<const ColorPoint> chi, const RegionGraph& g, const Gamut& gamut);

/// The bracketed per-region terms of `quality`, which sum to it.
std::vector<double> region_terms(std::span<const ColorPoint> chi, const RegionGraph& g, double diameter);

/// -grad q at region i (the improving direction), including both halves
/// of each symmetric pair and edge contribution.
Vec3 descent_at(std::span<const ColorPoint> chi, const RegionGraph& g, double diameter, std::size_t i);

/// -grad q for every region.
std::vector<Vec3> gradient(std::span<const ColorPoint> chi, const RegionGraph& g, double diameter);
std::vector<Vec3> gradient(std::span<const ColorPoint> chi, const RegionGraph& g, const Gamut& gamut);

/// Distance statistics used to judge a coloring by eye.
struct DistanceSummary {
  double min_adjacent = 0.0;  ///< 0 when the graph has no edges
  double mean_adjacent = 0.0;
  double min_pair = 0.0;  ///< 0 when n == 1
  double mean_pair = 0.0;
};

DistanceSummary summarize_distances(std::span<const ColorPoint> chi, const RegionGraph& g);

}  // namespace colorembed
