#include "colorembed/quality.hpp"

#include <algorithm>
#include <cmath>

#include "colorembed/error.hpp"

namespace colorembed {

namespace {

double adjacency_weight(std::size_t n, double diameter) {
  return std::pow(static_cast<double>(n), 1.0 + 1.0 / kDim) / std::pow(diameter, kDim);
}

double inv_pow4(double d) {
  const double d2 = d * d;
  return 1.0 / (d2 * d2);
}

}  // namespace

void check_coloring(std::span<const ColorPoint> chi, const RegionGraph& g, Space space) {
  if (chi.size() != g.size()) throw UsageError("coloring size does not match the region graph");
  for (const auto& p : chi)
    if (p.space != space) throw UsageError("coloring mixes color spaces");
}

std::vector<double> region_terms(std::span<const ColorPoint> chi, const RegionGraph& g, double diameter) {
  if (chi.size() != g.size()) throw UsageError("coloring size does not match the region graph");
  const std::size_t n = chi.size();
  const double floor = kDistanceFloorFraction * diameter;
  const double weight = adjacency_weight(n, diameter);
  std::vector<double> terms(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double spread = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) spread += inv_pow4(std::max(distance(chi[i], chi[j]), floor));
    double adjacent = 0.0;
    const auto& nb = g.neighbors(i);
    for (auto j : nb) adjacent += 1.0 / std::max(distance(chi[i], chi[j]), floor);
    if (!nb.empty()) adjacent /= static_cast<double>(nb.size());
    terms[i] = spread + weight * adjacent;
  }
  return terms;
}

double quality(std::span<const ColorPoint> chi, const RegionGraph& g, double diameter) {
  double q = 0.0;
  for (double t : region_terms(chi, g, diameter)) q += t;
  return q;
}

double quality(std::span<const ColorPoint> chi, const RegionGraph& g, const Gamut& gamut) {
  check_coloring(chi, g, gamut.space());
  return quality(chi, g, gamut.diameter());
}

Vec3 descent_at(std::span<const ColorPoint> chi, const RegionGraph& g, double diameter, std::size_t i) {
  const std::size_t n = chi.size();
  const double floor = kDistanceFloorFraction * diameter;
  const double weight = adjacency_weight(n, diameter);
  const double own_degree = static_cast<double>(g.neighbors(i).size());
  Vec3 sum{0.0, 0.0, 0.0};
  for (std::size_t j = 0; j < n; ++j) {
    if (j == i) continue;
    const Vec3 away = chi[i].coords - chi[j].coords;
    const double d = norm(away);
    if (d < floor) continue;
    // d/dd of 2 d^-(D+1), the pair sits in both regions' spread sums
    double scale = 2.0 * (kDim + 1) * inv_pow4(d) / d;
    if (g.adjacent(i, j)) {
      const double other_degree = static_cast<double>(g.neighbors(j).size());
      scale += weight * (1.0 / own_degree + 1.0 / other_degree) / (d * d);
    }
    sum = sum + (scale / d) * away;
  }
  return sum;
}

std::vector<Vec3> gradient(std::span<const ColorPoint> chi, const RegionGraph& g, double diameter) {
  if (chi.size() != g.size()) throw UsageError("coloring size does not match the region graph");
  std::vector<Vec3> out(chi.size());
  for (std::size_t i = 0; i < chi.size(); ++i) out[i] = descent_at(chi, g, diameter, i);
  return out;
}

std::vector<Vec3> gradient(std::span<const ColorPoint> chi, const RegionGraph& g, const Gamut& gamut) {
  check_coloring(chi, g, gamut.space());
  return gradient(chi, g, gamut.diameter());
}

DistanceSummary summarize_distances(std::span<const ColorPoint> chi, const RegionGraph& g) {
  if (chi.size() != g.size()) throw UsageError("coloring size does not match the region graph");
  DistanceSummary s;
  std::size_t adjacent = 0, pairs = 0;
  for (std::size_t i = 0; i < chi.size(); ++i)
    for (std::size_t j = i + 1; j < chi.size(); ++j) {
      const double d = distance(chi[i], chi[j]);
      s.min_pair = pairs == 0 ? d : std::min(s.min_pair, d);
      s.mean_pair += d;
      ++pairs;
      if (g.adjacent(i, j)) {
        s.min_adjacent = adjacent == 0 ? d : std::min(s.min_adjacent, d);
        s.mean_adjacent += d;
        ++adjacent;
      }
    }
  if (pairs > 0) s.mean_pair /= static_cast<double>(pairs);
  if (adjacent > 0) s.mean_adjacent /= static_cast<double>(adjacent);
  return s;
}

}  // namespace colorembed
