#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "colorembed/colorspace.hpp"
#include "colorembed/quality.hpp"
#include "colorembed/random.hpp"
#include "colorembed/regiongraph.hpp"

namespace colorembed {

/// Hill-climbing schedule. Step lengths are fractions of the gamut diameter.
struct OptimizerConfig {
  std::uint64_t seed = 0;
  double step_init_fraction = 0.1;
  double step_decay = 0.5;
  double step_min_fraction = 1e-4;
  std::size_t max_iterations = 10000;
  Space space = Space::LAB;

  /// Throws InputError unless 0 < step_min < step_init <= 1, 0 < decay < 1
  /// and max_iterations >= 1.
  void validate() const;
};

struct MoveCounts {
  std::size_t jump = 0;
  std::size_t swap = 0;
  std::size_t gradient = 0;

  std::size_t total() const { return jump + swap + gradient; }
  MoveCounts& operator+=(const MoveCounts& o) {
    jump += o.jump;
    swap += o.swap;
    gradient += o.gradient;
    return *this;
  }
  friend bool operator==(const MoveCounts&, const MoveCounts&) = default;
};

struct RunReport {
  double final_quality = 0.0;
  std::size_t iterations_used = 0;
  MoveCounts accepted;
  /// Quality of the initial coloring followed by the quality after each iteration.
  std::vector<double> quality_trace;
  double final_step_fraction = 0.0;
  /// True when the run stopped because the step fell below the threshold
  /// rather than by exhausting max_iterations.
  bool converged = false;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

/// A point drawn uniformly from the gamut: per-channel for the sRGB cube,
/// rejection sampling from the bounding box for the Lab hull.
ColorPoint sample_uniform(const Gamut& gamut, Rng& rng);

Coloring init_random(const RegionGraph& g, const Gamut& gamut, Rng& rng);
Coloring init_random(const RegionGraph& g, const Gamut& gamut, std::uint64_t seed);

/// Random coloring used as a comparison baseline: integer sRGB channels
/// (one of the 2^24 displayable values) or uniform points of the Lab hull.
Coloring random_baseline(const RegionGraph& g, const Gamut& gamut, std::uint64_t seed);

struct IterationResult {
  MoveCounts accepted;
  double quality = 0.0;
};

/// One sweep over the regions in index order. Each region in turn proposes a
/// jump to a fresh random color, a swap with one random other region, and a
/// step of `step_fraction * diameter` along its descent direction (projected
/// back into the gamut). A proposal is kept only if it strictly lowers q.
/// `chi` must be in-gamut and is updated in place.
IterationResult iterate(Coloring& chi, const RegionGraph& g, const Gamut& gamut, double step_fraction, Rng& rng);

struct OptimizeResult {
  Coloring coloring;
  RunReport report;
  std::uint64_t seed = 0;
};

/// Random start followed by `iterate` until max_iterations or until the step,
/// shrunk after every sweep with no accepted move, drops below step_min.
/// Throws UsageError if config.space differs from the gamut's space.
OptimizeResult optimize(const RegionGraph& g, const Gamut& gamut, const OptimizerConfig& config);

/// Runs seeds config.seed, config.seed + 1, ... concurrently and keeps the
/// lowest final quality, ties going to the lower seed.
OptimizeResult optimize_multistart(const RegionGraph& g, const Gamut& gamut, const OptimizerConfig& config,
                                   std::size_t restarts);

}  // namespace colorembed
