#include "colorembed/optimizer.hpp"

#include <future>
#include <string>

#include "colorembed/error.hpp"

namespace colorembed {

void OptimizerConfig::validate() const {
  if (!(step_init_fraction > 0.0 && step_init_fraction <= 1.0))
    throw InputError("step_init_fraction must lie in (0, 1]");
  if (!(step_min_fraction > 0.0 && step_min_fraction < step_init_fraction))
    throw InputError("step_min_fraction must lie in (0, step_init_fraction)");
  if (!(step_decay > 0.0 && step_decay < 1.0)) throw InputError("step_decay must lie in (0, 1)");
  if (max_iterations < 1) throw InputError("max_iterations must be at least 1");
}

ColorPoint sample_uniform(const Gamut& gamut, Rng& rng) {
  const Vec3& lo = gamut.box_min();
  const Vec3& hi = gamut.box_max();
  for (;;) {
    ColorPoint p(gamut.space(), {rng.uniform(lo[0], hi[0]), rng.uniform(lo[1], hi[1]), rng.uniform(lo[2], hi[2])});
    if (gamut.space() == Space::SRGB || gamut.contains(p)) return p;
  }
}

Coloring init_random(const RegionGraph& g, const Gamut& gamut, Rng& rng) {
  Coloring chi;
  chi.reserve(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) chi.push_back(sample_uniform(gamut, rng));
  return chi;
}

Coloring init_random(const RegionGraph& g, const Gamut& gamut, std::uint64_t seed) {
  Rng rng(seed);
  return init_random(g, gamut, rng);
}

Coloring random_baseline(const RegionGraph& g, const Gamut& gamut, std::uint64_t seed) {
  Rng rng(seed);
  if (gamut.space() == Space::LAB) return init_random(g, gamut, rng);
  Coloring chi;
  chi.reserve(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    Vec3 c;
    for (auto& v : c) v = static_cast<double>(rng.below(256));
    chi.emplace_back(Space::SRGB, c);
  }
  return chi;
}

IterationResult iterate(Coloring& chi, const RegionGraph& g, const Gamut& gamut, double step_fraction, Rng& rng) {
  check_coloring(chi, g, gamut.space());
  const std::size_t n = chi.size();
  const double diameter = gamut.diameter();
  const double step = step_fraction * diameter;
  IterationResult result;
  double q = quality(chi, g, diameter);

  for (std::size_t i = 0; i < n; ++i) {
    // jump
    {
      const ColorPoint old = chi[i];
      chi[i] = sample_uniform(gamut, rng);
      const double trial = quality(chi, g, diameter);
      if (trial < q) {
        q = trial;
        ++result.accepted.jump;
      } else {
        chi[i] = old;
      }
    }
    // swap
    if (n > 1) {
      std::size_t partner = static_cast<std::size_t>(rng.below(n - 1));
      if (partner >= i) ++partner;
      std::swap(chi[i], chi[partner]);
      const double trial = quality(chi, g, diameter);
      if (trial < q) {
        q = trial;
        ++result.accepted.swap;
      } else {
        std::swap(chi[i], chi[partner]);
      }
    }
    // gradient step
    {
      const Vec3 dir = descent_at(chi, g, diameter, i);
      const double len = norm(dir);
      if (len > 0.0 && std::isfinite(len)) {
        const ColorPoint old = chi[i];
        chi[i] = gamut.project(ColorPoint(gamut.space(), old.coords + (step / len) * dir));
        const double trial = quality(chi, g, diameter);
        if (trial < q) {
          q = trial;
          ++result.accepted.gradient;
        } else {
          chi[i] = old;
        }
      }
    }
  }
  result.quality = q;
  return result;
}

OptimizeResult optimize(const RegionGraph& g, const Gamut& gamut, const OptimizerConfig& config) {
  config.validate();
  if (config.space != gamut.space()) throw UsageError("optimizer config and gamut use different color spaces");
  OptimizeResult out;
  out.seed = config.seed;
  Rng rng(config.seed);
  out.coloring = init_random(g, gamut, rng);
  RunReport& report = out.report;
  report.quality_trace.push_back(quality(out.coloring, g, gamut.diameter()));

  double step = config.step_init_fraction;
  while (report.iterations_used < config.max_iterations) {
    const IterationResult it = iterate(out.coloring, g, gamut, step, rng);
    ++report.iterations_used;
    report.accepted += it.accepted;
    report.quality_trace.push_back(it.quality);
    if (it.accepted.total() == 0) {
      step *= config.step_decay;
      if (step < config.step_min_fraction) {
        report.converged = true;
        break;
      }
    }
  }
  report.final_step_fraction = step;
  report.final_quality = report.quality_trace.back();
  return out;
}

OptimizeResult optimize_multistart(const RegionGraph& g, const Gamut& gamut, const OptimizerConfig& config,
                                   std::size_t restarts) {
  if (restarts < 1) throw InputError("restarts must be at least 1");
  config.validate();
  std::vector<std::future<OptimizeResult>> runs;
  runs.reserve(restarts);
  for (std::size_t k = 0; k < restarts; ++k) {
    OptimizerConfig c = config;
    c.seed = config.seed + k;
    runs.push_back(std::async(std::launch::async, [&g, &gamut, c] { return optimize(g, gamut, c); }));
  }
  OptimizeResult best = runs.front().get();
  for (std::size_t k = 1; k < restarts; ++k) {
    OptimizeResult r = runs[k].get();
    if (r.report.final_quality < best.report.final_quality) best = std::move(r);
  }
  return best;
}

}  // namespace colorembed
