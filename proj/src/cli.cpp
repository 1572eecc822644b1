#include "colorembed/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "colorembed/colorspace.hpp"
#include "colorembed/error.hpp"
#include "colorembed/io.hpp"
#include "colorembed/optimizer.hpp"
#include "colorembed/quality.hpp"
#include "colorembed/regiongraph.hpp"

namespace colorembed {

namespace {

struct InputOptions {
  std::string graph_path;
  std::string grid_path;
  bool diagonal = false;
};

struct OutputOptions {
  std::string out_path;
  std::string svg_path;
  int cell_px = 20;
  bool stroke = false;
};

struct LoadedInput {
  RegionGraph graph;
  std::optional<GridPartition> grid;
};

void add_input_options(CLI::App& cmd, InputOptions& in) {
  cmd.add_option("--graph", in.graph_path, "Edge-list file (JSON object with n and edges)");
  cmd.add_option("--grid", in.grid_path, "Grid partition file (comma-separated labels per line)");
  cmd.add_flag("--diag", in.diagonal, "Treat corner-touching grid cells as adjacent");
}

void add_output_options(CLI::App& cmd, OutputOptions& out) {
  cmd.add_option("--out", out.out_path, "Palette file to write (default: standard output)");
  cmd.add_option("--svg", out.svg_path, "SVG rendering of the colored grid (requires --grid)");
  cmd.add_option("--cell-px", out.cell_px, "SVG cell size in pixels")->check(CLI::PositiveNumber);
  cmd.add_flag("--stroke", out.stroke, "Draw thin black cell borders in the SVG");
}

LoadedInput load_input(const InputOptions& in) {
  const bool has_graph = !in.graph_path.empty();
  const bool has_grid = !in.grid_path.empty();
  if (has_graph == has_grid) throw UsageError("exactly one of --graph or --grid is required");
  if (has_graph) {
    if (in.diagonal) throw UsageError("--diag applies only to --grid input");
    return {parse_edge_list(read_file(in.graph_path)), std::nullopt};
  }
  GridPartition grid = parse_grid(read_file(in.grid_path));
  RegionGraph g = RegionGraph::from_grid(grid, in.diagonal);
  return {std::move(g), std::move(grid)};
}

void check_outputs(const OutputOptions& out, const LoadedInput& input) {
  if (!out.svg_path.empty() && !input.grid) throw UsageError("--svg requires --grid input");
}

void emit(const PaletteDocument& doc, const LoadedInput& input, const OutputOptions& opts, std::ostream& out) {
  const std::string text = serialize_palette(doc);
  if (opts.out_path.empty())
    out << text;
  else
    write_file(opts.out_path, text);
  if (!opts.svg_path.empty())
    write_file(opts.svg_path, render_svg(input.graph, input.grid->rows(), input.grid->cols(), doc, opts.cell_px, opts.stroke));
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string general(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Assigns well-separated colors to the regions of a map or graph", "colorembed"};
  app.require_subcommand(1);

  InputOptions opt_in, rnd_in, rep_in;
  OutputOptions opt_out, rnd_out;
  OptimizerConfig config;
  std::string opt_space = "lab", rnd_space = "lab";
  std::size_t restarts = 1;
  std::uint64_t rnd_seed = 0;

  auto* optimize_cmd = app.add_subcommand("optimize", "Optimize a coloring by randomized hill climbing");
  add_input_options(*optimize_cmd, opt_in);
  add_output_options(*optimize_cmd, opt_out);
  optimize_cmd->add_option("--space", opt_space, "Color space: srgb or lab");
  optimize_cmd->add_option("--seed", config.seed, "Random seed");
  optimize_cmd->add_option("--step-init", config.step_init_fraction, "Initial step as a fraction of the gamut diameter");
  optimize_cmd->add_option("--step-decay", config.step_decay, "Step multiplier after a sweep with no improvement");
  optimize_cmd->add_option("--step-min", config.step_min_fraction, "Stop once the step falls below this fraction");
  optimize_cmd->add_option("--max-iters", config.max_iterations, "Maximum number of sweeps");
  optimize_cmd->add_option("--restarts", restarts, "Independent seeded runs; the best is kept")->check(CLI::PositiveNumber);

  auto* random_cmd = app.add_subcommand("random", "Random baseline coloring");
  add_input_options(*random_cmd, rnd_in);
  add_output_options(*random_cmd, rnd_out);
  random_cmd->add_option("--space", rnd_space, "Color space: srgb or lab");
  random_cmd->add_option("--seed", rnd_seed, "Random seed");

  std::string from, to;
  std::vector<double> coords;
  auto* convert_cmd = app.add_subcommand("convert", "Convert one color between sRGB and Lab");
  convert_cmd->add_option("--from", from, "Source space: srgb or lab")->required();
  convert_cmd->add_option("--to", to, "Target space: srgb or lab")->required();
  convert_cmd->add_option("coords", coords, "Three coordinates")->expected(3)->required();

  std::string palette_path;
  auto* report_cmd = app.add_subcommand("report", "Distance statistics and quality of a palette");
  add_input_options(*report_cmd, rep_in);
  report_cmd->add_option("--palette", palette_path, "Palette file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (optimize_cmd->parsed()) {
      config.space = parse_space(opt_space);
      config.validate();
      const LoadedInput input = load_input(opt_in);
      check_outputs(opt_out, input);
      const Gamut gamut = make_gamut(config.space);
      const OptimizeResult result = optimize_multistart(input.graph, gamut, config, restarts);
      emit(PaletteDocument::from_coloring(result.coloring, input.graph, result.report.final_quality, result.seed), input,
           opt_out, out);
      if (!opt_out.out_path.empty())
        out << "quality " << general(result.report.final_quality) << " seed " << result.seed << " iterations "
            << result.report.iterations_used << "\n";
    } else if (random_cmd->parsed()) {
      const Space space = parse_space(rnd_space);
      const LoadedInput input = load_input(rnd_in);
      check_outputs(rnd_out, input);
      const Gamut gamut = make_gamut(space);
      const Coloring chi = random_baseline(input.graph, gamut, rnd_seed);
      emit(PaletteDocument::from_coloring(chi, input.graph, quality(chi, input.graph, gamut), rnd_seed), input, rnd_out,
           out);
    } else if (convert_cmd->parsed()) {
      const Space src = parse_space(from);
      const Space dst = parse_space(to);
      ColorPoint p(src, {coords[0], coords[1], coords[2]});
      if (src == Space::SRGB && dst == Space::LAB) p = srgb_to_lab(p);
      if (src == Space::LAB && dst == Space::SRGB) p = lab_to_srgb(p);
      if (src == Space::SRGB && dst == Space::SRGB) srgb_to_lab(p);  // range check only
      out << fixed(p.coords[0], 4) << ' ' << fixed(p.coords[1], 4) << ' ' << fixed(p.coords[2], 4) << "\n";
    } else if (report_cmd->parsed()) {
      const PaletteDocument doc = parse_palette(read_file(palette_path));
      const LoadedInput input = load_input(rep_in);
      if (doc.colors.size() != input.graph.size())
        throw InputError("palette has " + std::to_string(doc.colors.size()) + " colors but the graph has " +
                         std::to_string(input.graph.size()) + " regions");
      const Gamut gamut = make_gamut(doc.space);
      const Coloring chi = doc.coloring();
      const DistanceSummary s = summarize_distances(chi, input.graph);
      out << "regions " << input.graph.size() << "\n"
          << "edges " << input.graph.edge_count() << "\n"
          << "min_adjacent_distance " << fixed(s.min_adjacent, 6) << "\n"
          << "mean_adjacent_distance " << fixed(s.mean_adjacent, 6) << "\n"
          << "min_pair_distance " << fixed(s.min_pair, 6) << "\n"
          << "mean_pair_distance " << fixed(s.mean_pair, 6) << "\n"
          << "quality " << general(quality(chi, input.graph, gamut)) << "\n";
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace colorembed
