#pragma once

// On-disk formats.
//
// Edge-list and palette files are single JSON objects (UTF-8):
//
//   edge list:  {"n": 3, "edges": [[0, 1], [1, 2]]}
//   palette:    {"space": "lab", "quality": 0.0123, "seed": 7,
//                "colors": [{"region": 0, "original_label": 12,
//                            "coords": [53.2, 80.1, 67.2], "srgb_hex": "#FF0000"}, ...]}
//
// `original_label` is present only for palettes built from a grid. Grid files
// hold comma-separated non-negative integer labels, one grid row per line.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "colorembed/colorspace.hpp"
#include "colorembed/quality.hpp"
#include "colorembed/regiongraph.hpp"

namespace colorembed {

struct PaletteEntry {
  std::size_t region = 0;
  std::optional<std::int64_t> original_label;
  Vec3 coords{};
  std::string srgb_hex;

  friend bool operator==(const PaletteEntry&, const PaletteEntry&) = default;
};

struct PaletteDocument {
  Space space = Space::LAB;
  double quality = 0.0;
  std::uint64_t seed = 0;
  std::vector<PaletteEntry> colors;

  /// Builds the document for a coloring, deriving hex strings (through
  /// lab_to_srgb for Lab colorings) and labels from the graph.
  static PaletteDocument from_coloring(const Coloring& chi, const RegionGraph& g, double quality, std::uint64_t seed);
  Coloring coloring() const;

  friend bool operator==(const PaletteDocument&, const PaletteDocument&) = default;
};

std::string serialize_palette(const PaletteDocument& doc);
/// Throws InputError on malformed text.
PaletteDocument parse_palette(const std::string& text);

RegionGraph parse_edge_list(const std::string& text);
std::string serialize_edge_list(const RegionGraph& g);
GridPartition parse_grid(const std::string& text);

/// SVG 1.1 with one square per grid cell filled with its region's color.
std::string render_svg(const RegionGraph& grid_graph, std::size_t rows, std::size_t cols,
                       const PaletteDocument& palette, int cell_px, bool stroke);

/// Throws InputError when the file cannot be read.
std::string read_file(const std::filesystem::path& path);
/// Throws Error when the file cannot be written.
void write_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace colorembed
