#include "colorembed/io.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "colorembed/error.hpp"

namespace colorembed {

using nlohmann::json;

namespace {

const json& field(const json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw InputError(std::string("missing field '") + key + "'");
  return *it;
}

json parse_object(const std::string& text, const char* what) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
  if (!doc.is_object()) throw InputError(std::string(what) + ": expected a JSON object");
  return doc;
}

std::size_t as_index(const json& v, const char* what) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
    throw InputError(std::string(what) + " must be a non-negative integer");
  return v.get<std::size_t>();
}

bool valid_hex(const std::string& s) {
  static const std::regex pattern("#[0-9A-F]{6}");
  return std::regex_match(s, pattern);
}

}  // namespace

PaletteDocument PaletteDocument::from_coloring(const Coloring& chi, const RegionGraph& g, double quality,
                                               std::uint64_t seed) {
  if (chi.empty()) throw UsageError("empty coloring");
  check_coloring(chi, g, chi.front().space);
  PaletteDocument doc;
  doc.space = chi.front().space;
  doc.quality = quality;
  doc.seed = seed;
  for (std::size_t i = 0; i < chi.size(); ++i) {
    PaletteEntry e;
    e.region = i;
    if (!g.region_ids().empty()) e.original_label = g.region_ids()[i];
    e.coords = chi[i].coords;
    e.srgb_hex = to_hex(doc.space == Space::SRGB ? chi[i] : lab_to_srgb(chi[i]));
    doc.colors.push_back(std::move(e));
  }
  return doc;
}

Coloring PaletteDocument::coloring() const {
  Coloring chi;
  chi.reserve(colors.size());
  for (const auto& e : colors) chi.emplace_back(space, e.coords);
  return chi;
}

std::string serialize_palette(const PaletteDocument& doc) {
  json colors = json::array();
  for (const auto& e : doc.colors) {
    json entry;
    entry["region"] = e.region;
    if (e.original_label) entry["original_label"] = *e.original_label;
    entry["coords"] = {e.coords[0], e.coords[1], e.coords[2]};
    entry["srgb_hex"] = e.srgb_hex;
    colors.push_back(std::move(entry));
  }
  json out;
  out["space"] = std::string(to_string(doc.space));
  out["quality"] = doc.quality;
  out["seed"] = doc.seed;
  out["colors"] = std::move(colors);
  return out.dump(2) + "\n";
}

PaletteDocument parse_palette(const std::string& text) {
  const json doc = parse_object(text, "palette");
  PaletteDocument p;
  try {
    const auto& space = field(doc, "space");
    if (!space.is_string()) throw InputError("'space' must be a string");
    p.space = parse_space(space.get<std::string>());
    const auto& q = field(doc, "quality");
    if (!q.is_number()) throw InputError("'quality' must be a number");
    p.quality = q.get<double>();
    const auto& seed = field(doc, "seed");
    if (!seed.is_number_unsigned()) throw InputError("'seed' must be a non-negative integer");
    p.seed = seed.get<std::uint64_t>();
    const auto& colors = field(doc, "colors");
    if (!colors.is_array() || colors.empty()) throw InputError("'colors' must be a non-empty array");
    for (const auto& c : colors) {
      if (!c.is_object()) throw InputError("palette colors must be objects");
      PaletteEntry e;
      e.region = as_index(field(c, "region"), "'region'");
      if (e.region != p.colors.size()) throw InputError("palette regions must be listed as 0, 1, 2, ...");
      if (auto it = c.find("original_label"); it != c.end() && !it->is_null()) {
        if (!it->is_number_integer()) throw InputError("'original_label' must be an integer");
        e.original_label = it->get<std::int64_t>();
      }
      const auto& coords = field(c, "coords");
      if (!coords.is_array() || coords.size() != 3) throw InputError("'coords' must hold 3 numbers");
      for (int k = 0; k < 3; ++k) {
        if (!coords[k].is_number()) throw InputError("'coords' must hold 3 numbers");
        e.coords[k] = coords[k].get<double>();
      }
      const auto& hex = field(c, "srgb_hex");
      if (!hex.is_string() || !valid_hex(hex.get<std::string>())) throw InputError("'srgb_hex' must look like #RRGGBB");
      e.srgb_hex = hex.get<std::string>();
      p.colors.push_back(std::move(e));
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("palette: ") + e.what());
  }
  return p;
}

RegionGraph parse_edge_list(const std::string& text) {
  const json doc = parse_object(text, "edge list");
  const std::size_t n = as_index(field(doc, "n"), "'n'");
  const auto& edges = field(doc, "edges");
  if (!edges.is_array()) throw InputError("'edges' must be an array");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 2) throw InputError("each edge must be a 2-element array");
    pairs.emplace_back(as_index(e[0], "edge endpoint"), as_index(e[1], "edge endpoint"));
  }
  return RegionGraph::from_edge_list(n, pairs);
}

std::string serialize_edge_list(const RegionGraph& g) {
  json edges = json::array();
  for (auto [i, j] : g.edges()) edges.push_back({i, j});
  json out;
  out["n"] = g.size();
  out["edges"] = std::move(edges);
  return out.dump() + "\n";
}

GridPartition parse_grid(const std::string& text) {
  std::vector<std::vector<std::int64_t>> rows;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::vector<std::int64_t> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      std::size_t used = 0;
      std::int64_t v = 0;
      try {
        v = std::stoll(cell, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || cell.find_first_not_of(" \t", used) != std::string::npos)
        throw InputError("grid line " + std::to_string(line_no) + ": '" + cell + "' is not an integer label");
      row.push_back(v);
    }
    if (!line.empty() && line.back() == ',')
      throw InputError("grid line " + std::to_string(line_no) + ": trailing comma");
    rows.push_back(std::move(row));
  }
  return GridPartition(rows);
}

std::string render_svg(const RegionGraph& grid_graph, std::size_t rows, std::size_t cols,
                       const PaletteDocument& palette, int cell_px, bool stroke) {
  if (cell_px <= 0) throw InputError("cell size must be positive");
  const auto& cells = grid_graph.cell_regions();
  if (cells.size() != rows * cols) throw UsageError("SVG rendering needs the grid the graph was built from");
  if (palette.colors.size() != grid_graph.size()) throw InputError("palette size does not match the region graph");
  std::ostringstream out;
  const std::size_t width = cols * static_cast<std::size_t>(cell_px);
  const std::size_t height = rows * static_cast<std::size_t>(cell_px);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\" shape-rendering=\"crispEdges\">\n";
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      out << "<rect x=\"" << c * cell_px << "\" y=\"" << r * cell_px << "\" width=\"" << cell_px << "\" height=\""
          << cell_px << "\" fill=\"" << palette.colors[cells[r * cols + c]].srgb_hex << '"';
      if (stroke) out << " stroke=\"#000000\" stroke-width=\"0.5\"";
      out << "/>\n";
    }
  out << "</svg>\n";
  return out.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << contents;
  if (!out.flush()) throw Error("failed writing '" + path.string() + "'");
}

}  // namespace colorembed
