#include <doctest.h>

#include <filesystem>
#include <regex>
#include <set>
#include <sstream>

#include "colorembed/cli.hpp"
#include "colorembed/error.hpp"
#include "colorembed/io.hpp"
#include "colorembed/optimizer.hpp"

using namespace colorembed;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("colorembed_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string tmp(const std::string& name) { return (scratch() / name).string(); }

const std::string kGrid = DATA_DIR "/demo_grid.csv";
const std::string kGraph = FIXTURE_DIR "/triangulation18.json";

}  // namespace

TEST_CASE("palette round trip") {
  Rng rng(3);
  const auto grid = RegionGraph::from_grid(GridPartition({{5, 5, 9}, {2, 9, 9}}));
  const auto plain = RegionGraph::from_edge_list(7, {{0, 1}, {2, 6}});
  for (Space space : {Space::SRGB, Space::LAB})
    for (const RegionGraph* g : {&grid, &plain})
      for (int trial = 0; trial < 10; ++trial) {
        const Gamut gamut = make_gamut(space);
        const Coloring chi = init_random(*g, gamut, rng);
        const auto doc = PaletteDocument::from_coloring(chi, *g, quality(chi, *g, gamut), rng.below(UINT64_MAX));
        const auto back = parse_palette(serialize_palette(doc));
        CHECK(back == doc);
        CHECK(back.coloring() == chi);
        for (const auto& e : back.colors) CHECK(std::regex_match(e.srgb_hex, std::regex("#[0-9A-F]{6}")));
        CHECK(back.colors.front().original_label.has_value() == (g == &grid));
      }
}

TEST_CASE("palette parse errors") {
  CHECK_THROWS_AS(parse_palette("not json"), InputError);
  CHECK_THROWS_AS(parse_palette("[]"), InputError);
  CHECK_THROWS_AS(parse_palette(R"({"space":"lab","quality":1,"seed":1})"), InputError);
  CHECK_THROWS_AS(parse_palette(R"({"space":"hsv","quality":1,"seed":1,"colors":[]})"), InputError);
  CHECK_THROWS_AS(
      parse_palette(R"({"space":"srgb","quality":1,"seed":1,"colors":[{"region":0,"coords":[1,2,3],"srgb_hex":"#abcdef"}]})"),
      InputError);
  CHECK_THROWS_AS(
      parse_palette(R"({"space":"srgb","quality":1,"seed":1,"colors":[{"region":1,"coords":[1,2,3],"srgb_hex":"#010203"}]})"),
      InputError);
}

TEST_CASE("edge list and grid files") {
  const auto g = parse_edge_list(R"({"n": 3, "edges": [[0, 1], [1, 0], [2, 1]]})");
  CHECK(g.edge_count() == 2);
  CHECK(parse_edge_list(serialize_edge_list(g)) == g);
  CHECK_THROWS_AS(parse_edge_list(R"({"n": 2, "edges": [[0, 0]]})"), InputError);
  CHECK_THROWS_AS(parse_edge_list(R"({"n": 2, "edges": [[0, 1, 1]]})"), InputError);
  CHECK_THROWS_AS(parse_edge_list(R"({"n": -1, "edges": []})"), InputError);
  CHECK_THROWS_AS(parse_edge_list(R"({"edges": []})"), InputError);

  const auto grid = parse_grid("0,1\r\n2, 3\n\n");
  CHECK(grid.rows() == 2);
  CHECK(grid.at(1, 1) == 3);
  CHECK_THROWS_AS(parse_grid(""), InputError);
  CHECK_THROWS_AS(parse_grid("0,1\n2\n"), InputError);
  CHECK_THROWS_AS(parse_grid("0,x\n"), InputError);
  CHECK_THROWS_AS(parse_grid("0,1,\n"), InputError);
  CHECK_THROWS_AS(parse_grid("0,-2\n"), InputError);
  CHECK_THROWS_AS(read_file(tmp("missing.json")), InputError);
}

TEST_CASE("SVG rendering") {
  const GridPartition grid({{4, 4, 8}, {6, 8, 8}});
  const auto g = RegionGraph::from_grid(grid);
  const Coloring chi{ColorPoint(Space::SRGB, {255, 0, 0}), ColorPoint(Space::SRGB, {0, 255, 0}),
                     ColorPoint(Space::SRGB, {0, 0, 255})};
  const auto doc = PaletteDocument::from_coloring(chi, g, 0.0, 0);
  const std::string svg = render_svg(g, grid.rows(), grid.cols(), doc, 10, false);
  CHECK(svg.find("version=\"1.1\"") != std::string::npos);
  CHECK(svg.find("width=\"30\" height=\"20\"") != std::string::npos);
  CHECK(svg.find("stroke") == std::string::npos);

  const std::regex rect(R"re(<rect x="(\d+)" y="(\d+)" width="10" height="10" fill="(#[0-9A-F]{6})"/>)re");
  std::vector<std::string> fills;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), rect); it != std::sregex_iterator(); ++it)
    fills.push_back((*it)[3]);
  CHECK(fills == std::vector<std::string>{"#FF0000", "#FF0000", "#00FF00", "#0000FF", "#00FF00", "#00FF00"});

  CHECK(render_svg(g, 2, 3, doc, 10, true).find("stroke=\"#000000\"") != std::string::npos);
}

TEST_CASE("cli optimize and random") {
  auto a = cli({"optimize", "--grid", kGrid, "--space", "lab", "--seed", "7", "--out", tmp("p1.txt"), "--svg", tmp("p1.svg")});
  REQUIRE(a.code == 0);
  auto b = cli({"optimize", "--grid", kGrid, "--space", "lab", "--seed", "7", "--out", tmp("p2.txt"), "--svg", tmp("p2.svg")});
  REQUIRE(b.code == 0);
  CHECK(read_file(tmp("p1.txt")) == read_file(tmp("p2.txt")));
  CHECK(read_file(tmp("p1.svg")) == read_file(tmp("p2.svg")));
  const auto doc = parse_palette(read_file(tmp("p1.txt")));
  CHECK(doc.colors.size() == 18);
  CHECK(doc.seed == 7);
  CHECK(doc.space == Space::LAB);

  // every fill in the SVG is one of the palette's colors
  const std::string svg = read_file(tmp("p1.svg"));
  std::set<std::string> hexes;
  for (const auto& e : doc.colors) hexes.insert(e.srgb_hex);
  const std::regex fill(R"re(fill="(#[0-9A-F]{6})")re");
  std::size_t rects = 0;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), fill); it != std::sregex_iterator(); ++it, ++rects)
    CHECK(hexes.count((*it)[1]) == 1);
  CHECK(rects == 24 * 32);

  auto r = cli({"random", "--grid", kGrid, "--space", "srgb", "--seed", "1", "--out", tmp("r1.txt")});
  REQUIRE(r.code == 0);
  CHECK(cli({"random", "--grid", kGrid, "--space", "srgb", "--seed", "1", "--out", tmp("r2.txt")}).code == 0);
  CHECK(read_file(tmp("r1.txt")) == read_file(tmp("r2.txt")));
  for (const auto& e : parse_palette(read_file(tmp("r1.txt"))).colors)
    for (double v : e.coords) CHECK(v == std::floor(v));

  REQUIRE(cli({"random", "--graph", kGraph, "--space", "lab", "--seed", "1", "--out", tmp("r3.txt")}).code == 0);
  const Gamut lab = make_lab_gamut();
  for (const auto& p : parse_palette(read_file(tmp("r3.txt"))).coloring()) CHECK(lab.contains(p));

  // palette to standard output when --out is absent
  auto s = cli({"optimize", "--graph", kGraph, "--space", "srgb", "--restarts", "2"});
  REQUIRE(s.code == 0);
  CHECK(parse_palette(s.out).colors.size() == 18);
}

TEST_CASE("cli usage errors exit 2") {
  CHECK(cli({"optimize", "--graph", kGraph, "--svg", tmp("x.svg")}).code == kExitUsage);
  CHECK(cli({"optimize"}).code == kExitUsage);
  CHECK(cli({"optimize", "--graph", kGraph, "--grid", kGrid}).code == kExitUsage);
  CHECK(cli({"optimize", "--graph", kGraph, "--diag"}).code == kExitUsage);
  CHECK(cli({"optimize", "--graph", kGraph, "--space", "hsl"}).code == kExitUsage);
  CHECK(cli({"optimize", "--graph", kGraph, "--step-decay", "2"}).code == kExitUsage);
  CHECK(cli({"optimize", "--graph", kGraph, "--bogus"}).code == kExitUsage);
  CHECK(cli({"random", "--graph", tmp("nope.json")}).code == kExitUsage);
  CHECK(cli({"frobnicate"}).code == kExitUsage);
  CHECK(cli({}).code == kExitUsage);
  const auto e = cli({"random", "--graph", tmp("nope.json")});
  CHECK(e.err.find('\n') == e.err.size() - 1);
  CHECK(cli({"--help"}).code == kExitOk);
}

TEST_CASE("cli convert") {
  auto r = cli({"convert", "--from", "srgb", "--to", "lab", "255", "255", "255"});
  CHECK(r.code == 0);
  CHECK(r.out == "100.0000 0.0000 0.0000\n");
  r = cli({"convert", "--from", "srgb", "--to", "lab", "255", "0", "0"});
  CHECK(r.out == "53.2408 80.0925 67.2032\n");
  r = cli({"convert", "--from", "lab", "--to", "srgb", "50", "0", "0"});
  REQUIRE(r.code == 0);
  double ch[3];
  std::istringstream(r.out) >> ch[0] >> ch[1] >> ch[2];
  CHECK(std::abs(ch[0] - ch[1]) < 0.5);
  CHECK(std::abs(ch[1] - ch[2]) < 0.5);
  r = cli({"convert", "--from", "lab", "--to", "srgb", "32.297", "79.1875", "-107.8602"});
  CHECK(r.code == 0);
  CHECK(cli({"convert", "--from", "srgb", "--to", "lab", "300", "0", "0"}).code == kExitUsage);
  CHECK(cli({"convert", "--from", "lab", "--to", "srgb", "50", "150", "0"}).code == kExitUsage);
  CHECK(cli({"convert", "--from", "srgb", "--to", "lab", "1", "2"}).code == kExitUsage);
}

TEST_CASE("cli report") {
  write_file(tmp("k2.json"), R"({"n": 2, "edges": [[0, 1]]})");
  const auto k2 = parse_edge_list(read_file(tmp("k2.json")));
  const Coloring corners{ColorPoint(Space::SRGB, {0, 0, 0}), ColorPoint(Space::SRGB, {255, 255, 255})};
  write_file(tmp("k2_palette.txt"), serialize_palette(PaletteDocument::from_coloring(corners, k2, 0.0, 0)));
  auto r = cli({"report", "--palette", tmp("k2_palette.txt"), "--graph", tmp("k2.json")});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("min_adjacent_distance 441.672956\n") != std::string::npos);

  CHECK(cli({"report", "--palette", tmp("k2_palette.txt"), "--graph", kGraph}).code == kExitUsage);
  CHECK(cli({"report", "--graph", kGraph}).code == kExitUsage);
}
