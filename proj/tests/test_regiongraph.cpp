#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "colorembed/error.hpp"
#include "colorembed/io.hpp"
#include "colorembed/random.hpp"
#include "colorembed/regiongraph.hpp"

using namespace colorembed;

using EdgeSet = std::set<std::pair<std::size_t, std::size_t>>;

namespace {

EdgeSet edge_set(const RegionGraph& g) {
  const auto e = g.edges();
  return {e.begin(), e.end()};
}

void check_simple(const RegionGraph& g) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto& nb = g.neighbors(i);
    CHECK(std::is_sorted(nb.begin(), nb.end()));
    for (auto j : nb) {
      CHECK(j < g.size());
      CHECK(j != i);
      CHECK(g.adjacent(j, i));
    }
  }
  CHECK(g.edge_count() <= g.size() * (g.size() - 1) / 2);
}

GridPartition random_grid(Rng& rng, std::size_t rows, std::size_t cols, int labels) {
  std::vector<std::vector<std::int64_t>> m(rows, std::vector<std::int64_t>(cols));
  for (auto& row : m)
    for (auto& v : row) v = static_cast<std::int64_t>(rng.below(labels));
  return GridPartition(m);
}

}  // namespace

TEST_CASE("from_edge_list") {
  auto two = RegionGraph::from_edge_list(2, {});
  CHECK(two.size() == 2);
  CHECK(two.edge_count() == 0);

  auto path = RegionGraph::from_edge_list(3, {{0, 1}, {1, 0}, {1, 2}});
  CHECK(path.neighbors(0) == std::vector<std::size_t>{1});
  CHECK(path.neighbors(1) == std::vector<std::size_t>{0, 2});
  CHECK(path.neighbors(2) == std::vector<std::size_t>{1});
  CHECK(path.region_ids().empty());

  CHECK(RegionGraph::from_edge_list(1, {}).size() == 1);

  CHECK_THROWS_AS(RegionGraph::from_edge_list(0, {}), InputError);
  CHECK_THROWS_AS(RegionGraph::from_edge_list(3, {{1, 1}}), InputError);
  CHECK_THROWS_AS(RegionGraph::from_edge_list(3, {{0, 3}}), InputError);
}

TEST_CASE("from_grid four and eight neighborhoods") {
  const GridPartition square({{0, 1}, {2, 3}});
  CHECK(edge_set(RegionGraph::from_grid(square, false)) == EdgeSet{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK(edge_set(RegionGraph::from_grid(square, true)) == EdgeSet{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});

  const auto strip = RegionGraph::from_grid(GridPartition({{0, 1, 0}}));
  CHECK(strip.size() == 2);
  CHECK(edge_set(strip) == EdgeSet{{0, 1}});
}

TEST_CASE("from_grid renumbers by first appearance") {
  const auto g = RegionGraph::from_grid(GridPartition({{42, 7}, {7, 9}}));
  CHECK(g.region_ids() == std::vector<std::int64_t>{42, 7, 9});
  CHECK(g.cell_regions() == std::vector<std::size_t>{0, 1, 1, 2});
  CHECK(edge_set(g) == EdgeSet{{0, 1}, {1, 2}});
}

TEST_CASE("grid validation") {
  using Rows = std::vector<std::vector<std::int64_t>>;
  CHECK_THROWS_AS(GridPartition(Rows{}), InputError);
  CHECK_THROWS_AS(GridPartition(Rows{{}}), InputError);
  CHECK_THROWS_AS(GridPartition({{0, 1}, {2}}), InputError);
  CHECK_THROWS_AS(GridPartition({{0, -1}}), InputError);
}

TEST_CASE("grid graph properties over random grids") {
  Rng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng.below(7), cols = 1 + rng.below(7);
    const GridPartition grid = random_grid(rng, rows, cols, 1 + static_cast<int>(rng.below(9)));
    for (bool diag : {false, true}) {
      const auto g = RegionGraph::from_grid(grid, diag);
      check_simple(g);

      // transpose: same regions, same adjacency between original labels
      const auto t = RegionGraph::from_grid(grid.transposed(), diag);
      REQUIRE(t.size() == g.size());
      EdgeSet a, b;
      for (auto [i, j] : g.edges()) a.emplace(std::minmax(g.region_ids()[i], g.region_ids()[j]));
      for (auto [i, j] : t.edges()) b.emplace(std::minmax(t.region_ids()[i], t.region_ids()[j]));
      CHECK(a == b);

      // relabeling the ids by an injective map leaves the canonical graph unchanged
      std::vector<std::vector<std::int64_t>> relabeled(rows, std::vector<std::int64_t>(cols));
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) relabeled[r][c] = 1000 - 3 * grid.at(r, c);
      CHECK(RegionGraph::from_grid(GridPartition(relabeled), diag) == g);
    }
  }
}

TEST_CASE("degree_stats") {
  const auto path = RegionGraph::from_edge_list(3, {{0, 1}, {1, 2}});
  auto s = degree_stats(path);
  CHECK(s.min == 1);
  CHECK(s.max == 2);
  CHECK(s.mean == doctest::Approx(4.0 / 3.0));

  const auto k4 = RegionGraph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  s = degree_stats(k4);
  CHECK(s.min == 3);
  CHECK(s.max == 3);
  CHECK(s.mean == 3.0);

  // values from tests/oracles/make_fixtures.py
  const auto tri = parse_edge_list(read_file(FIXTURE_DIR "/triangulation18.json"));
  CHECK(tri.size() == 18);
  CHECK(tri.edge_count() == 43);
  s = degree_stats(tri);
  CHECK(s.min == 3);
  CHECK(s.max == 7);
  CHECK(s.mean == doctest::Approx(86.0 / 18.0));
}
