#include "colorembed/regiongraph.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <unordered_map>

#include "colorembed/error.hpp"

namespace colorembed {

GridPartition::GridPartition(const std::vector<std::vector<std::int64_t>>& rows) {
  if (rows.empty() || rows.front().empty()) throw InputError("grid partition is empty");
  rows_ = rows.size();
  cols_ = rows.front().size();
  labels_.reserve(rows_ * cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (rows[r].size() != cols_)
      throw InputError("grid row " + std::to_string(r + 1) + " has " + std::to_string(rows[r].size()) +
                       " labels, expected " + std::to_string(cols_));
    for (auto v : rows[r]) {
      if (v < 0) throw InputError("grid labels must be non-negative");
      labels_.push_back(v);
    }
  }
}

GridPartition GridPartition::transposed() const {
  GridPartition t;
  t.rows_ = cols_;
  t.cols_ = rows_;
  t.labels_.resize(labels_.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.labels_[c * rows_ + r] = at(r, c);
  return t;
}

RegionGraph RegionGraph::from_edge_list(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  if (n == 0) throw InputError("region graph needs at least one region");
  std::vector<std::set<std::size_t>> sets(n);
  for (auto [i, j] : edges) {
    if (i >= n || j >= n)
      throw InputError("edge (" + std::to_string(i) + "," + std::to_string(j) + ") out of range for n=" + std::to_string(n));
    if (i == j) throw InputError("self-loop on region " + std::to_string(i));
    sets[i].insert(j);
    sets[j].insert(i);
  }
  RegionGraph g;
  g.adjacency_.reserve(n);
  for (auto& s : sets) g.adjacency_.emplace_back(s.begin(), s.end());
  return g;
}

RegionGraph RegionGraph::from_grid(const GridPartition& grid, bool diagonal) {
  std::unordered_map<std::int64_t, std::size_t> index;
  std::vector<std::int64_t> ids;
  std::vector<std::size_t> cells(grid.rows() * grid.cols());
  for (std::size_t r = 0; r < grid.rows(); ++r)
    for (std::size_t c = 0; c < grid.cols(); ++c) {
      const auto label = grid.at(r, c);
      auto [it, fresh] = index.try_emplace(label, ids.size());
      if (fresh) ids.push_back(label);
      cells[r * grid.cols() + c] = it->second;
    }

  std::vector<std::pair<std::size_t, std::size_t>> edges;
  auto link = [&](std::size_t r0, std::size_t c0, std::size_t r1, std::size_t c1) {
    const auto a = cells[r0 * grid.cols() + c0];
    const auto b = cells[r1 * grid.cols() + c1];
    if (a != b) edges.emplace_back(a, b);
  };
  // each unordered cell pair visited once: right, down, and the two down-diagonals
  for (std::size_t r = 0; r < grid.rows(); ++r)
    for (std::size_t c = 0; c < grid.cols(); ++c) {
      const bool right = c + 1 < grid.cols();
      const bool down = r + 1 < grid.rows();
      if (right) link(r, c, r, c + 1);
      if (down) link(r, c, r + 1, c);
      if (diagonal && down) {
        if (right) link(r, c, r + 1, c + 1);
        if (c > 0) link(r, c, r + 1, c - 1);
      }
    }

  RegionGraph g = from_edge_list(ids.size(), edges);
  g.region_ids_ = std::move(ids);
  g.cell_regions_ = std::move(cells);
  return g;
}

bool RegionGraph::adjacent(std::size_t i, std::size_t j) const {
  const auto& nb = adjacency_.at(i);
  return std::binary_search(nb.begin(), nb.end(), j);
}

std::size_t RegionGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& nb : adjacency_) twice += nb.size();
  return twice / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> RegionGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < adjacency_.size(); ++i)
    for (auto j : adjacency_[i])
      if (i < j) out.emplace_back(i, j);
  return out;
}

DegreeStats degree_stats(const RegionGraph& g) {
  DegreeStats s;
  s.min = g.neighbors(0).size();
  std::size_t total = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto d = g.neighbors(i).size();
    s.min = std::min(s.min, d);
    s.max = std::max(s.max, d);
    total += d;
  }
  s.mean = static_cast<double>(total) / static_cast<double>(g.size());
  return s;
}

}  // namespace colorembed
