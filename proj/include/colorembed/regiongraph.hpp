#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace colorembed {

/// Rectangular matrix of non-negative region labels, row-major.
class GridPartition {
 public:
  /// Throws InputError if the matrix is empty, ragged, or has a negative label.
  explicit GridPartition(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t at(std::size_t r, std::size_t c) const { return labels_[r * cols_ + c]; }
  GridPartition transposed() const;

 private:
  GridPartition() = default;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::int64_t> labels_;
};

/// Simple undirected graph with one vertex per region.
class RegionGraph {
 public:
  /// Duplicate and reversed edges collapse. Throws InputError for n == 0,
  /// self-loops, or out-of-range endpoints.
  static RegionGraph from_edge_list(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  /// One vertex per distinct label, numbered in order of first appearance
  /// (row-major). Regions are adjacent when two side-sharing cells carry
  /// their labels; with `diagonal`, corner contact counts too.
  static RegionGraph from_grid(const GridPartition& grid, bool diagonal = false);

  std::size_t size() const { return adjacency_.size(); }
  const std::vector<std::size_t>& neighbors(std::size_t i) const { return adjacency_[i]; }
  bool adjacent(std::size_t i, std::size_t j) const;
  std::size_t edge_count() const;
  /// Edges (i, j) with i < j in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  /// Original grid labels per vertex; empty for edge-list graphs.
  const std::vector<std::int64_t>& region_ids() const { return region_ids_; }
  /// Vertex of each grid cell, row-major; empty for edge-list graphs.
  const std::vector<std::size_t>& cell_regions() const { return cell_regions_; }

  friend bool operator==(const RegionGraph& a, const RegionGraph& b) { return a.adjacency_ == b.adjacency_; }

 private:
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<std::int64_t> region_ids_;
  std::vector<std::size_t> cell_regions_;
};

struct DegreeStats {
  std::size_t min = 0;
  std::size_t max = 0;
  double mean = 0.0;
};

DegreeStats degree_stats(const RegionGraph& g);

}  // namespace colorembed
