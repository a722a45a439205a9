#pragma once

#include <map>
#include <utility>
#include <vector>

#include "abslab/tree.hpp"

namespace abslab {

/// Pendent vertices (w1), their neighbors (w2) and everything else (w3).
/// Each cell is sorted ascending.
struct VertexPartition {
  std::vector<Vertex> w1;
  std::vector<Vertex> w2;
  std::vector<Vertex> w3;
};

/// Throws std::invalid_argument for order <= 2, where a leaf's neighbor is
/// itself a leaf and the cells would overlap.
VertexPartition leaf_partition(const Tree& t);

/// Path v0..vr between two branching vertices (degree >= 3) through
/// degree-2 vertices only.
struct InternalPath {
  std::vector<Vertex> vertices;

  int length() const { return static_cast<int>(vertices.size()) - 1; }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
};

/// Every maximal internal path, each reported once with front() < back().
/// Sorted by (front, back).
std::vector<InternalPath> internal_paths(const Tree& t);

/// n_{i,j}: number of edges whose endpoint degrees are {i, j}, keyed i <= j.
class EdgeTypeCounts {
 public:
  using Key = std::pair<int, int>;

  void add(int di, int dj, long count = 1);
  long count(int di, int dj) const;
  long total() const;
  const std::map<Key, long>& items() const { return counts_; }

  friend bool operator==(const EdgeTypeCounts&, const EdgeTypeCounts&) = default;

 private:
  std::map<Key, long> counts_;
};

EdgeTypeCounts edge_type_counts(const Graph& g);

}  // namespace abslab
