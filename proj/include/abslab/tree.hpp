#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace abslab {

using Vertex = int;

struct Edge {
  Vertex u;
  Vertex v;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..order-1.
///
/// Edges are stored normalized (u < v) and sorted, adjacency lists are sorted.
/// The only non-tree values in the library are produced by `add_edge`.
class Graph {
 public:
  Graph() = default;
  /// Throws std::invalid_argument on self-loops, duplicate edges or labels
  /// outside 0..order-1.
  Graph(int order, std::vector<Edge> edges);

  int order() const { return static_cast<int>(adjacency_.size()); }
  std::size_t size() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }
  bool adjacent(Vertex u, Vertex v) const;
  bool connected() const;
  int max_degree() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.edges_ == b.edges_ && a.order() == b.order(); }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// Labeled free tree. Construction validates order-1 edges and connectivity.
class Tree : public Graph {
 public:
  Tree() : Tree(1, {}) {}
  Tree(int order, std::vector<Edge> edges);

  static Tree path(int order);
  /// Star with `leaves` pendent vertices around center 0.
  static Tree star(int leaves);
  /// One center (vertex 0) with a pendent path of each given length.
  static Tree spider(std::span<const int> legs);
  /// Tree from a parent array (parent[0] is ignored, parent[i] < i not required).
  static Tree from_parents(std::span<const Vertex> parent);
};

std::vector<int> degree_sequence(const Graph& g);
int pendent_count(const Graph& g);

/// Applies a label map; vertices mapped to -1 are dropped with their edges.
/// Used by the transforms to renumber after vertex deletion.
std::vector<Edge> relabel_edges(const Graph& g, std::span<const Vertex> new_label);

}  // namespace abslab
