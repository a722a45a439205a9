#include "abslab/tree.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace abslab {

Graph::Graph(int order, std::vector<Edge> edges) : edges_(std::move(edges)) {
  if (order < 1) throw std::invalid_argument("graph order must be at least 1");
  adjacency_.assign(static_cast<std::size_t>(order), {});
  for (auto& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= order || e.v >= order)
      throw std::invalid_argument("edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                                  " references a vertex outside 0.." + std::to_string(order - 1));
    if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end())
    throw std::invalid_argument("duplicate edge " + std::to_string(dup->u) + " " + std::to_string(dup->v));
  for (const auto& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& a : adjacency_) std::sort(a.begin(), a.end());
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& a = adjacency_.at(u);
  return std::binary_search(a.begin(), a.end(), v);
}

bool Graph::connected() const {
  std::vector<char> seen(adjacency_.size(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adjacency_[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == adjacency_.size();
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& a : adjacency_) best = std::max(best, static_cast<int>(a.size()));
  return best;
}

Tree::Tree(int order, std::vector<Edge> edges) : Graph(order, std::move(edges)) {
  if (static_cast<int>(size()) != order - 1)
    throw std::invalid_argument("a tree of order " + std::to_string(order) + " needs " +
                                std::to_string(order - 1) + " edges, got " + std::to_string(size()));
  if (!connected()) throw std::invalid_argument("edges do not form a connected graph");
}

Tree Tree::path(int order) {
  std::vector<Edge> edges;
  for (int i = 1; i < order; ++i) edges.push_back({i - 1, i});
  return Tree(order, std::move(edges));
}

Tree Tree::star(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return Tree(leaves + 1, std::move(edges));
}

Tree Tree::spider(std::span<const int> legs) {
  std::vector<Edge> edges;
  int next = 1;
  for (int len : legs) {
    if (len < 1) throw std::invalid_argument("spider legs must have length at least 1");
    Vertex prev = 0;
    for (int i = 0; i < len; ++i) {
      edges.push_back({prev, next});
      prev = next++;
    }
  }
  return Tree(next, std::move(edges));
}

Tree Tree::from_parents(std::span<const Vertex> parent) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < parent.size(); ++i) edges.push_back({parent[i], static_cast<Vertex>(i)});
  return Tree(static_cast<int>(parent.size()), std::move(edges));
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> degrees(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) degrees[v] = g.degree(v);
  return degrees;
}

int pendent_count(const Graph& g) {
  int count = 0;
  for (Vertex v = 0; v < g.order(); ++v) count += g.degree(v) == 1;
  return count;
}

std::vector<Edge> relabel_edges(const Graph& g, std::span<const Vertex> new_label) {
  std::vector<Edge> out;
  out.reserve(g.size());
  for (const auto& e : g.edges()) {
    Vertex a = new_label[e.u];
    Vertex b = new_label[e.v];
    if (a >= 0 && b >= 0) out.push_back({a, b});
  }
  return out;
}

}  // namespace abslab
