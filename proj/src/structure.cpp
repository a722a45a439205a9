#include "abslab/structure.hpp"

#include <algorithm>
#include <stdexcept>

namespace abslab {

VertexPartition leaf_partition(const Tree& t) {
  if (t.order() <= 2) throw std::invalid_argument("leaf partition needs a tree of order at least 3");
  std::vector<char> cell(static_cast<std::size_t>(t.order()), 3);
  for (Vertex v = 0; v < t.order(); ++v) {
    if (t.degree(v) == 1) {
      cell[v] = 1;
      for (Vertex w : t.neighbors(v)) cell[w] = 2;
    }
  }
  VertexPartition part;
  for (Vertex v = 0; v < t.order(); ++v) {
    switch (cell[v]) {
      case 1: part.w1.push_back(v); break;
      case 2: part.w2.push_back(v); break;
      default: part.w3.push_back(v); break;
    }
  }
  return part;
}

std::vector<InternalPath> internal_paths(const Tree& t) {
  std::vector<InternalPath> paths;
  for (Vertex start = 0; start < t.order(); ++start) {
    if (t.degree(start) < 3) continue;
    for (Vertex first : t.neighbors(start)) {
      InternalPath p{{start, first}};
      Vertex prev = start;
      Vertex cur = first;
      while (t.degree(cur) == 2) {
        auto nb = t.neighbors(cur);
        Vertex next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
        p.vertices.push_back(cur);
      }
      if (t.degree(cur) >= 3 && start < cur) paths.push_back(std::move(p));
    }
  }
  std::sort(paths.begin(), paths.end(), [](const InternalPath& a, const InternalPath& b) {
    return std::pair(a.front(), a.back()) < std::pair(b.front(), b.back());
  });
  return paths;
}

void EdgeTypeCounts::add(int di, int dj, long count) {
  if (di > dj) std::swap(di, dj);
  counts_[{di, dj}] += count;
}

long EdgeTypeCounts::count(int di, int dj) const {
  if (di > dj) std::swap(di, dj);
  auto it = counts_.find({di, dj});
  return it == counts_.end() ? 0 : it->second;
}

long EdgeTypeCounts::total() const {
  long sum = 0;
  for (const auto& [key, c] : counts_) sum += c;
  return sum;
}

EdgeTypeCounts edge_type_counts(const Graph& g) {
  EdgeTypeCounts counts;
  for (const auto& e : g.edges()) counts.add(g.degree(e.u), g.degree(e.v));
  return counts;
}

}  // namespace abslab
