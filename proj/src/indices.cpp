#include "abslab/indices.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace abslab {

std::string_view to_string(IndexKind kind) {
  switch (kind) {
    case IndexKind::ABS: return "abs";
    case IndexKind::ABC: return "abc";
    case IndexKind::SC: return "sc";
    case IndexKind::RANDIC: return "randic";
  }
  return "?";
}

std::optional<IndexKind> parse_index_kind(std::string_view name) {
  for (auto kind : {IndexKind::ABS, IndexKind::ABC, IndexKind::SC, IndexKind::RANDIC})
    if (to_string(kind) == name) return kind;
  return std::nullopt;
}

double edge_weight(IndexKind kind, int du, int dv) {
  if (du < 1 || dv < 1)
    throw std::invalid_argument("degrees must be positive, got " + std::to_string(du) + ", " + std::to_string(dv));
  const double sum = du + dv;
  const double product = static_cast<double>(du) * dv;
  switch (kind) {
    case IndexKind::ABS: return std::sqrt(1.0 - 2.0 / sum);
    case IndexKind::ABC: return std::sqrt((sum - 2.0) / product);
    case IndexKind::SC: return 1.0 / std::sqrt(sum);
    case IndexKind::RANDIC: return 1.0 / std::sqrt(product);
  }
  throw std::invalid_argument("unknown index kind");
}

double index_value(const Graph& g, IndexKind kind) {
  double total = 0.0;
  for (const auto& e : g.edges()) total += edge_weight(kind, g.degree(e.u), g.degree(e.v));
  return total;
}

double index_value(const EdgeTypeCounts& counts, IndexKind kind) {
  double total = 0.0;
  for (const auto& [key, c] : counts.items())
    total += static_cast<double>(c) * edge_weight(kind, key.first, key.second);
  return total;
}

}  // namespace abslab
