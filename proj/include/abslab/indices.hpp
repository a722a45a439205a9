#pragma once

#include <optional>
#include <string_view>

#include "abslab/structure.hpp"
#include "abslab/tree.hpp"

namespace abslab {

/// Bond-incident-degree indices: sums over edges of a weight w(d_u, d_v).
enum class IndexKind { ABS, ABC, SC, RANDIC };

std::string_view to_string(IndexKind kind);
std::optional<IndexKind> parse_index_kind(std::string_view name);

/// ABS: sqrt(1 - 2/(du+dv))      ABC: sqrt((du+dv-2)/(du dv))
/// SC:  1/sqrt(du+dv)            RANDIC: 1/sqrt(du dv)
/// Throws std::invalid_argument for a non-positive degree.
double edge_weight(IndexKind kind, int du, int dv);

/// Edge-by-edge sum over `g`.
double index_value(const Graph& g, IndexKind kind = IndexKind::ABS);

/// The same sum grouped by edge type: sum of n_{i,j} w(i, j), evaluated in
/// key order. Graphs with equal edge-type counts get bit-identical values.
double index_value(const EdgeTypeCounts& counts, IndexKind kind = IndexKind::ABS);

}  // namespace abslab
