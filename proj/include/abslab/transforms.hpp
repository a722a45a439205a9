#pragma once

#include "abslab/structure.hpp"
#include "abslab/tree.hpp"

namespace abslab {

/// Result of a graph surgery together with two independent values of the
/// ABS change: one from the degree-level closed form, one from summing the
/// index over both graphs.
template <typename G>
struct Outcome {
  G result;
  double delta_closed_form;  ///< predicted ABS(result) - ABS(input)
  double delta_recomputed;   ///< index_value(result) - index_value(input)
};

using TransformOutcome = Outcome<Tree>;
/// Adding an edge to a tree leaves the tree class; this is the only
/// transform returning a general graph.
using GraphOutcome = Outcome<Graph>;

/// Adds the edge uv. Requires u != v, non-adjacent, `g` connected.
GraphOutcome add_edge(const Graph& g, Vertex u, Vertex v);

/// Deletes a degree-2 vertex v and joins its neighbors u, w:
///   delta = f(du, dw) - f(du, 2) - f(dw, 2).
/// The result is relabeled so vertices above v shift down by one.
TransformOutcome suppress_degree2(const Tree& t, Vertex v);

/// Deletes v and reattaches its other neighbors to u, for adjacent u, v of
/// degree >= 3. u ends with degree du + dv - 2 and the pendent count is kept.
/// The closed form sums over the neighbors of both endpoints with their
/// original degrees.
TransformOutcome merge_adjacent_branching(const Tree& t, Vertex u, Vertex v);

/// For an internal path v0..vr (r >= 2), w in W2 off the path and a pendent
/// y adjacent to w (also off the path): removes v0v1 and v(r-1)vr, adds
/// v0vr and y v1. The segment v1..v(r-1) becomes a pendent path behind y.
///   delta = g_{dvr-2}(2, dv0) - g_{dvr-2}(2, 2) + g_1(1, dw) - g_1(1, 2)
TransformOutcome contract_internal_path(const Tree& t, const InternalPath& path, Vertex w, Vertex y);

/// Moves every neighbor of x except v over to the pendent vertex y, so x
/// becomes pendent and y takes degree dx. With u the neighbor of y:
///   delta = g_{dx-1}(1, du) - g_{dx-1}(1, dv)
/// y must not be v and must not lie in the part of the tree hanging off x
/// away from v.
TransformOutcome relocate_branch(const Tree& t, Vertex x, Vertex v, Vertex y);

}  // namespace abslab
