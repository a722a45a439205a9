#include "abslab/transforms.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "abslab/analytic.hpp"
#include "abslab/indices.hpp"

namespace abslab {

namespace {

double f(double a, double b) { return analytic::f_xy<double>(a, b); }
double g(double s, double x, double y) { return analytic::g_s<double>(s, x, y); }

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

void require_vertex(const Graph& g, Vertex v) {
  require(v >= 0 && v < g.order(), "vertex " + std::to_string(v) + " is not in the graph");
}

// Drops `removed` and shifts higher labels down by one.
std::vector<Vertex> deletion_map(int order, Vertex removed) {
  std::vector<Vertex> label(static_cast<std::size_t>(order));
  for (Vertex i = 0; i < order; ++i) label[i] = i < removed ? i : i == removed ? -1 : i - 1;
  return label;
}

std::vector<Edge> edges_without(const Graph& g, std::initializer_list<Edge> drop) {
  std::vector<Edge> out;
  for (const auto& e : g.edges()) {
    bool dropped = std::any_of(drop.begin(), drop.end(), [&](const Edge& d) {
      return (d.u == e.u && d.v == e.v) || (d.u == e.v && d.v == e.u);
    });
    if (!dropped) out.push_back(e);
  }
  return out;
}

template <typename G>
Outcome<G> finish(const Graph& input, G result, double closed_form) {
  const double recomputed = index_value(result) - index_value(input);
  return {std::move(result), closed_form, recomputed};
}

}  // namespace

GraphOutcome add_edge(const Graph& g, Vertex u, Vertex v) {
  require_vertex(g, u);
  require_vertex(g, v);
  require(u != v, "add_edge: endpoints must differ");
  require(!g.adjacent(u, v), "add_edge: vertices are already adjacent");
  require(g.connected(), "add_edge: graph must be connected");

  const int du = g.degree(u);
  const int dv = g.degree(v);
  double closed = f(du + 1, dv + 1);
  for (Vertex z : g.neighbors(u)) closed += f(du + 1, g.degree(z)) - f(du, g.degree(z));
  for (Vertex z : g.neighbors(v)) closed += f(dv + 1, g.degree(z)) - f(dv, g.degree(z));

  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  edges.push_back({u, v});
  return finish(g, Graph(g.order(), std::move(edges)), closed);
}

TransformOutcome suppress_degree2(const Tree& t, Vertex v) {
  require_vertex(t, v);
  require(t.degree(v) == 2, "suppress_degree2: vertex " + std::to_string(v) + " does not have degree 2");
  const Vertex a = t.neighbors(v)[0];
  const Vertex b = t.neighbors(v)[1];
  const int da = t.degree(a);
  const int db = t.degree(b);
  const double closed = f(da, db) - f(da, 2) - f(db, 2);

  auto edges = edges_without(t, {{a, v}, {v, b}});
  edges.push_back({a, b});
  const auto label = deletion_map(t.order(), v);
  Graph staged(t.order(), std::move(edges));
  return finish(t, Tree(t.order() - 1, relabel_edges(staged, label)), closed);
}

TransformOutcome merge_adjacent_branching(const Tree& t, Vertex u, Vertex v) {
  require_vertex(t, u);
  require_vertex(t, v);
  require(t.adjacent(u, v), "merge_adjacent_branching: vertices are not adjacent");
  require(t.degree(u) >= 3 && t.degree(v) >= 3, "merge_adjacent_branching: both vertices need degree at least 3");

  const int du = t.degree(u);
  const int dv = t.degree(v);
  const int merged = du + dv - 2;
  double before_minus_after = f(du, dv);
  for (Vertex z : t.neighbors(u))
    if (z != v) before_minus_after += f(du, t.degree(z)) - f(merged, t.degree(z));
  for (Vertex z : t.neighbors(v))
    if (z != u) before_minus_after += f(dv, t.degree(z)) - f(merged, t.degree(z));

  std::vector<Edge> edges;
  for (const auto& e : t.edges()) {
    if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) continue;
    if (e.u == v) edges.push_back({u, e.v});
    else if (e.v == v) edges.push_back({e.u, u});
    else edges.push_back(e);
  }
  const auto label = deletion_map(t.order(), v);
  Graph staged(t.order(), std::move(edges));
  return finish(t, Tree(t.order() - 1, relabel_edges(staged, label)), -before_minus_after);
}

TransformOutcome contract_internal_path(const Tree& t, const InternalPath& path, Vertex w, Vertex y) {
  const auto& p = path.vertices;
  require(path.length() >= 2, "contract_internal_path: path length must be at least 2");
  for (Vertex x : p) require_vertex(t, x);
  require_vertex(t, w);
  require_vertex(t, y);
  require(t.degree(p.front()) >= 3 && t.degree(p.back()) >= 3,
          "contract_internal_path: path ends must be branching vertices");
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    require(t.adjacent(p[i], p[i + 1]), "contract_internal_path: consecutive path vertices are not adjacent");
    if (i > 0) require(t.degree(p[i]) == 2, "contract_internal_path: path interior must have degree 2");
  }
  require(t.degree(y) == 1 && t.adjacent(w, y), "contract_internal_path: y must be a pendent neighbor of w");
  require(std::find(p.begin(), p.end(), w) == p.end() && std::find(p.begin(), p.end(), y) == p.end(),
          "contract_internal_path: w and y must lie off the path");

  const Vertex v0 = p.front();
  const Vertex v1 = p[1];
  const Vertex before_end = p[p.size() - 2];
  const Vertex vr = p.back();
  const double dv = t.degree(v0);
  const double du = t.degree(vr);
  const double dw = t.degree(w);
  const double closed = g(du - 2, 2, dv) - g(du - 2, 2, 2) + g(1, 1, dw) - g(1, 1, 2);

  auto edges = edges_without(t, {{v0, v1}, {before_end, vr}});
  edges.push_back({v0, vr});
  edges.push_back({y, v1});
  return finish(t, Tree(t.order(), std::move(edges)), closed);
}

TransformOutcome relocate_branch(const Tree& t, Vertex x, Vertex v, Vertex y) {
  require_vertex(t, x);
  require_vertex(t, v);
  require_vertex(t, y);
  require(t.adjacent(x, v), "relocate_branch: x must be adjacent to v");
  require(t.degree(x) >= 2, "relocate_branch: x needs degree at least 2");
  require(t.degree(y) == 1, "relocate_branch: y must be pendent");
  require(y != v, "relocate_branch: y must differ from v");

  // the component of x once the edge xv is cut
  std::vector<char> side(static_cast<std::size_t>(t.order()), 0);
  std::vector<Vertex> stack{x};
  side[x] = 1;
  while (!stack.empty()) {
    Vertex a = stack.back();
    stack.pop_back();
    for (Vertex b : t.neighbors(a)) {
      if (side[b] || (a == x && b == v)) continue;
      side[b] = 1;
      stack.push_back(b);
    }
  }
  require(!side[y], "relocate_branch: y lies in the branch hanging off x");

  const Vertex u = t.neighbors(y)[0];
  const double dx = t.degree(x);
  const double closed = g(dx - 1, 1, t.degree(u)) - g(dx - 1, 1, t.degree(v));

  std::vector<Edge> edges;
  for (const auto& e : t.edges()) {
    if (e.u == x && e.v != v) edges.push_back({y, e.v});
    else if (e.v == x && e.u != v) edges.push_back({e.u, y});
    else edges.push_back(e);
  }
  return finish(t, Tree(t.order(), std::move(edges)), closed);
}

}  // namespace abslab
