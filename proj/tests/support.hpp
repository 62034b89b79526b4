#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "hypertutte/activities.hpp"
#include "hypertutte/hypertrees.hpp"
#include "hypertutte/ribbon_graph.hpp"
#include "hypertutte/tours.hpp"
#include "hypertutte/tutte.hpp"

namespace testing {

using namespace hypertutte;

inline std::string fixture_path(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

inline RibbonGraph fixture(const std::string& name) { return load_ribbon_graph_file(fixture_path(name)); }

inline OrdinaryGraph make_graph(int n, std::vector<std::pair<int, int>> edges) {
  OrdinaryGraph g;
  for (int v = 0; v < n; ++v) g.vertex_names.push_back("v" + std::to_string(v));
  g.edges = std::move(edges);
  for (int k = 0; k < g.edge_count(); ++k) g.edge_names.push_back("e" + std::to_string(k));
  return g;
}

// Matrix-tree theorem: any cofactor of the Laplacian, by fraction-free
// (Bareiss) elimination.
inline std::int64_t kirchhoff_count(const RibbonGraph& g) {
  const int n = g.node_count();
  std::vector<std::vector<std::int64_t>> lap(n, std::vector<std::int64_t>(n, 0));
  for (const EdgeEnds& e : g.edges()) {
    const int a = g.dense(NodeId::violet(e.violet));
    const int b = g.dense(NodeId::emerald(e.emerald));
    ++lap[a][a];
    ++lap[b][b];
    --lap[a][b];
    --lap[b][a];
  }
  const int m = n - 1;
  std::vector<std::vector<std::int64_t>> a(m, std::vector<std::int64_t>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) a[i][j] = lap[i + 1][j + 1];
  if (m == 0) return 1;
  std::int64_t sign = 1, prev = 1;
  for (int k = 0; k < m - 1; ++k) {
    if (a[k][k] == 0) {
      int swap = -1;
      for (int i = k + 1; i < m; ++i)
        if (a[i][k] != 0) swap = i;
      if (swap < 0) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (int i = k + 1; i < m; ++i)
      for (int j = k + 1; j < m; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[m - 1][m - 1];
}

// All (N-1)-subsets of edges that form a tree, as degree vectors.
inline std::set<IntVector> brute_hypertrees(const RibbonGraph& g) {
  const int m = g.edge_count();
  const int need = g.node_count() - 1;
  std::set<IntVector> out;
  std::vector<int> pick(m, 0);
  std::fill(pick.end() - need, pick.end(), 1);
  do {
    std::vector<int> parent(g.node_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x];
      return x;
    };
    bool acyclic = true;
    IntVector h(g.emerald_count(), -1);
    for (int k = 0; k < m && acyclic; ++k) {
      if (!pick[k]) continue;
      const EdgeEnds& e = g.edges()[k];
      const int a = find(g.dense(NodeId::violet(e.violet)));
      const int b = find(g.dense(NodeId::emerald(e.emerald)));
      if (a == b) acyclic = false;
      parent[a] = b;
      ++h[e.emerald];
    }
    if (acyclic) out.insert(h);
  } while (std::next_permutation(pick.begin(), pick.end()));
  return out;
}

// Activities straight from the definition over an explicit list.
inline ActivityRecord brute_activities(const std::vector<IntVector>& family, const IntVector& b,
                                       const std::vector<int>& order, bool max_rule) {
  auto member = [&](const IntVector& v) { return std::find(family.begin(), family.end(), v) != family.end(); };
  auto position = [&](int e) { return std::find(order.begin(), order.end(), e) - order.begin(); };
  ActivityRecord r;
  for (int e = 0; e < static_cast<int>(b.size()); ++e) {
    bool internal = true, external = true;
    for (int f = 0; f < static_cast<int>(b.size()); ++f) {
      if (f == e) continue;
      const bool compared = max_rule ? position(f) > position(e) : position(f) < position(e);
      if (!compared) continue;
      IntVector down = b, up = b;
      --down[e];
      ++down[f];
      ++up[e];
      --up[f];
      if (member(down)) internal = false;
      if (member(up)) external = false;
    }
    if (internal) r.internal.insert(e);
    if (external) r.external.insert(e);
  }
  return r;
}

// Tour of a spanning tree of an ordinary graph: at (v, e), a non-tree edge
// moves on to the next edge at v, a tree edge crosses to the other end u and
// continues with the edge after e at u. Rotation lists edge indices per vertex.
struct GraphStep {
  int vertex;
  int edge;
};

inline std::vector<GraphStep> graph_tour(const OrdinaryGraph& g, const std::vector<std::vector<int>>& rotation,
                                         const std::set<int>& tree, int b0, int e0) {
  auto next = [&](int v, int e) {
    const auto& r = rotation[v];
    const auto it = std::find(r.begin(), r.end(), e);
    return r[(it - r.begin() + 1) % r.size()];
  };
  std::vector<GraphStep> out;
  int v = b0, e = e0;
  do {
    out.push_back({v, e});
    if (tree.count(e)) {
      const auto [a, b] = g.edges[e];
      v = a == v ? b : a;
    }
    e = next(v, e);
  } while (!(v == b0 && e == e0));
  return out;
}

}  // namespace testing
