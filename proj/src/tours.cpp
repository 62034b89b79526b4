#include "hypertutte/tours.hpp"

#include <numeric>
#include <queue>
#include <stdexcept>

#include "hypertutte/errors.hpp"

namespace hypertutte {

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

int violet_dense(const RibbonGraph& g, int k) { return g.edges()[k].violet; }
int emerald_dense(const RibbonGraph& g, int k) { return g.violet_count() + g.edges()[k].emerald; }

bool connects_all(const RibbonGraph& g, IndexSet edges) {
  DisjointSets ds(g.node_count());
  int comps = g.node_count();
  for (int k : edges.items())
    if (ds.unite(violet_dense(g, k), emerald_dense(g, k))) --comps;
  return comps == 1;
}

// Adjacency restricted to tree edges, skipping `removed` (or -1).
std::vector<std::vector<int>> tree_adjacency(const RibbonGraph& g, IndexSet tree, int removed) {
  std::vector<std::vector<int>> adj(g.node_count());
  for (int k : tree.items()) {
    if (k == removed) continue;
    adj[violet_dense(g, k)].push_back(k);
    adj[emerald_dense(g, k)].push_back(k);
  }
  return adj;
}

int far_end(const RibbonGraph& g, int k, int from) {
  const int a = violet_dense(g, k);
  return a == from ? emerald_dense(g, k) : a;
}

}  // namespace

bool is_spanning_tree(const RibbonGraph& g, IndexSet edges) {
  if (edges.bits() & ~IndexSet::full(g.edge_count()).bits()) return false;
  if (edges.size() != g.node_count() - 1) return false;
  return connects_all(g, edges);
}

SpanningTree make_spanning_tree(const RibbonGraph& g, IndexSet edges) {
  if (!is_spanning_tree(g, edges)) throw ValidationError("edge set is not a spanning tree");
  return SpanningTree(edges);
}

SpanningTree trusted_spanning_tree(IndexSet edges) { return SpanningTree(edges); }

Tour tour(const RibbonGraph& g, const SpanningTree& tree) {
  const TourStep start{g.basis_node(), g.basis_edge()};
  Tour steps;
  steps.reserve(2 * g.edge_count());
  TourStep cur = start;
  do {
    steps.push_back(cur);
    if (tree.contains(cur.edge)) {
      const NodeId y = g.other_end(cur.node, cur.edge);
      cur = {y, g.next_at(y, cur.edge)};
    } else {
      cur = {cur.node, g.next_at(cur.node, cur.edge)};
    }
    if (static_cast<int>(steps.size()) > 2 * g.edge_count())
      throw std::logic_error("tour did not return to the basis pair");
  } while (cur != start);
  return steps;
}

std::optional<TourStep> first_difference(const RibbonGraph& g, const SpanningTree& a, const SpanningTree& b) {
  if (a == b) return std::nullopt;
  const TourStep start{g.basis_node(), g.basis_edge()};
  TourStep cur = start;
  // Both tours agree while the current edge is treated alike, so one cursor suffices.
  for (int guard = 0; guard <= 2 * g.edge_count(); ++guard) {
    const bool in_a = a.contains(cur.edge);
    if (in_a != b.contains(cur.edge)) return cur;
    if (in_a) {
      const NodeId y = g.other_end(cur.node, cur.edge);
      cur = {y, g.next_at(y, cur.edge)};
    } else {
      cur = {cur.node, g.next_at(cur.node, cur.edge)};
    }
    if (cur == start) break;
  }
  throw std::logic_error("distinct trees with identical tours");
}

bool tree_less(const RibbonGraph& g, const SpanningTree& a, const SpanningTree& b) {
  const auto diff = first_difference(g, a, b);
  if (!diff) throw EqualTrees("tree order is strict; trees are equal");
  return diff->node.is_emerald() ? b.contains(diff->edge) : a.contains(diff->edge);
}

IndexSet fundamental_cycle(const RibbonGraph& g, const SpanningTree& tree, EdgeId e) {
  if (tree.contains(e)) throw WrongSide("fundamental cycle needs a non-tree edge");
  const auto adj = tree_adjacency(g, tree.edges(), -1);
  const int src = violet_dense(g, e.index);
  const int dst = emerald_dense(g, e.index);
  std::vector<int> via(g.node_count(), -2);
  std::queue<int> q;
  via[src] = -1;
  q.push(src);
  while (!q.empty()) {
    const int x = q.front();
    q.pop();
    for (int k : adj[x]) {
      const int y = far_end(g, k, x);
      if (via[y] != -2) continue;
      via[y] = k;
      q.push(y);
    }
  }
  IndexSet cycle{e.index};
  for (int x = dst; x != src;) {
    const int k = via[x];
    cycle.insert(k);
    x = far_end(g, k, x);
  }
  return cycle;
}

std::vector<bool> base_component(const RibbonGraph& g, const SpanningTree& tree, EdgeId e) {
  if (!tree.contains(e)) throw WrongSide("base component needs a tree edge");
  const auto adj = tree_adjacency(g, tree.edges(), e.index);
  std::vector<bool> seen(g.node_count(), false);
  std::queue<int> q;
  const int root = g.dense(g.basis_node());
  seen[root] = true;
  q.push(root);
  while (!q.empty()) {
    const int x = q.front();
    q.pop();
    for (int k : adj[x]) {
      const int y = far_end(g, k, x);
      if (!seen[y]) {
        seen[y] = true;
        q.push(y);
      }
    }
  }
  return seen;
}

IndexSet fundamental_cut(const RibbonGraph& g, const SpanningTree& tree, EdgeId e) {
  if (!tree.contains(e)) throw WrongSide("fundamental cut needs a tree edge");
  const auto side = base_component(g, tree, e);
  IndexSet cut;
  for (int k = 0; k < g.edge_count(); ++k)
    if (side[violet_dense(g, k)] != side[emerald_dense(g, k)]) cut.insert(k);
  return cut;
}

void for_each_spanning_tree(const RibbonGraph& g, const std::function<bool(const SpanningTree&)>& visit) {
  const int m = g.edge_count();
  // Returns false once the visitor asked to stop.
  std::function<bool(int, IndexSet, DisjointSets, int)> rec = [&](int k, IndexSet chosen, DisjointSets ds,
                                                                   int comps) -> bool {
    if (comps == 1) return visit(trusted_spanning_tree(chosen));
    if (k == m) return true;
    const int a = ds.find(violet_dense(g, k));
    const int b = ds.find(emerald_dense(g, k));
    if (a != b) {
      DisjointSets contracted = ds;
      contracted.unite(a, b);
      if (!rec(k + 1, chosen.with(k), std::move(contracted), comps - 1)) return false;
    }
    const IndexSet rest = chosen | (IndexSet::full(m) - IndexSet::full(k + 1));
    if (connects_all(g, rest)) return rec(k + 1, chosen, std::move(ds), comps);
    return true;
  };
  rec(0, IndexSet{}, DisjointSets(g.node_count()), g.node_count());
}

std::vector<SpanningTree> enumerate_spanning_trees(const RibbonGraph& g) {
  std::vector<SpanningTree> out;
  for_each_spanning_tree(g, [&](const SpanningTree& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

int tree_degree(const RibbonGraph& g, const SpanningTree& tree, NodeId n) {
  int d = 0;
  for (int k : g.rotation(n))
    if (tree.contains(EdgeId{k})) ++d;
  return d;
}

}  // namespace hypertutte
