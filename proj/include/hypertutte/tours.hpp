#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "hypertutte/index_set.hpp"
#include "hypertutte/ribbon_graph.hpp"

namespace hypertutte {

// Edge set of a spanning tree of a RibbonGraph. Construction through
// make_spanning_tree() checks size, acyclicity and connectivity.
class SpanningTree {
 public:
  SpanningTree() = default;

  IndexSet edges() const { return edges_; }
  bool contains(EdgeId e) const { return edges_.contains(e.index); }

  friend bool operator==(const SpanningTree&, const SpanningTree&) = default;
  friend auto operator<=>(const SpanningTree& a, const SpanningTree& b) { return a.edges_ <=> b.edges_; }

 private:
  explicit SpanningTree(IndexSet edges) : edges_(edges) {}
  IndexSet edges_;

  friend SpanningTree make_spanning_tree(const RibbonGraph&, IndexSet);
  friend SpanningTree trusted_spanning_tree(IndexSet);
};

// Throws ValidationError unless `edges` is a spanning tree of g.
SpanningTree make_spanning_tree(const RibbonGraph& g, IndexSet edges);
bool is_spanning_tree(const RibbonGraph& g, IndexSet edges);
// For enumerators that produce trees by construction.
SpanningTree trusted_spanning_tree(IndexSet edges);

struct TourStep {
  NodeId node;
  EdgeId edge;
  friend bool operator==(const TourStep&, const TourStep&) = default;
};

using Tour = std::vector<TourStep>;

// Tour: from (x, xy), a non-tree edge moves to (x, xy+), a tree edge
// to (y, yx+). Stops right before (b0, beta0) would recur.
Tour tour(const RibbonGraph& g, const SpanningTree& tree);

// Earliest tour step whose edge lies in exactly one of the trees, found by
// stepping both tours in lockstep. nullopt iff the trees are equal.
std::optional<TourStep> first_difference(const RibbonGraph& g, const SpanningTree& a, const SpanningTree& b);

// a < b in the tree order: at the first difference (x, xy), either x is
// emerald and xy is in b only, or x is violet and xy is in a only.
// EqualTrees if a == b.
bool tree_less(const RibbonGraph& g, const SpanningTree& a, const SpanningTree& b);

// Unique cycle of tree + e (e must not be a tree edge), as an edge set.
IndexSet fundamental_cycle(const RibbonGraph& g, const SpanningTree& tree, EdgeId e);
// Edges joining the two components of tree - e (e must be a tree edge).
IndexSet fundamental_cut(const RibbonGraph& g, const SpanningTree& tree, EdgeId e);
// Dense node indices of the component of tree - e holding b0.
std::vector<bool> base_component(const RibbonGraph& g, const SpanningTree& tree, EdgeId e);

// Every spanning tree exactly once, by contraction/deletion on the lowest
// undecided edge index (contract branch first). Visitor returns false to stop.
void for_each_spanning_tree(const RibbonGraph& g, const std::function<bool(const SpanningTree&)>& visit);
std::vector<SpanningTree> enumerate_spanning_trees(const RibbonGraph& g);

// Degree of n in the tree.
int tree_degree(const RibbonGraph& g, const SpanningTree& tree, NodeId n);

}  // namespace hypertutte
