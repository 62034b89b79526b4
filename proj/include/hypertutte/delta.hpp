#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypertutte/activities.hpp"
#include "hypertutte/base_family.hpp"
#include "hypertutte/crapo.hpp"
#include "hypertutte/random.hpp"
#include "hypertutte/ribbon_graph.hpp"
#include "hypertutte/tutte.hpp"

namespace hypertutte {

// Explicit base list of an integer polymatroid over named ground elements.
// Validated: non-empty, non-negative, constant coordinate sum, symmetric
// exchange.
class PolymatroidBases {
 public:
  PolymatroidBases(std::vector<std::string> ground, BaseFamily bases);

  // Hypertrees of g over its emerald nodes.
  static PolymatroidBases from_hypertrees(const RibbonGraph& g);
  // Spanning-tree indicator vectors of a graph (its cycle matroid).
  static PolymatroidBases from_graph(const OrdinaryGraph& g);

  const std::vector<std::string>& ground() const { return ground_; }
  int size() const { return static_cast<int>(ground_.size()); }
  const BaseFamily& bases() const { return bases_; }
  // r(e) = max over bases of b(e).
  int rank_cap(int e) const { return caps_[e]; }
  int element(std::string_view name) const;  // -1 if absent
  // "{b, c}" when every base is a 0/1 vector, "(0,1,1)" otherwise.
  std::string describe(const IntVector& b) const;
  // Names of the set bits, concatenated when all names are one character ("cd"),
  // otherwise comma separated.
  std::string describe(IndexSet s) const;

 private:
  std::vector<std::string> ground_;
  BaseFamily bases_;
  IntVector caps_;
  bool matroid_ = false;
};

// YAML:
//   ground: [a, b, c]
//   bases: [[1, 1, 0], [1, 0, 1], [0, 1, 1]]
PolymatroidBases load_polymatroid(std::string_view text);
PolymatroidBases load_polymatroid_file(const std::string& path);

struct DecisionNode {
  int label = 0;
  std::vector<DecisionNode> children;
  friend bool operator==(const DecisionNode&, const DecisionNode&) = default;
};

// Each branch carries every ground element exactly once; a node labelled e
// above the last level has r(e)+1 children, nodes on the last level none.
class DecisionTree {
 public:
  // Throws ValidationError on a malformed tree.
  DecisionTree(DecisionNode root, const PolymatroidBases& p);

  const DecisionNode& root() const { return root_; }
  friend bool operator==(const DecisionTree&, const DecisionTree&) = default;

 private:
  DecisionNode root_;
};

// YAML: nested {label: a, children: [...]}; leaves may omit children.
DecisionTree load_decision_tree(std::string_view text, const PolymatroidBases& p);
DecisionTree load_decision_tree_file(const std::string& path, const PolymatroidBases& p);
std::string render(const DecisionTree& tree, const PolymatroidBases& p);

// Labels along the branch of b: at node x take child number b(x) (0-based).
// BasisOutOfRange if some b(x) has no child.
HyperedgeOrder order_of_basis(const DecisionTree& tree, const IntVector& b);

// Max-rule activities in the order of b's branch.
ActivityRecord delta_activities(const DecisionTree& tree, const PolymatroidBases& p, const IntVector& b);

// Internal elements that some base lowers, external ones that some base raises.
ActivityRecord nontrivial(const BaseFamily& bases, const IntVector& b, const ActivityRecord& plain);

struct BasisActivity {
  IntVector basis;
  HyperedgeOrder order;
  ActivityRecord plain;
  ActivityRecord nontrivial;
};

// One entry per base, in the family's order.
using ActivityAssignment = std::vector<BasisActivity>;

ActivityAssignment assign(const BaseFamily& bases, const std::function<HyperedgeOrder(const IntVector&)>& order_of,
                          ActivityRule rule);
ActivityAssignment delta_assignment(const DecisionTree& tree, const PolymatroidBases& p);
ActivityAssignment embedding_assignment(const RibbonGraph& g);

// Per-base orders keyed by base vector; min rule. ValidationError if a base
// has no order.
ActivityAssignment fixed_tree_order_activities(const PolymatroidBases& p,
                                               const std::map<IntVector, HyperedgeOrder>& orders);

// YAML list of {tree: [c, d], order: [a, b, c, d]}; trees given as the edge
// names in them, resolved against the graph matroid p.
std::map<IntVector, HyperedgeOrder> load_tree_orders(std::string_view text, const PolymatroidBases& p);
std::map<IntVector, HyperedgeOrder> load_tree_orders_file(const std::string& path, const PolymatroidBases& p);

std::vector<CrapoInterval> assignment_intervals(const ActivityAssignment& assignment);
Polynomial assignment_polynomial(const ActivityAssignment& assignment);

PartitionReport delta_crapo_verify(const DecisionTree& tree, const PolymatroidBases& p,
                                   const std::optional<LatticeBox>& box = std::nullopt, int jobs = 1);

struct ObstructionVerdict {
  // Smallest element that is nontrivially active for no base, if any.
  std::optional<int> exempt;
  // Union of nontrivially active elements over all bases.
  IndexSet active_somewhere;
  bool no_exempt() const { return !exempt.has_value(); }
};

ObstructionVerdict obstruction_check(const ActivityAssignment& assignment, int ground_size);

struct SearchLimits {
  int max_ground = 5;
  int max_rank_cap = 3;
};

// A decision tree whose max-rule activities equal the target's plain sets
// for every base, or nullopt after exhausting all trees. Subtrees of distinct
// children are searched independently and memoized on (used labels, bases
// reaching the node). SearchSpaceTooLarge beyond the limits.
std::optional<DecisionTree> exhaustive_delta_search(const PolymatroidBases& p, const ActivityAssignment& target,
                                                    SearchLimits limits = {});

// Uniformly random label at every node.
DecisionTree random_decision_tree(const PolymatroidBases& p, Rng& rng);

}  // namespace hypertutte
