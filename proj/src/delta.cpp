#include "hypertutte/delta.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "hypertutte/errors.hpp"
#include "hypertutte/hypertrees.hpp"
#include "hypertutte/jaeger.hpp"

namespace hypertutte {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

YAML::Node parse_yaml(std::string_view text, const char* what) {
  try {
    return YAML::Load(std::string(text));
  } catch (const YAML::Exception& ex) {
    throw ParseError(std::string(what) + ": " + ex.what());
  }
}

}  // namespace

PolymatroidBases::PolymatroidBases(std::vector<std::string> ground, BaseFamily bases)
    : ground_(std::move(ground)), bases_(std::move(bases)) {
  if (bases_.empty()) throw ValidationError("polymatroid: no bases");
  if (bases_.dimension() != size()) throw ValidationError("polymatroid: base length differs from ground set");
  if (size() > IndexSet::kCapacity) throw ValidationError("polymatroid: ground set too large");
  {
    std::vector<std::string> sorted = ground_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ValidationError("polymatroid: duplicate ground element");
  }
  const long sum = std::accumulate(bases_[0].begin(), bases_[0].end(), 0L);
  for (const IntVector& b : bases_.members()) {
    if (std::any_of(b.begin(), b.end(), [](int v) { return v < 0; }))
      throw ValidationError("polymatroid: negative coordinate");
    if (std::accumulate(b.begin(), b.end(), 0L) != sum) throw ValidationError("polymatroid: coordinate sums differ");
  }
  for (const IntVector& b : bases_.members())
    for (const IntVector& b2 : bases_.members())
      for (int e = 0; e < size(); ++e)
        if (b[e] < b2[e]) {
          try {
            exchange_witness(bases_, b, b2, e);
          } catch (const NoWitness&) {
            throw ValidationError("polymatroid: exchange axiom fails for " + describe(b) + ", " + describe(b2) +
                                  " at " + ground_[e]);
          }
        }
  caps_ = bases_.upper();
  matroid_ = std::all_of(bases_.members().begin(), bases_.members().end(), [](const IntVector& b) {
    return std::all_of(b.begin(), b.end(), [](int v) { return v <= 1; });
  });
}

PolymatroidBases PolymatroidBases::from_hypertrees(const RibbonGraph& g) {
  std::vector<std::string> ground;
  for (int j = 0; j < g.emerald_count(); ++j) ground.push_back(g.label(NodeId::emerald(j)));
  return PolymatroidBases(std::move(ground), enumerate_hypertrees(g));
}

PolymatroidBases PolymatroidBases::from_graph(const OrdinaryGraph& g) {
  return PolymatroidBases(g.edge_names, enumerate_hypertrees(to_ribbon_graph(g)));
}

int PolymatroidBases::element(std::string_view name) const {
  auto it = std::find(ground_.begin(), ground_.end(), name);
  return it == ground_.end() ? -1 : static_cast<int>(it - ground_.begin());
}

std::string PolymatroidBases::describe(const IntVector& b) const {
  std::ostringstream os;
  if (matroid_) {
    os << '{';
    bool first = true;
    for (std::size_t e = 0; e < b.size(); ++e)
      if (b[e] == 1) {
        os << (first ? "" : ", ") << ground_[e];
        first = false;
      }
    os << '}';
  } else {
    os << '(';
    for (std::size_t e = 0; e < b.size(); ++e) os << (e ? "," : "") << b[e];
    os << ')';
  }
  return os.str();
}

std::string PolymatroidBases::describe(IndexSet s) const {
  const bool short_names =
      std::all_of(ground_.begin(), ground_.end(), [](const std::string& n) { return n.size() == 1; });
  std::string out;
  for (int e : s.items()) {
    if (!short_names && !out.empty()) out += ',';
    out += ground_[e];
  }
  return out;
}

PolymatroidBases load_polymatroid(std::string_view text) {
  const YAML::Node root = parse_yaml(text, "polymatroid");
  if (!root.IsMap()) throw ParseError("polymatroid: expected a mapping");
  for (const auto& kv : root) {
    const auto key = kv.first.as<std::string>();
    if (key != "ground" && key != "bases") throw ParseError("polymatroid: unknown key '" + key + "'");
  }
  if (!root["ground"] || !root["bases"]) throw ParseError("polymatroid: 'ground' and 'bases' are required");
  try {
    auto ground = root["ground"].as<std::vector<std::string>>();
    std::vector<IntVector> bases;
    for (const auto& b : root["bases"]) {
      auto v = b.as<IntVector>();
      if (v.size() != ground.size()) throw ValidationError("polymatroid: base length differs from ground set");
      bases.push_back(std::move(v));
    }
    return PolymatroidBases(std::move(ground), BaseFamily(std::move(bases)));
  } catch (const YAML::Exception& ex) {
    throw ParseError(std::string("polymatroid: ") + ex.what());
  }
}

PolymatroidBases load_polymatroid_file(const std::string& path) { return load_polymatroid(read_file(path)); }

namespace {

void validate_node(const DecisionNode& node, int depth, IndexSet used, const PolymatroidBases& p) {
  const int n = p.size();
  if (node.label < 0 || node.label >= n) throw ValidationError("decision tree: label out of range");
  if (used.contains(node.label))
    throw ValidationError("decision tree: " + p.ground()[node.label] + " repeats on a branch");
  if (depth == n - 1) {
    if (!node.children.empty()) throw ValidationError("decision tree: branch longer than the ground set");
    return;
  }
  const auto arity = static_cast<std::size_t>(p.rank_cap(node.label) + 1);
  if (node.children.size() != arity)
    throw ValidationError("decision tree: node " + p.ground()[node.label] + " needs " + std::to_string(arity) +
                          " children, has " + std::to_string(node.children.size()));
  for (const DecisionNode& child : node.children) validate_node(child, depth + 1, used.with(node.label), p);
}

DecisionNode parse_node(const YAML::Node& y, const PolymatroidBases& p) {
  if (!y.IsMap()) throw ParseError("decision tree: node must be a mapping");
  for (const auto& kv : y) {
    const auto key = kv.first.as<std::string>();
    if (key != "label" && key != "children") throw ParseError("decision tree: unknown key '" + key + "'");
  }
  if (!y["label"]) throw ParseError("decision tree: node without label");
  DecisionNode node;
  const auto name = y["label"].as<std::string>();
  node.label = p.element(name);
  if (node.label < 0) throw ValidationError("decision tree: unknown element " + name);
  if (y["children"]) {
    if (!y["children"].IsSequence()) throw ParseError("decision tree: children must be a list");
    for (const auto& c : y["children"]) node.children.push_back(parse_node(c, p));
  }
  return node;
}

void render_node(std::ostream& os, const DecisionNode& node, const PolymatroidBases& p) {
  os << "{label: " << p.ground()[node.label];
  if (!node.children.empty()) {
    os << ", children: [";
    for (std::size_t k = 0; k < node.children.size(); ++k) {
      if (k) os << ", ";
      render_node(os, node.children[k], p);
    }
    os << ']';
  }
  os << '}';
}

}  // namespace

DecisionTree::DecisionTree(DecisionNode root, const PolymatroidBases& p) : root_(std::move(root)) {
  validate_node(root_, 0, IndexSet{}, p);
}

DecisionTree load_decision_tree(std::string_view text, const PolymatroidBases& p) {
  const YAML::Node root = parse_yaml(text, "decision tree");
  try {
    return DecisionTree(parse_node(root, p), p);
  } catch (const YAML::Exception& ex) {
    throw ParseError(std::string("decision tree: ") + ex.what());
  }
}

DecisionTree load_decision_tree_file(const std::string& path, const PolymatroidBases& p) {
  return load_decision_tree(read_file(path), p);
}

std::string render(const DecisionTree& tree, const PolymatroidBases& p) {
  std::ostringstream os;
  render_node(os, tree.root(), p);
  os << '\n';
  return os.str();
}

HyperedgeOrder order_of_basis(const DecisionTree& tree, const IntVector& b) {
  std::vector<int> seq;
  const DecisionNode* node = &tree.root();
  while (true) {
    seq.push_back(node->label);
    if (node->children.empty()) break;
    if (node->label >= static_cast<int>(b.size())) throw BasisOutOfRange("basis shorter than the tree");
    const int v = b[node->label];
    if (v < 0 || v >= static_cast<int>(node->children.size()))
      throw BasisOutOfRange("value " + std::to_string(v) + " has no child");
    node = &node->children[v];
  }
  if (seq.size() != b.size()) throw BasisOutOfRange("basis length differs from the ground set");
  return HyperedgeOrder(std::move(seq));
}

ActivityRecord delta_activities(const DecisionTree& tree, const PolymatroidBases& p, const IntVector& b) {
  return activities(p.bases(), b, order_of_basis(tree, b), ActivityRule::max);
}

ActivityRecord nontrivial(const BaseFamily& bases, const IntVector& b, const ActivityRecord& plain) {
  const IntVector lo = bases.lower();
  const IntVector hi = bases.upper();
  ActivityRecord out;
  for (int e : plain.internal.items())
    if (lo[e] < b[e]) out.internal.insert(e);
  for (int e : plain.external.items())
    if (hi[e] > b[e]) out.external.insert(e);
  return out;
}

ActivityAssignment assign(const BaseFamily& bases, const std::function<HyperedgeOrder(const IntVector&)>& order_of,
                          ActivityRule rule) {
  ActivityAssignment out;
  for (const IntVector& b : bases.members()) {
    BasisActivity entry;
    entry.basis = b;
    entry.order = order_of(b);
    entry.plain = activities(bases, b, entry.order, rule);
    entry.nontrivial = nontrivial(bases, b, entry.plain);
    out.push_back(std::move(entry));
  }
  return out;
}

ActivityAssignment delta_assignment(const DecisionTree& tree, const PolymatroidBases& p) {
  return assign(p.bases(), [&](const IntVector& b) { return order_of_basis(tree, b); }, ActivityRule::max);
}

ActivityAssignment embedding_assignment(const RibbonGraph& g) {
  return assign(enumerate_hypertrees(g), [&](const IntVector& h) { return order_emerald(g, h); },
                ActivityRule::min);
}

ActivityAssignment fixed_tree_order_activities(const PolymatroidBases& p,
                                               const std::map<IntVector, HyperedgeOrder>& orders) {
  return assign(
      p.bases(),
      [&](const IntVector& b) {
        auto it = orders.find(b);
        if (it == orders.end()) throw ValidationError("no order for base " + p.describe(b));
        if (it->second.size() != p.size()) throw ValidationError("order for " + p.describe(b) + " has wrong length");
        return it->second;
      },
      ActivityRule::min);
}

std::map<IntVector, HyperedgeOrder> load_tree_orders(std::string_view text, const PolymatroidBases& p) {
  const YAML::Node root = parse_yaml(text, "tree orders");
  if (!root.IsSequence()) throw ParseError("tree orders: expected a list");
  std::map<IntVector, HyperedgeOrder> out;
  auto resolve = [&](const std::string& name) {
    const int e = p.element(name);
    if (e < 0) throw ValidationError("tree orders: unknown element " + name);
    return e;
  };
  try {
    for (const auto& entry : root) {
      if (!entry.IsMap() || !entry["tree"] || !entry["order"] || entry.size() != 2)
        throw ParseError("tree orders: entries are {tree: [...], order: [...]}");
      IntVector b(p.size(), 0);
      for (const auto& name : entry["tree"].as<std::vector<std::string>>()) b[resolve(name)] = 1;
      if (!p.bases().contains(b)) throw ValidationError("tree orders: " + p.describe(b) + " is not a base");
      std::vector<int> seq;
      for (const auto& name : entry["order"].as<std::vector<std::string>>()) seq.push_back(resolve(name));
      if (static_cast<int>(seq.size()) != p.size()) throw ValidationError("tree orders: order must list every element");
      HyperedgeOrder order;
      try {
        order = HyperedgeOrder(std::move(seq));
      } catch (const std::invalid_argument&) {
        throw ValidationError("tree orders: order repeats an element");
      }
      if (!out.emplace(b, std::move(order)).second)
        throw ValidationError("tree orders: " + p.describe(b) + " listed twice");
    }
  } catch (const YAML::Exception& ex) {
    throw ParseError(std::string("tree orders: ") + ex.what());
  }
  return out;
}

std::map<IntVector, HyperedgeOrder> load_tree_orders_file(const std::string& path, const PolymatroidBases& p) {
  return load_tree_orders(read_file(path), p);
}

std::vector<CrapoInterval> assignment_intervals(const ActivityAssignment& assignment) {
  std::vector<CrapoInterval> out;
  for (const BasisActivity& a : assignment) out.push_back(interval_from(a.basis, a.plain));
  return out;
}

Polynomial assignment_polynomial(const ActivityAssignment& assignment) {
  Polynomial sum;
  for (const BasisActivity& a : assignment) sum += activity_monomial(a.plain);
  return sum;
}

PartitionReport delta_crapo_verify(const DecisionTree& tree, const PolymatroidBases& p,
                                   const std::optional<LatticeBox>& box, int jobs) {
  const LatticeBox window = box ? *box : LatticeBox::around(p.bases(), 2, 2);
  return verify_partition(p.bases(), assignment_intervals(delta_assignment(tree, p)), window, jobs);
}

ObstructionVerdict obstruction_check(const ActivityAssignment& assignment, int ground_size) {
  ObstructionVerdict verdict;
  for (const BasisActivity& a : assignment)
    verdict.active_somewhere = verdict.active_somewhere | a.nontrivial.internal | a.nontrivial.external;
  for (int e = 0; e < ground_size; ++e)
    if (!verdict.active_somewhere.contains(e)) {
      verdict.exempt = e;
      break;
    }
  return verdict;
}

namespace {

class DeltaSearch {
 public:
  DeltaSearch(const PolymatroidBases& p, const ActivityAssignment& target) : p_(p) {
    if (target.size() != p.bases().size()) throw ValidationError("target must assign every base once");
    target_.resize(target.size());
    std::vector<bool> seen(target.size(), false);
    for (const BasisActivity& a : target) {
      const int k = p.bases().index_of(a.basis);
      if (k < 0) throw ValidationError("target lists a vector that is not a base");
      if (seen[k]) throw ValidationError("target assigns a base twice");
      seen[k] = true;
      target_[k] = a.plain;
    }
  }

  std::optional<DecisionNode> solve(IndexSet used, const std::vector<int>& reach) {
    auto key = std::make_pair(used.bits(), reach);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::optional<DecisionNode> result;
    const IndexSet remaining = IndexSet::full(p_.size()) - used;
    for (int x : remaining.items()) {
      const IndexSet later = remaining.without(x);
      if (!placement_matches(x, later, reach)) continue;
      DecisionNode node{x, {}};
      bool ok = true;
      if (!later.empty()) {
        for (int v = 0; v <= p_.rank_cap(x) && ok; ++v) {
          std::vector<int> sub;
          for (int k : reach)
            if (p_.bases()[k][x] == v) sub.push_back(k);
          auto child = solve(used.with(x), sub);
          if (child)
            node.children.push_back(std::move(*child));
          else
            ok = false;
        }
      }
      if (ok) {
        result = std::move(node);
        break;
      }
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  // Max rule: x's activity for b depends only on the elements after it.
  bool placement_matches(int x, IndexSet later, const std::vector<int>& reach) const {
    for (int k : reach) {
      const IntVector& b = p_.bases()[k];
      bool internal = true, external = true;
      for (int f : later.items()) {
        if (internal && p_.bases().contains(shifted(b, f, x))) internal = false;
        if (external && p_.bases().contains(shifted(b, x, f))) external = false;
      }
      if (internal != target_[k].internal.contains(x) || external != target_[k].external.contains(x)) return false;
    }
    return true;
  }

  const PolymatroidBases& p_;
  std::vector<ActivityRecord> target_;
  std::map<std::pair<std::uint64_t, std::vector<int>>, std::optional<DecisionNode>> memo_;
};

DecisionNode random_node(const PolymatroidBases& p, IndexSet used, Rng& rng) {
  const std::vector<int> remaining = (IndexSet::full(p.size()) - used).items();
  DecisionNode node{rng.pick(remaining), {}};
  if (remaining.size() > 1)
    for (int v = 0; v <= p.rank_cap(node.label); ++v) node.children.push_back(random_node(p, used.with(node.label), rng));
  return node;
}

}  // namespace

std::optional<DecisionTree> exhaustive_delta_search(const PolymatroidBases& p, const ActivityAssignment& target,
                                                    SearchLimits limits) {
  if (p.size() > limits.max_ground)
    throw SearchSpaceTooLarge("ground set of " + std::to_string(p.size()) + " exceeds " +
                              std::to_string(limits.max_ground));
  for (int e = 0; e < p.size(); ++e)
    if (p.rank_cap(e) > limits.max_rank_cap)
      throw SearchSpaceTooLarge("rank cap of " + p.ground()[e] + " exceeds " + std::to_string(limits.max_rank_cap));
  DeltaSearch search(p, target);
  std::vector<int> all(p.bases().size());
  std::iota(all.begin(), all.end(), 0);
  auto root = search.solve(IndexSet{}, all);
  if (!root) return std::nullopt;
  return DecisionTree(std::move(*root), p);
}

DecisionTree random_decision_tree(const PolymatroidBases& p, Rng& rng) {
  return DecisionTree(random_node(p, IndexSet{}, rng), p);
}

}  // namespace hypertutte
