#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hypertutte/index_set.hpp"

namespace hypertutte {

enum class Color { violet, emerald };

struct NodeId {
  Color color = Color::violet;
  int index = 0;

  static NodeId violet(int i) { return {Color::violet, i}; }
  static NodeId emerald(int i) { return {Color::emerald, i}; }
  bool is_violet() const { return color == Color::violet; }
  bool is_emerald() const { return color == Color::emerald; }

  friend auto operator<=>(const NodeId&, const NodeId&) = default;
};

struct EdgeId {
  int index = 0;
  friend auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

// Endpoints of an edge of the bipartite graph: one violet, one emerald node.
struct EdgeEnds {
  int violet = 0;
  int emerald = 0;
  friend bool operator==(const EdgeEnds&, const EdgeEnds&) = default;
};

// "v3" / "e0" style reference; throws ParseError on anything else.
NodeId parse_node(std::string_view text);
std::string node_name(NodeId n);

// A connected bipartite graph (violet nodes = vertices, emerald nodes =
// hyperedges of a hypergraph) with a rotation system and a basis
// (b0, beta0). Immutable after construction; the constructor validates every
// invariant.
class RibbonGraph {
 public:
  struct Spec {
    int violet_count = 0;
    int emerald_count = 0;
    std::vector<EdgeEnds> edges;
    // Cyclic order of incident edge indices; keyed by node.
    std::map<NodeId, std::vector<int>> rotation;
    NodeId basis_node;
    int basis_edge = 0;
    // Optional display names (e.g. "u", "a"); empty means default naming.
    std::map<NodeId, std::string> labels;
  };

  explicit RibbonGraph(Spec spec);

  int violet_count() const { return spec_.violet_count; }
  int emerald_count() const { return spec_.emerald_count; }
  int node_count() const { return spec_.violet_count + spec_.emerald_count; }
  int edge_count() const { return static_cast<int>(spec_.edges.size()); }
  const std::vector<EdgeEnds>& edges() const { return spec_.edges; }
  const EdgeEnds& ends(EdgeId e) const { return spec_.edges[e.index]; }

  NodeId basis_node() const { return spec_.basis_node; }
  EdgeId basis_edge() const { return EdgeId{spec_.basis_edge}; }

  // Dense index: violet nodes first, then emerald nodes.
  int dense(NodeId n) const { return n.is_violet() ? n.index : spec_.violet_count + n.index; }
  NodeId node_at(int dense_index) const;

  const std::vector<int>& rotation(NodeId n) const { return rotation_[dense(n)]; }
  int degree(NodeId n) const { return static_cast<int>(rotation(n).size()); }
  bool incident(NodeId n, EdgeId e) const;

  // Endpoint of e that is not n.
  NodeId other_end(NodeId n, EdgeId e) const;
  // Successor of e in the cyclic rotation at n; NotIncident if e is not at n.
  EdgeId next_at(NodeId n, EdgeId e) const;

  // Edges incident to emerald node j (in rotation order).
  const std::vector<int>& emerald_edges(int j) const { return rotation(NodeId::emerald(j)); }

  std::string label(NodeId n) const;
  // Edge name from its ends, e.g. "v0e3"; parallel edges get a "/k" suffix.
  std::string edge_label(EdgeId e) const;
  const Spec& spec() const { return spec_; }

  // Same graph with a different rotation system / basis (validated).
  RibbonGraph with_rotation(std::map<NodeId, std::vector<int>> rotation, NodeId basis_node,
                            int basis_edge) const;

  friend bool operator==(const RibbonGraph& a, const RibbonGraph& b);

 private:
  Spec spec_;
  std::vector<std::vector<int>> rotation_;          // by dense node index
  std::vector<std::array<int, 2>> position_;        // per edge: slot at violet end, slot at emerald end
};

// Text format (YAML):
//   violet: 3
//   emerald: 4
//   edges: [[0, 0], [0, 1], ...]          # [violet index, emerald index]; edge index = position
//   rotation: {v0: [1, 2, 0], e0: [3, 0], ...}
//   basis: [v0, 0]
//   labels: {v0: u, e0: a}                # optional
RibbonGraph load_ribbon_graph(std::string_view text);
RibbonGraph load_ribbon_graph_file(const std::string& path);
std::string render(const RibbonGraph& g);

}  // namespace hypertutte
