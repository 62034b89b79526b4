#include "hypertutte/ribbon_graph.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

#include "hypertutte/errors.hpp"

namespace hypertutte {

NodeId parse_node(std::string_view text) {
  if (text.size() < 2 || (text[0] != 'v' && text[0] != 'e'))
    throw ParseError("bad node reference '" + std::string(text) + "'");
  int index = 0;
  auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), index);
  if (ec != std::errc{} || ptr != text.data() + text.size() || index < 0)
    throw ParseError("bad node reference '" + std::string(text) + "'");
  return text[0] == 'v' ? NodeId::violet(index) : NodeId::emerald(index);
}

std::string node_name(NodeId n) { return (n.is_violet() ? "v" : "e") + std::to_string(n.index); }

RibbonGraph::RibbonGraph(Spec spec) : spec_(std::move(spec)) {
  const int nv = spec_.violet_count;
  const int ne = spec_.emerald_count;
  const int m = edge_count();
  if (nv < 1 || ne < 1) throw ValidationError("need at least one violet and one emerald node");
  if (m > IndexSet::kCapacity || ne > IndexSet::kCapacity)
    throw ValidationError("at most 64 edges and 64 emerald nodes are supported");
  for (int k = 0; k < m; ++k) {
    const auto& e = spec_.edges[k];
    if (e.violet < 0 || e.violet >= nv || e.emerald < 0 || e.emerald >= ne)
      throw ValidationError("edge " + std::to_string(k) + " has an endpoint out of range");
  }

  rotation_.assign(nv + ne, {});
  position_.assign(m, {-1, -1});
  for (const auto& [node, cyc] : spec_.rotation) {
    if ((node.is_violet() && node.index >= nv) || (node.is_emerald() && node.index >= ne) || node.index < 0)
      throw ValidationError("rotation given for unknown node " + node_name(node));
    const int side = node.is_violet() ? 0 : 1;
    for (std::size_t slot = 0; slot < cyc.size(); ++slot) {
      const int k = cyc[slot];
      if (k < 0 || k >= m) throw ValidationError("rotation at " + node_name(node) + " names unknown edge");
      const auto& e = spec_.edges[k];
      if ((side == 0 ? e.violet : e.emerald) != node.index)
        throw ValidationError("rotation at " + node_name(node) + " lists non-incident edge " +
                              std::to_string(k));
      if (position_[k][side] != -1)
        throw ValidationError("edge " + std::to_string(k) + " repeated in rotation at " + node_name(node));
      position_[k][side] = static_cast<int>(slot);
    }
    rotation_[dense(node)] = cyc;
  }
  for (int k = 0; k < m; ++k)
    if (position_[k][0] == -1 || position_[k][1] == -1)
      throw ValidationError("edge " + std::to_string(k) + " missing from a rotation");

  // Connectivity (every node must be reached).
  std::vector<int> parent(nv + ne);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : spec_.edges) parent[find(e.violet)] = find(nv + e.emerald);
  for (int x = 0; x < nv + ne; ++x)
    if (find(x) != find(0)) throw ValidationError("graph is disconnected");

  if (spec_.basis_edge < 0 || spec_.basis_edge >= m ||
      (spec_.basis_node.is_violet() && spec_.basis_node.index >= nv) ||
      (spec_.basis_node.is_emerald() && spec_.basis_node.index >= ne) ||
      !incident(spec_.basis_node, EdgeId{spec_.basis_edge}))
    throw ValidationError("basis edge is not incident to the basis node");
}

NodeId RibbonGraph::node_at(int d) const {
  return d < spec_.violet_count ? NodeId::violet(d) : NodeId::emerald(d - spec_.violet_count);
}

bool RibbonGraph::incident(NodeId n, EdgeId e) const {
  if (e.index < 0 || e.index >= edge_count()) return false;
  const auto& ends = spec_.edges[e.index];
  return n.is_violet() ? ends.violet == n.index : ends.emerald == n.index;
}

NodeId RibbonGraph::other_end(NodeId n, EdgeId e) const {
  if (!incident(n, e)) throw NotIncident(edge_label(e) + " is not incident to " + label(n));
  const auto& ends = spec_.edges[e.index];
  return n.is_violet() ? NodeId::emerald(ends.emerald) : NodeId::violet(ends.violet);
}

EdgeId RibbonGraph::next_at(NodeId n, EdgeId e) const {
  if (!incident(n, e)) throw NotIncident("edge " + std::to_string(e.index) + " is not incident to " + node_name(n));
  const auto& cyc = rotation_[dense(n)];
  const int slot = position_[e.index][n.is_violet() ? 0 : 1];
  return EdgeId{cyc[(slot + 1) % cyc.size()]};
}

std::string RibbonGraph::label(NodeId n) const {
  auto it = spec_.labels.find(n);
  return it == spec_.labels.end() ? node_name(n) : it->second;
}

std::string RibbonGraph::edge_label(EdgeId e) const {
  const auto& ends = spec_.edges.at(e.index);
  std::string name = label(NodeId::violet(ends.violet)) + label(NodeId::emerald(ends.emerald));
  int copy = 0;
  int copies = 0;
  for (int k = 0; k < edge_count(); ++k) {
    if (spec_.edges[k] == ends) {
      if (k < e.index) ++copy;
      ++copies;
    }
  }
  if (copies > 1) name += "/" + std::to_string(copy);
  return name;
}

RibbonGraph RibbonGraph::with_rotation(std::map<NodeId, std::vector<int>> rotation, NodeId basis_node,
                                       int basis_edge) const {
  Spec s = spec_;
  s.rotation = std::move(rotation);
  s.basis_node = basis_node;
  s.basis_edge = basis_edge;
  return RibbonGraph(std::move(s));
}

bool operator==(const RibbonGraph& a, const RibbonGraph& b) {
  return a.spec_.violet_count == b.spec_.violet_count && a.spec_.emerald_count == b.spec_.emerald_count &&
         a.spec_.edges == b.spec_.edges && a.spec_.rotation == b.spec_.rotation &&
         a.spec_.basis_node == b.spec_.basis_node && a.spec_.basis_edge == b.spec_.basis_edge &&
         a.spec_.labels == b.spec_.labels;
}

namespace {

int as_int(const YAML::Node& n, const std::string& what) {
  try {
    return n.as<int>();
  } catch (const YAML::Exception&) {
    throw ParseError(what + " must be an integer");
  }
}

}  // namespace

RibbonGraph load_ribbon_graph(std::string_view text) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::Exception& e) {
    throw ParseError(std::string("malformed instance: ") + e.what());
  }
  if (!root.IsMap()) throw ParseError("instance must be a mapping");

  static const std::vector<std::string> known = {"violet", "emerald", "edges", "rotation", "basis", "labels"};
  for (const auto& kv : root) {
    const auto key = kv.first.as<std::string>();
    if (std::find(known.begin(), known.end(), key) == known.end()) throw ParseError("unknown key '" + key + "'");
  }
  for (const char* required : {"violet", "emerald", "edges", "rotation", "basis"})
    if (!root[required]) throw ParseError(std::string("missing key '") + required + "'");

  RibbonGraph::Spec spec;
  spec.violet_count = as_int(root["violet"], "violet");
  spec.emerald_count = as_int(root["emerald"], "emerald");

  const auto edges = root["edges"];
  if (!edges.IsSequence()) throw ParseError("edges must be a list");
  for (const auto& e : edges) {
    if (!e.IsSequence() || e.size() != 2) throw ParseError("each edge must be [violet, emerald]");
    spec.edges.push_back({as_int(e[0], "edge endpoint"), as_int(e[1], "edge endpoint")});
  }

  const auto rot = root["rotation"];
  if (!rot.IsMap()) throw ParseError("rotation must be a mapping");
  for (const auto& kv : rot) {
    const NodeId node = parse_node(kv.first.as<std::string>());
    if (!kv.second.IsSequence()) throw ParseError("rotation entry must be a list");
    std::vector<int> cyc;
    for (const auto& k : kv.second) cyc.push_back(as_int(k, "rotation entry"));
    if (!spec.rotation.emplace(node, std::move(cyc)).second)
      throw ParseError("duplicate rotation for " + node_name(node));
  }

  const auto basis = root["basis"];
  if (!basis.IsSequence() || basis.size() != 2) throw ParseError("basis must be [node, edge]");
  spec.basis_node = parse_node(basis[0].as<std::string>());
  spec.basis_edge = as_int(basis[1], "basis edge");

  if (const auto labels = root["labels"]) {
    if (!labels.IsMap()) throw ParseError("labels must be a mapping");
    for (const auto& kv : labels) spec.labels[parse_node(kv.first.as<std::string>())] = kv.second.as<std::string>();
  }

  // Every node needs a rotation entry; missing ones are a validation failure.
  for (int i = 0; i < spec.violet_count; ++i)
    if (!spec.rotation.count(NodeId::violet(i))) throw ValidationError("no rotation for v" + std::to_string(i));
  for (int j = 0; j < spec.emerald_count; ++j)
    if (!spec.rotation.count(NodeId::emerald(j))) throw ValidationError("no rotation for e" + std::to_string(j));

  return RibbonGraph(std::move(spec));
}

RibbonGraph load_ribbon_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return load_ribbon_graph(buf.str());
}

std::string render(const RibbonGraph& g) {
  const auto& s = g.spec();
  std::ostringstream out;
  out << "violet: " << s.violet_count << "\n";
  out << "emerald: " << s.emerald_count << "\n";
  out << "edges: [";
  for (std::size_t k = 0; k < s.edges.size(); ++k)
    out << (k ? ", " : "") << "[" << s.edges[k].violet << ", " << s.edges[k].emerald << "]";
  out << "]\n";
  out << "rotation:\n";
  for (const auto& [node, cyc] : s.rotation) {
    out << "  " << node_name(node) << ": [";
    for (std::size_t i = 0; i < cyc.size(); ++i) out << (i ? ", " : "") << cyc[i];
    out << "]\n";
  }
  out << "basis: [" << node_name(s.basis_node) << ", " << s.basis_edge << "]\n";
  if (!s.labels.empty()) {
    out << "labels: {";
    bool first = true;
    for (const auto& [node, name] : s.labels) {
      out << (first ? "" : ", ") << node_name(node) << ": " << name;
      first = false;
    }
    out << "}\n";
  }
  return out.str();
}

}  // namespace hypertutte
