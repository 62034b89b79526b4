#include "hypertutte/tutte.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "hypertutte/errors.hpp"
#include "hypertutte/jaeger.hpp"
#include "hypertutte/lattice.hpp"

namespace hypertutte {

Polynomial activity_monomial(const ActivityRecord& record) {
  const Polynomial both = Polynomial::x() + Polynomial::y() - Polynomial(1);
  return Polynomial::monomial(1, record.only_internal(), record.only_external()) * both.pow(record.both());
}

Polynomial tutte_from_activities(const HypertreeSet& all,
                                 const std::function<ActivityRecord(const Hypertree&)>& activities_of) {
  Polynomial sum;
  for (const Hypertree& h : all.members()) sum += activity_monomial(activities_of(h));
  return sum;
}

Polynomial tutte_embedding(const RibbonGraph& g, const HypertreeSet& all) {
  return tutte_from_activities(all, [&](const Hypertree& h) { return embedding_activities(g, all, h); });
}

Polynomial tutte_embedding(const RibbonGraph& g) { return tutte_embedding(g, enumerate_hypertrees(g)); }

Polynomial tutte_from_order(const HypertreeSet& all, const HyperedgeOrder& order) {
  return tutte_from_activities(all, [&](const Hypertree& h) { return activities(all, h, order); });
}

Polynomial tutte_from_order(const RibbonGraph& g, const HyperedgeOrder& order) {
  if (order.size() != g.emerald_count()) throw std::invalid_argument("order does not cover the emerald nodes");
  return tutte_from_order(enumerate_hypertrees(g), order);
}

Polynomial interior(const Polynomial& t) { return t.substitute(Polynomial::x(), Polynomial(1)); }
Polynomial exterior(const Polynomial& t) { return t.substitute(Polynomial(1), Polynomial::y()); }
Polynomial interior(const RibbonGraph& g) { return interior(tutte_embedding(g)); }
Polynomial exterior(const RibbonGraph& g) { return exterior(tutte_embedding(g)); }

CoefficientTable corank_nullity(const HypertreeSet& all, int imax, int jmax, std::uint64_t budget, int jobs) {
  if (imax < 0 || jmax < 0) throw std::invalid_argument("negative bounds");
  if (all.empty()) throw EmptySet("no hypertrees");
  const LatticeBox box = LatticeBox::around(all, imax, jmax);
  const std::uint64_t n = box.size();
  if (n > budget)
    throw BoundsTooLarge("corank-nullity box has " + std::to_string(n) + " points, budget " + std::to_string(budget));
  CoefficientTable table(imax, jmax);
  std::mutex merge;
  parallel_chunks(n, jobs, [&](std::uint64_t begin, std::uint64_t end) {
    CoefficientTable local(imax, jmax);
    for (std::uint64_t k = begin; k < end; ++k) {
      const IntVector c = box.point(k);
      const int i = d1_greater(all, c);
      const int j = d1_less(all, c);
      if (i <= imax && j <= jmax) ++local.at(i, j);
    }
    std::lock_guard lock(merge);
    for (int i = 0; i <= imax; ++i)
      for (int j = 0; j <= jmax; ++j) table.at(i, j) += local.at(i, j);
  });
  return table;
}

CoefficientTable series_expansion(const Polynomial& t, int imax, int jmax) {
  Polynomial geometric_u, geometric_v;
  for (int i = 0; i <= imax; ++i) geometric_u += Polynomial::monomial(1, i, 0);
  for (int j = 0; j <= jmax; ++j) geometric_v += Polynomial::monomial(1, 0, j);
  std::vector<Polynomial> pu{Polynomial(1)}, pv{Polynomial(1)};
  for (int k = 1; k <= t.degree_x(); ++k) pu.push_back(Polynomial::truncated_product(pu.back(), geometric_u, imax, jmax));
  for (int k = 1; k <= t.degree_y(); ++k) pv.push_back(Polynomial::truncated_product(pv.back(), geometric_v, imax, jmax));
  Polynomial sum;
  for (const auto& [e, c] : t.terms())
    sum += Polynomial(c) * Polynomial::truncated_product(pu[e.first], pv[e.second], imax, jmax);
  return CoefficientTable::from_polynomial(sum, imax, jmax);
}

SeriesReport series_identity_check(const Polynomial& t, const HypertreeSet& all, int imax, int jmax, int jobs) {
  SeriesReport report;
  report.imax = imax;
  report.jmax = jmax;
  report.expected = series_expansion(t, imax, jmax);
  report.counted = corank_nullity(all, imax, jmax, kDefaultPointBudget, jobs);
  for (int i = 0; i <= imax && !report.mismatch; ++i)
    for (int j = 0; j <= jmax; ++j)
      if (report.expected.at(i, j) != report.counted.at(i, j)) {
        report.mismatch = SeriesMismatch{i, j, report.expected.at(i, j), report.counted.at(i, j)};
        break;
      }
  return report;
}

SeriesReport series_identity_check(const RibbonGraph& g, int imax, int jmax, int jobs) {
  const HypertreeSet all = enumerate_hypertrees(g);
  return series_identity_check(tutte_embedding(g, all), all, imax, jmax, jobs);
}

int OrdinaryGraph::edge_index(const std::string& name) const {
  auto it = std::find(edge_names.begin(), edge_names.end(), name);
  return it == edge_names.end() ? -1 : static_cast<int>(it - edge_names.begin());
}

OrdinaryGraph load_graph(std::string_view text) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::Exception& ex) {
    throw ParseError(std::string("graph: ") + ex.what());
  }
  if (!root.IsMap()) throw ParseError("graph: expected a mapping");
  for (const auto& kv : root) {
    const auto key = kv.first.as<std::string>();
    if (key != "vertices" && key != "edges" && key != "edge_names") throw ParseError("graph: unknown key '" + key + "'");
  }
  if (!root["vertices"] || !root["edges"]) throw ParseError("graph: 'vertices' and 'edges' are required");
  OrdinaryGraph g;
  std::map<std::string, int> index;
  try {
    for (const auto& v : root["vertices"]) {
      const auto name = v.as<std::string>();
      if (!index.emplace(name, g.vertex_count()).second) throw ValidationError("graph: duplicate vertex " + name);
      g.vertex_names.push_back(name);
    }
    for (const auto& e : root["edges"]) {
      if (!e.IsSequence() || e.size() != 2) throw ParseError("graph: each edge is a pair of vertex names");
      std::pair<int, int> ends;
      for (int k = 0; k < 2; ++k) {
        const auto name = e[k].as<std::string>();
        auto it = index.find(name);
        if (it == index.end()) throw ValidationError("graph: unknown vertex " + name);
        (k == 0 ? ends.first : ends.second) = it->second;
      }
      g.edges.push_back(ends);
    }
    if (root["edge_names"]) {
      for (const auto& n : root["edge_names"]) g.edge_names.push_back(n.as<std::string>());
      if (static_cast<int>(g.edge_names.size()) != g.edge_count())
        throw ValidationError("graph: edge_names length differs from edges");
      std::vector<std::string> sorted = g.edge_names;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ValidationError("graph: duplicate edge name");
    } else {
      for (int k = 0; k < g.edge_count(); ++k) g.edge_names.push_back("e" + std::to_string(k));
    }
  } catch (const YAML::Exception& ex) {
    throw ParseError(std::string("graph: ") + ex.what());
  }
  if (g.vertex_count() == 0) throw ValidationError("graph: no vertices");
  return g;
}

OrdinaryGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_graph(ss.str());
}

namespace {

int find_root(std::vector<int>& parent, int a) {
  while (parent[a] != a) a = parent[a] = parent[parent[a]];
  return a;
}

int component_count(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  int components = n;
  for (auto [a, b] : edges) {
    a = find_root(parent, a);
    b = find_root(parent, b);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

Polynomial deletion_contraction(int n, std::vector<std::pair<int, int>> edges) {
  if (edges.empty()) return Polynomial(1);
  const auto [a, b] = edges.back();
  edges.pop_back();
  if (a == b) return Polynomial::y() * deletion_contraction(n, std::move(edges));
  std::vector<std::pair<int, int>> contracted = edges;
  for (auto& [u, v] : contracted) {
    if (u == b) u = a;
    if (v == b) v = a;
  }
  std::vector<std::pair<int, int>> with_edge = edges;
  with_edge.emplace_back(a, b);
  if (component_count(n, edges) > component_count(n, with_edge))
    return Polynomial::x() * deletion_contraction(n, std::move(contracted));
  return deletion_contraction(n, std::move(edges)) + deletion_contraction(n, std::move(contracted));
}

}  // namespace

bool is_connected(const OrdinaryGraph& g) { return component_count(g.vertex_count(), g.edges) == 1; }

RibbonGraph to_ribbon_graph(const OrdinaryGraph& g) {
  if (!is_connected(g)) throw Disconnected("graph is disconnected");
  RibbonGraph::Spec spec;
  spec.violet_count = g.vertex_count();
  spec.emerald_count = g.edge_count();
  for (int k = 0; k < g.edge_count(); ++k) {
    spec.edges.push_back({g.edges[k].first, k});
    spec.edges.push_back({g.edges[k].second, k});
  }
  for (int i = 0; i < static_cast<int>(spec.edges.size()); ++i) {
    spec.rotation[NodeId::violet(spec.edges[i].violet)].push_back(i);
    spec.rotation[NodeId::emerald(spec.edges[i].emerald)].push_back(i);
  }
  for (int v = 0; v < g.vertex_count(); ++v) spec.rotation.try_emplace(NodeId::violet(v));
  spec.basis_node = NodeId::violet(0);
  spec.basis_edge = spec.rotation[NodeId::violet(0)].empty() ? 0 : spec.rotation[NodeId::violet(0)].front();
  for (int v = 0; v < g.vertex_count(); ++v) spec.labels[NodeId::violet(v)] = g.vertex_names[v];
  for (int k = 0; k < g.edge_count(); ++k) spec.labels[NodeId::emerald(k)] = g.edge_names[k];
  return RibbonGraph(std::move(spec));
}

OrdinaryGraph to_ordinary_graph(const RibbonGraph& g) {
  OrdinaryGraph out;
  for (int v = 0; v < g.violet_count(); ++v) out.vertex_names.push_back(g.label(NodeId::violet(v)));
  for (int k = 0; k < g.emerald_count(); ++k) {
    const auto& inc = g.emerald_edges(k);
    if (inc.size() != 2)
      throw NotAGraph("emerald node " + g.label(NodeId::emerald(k)) + " has degree " + std::to_string(inc.size()));
    out.edges.emplace_back(g.ends(EdgeId{inc[0]}).violet, g.ends(EdgeId{inc[1]}).violet);
    out.edge_names.push_back(g.label(NodeId::emerald(k)));
  }
  return out;
}

Polynomial classical_tutte(const OrdinaryGraph& g) {
  if (!is_connected(g)) throw Disconnected("graph is disconnected");
  return deletion_contraction(g.vertex_count(), g.edges);
}

std::optional<std::string> BridgeReport::winner() const {
  for (const auto& f : forms)
    if (f.holds) return f.name;
  return std::nullopt;
}

BridgeReport graph_tutte_bridge(const OrdinaryGraph& g) {
  BridgeReport report;
  report.classical = classical_tutte(g);
  report.embedding = tutte_embedding(to_ribbon_graph(g));
  report.nullity = g.edge_count() - g.vertex_count() + 1;
  report.rank = g.vertex_count() - 1;
  const Polynomial x = Polynomial::x(), y = Polynomial::y();
  const Polynomial s = x + y - Polynomial(1);
  const Polynomial prefactor = Polynomial::monomial(1, report.nullity, report.rank);
  struct Side {
    const char* lhs_name;
    const char* rhs_name;
    const Polynomial* lhs;
    const Polynomial* rhs;
  };
  const Side sides[] = {{"T", "calT", &report.classical, &report.embedding},
                        {"calT", "T", &report.embedding, &report.classical}};
  const std::pair<const char*, Polynomial> seconds[] = {{"(x+y-1)/y", y}, {"(x+y-1)/x", x}};
  for (const Side& side : sides) {
    for (const auto& [second_name, second_den] : seconds) {
      // lhs = prefactor * rhs(s/y, s/d)  <=>  lhs * den = prefactor * num
      const PolynomialFraction f = substitute_fraction(*side.rhs, s, y, s, second_den);
      BridgeForm form;
      form.name = std::string(side.lhs_name) + " = x^" + std::to_string(report.nullity) + " y^" +
                  std::to_string(report.rank) + " " + side.rhs_name + "((x+y-1)/y, " + second_name + ")";
      form.holds = *side.lhs * f.denominator == prefactor * f.numerator;
      report.forms.push_back(std::move(form));
    }
  }
  return report;
}

}  // namespace hypertutte
