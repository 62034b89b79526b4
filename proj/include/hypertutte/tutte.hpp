#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hypertutte/activities.hpp"
#include "hypertutte/hypertrees.hpp"
#include "hypertutte/polynomial.hpp"
#include "hypertutte/ribbon_graph.hpp"

namespace hypertutte {

// x^oi y^oe (x+y-1)^ie
Polynomial activity_monomial(const ActivityRecord& record);

// Sum of activity_monomial over all members, with activities supplied per member.
Polynomial tutte_from_activities(const HypertreeSet& all,
                                 const std::function<ActivityRecord(const Hypertree&)>& activities_of);

Polynomial tutte_embedding(const RibbonGraph& g);
Polynomial tutte_embedding(const RibbonGraph& g, const HypertreeSet& all);
Polynomial tutte_from_order(const HypertreeSet& all, const HyperedgeOrder& order);
Polynomial tutte_from_order(const RibbonGraph& g, const HyperedgeOrder& order);

// T(x, 1) and T(1, y).
Polynomial interior(const Polynomial& t);
Polynomial exterior(const Polynomial& t);
Polynomial interior(const RibbonGraph& g);
Polynomial exterior(const RibbonGraph& g);

constexpr std::uint64_t kDefaultPointBudget = 5'000'000;

// entry(i, j) = #{c : d1>(H, c) = i, d1<(H, c) = j}, by enumerating the box
// [lower - imax, upper + jmax]. BoundsTooLarge if the box exceeds `budget`.
CoefficientTable corank_nullity(const HypertreeSet& all, int imax, int jmax,
                                std::uint64_t budget = kDefaultPointBudget, int jobs = 1);

// T(1/(1-u), 1/(1-v)) truncated to the box [0..imax] x [0..jmax] (u = x-side).
CoefficientTable series_expansion(const Polynomial& t, int imax, int jmax);

struct SeriesMismatch {
  int i = 0;
  int j = 0;
  std::int64_t from_polynomial = 0;
  std::int64_t from_lattice = 0;
};

struct SeriesReport {
  int imax = 0;
  int jmax = 0;
  CoefficientTable expected{0, 0};  // series side
  CoefficientTable counted{0, 0};   // lattice side
  std::optional<SeriesMismatch> mismatch;
  bool passed() const { return !mismatch.has_value(); }
};

SeriesReport series_identity_check(const Polynomial& t, const HypertreeSet& all, int imax, int jmax, int jobs = 1);
SeriesReport series_identity_check(const RibbonGraph& g, int imax, int jmax, int jobs = 1);

// Multigraph on vertices 0..n-1; loops and parallel edges allowed.
struct OrdinaryGraph {
  std::vector<std::string> vertex_names;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> edge_names;

  int vertex_count() const { return static_cast<int>(vertex_names.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  int edge_index(const std::string& name) const;  // -1 if absent
};

// YAML:
//   vertices: [u, v, w]
//   edges: [[v, w], [v, w], [u, v], [u, w]]
//   edge_names: [a, b, c, d]      # optional, default e0, e1, ...
OrdinaryGraph load_graph(std::string_view text);
OrdinaryGraph load_graph_file(const std::string& path);
bool is_connected(const OrdinaryGraph& g);

// Each graph edge k becomes emerald node k joined to its ends by incidences
// 2k, 2k+1. Rotations follow incidence index order; basis is v0 with its
// first incidence. Disconnected if g is.
RibbonGraph to_ribbon_graph(const OrdinaryGraph& g);
// Inverse direction; NotAGraph unless every emerald node has degree 2.
OrdinaryGraph to_ordinary_graph(const RibbonGraph& g);

// Deletion-contraction. Disconnected if g is.
Polynomial classical_tutte(const OrdinaryGraph& g);

struct BridgeForm {
  std::string name;      // e.g. "calT = x^n y^r T((x+y-1)/y, (x+y-1)/x)"
  bool holds = false;
};

struct BridgeReport {
  Polynomial classical;  // T_G
  Polynomial embedding;  // calT_G from the bipartite model
  int nullity = 0;       // |E| - |V| + 1
  int rank = 0;          // |V| - 1
  std::vector<BridgeForm> forms;
  // First form that holds, if any.
  std::optional<std::string> winner() const;
};

// Tests four identities between T_G and calT_G: the lhs is either side, the
// second argument of the substitution is (x+y-1)/y or (x+y-1)/x; the first is
// always (x+y-1)/y. Compared exactly after clearing denominators.
BridgeReport graph_tutte_bridge(const OrdinaryGraph& g);

}  // namespace hypertutte
