#include "hypertutte/conjecture.hpp"

#include <iomanip>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <tuple>

#include "hypertutte/errors.hpp"
#include "hypertutte/lattice.hpp"
#include "hypertutte/tutte.hpp"

namespace hypertutte {

namespace {

bool connected(int nv, int ne, const std::vector<EdgeEnds>& edges) {
  std::vector<int> parent(nv + ne);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  int components = nv + ne;
  for (const EdgeEnds& e : edges) {
    const int a = find(e.violet), b = find(nv + e.emerald);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

std::pair<NodeId, int> random_basis(const RibbonGraph& g, Rng& rng) {
  const NodeId node = g.node_at(rng.uniform(0, g.node_count() - 1));
  return {node, rng.pick(g.rotation(node))};
}

}  // namespace

RibbonGraph random_instance(const GeneratorParams& params, std::uint64_t seed) {
  if (params.max_violet < 1 || params.max_emerald < 1) throw std::invalid_argument("need at least one node per side");
  Rng rng(seed);
  for (int attempt = 0; attempt < params.retries; ++attempt) {
    const int nv = rng.uniform(1, params.max_violet);
    const int ne = rng.uniform(1, params.max_emerald);
    const int lo = nv + ne - 1;
    const int hi = std::min(params.max_edges, nv * ne);
    if (lo > hi) continue;
    const int m = rng.uniform(lo, hi);
    std::vector<EdgeEnds> pairs;
    for (int v = 0; v < nv; ++v)
      for (int e = 0; e < ne; ++e) pairs.push_back({v, e});
    rng.shuffle(pairs);
    pairs.resize(m);
    if (!connected(nv, ne, pairs)) continue;
    RibbonGraph::Spec spec;
    spec.violet_count = nv;
    spec.emerald_count = ne;
    spec.edges = pairs;
    for (int k = 0; k < m; ++k) {
      spec.rotation[NodeId::violet(pairs[k].violet)].push_back(k);
      spec.rotation[NodeId::emerald(pairs[k].emerald)].push_back(k);
    }
    for (auto& [node, rot] : spec.rotation) rng.shuffle(rot);
    const int dense = rng.uniform(0, nv + ne - 1);
    spec.basis_node = dense < nv ? NodeId::violet(dense) : NodeId::emerald(dense - nv);
    spec.basis_edge = rng.pick(spec.rotation[spec.basis_node]);
    return RibbonGraph(std::move(spec));
  }
  throw GenerationFailed("no connected instance after " + std::to_string(params.retries) + " attempts");
}

RibbonGraph perturb_embedding(const RibbonGraph& g, Rng& rng) {
  std::map<NodeId, std::vector<int>> rotation;
  for (int d = 0; d < g.node_count(); ++d) {
    const NodeId n = g.node_at(d);
    std::vector<int> r = g.rotation(n);
    rng.shuffle(r);
    rotation[n] = std::move(r);
  }
  auto [node, edge] = random_basis(g, rng);
  return g.with_rotation(std::move(rotation), node, edge);
}

const char* to_string(Verdict v) { return v == Verdict::equal ? "EQUAL" : "COUNTEREXAMPLE"; }

bool TrialReport::all_equal() const {
  for (const auto& c : checks)
    if (c.verdict != Verdict::equal) return false;
  return true;
}

std::string edge_list_hash(const RibbonGraph& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&](int value) {
    for (int k = 0; k < 4; ++k) {
      h ^= static_cast<std::uint8_t>(value >> (8 * k));
      h *= 0x100000001b3ULL;
    }
  };
  mix(g.violet_count());
  mix(g.emerald_count());
  for (const EdgeEnds& e : g.edges()) {
    mix(e.violet);
    mix(e.emerald);
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

namespace {

TrialReport describe(const RibbonGraph& g) {
  TrialReport r;
  r.violet = g.violet_count();
  r.emerald = g.emerald_count();
  r.edges = g.edge_count();
  r.edge_hash = edge_list_hash(g);
  return r;
}

TrialReport compare_orders(const RibbonGraph& g, const char* name,
                           HyperedgeOrder (*order_of)(const RibbonGraph&, const Hypertree&)) {
  TrialReport report = describe(g);
  const HypertreeSet all = enumerate_hypertrees(g);
  CheckResult check;
  check.name = name;
  for (const Hypertree& h : all.members()) {
    const ActivityRecord expected = embedding_activities(g, all, h);
    const ActivityRecord actual = activities(all, h, order_of(g, h));
    check.expected += activity_monomial(expected);
    check.actual += activity_monomial(actual);
    if (activity_monomial(expected) != activity_monomial(actual)) check.diffs.push_back({h, expected, actual});
  }
  check.verdict = check.expected == check.actual ? Verdict::equal : Verdict::counterexample;
  if (check.verdict == Verdict::counterexample) report.counterexample = render(g);
  report.checks.push_back(std::move(check));
  return report;
}

}  // namespace

TrialReport test_violet_prime(const RibbonGraph& g) { return compare_orders(g, "violet-prime", &order_violet_prime); }

TrialReport test_violet(const RibbonGraph& g) { return compare_orders(g, "violet", &order_violet); }

TrialReport stress_invariance(const RibbonGraph& g, int trials, std::uint64_t seed, const PolynomialFunction& compute) {
  const PolynomialFunction f = compute ? compute : PolynomialFunction([](const RibbonGraph& x) {
    return tutte_embedding(x);
  });
  TrialReport report = describe(g);
  report.seed = seed;
  CheckResult check;
  check.name = "invariance";
  check.expected = f(g);
  check.actual = check.expected;
  for (int t = 0; t < trials; ++t) {
    Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(t)));
    const RibbonGraph variant = perturb_embedding(g, rng);
    Polynomial p = f(variant);
    if (p != check.expected) {
      check.verdict = Verdict::counterexample;
      check.actual = std::move(p);
      check.trial = static_cast<std::uint64_t>(t);
      report.counterexample = render(variant);
      break;
    }
  }
  report.checks.push_back(std::move(check));
  return report;
}

BatchSummary run_trials(ConjectureKind kind, int trials, std::uint64_t seed, const GeneratorParams& params, int jobs) {
  BatchSummary summary;
  summary.seed = seed;
  summary.trials = trials;
  summary.reports.resize(trials);
  parallel_chunks(static_cast<std::uint64_t>(trials), jobs, [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t k = begin; k < end; ++k) {
      const std::uint64_t s = Rng::derive(seed, k);
      const RibbonGraph g = random_instance(params, s);
      TrialReport r = kind == ConjectureKind::violet_prime ? test_violet_prime(g) : test_violet(g);
      r.seed = s;
      summary.reports[k] = std::move(r);
    }
  });
  for (const auto& r : summary.reports)
    if (!r.all_equal()) ++summary.counterexamples;
  return summary;
}

std::optional<TrialReport> find_violet_witness(const GeneratorParams& params, std::uint64_t seed, int cap) {
  using Key = std::tuple<int, int, int, int, std::uint64_t, int>;
  static std::mutex mutex;
  static std::map<Key, std::optional<TrialReport>> cache;
  const Key key{params.max_violet, params.max_emerald, params.max_edges, params.retries, seed, cap};
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  std::optional<TrialReport> found;
  for (int k = 0; k < cap && !found; ++k) {
    const std::uint64_t s = Rng::derive(seed, static_cast<std::uint64_t>(k));
    TrialReport r = test_violet(random_instance(params, s));
    r.seed = s;
    if (!r.all_equal()) found = std::move(r);
  }
  std::lock_guard lock(mutex);
  cache.emplace(key, found);
  return found;
}

}  // namespace hypertutte
