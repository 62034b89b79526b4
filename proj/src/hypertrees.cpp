#include "hypertutte/hypertrees.hpp"

#include <deque>
#include <numeric>
#include <set>

#include "hypertutte/errors.hpp"

namespace hypertutte {

Hypertree degree_vector(const RibbonGraph& g, const SpanningTree& tree) {
  Hypertree h(g.emerald_count(), -1);
  for (int k : tree.edges().items()) ++h[g.edges()[k].emerald];
  return h;
}

namespace {

struct SearchState {
  std::vector<int> parent;
  int components = 0;

  int find(int x) const {
    while (parent[x] != x) x = parent[x];
    return x;
  }
};

bool plausible(const RibbonGraph& g, const Hypertree& h) {
  if (static_cast<int>(h.size()) != g.emerald_count()) return false;
  int sum = 0;
  for (int j = 0; j < g.emerald_count(); ++j) {
    if (h[j] < 0 || h[j] + 1 > g.degree(NodeId::emerald(j))) return false;
    sum += h[j];
  }
  return sum == g.violet_count() - 1;
}

}  // namespace

void for_each_representative(const RibbonGraph& g, const Hypertree& h,
                             const std::function<bool(const SpanningTree&)>& visit) {
  if (!plausible(g, h)) return;
  const int m = g.edge_count();
  const int nv = g.violet_count();
  const int n = g.node_count();

  std::vector<int> need(g.emerald_count());   // tree edges still required at each emerald node
  std::vector<int> left(g.emerald_count());   // undecided edges at each emerald node
  for (int j = 0; j < g.emerald_count(); ++j) {
    need[j] = h[j] + 1;
    left[j] = g.degree(NodeId::emerald(j));
  }

  // Chosen edges plus undecided ones must still connect the graph.
  auto can_connect = [&](IndexSet chosen, int from) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    auto find = [&](int x) {
      while (p[x] != x) x = p[x] = p[p[x]];
      return x;
    };
    int comps = n;
    auto add = [&](int k) {
      const int a = find(g.edges()[k].violet), b = find(nv + g.edges()[k].emerald);
      if (a != b) {
        p[a] = b;
        --comps;
      }
    };
    for (int k : chosen.items()) add(k);
    for (int k = from; k < m; ++k) add(k);
    return comps == 1;
  };

  std::function<bool(int, IndexSet, SearchState&)> rec = [&](int k, IndexSet chosen, SearchState& st) -> bool {
    if (st.components == 1) {
      for (int j = 0; j < g.emerald_count(); ++j)
        if (need[j] != 0) return true;
      return visit(trusted_spanning_tree(chosen));
    }
    if (k == m) return true;
    const int j = g.edges()[k].emerald;
    const int a = st.find(g.edges()[k].violet);
    const int b = st.find(nv + j);
    --left[j];
    bool keep_going = true;
    if (a != b && need[j] > 0) {
      --need[j];
      st.parent[a] = b;
      --st.components;
      if (left[j] >= need[j] && can_connect(chosen.with(k), k + 1)) keep_going = rec(k + 1, chosen.with(k), st);
      ++st.components;
      st.parent[a] = a;
      ++need[j];
    }
    if (keep_going && left[j] >= need[j] && can_connect(chosen, k + 1)) keep_going = rec(k + 1, chosen, st);
    ++left[j];
    return keep_going;
  };

  SearchState st;
  st.parent.resize(n);
  std::iota(st.parent.begin(), st.parent.end(), 0);
  st.components = n;
  rec(0, IndexSet{}, st);
}

std::vector<SpanningTree> representatives(const RibbonGraph& g, const Hypertree& h) {
  std::vector<SpanningTree> out;
  for_each_representative(g, h, [&](const SpanningTree& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

bool is_hypertree(const RibbonGraph& g, const Hypertree& h) {
  bool found = false;
  for_each_representative(g, h, [&](const SpanningTree&) {
    found = true;
    return false;
  });
  return found;
}

HypertreeSet enumerate_hypertrees(const RibbonGraph& g) {
  std::set<Hypertree> seen;
  for_each_spanning_tree(g, [&](const SpanningTree& t) {
    seen.insert(degree_vector(g, t));
    return true;
  });
  return HypertreeSet(std::vector<Hypertree>(seen.begin(), seen.end()));
}

HypertreeSet enumerate_hypertrees_by_exchange(const RibbonGraph& g) {
  Hypertree seed;
  for_each_spanning_tree(g, [&](const SpanningTree& t) {
    seed = degree_vector(g, t);
    return false;
  });
  std::set<Hypertree> seen{seed};
  std::deque<Hypertree> queue{seed};
  const int ne = g.emerald_count();
  while (!queue.empty()) {
    const Hypertree h = queue.front();
    queue.pop_front();
    for (int e = 0; e < ne; ++e) {
      for (int f = 0; f < ne; ++f) {
        if (e == f || h[f] == 0) continue;
        Hypertree next = shifted(h, e, f);
        if (seen.count(next) || !is_hypertree(g, next)) continue;
        seen.insert(next);
        queue.push_back(std::move(next));
      }
    }
  }
  return HypertreeSet(std::vector<Hypertree>(seen.begin(), seen.end()));
}

int exchange_witness(const HypertreeSet& all, const Hypertree& h, const Hypertree& h2, int e) {
  if (h[e] >= h2[e]) throw std::invalid_argument("exchange_witness needs h(e) < h2(e)");
  for (int f = 0; f < static_cast<int>(h.size()); ++f) {
    if (h[f] <= h2[f]) continue;
    if (all.contains(shifted(h, e, f)) && all.contains(shifted(h2, f, e))) return f;
  }
  throw NoWitness("no exchange partner found");
}

}  // namespace hypertutte
