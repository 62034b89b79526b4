#include "hypertutte/jaeger.hpp"

#include <stdexcept>

#include "hypertutte/errors.hpp"

namespace hypertutte {

bool is_jaeger(const RibbonGraph& g, const SpanningTree& tree, JaegerVariant variant) {
  const Color wanted = variant == JaegerVariant::emerald ? Color::emerald : Color::violet;
  std::vector<bool> seen(g.edge_count(), false);
  for (const TourStep& s : tour(g, tree)) {
    if (seen[s.edge.index]) continue;
    seen[s.edge.index] = true;
    if (!tree.contains(s.edge) && s.node.color != wanted) return false;
  }
  return true;
}

SpanningTree jaeger_tree_of(const RibbonGraph& g, const Hypertree& h, JaegerVariant variant) {
  std::vector<SpanningTree> found;
  bool any = false;
  for_each_representative(g, h, [&](const SpanningTree& t) {
    any = true;
    if (is_jaeger(g, t, variant)) found.push_back(t);
    return true;
  });
  if (!any) throw NotAHypertree("vector is not a hypertree");
  if (found.size() != 1)
    throw std::logic_error("expected exactly one Jaeger tree, found " + std::to_string(found.size()));
  return found.front();
}

HyperedgeOrder node_visit_order(const RibbonGraph& g, const Tour& t) {
  std::vector<bool> placed(g.emerald_count(), false);
  std::vector<int> seq;
  for (const TourStep& s : t) {
    if (s.node.is_emerald() && !placed[s.node.index]) {
      placed[s.node.index] = true;
      seq.push_back(s.node.index);
    }
  }
  return HyperedgeOrder(std::move(seq));
}

HyperedgeOrder edge_visit_order(const RibbonGraph& g, const Tour& t) {
  std::vector<bool> placed(g.emerald_count(), false);
  std::vector<int> seq;
  for (const TourStep& s : t) {
    const int e = g.ends(s.edge).emerald;
    if (!placed[e]) {
      placed[e] = true;
      seq.push_back(e);
    }
  }
  return HyperedgeOrder(std::move(seq));
}

HyperedgeOrder order_emerald(const RibbonGraph& g, const Hypertree& h) {
  return node_visit_order(g, tour(g, jaeger_tree_of(g, h, JaegerVariant::emerald)));
}

HyperedgeOrder order_violet(const RibbonGraph& g, const Hypertree& h) {
  return node_visit_order(g, tour(g, jaeger_tree_of(g, h, JaegerVariant::violet)));
}

HyperedgeOrder order_violet_prime(const RibbonGraph& g, const Hypertree& h) {
  return edge_visit_order(g, tour(g, jaeger_tree_of(g, h, JaegerVariant::violet)));
}

ActivityRecord embedding_activities(const RibbonGraph& g, const HypertreeSet& all, const Hypertree& h) {
  return activities(all, h, order_emerald(g, h), ActivityRule::min);
}

}  // namespace hypertutte
