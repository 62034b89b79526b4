#pragma once

#include "hypertutte/activities.hpp"
#include "hypertutte/hypertrees.hpp"
#include "hypertutte/tours.hpp"

namespace hypertutte {

// Emerald Jaeger trees see every non-tree edge first at its emerald end;
// violet Jaeger trees at its violet end.
enum class JaegerVariant { emerald, violet };

bool is_jaeger(const RibbonGraph& g, const SpanningTree& tree, JaegerVariant variant = JaegerVariant::emerald);

// The unique Jaeger tree representing h: all representatives are filtered by
// is_jaeger and exactly one survivor is required (std::logic_error otherwise).
// NotAHypertree if h has no representative.
SpanningTree jaeger_tree_of(const RibbonGraph& g, const Hypertree& h, JaegerVariant variant = JaegerVariant::emerald);

// Emerald nodes by first appearance as the current node of the tour.
HyperedgeOrder node_visit_order(const RibbonGraph& g, const Tour& t);
// Emerald nodes by first appearance as an endpoint of the current edge.
HyperedgeOrder edge_visit_order(const RibbonGraph& g, const Tour& t);

// <_h: node order along the tour of the emerald Jaeger tree of h.
HyperedgeOrder order_emerald(const RibbonGraph& g, const Hypertree& h);
// Same, along the tour of the violet Jaeger tree of h.
HyperedgeOrder order_violet(const RibbonGraph& g, const Hypertree& h);
// Edge-endpoint order along the tour of the violet Jaeger tree of h.
HyperedgeOrder order_violet_prime(const RibbonGraph& g, const Hypertree& h);

// Embedding activities: activities(all, h, order_emerald(h)).
ActivityRecord embedding_activities(const RibbonGraph& g, const HypertreeSet& all, const Hypertree& h);

}  // namespace hypertutte
