#pragma once

#include <functional>
#include <vector>

#include "hypertutte/base_family.hpp"
#include "hypertutte/ribbon_graph.hpp"
#include "hypertutte/tours.hpp"

namespace hypertutte {

// h(e) = d_T(e) - 1 over emerald nodes, for some spanning tree T.
using Hypertree = IntVector;
using HypertreeSet = BaseFamily;

Hypertree degree_vector(const RibbonGraph& g, const SpanningTree& tree);

// Spanning trees with emerald degrees h(e) + 1, by backtracking over edges in
// index order with degree and connectivity pruning. Visitor returns false to
// stop early.
void for_each_representative(const RibbonGraph& g, const Hypertree& h,
                             const std::function<bool(const SpanningTree&)>& visit);
std::vector<SpanningTree> representatives(const RibbonGraph& g, const Hypertree& h);

bool is_hypertree(const RibbonGraph& g, const Hypertree& h);

// Distinct degree vectors of all spanning trees, lexicographic.
HypertreeSet enumerate_hypertrees(const RibbonGraph& g);

// Breadth-first search over single exchanges h + 1_e - 1_f, tested with
// is_hypertree, seeded from one degree vector.
HypertreeSet enumerate_hypertrees_by_exchange(const RibbonGraph& g);

// For h(e) < h2(e): the smallest f with h(f) > h2(f) such that h + 1_e - 1_f
// and h2 - 1_e + 1_f are both in `all`. NoWitness if none exists.
int exchange_witness(const HypertreeSet& all, const Hypertree& h, const Hypertree& h2, int e);

}  // namespace hypertutte
