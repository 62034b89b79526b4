#include "hypertutte/fixtures.hpp"

namespace hypertutte {

const std::vector<FixtureEntry>& fixture_entries() {
  static const std::vector<FixtureEntry> entries = {
      {"fig1", "four-vertex graph as a subdivided bipartite graph; tour example", {"fig1.hg"}},
      {"fig2", "3 vertices, 4 hyperedges; seven hypertrees", {"fig2.hg"}},
      {"fig3", "fig2 instance for the tree order example", {"fig3.hg"}},
      {"fig4", "fig2 instance for the violet Jaeger tree example", {"fig4.hg"}},
      {"fig5", "3 vertices, 4 hyperedges with drawn rotation numbers", {"fig5.hg"}},
      {"fig6", "graph with per-tree orders", {"fig6.graph", "fig6.orders"}},
      {"delta_fig", "triangle matroid with a decision tree", {"delta_fig.matroid", "delta_fig.tree"}},
      {"single_edge", "one hyperedge on two vertices", {"single_edge.hg"}},
  };
  return entries;
}

std::optional<std::string> fixture_text(std::string_view file_name) {
  for (const FixtureFile& f : detail::embedded_fixture_files())
    if (f.name == file_name) return f.text;
  return std::nullopt;
}

}  // namespace hypertutte
