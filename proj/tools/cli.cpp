#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "hypertutte/conjecture.hpp"
#include "hypertutte/crapo.hpp"
#include "hypertutte/delta.hpp"
#include "hypertutte/errors.hpp"
#include "hypertutte/fixtures.hpp"
#include "hypertutte/jaeger.hpp"
#include "hypertutte/reports.hpp"
#include "hypertutte/tutte.hpp"

namespace hypertutte::cli {

namespace {

namespace fs = std::filesystem;

// Exit status for a failed verification, as opposed to bad input.
struct Failed {};

std::string read_source(const std::string& path) {
  if (!path.empty() && path[0] == '@') {
    auto text = fixture_text(path.substr(1));
    if (!text) throw ParseError("no shipped fixture named " + path.substr(1));
    return *text;
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

bool is_graph_file(const std::string& path) { return ends_with(path, ".graph"); }

RibbonGraph load_instance(const std::string& path) {
  const std::string text = read_source(path);
  if (is_graph_file(path)) return to_ribbon_graph(load_graph(text));
  return load_ribbon_graph(text);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) {
    cur.erase(0, cur.find_first_not_of(" \t"));
    cur.erase(cur.find_last_not_of(" \t") + 1);
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

int parse_int(const std::string& s) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("not an integer: " + s);
  }
}

std::pair<int, int> parse_pair(const std::string& text, const char* what) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw ParseError(std::string(what) + " expects two comma separated integers");
  return {parse_int(parts[0]), parse_int(parts[1])};
}

int emerald_by_name(const RibbonGraph& g, const std::string& name) {
  for (int j = 0; j < g.emerald_count(); ++j)
    if (g.label(NodeId::emerald(j)) == name || node_name(NodeId::emerald(j)) == name) return j;
  throw ParseError("unknown emerald node " + name);
}

HyperedgeOrder parse_order(const RibbonGraph& g, const std::string& text) {
  std::vector<int> seq;
  for (const auto& name : split(text, ',')) seq.push_back(emerald_by_name(g, name));
  if (static_cast<int>(seq.size()) != g.emerald_count()) throw ParseError("--order must list every emerald node");
  try {
    return HyperedgeOrder(std::move(seq));
  } catch (const std::invalid_argument&) {
    throw ParseError("--order repeats a node");
  }
}

std::string join_nodes(const RibbonGraph& g, IndexSet s) {
  std::string out;
  for (int e : s.items()) out += (out.empty() ? "" : ",") + g.label(NodeId::emerald(e));
  return out.empty() ? "-" : out;
}

std::string join_order(const RibbonGraph& g, const HyperedgeOrder& o) {
  std::string out;
  for (int e : o.sequence()) out += (out.empty() ? "" : ",") + g.label(NodeId::emerald(e));
  return out;
}

std::string join_ints(const IntVector& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + std::to_string(v[k]);
  return out;
}

std::string join_edges(const RibbonGraph& g, const SpanningTree& t) {
  std::string out;
  for (int k : t.edges().items()) out += (out.empty() ? "" : ",") + g.edge_label(EdgeId{k});
  return out;
}

Hypertree parse_hypertree(const RibbonGraph& g, const std::string& text) {
  Hypertree h;
  for (const auto& part : split(text, ',')) h.push_back(parse_int(part));
  if (static_cast<int>(h.size()) != g.emerald_count()) throw ParseError("--hypertree needs one value per emerald node");
  return h;
}

SpanningTree parse_tree(const RibbonGraph& g, const std::string& text) {
  IndexSet edges;
  for (const auto& token : split(text, ',')) {
    int found = -1;
    if (all_digits(token)) {
      found = parse_int(token);
      if (found >= g.edge_count()) throw ParseError("edge index out of range: " + token);
    } else {
      for (int k = 0; k < g.edge_count() && found < 0; ++k)
        if (g.edge_label(EdgeId{k}) == token) found = k;
      if (found < 0) throw ParseError("unknown edge " + token);
    }
    edges.insert(found);
  }
  return make_spanning_tree(g, edges);
}

std::optional<LatticeBox> parse_box(const std::string& text, int dimension) {
  if (text.empty()) return std::nullopt;
  const auto [lo, hi] = parse_pair(text, "--box");
  if (lo > hi) throw ParseError("--box needs lo <= hi");
  return LatticeBox::cube(dimension, lo, hi);
}

JaegerVariant parse_variant(const std::string& v) {
  return v == "violet" ? JaegerVariant::violet : JaegerVariant::emerald;
}

void print_partition(std::ostream& out, const PartitionReport& r, const BaseFamily& family, bool json) {
  if (json) {
    out << to_json(r, family).dump(2) << '\n';
    return;
  }
  out << "box " << "[" << join_ints(r.lo) << "] .. [" << join_ints(r.hi) << "]\n";
  out << "points " << r.points << '\n';
  out << "covered-once " << r.covered_once << '\n';
  out << "violations " << r.violation_count << '\n';
  for (const auto& v : r.violations) {
    out << "  " << to_string(v.kind) << " (" << join_ints(v.point) << ")";
    for (int k : v.covering) out << " [" << join_ints(family[k]) << "]";
    out << '\n';
  }
  out << (r.passed() ? "PASS" : "FAIL") << '\n';
}

void print_assignment(std::ostream& out, const PolymatroidBases& p, const ActivityAssignment& a) {
  for (const BasisActivity& b : a) {
    std::string order;
    for (int e : b.order.sequence()) order += (order.empty() ? "" : "<") + p.ground()[e];
    out << p.describe(b.basis) << "\torder " << order << "\tint " << p.describe(b.plain.internal) << "\text "
        << p.describe(b.plain.external) << "\tnontrivial " << p.describe(b.nontrivial.internal | b.nontrivial.external)
        << '\n';
  }
}

std::string verdict_text(const ObstructionVerdict& v, const PolymatroidBases& p) {
  return v.no_exempt() ? "NO_EXEMPT" : "EXEMPT(" + p.ground()[*v.exempt] + ")";
}

fs::path save_counterexample(const std::string& dir, const std::string& stem, const std::string& text) {
  fs::create_directories(dir);
  const fs::path path = fs::path(dir) / (stem + ".hg");
  std::ofstream file(path);
  if (!file) throw ParseError("cannot write " + path.string());
  file << text;
  return path;
}

void print_dot(std::ostream& out, const RibbonGraph& g, const SpanningTree& tree, const Tour& t) {
  std::map<int, std::vector<std::size_t>> steps;
  for (std::size_t k = 0; k < t.size(); ++k) steps[t[k].edge.index].push_back(k + 1);
  out << "graph tour {\n";
  for (int d = 0; d < g.node_count(); ++d) {
    const NodeId n = g.node_at(d);
    out << "  n" << d << " [label=\"" << g.label(n) << "\", shape=" << (n.is_violet() ? "circle" : "box")
        << ", color=" << (n.is_violet() ? "purple" : "darkgreen") << "];\n";
  }
  for (int k = 0; k < g.edge_count(); ++k) {
    const auto& ends = g.ends(EdgeId{k});
    std::string label;
    for (std::size_t s : steps[k]) label += (label.empty() ? "" : ",") + std::to_string(s);
    out << "  n" << g.dense(NodeId::violet(ends.violet)) << " -- n" << g.dense(NodeId::emerald(ends.emerald))
        << " [label=\"" << label << "\", style=" << (tree.contains(EdgeId{k}) ? "bold" : "dashed") << "];\n";
  }
  out << "}\n";
}

struct Options {
  int jobs = 1;
  std::string instance;

  std::string method = "embedding";
  std::string order;
  std::string bounds = "3,3";
  std::string specialize;
  std::string report = "text";

  bool by_exchange = false;
  std::string variant = "emerald";
  std::string order_kind;

  std::string tree;
  std::string hypertree;
  bool dot = false;

  std::string box;

  std::string tree_file;
  std::string bases_file;
  std::string from = "embedding";
  std::string graph_file;
  std::string orders_file;

  int trials = 100;
  std::uint64_t seed = 1;
  bool strict = false;
  std::string save_dir = "counterexamples";
  bool search = false;
  int cap = 10000;
  GeneratorParams params;

  std::string fixture;
  std::string dir;
};

int cmd_tutte(const Options& o, std::ostream& out) {
  if (o.method == "bridge") {
    const std::string text = read_source(o.instance);
    const OrdinaryGraph graph = is_graph_file(o.instance) ? load_graph(text) : to_ordinary_graph(load_ribbon_graph(text));
    const BridgeReport r = graph_tutte_bridge(graph);
    if (o.report == "json") {
      out << to_json(r).dump(2) << '\n';
    } else {
      out << "T_G\t" << r.classical << '\n' << "calT_G\t" << r.embedding << '\n';
      for (const auto& f : r.forms) out << (f.holds ? "holds\t" : "fails\t") << f.name << '\n';
      out << "winner\t" << r.winner().value_or("none") << '\n';
    }
    if (!r.winner()) throw Failed{};
    return 0;
  }
  const RibbonGraph g = load_instance(o.instance);
  if (o.method == "corank-nullity" || o.method == "series") {
    const auto [imax, jmax] = parse_pair(o.bounds, "--bounds");
    if (imax < 0 || jmax < 0) throw ParseError("--bounds must be non-negative");
    const HypertreeSet all = enumerate_hypertrees(g);
    if (o.method == "corank-nullity") {
      out << corank_nullity(all, imax, jmax, kDefaultPointBudget, o.jobs).to_tsv();
      return 0;
    }
    const SeriesReport r = series_identity_check(tutte_embedding(g, all), all, imax, jmax, o.jobs);
    if (o.report == "json") {
      out << to_json(r).dump(2) << '\n';
    } else if (r.passed()) {
      out << "PASS\n";
    } else {
      out << "FAIL at (" << r.mismatch->i << "," << r.mismatch->j << "): series " << r.mismatch->from_polynomial
          << ", lattice " << r.mismatch->from_lattice << '\n';
    }
    if (!r.passed()) throw Failed{};
    return 0;
  }
  Polynomial t;
  if (o.method == "fixed")
    t = tutte_from_order(g, o.order.empty() ? HyperedgeOrder::identity(g.emerald_count()) : parse_order(g, o.order));
  else
    t = tutte_embedding(g);
  if (o.specialize == "interior") t = interior(t);
  if (o.specialize == "exterior") t = exterior(t);
  out << t << '\n';
  return 0;
}

int cmd_hypertrees(const Options& o, std::ostream& out) {
  const RibbonGraph g = load_instance(o.instance);
  const HypertreeSet all = o.by_exchange ? enumerate_hypertrees_by_exchange(g) : enumerate_hypertrees(g);
  for (const Hypertree& h : all.members()) out << join_ints(h) << '\n';
  return 0;
}

int cmd_jaeger(const Options& o, std::ostream& out) {
  const RibbonGraph g = load_instance(o.instance);
  const HypertreeSet all = enumerate_hypertrees(g);
  const JaegerVariant variant = parse_variant(o.variant);
  const std::string kind = o.order_kind.empty() ? (variant == JaegerVariant::emerald ? "node" : "endpoint") : o.order_kind;
  for (const Hypertree& h : all.members()) {
    const SpanningTree tree = jaeger_tree_of(g, h, variant);
    const Tour t = tour(g, tree);
    const HyperedgeOrder order = kind == "node" ? node_visit_order(g, t) : edge_visit_order(g, t);
    const ActivityRecord a = activities(all, h, order);
    out << "h=" << join_ints(h) << "\ttree=" << join_edges(g, tree) << "\torder=" << join_order(g, order)
        << "\tint=" << join_nodes(g, a.internal) << "\text=" << join_nodes(g, a.external) << '\n';
  }
  return 0;
}

int cmd_tour(const Options& o, std::ostream& out) {
  const RibbonGraph g = load_instance(o.instance);
  if (o.tree.empty() == o.hypertree.empty()) throw ParseError("tour needs exactly one of --tree and --hypertree");
  const SpanningTree tree =
      o.tree.empty() ? jaeger_tree_of(g, parse_hypertree(g, o.hypertree), parse_variant(o.variant)) : parse_tree(g, o.tree);
  const Tour t = tour(g, tree);
  if (o.dot) {
    print_dot(out, g, tree, t);
    return 0;
  }
  for (const TourStep& s : t) out << g.label(s.node) << ' ' << g.edge_label(s.edge) << '\n';
  return 0;
}

int cmd_crapo(const Options& o, std::ostream& out) {
  const RibbonGraph g = load_instance(o.instance);
  const HypertreeSet all = enumerate_hypertrees(g);
  const LatticeBox box = parse_box(o.box, g.emerald_count()).value_or(LatticeBox::around(all, 2, 2));
  const PartitionReport r = verify_partition(all, embedding_intervals(g, all), box, o.jobs);
  print_partition(out, r, all, o.report == "json");
  if (!r.passed()) throw Failed{};
  return 0;
}

struct AssignmentSource {
  std::optional<PolymatroidBases> p;
  ActivityAssignment assignment;
};

AssignmentSource load_assignment(const Options& o) {
  AssignmentSource src;
  if (o.from == "embedding") {
    if (o.instance.empty()) throw ParseError("--from embedding needs an instance");
    const RibbonGraph g = load_instance(o.instance);
    src.p.emplace(PolymatroidBases::from_hypertrees(g));
    src.assignment = embedding_assignment(g);
  } else if (o.from == "orders") {
    if (o.graph_file.empty() || o.orders_file.empty()) throw ParseError("--from orders needs --graph and --orders");
    src.p.emplace(PolymatroidBases::from_graph(load_graph(read_source(o.graph_file))));
    src.assignment = fixed_tree_order_activities(*src.p, load_tree_orders(read_source(o.orders_file), *src.p));
  } else {
    if (o.tree_file.empty() || o.bases_file.empty()) throw ParseError("--from delta needs --tree and --bases");
    src.p.emplace(load_polymatroid(read_source(o.bases_file)));
    src.assignment = delta_assignment(load_decision_tree(read_source(o.tree_file), *src.p), *src.p);
  }
  return src;
}

int cmd_delta_check(const Options& o, std::ostream& out) {
  const PolymatroidBases p = load_polymatroid(read_source(o.bases_file));
  const DecisionTree tree = load_decision_tree(read_source(o.tree_file), p);
  const ActivityAssignment a = delta_assignment(tree, p);
  const LatticeBox box = parse_box(o.box, p.size()).value_or(LatticeBox::around(p.bases(), 2, 2));
  const PartitionReport r = verify_partition(p.bases(), assignment_intervals(a), box, o.jobs);
  if (o.report == "json") {
    out << to_json(r, p.bases()).dump(2) << '\n';
  } else {
    print_assignment(out, p, a);
    out << "obstruction\t" << verdict_text(obstruction_check(a, p.size()), p) << '\n';
    print_partition(out, r, p.bases(), false);
  }
  if (!r.passed()) throw Failed{};
  return 0;
}

int cmd_delta_obstruct(const Options& o, std::ostream& out) {
  const AssignmentSource src = load_assignment(o);
  print_assignment(out, *src.p, src.assignment);
  out << verdict_text(obstruction_check(src.assignment, src.p->size()), *src.p) << '\n';
  return 0;
}

int cmd_delta_search(const Options& o, std::ostream& out) {
  const AssignmentSource src = load_assignment(o);
  const auto found = exhaustive_delta_search(*src.p, src.assignment);
  if (found)
    out << "FOUND\n" << render(*found, *src.p);
  else
    out << "NONE\n";
  return 0;
}

int conjecture_batch(const Options& o, std::ostream& out, ConjectureKind kind) {
  const char* name = kind == ConjectureKind::violet_prime ? "violet-prime" : "violet";
  if (!o.instance.empty()) {
    const RibbonGraph g = load_instance(o.instance);
    const TrialReport r = kind == ConjectureKind::violet_prime ? test_violet_prime(g) : test_violet(g);
    if (o.report == "json")
      out << to_json(r).dump(2) << '\n';
    else
      out << to_string(r.checks.front().verdict) << '\n';
    if (o.strict && !r.all_equal()) throw Failed{};
    return 0;
  }
  if (kind == ConjectureKind::violet && o.search) {
    const auto witness = find_violet_witness(o.params, o.seed, o.cap);
    if (!witness) {
      out << "no witness within " << o.cap << " seeds\n";
      return 0;
    }
    const fs::path path = save_counterexample(o.save_dir, std::string(name) + "-" + std::to_string(*witness->seed),
                                              *witness->counterexample);
    if (o.report == "json")
      out << to_json(*witness).dump(2) << '\n';
    else
      out << "witness seed " << *witness->seed << "\nsaved " << path.string() << '\n';
    return 0;
  }
  const BatchSummary summary = run_trials(kind, o.trials, o.seed, o.params, o.jobs);
  std::vector<std::string> saved;
  for (const TrialReport& r : summary.reports)
    if (!r.all_equal())
      saved.push_back(
          save_counterexample(o.save_dir, std::string(name) + "-" + std::to_string(*r.seed), *r.counterexample).string());
  if (o.report == "json") {
    out << to_json(summary).dump(2) << '\n';
  } else {
    for (const TrialReport& r : summary.reports)
      if (!r.all_equal()) out << "COUNTEREXAMPLE seed " << *r.seed << '\n';
    for (const auto& path : saved) out << "saved " << path << '\n';
    out << name << " trials " << summary.trials << " seed " << summary.seed << " counterexamples "
        << summary.counterexamples << '\n';
  }
  if (o.strict && summary.counterexamples > 0) throw Failed{};
  return 0;
}

int cmd_stress(const Options& o, std::ostream& out) {
  const RibbonGraph g = load_instance(o.instance);
  const TrialReport r = stress_invariance(g, o.trials, o.seed);
  if (o.report == "json")
    out << to_json(r).dump(2) << '\n';
  else
    out << to_string(r.checks.front().verdict) << '\n';
  if (!r.all_equal()) throw Failed{};
  return 0;
}

int cmd_fixtures_list(std::ostream& out) {
  for (const FixtureEntry& e : fixture_entries()) {
    std::string files;
    for (const auto& f : e.files) files += (files.empty() ? "" : ",") + f;
    out << e.name << '\t' << files << '\t' << e.description << '\n';
  }
  return 0;
}

int cmd_fixtures_emit(const Options& o, std::ostream& out) {
  std::vector<std::string> files;
  for (const FixtureEntry& e : fixture_entries())
    if (e.name == o.fixture) files = e.files;
  if (files.empty()) {
    if (!fixture_text(o.fixture)) throw ParseError("unknown fixture " + o.fixture);
    files.push_back(o.fixture);
  }
  if (o.dir.empty() && files.size() == 1) {
    out << *fixture_text(files.front());
    return 0;
  }
  const fs::path dir = o.dir.empty() ? fs::path(".") : fs::path(o.dir);
  fs::create_directories(dir);
  for (const auto& f : files) {
    std::ofstream file(dir / f);
    if (!file) throw ParseError("cannot write " + (dir / f).string());
    file << *fixture_text(f);
    out << (dir / f).string() << '\n';
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Hypergraph Tutte polynomials, embedding activities and Crapo decompositions", "hypertutte"};
  app.require_subcommand(1);
  app.add_option("--jobs", o.jobs, "Worker threads for box and trial enumeration")->check(CLI::Range(1, 256));

  const std::vector<std::string> report_kinds{"text", "json"};

  auto* tutte_cmd = app.add_subcommand("tutte", "Print the polynomial or its corank-nullity table");
  tutte_cmd->add_option("instance", o.instance, "Instance file (.hg, .graph, or @fixture)")->required();
  tutte_cmd->add_option("--method", o.method)
      ->check(CLI::IsMember({"embedding", "fixed", "corank-nullity", "series", "bridge"}));
  tutte_cmd->add_option("--order", o.order, "Emerald order for --method fixed, e.g. e3,e1,e0,e2");
  tutte_cmd->add_option("--bounds", o.bounds, "I,J for corank-nullity and series");
  tutte_cmd->add_option("--specialize", o.specialize)->check(CLI::IsMember({"interior", "exterior"}));
  tutte_cmd->add_option("--report", o.report)->check(CLI::IsMember(report_kinds));

  auto* hyper_cmd = app.add_subcommand("hypertrees", "List hypertrees, one per line");
  hyper_cmd->add_option("instance", o.instance)->required();
  hyper_cmd->add_flag("--by-exchange", o.by_exchange, "Generate by single exchanges instead of tree enumeration");

  auto* jaeger_cmd = app.add_subcommand("jaeger", "Jaeger tree, order and activities of every hypertree");
  jaeger_cmd->add_option("instance", o.instance)->required();
  jaeger_cmd->add_option("--variant", o.variant)->check(CLI::IsMember({"emerald", "violet"}));
  jaeger_cmd->add_option("--order", o.order_kind, "node (first current) or endpoint (first edge endpoint)")
      ->check(CLI::IsMember({"node", "endpoint"}));

  auto* tour_cmd = app.add_subcommand("tour", "Tour of a spanning tree as 'node edge' lines");
  tour_cmd->add_option("instance", o.instance)->required();
  tour_cmd->add_option("--tree", o.tree, "Edge labels or indices, comma separated");
  tour_cmd->add_option("--hypertree", o.hypertree, "Use the Jaeger tree of this hypertree");
  tour_cmd->add_option("--variant", o.variant)->check(CLI::IsMember({"emerald", "violet"}));
  tour_cmd->add_flag("--dot", o.dot, "Emit Graphviz instead");

  auto* crapo_cmd = app.add_subcommand("crapo", "Crapo interval partition");
  crapo_cmd->require_subcommand(1);
  auto* crapo_verify = crapo_cmd->add_subcommand("verify", "Check the partition on a box");
  crapo_verify->add_option("instance", o.instance)->required();
  crapo_verify->add_option("--box", o.box, "lo,hi in every coordinate (default: hypertree range +-2)");
  crapo_verify->add_option("--report", o.report)->check(CLI::IsMember(report_kinds));

  auto* delta_cmd = app.add_subcommand("delta", "Decision-tree activities");
  delta_cmd->require_subcommand(1);
  auto* delta_check = delta_cmd->add_subcommand("check", "Activities and Crapo check of a decision tree");
  delta_check->add_option("--tree", o.tree_file)->required();
  delta_check->add_option("--bases", o.bases_file)->required();
  delta_check->add_option("--box", o.box);
  delta_check->add_option("--report", o.report)->check(CLI::IsMember(report_kinds));
  const std::vector<std::string> sources{"embedding", "orders", "delta"};
  auto add_source = [&](CLI::App* cmd) {
    cmd->add_option("instance", o.instance, "Instance for --from embedding");
    cmd->add_option("--from", o.from)->check(CLI::IsMember(sources));
    cmd->add_option("--graph", o.graph_file);
    cmd->add_option("--orders", o.orders_file);
    cmd->add_option("--tree", o.tree_file);
    cmd->add_option("--bases", o.bases_file);
  };
  auto* delta_obstruct = delta_cmd->add_subcommand("obstruct", "Is some element never nontrivially active?");
  add_source(delta_obstruct);
  auto* delta_search = delta_cmd->add_subcommand("search", "Search all decision trees for the given activities");
  add_source(delta_search);

  auto* conj_cmd = app.add_subcommand("conjecture", "Randomized checks of activity orders");
  conj_cmd->require_subcommand(1);
  auto add_trials = [&](CLI::App* cmd) {
    cmd->add_option("--trials", o.trials)->check(CLI::NonNegativeNumber);
    cmd->add_option("--seed", o.seed);
    cmd->add_option("--report", o.report)->check(CLI::IsMember(report_kinds));
  };
  auto add_generator = [&](CLI::App* cmd) {
    cmd->add_option("--instance", o.instance, "Test one instance instead of random ones");
    cmd->add_option("--save-dir", o.save_dir, "Where counterexamples are written");
    cmd->add_option("--max-violet", o.params.max_violet)->check(CLI::Range(1, 16));
    cmd->add_option("--max-emerald", o.params.max_emerald)->check(CLI::Range(1, 16));
    cmd->add_option("--max-edges", o.params.max_edges)->check(CLI::Range(1, 64));
  };
  auto* prime_cmd = conj_cmd->add_subcommand("violet-prime", "Endpoint order of violet Jaeger trees");
  add_trials(prime_cmd);
  add_generator(prime_cmd);
  prime_cmd->add_flag("--strict", o.strict, "Exit 1 on a counterexample");
  auto* violet_cmd = conj_cmd->add_subcommand("violet", "Node order of violet Jaeger trees");
  add_trials(violet_cmd);
  add_generator(violet_cmd);
  violet_cmd->add_flag("--search", o.search, "Stop at the first separating instance");
  violet_cmd->add_option("--cap", o.cap, "Seed budget for --search")->check(CLI::PositiveNumber);
  auto* stress_cmd = conj_cmd->add_subcommand("stress", "Polynomial under random re-embeddings");
  stress_cmd->add_option("instance", o.instance)->required();
  add_trials(stress_cmd);

  auto* fix_cmd = app.add_subcommand("fixtures", "Shipped instances");
  fix_cmd->require_subcommand(1);
  auto* fix_list = fix_cmd->add_subcommand("list");
  auto* fix_emit = fix_cmd->add_subcommand("emit");
  fix_emit->add_option("name", o.fixture, "Entry or file name")->required();
  fix_emit->add_option("--dir", o.dir, "Write files here instead of standard output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  std::ostringstream buffer;
  try {
    int code = 0;
    if (tutte_cmd->parsed())
      code = cmd_tutte(o, buffer);
    else if (hyper_cmd->parsed())
      code = cmd_hypertrees(o, buffer);
    else if (jaeger_cmd->parsed())
      code = cmd_jaeger(o, buffer);
    else if (tour_cmd->parsed())
      code = cmd_tour(o, buffer);
    else if (crapo_verify->parsed())
      code = cmd_crapo(o, buffer);
    else if (delta_check->parsed())
      code = cmd_delta_check(o, buffer);
    else if (delta_obstruct->parsed())
      code = cmd_delta_obstruct(o, buffer);
    else if (delta_search->parsed())
      code = cmd_delta_search(o, buffer);
    else if (prime_cmd->parsed())
      code = conjecture_batch(o, buffer, ConjectureKind::violet_prime);
    else if (violet_cmd->parsed())
      code = conjecture_batch(o, buffer, ConjectureKind::violet);
    else if (stress_cmd->parsed())
      code = cmd_stress(o, buffer);
    else if (fix_list->parsed())
      code = cmd_fixtures_list(buffer);
    else if (fix_emit->parsed())
      code = cmd_fixtures_emit(o, buffer);
    out << buffer.str();
    return code;
  } catch (const Failed&) {
    out << buffer.str();
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace hypertutte::cli
