#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hypertutte/hypertrees.hpp"
#include "hypertutte/jaeger.hpp"
#include "hypertutte/polynomial.hpp"
#include "hypertutte/random.hpp"
#include "hypertutte/ribbon_graph.hpp"

namespace hypertutte {

struct GeneratorParams {
  int max_violet = 4;
  int max_emerald = 5;
  int max_edges = 12;
  int retries = 200;
};

// Connected simple bipartite graph with node counts drawn from [1, max],
// uniformly shuffled rotations and a uniform basis. Deterministic per seed.
// GenerationFailed if no connected sample is found within `retries`.
RibbonGraph random_instance(const GeneratorParams& params, std::uint64_t seed);

// Same graph with every rotation shuffled and a new basis.
RibbonGraph perturb_embedding(const RibbonGraph& g, Rng& rng);

enum class Verdict { equal, counterexample };
const char* to_string(Verdict v);

// One hypertree whose monomial differs between the two activity notions.
struct HypertreeDiff {
  Hypertree h;
  ActivityRecord expected;
  ActivityRecord actual;
};

struct CheckResult {
  std::string name;  // "violet-prime", "violet", "invariance"
  Verdict verdict = Verdict::equal;
  Polynomial expected;
  Polynomial actual;
  std::vector<HypertreeDiff> diffs;
  std::optional<std::uint64_t> trial;  // perturbation index for invariance
};

struct TrialReport {
  std::optional<std::uint64_t> seed;
  int violet = 0;
  int emerald = 0;
  int edges = 0;
  std::string edge_hash;  // FNV-1a of the edge list, hex
  std::vector<CheckResult> checks;
  // Instance text when some check is a counterexample.
  std::optional<std::string> counterexample;
  bool all_equal() const;
};

std::string edge_list_hash(const RibbonGraph& g);

// Embedding polynomial vs. the polynomial from activities in the violet'
// (endpoint) order, resp. the violet (current node) order, of each hypertree.
TrialReport test_violet_prime(const RibbonGraph& g);
TrialReport test_violet(const RibbonGraph& g);

using PolynomialFunction = std::function<Polynomial(const RibbonGraph&)>;

// Recomputes `compute` (default tutte_embedding) on `trials` random
// re-embeddings of g with seeds derived from `seed`.
TrialReport stress_invariance(const RibbonGraph& g, int trials, std::uint64_t seed,
                              const PolynomialFunction& compute = {});

enum class ConjectureKind { violet_prime, violet };

struct BatchSummary {
  std::uint64_t seed = 0;
  int trials = 0;
  int counterexamples = 0;
  std::vector<TrialReport> reports;  // in trial order
};

// Trial k runs on random_instance(params, Rng::derive(seed, k)).
BatchSummary run_trials(ConjectureKind kind, int trials, std::uint64_t seed, const GeneratorParams& params = {},
                        int jobs = 1);

// First derived seed (k < cap) whose instance separates the violet order from
// the embedding polynomial. Results are cached per (params, seed, cap).
std::optional<TrialReport> find_violet_witness(const GeneratorParams& params, std::uint64_t seed, int cap = 10000);

}  // namespace hypertutte
