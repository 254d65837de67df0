#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "berge/graph.hpp"

namespace berge::lab {

// --- deterministic randomness ----------------------------------------------

std::uint64_t splitmix64(std::uint64_t x);

/// Portable stream: identical on every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  std::uint64_t next();
  double uniform();  // [0, 1)
  bool chance(double p);
  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  std::vector<int> permutation(int n);

 private:
  std::uint64_t state_;
};

/// Seed of sample `index` in a run seeded with `seed`.
std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index);

// --- enumeration and generation --------------------------------------------

inline constexpr int kMaxEnumerated = 8;

/// One graph per isomorphism class, each in canonical labelling, sorted by
/// canonical form. Throws std::invalid_argument for n outside [0, 8].
std::vector<Graph> enumerate_all_graphs(int n);

struct GeneratorSpec {
  enum class Family { Uniform, BergeRejection, Bipartite, LineOfBipartite, Bicograph, ComplementOf };
  Family family = Family::Uniform;
  int n = 0;   // uniform, berge_rejection; bicograph's n
  int n1 = 0;  // bipartite sides; bicograph's m
  int n2 = 0;
  double p = 0.5;
  /// bicograph: seeds the per-pair edge choice; the sample seed when unset.
  std::optional<std::uint64_t> pattern_seed;
  std::shared_ptr<const GeneratorSpec> inner;  // complement_of
};

/// "uniform(n,p)", "berge_rejection(n,p)", "bipartite(n1,n2,p)",
/// "line_of_bipartite(n1,n2,p)", "bicograph(m,n[,pattern_seed])", "complement_of(<spec>)".
/// Throws std::invalid_argument.
GeneratorSpec parse_generator_spec(std::string_view text);
std::string to_string(const GeneratorSpec& spec);

inline constexpr int kBergeRetries = 10000;

/// Deterministic in (spec, seed). Throws std::invalid_argument for bad
/// parameters and BudgetExceeded when Berge rejection runs out of retries.
Graph generate(const GeneratorSpec& spec, std::uint64_t seed);

// --- claims -----------------------------------------------------------------

/// A named vertex list instantiating part of a hypothesis (a set, a path in
/// order, a hole in order, a single vertex).
struct Binding {
  std::string name;
  std::vector<int> verts;
};

struct LemmaCounterexample {
  std::string claim;
  Graph graph;
  std::vector<Binding> bindings;
  std::string detail;
};

/// Result of checking one graph.
struct GraphOutcome {
  bool skipped = false;   // outside the claim's domain (not Berge)
  bool overflow = false;  // binding budget ran out before the search finished
  std::size_t bindings = 0;
  std::vector<LemmaCounterexample> counterexamples;
};

struct ClaimContext {
  std::size_t binding_budget = std::size_t{1} << 12;
};

struct Claim {
  std::string id;
  /// Graphs outside the Berge class are skipped and counted.
  bool berge_only = true;
  std::function<GraphOutcome(const Graph&, const ClaimContext&)> check;
  /// Re-derives a reported counterexample from its bindings; it is only
  /// reported if this returns true.
  std::function<bool(const Graph&, const std::vector<Binding>&)> confirm;
};

std::vector<std::string> claim_ids();
/// Throws std::invalid_argument for an unknown id.
const Claim& claim(std::string_view id);

// --- corpus runs ------------------------------------------------------------

struct Source {
  enum class Kind { Exhaustive, Graphs, Generator };
  Kind kind = Kind::Exhaustive;
  int n = 0;                  // exhaustive
  std::vector<Graph> graphs;  // graphs given directly, e.g. read from a file
  GeneratorSpec spec;         // generator
  std::size_t samples = 0;

  static Source exhaustive(int n);
  static Source of(std::vector<Graph> graphs);
  static Source sampled(GeneratorSpec spec, std::size_t samples);
};

/// A graph whose search was cut short (binding budget, a structural search
/// budget, or a generator that ran out of retries).
struct Overflow {
  std::size_t index = 0;
  std::string graph6;  // empty when the graph could not be generated
  std::string reason;
};

struct CorpusReport {
  std::string claim;
  std::size_t graphs_total = 0;
  std::size_t skipped_non_berge = 0;
  /// graphs_total minus the skipped ones.
  std::size_t graphs_checked = 0;
  std::size_t bindings = 0;
  std::vector<Overflow> overflows;
  std::vector<LemmaCounterexample> counterexamples;
  /// Reported by a search but rejected on recheck; nonzero means a bug.
  std::size_t unconfirmed = 0;
  double wall_time = 0.0;

  bool passed() const { return counterexamples.empty() && unconfirmed == 0; }
};

struct RunOptions {
  unsigned jobs = 1;
  ClaimContext context;
};

/// Materialises the source (generator sample i uses sample_seed(seed, i))
/// and checks every graph; results are merged in input order whatever the
/// number of jobs.
CorpusReport run_suite(const Claim& c, const Source& source, std::uint64_t seed, const RunOptions& options = {});
CorpusReport run_suite(std::string_view claim_id, const Source& source, std::uint64_t seed,
                       const RunOptions& options = {});

/// The graphs a source stands for, in order.
std::vector<Graph> materialise(const Source& source, std::uint64_t seed);

}  // namespace berge::lab
