#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "berge/errors.hpp"
#include "berge/graph6.hpp"
#include "berge/lemmalab.hpp"
#include "berge/recognizers.hpp"

namespace berge::lab {

Source Source::exhaustive(int n) {
  Source s;
  s.kind = Kind::Exhaustive;
  s.n = n;
  return s;
}

Source Source::of(std::vector<Graph> graphs) {
  Source s;
  s.kind = Kind::Graphs;
  s.graphs = std::move(graphs);
  return s;
}

Source Source::sampled(GeneratorSpec spec, std::size_t samples) {
  Source s;
  s.kind = Kind::Generator;
  s.spec = std::move(spec);
  s.samples = samples;
  return s;
}

std::vector<Graph> materialise(const Source& source, std::uint64_t seed) {
  switch (source.kind) {
    case Source::Kind::Exhaustive: return enumerate_all_graphs(source.n);
    case Source::Kind::Graphs: return source.graphs;
    case Source::Kind::Generator: {
      std::vector<Graph> out;
      out.reserve(source.samples);
      for (std::size_t i = 0; i < source.samples; ++i) out.push_back(generate(source.spec, sample_seed(seed, i)));
      return out;
    }
  }
  return {};
}

namespace {

struct Item {
  bool skipped = false;
  GraphOutcome outcome;
  std::optional<Overflow> overflow;
  std::size_t unconfirmed = 0;
};

Item process(const Claim& c, const Graph& g, std::size_t index, const ClaimContext& ctx) {
  Item it;
  if (c.berge_only && !is_berge(g).berge) {
    it.skipped = true;
    return it;
  }
  try {
    it.outcome = c.check(g, ctx);
    if (it.outcome.overflow) it.overflow = Overflow{index, emit_graph6(g), "binding budget"};
  } catch (const BudgetExceeded& e) {
    it.overflow = Overflow{index, emit_graph6(g), e.what()};
  }
  auto& ces = it.outcome.counterexamples;
  const auto kept = std::stable_partition(ces.begin(), ces.end(), [&](const LemmaCounterexample& ce) {
    try {
      return c.confirm(g, ce.bindings);
    } catch (const std::exception&) {
      return false;
    }
  });
  it.unconfirmed = static_cast<std::size_t>(ces.end() - kept);
  ces.erase(kept, ces.end());
  return it;
}

}  // namespace

CorpusReport run_suite(const Claim& c, const Source& source, std::uint64_t seed, const RunOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<Graph> fixed;
  if (source.kind != Source::Kind::Generator) fixed = materialise(source, seed);
  const std::size_t count = source.kind == Source::Kind::Generator ? source.samples : fixed.size();

  std::vector<Item> items(count);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      if (source.kind != Source::Kind::Generator) {
        items[i] = process(c, fixed[i], i, options.context);
        continue;
      }
      try {
        const Graph g = generate(source.spec, sample_seed(seed, i));
        items[i] = process(c, g, i, options.context);
      } catch (const BudgetExceeded& e) {
        items[i].overflow = Overflow{i, "", e.what()};
      }
    }
  };
  const unsigned jobs = std::max(1U, std::min<unsigned>(options.jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work);
  }

  CorpusReport r;
  r.claim = c.id;
  r.graphs_total = count;
  for (auto& it : items) {
    if (it.skipped) {
      ++r.skipped_non_berge;
      continue;
    }
    r.bindings += it.outcome.bindings;
    if (it.overflow) r.overflows.push_back(std::move(*it.overflow));
    r.unconfirmed += it.unconfirmed;
    for (auto& ce : it.outcome.counterexamples) r.counterexamples.push_back(std::move(ce));
  }
  r.graphs_checked = r.graphs_total - r.skipped_non_berge;
  r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

CorpusReport run_suite(std::string_view claim_id, const Source& source, std::uint64_t seed,
                       const RunOptions& options) {
  return run_suite(claim(claim_id), source, seed, options);
}

}  // namespace berge::lab
