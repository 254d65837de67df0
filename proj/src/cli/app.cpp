#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "berge/cli.hpp"
#include "berge/errors.hpp"
#include "berge/graph6.hpp"
#include "berge/json.hpp"

namespace berge::cli {

namespace {

using berge::json::Json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Inputs {
  std::vector<std::string> files;
  std::vector<std::string> inline_graphs;
  std::string format = "graph6";
};

// Streams every input graph to `visit`, guarding the vertex count.
void for_each_input(const Inputs& inputs, int max_n, std::istream& stdin_, const std::function<void(const Graph&)>& visit) {
  auto lines = [&](std::istream& in) {
    if (inputs.format == "dimacs") {
      visit(parse_dimacs(in, max_n));
      return;
    }
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      visit(parse_graph6(line, max_n));
    }
  };
  for (const auto& g6 : inputs.inline_graphs) visit(parse_graph6(g6, max_n));
  for (const auto& path : inputs.files) {
    if (path == "-") {
      lines(stdin_);
      continue;
    }
    std::ifstream f(path);
    if (!f) throw UsageError("cannot open " + path);
    lines(f);
  }
  if (inputs.files.empty() && inputs.inline_graphs.empty()) lines(stdin_);
}

Json with_graph(const Graph& g, Json body) {
  body["graph"] = emit_graph6(g);
  return body;
}

Json not_berge(const NotBerge& e) {
  Json out{{"berge", false}};
  if (!e.hole().empty()) out["witness"] = {{"side", e.in_complement() ? "complement" : "G"}, {"hole", e.hole()}};
  return out;
}

int resolve_max_n(const std::optional<int>& flag) {
  int limit = kDefaultMaxN;
  if (const char* env = std::getenv("BERGE_MAX_N"); env && *env) {
    try {
      std::size_t used = 0;
      limit = std::stoi(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("BERGE_MAX_N is not an integer: ") + env);
    }
  }
  if (flag) limit = *flag;
  if (limit < 0 || limit > kMaxVertices)
    throw UsageError("vertex guard must lie in [0, " + std::to_string(kMaxVertices) + "]");
  return limit;
}

struct Detect {
  std::string what;
  std::string parity = "any";
  bool odd_only = false;
  bool nondegenerate = false;
  bool all = false;
};

Json detect(const Graph& g, const Detect& d) {
  std::vector<Json> found;
  auto keep = [&](Json j) {
    found.push_back(std::move(j));
    return d.all;
  };
  if (d.what == "prism") {
    for_each_prism(g, [&](const Prism& p) {
      if (d.parity == "even" && p.parity != PrismParity::Even) return true;
      if (d.parity == "odd" && p.parity != PrismParity::Odd) return true;
      return keep(json::prism(p));
    });
  } else if (d.what == "wheel") {
    for_each_wheel(g, [&](const Wheel& w) { return d.odd_only && !w.odd ? true : keep(json::wheel(w)); });
  } else if (d.what == "appearance-k4") {
    for_each_appearance_k4(g, [&](const AppearanceK4& a) {
      return d.nondegenerate && a.degenerate ? true : keep(json::appearance(a));
    });
  } else {
    const FixedGraph f = d.what == "double-diamond" ? FixedGraph::DoubleDiamond
                         : d.what == "lk33"         ? FixedGraph::LK33
                                                    : FixedGraph::LK33MinusEdge;
    if (auto s = contains_fixed(g, f)) found.push_back({{"vertices", json::vertex_set(*s)}});
  }
  Json out{{"structure", d.what}, {"found", !found.empty()}};
  if (d.all) {
    out["count"] = found.size();
    out["witnesses"] = found;
  } else if (!found.empty()) {
    out["witness"] = found.front();
  }
  return out;
}

struct Verify {
  std::string claim;
  std::optional<int> exhaustive;
  std::optional<std::string> generator;
  std::optional<std::size_t> samples;
  std::optional<std::string> file;
  std::optional<std::uint64_t> seed;
  unsigned jobs = 1;
  std::size_t binding_budget = std::size_t{1} << 12;
  bool timing = false;
};

int verify(const Verify& v, int max_n, std::istream& in, std::ostream& out) {
  const int sources = v.exhaustive.has_value() + v.generator.has_value() + v.file.has_value();
  if (sources != 1) throw UsageError("verify needs exactly one of --exhaustive, --generator, --file");
  lab::Source src;
  std::string description;
  if (v.exhaustive) {
    if (*v.exhaustive < 0 || *v.exhaustive > lab::kMaxEnumerated)
      throw UsageError("--exhaustive supports n <= " + std::to_string(lab::kMaxEnumerated) +
                       "; pass larger corpora with --file");
    src = lab::Source::exhaustive(*v.exhaustive);
    description = "exhaustive(" + std::to_string(*v.exhaustive) + ")";
  } else if (v.generator) {
    if (!v.seed) throw UsageError("--generator needs --seed");
    if (!v.samples) throw UsageError("--generator needs --samples");
    lab::GeneratorSpec spec;
    try {
      spec = lab::parse_generator_spec(*v.generator);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    src = lab::Source::sampled(spec, *v.samples);
    description = lab::to_string(spec) + " x " + std::to_string(*v.samples);
  } else {
    std::vector<Graph> graphs;
    Inputs inputs;
    inputs.files = {*v.file};
    for_each_input(inputs, max_n, in, [&](const Graph& g) { graphs.push_back(g); });
    src = lab::Source::of(std::move(graphs));
    description = "file(" + *v.file + ")";
  }
  const lab::Claim* c = nullptr;
  try {
    c = &lab::claim(v.claim);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  lab::RunOptions options;
  options.jobs = std::max(1U, v.jobs);
  options.context.binding_budget = v.binding_budget;
  const auto report = lab::run_suite(*c, src, v.seed.value_or(0), options);
  Json doc = json::corpus_report(report, v.timing);
  doc["source"] = description;
  doc["seed"] = v.seed.value_or(0);
  out << doc.dump() << '\n';
  return report.passed() ? kOk : kCounterexamples;
}

int gen(const std::string& spec_text, std::size_t samples, std::uint64_t seed, const std::string& format, int max_n,
        std::ostream& out) {
  lab::GeneratorSpec spec;
  try {
    spec = lab::parse_generator_spec(spec_text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  for (std::size_t i = 0; i < samples; ++i) {
    const Graph g = lab::generate(spec, lab::sample_seed(seed, i));
    if (g.n() > max_n)
      throw BudgetExceeded("generated graph has " + std::to_string(g.n()) + " vertices, above the guard " +
                           std::to_string(max_n));
    if (format == "json")
      out << Json{{"index", i}, {"graph", emit_graph6(g)}}.dump() << '\n';
    else
      out << emit_graph6(g) << '\n';
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Berge graph toolkit: recognition, structure detection, decompositions, lemma checks"};
  app.require_subcommand(1);
  std::optional<int> max_n_flag;
  app.add_option("--max-n", max_n_flag, "largest vertex count accepted (overrides BERGE_MAX_N)");

  Inputs inputs;
  auto add_inputs = [&](CLI::App* sub) {
    sub->add_option("files", inputs.files, "input files, one graph6 per line ('-' for stdin)");
    sub->add_option("-g,--graph", inputs.inline_graphs, "graph6 string given inline");
    sub->add_option("--format", inputs.format, "input format")->check(CLI::IsMember({"graph6", "dimacs"}));
  };

  auto* berge_cmd = app.add_subcommand("berge", "odd hole / antihole test");
  add_inputs(berge_cmd);
  auto* perfect_cmd = app.add_subcommand("perfect", "omega = chi on every induced subgraph");
  int perfect_limit = kDefaultPerfectionLimit;
  add_inputs(perfect_cmd);
  perfect_cmd->add_option("--limit", perfect_limit, "refuse graphs with more vertices");
  auto* classify_cmd = app.add_subcommand("classify", "basic class with certificate");
  add_inputs(classify_cmd);
  auto* decompose_cmd = app.add_subcommand("decompose", "basic class or decomposition of a Berge graph");
  add_inputs(decompose_cmd);

  Detect det;
  auto* detect_cmd = app.add_subcommand("detect", "find an induced structure");
  detect_cmd->add_option("structure", det.what)
      ->required()
      ->check(CLI::IsMember({"prism", "wheel", "double-diamond", "lk33", "lk33e", "appearance-k4"}));
  add_inputs(detect_cmd);
  detect_cmd->add_option("--parity", det.parity, "prism parity filter")->check(CLI::IsMember({"any", "even", "odd"}));
  detect_cmd->add_flag("--odd", det.odd_only, "wheels: odd wheels only");
  detect_cmd->add_flag("--nondegenerate", det.nondegenerate, "appearances: nondegenerate only");
  detect_cmd->add_flag("--all", det.all, "list every witness instead of the first");

  bool balanced_only = false;
  auto* skew_cmd = app.add_subcommand("skew", "skew partitions with loose/balanced flags");
  add_inputs(skew_cmd);
  skew_cmd->add_flag("--balanced", balanced_only, "first balanced skew partition only");

  std::string f8 = "auto";
  auto* fladder_cmd = app.add_subcommand("fladder", "membership in the classes F1..F11");
  add_inputs(fladder_cmd);
  fladder_cmd->add_option("--check-f8", f8, "pseudowheel search")->check(CLI::IsMember({"auto", "on", "off"}));

  Verify ver;
  auto* verify_cmd = app.add_subcommand("verify", "check a claim over a corpus");
  verify_cmd->add_option("--claim", ver.claim, "claim id")->required();
  verify_cmd->add_option("--exhaustive", ver.exhaustive, "all graphs on n vertices (n <= 8)");
  verify_cmd->add_option("--generator", ver.generator, "generator spec, e.g. berge_rejection(9,0.5)");
  verify_cmd->add_option("--samples", ver.samples, "number of generated graphs");
  verify_cmd->add_option("--file", ver.file, "graph6 corpus file");
  verify_cmd->add_option("--seed", ver.seed, "run seed");
  verify_cmd->add_option("--jobs", ver.jobs, "worker threads");
  verify_cmd->add_option("--binding-budget", ver.binding_budget, "hypothesis instances per graph");
  verify_cmd->add_flag("--timing", ver.timing, "include wall_time");

  std::string gen_spec, gen_format = "graph6";
  std::size_t gen_samples = 1;
  std::uint64_t gen_seed = 0;
  auto* gen_cmd = app.add_subcommand("gen", "generate graphs");
  gen_cmd->add_option("--generator", gen_spec, "generator spec")->required();
  gen_cmd->add_option("--samples", gen_samples, "number of graphs");
  gen_cmd->add_option("--seed", gen_seed, "run seed")->required();
  gen_cmd->add_option("--format", gen_format, "output format")->check(CLI::IsMember({"graph6", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  auto stream = [&](const std::function<Json(const Graph&)>& body) {
    for_each_input(inputs, resolve_max_n(max_n_flag), in, [&](const Graph& g) {
      out << with_graph(g, body(g)).dump() << '\n';
    });
    return kOk;
  };

  try {
    if (berge_cmd->parsed()) return stream([](const Graph& g) { return json::berge_result(is_berge(g)); });
    if (perfect_cmd->parsed())
      return stream([&](const Graph& g) { return json::perfection(is_perfect(g, perfect_limit)); });
    if (classify_cmd->parsed())
      return stream([](const Graph& g) {
        const auto c = classify_basic(g);
        if (!c) return Json{{"basic", false}};
        return Json{{"basic", true}, {"class", to_string(c->kind)}, {"certificate", json::basic(*c)}};
      });
    if (decompose_cmd->parsed())
      return stream([](const Graph& g) {
        try {
          return json::verdict(decompose(g));
        } catch (const NotBerge& e) {
          return not_berge(e);
        }
      });
    if (detect_cmd->parsed()) return stream([&](const Graph& g) { return detect(g, det); });
    if (skew_cmd->parsed())
      return stream([&](const Graph& g) {
        if (balanced_only) {
          const auto c = find_balanced_skew(g);
          Json j{{"found", c.has_value()}};
          if (c) j["partition"] = json::skew(*c);
          return j;
        }
        Json parts = Json::array();
        for (const auto& c : find_skew_partitions(g)) parts.push_back(json::skew(c));
        return Json{{"count", parts.size()}, {"partitions", parts}};
      });
    if (fladder_cmd->parsed())
      return stream([&](const Graph& g) {
        FLadderOptions o;
        if (f8 != "auto") o.check_f8 = f8 == "on";
        try {
          return json::ladder(f_ladder(g, o));
        } catch (const NotBerge& e) {
          return not_berge(e);
        }
      });
    if (verify_cmd->parsed()) return verify(ver, resolve_max_n(max_n_flag), in, out);
    if (gen_cmd->parsed()) return gen(gen_spec, gen_samples, gen_seed, gen_format, resolve_max_n(max_n_flag), out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ParseError::Kind::TooManyVertices ? kBudget : kMalformed;
  } catch (const BudgetExceeded& e) {
    err << "error: budget exceeded: " << e.what() << '\n';
    return kBudget;
  }
  return kUsage;
}

}  // namespace berge::cli
