#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "berge/errors.hpp"
#include "berge/graph6.hpp"
#include "berge/json.hpp"

namespace py = pybind11;
using namespace berge;
using berge::json::Json;

namespace {

// Graphs cross the boundary as graph6 strings and results as JSON text; the
// Python package decodes them into dicts.
std::string dump(const Graph& g, Json body) {
  body["graph"] = emit_graph6(g);
  return body.dump();
}

Json not_berge(const NotBerge& e) {
  Json out{{"berge", false}};
  if (!e.hole().empty()) out["witness"] = {{"side", e.in_complement() ? "complement" : "G"}, {"hole", e.hole()}};
  return out;
}

std::string detect(const std::string& g6, const std::string& what, bool all) {
  const Graph g = parse_graph6(g6);
  Json found = Json::array();
  auto keep = [&](Json j) {
    found.push_back(std::move(j));
    return all;
  };
  if (what == "prism") {
    for_each_prism(g, [&](const Prism& p) { return keep(json::prism(p)); });
  } else if (what == "wheel") {
    for_each_wheel(g, [&](const Wheel& w) { return keep(json::wheel(w)); });
  } else if (what == "appearance-k4") {
    for (const auto& a : find_appearances_k4(g)) {
      keep(json::appearance(a));
      if (!all) break;
    }
  } else if (const auto fixed = fixed_graph_from_name(what)) {
    if (const auto s = contains_fixed(g, *fixed)) keep(Json{{"vertices", json::vertex_set(*s)}});
  } else {
    throw std::invalid_argument("unknown structure '" + what + "'");
  }
  Json out{{"structure", what}, {"found", !found.empty()}};
  if (all) {
    out["count"] = found.size();
    out["witnesses"] = found;
  } else if (!found.empty()) {
    out["witness"] = found.front();
  }
  return dump(g, out);
}

std::string verify(const std::string& claim_id, std::optional<int> exhaustive, std::optional<std::string> generator,
                   std::size_t samples, std::uint64_t seed, std::vector<std::string> graphs, unsigned jobs,
                   std::size_t binding_budget) {
  const int given = exhaustive.has_value() + generator.has_value() + !graphs.empty();
  if (given != 1) throw std::invalid_argument("give exactly one of exhaustive, generator or graphs");
  lab::Source source;
  std::string src;
  if (exhaustive) {
    if (*exhaustive < 0 || *exhaustive > lab::kMaxEnumerated) throw std::invalid_argument("exhaustive supports n <= 8");
    source = lab::Source::exhaustive(*exhaustive);
    src = "exhaustive(" + std::to_string(*exhaustive) + ")";
  } else if (generator) {
    const auto spec = lab::parse_generator_spec(*generator);
    source = lab::Source::sampled(spec, samples);
    src = lab::to_string(spec) + " x " + std::to_string(samples);
  } else {
    std::vector<Graph> parsed;
    for (const auto& s : graphs) parsed.push_back(parse_graph6(s));
    source = lab::Source::of(std::move(parsed));
    src = "graphs(" + std::to_string(graphs.size()) + ")";
  }
  lab::RunOptions options;
  options.jobs = std::max(1U, jobs);
  options.context.binding_budget = binding_budget;
  const auto& claim = lab::claim(claim_id);
  lab::CorpusReport report;
  {
    py::gil_scoped_release release;
    report = lab::run_suite(claim, source, seed, options);
  }
  Json out = json::corpus_report(report, false);
  out["source"] = src;
  out["seed"] = seed;
  return out.dump();
}

}  // namespace

PYBIND11_MODULE(_berge, m) {
  m.doc() = "Berge graph recognition, decompositions and lemma checks (JSON-returning core)";

  static py::exception<BudgetExceeded> budget(m, "BudgetExceeded", PyExc_RuntimeError);
  static py::exception<NotBerge> not_berge_exc(m, "NotBerge", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const BudgetExceeded& e) {
      budget(e.what());
    } catch (const NotBerge& e) {
      not_berge_exc(e.what());
    } catch (const ParseError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.attr("max_vertices") = kMaxVertices;

  m.def("graph6_from_edges", [](int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0 || n > kMaxVertices) throw std::invalid_argument("vertex count out of range");
    Graph g(n);
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n || u == v) throw std::invalid_argument("bad edge");
      g.add_edge(u, v);
    }
    return emit_graph6(g);
  });
  m.def("edges_from_graph6", [](const std::string& g6) {
    const Graph g = parse_graph6(g6);
    return std::make_pair(g.n(), g.edges());
  });

  m.def("is_berge", [](const std::string& g6) {
    const Graph g = parse_graph6(g6);
    return dump(g, json::berge_result(is_berge(g)));
  });
  m.def(
      "is_perfect",
      [](const std::string& g6, int limit) {
        const Graph g = parse_graph6(g6);
        return dump(g, json::perfection(is_perfect(g, limit)));
      },
      py::arg("g6"), py::arg("limit") = kDefaultPerfectionLimit);
  m.def("classify", [](const std::string& g6) {
    const Graph g = parse_graph6(g6);
    const auto c = classify_basic(g);
    Json out{{"basic", c.has_value()}};
    if (c) {
      out["class"] = to_string(c->kind);
      out["certificate"] = json::basic(*c);
    }
    return dump(g, out);
  });
  m.def("decompose", [](const std::string& g6) {
    const Graph g = parse_graph6(g6);
    try {
      return dump(g, json::verdict(decompose(g)));
    } catch (const NotBerge& e) {
      return dump(g, not_berge(e));
    }
  });
  m.def("skew_partitions", [](const std::string& g6) {
    const Graph g = parse_graph6(g6);
    Json parts = Json::array();
    for (const auto& c : find_skew_partitions(g)) parts.push_back(json::skew(c));
    return dump(g, Json{{"count", parts.size()}, {"partitions", parts}});
  });
  m.def("detect", &detect, py::arg("g6"), py::arg("structure"), py::arg("all") = false);
  m.def(
      "f_ladder",
      [](const std::string& g6, std::optional<bool> check_f8) {
        const Graph g = parse_graph6(g6);
        FLadderOptions options;
        options.check_f8 = check_f8;
        try {
          return dump(g, json::ladder(f_ladder(g, options)));
        } catch (const NotBerge& e) {
          return dump(g, not_berge(e));
        }
      },
      py::arg("g6"), py::arg("check_f8") = py::none());
  m.def("claim_ids", &lab::claim_ids);
  m.def("verify", &verify, py::arg("claim"), py::arg("exhaustive") = py::none(), py::arg("generator") = py::none(),
        py::arg("samples") = 0, py::arg("seed") = 0, py::arg("graphs") = std::vector<std::string>{},
        py::arg("jobs") = 1, py::arg("binding_budget") = lab::ClaimContext{}.binding_budget);
  m.def(
      "generate",
      [](const std::string& spec, std::uint64_t seed, std::size_t samples) {
        const auto parsed = lab::parse_generator_spec(spec);
        std::vector<std::string> out;
        for (std::size_t i = 0; i < samples; ++i) out.push_back(emit_graph6(lab::generate(parsed, lab::sample_seed(seed, i))));
        return out;
      },
      py::arg("spec"), py::arg("seed"), py::arg("samples") = 1);
}
