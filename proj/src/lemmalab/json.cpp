#include "berge/json.hpp"

#include <stdexcept>

#include "berge/graph6.hpp"

namespace berge::json {

namespace {

Json pairs(const std::vector<std::pair<int, int>>& ps) {
  Json out = Json::array();
  for (auto [a, b] : ps) out.push_back({a, b});
  return out;
}

std::vector<std::pair<int, int>> pairs_from(const Json& j) {
  std::vector<std::pair<int, int>> out;
  for (const auto& p : j) out.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
  return out;
}

Json sets(const std::vector<VertexSet>& ss) {
  Json out = Json::array();
  for (VertexSet s : ss) out.push_back(vertex_set(s));
  return out;
}

std::vector<VertexSet> sets_from(const Json& j) {
  std::vector<VertexSet> out;
  for (const auto& s : j) out.push_back(vertex_set_from(s));
  return out;
}

Json path(const std::vector<int>& p) { return Json(p); }

BasicClass basic_class_from(const std::string& name) {
  for (BasicClass c : {BasicClass::Bipartite, BasicClass::ComplementBipartite, BasicClass::LineOfBipartite,
                       BasicClass::ComplementLineOfBipartite, BasicClass::Bicograph})
    if (to_string(c) == name) return c;
  throw std::invalid_argument("unknown basic class '" + name + "'");
}

}  // namespace

Json vertex_set(VertexSet s) { return Json(s.to_vector()); }

VertexSet vertex_set_from(const Json& j) {
  VertexSet s;
  for (const auto& v : j) s.insert(v.get<int>());
  return s;
}

Json berge_result(const BergeResult& r) {
  Json out{{"berge", r.berge}};
  if (r.witness) out["witness"] = {{"side", to_string(r.witness->side)}, {"hole", r.witness->hole.verts}};
  return out;
}

Json perfection(const PerfectionReport& r) {
  Json out{{"perfect", r.perfect}};
  if (r.witness)
    out["witness"] = {{"subset", vertex_set(r.witness->subset)}, {"omega", r.witness->omega}, {"chi", r.witness->chi}};
  return out;
}

Json basic(const BasicCert& c) {
  Json out{{"class", to_string(c.kind)}};
  if (const auto* b = std::get_if<Bipartition>(&c.detail)) {
    out["left"] = vertex_set(b->left);
    out["right"] = vertex_set(b->right);
  } else if (const auto* r = std::get_if<LineRoot>(&c.detail)) {
    out["root"] = {{"n", r->root.n()}, {"edges", pairs(r->root.edges())}};
    out["edge_of"] = pairs(r->edge_of);
  } else if (const auto* bc = std::get_if<BicographCert>(&c.detail)) {
    out["ab"] = pairs(bc->ab);
    out["cd"] = pairs(bc->cd);
  }
  return out;
}

BasicCert basic_from(const Json& j) {
  BasicCert c;
  c.kind = basic_class_from(j.at("class").get<std::string>());
  switch (c.kind) {
    case BasicClass::Bipartite:
    case BasicClass::ComplementBipartite:
      c.detail = Bipartition{vertex_set_from(j.at("left")), vertex_set_from(j.at("right"))};
      break;
    case BasicClass::LineOfBipartite:
    case BasicClass::ComplementLineOfBipartite: {
      LineRoot r;
      r.root = Graph(j.at("root").at("n").get<int>());
      for (auto [u, v] : pairs_from(j.at("root").at("edges"))) r.root.add_edge(u, v);
      r.edge_of = pairs_from(j.at("edge_of"));
      c.detail = std::move(r);
      break;
    }
    case BasicClass::Bicograph:
      c.detail = BicographCert{pairs_from(j.at("ab")), pairs_from(j.at("cd"))};
      break;
  }
  return c;
}

Json two_join(const TwoJoinCert& c) {
  return {{"X1", vertex_set(c.x1)}, {"X2", vertex_set(c.x2)}, {"A1", vertex_set(c.a1)},
          {"B1", vertex_set(c.b1)}, {"A2", vertex_set(c.a2)}, {"B2", vertex_set(c.b2)}};
}

TwoJoinCert two_join_from(const Json& j) {
  return {vertex_set_from(j.at("X1")), vertex_set_from(j.at("X2")), vertex_set_from(j.at("A1")),
          vertex_set_from(j.at("B1")), vertex_set_from(j.at("A2")), vertex_set_from(j.at("B2"))};
}

Json m_join(const MJoinCert& c) {
  return {{"A", vertex_set(c.a)}, {"B", vertex_set(c.b)}, {"C", vertex_set(c.c)},
          {"D", vertex_set(c.d)}, {"E", vertex_set(c.e)}, {"F", vertex_set(c.f)}};
}

MJoinCert m_join_from(const Json& j) {
  return {vertex_set_from(j.at("A")), vertex_set_from(j.at("B")), vertex_set_from(j.at("C")),
          vertex_set_from(j.at("D")), vertex_set_from(j.at("E")), vertex_set_from(j.at("F"))};
}

Json skew(const SkewPartitionCert& c) {
  return {{"A", vertex_set(c.a)},
          {"B", vertex_set(c.b)},
          {"components_of_A", sets(c.components_of_a)},
          {"anticomponents_of_B", sets(c.anticomponents_of_b)},
          {"loose", c.loose},
          {"balanced", c.balanced}};
}

SkewPartitionCert skew_from(const Json& j) {
  return {vertex_set_from(j.at("A")),
          vertex_set_from(j.at("B")),
          sets_from(j.at("components_of_A")),
          sets_from(j.at("anticomponents_of_B")),
          j.at("loose").get<bool>(),
          j.at("balanced").get<bool>()};
}

Json verdict(const Verdict& v) {
  Json out{{"kind", to_string(v.kind)}};
  if (const auto* b = std::get_if<BasicCert>(&v.cert)) {
    out["class"] = to_string(b->kind);
    out["certificate"] = basic(*b);
  } else if (const auto* t = std::get_if<TwoJoinCert>(&v.cert)) {
    out["side"] = v.kind == VerdictKind::TwoJoinComplement ? "complement" : "G";
    out["certificate"] = two_join(*t);
  } else if (const auto* m = std::get_if<MJoinCert>(&v.cert)) {
    out["certificate"] = m_join(*m);
  } else if (const auto* s = std::get_if<SkewPartitionCert>(&v.cert)) {
    out["certificate"] = skew(*s);
  }
  return out;
}

Verdict verdict_from(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  Verdict v;
  if (kind == "basic") {
    v.kind = VerdictKind::Basic;
    v.cert = basic_from(j.at("certificate"));
  } else if (kind == "two_join" || kind == "two_join_complement") {
    v.kind = kind == "two_join" ? VerdictKind::TwoJoin : VerdictKind::TwoJoinComplement;
    v.cert = two_join_from(j.at("certificate"));
  } else if (kind == "m_join") {
    v.kind = VerdictKind::MJoin;
    v.cert = m_join_from(j.at("certificate"));
  } else if (kind == "balanced_skew") {
    v.kind = VerdictKind::BalancedSkew;
    v.cert = skew_from(j.at("certificate"));
  } else if (kind == "counterexample") {
    v.kind = VerdictKind::Counterexample;
  } else {
    throw std::invalid_argument("unknown verdict kind '" + kind + "'");
  }
  return v;
}

Json prism(const Prism& p) {
  Json paths = Json::array();
  for (const auto& q : p.paths) paths.push_back(path(q.verts));
  return {{"a", p.a}, {"b", p.b}, {"paths", paths}, {"parity", to_string(p.parity)}, {"long", p.is_long}};
}

Json wheel(const Wheel& w) {
  return {{"rim", w.rim.verts}, {"hub", vertex_set(w.hub)}, {"segments", w.segments}, {"odd", w.odd}};
}

Json appearance(const AppearanceK4& a) {
  return {{"vertices", vertex_set(a.vertices)},
          {"root", {{"n", a.root.root.n()}, {"edges", pairs(a.root.root.edges())}}},
          {"edge_of", pairs(a.root.edge_of)},
          {"branch_lengths", a.branch_lengths},
          {"degenerate", a.degenerate}};
}

Json pseudowheel(const Pseudowheel& w) {
  return {{"X", vertex_set(w.x)}, {"Y", vertex_set(w.y)}, {"path", w.path.verts}};
}

Json ladder(const FLadderReport& r) {
  Json out{{"f8_skipped", r.f8_skipped}};
  for (std::size_t k = 0; k < r.member.size(); ++k) {
    const auto& m = r.member[k];
    out["F" + std::to_string(k + 1)] = m ? Json(*m) : Json(nullptr);
  }
  if (r.f8_skipped) out["f8_reason"] = r.f8_reason;
  return out;
}

Json corpus_report(const lab::CorpusReport& r, bool timing) {
  Json ces = Json::array();
  for (const auto& ce : r.counterexamples) {
    Json b = Json::object();
    for (const auto& binding : ce.bindings) b[binding.name] = binding.verts;
    ces.push_back({{"claim", ce.claim}, {"graph", emit_graph6(ce.graph)}, {"bindings", b}, {"detail", ce.detail}});
  }
  Json overflows = Json::array();
  for (const auto& o : r.overflows)
    overflows.push_back({{"index", o.index}, {"graph", o.graph6}, {"reason", o.reason}});
  Json out{{"claim", r.claim},
           {"graphs_total", r.graphs_total},
           {"graphs_checked", r.graphs_checked},
           {"skipped_non_berge", r.skipped_non_berge},
           {"bindings", r.bindings},
           {"overflow_count", r.overflows.size()},
           {"overflows", overflows},
           {"counterexample_count", r.counterexamples.size()},
           {"counterexamples", ces},
           {"unconfirmed", r.unconfirmed},
           {"passed", r.passed()}};
  if (timing) out["wall_time"] = r.wall_time;
  return out;
}

}  // namespace berge::json
