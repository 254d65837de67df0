#include "berge/decompositions.hpp"
#include "berge/errors.hpp"
#include "berge/structure.hpp"

namespace berge {

namespace {

// Odd path of length >= 3 between nonadjacent members of `ends` whose
// interior lies in `through`.
std::optional<std::vector<int>> odd_connector(const Graph& g, VertexSet through, VertexSet ends) {
  std::optional<std::vector<int>> found;
  for (int s : ends) {
    for_each_induced_path(g, s, through | ends, [&](std::span<const int> path) {
      if (path.size() == 1) return Visit::Descend;
      if (!ends.contains(path.back())) return Visit::Descend;
      if (path.size() >= 4 && path.size() % 2 == 0 && s < path.back()) {
        found.emplace(path.begin(), path.end());
        return Visit::Stop;
      }
      return Visit::Prune;
    });
    if (found) break;
  }
  return found;
}

}  // namespace

BalanceResult is_balanced_pair(const Graph& g, VertexSet a, VertexSet b) {
  if (auto p = odd_connector(g, a, b)) return {false, BalanceViolation{false, std::move(*p)}};
  if (auto p = odd_connector(complement(g), b, a)) return {false, BalanceViolation{true, std::move(*p)}};
  return {true, std::nullopt};
}

bool for_each_skew_partition(const Graph& g, const std::function<bool(const SkewPartitionCert&)>& visit) {
  const int n = g.n();
  const Mask full = g.vertices().bits();
  for (int k = 1; k < n; ++k) {
    // subsets of size k in increasing order (Gosper)
    for (Mask b = (Mask{1} << k) - 1; b <= full && b != 0;) {
      const VertexSet bs(b), as(full & ~b);
      auto comps = components(g, as);
      if (comps.size() >= 2) {
        auto anti = anticomponents(g, bs);
        if (anti.size() >= 2) {
          SkewPartitionCert c{as, bs, std::move(comps), std::move(anti), false, false};
          for (int v : bs)
            for (VertexSet comp : c.components_of_a)
              if (!(g.neighbours(v) & comp).size()) c.loose = true;
          for (int v : as)
            for (VertexSet anti_b : c.anticomponents_of_b)
              if (anti_b.subset_of(g.neighbours(v))) c.loose = true;
          c.balanced = is_balanced_pair(g, as, bs).balanced;
          if (!visit(c)) return false;
        }
      }
      const Mask low = b & -b;
      const Mask ripple = b + low;
      if (ripple == 0) break;
      b = (((ripple ^ b) >> 2) / low) | ripple;
    }
  }
  return true;
}

std::vector<SkewPartitionCert> find_skew_partitions(const Graph& g) {
  std::vector<SkewPartitionCert> out;
  for_each_skew_partition(g, [&](const SkewPartitionCert& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

std::optional<SkewPartitionCert> find_balanced_skew(const Graph& g) {
  std::optional<SkewPartitionCert> out;
  for_each_skew_partition(g, [&](const SkewPartitionCert& c) {
    if (!c.balanced) return true;
    out = c;
    return false;
  });
  return out;
}

namespace {

// Partition of s into classes of the reachability relation of `adj`.
std::vector<VertexSet> classes(const Graph& g, VertexSet s, bool anti) {
  std::vector<VertexSet> out;
  VertexSet left = s;
  while (!left.empty()) {
    VertexSet cls{left.min()};
    bool grew = true;
    while (grew) {
      grew = false;
      for (int u : cls)
        for (int v : left - cls)
          if (g.adjacent(u, v) != anti) {
            cls.insert(v);
            grew = true;
          }
    }
    out.push_back(cls);
    left = left - cls;
  }
  return out;
}

// Looks for a vertex set S inside `inner` (|S| even, >= 2) inducing a path
// whose ends attach to exactly one end each of two members of `outer` that
// are nonadjacent, all read in g when !anti and in the complement otherwise.
bool odd_through_subsets(const Graph& g, VertexSet inner, VertexSet outer, bool anti) {
  auto adj = [&](int u, int v) { return u != v && g.adjacent(u, v) != anti; };
  const std::vector<int> in = inner.to_vector();
  const std::size_t m = in.size();
  for (Mask pick = 1; pick < (Mask{1} << m); ++pick) {
    if (std::popcount(pick) % 2 != 0) continue;
    std::vector<int> s;
    for (std::size_t i = 0; i < m; ++i)
      if ((pick >> i) & 1U) s.push_back(in[i]);
    std::vector<int> ends;
    bool ok = true;
    for (int u : s) {
      int d = 0;
      for (int v : s) d += adj(u, v);
      if (d == 1)
        ends.push_back(u);
      else if (d != 2)
        ok = false;
    }
    if (!ok || ends.size() != 2) continue;
    // connected with degrees (1,2,...,2,1) means a path
    std::vector<int> reach{ends[0]};
    for (std::size_t i = 0; i < reach.size(); ++i)
      for (int v : s)
        if (adj(reach[i], v) && std::find(reach.begin(), reach.end(), v) == reach.end()) reach.push_back(v);
    if (reach.size() != s.size()) continue;
    for (int x : outer)
      for (int y : outer) {
        if (x == y || adj(x, y)) continue;
        bool fits = true;
        for (int v : s) {
          fits = fits && adj(x, v) == (v == ends[0]);
          fits = fits && adj(y, v) == (v == ends[1]);
        }
        if (fits) return true;
      }
  }
  return false;
}

}  // namespace

bool check_skew_partition(const Graph& g, const SkewPartitionCert& c) {
  if (c.a.intersects(c.b) || (c.a | c.b) != g.vertices()) return false;
  const auto comps = classes(g, c.a, false);
  const auto anti = classes(g, c.b, true);
  if (comps.size() < 2 || anti.size() < 2) return false;
  if (comps != c.components_of_a || anti != c.anticomponents_of_b) return false;
  bool loose = false;
  for (int v : c.b)
    for (VertexSet k : comps) {
      bool touches = false;
      for (int u : k) touches = touches || g.adjacent(u, v);
      loose = loose || !touches;
    }
  for (int v : c.a)
    for (VertexSet k : anti) {
      bool all = true;
      for (int u : k) all = all && g.adjacent(u, v);
      loose = loose || all;
    }
  const bool balanced = !odd_through_subsets(g, c.a, c.b, false) && !odd_through_subsets(g, c.b, c.a, true);
  return loose == c.loose && balanced == c.balanced;
}

std::string_view to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Basic:
      return "basic";
    case VerdictKind::TwoJoin:
      return "two_join";
    case VerdictKind::TwoJoinComplement:
      return "two_join_complement";
    case VerdictKind::MJoin:
      return "m_join";
    case VerdictKind::BalancedSkew:
      return "balanced_skew";
    case VerdictKind::Counterexample:
      return "counterexample";
  }
  return "?";
}

Verdict decompose(const Graph& g) {
  if (auto b = is_berge(g); !b.berge)
    throw NotBerge("decomposition needs a Berge graph", b.witness->hole.verts, b.witness->side == Side::Complement);
  if (auto c = classify_basic(g)) return {VerdictKind::Basic, std::move(*c)};
  if (auto c = find_two_join(g)) return {VerdictKind::TwoJoin, *c};
  if (auto c = find_two_join(complement(g))) return {VerdictKind::TwoJoinComplement, *c};
  if (auto c = find_m_join(g)) return {VerdictKind::MJoin, *c};
  if (auto c = find_balanced_skew(g)) return {VerdictKind::BalancedSkew, std::move(*c)};
  return {VerdictKind::Counterexample, std::monostate{}};
}

bool check_verdict(const Graph& g, const Verdict& v) {
  switch (v.kind) {
    case VerdictKind::Basic:
      return std::holds_alternative<BasicCert>(v.cert) && check_basic(g, std::get<BasicCert>(v.cert));
    case VerdictKind::TwoJoin:
      return std::holds_alternative<TwoJoinCert>(v.cert) && check_two_join(g, std::get<TwoJoinCert>(v.cert));
    case VerdictKind::TwoJoinComplement:
      return std::holds_alternative<TwoJoinCert>(v.cert) &&
             check_two_join(complement(g), std::get<TwoJoinCert>(v.cert));
    case VerdictKind::MJoin:
      return std::holds_alternative<MJoinCert>(v.cert) && check_m_join(g, std::get<MJoinCert>(v.cert));
    case VerdictKind::BalancedSkew:
      return std::holds_alternative<SkewPartitionCert>(v.cert) && std::get<SkewPartitionCert>(v.cert).balanced &&
             check_skew_partition(g, std::get<SkewPartitionCert>(v.cert));
    case VerdictKind::Counterexample:
      return std::holds_alternative<std::monostate>(v.cert);
  }
  return false;
}

}  // namespace berge
