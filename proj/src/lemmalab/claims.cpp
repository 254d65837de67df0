#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "berge/decompositions.hpp"
#include "berge/errors.hpp"
#include "berge/lemmalab.hpp"
#include "berge/recognizers.hpp"
#include "berge/structure.hpp"
#include "berge/structures.hpp"

namespace berge::lab {

namespace {

Mask bit(int v) { return VertexSet::bit(v); }

std::vector<int> verts_of(Mask m) { return VertexSet(m).to_vector(); }

// Common neighbours of every vertex of x (x itself excluded).
Mask complete_to(const Graph& g, Mask x) {
  Mask c = g.vertices().bits() & ~x;
  for (int v : VertexSet(x)) c &= g.row(v);
  return c;
}

// Anticonnected subsets of `allowed`, visited as in for_each_connected_subset
// on the complement; Visit::Prune skips every superset reached from a set.
template <typename F>
bool anticonnected_step(const Graph& co, Mask allowed, Mask set, Mask cand, Mask forbidden, F& visit) {
  const Visit r = visit(set);
  if (r == Visit::Stop) return false;
  if (r == Visit::Prune) return true;
  while (cand != 0) {
    const int w = std::countr_zero(cand);
    cand &= cand - 1;
    const Mask grow = co.row(w) & allowed & ~set & ~forbidden & ~bit(w);
    if (!anticonnected_step(co, allowed, set | bit(w), cand | grow, forbidden, visit)) return false;
    forbidden |= bit(w);
  }
  return true;
}

template <typename F>
bool for_each_anticonnected(const Graph& co, Mask allowed, F&& visit) {
  for (int v : VertexSet(allowed)) {
    const Mask below = (Mask{2} << v) - 1;
    if (!anticonnected_step(co, allowed, bit(v), co.row(v) & allowed & ~below, below, visit)) return false;
  }
  return true;
}

// Per-graph search state: binding budget and the outcome under construction.
class Search {
 public:
  Search(std::string_view claim, const Graph& g, const ClaimContext& ctx) : claim_(claim), g_(g), ctx_(ctx) {}

  /// Accounts for one hypothesis instance; false once the budget is spent.
  bool spend() {
    if (out_.bindings >= ctx_.binding_budget) {
      out_.overflow = true;
      return false;
    }
    ++out_.bindings;
    return true;
  }
  void report(std::vector<Binding> bindings, std::string detail) {
    out_.counterexamples.push_back({std::string(claim_), g_, std::move(bindings), std::move(detail)});
  }
  /// Searches stop at the first counterexample or when the budget runs out.
  bool done() const { return out_.overflow || !out_.counterexamples.empty(); }
  GraphOutcome take() { return std::move(out_); }

 private:
  std::string_view claim_;
  const Graph& g_;
  const ClaimContext& ctx_;
  GraphOutcome out_;
};

const Binding* find_binding(const std::vector<Binding>& bs, std::string_view name) {
  for (const auto& b : bs)
    if (b.name == name) return &b;
  return nullptr;
}

// Like find_binding but never null; a missing name makes confirmation fail.
std::vector<int> binding(const std::vector<Binding>& bs, std::string_view name) {
  const Binding* b = find_binding(bs, name);
  if (!b) throw std::invalid_argument("missing binding " + std::string(name));
  return b->verts;
}

bool complete_vertex(const Graph& g, int v, const std::vector<int>& x) {
  return std::all_of(x.begin(), x.end(), [&](int u) { return u != v && g.adjacent(u, v); });
}

// Exhaustive search, over orderings of subsets of `pool`, for an odd
// antipath from `s` to `t` with interior in `pool`.
bool odd_antipath_brute(const Graph& g, int s, int t, const std::vector<int>& pool) {
  std::vector<int> seq{s};
  std::vector<bool> used(pool.size(), false);
  auto rec = [&](auto&& self) -> bool {
    seq.push_back(t);
    const bool closes = is_antipath(g, seq) && (seq.size() - 1) % 2 == 1;
    seq.pop_back();
    if (closes) return true;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (used[i]) continue;
      seq.push_back(pool[i]);
      used[i] = true;
      const bool found = is_antipath(g, seq) && self(self);
      used[i] = false;
      seq.pop_back();
      if (found) return true;
    }
    return false;
  };
  return rec(rec);
}

// The six-edge condition for (a, b) against the path p, checked edge by edge.
bool is_leap(const Graph& g, int a, int b, const std::vector<int>& p) {
  if (a == b || g.adjacent(a, b) || p.size() < 3) return false;
  const std::size_t n = p.size();
  int edges = 0;
  for (int x : p) edges += g.adjacent(a, x) + g.adjacent(b, x);
  return edges == 6 && g.adjacent(a, p[0]) && g.adjacent(a, p[1]) && g.adjacent(a, p[n - 1]) &&
         g.adjacent(b, p[0]) && g.adjacent(b, p[n - 2]) && g.adjacent(b, p[n - 1]);
}

// ---------------------------------------------------------------------------
// Whole-graph claims

GraphOutcome check_spgt(const Graph& g, const ClaimContext& ctx) {
  Search s("spgt", g, ctx);
  s.spend();
  const bool berge = is_berge(g).berge;
  const bool perfect = is_perfect(g).perfect;
  if (berge != perfect)
    s.report({}, berge ? "Berge but not perfect" : "perfect but not Berge");
  return s.take();
}

bool confirm_spgt(const Graph& g, const std::vector<Binding>&) {
  return is_berge(g).berge != is_perfect(g).perfect;
}

GraphOutcome check_lovasz(const Graph& g, const ClaimContext& ctx) {
  Search s("lovasz", g, ctx);
  s.spend();
  const bool a = is_perfect(g).perfect;
  const bool b = is_perfect(complement(g)).perfect;
  if (a != b) s.report({}, a ? "perfect with an imperfect complement" : "imperfect with a perfect complement");
  return s.take();
}

bool confirm_lovasz(const Graph& g, const std::vector<Binding>&) {
  return is_perfect(g).perfect != is_perfect(complement(g)).perfect;
}

GraphOutcome check_decomp(const Graph& g, const ClaimContext& ctx) {
  Search s("decomp", g, ctx);
  s.spend();
  const Verdict v = decompose(g);
  if (v.kind == VerdictKind::Counterexample)
    s.report({}, "no basic class, 2-join, M-join or balanced skew partition");
  else if (!check_verdict(g, v))
    s.report({}, "certificate of kind " + std::string(to_string(v.kind)) + " failed validation");
  return s.take();
}

bool confirm_decomp(const Graph& g, const std::vector<Binding>&) {
  const Verdict v = decompose(g);
  return v.kind == VerdictKind::Counterexample || !check_verdict(g, v);
}

// ---------------------------------------------------------------------------
// Odd paths with X-complete ends

enum class PathClaim { RR, Greentouch };

GraphOutcome check_odd_path_claim(const Graph& g, const ClaimContext& ctx, PathClaim which) {
  Search s(which == PathClaim::RR ? "rr" : "greentouch", g, ctx);
  const Graph co = complement(g);
  const Mask all = g.vertices().bits();

  auto examine = [&](std::span<const int> path) {
    const std::size_t n = path.size();
    Mask pv = 0;
    for (int v : path) pv |= bit(v);
    const Mask interior = pv & ~bit(path.front()) & ~bit(path.back());
    const Mask pool = g.row(path.front()) & g.row(path.back()) & ~pv;
    for_each_anticonnected(co, pool, [&](Mask x) {
      const Mask comp = complete_to(g, x);
      for (std::size_t i = 0; i + 1 < n; ++i)
        if ((comp >> path[i] & 1U) && (comp >> path[i + 1] & 1U)) return Visit::Descend;
      if (!s.spend()) return Visit::Stop;
      std::vector<Binding> b{{"X", verts_of(x)}, {"P", {path.begin(), path.end()}}};
      if (which == PathClaim::Greentouch) {
        for (int v : VertexSet(comp))
          if ((g.row(v) & interior) == 0) {
            b.push_back({"v", {v}});
            s.report(std::move(b), "X-complete vertex with no neighbour in the interior of P");
            return Visit::Stop;
          }
        return Visit::Descend;
      }
      if (n - 1 >= 5) {
        const Mask for_a = bit(path[0]) | bit(path[1]) | bit(path[n - 1]);
        const Mask for_b = bit(path[0]) | bit(path[n - 2]) | bit(path[n - 1]);
        for (int a : VertexSet(x))
          if ((g.row(a) & pv) == for_a)
            for (int b2 : VertexSet(x))
              if ((g.row(b2) & pv) == for_b && !g.adjacent(a, b2)) return Visit::Descend;
        s.report(std::move(b), "no X-complete edge and no leap for P in X");
        return Visit::Stop;
      }
      // length 3: look for an odd antipath p2 .. p3 through X
      const int p2 = path[1], p3 = path[2];
      const bool found = !for_each_induced_path(co, p2, VertexSet(x | bit(p3)), [&](std::span<const int> q) {
        if (q.back() != p3) return Visit::Descend;
        return q.size() % 2 == 0 ? Visit::Stop : Visit::Prune;
      });
      if (!found) {
        s.report(std::move(b), "no X-complete edge and no odd antipath between the internal vertices of P");
        return Visit::Stop;
      }
      return Visit::Descend;
    });
  };

  for (int p1 : g.vertices()) {
    if (s.done()) break;
    for_each_induced_path(g, p1, VertexSet(all), [&](std::span<const int> path) {
      if (s.done()) return Visit::Stop;
      const std::size_t len = path.size() - 1;
      if (len >= 3 && len % 2 == 1 && path.back() > p1) examine(path);
      return s.done() ? Visit::Stop : Visit::Descend;
    });
  }
  return s.take();
}

// Shared hypothesis check for rr and greentouch bindings.
bool odd_path_hypothesis(const Graph& g, const std::vector<int>& x, const std::vector<int>& p) {
  if (x.empty() || !is_anticonnected(g, VertexSet::of(x)) || !is_induced_path(g, p)) return false;
  if (p.size() < 4 || p.size() % 2 != 0) return false;
  if (VertexSet::of(x).intersects(VertexSet::of(p))) return false;
  if (!complete_vertex(g, p.front(), x) || !complete_vertex(g, p.back(), x)) return false;
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (complete_vertex(g, p[i], x) && complete_vertex(g, p[i + 1], x)) return false;
  return is_berge(g).berge;
}

bool confirm_rr(const Graph& g, const std::vector<Binding>& bs) {
  const auto x = binding(bs, "X");
  const auto p = binding(bs, "P");
  if (!odd_path_hypothesis(g, x, p)) return false;
  if (p.size() - 1 >= 5) {
    for (int a : x)
      for (int b : x)
        if (is_leap(g, a, b, p)) return false;
    return true;
  }
  return !odd_antipath_brute(g, p[1], p[2], x);
}

bool confirm_greentouch(const Graph& g, const std::vector<Binding>& bs) {
  const auto x = binding(bs, "X");
  const auto p = binding(bs, "P");
  const auto v = binding(bs, "v");
  if (v.size() != 1 || !odd_path_hypothesis(g, x, p)) return false;
  if (std::find(x.begin(), x.end(), v[0]) != x.end() || !complete_vertex(g, v[0], x)) return false;
  for (std::size_t i = 1; i + 1 < p.size(); ++i)
    if (g.adjacent(v[0], p[i])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Parity of X-complete edges between X-complete vertices

// Index pair (i, j) of a subpath along `seq` whose complete-edge count and
// length disagree in parity. `cyclic` lets subpaths wrap around.
std::optional<std::pair<int, int>> parity_mismatch(const std::vector<int>& seq, Mask comp, bool cyclic) {
  const int n = static_cast<int>(seq.size());
  auto in = [&](int i) { return (comp >> seq[static_cast<std::size_t>(((i % n) + n) % n)] & 1U) != 0; };
  for (int i = 0; i < n; ++i) {
    if (!in(i)) continue;
    int edges = 0;
    const int last = cyclic ? i + n - 1 : n - 1;
    for (int j = i + 1; j <= last; ++j) {
      if (in(j - 1) && in(j)) ++edges;
      if (in(j) && (edges - (j - i)) % 2 != 0) return std::pair{i, j};
    }
  }
  return std::nullopt;
}

std::vector<int> cyclic_slice(const std::vector<int>& seq, int i, int j) {
  std::vector<int> out;
  const int n = static_cast<int>(seq.size());
  for (int k = i; k <= j; ++k) out.push_back(seq[static_cast<std::size_t>(k % n)]);
  return out;
}

GraphOutcome check_evengap(const Graph& g, const ClaimContext& ctx) {
  Search s("evengap", g, ctx);
  const Graph co = complement(g);
  const Mask all = g.vertices().bits();
  const std::vector<Hole> holes = enumerate_holes(g, 4);

  for_each_anticonnected(co, all, [&](Mask x) {
    const Mask comp = complete_to(g, x);
    if (std::popcount(comp) < 3) return Visit::Prune;
    auto mismatch = [&](const std::vector<int>& seq, bool cyclic, const char* name) {
      if (auto ij = parity_mismatch(seq, comp, cyclic)) {
        s.report({{"X", verts_of(x)}, {name, seq}, {"Q", cyclic_slice(seq, ij->first, ij->second)}},
                 "X-complete edge count of Q and its length differ in parity");
        return true;
      }
      return false;
    };
    for (const Hole& h : holes) {
      const Mask hv = h.vertex_set().bits();
      if ((hv & x) != 0 || std::popcount(hv & comp) < 3) continue;
      if (!s.spend()) return Visit::Stop;
      if (mismatch(h.verts, true, "C")) return Visit::Stop;
    }
    // Paths with X-complete ends and an X-complete interior vertex; any
    // other qualifying path contains one of these around each subpath.
    for (int start : VertexSet(comp)) {
      const bool go = for_each_induced_path(g, start, VertexSet(all & ~x), [&](std::span<const int> p) {
        if (p.size() < 3 || p.back() < start || !(comp >> p.back() & 1U)) return Visit::Descend;
        Mask inner = 0;
        for (std::size_t i = 1; i + 1 < p.size(); ++i) inner |= bit(p[i]);
        if ((inner & comp) == 0) return Visit::Descend;
        if (!s.spend()) return Visit::Stop;
        return mismatch({p.begin(), p.end()}, false, "P") ? Visit::Stop : Visit::Descend;
      });
      if (!go) return Visit::Stop;
    }
    return Visit::Descend;
  });
  return s.take();
}

bool confirm_evengap(const Graph& g, const std::vector<Binding>& bs) {
  const auto x = binding(bs, "X");
  const auto q = binding(bs, "Q");
  const Binding* hole = find_binding(bs, "C");
  const Binding* path = find_binding(bs, "P");
  if ((hole == nullptr) == (path == nullptr)) return false;
  const auto& p = hole ? hole->verts : path->verts;
  if (x.empty() || !is_anticonnected(g, VertexSet::of(x)) || !is_berge(g).berge) return false;
  if (hole ? !is_hole(g, p) : !is_induced_path(g, p)) return false;
  if (VertexSet::of(x).intersects(VertexSet::of(p))) return false;
  const auto count = std::count_if(p.begin(), p.end(), [&](int v) { return complete_vertex(g, v, x); });
  if (count < 3) return false;
  // Q must be consecutive along P (wrapping for a hole)
  const int n = static_cast<int>(p.size());
  const auto at = std::find(p.begin(), p.end(), q.front());
  if (at == p.end() || q.size() < 2 || static_cast<int>(q.size()) > n) return false;
  const int i = static_cast<int>(at - p.begin());
  for (int k = 0; k < static_cast<int>(q.size()); ++k) {
    if (!hole && i + k >= n) return false;
    if (p[static_cast<std::size_t>((i + k) % n)] != q[static_cast<std::size_t>(k)]) return false;
  }
  if (hole && static_cast<int>(q.size()) == n) return false;
  if (!complete_vertex(g, q.front(), x) || !complete_vertex(g, q.back(), x)) return false;
  int edges = 0;
  for (std::size_t k = 0; k + 1 < q.size(); ++k)
    edges += complete_vertex(g, q[k], x) && complete_vertex(g, q[k + 1], x);
  return (edges - static_cast<int>(q.size() - 1)) % 2 != 0;
}

// ---------------------------------------------------------------------------
// Vertices linked onto a triangle

// Extends the linkage with a path from tri[i]; paths end at their first
// neighbour of v, since any linkage shortens to one of that kind.
bool link_from(const Graph& g, int v, const std::array<int, 3>& tri, int i, Mask blocked,
               std::array<std::vector<int>, 3>& paths) {
  if (i == 3) return true;
  const int a = tri[static_cast<std::size_t>(i)];
  Mask forbid = blocked | bit(v);
  for (int j = i + 1; j < 3; ++j) forbid |= g.row(tri[static_cast<std::size_t>(j)]) | bit(tri[static_cast<std::size_t>(j)]);
  const Mask through = g.vertices().bits() & ~forbid;
  bool found = false;
  for_each_induced_path(g, a, VertexSet(through), [&](std::span<const int> p) {
    if (!g.adjacent(p.back(), v)) return Visit::Descend;
    Mask closed = 0;
    for (int u : p) closed |= g.row(u) | bit(u);
    paths[static_cast<std::size_t>(i)].assign(p.begin(), p.end());
    if (link_from(g, v, tri, i + 1, blocked | closed, paths)) {
      found = true;
      return Visit::Stop;
    }
    return Visit::Prune;
  });
  return found;
}

GraphOutcome check_trianglev(const Graph& g, const ClaimContext& ctx) {
  Search s("trianglev", g, ctx);
  const int n = g.n();
  for (int a = 0; a < n && !s.done(); ++a)
    for (int b : VertexSet(g.row(a) & ~((Mask{2} << a) - 1))) {
      if (s.done()) break;
      for (int c : VertexSet(g.row(a) & g.row(b) & ~((Mask{2} << b) - 1))) {
        const Mask tri = bit(a) | bit(b) | bit(c);
        for (int v : g.vertices()) {
          if ((tri >> v & 1U) || std::popcount(g.row(v) & tri) > 1) continue;
          if (!s.spend()) break;
          std::array<std::vector<int>, 3> paths;
          if (link_from(g, v, {a, b, c}, 0, 0, paths)) {
            s.report({{"T", {a, b, c}}, {"v", {v}}, {"P1", paths[0]}, {"P2", paths[1]}, {"P3", paths[2]}},
                     "v is linked onto the triangle but sees at most one of its vertices");
            break;
          }
        }
        if (s.done()) break;
      }
    }
  return s.take();
}

bool confirm_trianglev(const Graph& g, const std::vector<Binding>& bs) {
  const auto t = binding(bs, "T");
  const auto v = binding(bs, "v");
  const std::array<std::vector<int>, 3> p{binding(bs, "P1"), binding(bs, "P2"), binding(bs, "P3")};
  if (t.size() != 3 || v.size() != 1 || !g.is_clique(VertexSet::of(t)) || !is_berge(g).berge) return false;
  int seen = 0;
  for (int a : t) seen += g.adjacent(a, v[0]);
  if (seen > 1) return false;
  for (int i = 0; i < 3; ++i) {
    const auto& pi = p[static_cast<std::size_t>(i)];
    if (pi.empty() || pi.front() != t[static_cast<std::size_t>(i)] || !is_induced_path(g, pi)) return false;
    if (std::none_of(pi.begin(), pi.end(), [&](int u) { return g.adjacent(u, v[0]); })) return false;
    for (int j = i + 1; j < 3; ++j) {
      const auto& pj = p[static_cast<std::size_t>(j)];
      for (int x : pi)
        for (int y : pj) {
          if (x == y) return false;
          const bool allowed = x == pi.front() && y == pj.front();
          if (g.adjacent(x, y) != allowed) return false;
        }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Holes with exactly one X-complete edge

GraphOutcome check_rrc(const Graph& g, const ClaimContext& ctx) {
  Search s("rrc", g, ctx);
  const Graph co = complement(g);
  for_each_hole(g, g.vertices(), 5, Parity::Any, [&](const Hole& h) {
    const Mask cv = h.vertex_set().bits();
    const int k = h.length();
    auto at = [&](int i) { return h.verts[static_cast<std::size_t>(((i % k) + k) % k)]; };
    for (int i = 0; i < k; ++i) {
      // p1 = u, walking away from v, ends at pn = v
      const int u = at(i), v = at(i + 1), p2 = at(i - 1), pn1 = at(i + 2);
      const Mask pool = g.row(u) & g.row(v) & ~cv;
      const Mask hat = bit(u) | bit(v);
      const Mask for_a = hat | bit(p2), for_b = hat | bit(pn1);
      const bool go = for_each_anticonnected(co, pool, [&](Mask x) {
        if ((complete_to(g, x) & cv) != hat) return Visit::Descend;
        if (!s.spend()) return Visit::Stop;
        for (int y : VertexSet(x))
          if ((g.row(y) & cv) == hat) return Visit::Descend;
        for (int a : VertexSet(x))
          if ((g.row(a) & cv) == for_a)
            for (int b : VertexSet(x))
              if ((g.row(b) & cv) == for_b && !g.adjacent(a, b)) return Visit::Descend;
        s.report({{"X", verts_of(x)}, {"C", h.verts}, {"uv", {u, v}}}, "X holds neither a hat nor a leap at uv");
        return Visit::Stop;
      });
      if (!go) return false;
    }
    return true;
  });
  return s.take();
}

bool confirm_rrc(const Graph& g, const std::vector<Binding>& bs) {
  const auto x = binding(bs, "X");
  const auto c = binding(bs, "C");
  const auto uv = binding(bs, "uv");
  if (x.empty() || uv.size() != 2 || !is_anticonnected(g, VertexSet::of(x)) || !is_hole(g, c) || c.size() < 5)
    return false;
  if (VertexSet::of(x).intersects(VertexSet::of(c)) || !is_berge(g).berge) return false;
  const int n = static_cast<int>(c.size());
  const auto iu = std::find(c.begin(), c.end(), uv[0]) - c.begin();
  if (iu == n || c[static_cast<std::size_t>((iu + 1) % n)] != uv[1]) return false;
  for (int w : c)
    if (complete_vertex(g, w, x) != (w == uv[0] || w == uv[1])) return false;
  // path C minus uv, from u around to v
  std::vector<int> p;
  for (int k = 0; k < n; ++k) p.push_back(c[static_cast<std::size_t>((iu - k + n) % n)]);
  for (int y : x) {
    int seen = 0;
    for (int w : c) seen += g.adjacent(y, w);
    if (seen == 2 && g.adjacent(y, uv[0]) && g.adjacent(y, uv[1])) return false;
  }
  for (int a : x)
    for (int b : x)
      if (is_leap(g, a, b, p)) return false;
  return true;
}

// ---------------------------------------------------------------------------

GraphOutcome check_bigholes(const Graph& g, const ClaimContext& ctx) {
  Search s("bigholes", g, ctx);
  const auto holes = enumerate_holes(g, 8);
  if (holes.empty()) return s.take();
  const auto antiholes = enumerate_antiholes(g, 8);
  for (const Hole& c : holes)
    for (const Hole& d : antiholes) {
      if (!s.spend()) return s.take();
      if ((c.vertex_set() & d.vertex_set()).size() > 3) {
        s.report({{"C", c.verts}, {"D", d.verts}}, "hole and antihole share more than three vertices");
        return s.take();
      }
    }
  return s.take();
}

bool confirm_bigholes(const Graph& g, const std::vector<Binding>& bs) {
  const auto c = binding(bs, "C");
  const auto d = binding(bs, "D");
  return c.size() >= 8 && d.size() >= 8 && is_hole(g, c) && is_antihole(g, d) && is_berge(g).berge &&
         (VertexSet::of(c) & VertexSet::of(d)).size() > 3;
}

// ---------------------------------------------------------------------------
// Skew partitions

std::vector<Binding> partition_bindings(const SkewPartitionCert& c) {
  return {{"A", c.a.to_vector()}, {"B", c.b.to_vector()}};
}

bool is_skew(const Graph& g, VertexSet a, VertexSet b) {
  return (a | b) == g.vertices() && !a.intersects(b) && components(g, a).size() >= 2 &&
         anticomponents(g, b).size() >= 2;
}

bool has_balanced(const Graph& g) { return find_balanced_skew(g).has_value(); }

// Evaluates `pred` over all skew partitions and reports the first one whose
// hypothesis holds while no balanced skew partition exists.
template <typename Pred>
GraphOutcome skew_claim(std::string_view id, const Graph& g, const ClaimContext& ctx, Pred&& hypothesis,
                        const char* detail) {
  Search s(id, g, ctx);
  std::optional<SkewPartitionCert> hit;
  bool balanced = false;
  for_each_skew_partition(g, [&](const SkewPartitionCert& c) {
    balanced = balanced || c.balanced;
    if (!hit && hypothesis(c)) hit = c;
    return !(balanced && hit);
  });
  if (hit) {
    s.spend();
    if (!balanced) s.report(partition_bindings(*hit), detail);
  }
  return s.take();
}

bool singleton_part(const SkewPartitionCert& c) {
  auto one = [](const std::vector<VertexSet>& parts) {
    return std::any_of(parts.begin(), parts.end(), [](VertexSet p) { return p.size() == 1; });
  };
  return one(c.components_of_a) || one(c.anticomponents_of_b);
}

GraphOutcome check_geteven(const Graph& g, const ClaimContext& ctx) {
  return skew_claim("geteven", g, ctx, [](const SkewPartitionCert& c) { return c.loose; },
                    "loose skew partition but no balanced one");
}

GraphOutcome check_singleton(const Graph& g, const ClaimContext& ctx) {
  return skew_claim("singleton", g, ctx, singleton_part,
                    "skew partition with a singleton part but no balanced skew partition");
}

// Lengths of induced paths between u and v with interior in `through`,
// as a bit set of parities (1 = even, 2 = odd).
int path_parities(const Graph& g, int u, int v, Mask through) {
  int seen = 0;
  for_each_induced_path(g, u, VertexSet(through | bit(v)), [&](std::span<const int> p) {
    if (p.back() != v) return Visit::Descend;
    seen |= (p.size() - 1) % 2 == 0 ? 1 : 2;
    return seen == 3 ? Visit::Stop : Visit::Prune;
  });
  return seen;
}

// A pair of `ends` joined by both an odd and an even path through `through`.
std::optional<std::pair<int, int>> mixed_pair(const Graph& g, Mask ends, Mask through) {
  for (int u : VertexSet(ends))
    for (int v : VertexSet(ends & ~((Mask{2} << u) - 1)))
      if (path_parities(g, u, v, through) == 3) return std::pair{u, v};
  return std::nullopt;
}

GraphOutcome check_mixedpair(const Graph& g, const ClaimContext& ctx) {
  Search s("mixedpair", g, ctx);
  const Graph co = complement(g);
  std::optional<bool> balanced;
  for_each_skew_partition(g, [&](const SkewPartitionCert& c) {
    auto pair = mixed_pair(g, c.b.bits(), c.a.bits());
    bool anti = false;
    if (!pair) {
      pair = mixed_pair(co, c.a.bits(), c.b.bits());
      anti = true;
    }
    if (!pair) return true;
    if (!s.spend()) return false;
    if (!balanced) balanced = has_balanced(g);
    if (!c.loose || !*balanced) {
      auto b = partition_bindings(c);
      b.push_back({anti ? "antipath_ends" : "path_ends", {pair->first, pair->second}});
      s.report(std::move(b), !c.loose ? "mixed-parity pair in a partition that is not loose"
                                      : "mixed-parity pair but no balanced skew partition");
      return false;
    }
    return true;
  });
  return s.take();
}

bool confirm_skew_simple(const Graph& g, const std::vector<Binding>& bs, bool (*hyp)(const Graph&, VertexSet, VertexSet)) {
  const VertexSet a = VertexSet::of(binding(bs, "A"));
  const VertexSet b = VertexSet::of(binding(bs, "B"));
  return is_skew(g, a, b) && hyp(g, a, b) && is_berge(g).berge && !has_balanced(g);
}

bool confirm_geteven(const Graph& g, const std::vector<Binding>& bs) {
  return confirm_skew_simple(g, bs, [](const Graph& h, VertexSet a, VertexSet b) {
    // some vertex of B misses a component of A, or some vertex of A is
    // complete to an anticomponent of B
    for (VertexSet comp : components(h, a))
      for (int v : b)
        if (!h.neighbours(v).intersects(comp)) return true;
    for (VertexSet anti : anticomponents(h, b))
      for (int v : a)
        if (anti.subset_of(h.neighbours(v))) return true;
    return false;
  });
}

bool confirm_singleton(const Graph& g, const std::vector<Binding>& bs) {
  return confirm_skew_simple(g, bs, [](const Graph& h, VertexSet a, VertexSet b) {
    for (VertexSet comp : components(h, a))
      if (comp.size() == 1) return true;
    for (VertexSet anti : anticomponents(h, b))
      if (anti.size() == 1) return true;
    return false;
  });
}

bool confirm_mixedpair(const Graph& g, const std::vector<Binding>& bs) {
  const VertexSet a = VertexSet::of(binding(bs, "A"));
  const VertexSet b = VertexSet::of(binding(bs, "B"));
  if (!is_skew(g, a, b) || !is_berge(g).berge) return false;
  const Binding* p = find_binding(bs, "path_ends");
  const Binding* q = find_binding(bs, "antipath_ends");
  if ((p == nullptr) == (q == nullptr)) return false;
  const auto& ends = p ? p->verts : q->verts;
  if (ends.size() != 2) return false;
  const Graph h = p ? g : complement(g);
  const VertexSet side = p ? b : a;
  const VertexSet through = p ? a : b;
  if (!side.contains(ends[0]) || !side.contains(ends[1])) return false;
  // parities by brute force over interior orderings
  int seen = 0;
  std::vector<int> seq{ends[0]};
  const auto pool = through.to_vector();
  std::vector<bool> used(pool.size(), false);
  auto rec = [&](auto&& self) -> void {
    seq.push_back(ends[1]);
    if (is_induced_path(h, seq)) seen |= (seq.size() - 1) % 2 == 0 ? 1 : 2;
    seq.pop_back();
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (used[i]) continue;
      seq.push_back(pool[i]);
      used[i] = true;
      if (is_induced_path(h, seq)) self(self);
      used[i] = false;
      seq.pop_back();
    }
  };
  rec(rec);
  if (seen != 3) return false;
  bool loose = false;
  for (VertexSet comp : components(g, a))
    for (int v : b) loose = loose || !g.neighbours(v).intersects(comp);
  for (VertexSet anti : anticomponents(g, b))
    for (int v : a) loose = loose || anti.subset_of(g.neighbours(v));
  return !loose || !has_balanced(g);
}

bool contains_prism_obstruction(const Graph& g) {
  for (const Graph& h : {g, complement(g)}) {
    if (!for_each_prism(h, [](const Prism& p) { return !p.is_long; })) return true;
    if (contains_fixed(h, FixedGraph::DoubleDiamond) || contains_fixed(h, FixedGraph::LK33MinusEdge)) return true;
  }
  return false;
}

GraphOutcome check_findprism(const Graph& g, const ClaimContext& ctx) {
  Search s("findprism", g, ctx);
  const auto parts = find_skew_partitions(g);
  if (parts.empty()) return s.take();
  s.spend();
  const bool balanced = std::any_of(parts.begin(), parts.end(), [](const auto& c) { return c.balanced; });
  if (!balanced && !contains_prism_obstruction(g))
    s.report(partition_bindings(parts.front()),
             "skew partition, no balanced one, and no long prism, double diamond or L(K33-e) in g or complement");
  return s.take();
}

bool confirm_findprism(const Graph& g, const std::vector<Binding>& bs) {
  return confirm_skew_simple(g, bs, [](const Graph& h, VertexSet, VertexSet) {
    return !contains_prism_obstruction(h);
  });
}

bool in_f6(const Graph& g) {
  FLadderOptions o;
  o.stop_after = 6;
  o.check_f8 = false;
  return f_ladder(g, o).member[5] == true;
}

GraphOutcome check_oddskew(const Graph& g, const ClaimContext& ctx) {
  Search s("oddskew", g, ctx);
  const auto parts = find_skew_partitions(g);
  if (parts.empty()) return s.take();
  const bool balanced = std::any_of(parts.begin(), parts.end(), [](const auto& c) { return c.balanced; });
  if (balanced) {
    s.spend();
    return s.take();
  }
  if (!in_f6(g)) return s.take();
  s.spend();
  s.report(partition_bindings(parts.front()), "member of F6 with a skew partition but no balanced one");
  return s.take();
}

bool confirm_oddskew(const Graph& g, const std::vector<Binding>& bs) {
  return confirm_skew_simple(g, bs, [](const Graph& h, VertexSet, VertexSet) { return in_f6(h); });
}

// ---------------------------------------------------------------------------
// Even prisms and the last class of the ladder

bool spanning_even_prism(const Graph& g) {
  if (g.n() != 9) return false;
  return !for_each_prism(g, [&](const Prism& p) {
    return !(p.parity == PrismParity::Even && p.vertex_set() == g.vertices());
  });
}

GraphOutcome check_evenprism(const Graph& g, const ClaimContext& ctx) {
  Search s("evenprism", g, ctx);
  std::optional<Prism> even;
  for_each_prism(g, [&](const Prism& p) {
    if (p.parity == PrismParity::Even) even = p;
    return !even;
  });
  if (!even) return s.take();
  if (spanning_even_prism(g) || find_two_join(g) || has_balanced(g)) {
    s.spend();
    return s.take();
  }
  // conclusion fails; the claim applies only without a nondegenerate appearance of K4
  const bool nondegenerate =
      !for_each_appearance_k4(g, [](const AppearanceK4& a) { return a.degenerate; });
  if (nondegenerate) return s.take();
  s.spend();
  std::vector<Binding> b;
  for (int i = 0; i < 3; ++i) b.push_back({"P" + std::to_string(i + 1), even->paths[static_cast<std::size_t>(i)].verts});
  s.report(std::move(b), "even prism, no nondegenerate K4 appearance, and no 9-vertex prism, 2-join or balanced skew partition");
  return s.take();
}

bool confirm_evenprism(const Graph& g, const std::vector<Binding>& bs) {
  Prism p;
  for (std::size_t i = 0; i < 3; ++i) {
    p.paths[i].verts = binding(bs, "P" + std::to_string(i + 1));
    if (p.paths[i].verts.empty()) return false;
    p.a[i] = p.paths[i].verts.front();
    p.b[i] = p.paths[i].verts.back();
  }
  p.parity = PrismParity::Even;
  for (const auto& path : p.paths) p.is_long = p.is_long || path.length() > 1;
  if (!check_prism(g, p) || !is_berge(g).berge) return false;
  if (find_two_join(g) || has_balanced(g) || spanning_even_prism(g)) return false;
  return for_each_appearance_k4(g, [](const AppearanceK4& a) { return a.degenerate; });
}

bool in_f11(const Graph& g) { return f_ladder(g).member[10] == true; }

bool endgame_holds(const Graph& g) {
  return g.is_clique(g.vertices()) || recognize_bipartite(g) || has_balanced(g);
}

GraphOutcome check_endgame(const Graph& g, const ClaimContext& ctx) {
  Search s("endgame", g, ctx);
  const FLadderReport r = f_ladder(g);
  if (r.f8_skipped && r.member[10] != false) {
    // membership unknown; counted as an overflow rather than assumed
    s.spend();
    GraphOutcome out = s.take();
    out.overflow = true;
    return out;
  }
  if (r.member[10] != true) return s.take();
  s.spend();
  if (!endgame_holds(g)) s.report({}, "member of F11 that is not complete, not bipartite and has no balanced skew partition");
  return s.take();
}

bool confirm_endgame(const Graph& g, const std::vector<Binding>&) { return in_f11(g) && !endgame_holds(g); }

std::map<std::string, Claim, std::less<>> build_registry() {
  std::map<std::string, Claim, std::less<>> r;
  auto add = [&](std::string id, bool berge_only, auto check, auto confirm) {
    r.emplace(id, Claim{id, berge_only, check, confirm});
  };
  add("spgt", false, check_spgt, confirm_spgt);
  add("decomp", true, check_decomp, confirm_decomp);
  add("lovasz", false, check_lovasz, confirm_lovasz);
  add("rr", true, [](const Graph& g, const ClaimContext& c) { return check_odd_path_claim(g, c, PathClaim::RR); },
      confirm_rr);
  add("greentouch", true,
      [](const Graph& g, const ClaimContext& c) { return check_odd_path_claim(g, c, PathClaim::Greentouch); },
      confirm_greentouch);
  add("evengap", true, check_evengap, confirm_evengap);
  add("trianglev", true, check_trianglev, confirm_trianglev);
  add("rrc", true, check_rrc, confirm_rrc);
  add("bigholes", true, check_bigholes, confirm_bigholes);
  add("geteven", true, check_geteven, confirm_geteven);
  add("singleton", true, check_singleton, confirm_singleton);
  add("mixedpair", true, check_mixedpair, confirm_mixedpair);
  add("findprism", true, check_findprism, confirm_findprism);
  add("oddskew", true, check_oddskew, confirm_oddskew);
  add("evenprism", true, check_evenprism, confirm_evenprism);
  add("endgame", true, check_endgame, confirm_endgame);
  return r;
}

const std::map<std::string, Claim, std::less<>>& registry() {
  static const auto r = build_registry();
  return r;
}

}  // namespace

std::vector<std::string> claim_ids() {
  return {"spgt",  "decomp",    "lovasz",  "rr",        "greentouch", "evengap", "trianglev", "rrc",
          "bigholes", "geteven", "singleton", "mixedpair", "findprism", "oddskew", "evenprism", "endgame"};
}

const Claim& claim(std::string_view id) {
  const auto& r = registry();
  const auto it = r.find(id);
  if (it == r.end()) throw std::invalid_argument("unknown claim '" + std::string(id) + "'");
  return it->second;
}

}  // namespace berge::lab
