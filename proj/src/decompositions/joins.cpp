#include "berge/decompositions.hpp"
#include "berge/structure.hpp"

namespace berge {

namespace {

// The last 2-join bullet: a side inducing a path between its single A and
// single B vertex must have length at least 3.
bool short_path_side(const Graph& g, VertexSet x, VertexSet a, VertexSet b) {
  if (a.size() != 1 || b.size() != 1) return false;
  if (!is_connected(g, x)) return false;
  for (int v : x) {
    const int d = std::popcount(g.row(v) & x.bits());
    const bool end = a.contains(v) || b.contains(v);
    if (d != (end ? 1 : 2)) return false;
  }
  return x.size() - 1 < 3;
}

bool sides_meet(const Graph& g, VertexSet x, VertexSet a, VertexSet b) {
  for (VertexSet k : components(g, x))
    if (!k.intersects(a) || !k.intersects(b)) return false;
  return true;
}

}  // namespace

std::optional<TwoJoinCert> find_two_join(const Graph& g) {
  const Mask full = g.vertices().bits();
  if (g.n() < 4) return std::nullopt;
  for (Mask x1 = 1; x1 < full; x1 += 2) {
    const Mask x2 = full & ~x1;
    Mask p = 0, q = 0;
    bool ok = true;
    for (int v : VertexSet(x1)) {
      const Mask nb = g.row(v) & x2;
      if (nb == 0 || nb == p || nb == q) continue;
      if (p == 0)
        p = nb;
      else if (q == 0)
        q = nb;
      else
        ok = false;
    }
    if (!ok || p == 0 || q == 0 || (p & q) != 0) continue;
    Mask a1 = 0, b1 = 0;
    for (int v : VertexSet(x1)) {
      const Mask nb = g.row(v) & x2;
      if (nb == p) a1 |= VertexSet::bit(v);
      if (nb == q) b1 |= VertexSet::bit(v);
    }
    for (int v : VertexSet(x2)) {
      const Mask nb = g.row(v) & x1;
      const Mask want = ((p >> v) & 1U) ? a1 : ((q >> v) & 1U) ? b1 : 0;
      if (nb != want) ok = false;
    }
    if (!ok) continue;
    TwoJoinCert c{VertexSet(x1), VertexSet(x2), VertexSet(a1), VertexSet(b1), VertexSet(p), VertexSet(q)};
    if (c.b1.min() < c.a1.min()) {
      std::swap(c.a1, c.b1);
      std::swap(c.a2, c.b2);
    }
    if (!sides_meet(g, c.x1, c.a1, c.b1) || !sides_meet(g, c.x2, c.a2, c.b2)) continue;
    if (short_path_side(g, c.x1, c.a1, c.b1) || short_path_side(g, c.x2, c.a2, c.b2)) continue;
    return c;
  }
  return std::nullopt;
}

std::optional<MJoinCert> find_m_join(const Graph& g) {
  const Mask full = g.vertices().bits();
  if (g.n() < 8) return std::nullopt;
  for (Mask a = 1; a < full; ++a) {
    if (std::popcount(a) < 2) continue;
    // vertices outside A are complete or anticomplete to it, except B
    Mask b = 0, to_a = 0, off_a = 0;
    for (int v : VertexSet(full & ~a)) {
      const Mask nb = g.row(v) & a;
      if (nb == a)
        to_a |= VertexSet::bit(v);
      else if (nb == 0)
        off_a |= VertexSet::bit(v);
      else
        b |= VertexSet::bit(v);
    }
    if (std::popcount(b) < 2 || std::countr_zero(b) < std::countr_zero(a)) continue;
    bool ok = true;
    for (int v : VertexSet(a)) {
      const Mask nb = g.row(v) & b;
      if (nb == 0 || nb == b) ok = false;
    }
    if (!ok) continue;
    Mask c = 0, d = 0, e = 0, f = 0;
    for (int v : VertexSet(to_a | off_a)) {
      const Mask nb = g.row(v) & b;
      const bool sees_a = (to_a >> v) & 1U;
      if (nb == b)
        (sees_a ? f : d) |= VertexSet::bit(v);
      else if (nb == 0)
        (sees_a ? c : e) |= VertexSet::bit(v);
      else
        ok = false;
    }
    if (!ok || c == 0 || d == 0 || e == 0 || f == 0) continue;
    return MJoinCert{VertexSet(a), VertexSet(b), VertexSet(c), VertexSet(d), VertexSet(e), VertexSet(f)};
  }
  return std::nullopt;
}

// --- checkers ---------------------------------------------------------------

namespace {

bool complete_pair(const Graph& g, VertexSet x, VertexSet y) {
  for (int u : x)
    for (int v : y)
      if (!g.adjacent(u, v)) return false;
  return true;
}

bool anticomplete_pair(const Graph& g, VertexSet x, VertexSet y) {
  for (int u : x)
    for (int v : y)
      if (g.adjacent(u, v)) return false;
  return true;
}

// Reachability inside s by repeated sweeps.
std::vector<int> component_ids(const Graph& g, VertexSet s) {
  std::vector<int> id(static_cast<std::size_t>(g.n()), -1);
  int next = 0;
  for (int root : s) {
    if (id[static_cast<std::size_t>(root)] >= 0) continue;
    id[static_cast<std::size_t>(root)] = next;
    bool grew = true;
    while (grew) {
      grew = false;
      for (int u : s)
        for (int v : s)
          if (id[static_cast<std::size_t>(u)] == next && id[static_cast<std::size_t>(v)] < 0 && g.adjacent(u, v)) {
            id[static_cast<std::size_t>(v)] = next;
            grew = true;
          }
    }
    ++next;
  }
  return id;
}

bool side_valid(const Graph& g, VertexSet x, VertexSet a, VertexSet b) {
  if (a.empty() || b.empty() || a.intersects(b) || !(a | b).subset_of(x)) return false;
  const auto id = component_ids(g, x);
  int count = 0;
  for (int v : x) count = std::max(count, id[static_cast<std::size_t>(v)] + 1);
  for (int k = 0; k < count; ++k) {
    bool in_a = false, in_b = false;
    for (int v : a) in_a = in_a || id[static_cast<std::size_t>(v)] == k;
    for (int v : b) in_b = in_b || id[static_cast<std::size_t>(v)] == k;
    if (!in_a || !in_b) return false;
  }
  if (a.size() == 1 && b.size() == 1 && count == 1) {
    // g|x is a path from a to b iff the ends have degree 1 and the rest 2
    bool path = true;
    for (int v : x) {
      int d = 0;
      for (int w : x) d += g.adjacent(v, w);
      path = path && d == ((a.contains(v) || b.contains(v)) ? 1 : 2);
    }
    if (path && x.size() - 1 < 3) return false;
  }
  return true;
}

}  // namespace

bool check_two_join(const Graph& g, const TwoJoinCert& c) {
  if (c.x1.intersects(c.x2) || (c.x1 | c.x2) != g.vertices()) return false;
  if (!side_valid(g, c.x1, c.a1, c.b1) || !side_valid(g, c.x2, c.a2, c.b2)) return false;
  for (int u : c.x1)
    for (int v : c.x2) {
      const bool expected = (c.a1.contains(u) && c.a2.contains(v)) || (c.b1.contains(u) && c.b2.contains(v));
      if (g.adjacent(u, v) != expected) return false;
    }
  return true;
}

bool check_m_join(const Graph& g, const MJoinCert& m) {
  const std::vector<VertexSet> parts{m.a, m.b, m.c, m.d, m.e, m.f};
  VertexSet all;
  for (const auto& p : parts) {
    if (p.empty() || p.intersects(all)) return false;
    all = all | p;
  }
  if (all != g.vertices()) return false;
  for (int u : m.a) {
    bool yes = false, no = false;
    for (int v : m.b) (g.adjacent(u, v) ? yes : no) = true;
    if (!yes || !no) return false;
  }
  for (int v : m.b) {
    bool yes = false, no = false;
    for (int u : m.a) (g.adjacent(u, v) ? yes : no) = true;
    if (!yes || !no) return false;
  }
  return complete_pair(g, m.c, m.a) && complete_pair(g, m.a, m.f) && complete_pair(g, m.f, m.b) &&
         complete_pair(g, m.b, m.d) && anticomplete_pair(g, m.d, m.a) && anticomplete_pair(g, m.a, m.e) &&
         anticomplete_pair(g, m.e, m.b) && anticomplete_pair(g, m.b, m.c);
}

}  // namespace berge
