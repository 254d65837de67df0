#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <utility>
#include <vector>

namespace berge {

using Mask = std::uint32_t;

/// Largest vertex count a Graph can hold (one bit per vertex in a row).
inline constexpr int kMaxVertices = 32;

/// A subset of {0..n-1} stored as a bit mask.
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    iterator() = default;
    explicit iterator(Mask rest) : rest_(rest) {}
    int operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator&) const = default;

   private:
    Mask rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(Mask bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> vs) {
    for (int v : vs) bits_ |= bit(v);
  }

  static constexpr Mask bit(int v) { return Mask{1} << v; }
  /// {0..n-1}
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= kMaxVertices ? ~Mask{0} : (Mask{1} << n) - 1);
  }
  static VertexSet of(std::span<const int> vs) {
    VertexSet s;
    for (int v : vs) s.bits_ |= bit(v);
    return s;
  }

  constexpr Mask bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr int min() const { return std::countr_zero(bits_); }
  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

  VertexSet& insert(int v) {
    bits_ |= bit(v);
    return *this;
  }
  VertexSet& erase(int v) {
    bits_ &= ~bit(v);
    return *this;
  }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  VertexSet& operator-=(VertexSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  constexpr bool operator==(const VertexSet&) const = default;
  /// Numeric order of the masks; used only for deterministic containers.
  constexpr auto operator<=>(const VertexSet&) const = default;

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const { return {begin(), end()}; }

 private:
  Mask bits_ = 0;
};

/// Simple undirected graph on at most kMaxVertices vertices, one bit row per
/// vertex. Rows are kept symmetric and irreflexive by every mutator.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

  int n() const { return n_; }
  VertexSet vertices() const { return VertexSet::range(n_); }
  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }
  VertexSet neighbours(int v) const { return VertexSet(rows_[v]); }
  Mask row(int v) const { return rows_[v]; }
  int degree(int v) const { return std::popcount(rows_[v]); }
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  /// Vertices of `s` adjacent to every member of `x` (members of x excluded).
  VertexSet complete_to(VertexSet x, VertexSet s) const;
  /// Vertices of `s` with no neighbour in `x` (members of x excluded).
  VertexSet anticomplete_to(VertexSet x, VertexSet s) const;
  bool is_clique(VertexSet s) const;
  bool is_stable(VertexSet s) const;

  bool operator==(const Graph& o) const;

 private:
  int n_ = 0;
  std::array<Mask, kMaxVertices> rows_{};
};

Graph complement(const Graph& g);

/// Subgraph induced on `s`, relabelled 0..|s|-1 in ascending original order.
Graph induced(const Graph& g, VertexSet s);

/// Image of g under `perm` (vertex v of g becomes perm[v]).
Graph relabel(const Graph& g, std::span<const int> perm);

/// A vertex sequence that induces a path (consecutive adjacent, all other
/// pairs nonadjacent). Length 0 paths are single vertices.
struct InducedPath {
  std::vector<int> verts;

  int length() const { return static_cast<int>(verts.size()) - 1; }
  int front() const { return verts.front(); }
  int back() const { return verts.back(); }
  VertexSet vertex_set() const { return VertexSet::of(verts); }
  /// Internal vertices (everything except the two ends).
  VertexSet interior() const;
  bool operator==(const InducedPath&) const = default;
};

/// Induced cycle of length at least 4, stored in canonical form once
/// produced by the hole enumerator (starts at its minimum vertex, second
/// vertex smaller than the last).
struct Hole {
  std::vector<int> verts;

  int length() const { return static_cast<int>(verts.size()); }
  VertexSet vertex_set() const { return VertexSet::of(verts); }
  bool operator==(const Hole&) const = default;
  auto operator<=>(const Hole&) const = default;
};

bool is_induced_path(const Graph& g, std::span<const int> verts);
bool is_hole(const Graph& g, std::span<const int> verts);
bool is_antipath(const Graph& g, std::span<const int> verts);
bool is_antihole(const Graph& g, std::span<const int> verts);

/// Rotates/reflects a cyclic sequence to start at its minimum with the
/// smaller neighbour second.
Hole canonical_hole(std::vector<int> verts);

}  // namespace berge
