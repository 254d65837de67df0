#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "berge/graph.hpp"

namespace berge {

/// Adjacency rows of a graph after canonical relabelling. Two graphs are
/// isomorphic iff their canonical forms compare equal.
struct CanonicalForm {
  int n = 0;
  std::vector<Mask> rows;

  auto operator<=>(const CanonicalForm&) const = default;
  bool operator==(const CanonicalForm&) const = default;
  Graph to_graph() const;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const noexcept;
};

struct CanonicalLabeling {
  CanonicalForm form;
  /// order[i] is the original vertex that receives canonical label i.
  std::vector<int> order;
};

/// Individualisation/refinement search over equitable partitions; the
/// canonical form is the least adjacency matrix over all leaves. Twins are
/// pruned. Intended for small graphs (n <= 12 or so).
CanonicalLabeling canonical_labeling(const Graph& g);
CanonicalForm canonical_form(const Graph& g);

/// Bijection map[v_g] = v_h when g and h are isomorphic.
std::optional<std::vector<int>> is_isomorphic(const Graph& g, const Graph& h);

/// Embedding map[v_pattern] = v_host of `pattern` as an induced subgraph of
/// `host` restricted to `allowed`, first in lexicographic search order.
std::optional<std::vector<int>> find_induced_copy(const Graph& host, const Graph& pattern,
                                                  VertexSet allowed);
inline std::optional<std::vector<int>> find_induced_copy(const Graph& host, const Graph& pattern) {
  return find_induced_copy(host, pattern, host.vertices());
}

}  // namespace berge
