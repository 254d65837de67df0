#pragma once

#include <functional>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "berge/graph.hpp"
#include "berge/recognizers.hpp"

namespace berge {

// --- 2-joins ----------------------------------------------------------------

struct TwoJoinCert {
  VertexSet x1, x2;
  VertexSet a1, b1, a2, b2;
};

/// Tries every X1 containing vertex 0, in increasing bitmask order; A/B
/// sides come from the neighbourhood classes across the cut. A1 holds the
/// smaller of the two minima of A1, B1.
std::optional<TwoJoinCert> find_two_join(const Graph& g);
bool check_two_join(const Graph& g, const TwoJoinCert& c);

// --- M-joins ----------------------------------------------------------------

struct MJoinCert {
  VertexSet a, b, c, d, e, f;
};

/// A is tried in increasing bitmask order with min(A) < min(B); B is then
/// forced to be the set of vertices mixed on A.
std::optional<MJoinCert> find_m_join(const Graph& g);
bool check_m_join(const Graph& g, const MJoinCert& c);

// --- skew partitions --------------------------------------------------------

struct SkewPartitionCert {
  VertexSet a, b;
  std::vector<VertexSet> components_of_a;
  std::vector<VertexSet> anticomponents_of_b;
  bool loose = false;
  bool balanced = false;
};

/// An odd path between nonadjacent B-vertices through A, or an odd
/// antipath between adjacent A-vertices through B.
struct BalanceViolation {
  bool antipath = false;
  std::vector<int> verts;
};

struct BalanceResult {
  bool balanced = true;
  std::optional<BalanceViolation> violation;
};

BalanceResult is_balanced_pair(const Graph& g, VertexSet a, VertexSet b);

/// Every skew partition, by |B| ascending then B's bitmask. The visitor
/// returns false to stop.
bool for_each_skew_partition(const Graph& g, const std::function<bool(const SkewPartitionCert&)>& visit);
std::vector<SkewPartitionCert> find_skew_partitions(const Graph& g);
std::optional<SkewPartitionCert> find_balanced_skew(const Graph& g);

/// Recomputes components, anticomponents and both flags from scratch.
bool check_skew_partition(const Graph& g, const SkewPartitionCert& c);

// --- the decomposition verdict ---------------------------------------------

enum class VerdictKind { Basic, TwoJoin, TwoJoinComplement, MJoin, BalancedSkew, Counterexample };

/// "basic", "two_join", "two_join_complement", "m_join", "balanced_skew",
/// "counterexample".
std::string_view to_string(VerdictKind k);

struct Verdict {
  VerdictKind kind = VerdictKind::Counterexample;
  /// TwoJoinComplement certificates describe complement(g).
  std::variant<std::monostate, BasicCert, TwoJoinCert, MJoinCert, SkewPartitionCert> cert;
};

/// Tries, in order: basic classes, a 2-join of g, a 2-join of the
/// complement, an M-join, a balanced skew partition. Throws NotBerge.
Verdict decompose(const Graph& g);
bool check_verdict(const Graph& g, const Verdict& v);

}  // namespace berge
