#pragma once

// JSON forms of results and certificates. Keys are sorted (nlohmann::json
// objects are ordered maps), vertex sets are ascending integer arrays and
// graphs are graph6 strings.

#include <json.hpp>

#include "berge/decompositions.hpp"
#include "berge/lemmalab.hpp"
#include "berge/recognizers.hpp"
#include "berge/structures.hpp"

namespace berge::json {

using Json = nlohmann::json;

Json vertex_set(VertexSet s);
VertexSet vertex_set_from(const Json& j);

Json berge_result(const BergeResult& r);
Json perfection(const PerfectionReport& r);

Json basic(const BasicCert& c);
BasicCert basic_from(const Json& j);

Json two_join(const TwoJoinCert& c);
TwoJoinCert two_join_from(const Json& j);
Json m_join(const MJoinCert& c);
MJoinCert m_join_from(const Json& j);
Json skew(const SkewPartitionCert& c);
SkewPartitionCert skew_from(const Json& j);

/// {"kind": ..., "certificate": ...}; basic verdicts also carry "class".
Json verdict(const Verdict& v);
Verdict verdict_from(const Json& j);

Json prism(const Prism& p);
Json wheel(const Wheel& w);
Json appearance(const AppearanceK4& a);
Json pseudowheel(const Pseudowheel& w);
/// Keys F1..F11 (null where unknown) plus the pseudowheel skip flags.
Json ladder(const FLadderReport& r);

/// `timing` adds wall_time, which otherwise is left out so that identical
/// runs print identical bytes.
Json corpus_report(const lab::CorpusReport& r, bool timing);

}  // namespace berge::json
