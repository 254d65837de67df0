#include "berge/recognizers.hpp"
#include "berge/structure.hpp"

namespace berge {

std::string_view to_string(Side side) { return side == Side::Graph ? "G" : "complement"; }

BergeResult is_berge(const Graph& g) {
  if (auto hole = find_odd_hole(g)) return {false, OddHoleWitness{Side::Graph, std::move(*hole)}};
  if (auto hole = find_odd_hole(complement(g))) return {false, OddHoleWitness{Side::Complement, std::move(*hole)}};
  return {true, std::nullopt};
}

bool check_odd_hole_witness(const Graph& g, const OddHoleWitness& w) {
  if (w.hole.length() < 5 || w.hole.length() % 2 == 0) return false;
  return w.side == Side::Graph ? is_hole(g, w.hole.verts) : is_antihole(g, w.hole.verts);
}

}  // namespace berge
