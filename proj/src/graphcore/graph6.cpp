#include "berge/graph6.hpp"

#include <sstream>

#include "berge/errors.hpp"

namespace berge {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

bool printable(char c) { return c >= kBias && c <= kBias + 63; }

}  // namespace

Graph parse_graph6(std::string_view text, int max_n) {
  using K = ParseError::Kind;
  std::size_t pos = 0;
  if (text.starts_with(kHeader)) pos = kHeader.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (pos >= text.size()) throw ParseError(K::BadHeader, pos, "empty graph6 string");

  long n = 0;
  if (text[pos] == '~') {
    if (pos + 1 < text.size() && text[pos + 1] == '~')
      throw ParseError(K::TooManyVertices, pos, "8-byte graph6 size field");
    if (pos + 4 > text.size()) throw ParseError(K::Truncated, text.size(), "short size field");
    for (int i = 1; i <= 3; ++i) {
      if (!printable(text[pos + i])) throw ParseError(K::BadByte, pos + i, "bad size byte");
      n = (n << 6) | (text[pos + i] - kBias);
    }
    pos += 4;
  } else {
    if (!printable(text[pos])) throw ParseError(K::BadHeader, pos, "bad size byte");
    n = text[pos] - kBias;
    pos += 1;
  }
  const long bits = n * (n - 1) / 2;
  const std::size_t bytes = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() < pos + bytes) throw ParseError(K::Truncated, text.size(), "too few data bytes");
  if (text.size() > pos + bytes) throw ParseError(K::BadByte, pos + bytes, "unexpected trailing data");
  if (n > max_n || n > kMaxVertices)
    throw ParseError(K::TooManyVertices, 0, "graph has " + std::to_string(n) + " vertices");

  Graph g(static_cast<int>(n));

  long k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      const std::size_t at = pos + static_cast<std::size_t>(k / 6);
      if (!printable(text[at])) throw ParseError(K::BadByte, at, "byte outside graph6 range");
      const int value = text[at] - kBias;
      if ((value >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  if (bits % 6 != 0) {
    const std::size_t at = pos + bytes - 1;
    if (!printable(text[at])) throw ParseError(K::BadByte, at, "byte outside graph6 range");
    const int pad = static_cast<int>(6 - bits % 6);
    if (((text[at] - kBias) & ((1 << pad) - 1)) != 0)
      throw ParseError(K::TrailingBits, at, "nonzero padding bits");
  }
  return g;
}

std::string emit_graph6(const Graph& g) {
  const int n = g.n();
  std::string out;
  out.push_back(static_cast<char>(n + kBias));
  int acc = 0;
  int used = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = used = 0;
      }
    }
  if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + kBias));
  return out;
}

Graph parse_dimacs(std::istream& in, int max_n) {
  using K = ParseError::Kind;
  std::string line;
  std::size_t lineno = 0;
  Graph g;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag) || tag == "c") continue;
    if (tag == "p") {
      std::string kind;
      long n = 0;
      long m = 0;
      if (have_header || !(fields >> kind >> n >> m) || kind != "edge" || n < 0)
        throw ParseError(K::BadHeader, lineno, "bad DIMACS header");
      if (n > max_n || n > kMaxVertices)
        throw ParseError(K::TooManyVertices, lineno, "graph has " + std::to_string(n) + " vertices");
      g = Graph(static_cast<int>(n));
      have_header = true;
    } else if (tag == "e") {
      long u = 0;
      long v = 0;
      if (!have_header || !(fields >> u >> v) || u < 1 || v < 1 || u > g.n() || v > g.n() || u == v)
        throw ParseError(K::BadLine, lineno, "bad DIMACS edge line");
      g.add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1));
    } else {
      throw ParseError(K::BadLine, lineno, "unknown DIMACS line");
    }
  }
  if (!have_header) throw ParseError(K::BadHeader, lineno, "missing DIMACS header");
  return g;
}

}  // namespace berge
