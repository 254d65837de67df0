#include <algorithm>
#include <cctype>
#include <charconv>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "berge/errors.hpp"
#include "berge/families.hpp"
#include "berge/isomorphism.hpp"
#include "berge/lemmalab.hpp"
#include "berge/recognizers.hpp"

namespace berge::lab {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed) : state_(seed) {}

std::uint64_t Rng::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

bool Rng::chance(double p) { return uniform() < p; }

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) return 0;
  // rejection keeps the draw unbiased
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do x = next();
  while (x >= limit);
  return x % bound;
}

std::vector<int> Rng::permutation(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(p[i], p[below(static_cast<std::uint64_t>(i) + 1)]);
  return p;
}

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) { return splitmix64(seed ^ index); }

// --- exhaustive enumeration -------------------------------------------------

namespace {

std::vector<Graph> extend_by_one(const std::vector<Graph>& smaller, int n) {
  std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
  std::vector<CanonicalForm> forms;
  for (const Graph& h : smaller) {
    for (Mask nb = 0; nb < (Mask{1} << (n - 1)); ++nb) {
      Graph g(n);
      for (auto [u, v] : h.edges()) g.add_edge(u, v);
      for (int u : VertexSet(nb)) g.add_edge(u, n - 1);
      CanonicalForm f = canonical_form(g);
      if (seen.insert(f).second) forms.push_back(std::move(f));
    }
  }
  std::sort(forms.begin(), forms.end());
  std::vector<Graph> out;
  out.reserve(forms.size());
  for (const auto& f : forms) out.push_back(f.to_graph());
  return out;
}

}  // namespace

std::vector<Graph> enumerate_all_graphs(int n) {
  if (n < 0 || n > kMaxEnumerated)
    throw std::invalid_argument("exhaustive enumeration supports 0 <= n <= " + std::to_string(kMaxEnumerated) +
                                "; read larger corpora from graph6 files");
  static std::mutex mu;
  static std::vector<std::vector<Graph>> levels{{Graph(0)}};
  std::lock_guard lock(mu);
  while (static_cast<int>(levels.size()) <= n)
    levels.push_back(extend_by_one(levels.back(), static_cast<int>(levels.size())));
  return levels[static_cast<std::size_t>(n)];
}

// --- generator specs --------------------------------------------------------

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void bad_spec(std::string_view text, const std::string& why) {
  throw std::invalid_argument("bad generator spec '" + std::string(text) + "': " + why);
}

// Splits the argument list at top-level commas.
std::vector<std::string_view> split_args(std::string_view args) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == '(') ++depth;
    if (args[i] == ')') --depth;
    if (args[i] == ',' && depth == 0) {
      out.push_back(trim(args.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(trim(args.substr(start)));
  return out;
}

template <typename T>
T number(std::string_view whole, std::string_view s) {
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) bad_spec(whole, "cannot read '" + std::string(s) + "'");
  return value;
}

void validate(const GeneratorSpec& s) {
  using F = GeneratorSpec::Family;
  auto prob = [](double p) { return p >= 0.0 && p <= 1.0; };
  switch (s.family) {
    case F::Uniform:
    case F::BergeRejection:
      if (s.n < 0 || s.n > kMaxVertices) throw std::invalid_argument("vertex count out of range");
      if (!prob(s.p)) throw std::invalid_argument("edge probability must lie in [0, 1]");
      break;
    case F::Bipartite:
      if (s.n1 < 0 || s.n2 < 0 || s.n1 + s.n2 > kMaxVertices) throw std::invalid_argument("side sizes out of range");
      if (!prob(s.p)) throw std::invalid_argument("edge probability must lie in [0, 1]");
      break;
    case F::LineOfBipartite:
      if (s.n1 < 0 || s.n2 < 0 || s.n1 * s.n2 > kMaxVertices)
        throw std::invalid_argument("root may have more edges than a graph can hold vertices");
      if (!prob(s.p)) throw std::invalid_argument("edge probability must lie in [0, 1]");
      break;
    case F::Bicograph:
      if (s.n1 < 2 || s.n2 < 2 || 2 * (s.n1 + s.n2) > kMaxVertices)
        throw std::invalid_argument("bicograph needs m, n >= 2 and 2(m+n) vertices within range");
      break;
    case F::ComplementOf:
      if (!s.inner) throw std::invalid_argument("complement_of needs an inner spec");
      validate(*s.inner);
      break;
  }
}

}  // namespace

GeneratorSpec parse_generator_spec(std::string_view text) {
  using F = GeneratorSpec::Family;
  const std::string_view t = trim(text);
  const auto open = t.find('(');
  if (open == std::string_view::npos || t.back() != ')') bad_spec(text, "expected name(args)");
  const std::string_view name = trim(t.substr(0, open));
  const std::string_view inside = t.substr(open + 1, t.size() - open - 2);
  GeneratorSpec s;
  if (name == "complement_of") {
    s.family = F::ComplementOf;
    s.inner = std::make_shared<GeneratorSpec>(parse_generator_spec(inside));
    return s;
  }
  const auto args = split_args(inside);
  auto need = [&](std::size_t lo, std::size_t hi) {
    if (args.size() < lo || args.size() > hi) bad_spec(text, "wrong number of arguments");
  };
  if (name == "uniform" || name == "berge_rejection") {
    need(2, 2);
    s.family = name == "uniform" ? F::Uniform : F::BergeRejection;
    s.n = number<int>(text, args[0]);
    s.p = number<double>(text, args[1]);
  } else if (name == "bipartite" || name == "line_of_bipartite") {
    need(3, 3);
    s.family = name == "bipartite" ? F::Bipartite : F::LineOfBipartite;
    s.n1 = number<int>(text, args[0]);
    s.n2 = number<int>(text, args[1]);
    s.p = number<double>(text, args[2]);
  } else if (name == "bicograph") {
    need(2, 3);
    s.family = F::Bicograph;
    s.n1 = number<int>(text, args[0]);
    s.n2 = number<int>(text, args[1]);
    if (args.size() == 3) s.pattern_seed = number<std::uint64_t>(text, args[2]);
  } else {
    bad_spec(text, "unknown family '" + std::string(name) + "'");
  }
  try {
    validate(s);
  } catch (const std::invalid_argument& e) {
    bad_spec(text, e.what());
  }
  return s;
}

std::string to_string(const GeneratorSpec& s) {
  using F = GeneratorSpec::Family;
  auto num = [](double p) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, p);
    return std::string(buf, ptr);
  };
  switch (s.family) {
    case F::Uniform: return "uniform(" + std::to_string(s.n) + "," + num(s.p) + ")";
    case F::BergeRejection: return "berge_rejection(" + std::to_string(s.n) + "," + num(s.p) + ")";
    case F::Bipartite: return "bipartite(" + std::to_string(s.n1) + "," + std::to_string(s.n2) + "," + num(s.p) + ")";
    case F::LineOfBipartite:
      return "line_of_bipartite(" + std::to_string(s.n1) + "," + std::to_string(s.n2) + "," + num(s.p) + ")";
    case F::Bicograph:
      return "bicograph(" + std::to_string(s.n1) + "," + std::to_string(s.n2) +
             (s.pattern_seed ? "," + std::to_string(*s.pattern_seed) : "") + ")";
    case F::ComplementOf: return "complement_of(" + to_string(*s.inner) + ")";
  }
  return {};
}

// --- generation ---------------------------------------------------------------

namespace {

Graph uniform_graph(int n, double p, Rng& rng) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.chance(p)) g.add_edge(u, v);
  return g;
}

Graph shuffled(const Graph& g, Rng& rng) {
  const auto perm = rng.permutation(g.n());
  return relabel(g, perm);
}

// Failure streak after which the edge density is drawn afresh.
constexpr int kStreak = 64;

Graph berge_rejection(int n, double p, Rng& rng) {
  double density = p;
  for (int attempt = 0; attempt < kBergeRetries; ++attempt) {
    if (attempt > 0 && attempt % kStreak == 0) density = rng.uniform();
    Graph g = uniform_graph(n, density, rng);
    if (is_berge(g).berge) return g;
  }
  throw BudgetExceeded("no Berge graph after " + std::to_string(kBergeRetries) + " draws");
}

Graph bicograph(int m, int n, std::uint64_t pattern_seed, Rng& rng) {
  // a_i = 2i, b_i = 2i+1, c_j = 2m+2j, d_j = 2m+2j+1
  Graph g(2 * (m + n));
  auto a = [](int i) { return 2 * i; };
  auto b = [](int i) { return 2 * i + 1; };
  auto c = [m](int j) { return 2 * m + 2 * j; };
  auto d = [m](int j) { return 2 * m + 2 * j + 1; };
  for (int i = 0; i < m; ++i) g.add_edge(a(i), b(i));
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k)
      for (int x : {c(j), d(j)})
        for (int y : {c(k), d(k)}) g.add_edge(x, y);
  Rng pattern(pattern_seed);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      if (pattern.chance(0.5)) {
        g.add_edge(a(i), c(j));
        g.add_edge(b(i), d(j));
      } else {
        g.add_edge(a(i), d(j));
        g.add_edge(b(i), c(j));
      }
    }
  return shuffled(g, rng);
}

Graph generate_with(const GeneratorSpec& s, Rng& rng) {
  using F = GeneratorSpec::Family;
  switch (s.family) {
    case F::Uniform: return uniform_graph(s.n, s.p, rng);
    case F::BergeRejection: return berge_rejection(s.n, s.p, rng);
    case F::Bipartite: {
      Graph g(s.n1 + s.n2);
      for (int u = 0; u < s.n1; ++u)
        for (int v = s.n1; v < s.n1 + s.n2; ++v)
          if (rng.chance(s.p)) g.add_edge(u, v);
      return shuffled(g, rng);
    }
    case F::LineOfBipartite: {
      Graph root(s.n1 + s.n2);
      for (int u = 0; u < s.n1; ++u)
        for (int v = s.n1; v < s.n1 + s.n2; ++v)
          if (rng.chance(s.p)) root.add_edge(u, v);
      return shuffled(families::line_graph(root).graph, rng);
    }
    case F::Bicograph: {
      const std::uint64_t pattern = s.pattern_seed ? *s.pattern_seed : rng.next();
      return bicograph(s.n1, s.n2, pattern, rng);
    }
    case F::ComplementOf: return complement(generate_with(*s.inner, rng));
  }
  throw std::invalid_argument("unknown generator family");
}

}  // namespace

Graph generate(const GeneratorSpec& spec, std::uint64_t seed) {
  validate(spec);
  Rng rng(seed);
  return generate_with(spec, rng);
}

}  // namespace berge::lab
