#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "berge/cli.hpp"
#include "berge/families.hpp"
#include "berge/graph6.hpp"
#include "berge/json.hpp"

using namespace berge;
using berge::json::Json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "berge");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<Json> lines(const std::string& text) {
  std::vector<Json> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(Json::parse(line));
  return out;
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST(Cli, BergeOnC5) {
  const auto r = run({"berge"}, emit_graph6(families::cycle(5)) + "\n");
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, "{\"berge\":false,\"graph\":\"Dhc\",\"witness\":{\"hole\":[0,1,2,3,4],\"side\":\"G\"}}\n");
}

TEST(Cli, DecomposeC6) {
  const auto r = run({"decompose", "-g", emit_graph6(families::cycle(6))});
  ASSERT_EQ(r.code, cli::kOk);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["kind"], "basic");
  EXPECT_EQ(j["class"], "bipartite");
}

TEST(Cli, VerifySpgtOnSixVertices) {
  const auto r = run({"verify", "--claim", "spgt", "--exhaustive", "6"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["graphs_checked"], 156);
  EXPECT_EQ(j["counterexample_count"], 0);
  EXPECT_EQ(j["counterexamples"], Json::array());
  EXPECT_FALSE(j.contains("wall_time"));
}

TEST(Cli, StreamsOneLinePerGraph) {
  const std::string input = "Dhc\n\nEhEG\r\nC~\n";
  const auto r = run({"berge"}, input);
  ASSERT_EQ(r.code, cli::kOk);
  const auto js = lines(r.out);
  ASSERT_EQ(js.size(), 3U);
  EXPECT_EQ(js[0]["berge"], false);
  EXPECT_EQ(js[2]["graph"], "C~");
  EXPECT_EQ(js[2]["berge"], true);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run({"detect", "triangle", "-g", "Dhc"}).code, cli::kUsage);
  EXPECT_EQ(run({"verify", "--claim", "nosuch", "--exhaustive", "3"}).code, cli::kUsage);
  EXPECT_EQ(run({"verify", "--claim", "spgt", "--exhaustive", "9"}).code, cli::kUsage);
  EXPECT_EQ(run({"verify", "--claim", "spgt", "--generator", "uniform(5,0.5)", "--samples", "3"}).code, cli::kUsage);
  EXPECT_EQ(run({"gen", "--generator", "nope(1)", "--seed", "1"}).code, cli::kUsage);
  EXPECT_EQ(run({"berge", "/nonexistent/file.g6"}).code, cli::kUsage);

  const auto bad = run({"berge"}, "Dh!\n");
  EXPECT_EQ(bad.code, cli::kMalformed);
  EXPECT_NE(bad.err.find("offset 2"), std::string::npos);
  EXPECT_EQ(run({"berge", "--format", "dimacs"}, "p edge 3\n").code, cli::kMalformed);

  const std::string big = emit_graph6(families::cycle(20));
  EXPECT_EQ(run({"berge", "-g", big}).code, cli::kBudget);
  EXPECT_EQ(run({"--max-n", "20", "berge", "-g", big}).code, cli::kOk);
  EXPECT_EQ(run({"--max-n", "40", "berge", "-g", big}).code, cli::kUsage);
  EXPECT_EQ(run({"perfect", "--limit", "10", "-g", emit_graph6(families::cycle(12))}).code, cli::kBudget);
  EXPECT_EQ(run({"gen", "--generator", "uniform(20,0.5)", "--seed", "1"}).code, cli::kBudget);
}

TEST(Cli, EnvironmentGuard) {
  const std::string c6 = emit_graph6(families::cycle(6));
  ::setenv("BERGE_MAX_N", "5", 1);
  EXPECT_EQ(run({"berge", "-g", c6}).code, cli::kBudget);
  EXPECT_EQ(run({"--max-n", "6", "berge", "-g", c6}).code, cli::kOk);
  ::setenv("BERGE_MAX_N", "six", 1);
  EXPECT_EQ(run({"berge", "-g", c6}).code, cli::kUsage);
  ::unsetenv("BERGE_MAX_N");
  EXPECT_EQ(run({"berge", "-g", c6}).code, cli::kOk);
}

TEST(Cli, FilesAndDimacs) {
  const std::string path = testing::TempDir() + "/cli_input.g6";
  {
    std::ofstream f(path);
    f << "Dhc\nEhEG\n";
  }
  const auto r = run({"classify", path});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(lines(r.out).size(), 2U);
  const auto v = run({"verify", "--claim", "decomp", "--file", path});
  ASSERT_EQ(v.code, cli::kOk);
  EXPECT_EQ(Json::parse(v.out)["skipped_non_berge"], 1);

  const auto d = run({"berge", "--format", "dimacs"}, "c five-cycle\np edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n");
  ASSERT_EQ(d.code, cli::kOk);
  EXPECT_EQ(Json::parse(d.out)["graph"], "Dhc");
}

TEST(Cli, IdenticalInvocationsGiveIdenticalBytes) {
  const std::vector<std::vector<std::string>> commands{
      {"verify", "--claim", "evengap", "--generator", "berge_rejection(9,0.5)", "--samples", "40", "--seed", "5"},
      {"verify", "--claim", "rr", "--generator", "berge_rejection(9,0.5)", "--samples", "40", "--seed", "5", "--jobs",
       "3"},
      {"gen", "--generator", "bicograph(2,3)", "--samples", "5", "--seed", "9"},
      {"detect", "wheel", "--all", "-g", "H?bF`xw"},
      {"skew", "-g", "Ch"},
  };
  for (const auto& c : commands) {
    const auto a = run(c), b = run(c);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
  }
  // worker count does not change the report
  auto serial = commands[1];
  serial.resize(serial.size() - 2);
  EXPECT_EQ(run(serial).out, run(commands[1]).out);
}

TEST(Cli, SerialiseParseSerialiseIsAFixedPoint) {
  std::mt19937_64 rng(3);
  std::string input;
  for (int i = 0; i < 30; ++i) input += emit_graph6(random_graph(8, 0.5, rng)) + "\n";
  for (const auto& cmd : {"berge", "classify", "decompose", "skew", "fladder"}) {
    const auto r = run({cmd}, input);
    ASSERT_EQ(r.code, cli::kOk) << cmd;
    std::istringstream in(r.out);
    std::string line;
    while (std::getline(in, line)) EXPECT_EQ(Json::parse(line).dump(), line) << cmd;
  }
}

TEST(Cli, PrintedCertificatesRevalidate) {
  std::mt19937_64 rng(17);
  int seen_decomposition = 0;
  for (int i = 0; i < 200; ++i) {
    const Graph g = random_graph(8, 0.5, rng);
    const auto r = run({"decompose", "-g", emit_graph6(g)});
    ASSERT_EQ(r.code, cli::kOk);
    const auto j = Json::parse(r.out);
    const Graph back = parse_graph6(j["graph"].get<std::string>());
    ASSERT_EQ(back, g);
    if (!j.contains("kind")) {
      EXPECT_EQ(j["berge"], false);
      continue;
    }
    const Verdict v = json::verdict_from(j);
    EXPECT_NE(v.kind, VerdictKind::Counterexample);
    EXPECT_TRUE(check_verdict(back, v)) << r.out;
    seen_decomposition += v.kind != VerdictKind::Basic;
  }
  EXPECT_GT(seen_decomposition, 0);

  for (int i = 0; i < 100; ++i) {
    const Graph g = random_graph(7, 0.5, rng);
    const auto r = run({"skew", "-g", emit_graph6(g)});
    for (const auto& p : Json::parse(r.out)["partitions"]) EXPECT_TRUE(check_skew_partition(g, json::skew_from(p)));
  }
}

TEST(Cli, TwoJoinSchema) {
  const Graph c8 = families::cycle(8);
  const auto cert = find_two_join(c8);
  ASSERT_TRUE(cert);
  const Json j = json::two_join(*cert);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"A1", "A2", "B1", "B2", "X1", "X2"}));
  for (const auto& [k, v] : j.items()) EXPECT_TRUE(std::is_sorted(v.begin(), v.end())) << k;
  EXPECT_TRUE(check_two_join(c8, json::two_join_from(j)));
}

TEST(Cli, DetectCommands) {
  const std::string prism = emit_graph6(families::prism(2, 2, 2));
  auto first = [&](std::vector<std::string> args) { return Json::parse(run(std::move(args)).out); };
  EXPECT_EQ(first({"detect", "prism", "-g", prism})["found"], true);
  EXPECT_EQ(first({"detect", "prism", "--parity", "odd", "-g", prism})["found"], false);
  EXPECT_EQ(first({"detect", "double-diamond", "-g", emit_graph6(families::double_diamond())})["found"], true);
  EXPECT_EQ(first({"detect", "lk33", "-g", emit_graph6(families::line_k33())})["found"], true);
  EXPECT_EQ(first({"detect", "lk33e", "-g", emit_graph6(families::line_k33_minus_edge())})["found"], true);
  const std::string k4 = emit_graph6(families::line_graph(families::k4_subdivision({1, 1, 1, 1, 1, 1})).graph);
  EXPECT_EQ(first({"detect", "appearance-k4", "-g", k4})["found"], true);
  EXPECT_EQ(first({"detect", "wheel", "-g", emit_graph6(families::cycle(6))})["found"], false);
  const auto ladder = first({"fladder", "--check-f8", "off", "-g", prism});
  EXPECT_EQ(ladder["F1"], true);
  EXPECT_EQ(ladder["F4"], false);
  EXPECT_TRUE(ladder["F8"].is_boolean());
}
