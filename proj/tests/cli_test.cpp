// Copyright 2026 The lscg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"
#include "lscg/engine.hpp"
#include "lscg/generators.hpp"
#include "lscg/oracle.hpp"
#include "test_support.hpp"

using namespace lscg;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string command = std::string(LSCG_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("lscg_cli_test_" + name);
}

nlohmann::json read_json(const std::filesystem::path& p) {
  std::ifstream in(p);
  return nlohmann::json::parse(in);
}

}  // namespace

TEST_CASE("query matches the library call") {
  auto r = run("--gen complete --gen-args 32 --T 4 --scale 0.1 --seed 7 query 0 1");
  REQUIRE(r.code == 0);
  auto k32 = gen::complete(32);
  LscgConfig config;
  config.threshold = 4;
  config.tester.c_scale = 0.1;
  config.seed = 7;
  ProbedView view(k32);
  auto d = query_edge(view, {0, 1}, config);
  char expected[64];
  std::snprintf(expected, sizeof expected, "s_hat %.17g\n", d.s_hat);
  CHECK(r.out.rfind(d.accepted ? "accept\n" : "reject\n", 0) == 0);
  CHECK(r.out.find(expected) != std::string::npos);
  CHECK(r.out.find("probes " + std::to_string(d.probes.total()) + " ") != std::string::npos);

  CHECK(run("--gen complete --gen-args 32 --T 4 --scale 0.1 --seed 7 query 0 1").out == r.out);
  // Endpoint order does not matter.
  CHECK(run("--gen complete --gen-args 32 --T 4 --scale 0.1 --seed 7 query 1 0").out == r.out);
}

TEST_CASE("tree edges are accepted") {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const auto e = gen::random_tree(40, seed).edges()[seed * 7];
    auto r = run("--gen random_tree --gen-args 40 --scale 0.1 --seed " + std::to_string(seed) +
                 " query " + std::to_string(e.a) + " " + std::to_string(e.b));
    CHECK(r.code == 0);
    CHECK(r.out.rfind("accept\n", 0) == 0);
  }
  auto p = run("--gen path --gen-args 10 query 4 5");
  CHECK(p.code == 0);
  CHECK(p.out.rfind("accept\n", 0) == 0);
}

TEST_CASE("materialize from a file writes E* and a reproducible report") {
  auto g = gen::gnp(30, 0.3, 5);
  const auto in = temp_file("in.txt");
  const auto out = temp_file("out.txt");
  const auto report = temp_file("report.json");
  {
    std::ofstream f(in);
    write_edge_list(f, g);
  }
  auto r = run("--graph " + in.string() + " --T 2 --scale 0.1 --seed 11 --json " +
               report.string() + " materialize --out " + out.string());
  REQUIRE(r.code == 0);

  LscgConfig config;
  config.threshold = 2;
  config.tester.c_scale = 0.1;
  config.seed = 11;
  auto lib = materialize_subgraph(g, config, 1);
  std::ifstream written(out);
  std::stringstream text;
  text << written.rdbuf();
  std::ostringstream expected;
  write_edge_list(expected, g.vertex_count(), lib.edges);
  CHECK(text.str() == expected.str());

  auto j = read_json(report);
  CHECK(j["schema"] == 1);
  CHECK(j["config"]["seed"] == 11);
  CHECK(j["config"]["T"] == 2.0);
  CHECK(j["accepted_edges"] == lib.edges.size());
  CHECK(j["probes"]["by_type"]["total"] == lib.total_probes.total());
  REQUIRE(j["decisions"].size() == g.edge_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    CHECK(j["decisions"][i]["accepted"] == lib.decisions[i].accepted);
    CHECK(j["decisions"][i]["tester_runs"] == lib.decisions[i].tester_runs);
  }

  // Re-running from the echoed config reproduces the decisions.
  const auto again = temp_file("again.json");
  const auto& c = j["config"];
  run("--graph " + c["graph_file"].get<std::string>() + " --T " +
      std::to_string(c["T"].get<double>()) + " --scale " +
      std::to_string(c["c_scale"].get<double>()) + " --seed " +
      std::to_string(c["seed"].get<std::uint64_t>()) + " --json " + again.string() +
      " materialize --out " + out.string());
  CHECK(read_json(again)["decisions"] == j["decisions"]);
  std::filesystem::remove(in);
  std::filesystem::remove(out);
  std::filesystem::remove(report);
  std::filesystem::remove(again);
}

TEST_CASE("materialize to stdout on a path keeps every edge") {
  auto r = run("--gen path --gen-args 7 --scale 0.1 materialize");
  REQUIRE(r.code == 0);
  CHECK(r.out == "7 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n");
}

TEST_CASE("oracle prints exact strong connectivities") {
  auto r = run("--gen barbell --gen-args 4 oracle");
  REQUIRE(r.code == 0);
  auto s = exact_strong_connectivities(gen::barbell(4));
  std::string expected;
  for (std::size_t i = 0; i < s.edges.size(); ++i) {
    expected += std::to_string(s.edges[i].a) + " " + std::to_string(s.edges[i].b) + " " +
                std::to_string(s.strength[i]) + "\n";
  }
  CHECK(r.out == expected);
}

TEST_CASE("scaling table") {
  const auto report = temp_file("scaling.json");
  auto r = run("--gen gnp --gen-args 40 0.3 --scale 0.1 --json " + report.string() +
               " scaling --Ts 2,8,64 --samples 10");
  REQUIRE(r.code == 0);
  auto rows = read_json(report)["rows"];
  REQUIRE(rows.size() == 3);
  CHECK(rows[0]["mean_probes"].get<double>() >= rows[1]["mean_probes"].get<double>());
  CHECK(rows[1]["mean_probes"].get<double>() >= rows[2]["mean_probes"].get<double>());
  CHECK(run("--gen gnp --gen-args 40 0.3 scaling --Ts 8,2").code == 1);
  std::filesystem::remove(report);
}

TEST_CASE("verify runs a suite") {
  auto r = run("verify consistency");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("[PASS] 8.", 0) == 0);
}

TEST_CASE("exit codes for input errors") {
  CHECK(run("--gen path --gen-args 4 query 0 2").code == 1);
  CHECK(run("verify nonsense").code == 1);
  CHECK(run("--graph /nonexistent/graph.txt oracle").code == 1);
  CHECK(run("--gen regular oracle").code == 1);
  CHECK(run("--gen random_regular --gen-args 5 3 oracle").code == 1);
  CHECK(run("--gen path --gen-args 4 --T 0.5 materialize").code == 1);
  CHECK(run("oracle").code == 1);
  CHECK(run("").code == 1);
  CHECK(run("--bogus-flag 3 oracle").code == 1);

  const auto bad = temp_file("bad.txt");
  {
    std::ofstream f(bad);
    f << "3 2\n0 1\n1 0\n";
  }
  auto r = run("--graph " + bad.string() + " oracle");
  CHECK(r.code == 1);
  std::filesystem::remove(bad);
}
