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

// lscg: command-line front end for the local sparse connected subgraph
// engine. See README.md for usage.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lscg/engine.hpp"
#include "lscg/generators.hpp"
#include "lscg/harness.hpp"
#include "lscg/oracle.hpp"

namespace {

using nlohmann::json;
using namespace lscg;

constexpr int kExitInput = 1;
constexpr int kExitSuite = 2;

struct Options {
  std::string graph_file;
  std::string gen_kind;
  std::vector<double> gen_args;
  std::uint64_t seed = harness::kDefaultSeed;
  double threshold = 1.0;
  int d = 2;
  double scale = 1.0;
  double log_base = 2.0;
  std::string json_path;
  unsigned threads = 0;
};

LscgConfig make_config(const Options& o) {
  LscgConfig config;
  config.threshold = o.threshold;
  config.seed = o.seed;
  config.tester.d = o.d;
  config.tester.c_scale = o.scale;
  config.tester.log_base = o.log_base;
  config.validate();
  return config;
}

Graph load_graph(const Options& o) {
  if (!o.gen_kind.empty()) return gen::generate(o.gen_kind, o.gen_args, o.seed);
  std::ifstream in(o.graph_file);
  if (!in) throw Error(ErrorCode::kInvalidInput, "cannot open graph file '" + o.graph_file + "'");
  return load_edge_list(in);
}

json config_echo(const Options& o) {
  json c{{"seed", o.seed}, {"T", o.threshold}, {"d", o.d},
         {"c_scale", o.scale}, {"log_base", o.log_base}};
  if (!o.gen_kind.empty()) {
    c["generator"] = {{"kind", o.gen_kind}, {"args", o.gen_args}};
  } else {
    c["graph_file"] = o.graph_file;
  }
  return c;
}

json probes_json(const ProbeStats& p) {
  return {{"degree", p.degree_probes},
          {"neighbor", p.neighbor_probes},
          {"adjacency", p.adjacency_probes},
          {"total", p.total()}};
}

json decision_json(EdgeRef e, const EdgeDecision& d) {
  json j{{"u", e.a},
         {"v", e.b},
         {"accepted", d.accepted},
         {"s_hat", d.s_hat},
         {"below_threshold", d.below_threshold},
         {"tester_runs", d.tester_runs},
         {"probes", probes_json(d.probes)}};
  j["g_star"] = d.g_star ? json(*d.g_star) : json(nullptr);
  return j;
}

void write_report(const Options& o, const std::string& command, json body,
                  double seconds) {
  if (o.json_path.empty()) return;
  json report{{"schema", 1}, {"command", command}, {"config", config_echo(o)}};
  report.update(body);
  report["wall_seconds"] = seconds;
  std::ofstream out(o.json_path);
  if (!out) throw Error(ErrorCode::kInvalidInput, "cannot write '" + o.json_path + "'");
  out << report.dump(2) << '\n';
}

double elapsed(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int cmd_query(const Options& o, Vertex u, Vertex v) {
  const auto start = std::chrono::steady_clock::now();
  const auto g = load_graph(o);
  const auto config = make_config(o);
  const auto e = EdgeRef::canonical(u, v);
  ProbedView view(g);
  const auto d = query_edge(view, e, config);
  std::printf("%s\n", d.accepted ? "accept" : "reject");
  std::printf("s_hat %.17g\n", d.s_hat);
  if (d.g_star) {
    std::printf("g_star %.17g\n", *d.g_star);
  } else {
    std::printf("g_star none (below threshold)\n");
  }
  std::printf("tester_runs %u\n", d.tester_runs);
  std::printf("probes %llu (degree %llu, neighbor %llu, adjacency %llu)\n",
              static_cast<unsigned long long>(d.probes.total()),
              static_cast<unsigned long long>(d.probes.degree_probes),
              static_cast<unsigned long long>(d.probes.neighbor_probes),
              static_cast<unsigned long long>(d.probes.adjacency_probes));
  write_report(o, "query", {{"decision", decision_json(e, d)}}, elapsed(start));
  return 0;
}

int cmd_materialize(const Options& o, const std::string& out_path) {
  const auto start = std::chrono::steady_clock::now();
  const auto g = load_graph(o);
  const auto config = make_config(o);
  const auto r = materialize_subgraph(g, config, o.threads);
  const bool connected = is_connected(r.edges, g.vertex_count());

  std::ostream* summary = &std::cout;
  if (out_path.empty()) {
    write_edge_list(std::cout, g.vertex_count(), r.edges);
    summary = &std::cerr;
  } else {
    std::ofstream out(out_path);
    if (!out) throw Error(ErrorCode::kInvalidInput, "cannot write '" + out_path + "'");
    write_edge_list(out, g.vertex_count(), r.edges);
  }
  const double m = static_cast<double>(g.edge_count());
  const double mean = m > 0 ? static_cast<double>(r.total_probes.total()) / m : 0.0;
  std::uint64_t guesses_accepted = 0;
  for (const auto& d : r.decisions) guesses_accepted += d.g_star.has_value();
  *summary << "n " << g.vertex_count() << " m " << g.edge_count() << " |E*| "
           << r.edges.size() << '\n'
           << "input_connected " << (r.input_connected ? "yes" : "no")
           << " output_connected " << (connected ? "yes" : "no") << '\n'
           << "below_threshold " << r.below_threshold << " tester_runs "
           << r.tester_runs << '\n'
           << "probes total " << r.total_probes.total() << " mean/query " << mean
           << " max/query " << r.max_query_probes << '\n';
  if (!r.input_connected) {
    *summary << "warning: input graph is disconnected; connectivity of E* is not claimed\n";
  }

  json body{{"n", g.vertex_count()},
            {"m", g.edge_count()},
            {"accepted_edges", r.edges.size()},
            {"input_connected", r.input_connected},
            {"output_connected", connected},
            {"below_threshold", r.below_threshold},
            {"tester", {{"runs", r.tester_runs},
                        {"accepts", guesses_accepted},
                        {"rejects", r.tester_runs - guesses_accepted}}},
            {"probes", {{"by_type", probes_json(r.total_probes)},
                        {"mean_per_query", mean},
                        {"max_per_query", r.max_query_probes}}}};
  json decisions = json::array();
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    decisions.push_back(decision_json(edges[i], r.decisions[i]));
  }
  body["decisions"] = std::move(decisions);
  write_report(o, "materialize", std::move(body), elapsed(start));
  return 0;
}

int cmd_scaling(const Options& o, std::vector<double> thresholds, std::uint32_t samples) {
  const auto start = std::chrono::steady_clock::now();
  const auto g = load_graph(o);
  const auto config = make_config(o);
  for (std::size_t i = 1; i < thresholds.size(); ++i) {
    if (thresholds[i] < thresholds[i - 1]) {
      throw Error(ErrorCode::kInvalidInput, "threshold list must be ascending");
    }
  }
  const auto rows = harness::probe_scaling(g, thresholds, config, samples, o.seed);
  std::printf("%10s %10s %14s %12s %12s\n", "T", "queries", "mean_probes", "max_probes",
              "tester_runs");
  json table = json::array();
  for (const auto& r : rows) {
    std::printf("%10g %10u %14.2f %12llu %12llu\n", r.threshold, r.queries, r.mean_probes,
                static_cast<unsigned long long>(r.max_probes),
                static_cast<unsigned long long>(r.tester_runs));
    table.push_back({{"T", r.threshold},
                     {"queries", r.queries},
                     {"mean_probes", r.mean_probes},
                     {"max_probes", r.max_probes},
                     {"tester_runs", r.tester_runs},
                     {"probes", probes_json(r.total)}});
  }
  write_report(o, "scaling", {{"samples", samples}, {"rows", table}}, elapsed(start));
  return 0;
}

int cmd_verify(const Options& o, const std::string& suite) {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  json results = json::array();
  for (const auto& r : harness::run_suite(suite, o.seed)) {
    std::printf("[%s] %d. %s: %s\n", r.passed ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.detail.c_str());
    std::fflush(stdout);
    ok = ok && r.passed;
    results.push_back({{"id", r.id},
                       {"name", r.name},
                       {"passed", r.passed},
                       {"detail", r.detail},
                       {"seconds", r.seconds}});
  }
  write_report(o, "verify", {{"suite", suite}, {"results", results}, {"passed", ok}},
               elapsed(start));
  return ok ? 0 : kExitSuite;
}

int cmd_oracle(const Options& o) {
  const auto start = std::chrono::steady_clock::now();
  const auto g = load_graph(o);
  const auto s = exact_strong_connectivities(g);
  json rows = json::array();
  for (std::size_t i = 0; i < s.edges.size(); ++i) {
    std::printf("%u %u %u\n", s.edges[i].a, s.edges[i].b, s.strength[i]);
    rows.push_back({s.edges[i].a, s.edges[i].b, s.strength[i]});
  }
  write_report(o, "oracle", {{"strong_connectivity", rows}}, elapsed(start));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local sparse connected subgraph engine"};
  app.require_subcommand(1);
  Options o;

  auto* graph_opt = app.add_option("--graph", o.graph_file, "Edge-list file");
  auto* gen_opt = app.add_option("--gen", o.gen_kind,
                                 "Generator: gnp, complete, barbell, random_tree, "
                                 "random_regular, path, star, cycle, petersen");
  graph_opt->excludes(gen_opt);
  app.add_option("--gen-args", o.gen_args, "Generator parameters")->needs(gen_opt);
  app.add_option("--seed", o.seed, "Seed for every random stream")->capture_default_str();
  app.add_option("--T", o.threshold, "Threshold T >= 1")->capture_default_str();
  app.add_option("--d", o.d, "Error exponent d")->capture_default_str();
  app.add_option("--scale", o.scale, "Multiplier on lambda and lambda'")->capture_default_str();
  app.add_option("--log-base", o.log_base, "Base of log in lambda, lambda'")
      ->capture_default_str();
  app.add_option("--json", o.json_path, "Write a JSON report here");
  app.add_option("--threads", o.threads, "Worker threads for materialize (0 = all cores)")
      ->capture_default_str();

  Vertex qu = 0;
  Vertex qv = 0;
  auto* query = app.add_subcommand("query", "Decide membership of one edge");
  query->add_option("u", qu)->required();
  query->add_option("v", qv)->required();

  std::string out_path;
  auto* materialize = app.add_subcommand("materialize", "Query every edge and write E*");
  materialize->add_option("--out", out_path, "Edge-list output (default stdout)");

  std::vector<double> thresholds{16, 64, 256};
  std::uint32_t samples = 200;
  auto* scaling = app.add_subcommand("scaling", "Mean probes per query against T");
  scaling->add_option("--Ts", thresholds, "Ascending thresholds")->delimiter(',')
      ->capture_default_str();
  scaling->add_option("--samples", samples, "Random edges per threshold")
      ->capture_default_str();

  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run an acceptance suite");
  verify->add_option("suite", suite, "oracle, lemmas, skeleton, tester, endtoend, "
                                     "scaling, sparsify, consistency or all")
      ->required();

  auto* oracle = app.add_subcommand("oracle", "Exact strong connectivity of every edge");

  for (auto* sub : {query, materialize, scaling, verify, oracle}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*verify) return cmd_verify(o, suite);
    if (o.graph_file.empty() && o.gen_kind.empty()) {
      throw Error(ErrorCode::kInvalidInput, "one of --graph or --gen is required");
    }
    if (*query) return cmd_query(o, qu, qv);
    if (*materialize) return cmd_materialize(o, out_path);
    if (*scaling) return cmd_scaling(o, thresholds, samples);
    return cmd_oracle(o);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
  }
  return kExitInput;
}
