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

#include "lscg/harness.hpp"

#include <algorithm>
#include <array>
#include <iomanip>
#include <iostream>
#include <chrono>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "lscg/generators.hpp"
#include "lscg/oracle.hpp"
#include "lscg/randomness.hpp"
#include "lscg/skeleton.hpp"
#include "lscg/tester.hpp"

namespace lscg::harness {

namespace {

using Clock = std::chrono::steady_clock;

// Runs one criterion. The runtime budget is part of the criterion: a run
// that is correct but over budget fails.
CriterionResult timed(int id, std::string name, double budget_seconds,
                      const std::function<bool(std::ostringstream&)>& body) {
  CriterionResult out;
  out.id = id;
  out.name = std::move(name);
  std::ostringstream detail;
  const auto start = Clock::now();
  const bool correct = body(detail);
  out.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  const bool in_budget = out.seconds <= budget_seconds;
  detail << "; checks " << (correct ? "ok" : "FAILED") << ", runtime "
         << std::fixed << std::setprecision(1) << out.seconds << "s "
         << (in_budget ? "within" : "OVER") << " budget " << budget_seconds << "s";
  out.passed = correct && in_budget;
  out.detail = detail.str();
  return out;
}

std::uint64_t sub_seed(std::uint64_t seed, const char* label, std::int64_t i) {
  return StreamKey(seed, {std::string(label), i}).digest();
}

// Skeleton component of `source` computed offline from a realized edge set.
std::set<Vertex> component_of(std::uint32_t n, std::span<const EdgeRef> edges,
                              Vertex source) {
  std::vector<std::vector<Vertex>> adj(n);
  for (const auto& e : edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  std::set<Vertex> seen{source};
  std::vector<Vertex> queue{source};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Vertex w : adj[queue[head]]) {
      if (seen.insert(w).second) queue.push_back(w);
    }
  }
  return seen;
}

LscgConfig scaled_config(double threshold, double c_scale, std::uint64_t seed) {
  LscgConfig config;
  config.threshold = threshold;
  config.tester.c_scale = c_scale;
  config.tester.d = 2.0;
  config.seed = seed;
  return config;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"oracle",   "lemmas",   "skeleton",    "tester", "endtoend",
          "scaling",  "sparsify", "consistency", "all"};
}

std::vector<CriterionResult> run_suite(std::string_view suite, std::uint64_t seed) {
  using Check = CriterionResult (*)(std::uint64_t);
  static const std::array<std::pair<std::string_view, Check>, 8> kSuites{{
      {"oracle", &check_oracle_equivalence},
      {"lemmas", &check_oracle_lemmas},
      {"skeleton", &check_skeleton_fidelity},
      {"tester", &check_tester_calibration},
      {"endtoend", &check_end_to_end},
      {"scaling", &check_probe_scaling},
      {"sparsify", &check_sparsification},
      {"consistency", &check_consistency},
  }};
  std::vector<CriterionResult> out;
  for (const auto& [name, check] : kSuites) {
    if (suite == "all" || suite == name) out.push_back(check(seed));
  }
  if (out.empty()) {
    throw Error(ErrorCode::kInvalidInput, "unknown suite '" + std::string(suite) + "'");
  }
  return out;
}

CriterionResult check_oracle_equivalence(std::uint64_t seed) {
  return timed(1, "oracle equivalence", 30, [&](std::ostringstream& detail) {
    constexpr std::array<double, 3> kDensity{0.3, 0.5, 0.8};
    int mismatches = 0;
    int graphs = 0;
    for (int i = 0; i < 200; ++i) {
      const auto n = static_cast<std::uint32_t>(4 + i % 6);
      const double p = kDensity[static_cast<std::size_t>(i / 6) % 3];
      const auto g = gen::gnp(n, p, sub_seed(seed, "oracle-eq", i));
      ++graphs;
      if (exact_strong_connectivities(g) != brute_force_strong_connectivities(g)) {
        ++mismatches;
      }
    }
    detail << graphs << " graphs, n in [4,9], p in {0.3,0.5,0.8}; mismatches="
           << mismatches;
    return mismatches == 0;
  });
}

CriterionResult check_oracle_lemmas(std::uint64_t seed) {
  return timed(2, "oracle lemma suite", 30, [&](std::ostringstream& detail) {
    constexpr std::array<double, 4> kDensity{0.1, 0.25, 0.5, 0.8};
    int violations = 0;
    double worst_recip_ratio = 0.0;
    double worst_count_ratio = 0.0;
    for (int i = 0; i < 100; ++i) {
      auto rng = derive(seed, {std::string("lemma-graph"), std::int64_t{i}});
      const auto n = static_cast<std::uint32_t>(5 + rng.next_u64() % 46);
      // Keep the density above the connectivity threshold so the
      // conditioned sampler terminates quickly.
      const double floor_p = std::min(1.0, 2.0 * std::log(n) / n);
      const double p = std::max(kDensity[static_cast<std::size_t>(i) % 4], floor_p);
      const auto g = gen::gnp(n, p, sub_seed(seed, "lemma", i));
      const auto s = exact_strong_connectivities(g);

      double recip = 0.0;
      std::uint32_t max_s = 0;
      for (std::size_t k = 0; k < s.edges.size(); ++k) {
        const auto& e = s.edges[k];
        const auto se = s.strength[k];
        recip += 1.0 / se;
        max_s = std::max(max_s, se);
        if (se < 1 || se > std::min(g.degree(e.a), g.degree(e.b))) ++violations;
      }
      if (recip > (n - 1) + 1e-9) ++violations;
      worst_recip_ratio = std::max(worst_recip_ratio, recip / (n - 1));
      for (std::uint32_t t = 1; t <= max_s; ++t) {
        const auto count = static_cast<std::uint64_t>(std::count_if(
            s.strength.begin(), s.strength.end(), [t](auto x) { return x <= t; }));
        const std::uint64_t bound = static_cast<std::uint64_t>(t) * (n - 1);
        if (count > bound) ++violations;
        worst_count_ratio = std::max(worst_count_ratio,
                                     static_cast<double>(count) / bound);
      }
    }
    detail << "100 graphs, n in [5,50]; violations=" << violations
           << "; max sum(1/s_e)/(n-1)=" << worst_recip_ratio
           << "; max |{s_e<=t}|/(t(n-1))=" << worst_count_ratio;
    return violations == 0;
  });
}

CriterionResult check_skeleton_fidelity(std::uint64_t seed) {
  return timed(3, "skeleton fidelity", 60, [&](std::ostringstream& detail) {
    constexpr std::array<double, 3> kProbs{0.2, 0.5, 0.8};
    bool ok = true;
    std::uint64_t max_iterations = 0;
    double iteration_cap = 0.0;
    bool cap_ok = true;
    auto track = [&](const SkeletonState& s, std::uint32_t n) {
      const double cap = 10.0 * std::log2(static_cast<double>(n));
      iteration_cap = std::max(iteration_cap, cap);
      max_iterations = std::max(max_iterations, s.trace().max_iterations);
      if (static_cast<double>(s.trace().max_iterations) > cap) cap_ok = false;
    };

    // (a) lazy BFS vs completed realization, exact.
    int bfs_mismatch = 0;
    const auto petersen = gen::petersen();
    const auto g64 = gen::gnp(64, 0.3, sub_seed(seed, "skel-g64", 0));
    for (const Graph* g : {&petersen, &g64}) {
      const std::uint32_t n = g->vertex_count();
      for (int k = 0; k < 100; ++k) {
        const double p = kProbs[static_cast<std::size_t>(k) % 3];
        const StreamKey key(seed, {std::string("skel-fidelity"), std::int64_t{n},
                                   std::int64_t{k}});
        const auto source = static_cast<Vertex>(k % n);
        ProbedView view(*g);
        SkeletonState state(view, p, key);
        auto lazy = state.reachable(source);
        auto realized = state.materialize();
        track(state, n);
        auto offline = component_of(n, realized, source);
        std::set<Vertex> lazy_set(lazy.begin(), lazy.end());
        if (lazy_set != offline) ++bfs_mismatch;

        ProbedView twin_view(*g);
        SkeletonState twin(twin_view, p, key);
        if (twin.reachable(source) != lazy) ++bfs_mismatch;
      }
    }
    detail << "(a) BFS mismatches=" << bfs_mismatch;
    ok = ok && bfs_mismatch == 0;

    // (b) per-edge marginals on K6, 3 sigma.
    const auto k6 = gen::complete(6);
    constexpr int kTrials = 10000;
    int out_of_band = 0;
    double worst_z = 0.0;
    double sum_z2 = 0.0;
    for (double p : kProbs) {
      std::vector<int> hits(k6.edge_count(), 0);
      for (int t = 0; t < kTrials; ++t) {
        ProbedView view(k6);
        SkeletonState state(view, p, StreamKey(seed, {std::string("skel-k6"),
                                                      double_label(p),
                                                      std::int64_t{t}}));
        for (const auto& e : state.materialize()) ++hits[*k6.edge_position(e)];
        track(state, 6);
      }
      const double sigma = std::sqrt(p * (1 - p) / kTrials);
      for (int h : hits) {
        const double z = std::abs(static_cast<double>(h) / kTrials - p) / sigma;
        worst_z = std::max(worst_z, z);
        sum_z2 += z * z;
        // Inclusive band; the slack only absorbs rounding at exactly 3 sigma.
        if (z > 3.0 * (1 + 1e-9)) ++out_of_band;
      }
    }
    detail << "; (b) K6 edges beyond 3 sigma=" << out_of_band
           << " of " << kProbs.size() * k6.edge_count() << " (max |z|="
           << std::setprecision(4) << worst_z << ", mean z^2="
           << sum_z2 / static_cast<double>(kProbs.size() * k6.edge_count())
           << std::setprecision(6) << ")";
    ok = ok && out_of_band == 0;

    // (c) resample cap also over full G(64, 0.3) materializations.
    for (int t = 0; t < 100; ++t) {
      const double p = kProbs[static_cast<std::size_t>(t) % 3];
      ProbedView view(g64);
      SkeletonState state(view, p, StreamKey(seed, {std::string("skel-cap"),
                                                    std::int64_t{t}}));
      state.materialize();
      track(state, 64);
    }
    detail << "; (c) max resample iterations=" << max_iterations
           << " (cap 10*log2 n, largest " << iteration_cap << ")";
    return ok && cap_ok;
  });
}

CriterionResult check_tester_calibration(std::uint64_t seed) {
  return timed(4, "tester calibration", 60, [&](std::ostringstream& detail) {
    TesterConfig config;
    config.c_scale = 0.1;
    config.d = 2.0;
    bool ok = true;

    const auto k32 = gen::complete(32);
    const EdgeRef clique_edge{0, 1};
    detail << "K32 accepts/100:";
    for (double g : {2.0, 8.0, 16.0, 31.0}) {
      int accepted = 0;
      for (int s = 0; s < 100; ++s) {
        ProbedView view(k32);
        auto out = test_guess(view, clique_edge, g, config,
                              sub_seed(seed, "tester-k32", s));
        if (out.verdict == Verdict::kAccept) ++accepted;
      }
      detail << " g=" << g << ":" << accepted;
      ok = ok && accepted >= 90;
    }

    const auto bar = gen::barbell(8);
    const EdgeRef bridge{7, 8};
    const double lp = lambda_prime(config, bar.vertex_count());
    detail << "; barbell(8) bridge rejects/100:";
    for (double factor : {2.0, 4.0}) {
      const double g = factor * lp * 1.0;
      int rejected = 0;
      for (int s = 0; s < 100; ++s) {
        ProbedView view(bar);
        auto out = test_guess(view, bridge, g, config,
                              sub_seed(seed, "tester-bar", s));
        if (out.verdict == Verdict::kReject) ++rejected;
      }
      detail << " g=" << g << ":" << rejected;
      ok = ok && rejected >= 90;
    }
    return ok;
  });
}

CriterionResult check_end_to_end(std::uint64_t seed) {
  return timed(5, "end-to-end LSCG", 120, [&](std::ostringstream& detail) {
    int connected = 0;
    bool within_m = true;
    std::uint64_t total_kept = 0;
    std::uint64_t total_m = 0;
    constexpr int kSeeds = 50;
    for (int s = 0; s < kSeeds; ++s) {
      const auto run_seed = sub_seed(seed, "e2e", s);
      const auto g = gen::gnp(256, 0.25, run_seed);
      const auto result = materialize_subgraph(g, scaled_config(32, 0.1, run_seed));
      if (is_connected(result.edges, g.vertex_count())) ++connected;
      if (result.edges.size() > g.edge_count()) within_m = false;
      total_kept += result.edges.size();
      total_m += g.edge_count();
      std::clog << "  end-to-end seed " << s + 1 << "/" << kSeeds << ": |E*|="
                << result.edges.size() << " m=" << g.edge_count() << " connected="
                << is_connected(result.edges, g.vertex_count()) << std::endl;
    }
    detail << "G(256,0.25) T=32: connected " << connected << "/" << kSeeds
           << ", |E*|/m overall=" << static_cast<double>(total_kept) / total_m;
    bool ok = connected * 100 >= 95 * kSeeds && within_m;

    // Leaf safety, deterministic: trees and stars keep every edge.
    int leaf_failures = 0;
    for (double threshold : {32.0, 1.0}) {
      for (int s = 0; s < 5; ++s) {
        const auto run_seed = sub_seed(seed, "e2e-tree", s);
        for (const auto& g : {gen::random_tree(200, run_seed), gen::star(200)}) {
          const auto result = materialize_subgraph(
              g, scaled_config(threshold, 0.1, run_seed));
          if (result.edges != g.edges()) ++leaf_failures;
        }
      }
    }
    detail << "; tree/star runs with E* != E: " << leaf_failures;
    return ok && leaf_failures == 0;
  });
}

std::vector<ScalingRow> probe_scaling(const Graph& graph,
                                      std::span<const double> thresholds,
                                      const LscgConfig& base,
                                      std::uint32_t samples,
                                      std::uint64_t sample_seed) {
  const auto edges = graph.edges();
  if (edges.empty()) throw Error(ErrorCode::kInvalidInput, "graph has no edges");
  auto rng = derive(sample_seed, {std::string("scaling-edges")});
  std::vector<EdgeRef> picked(samples);
  for (auto& e : picked) e = edges[rng.next_u64() % edges.size()];

  std::vector<ScalingRow> rows;
  for (double t : thresholds) {
    LscgConfig config = base;
    config.threshold = t;
    ScalingRow row;
    row.threshold = t;
    row.queries = samples;
    for (const auto& e : picked) {
      ProbedView view(graph);
      const auto d = query_edge(view, e, config);
      row.total += d.probes;
      row.max_probes = std::max(row.max_probes, d.probes.total());
      row.tester_runs += d.tester_runs;
    }
    row.mean_probes = samples == 0 ? 0.0
                                   : static_cast<double>(row.total.total()) / samples;
    rows.push_back(row);
  }
  return rows;
}

CriterionResult check_probe_scaling(std::uint64_t seed) {
  return timed(6, "probe scaling", 120, [&](std::ostringstream& detail) {
    const auto g = gen::gnp(512, 0.25, sub_seed(seed, "scaling-graph", 0));
    const std::array<double, 3> ts{16, 64, 256};
    const auto rows = probe_scaling(g, ts, scaled_config(1, 0.1, seed), 200,
                                    sub_seed(seed, "scaling-sample", 0));
    bool ok = true;
    detail << "G(512,0.25) mean probes:";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      detail << " T=" << rows[i].threshold << ":" << rows[i].mean_probes;
      if (i > 0 && rows[i].mean_probes > rows[i - 1].mean_probes) ok = false;
    }
    ok = ok && rows[2].mean_probes <= 0.5 * rows[0].mean_probes;

    const auto k64 = gen::complete(64);
    const std::array<double, 2> kt{4, 16};
    const auto krows = probe_scaling(k64, kt, scaled_config(1, 0.1, seed), 200,
                                     sub_seed(seed, "scaling-sample", 1));
    detail << "; K64 mean probes: T=4:" << krows[0].mean_probes
           << " T=16:" << krows[1].mean_probes;
    return ok && krows[0].mean_probes <= 1.5 * krows[1].mean_probes;
  });
}

CriterionResult check_sparsification(std::uint64_t seed) {
  return timed(7, "sparsification check", 60, [&](std::ostringstream& detail) {
    const std::array<Graph, 2> graphs{gen::complete(12),
                                      gen::gnp(12, 0.6, sub_seed(seed, "sparsify-g", 0))};
    const std::array<const char*, 2> names{"K12", "G(12,0.6)"};
    bool ok = true;
    bool first = true;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const auto& g = graphs[i];
      const auto s = exact_strong_connectivities(g);
      for (double c : {0.3, 1.0}) {
        TesterConfig config;
        config.c_scale = c;
        const double lam = lambda(config, g.vertex_count());
        std::vector<double> p_map(s.strength.size());
        double min_p = 1.0;
        for (std::size_t k = 0; k < p_map.size(); ++k) {
          p_map[k] = std::min(1.0, lam / s.strength[k]);
          min_p = std::min(min_p, p_map[k]);
        }
        const double rate = verify_sparsification(
            g, p_map, 0.5, 200, sub_seed(seed, "sparsify", static_cast<std::int64_t>(i)));
        if (!first) detail << "; ";
        first = false;
        detail << names[i] << " c=" << c << ": pass rate " << rate << " over 200 trials"
               << " (min p_e " << min_p << ")";
        ok = ok && (c == 1.0 ? rate == 1.0 : rate >= 0.9);
      }
    }
    return ok;
  });
}

CriterionResult check_consistency(std::uint64_t seed) {
  return timed(8, "consistency contract", 30, [&](std::ostringstream& detail) {
    const auto g = gen::gnp(48, 0.4, sub_seed(seed, "consistency", 0));
    // Threshold low enough that the guess ladder actually runs.
    const auto config = scaled_config(4, 0.1, seed);
    auto serialize = [&](const SubgraphResult& r) {
      std::ostringstream out;
      write_edge_list(out, g.vertex_count(), r.edges);
      return out.str();
    };
    const auto first = materialize_subgraph(g, config);
    const auto second = materialize_subgraph(g, config);
    const bool bytes_equal = serialize(first) == serialize(second);

    auto order = g.edges();
    auto rng = derive(seed, {std::string("consistency-order")});
    for (std::size_t i = order.size(); i > 1; --i) {
      std::swap(order[i - 1], order[rng.next_u64() % i]);
    }
    int differing = 0;
    for (const auto& e : order) {
      ProbedView view(g);
      if (query_edge(view, e, config) != first.decisions[*g.edge_position(e)]) {
        ++differing;
      }
    }
    detail << "E* byte-identical=" << (bytes_equal ? "yes" : "no")
           << ", |E*|=" << first.edges.size() << "/" << g.edge_count()
           << ", tester runs=" << first.tester_runs
           << ", permuted-order differing decisions=" << differing;
    return bytes_equal && differing == 0;
  });
}

double edge_count_constant(std::uint64_t accepted, std::uint32_t n, double threshold) {
  const double lg = std::log2(static_cast<double>(std::max<std::uint32_t>(n, 2)));
  return static_cast<double>(accepted) / (n * (threshold + lg * lg));
}

}  // namespace lscg::harness
