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

#include "lscg/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

namespace lscg {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "parse-error";
    case ErrorCode::kInvalidVertex: return "invalid-vertex";
    case ErrorCode::kInvalidIndex: return "invalid-index";
    case ErrorCode::kInvalidEdge: return "invalid-edge";
    case ErrorCode::kInvalidProbability: return "invalid-probability";
    case ErrorCode::kInvalidConfig: return "invalid-config";
    case ErrorCode::kDegenerateComponent: return "degenerate-component";
    case ErrorCode::kTooLarge: return "too-large";
    case ErrorCode::kInvalidInput: return "invalid-input";
  }
  return "unknown";
}

Graph Graph::from_edges(std::uint32_t n, std::span<const EdgeRef> edges) {
  std::vector<EdgeRef> canon;
  canon.reserve(edges.size());
  for (const auto& e : edges) {
    if (e.a >= n || e.b >= n) {
      throw Error(ErrorCode::kInvalidInput, "edge endpoint out of range");
    }
    if (e.a == e.b) {
      throw Error(ErrorCode::kInvalidInput, "self-loop");
    }
    canon.push_back(EdgeRef::canonical(e.a, e.b));
  }
  std::sort(canon.begin(), canon.end());
  if (std::adjacent_find(canon.begin(), canon.end()) != canon.end()) {
    throw Error(ErrorCode::kInvalidInput, "duplicate edge");
  }

  Graph g;
  g.n_ = n;
  std::vector<std::uint64_t> deg(n, 0);
  std::vector<std::uint64_t> fwd(n, 0);
  for (const auto& e : canon) {
    ++deg[e.a];
    ++deg[e.b];
    ++fwd[e.a];
  }
  g.offsets_.assign(n + 1, 0);
  g.forward_offsets_.assign(n + 1, 0);
  for (std::uint32_t u = 0; u < n; ++u) {
    g.offsets_[u + 1] = g.offsets_[u] + deg[u];
    g.forward_offsets_[u + 1] = g.forward_offsets_[u] + fwd[u];
  }
  g.targets_.resize(g.offsets_[n]);
  std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // canon is sorted by (a, b), so pushing b into a's list and a into b's
  // list both happen in ascending order.
  for (const auto& e : canon) {
    g.targets_[cursor[e.a]++] = e.b;
  }
  for (const auto& e : canon) {
    g.targets_[cursor[e.b]++] = e.a;
  }
  for (std::uint32_t u = 0; u < n; ++u) {
    auto first = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[u]);
    auto last = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[u + 1]);
    std::sort(first, last);
  }
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<EdgeRef> Graph::edges() const {
  std::vector<EdgeRef> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

std::optional<std::size_t> Graph::edge_position(EdgeRef e) const {
  if (e.a >= e.b || e.b >= n_) return std::nullopt;
  auto nb = neighbors(e.a);
  auto it = std::lower_bound(nb.begin(), nb.end(), e.b);
  if (it == nb.end() || *it != e.b) return std::nullopt;
  auto above = std::upper_bound(nb.begin(), nb.end(), e.a);
  return static_cast<std::size_t>(forward_offsets_[e.a] + (it - above));
}

std::uint32_t Graph::min_degree() const {
  std::uint32_t best = n_ == 0 ? 0 : degree(0);
  for (Vertex u = 1; u < n_; ++u) best = std::min(best, degree(u));
  return best;
}

std::uint32_t Graph::max_degree() const {
  std::uint32_t best = 0;
  for (Vertex u = 0; u < n_; ++u) best = std::max(best, degree(u));
  return best;
}

namespace {

std::vector<std::uint64_t> parse_numbers(std::string_view line,
                                         std::size_t line_no,
                                         std::size_t expected) {
  std::vector<std::uint64_t> out;
  const char* p = line.data();
  const char* end = line.data() + line.size();
  while (p < end) {
    while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
    if (p == end) break;
    std::uint64_t value = 0;
    auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc{}) {
      throw ParseError(line_no, "expected a non-negative integer");
    }
    out.push_back(value);
    p = next;
  }
  if (out.size() != expected) {
    throw ParseError(line_no, "expected " + std::to_string(expected) +
                                  " integers, got " +
                                  std::to_string(out.size()));
  }
  return out;
}

bool blank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

}  // namespace

Graph load_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    auto header = parse_numbers(line, line_no, 2);
    n = header[0];
    m = header[1];
    have_header = true;
    break;
  }
  if (!have_header) throw ParseError(line_no, "missing header \"n m\"");
  if (n > UINT32_MAX) throw ParseError(line_no, "vertex count too large");

  std::vector<EdgeRef> edges;
  edges.reserve(m);
  std::vector<std::size_t> lines;
  lines.reserve(m);
  while (edges.size() < m && std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    auto uv = parse_numbers(line, line_no, 2);
    if (uv[0] >= n || uv[1] >= n) {
      throw ParseError(line_no, "vertex id out of range");
    }
    if (uv[0] == uv[1]) throw ParseError(line_no, "self-loop");
    edges.push_back(EdgeRef::canonical(static_cast<Vertex>(uv[0]),
                                       static_cast<Vertex>(uv[1])));
    lines.push_back(line_no);
  }
  if (edges.size() < m) {
    throw ParseError(line_no, "expected " + std::to_string(m) +
                                  " edges, got " +
                                  std::to_string(edges.size()));
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (!blank(line)) throw ParseError(line_no, "trailing data after edges");
  }

  // Duplicate detection reports the later of the two lines.
  std::vector<std::size_t> order(edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return edges[x] < edges[y];
  });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (edges[order[i]] == edges[order[i - 1]]) {
      throw ParseError(lines[order[i]], "duplicate edge");
    }
  }
  return Graph::from_edges(static_cast<std::uint32_t>(n), edges);
}

void write_edge_list(std::ostream& out, std::uint32_t n,
                     std::span<const EdgeRef> edges) {
  std::vector<EdgeRef> sorted(edges.begin(), edges.end());
  for (auto& e : sorted) e = EdgeRef::canonical(e.a, e.b);
  std::sort(sorted.begin(), sorted.end());
  out << n << ' ' << sorted.size() << '\n';
  for (const auto& e : sorted) out << e.a << ' ' << e.b << '\n';
}

void write_edge_list(std::ostream& out, const Graph& graph) {
  auto edges = graph.edges();
  write_edge_list(out, graph.vertex_count(), edges);
}

void ProbedView::throw_invalid_vertex(Vertex u) {
  throw Error(ErrorCode::kInvalidVertex,
              "vertex " + std::to_string(u) + " out of range");
}

void ProbedView::throw_invalid_index(NeighborIndex i) {
  throw Error(ErrorCode::kInvalidIndex,
              "neighbor index " + std::to_string(i) + " out of range");
}

std::optional<NeighborIndex> ProbedView::adjacency(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  ++stats_.adjacency_probes;
  auto nb = graph_->neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return std::nullopt;
  return static_cast<NeighborIndex>(it - nb.begin()) + 1;
}

}  // namespace lscg
