// Copyright 2026 The motifclust Authors
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

#include "motifclust/graph.h"

#include <algorithm>
#include <bit>
#include <charconv>
#include <functional>
#include <istream>
#include <ostream>
#include <queue>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>

#include "motifclust/error.h"

namespace motifclust {

VertexSet::VertexSet(VertexId universe, bool full)
    : universe_(universe), words_((universe + 63) / 64, 0) {
  if (full) {
    for (VertexId v = 0; v < universe; ++v) insert(v);
  }
}

VertexSet VertexSet::of(VertexId universe, std::span<const VertexId> members) {
  VertexSet set(universe);
  for (VertexId v : members) set.insert(v);
  return set;
}

VertexSet VertexSet::from_mask(VertexId universe, std::uint64_t mask) {
  VertexSet set(universe);
  while (mask != 0) {
    set.insert(static_cast<VertexId>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return set;
}

void VertexSet::insert(VertexId v) {
  if (v >= universe_) throw std::out_of_range("vertex outside set universe");
  std::uint64_t& word = words_[v >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (v & 63);
  if ((word & bit) == 0) {
    word |= bit;
    ++size_;
  }
}

void VertexSet::erase(VertexId v) {
  if (v >= universe_) throw std::out_of_range("vertex outside set universe");
  std::uint64_t& word = words_[v >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (v & 63);
  if ((word & bit) != 0) {
    word &= ~bit;
    --size_;
  }
}

std::vector<VertexId> VertexSet::members() const {
  std::vector<VertexId> out;
  out.reserve(size_);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t word = words_[w];
    while (word != 0) {
      out.push_back(static_cast<VertexId>(w * 64 + std::countr_zero(word)));
      word &= word - 1;
    }
  }
  return out;
}

VertexSet VertexSet::complement() const {
  VertexSet out(universe_);
  for (VertexId v = 0; v < universe_; ++v) {
    if (!contains(v)) out.insert(v);
  }
  return out;
}

void intersect_sorted(std::span<const VertexId> a, std::span<const VertexId> b,
                      std::vector<VertexId>& out) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      out.push_back(*i);
      ++i;
      ++j;
    }
  }
}

Graph Graph::from_edges(VertexId vertex_count, std::span<const Edge> edges,
                        std::vector<Label> labels) {
  Graph g;
  g.vertex_count_ = vertex_count;

  std::vector<Edge> normalized;
  normalized.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) {
      throw std::out_of_range("edge endpoint outside vertex range");
    }
    if (u == v) continue;
    normalized.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(normalized.begin(), normalized.end());
  normalized.erase(std::unique(normalized.begin(), normalized.end()),
                   normalized.end());

  g.offsets_.assign(vertex_count + 1, 0);
  for (auto [u, v] : normalized) {
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  for (VertexId v = 0; v < vertex_count; ++v) {
    g.offsets_[v + 1] += g.offsets_[v];
  }
  g.adjacency_.resize(g.offsets_[vertex_count]);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Sorted edge order fills each list in ascending order for the larger
  // endpoint; a final sort handles the smaller one.
  for (auto [u, v] : normalized) {
    g.adjacency_[cursor[u]++] = v;
    g.adjacency_[cursor[v]++] = u;
  }
  for (VertexId v = 0; v < vertex_count; ++v) {
    std::sort(g.adjacency_.begin() + g.offsets_[v],
              g.adjacency_.begin() + g.offsets_[v + 1]);
  }

  if (labels.empty()) {
    labels.resize(vertex_count);
    for (VertexId v = 0; v < vertex_count; ++v) labels[v] = v;
  } else if (labels.size() != vertex_count) {
    throw std::invalid_argument("label count differs from vertex count");
  }
  g.labels_ = std::move(labels);
  g.label_index_.reserve(vertex_count);
  for (VertexId v = 0; v < vertex_count; ++v) {
    g.label_index_.emplace_back(g.labels_[v], v);
  }
  std::sort(g.label_index_.begin(), g.label_index_.end());

  DegeneracyOrdering ordering = motifclust::degeneracy_order(g);
  g.degeneracy_ = ordering.degeneracy;
  g.order_ = std::move(ordering.order);
  g.rank_.assign(vertex_count, 0);
  for (VertexId i = 0; i < vertex_count; ++i) g.rank_[g.order_[i]] = i;

  g.later_offsets_.assign(vertex_count + 1, 0);
  for (VertexId v = 0; v < vertex_count; ++v) {
    std::size_t later = 0;
    for (VertexId w : g.neighbors(v)) later += g.rank_[w] > g.rank_[v];
    g.later_offsets_[v + 1] = g.later_offsets_[v] + later;
  }
  g.later_.reserve(g.later_offsets_[vertex_count]);
  for (VertexId v = 0; v < vertex_count; ++v) {
    for (VertexId w : g.neighbors(v)) {
      if (g.rank_[w] > g.rank_[v]) g.later_.push_back(w);
    }
  }
  return g;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (VertexId v = 0; v < vertex_count_; ++v) best = std::max(best, degree(v));
  return best;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::size_t Graph::neighbor_index(VertexId u, VertexId v) const {
  auto nbrs = neighbors(u);
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v);
  if (it == nbrs.end() || *it != v) {
    throw std::out_of_range("vertices are not adjacent");
  }
  return static_cast<std::size_t>(it - nbrs.begin());
}

std::optional<VertexId> Graph::find_label(Label label) const {
  auto it = std::lower_bound(
      label_index_.begin(), label_index_.end(), label,
      [](const std::pair<Label, VertexId>& e, Label l) { return e.first < l; });
  if (it == label_index_.end() || it->first != label) return std::nullopt;
  return it->second;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (VertexId u = 0; u < vertex_count_; ++u) {
    for (VertexId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

DegeneracyOrdering degeneracy_order(const Graph& graph) {
  const VertexId n = graph.vertex_count();
  DegeneracyOrdering result;
  result.order.reserve(n);

  using Entry = std::pair<std::size_t, VertexId>;  // (residual degree, id)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  std::vector<std::size_t> residual(n);
  std::vector<bool> removed(n, false);
  for (VertexId v = 0; v < n; ++v) {
    residual[v] = graph.degree(v);
    heap.emplace(residual[v], v);
  }
  while (!heap.empty()) {
    auto [deg, v] = heap.top();
    heap.pop();
    if (removed[v] || deg != residual[v]) continue;
    removed[v] = true;
    result.order.push_back(v);
    result.degeneracy =
        std::max(result.degeneracy, static_cast<VertexId>(deg));
    for (VertexId w : graph.neighbors(v)) {
      if (!removed[w]) heap.emplace(--residual[w], w);
    }
  }
  return result;
}

std::vector<VertexId> induced_neighbors(const Graph& graph, VertexId v,
                                        const VertexSet& subset) {
  std::vector<VertexId> out;
  for (VertexId w : graph.neighbors(v)) {
    if (subset.contains(w)) out.push_back(w);
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

Label parse_id(std::string_view token, std::size_t line) {
  Label value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, "invalid vertex id '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Graph ingest_edge_list(std::istream& in, const IngestOptions& options) {
  std::vector<Edge> edges;
  std::vector<Label> labels;
  std::unordered_map<Label, VertexId> compact;

  auto resolve = [&](Label id, std::size_t line) -> VertexId {
    if (options.declared_vertex_count) {
      if (id >= *options.declared_vertex_count) {
        throw ParseError(line, "vertex id " + std::to_string(id) +
                                   " exceeds declared vertex count");
      }
      return static_cast<VertexId>(id);
    }
    auto [it, inserted] =
        compact.try_emplace(id, static_cast<VertexId>(labels.size()));
    if (inserted) labels.push_back(id);
    return it->second;
  };

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    std::vector<std::string_view> tokens;
    std::size_t pos = 0;
    while (pos < line.size()) {
      const auto start = line.find_first_not_of(" \t", pos);
      if (start == std::string_view::npos) break;
      auto end = line.find_first_of(" \t", start);
      if (end == std::string_view::npos) end = line.size();
      tokens.push_back(line.substr(start, end - start));
      pos = end;
    }
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected two vertex ids, found " +
                                    std::to_string(tokens.size()) + " tokens");
    }
    const Label a = parse_id(tokens[0], line_no);
    const Label b = parse_id(tokens[1], line_no);
    // Self-loops are discarded before ids are assigned, so a vertex seen
    // only in a loop is not materialized.
    if (a == b) continue;
    const VertexId u = resolve(a, line_no);
    const VertexId v = resolve(b, line_no);
    edges.emplace_back(u, v);
  }

  if (options.declared_vertex_count) {
    return Graph::from_edges(*options.declared_vertex_count, edges);
  }
  const auto n = static_cast<VertexId>(labels.size());
  return Graph::from_edges(n, edges, std::move(labels));
}

void write_edge_list(const Graph& graph, std::ostream& out) {
  const VertexId n = graph.vertex_count();
  // A vertex without a smaller neighbor is introduced together with its
  // smallest neighbor; in a compacted graph that neighbor is always v + 1.
  std::vector<bool> seen(n, false);
  std::vector<std::optional<VertexId>> partner(n);
  auto emit = [&](VertexId a, VertexId b) {
    out << graph.label(a) << ' ' << graph.label(b) << '\n';
    seen[a] = true;
    seen[b] = true;
  };
  for (VertexId v = 0; v < n; ++v) {
    auto nbrs = graph.neighbors(v);
    if (nbrs.empty()) continue;
    if (!seen[v] && nbrs.front() > v) {
      partner[v] = nbrs.front();
      emit(v, nbrs.front());
    }
    for (VertexId w : nbrs) {
      if (w >= v) break;
      if (partner[w] == v) continue;
      emit(v, w);
    }
  }
}

}  // namespace motifclust
