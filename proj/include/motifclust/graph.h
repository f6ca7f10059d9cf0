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

#ifndef MOTIFCLUST_GRAPH_H_
#define MOTIFCLUST_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace motifclust {

using VertexId = std::uint32_t;
using Label = std::uint64_t;
using Count = std::int64_t;
using Edge = std::pair<VertexId, VertexId>;

// Dense membership set over the vertex universe 0..n-1.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(VertexId universe, bool full = false);

  static VertexSet of(VertexId universe, std::span<const VertexId> members);
  static VertexSet of(VertexId universe,
                      std::initializer_list<VertexId> members) {
    return of(universe, std::span<const VertexId>(members.begin(),
                                                  members.size()));
  }
  // Bit i of `mask` selects vertex i; universe must be <= 64.
  static VertexSet from_mask(VertexId universe, std::uint64_t mask);

  bool contains(VertexId v) const {
    return (words_[v >> 6] >> (v & 63)) & 1U;
  }
  void insert(VertexId v);
  void erase(VertexId v);

  VertexId size() const { return size_; }
  bool empty() const { return size_ == 0; }
  VertexId universe() const { return universe_; }

  // Members in ascending order.
  std::vector<VertexId> members() const;
  VertexSet complement() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  VertexId universe_ = 0;
  VertexId size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct DegeneracyOrdering {
  VertexId degeneracy = 0;
  // Removal order of repeated minimum-degree deletion.
  std::vector<VertexId> order;
};

// Simple undirected graph in compressed adjacency form. Immutable after
// construction. Each vertex carries the external label it was read with.
class Graph {
 public:
  Graph() = default;

  // Builds from an arbitrary edge list over 0..n-1: self-loops are dropped
  // and parallel or reversed duplicates merged. `labels` defaults to the
  // identity mapping.
  static Graph from_edges(VertexId vertex_count, std::span<const Edge> edges,
                          std::vector<Label> labels = {});

  VertexId vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return adjacency_.size() / 2; }

  // Sorted ascending.
  std::span<const VertexId> neighbors(VertexId v) const {
    return {adjacency_.data() + offsets_[v],
            adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const;
  bool has_edge(VertexId u, VertexId v) const;

  // Offset of v inside neighbors(u), which must contain it.
  std::size_t neighbor_index(VertexId u, VertexId v) const;
  std::size_t adjacency_offset(VertexId v) const { return offsets_[v]; }

  VertexId degeneracy() const { return degeneracy_; }
  std::span<const VertexId> degeneracy_order() const { return order_; }
  VertexId rank(VertexId v) const { return rank_[v]; }

  // Neighbors that come after v in the degeneracy order, sorted by id.
  // Orienting every edge this way yields an acyclic graph in which each
  // vertex has at most `degeneracy()` out-neighbors.
  std::span<const VertexId> later_neighbors(VertexId v) const {
    return {later_.data() + later_offsets_[v],
            later_.data() + later_offsets_[v + 1]};
  }

  Label label(VertexId v) const { return labels_[v]; }
  std::span<const Label> labels() const { return labels_; }
  std::optional<VertexId> find_label(Label label) const;

  // Unique edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.offsets_ == b.offsets_ &&
           a.adjacency_ == b.adjacency_ && a.labels_ == b.labels_;
  }

 private:
  VertexId vertex_count_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<VertexId> adjacency_;
  VertexId degeneracy_ = 0;
  std::vector<VertexId> order_;
  std::vector<VertexId> rank_;
  std::vector<std::size_t> later_offsets_{0};
  std::vector<VertexId> later_;
  std::vector<Label> labels_;
  std::vector<std::pair<Label, VertexId>> label_index_;
};

// Repeated minimum-degree removal; ties go to the smallest vertex id.
DegeneracyOrdering degeneracy_order(const Graph& graph);

// Sorted neighbors of v that lie in `subset`.
std::vector<VertexId> induced_neighbors(const Graph& graph, VertexId v,
                                        const VertexSet& subset);

struct IngestOptions {
  // When set, vertex ids are taken verbatim from the file and must lie in
  // [0, count); vertices without edges are materialized.
  std::optional<VertexId> declared_vertex_count;
};

// Reads a whitespace-separated edge list with '#' comment lines. External
// ids are compacted to 0..n-1 in order of first appearance.
Graph ingest_edge_list(std::istream& in, const IngestOptions& options = {});

// Writes original labels one edge per line, ordered so that re-ingesting the
// output reproduces the same compaction.
void write_edge_list(const Graph& graph, std::ostream& out);

// Sorted intersection of two sorted ranges, appended to `out`.
void intersect_sorted(std::span<const VertexId> a, std::span<const VertexId> b,
                      std::vector<VertexId>& out);

}  // namespace motifclust

#endif  // MOTIFCLUST_GRAPH_H_
