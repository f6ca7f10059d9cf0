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

// Exact k-clique motif statistics.
//
// Cliques are listed on the degeneracy-oriented DAG: every edge points from
// the endpoint removed first to the one removed later, so each clique is
// reached exactly once from its earliest vertex and the candidate sets never
// exceed the degeneracy.

#ifndef MOTIFCLUST_MOTIF_H_
#define MOTIFCLUST_MOTIF_H_

#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "motifclust/fraction.h"
#include "motifclust/graph.h"

namespace motifclust {

// Clique motif of order k >= 2. k = 2 is the edge motif, for which every
// quantity below reduces to its classic edge-conductance counterpart.
struct MotifSpec {
  int k = 3;

  explicit MotifSpec(int order);
};

struct MotifStats {
  std::vector<Count> degree;  // M(u): cliques containing u
  Count instances = 0;

  Count total_volume() const;
};

using CliqueVisitor = std::function<void(std::span<const VertexId>)>;

// Calls `visit` once per k-clique with its vertices in ascending id order.
void enumerate_cliques(const Graph& graph, int k, const CliqueVisitor& visit);

// Calls `visit` once per h-clique of the subgraph induced by `members`
// (sorted ascending). h = 0 yields a single empty clique.
void enumerate_cliques_within(const Graph& graph,
                              std::span<const VertexId> members, int h,
                              const CliqueVisitor& visit);

// Number of h-cliques in the subgraph induced by `members` (sorted).
Count count_cliques_within(const Graph& graph,
                           std::span<const VertexId> members, int h);

// Motif degrees by global enumeration; root vertices are split across
// `threads` workers whose integer tallies are summed in worker order.
MotifStats motif_degrees(const Graph& graph, int k, int threads = 1);

// Motif degrees as the number of (k-1)-cliques inside each neighborhood.
MotifStats motif_degrees_by_neighborhood(const Graph& graph, int k,
                                         int threads = 1);

// Motif instances through an edge (u, v), split by where the other k - 2
// vertices sit relative to S.
struct EdgeLocalCounts {
  Count inside = 0;   // all k vertices in S
  Count outside = 0;  // only u and v in S
};

// Requires (u, v) to be an edge with both endpoints in S. For k = 2 the edge
// itself is both the all-inside and the exactly-two-inside instance, so the
// result is (1, 1).
EdgeLocalCounts local_counts(const Graph& graph, int k, VertexId u, VertexId v,
                             const VertexSet& subset);

// Entry j is the number of motif instances containing u that have exactly j
// vertices in S, for j = 0..k.
std::vector<Count> membership_profile(const Graph& graph, int k, VertexId u,
                                      const VertexSet& subset);

struct CutVolume {
  Count cut = 0;
  Count volume = 0;             // vol(S)
  Count complement_volume = 0;  // vol(V \ S)
};

CutVolume cut_and_vol(const Graph& graph, int k, const VertexSet& subset,
                      const MotifStats& stats);

struct Conductance {
  Fraction phi;  // cut / min(vol(S), vol(V \ S))
  Fraction g;    // (vol(S) - cut) / vol(S)
};

// std::nullopt when min(vol(S), vol(V \ S)) is zero.
std::optional<Conductance> motif_conductance(const Graph& graph, int k,
                                             const VertexSet& subset,
                                             const MotifStats& stats);
std::optional<Conductance> motif_conductance(const Graph& graph, int k,
                                             const VertexSet& subset);

// Graph whose edge weights count the motif instances through each edge.
class WeightedMotifGraph {
 public:
  WeightedMotifGraph(const Graph& graph, std::vector<Count> weights);

  // Weight of (u, v); zero if the vertices are not adjacent.
  Count weight(VertexId u, VertexId v) const;
  Count weighted_degree(VertexId u) const;
  // Aligned with graph.neighbors(u).
  std::span<const Count> weights(VertexId u) const;

  // Edge conductance of S under the motif weights; std::nullopt when the
  // smaller side has zero weighted volume.
  std::optional<Fraction> conductance(const VertexSet& subset) const;

  // "u v w" per edge with u < v, original labels.
  void write(std::ostream& out) const;

 private:
  const Graph* graph_;
  std::vector<Count> weights_;
};

WeightedMotifGraph build_weighted_motif_graph(const Graph& graph, int k);

}  // namespace motifclust

#endif  // MOTIFCLUST_MOTIF_H_
