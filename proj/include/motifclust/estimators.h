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

// Clique-count bounds for the estimating peel (PSMC+).
//
// Every count the peel needs is a number of h-cliques inside a neighbor
// subgraph NS: (k-1)-cliques in N(u) for M(u), (k-2)-cliques among the
// common neighbors of an edge inside (resp. outside) S for the local counts.
// Lower bounds come from edge density (the Turán clique threshold and
// Erdős's supersaturation count); upper bounds count colorful selections
// under a proper coloring, since the vertices of a clique all receive
// distinct colors. The estimate is the floored midpoint.

#ifndef MOTIFCLUST_ESTIMATORS_H_
#define MOTIFCLUST_ESTIMATORS_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "motifclust/graph.h"
#include "motifclust/motif.h"
#include "motifclust/peeler.h"

namespace motifclust {

struct Coloring {
  std::vector<std::uint32_t> color;
  std::uint32_t color_count = 0;
};

// Greedy smallest-available coloring, visiting vertices from the end of the
// degeneracy order backwards so each vertex sees at most `degeneracy()`
// colored neighbors. Uses at most degeneracy + 1 colors.
Coloring greedy_color(const Graph& graph);

// C(n, h), saturating at the largest Count.
Count binomial(Count n, int h);

// Sum over h-subsets of the product of their entries, saturating.
Count elementary_symmetric(std::span<const Count> values, int h);

// Guaranteed clique order of a subgraph with the given vertex and edge
// counts: the largest r with 2E / n^2 > 1 - 1/(r - 1), i.e.
// ceil(n^2 / (n^2 - 2E)). At least 1 for a nonempty subgraph.
Count turan_clique_order(Count vertices, Count edges);

// C(r, h) for the guaranteed clique order r.
Count turan_lower(Count vertices, Count edges, int h);

// max(0, t C(r, h) - C(t, 2) C(r - 1, h)) with t = floor((n / (r - 1))^(r-2))
// guaranteed r-cliques (t = 1 when r <= 2).
Count erdos_lower(Count vertices, Count edges, int h);

// Selections of h - 1 neighbors of u with pairwise distinct colors, all
// different from color(u).
Count colorful_star_degree(const Graph& graph, const Coloring& coloring,
                           VertexId u, int h);

// Selections of h - 2 middles with pairwise distinct colors, none sharing a
// color with u or v. Middles adjacent to both endpoints already differ from
// them under a proper coloring; the exclusion is applied regardless.
Count colorful_wedge_degree(const Coloring& coloring, VertexId u, VertexId v,
                            std::span<const VertexId> middles, int h);

// Same, with middles = N_S(u) ∩ N_S(v).
Count colorful_wedge_degree(const Graph& graph, const Coloring& coloring,
                            VertexId u, VertexId v, const VertexSet& subset,
                            int h);

struct BoundEstimate {
  Count lower = 0;
  Count upper = 0;
  Count estimate = 0;
};

// lower = min(max(turan, erdos, 0), upper); estimate = floor((lower +
// upper) / 2).
BoundEstimate combine_bounds(Count turan, Count erdos, Count upper);

// Bounds on M(u).
BoundEstimate estimate_motif_degree(const Graph& graph,
                                    const Coloring& coloring, int k,
                                    VertexId u);

struct EdgeBoundEstimates {
  BoundEstimate inside;   // M_k^S(u, v)
  BoundEstimate outside;  // M_2^S(u, v)
};

EdgeBoundEstimates estimate_edge_counts(const Graph& graph,
                                        const Coloring& coloring, int k,
                                        VertexId u, VertexId v,
                                        const VertexSet& subset);

// Peel counts replaced by their estimates. Motif degrees are estimated once
// up front; local counts on demand.
class EstimatedCounts final : public CountProvider {
 public:
  EstimatedCounts(const Graph& graph, Coloring coloring, int k,
                  int threads = 1);

  const std::vector<Count>& motif_degrees() override { return degrees_; }
  EdgeLocalCounts edge_counts(VertexId u, VertexId v,
                              const VertexSet& alive) override;

  const Coloring& coloring() const { return coloring_; }

 private:
  const Graph& graph_;
  Coloring coloring_;
  int k_;
  std::vector<Count> degrees_;
};

// Peel driven by estimated counts. The prefix is chosen from the estimated
// trace (reported as estimated_phi); phi and g are then recomputed exactly
// for that cluster. Throws NoMotifError if the graph has no k-clique.
ClusterResult psmc_plus(const Graph& graph, int k, int threads = 1);

// vertex, exact, lower, upper, estimate for M(u), one row per vertex.
void write_bounds_csv(const Graph& graph, int k, std::ostream& out,
                      int threads = 1);

}  // namespace motifclust

#endif  // MOTIFCLUST_ESTIMATORS_H_
