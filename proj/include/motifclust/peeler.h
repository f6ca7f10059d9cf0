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

// Motif-resident peeling.
//
// For a vertex u of the current set S the resident value is
//
//   Mr_S(u) = (M(u) + M_k^S(u) - M_1^S(u)) / M(u)
//
// where M_j^S(u) counts the motif instances at u with exactly j vertices in
// S. The peeler repeatedly deletes the alive vertex of smallest Mr and keeps
// per-vertex M_k^S and M_1^S current with the per-edge local counts of the
// deleted vertex, so nothing is recomputed from scratch. vol(S), cut(S) and
// vol(S) - cut(S) are carried as exact integers; the best prefix cut is
// picked afterwards from the trace.

#ifndef MOTIFCLUST_PEELER_H_
#define MOTIFCLUST_PEELER_H_

#include <iosfwd>
#include <optional>
#include <queue>
#include <vector>

#include "motifclust/fraction.h"
#include "motifclust/graph.h"
#include "motifclust/motif.h"

namespace motifclust {

// Source of the counts the peel loop consumes. The exact source enumerates
// cliques; the estimating source (see estimators.h) substitutes bounds.
class CountProvider {
 public:
  virtual ~CountProvider() = default;

  // M(u) for every vertex.
  virtual const std::vector<Count>& motif_degrees() = 0;
  // (M_k^S(u, v), M_2^S(u, v)) for an alive edge, S being the alive set
  // before u is deleted.
  virtual EdgeLocalCounts edge_counts(VertexId u, VertexId v,
                                      const VertexSet& alive) = 0;
};

class ExactCounts final : public CountProvider {
 public:
  ExactCounts(const Graph& graph, int k, int threads = 1);

  const std::vector<Count>& motif_degrees() override { return stats_.degree; }
  EdgeLocalCounts edge_counts(VertexId u, VertexId v,
                              const VertexSet& alive) override;

  const MotifStats& stats() const { return stats_; }

 private:
  const Graph& graph_;
  int k_;
  MotifStats stats_;
};

// State of S_i recorded just before the step-i deletion.
struct PeelStep {
  VertexId vertex = 0;       // vertex deleted at this step
  Count resident_num = 0;    // Mr(vertex) = resident_num / resident_den;
  Count resident_den = 0;    // den 0 marks a motif-free vertex
  Count volume = 0;          // vol(S_i)
  Count cut = 0;             // cut(S_i)
  bool admissible = false;   // vol(S_i) > 0 and vol(S_i) <= vol(V \ S_i)
};

struct ClusterResult {
  VertexSet cluster;
  // Exact motif conductance and g of `cluster`. Only PSMC+ can leave these
  // empty, when the cluster it selected has an undefined exact conductance.
  std::optional<Fraction> phi;
  std::optional<Fraction> g;
  // PSMC+ only: the sweep value computed from estimated counts.
  std::optional<Fraction> estimated_phi;
  std::vector<PeelStep> trace;
  // cluster = S_{selected_step + 1}, or its complement when that side has
  // the smaller volume.
  std::size_t selected_step = 0;
  bool complement_selected = false;
  std::size_t steps_admissible = 0;

  std::vector<VertexId> deletion_order() const;
};

class Peeler {
 public:
  // Initializes S_1 = V. `counts` must outlive the peeler.
  Peeler(const Graph& graph, int k, CountProvider& counts);

  bool done() const { return alive_.empty(); }

  // Deletes the alive vertex of minimum Mr (ties: smaller M, then smaller
  // id; motif-free vertices first) and updates its alive neighbors.
  VertexId delete_min_and_update();

  const VertexSet& alive() const { return alive_; }
  Count motif_degree(VertexId v) const { return degree_[v]; }
  Count inside(VertexId v) const { return inside_[v]; }  // M_k^S(v)
  Count single(VertexId v) const { return single_[v]; }  // M_1^S(v)
  Count resident_numerator(VertexId v) const {
    return degree_[v] + inside_[v] - single_[v];
  }

  Count volume() const { return volume_; }
  Count cut() const { return cut_; }
  // vol(S) - cut(S), maintained on its own through the g update.
  Count interior() const { return interior_; }
  Count total_volume() const { return total_volume_; }
  // std::nullopt once vol(S) reaches zero.
  std::optional<Fraction> g() const;

  const std::vector<PeelStep>& trace() const { return trace_; }
  std::vector<PeelStep> take_trace() { return std::move(trace_); }

 private:
  struct Entry {
    Count num;
    Count den;
    VertexId vertex;
  };
  struct LaterFirst {
    bool operator()(const Entry& a, const Entry& b) const;
  };

  void push(VertexId v);

  const Graph& graph_;
  CountProvider& counts_;
  VertexSet alive_;
  std::vector<Count> degree_;
  std::vector<Count> inside_;
  std::vector<Count> single_;
  Count total_volume_ = 0;
  Count volume_ = 0;
  Count cut_ = 0;
  Count interior_ = 0;
  std::priority_queue<Entry, std::vector<Entry>, LaterFirst> heap_;
  std::vector<PeelStep> trace_;
};

// cut(S_i) / min(vol(S_i), vol(V \ S_i)); std::nullopt when either side has
// zero volume. `total_volume` is vol(V).
std::optional<Fraction> prefix_conductance(const PeelStep& step,
                                           Count total_volume);

// Scores every prefix cut (S_i, V \ S_i) by its conductance and returns the
// lighter side of the best one, ties toward the earlier (larger) prefix. For
// admissible prefixes this is cut/vol = 1 - g; an inadmissible prefix stands
// for its complement, which has the same conductance. Throws
// NoAdmissiblePrefixError if no cut has positive volume on both sides.
ClusterResult sweep_select(std::vector<PeelStep> trace, VertexId vertex_count);

// Full peel with exact counts. Throws NoMotifError if the graph has no
// k-clique.
ClusterResult psmc(const Graph& graph, int k, int threads = 1);

// step, deleted_vertex, mr_num, mr_den, vol, cut, g_num, g_den, admissible,
// phi. Vertices are written with their original labels.
void write_peel_trace_csv(const Graph& graph, const ClusterResult& result,
                          std::ostream& out);

// Twelve significant digits.
std::string format_real(double value);

}  // namespace motifclust

#endif  // MOTIFCLUST_PEELER_H_
