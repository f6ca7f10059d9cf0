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

#include "motifclust/motif.h"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

#include "parallel.h"

namespace motifclust {

MotifSpec::MotifSpec(int order) : k(order) {
  if (order < 2) {
    throw std::invalid_argument("clique order must be >= 2, got " +
                                std::to_string(order));
  }
}

Count MotifStats::total_volume() const {
  return std::accumulate(degree.begin(), degree.end(), Count{0});
}

namespace {

void require_order(int k) { MotifSpec{k}; }

// Depth-first clique extension on the oriented graph. `stack` holds the
// current partial clique, candidates[stack.size()] its common later
// neighbors; `target` is the clique size to reach.
class CliqueSearch {
 public:
  CliqueSearch(const Graph& graph, int target)
      : graph_(graph), target_(target), candidates_(target + 1) {
    stack_.reserve(target);
  }

  std::vector<VertexId>& candidates(std::size_t depth) {
    return candidates_[depth];
  }
  std::vector<VertexId>& stack() { return stack_; }

  template <class Visit>
  void expand(Visit& visit) {
    const std::size_t depth = stack_.size();
    const auto& here = candidates_[depth];
    if (static_cast<int>(depth) + 1 == target_) {
      for (VertexId w : here) {
        stack_.push_back(w);
        visit(std::span<const VertexId>(stack_));
        stack_.pop_back();
      }
      return;
    }
    auto& next = candidates_[depth + 1];
    for (VertexId w : here) {
      next.clear();
      intersect_sorted(here, graph_.later_neighbors(w), next);
      if (static_cast<int>(next.size() + depth) + 2 <= target_) continue;
      stack_.push_back(w);
      expand(visit);
      stack_.pop_back();
    }
  }

  Count count() {
    const std::size_t depth = stack_.size();
    const auto& here = candidates_[depth];
    if (static_cast<int>(depth) + 1 == target_) {
      return static_cast<Count>(here.size());
    }
    Count total = 0;
    auto& next = candidates_[depth + 1];
    for (VertexId w : here) {
      next.clear();
      intersect_sorted(here, graph_.later_neighbors(w), next);
      if (static_cast<int>(next.size() + depth) + 2 <= target_) continue;
      stack_.push_back(w);
      total += count();
      stack_.pop_back();
    }
    return total;
  }

 private:
  const Graph& graph_;
  int target_;
  std::vector<std::vector<VertexId>> candidates_;
  std::vector<VertexId> stack_;
};

// Visits every k-clique rooted at vertices root, root + stride, ...
template <class Visit>
void for_each_clique(const Graph& graph, int k, VertexId first,
                     VertexId stride, Visit&& visit) {
  CliqueSearch search(graph, k);
  for (VertexId v = first; v < graph.vertex_count(); v += stride) {
    auto later = graph.later_neighbors(v);
    if (static_cast<int>(later.size()) + 1 < k) continue;
    search.stack().assign(1, v);
    search.candidates(1).assign(later.begin(), later.end());
    search.expand(visit);
  }
}

template <class Visit>
void for_each_clique_within(const Graph& graph,
                            std::span<const VertexId> members, int h,
                            Visit&& visit) {
  if (h == 0) {
    visit(std::span<const VertexId>());
    return;
  }
  CliqueSearch search(graph, h);
  search.candidates(0).assign(members.begin(), members.end());
  search.expand(visit);
}

}  // namespace

void enumerate_cliques(const Graph& graph, int k, const CliqueVisitor& visit) {
  require_order(k);
  std::vector<VertexId> sorted;
  for_each_clique(graph, k, 0, 1, [&](std::span<const VertexId> clique) {
    sorted.assign(clique.begin(), clique.end());
    std::sort(sorted.begin(), sorted.end());
    visit(sorted);
  });
}

void enumerate_cliques_within(const Graph& graph,
                              std::span<const VertexId> members, int h,
                              const CliqueVisitor& visit) {
  if (h < 0) throw std::invalid_argument("clique size must be >= 0");
  std::vector<VertexId> sorted;
  for_each_clique_within(graph, members, h,
                         [&](std::span<const VertexId> clique) {
                           sorted.assign(clique.begin(), clique.end());
                           std::sort(sorted.begin(), sorted.end());
                           visit(sorted);
                         });
}

Count count_cliques_within(const Graph& graph,
                           std::span<const VertexId> members, int h) {
  if (h < 0) throw std::invalid_argument("clique size must be >= 0");
  if (h == 0) return 1;
  if (h == 1) return static_cast<Count>(members.size());
  CliqueSearch search(graph, h);
  search.candidates(0).assign(members.begin(), members.end());
  return search.count();
}

MotifStats motif_degrees(const Graph& graph, int k, int threads) {
  require_order(k);
  const VertexId n = graph.vertex_count();
  const int workers = std::max(threads, 1);
  std::vector<std::vector<Count>> partial(workers);
  internal::run_workers(workers, [&](int w) {
    auto& degree = partial[w];
    degree.assign(n, 0);
    for_each_clique(graph, k, static_cast<VertexId>(w),
                    static_cast<VertexId>(workers),
                    [&](std::span<const VertexId> clique) {
                      for (VertexId v : clique) ++degree[v];
                    });
  });
  MotifStats stats;
  stats.degree.assign(n, 0);
  for (const auto& degree : partial) {
    for (VertexId v = 0; v < n; ++v) stats.degree[v] += degree[v];
  }
  stats.instances = stats.total_volume() / k;
  return stats;
}

MotifStats motif_degrees_by_neighborhood(const Graph& graph, int k,
                                         int threads) {
  require_order(k);
  const VertexId n = graph.vertex_count();
  const int workers = std::max(threads, 1);
  MotifStats stats;
  stats.degree.assign(n, 0);
  // Each worker writes a disjoint stride of the output.
  internal::run_workers(workers, [&](int w) {
    for (VertexId u = static_cast<VertexId>(w); u < n;
         u += static_cast<VertexId>(workers)) {
      stats.degree[u] = count_cliques_within(graph, graph.neighbors(u), k - 1);
    }
  });
  stats.instances = stats.total_volume() / k;
  return stats;
}

EdgeLocalCounts local_counts(const Graph& graph, int k, VertexId u, VertexId v,
                             const VertexSet& subset) {
  require_order(k);
  if (!subset.contains(u) || !subset.contains(v) || !graph.has_edge(u, v)) {
    throw std::invalid_argument(
        "local_counts needs an edge with both endpoints in the set");
  }
  if (k == 2) return {1, 1};
  std::vector<VertexId> common;
  intersect_sorted(graph.neighbors(u), graph.neighbors(v), common);
  std::vector<VertexId> in;
  std::vector<VertexId> out;
  for (VertexId w : common) (subset.contains(w) ? in : out).push_back(w);
  return {count_cliques_within(graph, in, k - 2),
          count_cliques_within(graph, out, k - 2)};
}

std::vector<Count> membership_profile(const Graph& graph, int k, VertexId u,
                                      const VertexSet& subset) {
  require_order(k);
  std::vector<Count> profile(k + 1, 0);
  const int base = subset.contains(u) ? 1 : 0;
  for_each_clique_within(graph, graph.neighbors(u), k - 1,
                         [&](std::span<const VertexId> rest) {
                           int inside = base;
                           for (VertexId w : rest) inside += subset.contains(w);
                           ++profile[inside];
                         });
  return profile;
}

CutVolume cut_and_vol(const Graph& graph, int k, const VertexSet& subset,
                      const MotifStats& stats) {
  require_order(k);
  CutVolume out;
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    (subset.contains(v) ? out.volume : out.complement_volume) +=
        stats.degree[v];
  }
  for_each_clique(graph, k, 0, 1, [&](std::span<const VertexId> clique) {
    int inside = 0;
    for (VertexId v : clique) inside += subset.contains(v);
    if (inside != 0 && inside != k) ++out.cut;
  });
  return out;
}

std::optional<Conductance> motif_conductance(const Graph& graph, int k,
                                             const VertexSet& subset,
                                             const MotifStats& stats) {
  const CutVolume cv = cut_and_vol(graph, k, subset, stats);
  const Count smaller = std::min(cv.volume, cv.complement_volume);
  if (smaller == 0) return std::nullopt;
  return Conductance{Fraction{cv.cut, smaller},
                     Fraction{cv.volume - cv.cut, cv.volume}};
}

std::optional<Conductance> motif_conductance(const Graph& graph, int k,
                                             const VertexSet& subset) {
  return motif_conductance(graph, k, subset, motif_degrees(graph, k));
}

WeightedMotifGraph::WeightedMotifGraph(const Graph& graph,
                                       std::vector<Count> weights)
    : graph_(&graph), weights_(std::move(weights)) {
  if (weights_.size() != 2 * graph.edge_count()) {
    throw std::invalid_argument("weights must align with the adjacency");
  }
}

std::span<const Count> WeightedMotifGraph::weights(VertexId u) const {
  return {weights_.data() + graph_->adjacency_offset(u), graph_->degree(u)};
}

Count WeightedMotifGraph::weight(VertexId u, VertexId v) const {
  if (!graph_->has_edge(u, v)) return 0;
  return weights_[graph_->adjacency_offset(u) + graph_->neighbor_index(u, v)];
}

Count WeightedMotifGraph::weighted_degree(VertexId u) const {
  auto w = weights(u);
  return std::accumulate(w.begin(), w.end(), Count{0});
}

std::optional<Fraction> WeightedMotifGraph::conductance(
    const VertexSet& subset) const {
  Count cut = 0;
  Count inside = 0;
  Count total = 0;
  for (VertexId u = 0; u < graph_->vertex_count(); ++u) {
    const Count degree = weighted_degree(u);
    total += degree;
    if (!subset.contains(u)) continue;
    inside += degree;
    auto nbrs = graph_->neighbors(u);
    auto w = weights(u);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (!subset.contains(nbrs[i])) cut += w[i];
    }
  }
  const Count smaller = std::min(inside, total - inside);
  if (smaller == 0) return std::nullopt;
  return Fraction{cut, smaller};
}

void WeightedMotifGraph::write(std::ostream& out) const {
  for (VertexId u = 0; u < graph_->vertex_count(); ++u) {
    auto nbrs = graph_->neighbors(u);
    auto w = weights(u);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (u < nbrs[i]) {
        out << graph_->label(u) << ' ' << graph_->label(nbrs[i]) << ' ' << w[i]
            << '\n';
      }
    }
  }
}

WeightedMotifGraph build_weighted_motif_graph(const Graph& graph, int k) {
  require_order(k);
  std::vector<Count> weights(2 * graph.edge_count(), 0);
  auto slot = [&](VertexId a, VertexId b) -> Count& {
    return weights[graph.adjacency_offset(a) + graph.neighbor_index(a, b)];
  };
  for_each_clique(graph, k, 0, 1, [&](std::span<const VertexId> clique) {
    for (std::size_t i = 0; i < clique.size(); ++i) {
      for (std::size_t j = i + 1; j < clique.size(); ++j) {
        ++slot(clique[i], clique[j]);
        ++slot(clique[j], clique[i]);
      }
    }
  });
  return WeightedMotifGraph(graph, std::move(weights));
}

}  // namespace motifclust
