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

#include "motifclust/estimators.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "motifclust/error.h"
#include "parallel.h"

namespace motifclust {

namespace {

constexpr Count kCountMax = std::numeric_limits<Count>::max();

Count saturate(__int128 x) {
  if (x > kCountMax) return kCountMax;
  if (x < -kCountMax) return -kCountMax;
  return static_cast<Count>(x);
}

// Color multiplicities of `vertices`, skipping the excluded colors.
std::vector<Count> color_multiplicities(const Coloring& coloring,
                                        std::span<const VertexId> vertices,
                                        std::uint32_t skip_a,
                                        std::uint32_t skip_b) {
  std::vector<std::uint32_t> colors;
  colors.reserve(vertices.size());
  for (VertexId w : vertices) {
    const std::uint32_t c = coloring.color[w];
    if (c != skip_a && c != skip_b) colors.push_back(c);
  }
  std::sort(colors.begin(), colors.end());
  std::vector<Count> mult;
  for (std::size_t i = 0; i < colors.size();) {
    std::size_t j = i;
    while (j < colors.size() && colors[j] == colors[i]) ++j;
    mult.push_back(static_cast<Count>(j - i));
    i = j;
  }
  return mult;
}

BoundEstimate estimate_clique_count(const Graph& graph,
                                    std::span<const VertexId> members, int h,
                                    Count upper) {
  if (h == 0) return combine_bounds(1, 1, upper);
  const auto n = static_cast<Count>(members.size());
  const Count edges = count_cliques_within(graph, members, 2);
  return combine_bounds(turan_lower(n, edges, h), erdos_lower(n, edges, h),
                        upper);
}

}  // namespace

Coloring greedy_color(const Graph& graph) {
  const VertexId n = graph.vertex_count();
  constexpr std::uint32_t kUncolored =
      std::numeric_limits<std::uint32_t>::max();
  Coloring out;
  out.color.assign(n, kUncolored);
  std::vector<bool> taken;
  auto order = graph.degeneracy_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const VertexId v = *it;
    taken.assign(graph.degree(v) + 1, false);
    for (VertexId w : graph.neighbors(v)) {
      const std::uint32_t c = out.color[w];
      if (c != kUncolored && c < taken.size()) taken[c] = true;
    }
    std::uint32_t c = 0;
    while (taken[c]) ++c;
    out.color[v] = c;
    out.color_count = std::max(out.color_count, c + 1);
  }
  return out;
}

Count binomial(Count n, int h) {
  if (h < 0 || n < h) return 0;
  h = static_cast<int>(std::min<Count>(h, n - h));
  __int128 result = 1;
  for (int i = 1; i <= h; ++i) {
    result = result * (n - h + i) / i;
    if (result > kCountMax) return kCountMax;
  }
  return static_cast<Count>(result);
}

Count elementary_symmetric(std::span<const Count> values, int h) {
  if (h < 0) return 0;
  std::vector<Count> e(h + 1, 0);
  e[0] = 1;
  for (Count x : values) {
    for (int j = h; j >= 1; --j) {
      e[j] = saturate(static_cast<__int128>(e[j]) +
                      static_cast<__int128>(e[j - 1]) * x);
    }
  }
  return e[h];
}

Count turan_clique_order(Count vertices, Count edges) {
  if (vertices <= 0) return 0;
  const __int128 square = static_cast<__int128>(vertices) * vertices;
  const __int128 slack = square - 2 * static_cast<__int128>(edges);
  if (slack <= 0) throw std::invalid_argument("more edges than vertex pairs");
  const __int128 r = (square + slack - 1) / slack;
  return static_cast<Count>(std::min<__int128>(r, vertices));
}

Count turan_lower(Count vertices, Count edges, int h) {
  if (h == 0) return 1;
  return binomial(turan_clique_order(vertices, edges), h);
}

Count erdos_lower(Count vertices, Count edges, int h) {
  if (h == 0) return 1;
  const Count r = turan_clique_order(vertices, edges);
  if (r == 0) return 0;
  Count t = 1;
  if (r > 2) {
    // Any t' <= t is still a valid count, so rounding down and capping only
    // weaken the bound.
    const long double base = static_cast<long double>(vertices) / (r - 1);
    const long double power = std::pow(base, static_cast<long double>(r - 2));
    t = power >= 0x1p31L ? (Count{1} << 31)
                         : static_cast<Count>(std::floor(power));
    t = std::max<Count>(t, 1);
  }
  const __int128 pairs = static_cast<__int128>(t) * (t - 1) / 2;
  const __int128 bound = static_cast<__int128>(t) * binomial(r, h) -
                         pairs * binomial(r - 1, h);
  return std::max<Count>(0, saturate(bound));
}

Count colorful_star_degree(const Graph& graph, const Coloring& coloring,
                           VertexId u, int h) {
  if (h < 1) throw std::invalid_argument("star size must be >= 1");
  const std::uint32_t cu = coloring.color[u];
  const auto mult = color_multiplicities(coloring, graph.neighbors(u), cu, cu);
  return elementary_symmetric(mult, h - 1);
}

Count colorful_wedge_degree(const Coloring& coloring, VertexId u, VertexId v,
                            std::span<const VertexId> middles, int h) {
  if (h < 2) throw std::invalid_argument("wedge size must be >= 2");
  const auto mult = color_multiplicities(coloring, middles, coloring.color[u],
                                         coloring.color[v]);
  return elementary_symmetric(mult, h - 2);
}

Count colorful_wedge_degree(const Graph& graph, const Coloring& coloring,
                            VertexId u, VertexId v, const VertexSet& subset,
                            int h) {
  std::vector<VertexId> common;
  intersect_sorted(graph.neighbors(u), graph.neighbors(v), common);
  std::erase_if(common, [&](VertexId w) { return !subset.contains(w); });
  return colorful_wedge_degree(coloring, u, v, common, h);
}

BoundEstimate combine_bounds(Count turan, Count erdos, Count upper) {
  BoundEstimate b;
  b.upper = std::max<Count>(upper, 0);
  b.lower = std::min(std::max({turan, erdos, Count{0}}), b.upper);
  b.estimate = std::clamp<Count>(
      static_cast<Count>((static_cast<__int128>(b.lower) + b.upper) / 2), 0,
      b.upper);
  return b;
}

BoundEstimate estimate_motif_degree(const Graph& graph,
                                    const Coloring& coloring, int k,
                                    VertexId u) {
  MotifSpec{k};
  return estimate_clique_count(graph, graph.neighbors(u), k - 1,
                               colorful_star_degree(graph, coloring, u, k));
}

EdgeBoundEstimates estimate_edge_counts(const Graph& graph,
                                        const Coloring& coloring, int k,
                                        VertexId u, VertexId v,
                                        const VertexSet& subset) {
  MotifSpec{k};
  std::vector<VertexId> common;
  intersect_sorted(graph.neighbors(u), graph.neighbors(v), common);
  std::vector<VertexId> in;
  std::vector<VertexId> out;
  for (VertexId w : common) (subset.contains(w) ? in : out).push_back(w);
  EdgeBoundEstimates b;
  b.inside = estimate_clique_count(
      graph, in, k - 2, colorful_wedge_degree(coloring, u, v, in, k));
  b.outside = estimate_clique_count(
      graph, out, k - 2, colorful_wedge_degree(coloring, u, v, out, k));
  return b;
}

EstimatedCounts::EstimatedCounts(const Graph& graph, Coloring coloring, int k,
                                 int threads)
    : graph_(graph), coloring_(std::move(coloring)), k_(k) {
  MotifSpec{k};
  const VertexId n = graph.vertex_count();
  degrees_.assign(n, 0);
  const int workers = std::max(threads, 1);
  internal::run_workers(workers, [&](int w) {
    for (VertexId u = static_cast<VertexId>(w); u < n;
         u += static_cast<VertexId>(workers)) {
      degrees_[u] = estimate_motif_degree(graph_, coloring_, k_, u).estimate;
    }
  });
}

EdgeLocalCounts EstimatedCounts::edge_counts(VertexId u, VertexId v,
                                             const VertexSet& alive) {
  const EdgeBoundEstimates b =
      estimate_edge_counts(graph_, coloring_, k_, u, v, alive);
  return {b.inside.estimate, b.outside.estimate};
}

ClusterResult psmc_plus(const Graph& graph, int k, int threads) {
  EstimatedCounts counts(graph, greedy_color(graph), k, threads);
  const auto& est = counts.motif_degrees();
  if (std::all_of(est.begin(), est.end(), [](Count c) { return c == 0; })) {
    throw NoMotifError("graph contains no " + std::to_string(k) + "-clique");
  }
  Peeler peeler(graph, k, counts);
  while (!peeler.done()) peeler.delete_min_and_update();
  ClusterResult result =
      sweep_select(peeler.take_trace(), graph.vertex_count());
  result.estimated_phi = result.phi;
  result.phi.reset();
  result.g.reset();

  const MotifStats exact = motif_degrees(graph, k, threads);
  if (exact.instances == 0) {
    throw NoMotifError("graph contains no " + std::to_string(k) + "-clique");
  }
  if (auto c = motif_conductance(graph, k, result.cluster, exact)) {
    result.phi = c->phi;
    result.g = c->g;
  }
  return result;
}

void write_bounds_csv(const Graph& graph, int k, std::ostream& out,
                      int threads) {
  const MotifStats exact = motif_degrees(graph, k, threads);
  const Coloring coloring = greedy_color(graph);
  out << "vertex,exact,lower,upper,estimate\n";
  for (VertexId u = 0; u < graph.vertex_count(); ++u) {
    const BoundEstimate b = estimate_motif_degree(graph, coloring, k, u);
    out << graph.label(u) << ',' << exact.degree[u] << ',' << b.lower << ','
        << b.upper << ',' << b.estimate << '\n';
  }
}

}  // namespace motifclust
