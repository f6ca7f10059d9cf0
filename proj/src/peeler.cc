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

#include "motifclust/peeler.h"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include "motifclust/error.h"

namespace motifclust {

ExactCounts::ExactCounts(const Graph& graph, int k, int threads)
    : graph_(graph),
      k_(k),
      stats_(motifclust::motif_degrees(graph, k, threads)) {}

EdgeLocalCounts ExactCounts::edge_counts(VertexId u, VertexId v,
                                         const VertexSet& alive) {
  // Every instance through (u, v) is counted in both motif degrees.
  if (stats_.degree[u] == 0 || stats_.degree[v] == 0) return {};
  return local_counts(graph_, k_, u, v, alive);
}

std::vector<VertexId> ClusterResult::deletion_order() const {
  std::vector<VertexId> order;
  order.reserve(trace.size());
  for (const PeelStep& step : trace) order.push_back(step.vertex);
  return order;
}

bool Peeler::LaterFirst::operator()(const Entry& a, const Entry& b) const {
  // True when b must be popped before a.
  const bool a_free = a.den == 0;
  const bool b_free = b.den == 0;
  if (a_free != b_free) return a_free < b_free;
  if (!a_free) {
    const __int128 lhs = static_cast<__int128>(a.num) * b.den;
    const __int128 rhs = static_cast<__int128>(b.num) * a.den;
    if (lhs != rhs) return lhs > rhs;
    if (a.den != b.den) return a.den > b.den;
  }
  return a.vertex > b.vertex;
}

Peeler::Peeler(const Graph& graph, int k, CountProvider& counts)
    : graph_(graph),
      counts_(counts),
      alive_(graph.vertex_count(), /*full=*/true),
      degree_(counts.motif_degrees()),
      inside_(degree_),
      single_(graph.vertex_count(), 0) {
  MotifSpec{k};
  for (Count d : degree_) total_volume_ += d;
  volume_ = total_volume_;
  interior_ = total_volume_;
  trace_.reserve(graph.vertex_count());
  for (VertexId v = 0; v < graph.vertex_count(); ++v) push(v);
}

void Peeler::push(VertexId v) {
  heap_.push(Entry{resident_numerator(v), degree_[v], v});
}

std::optional<Fraction> Peeler::g() const {
  if (volume_ == 0) return std::nullopt;
  return Fraction{interior_, volume_};
}

VertexId Peeler::delete_min_and_update() {
  // Lazy deletion: an entry is current iff its vertex is alive and its
  // numerator matches; every change pushes a fresh entry.
  Entry top{};
  for (;;) {
    if (heap_.empty()) throw std::logic_error("peel on an empty set");
    top = heap_.top();
    heap_.pop();
    if (alive_.contains(top.vertex) &&
        top.num == resident_numerator(top.vertex)) {
      break;
    }
  }
  const VertexId u = top.vertex;

  PeelStep step;
  step.vertex = u;
  step.resident_num = resident_numerator(u);
  step.resident_den = degree_[u];
  step.volume = volume_;
  step.cut = cut_;
  step.admissible = volume_ > 0 && 2 * volume_ <= total_volume_;
  trace_.push_back(step);

  // Neighbor updates use S_i, which still contains u.
  for (VertexId v : graph_.neighbors(u)) {
    if (!alive_.contains(v)) continue;
    const EdgeLocalCounts c = counts_.edge_counts(u, v, alive_);
    if (c.inside == 0 && c.outside == 0) continue;
    inside_[v] -= c.inside;
    single_[v] += c.outside;
    push(v);
  }

  // g(S_{i+1}) = (vol(S_i) g(S_i) - Mr(u) M(u)) / (vol(S_i) - M(u)), kept as
  // its numerator; the cut follows cut(S \ u) = cut(S) + M_k^S(u) - M_1^S(u).
  interior_ -= resident_numerator(u);
  cut_ += inside_[u] - single_[u];
  volume_ -= degree_[u];
  alive_.erase(u);
  return u;
}

std::optional<Fraction> prefix_conductance(const PeelStep& step,
                                           Count total_volume) {
  const Count rest = total_volume - step.volume;
  if (step.volume <= 0 || rest <= 0) return std::nullopt;
  return Fraction{step.cut, std::min(step.volume, rest)};
}

ClusterResult sweep_select(std::vector<PeelStep> trace, VertexId vertex_count) {
  ClusterResult result;
  const Count total = trace.empty() ? 0 : trace.front().volume;
  std::optional<std::size_t> best;
  Fraction best_phi;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    result.steps_admissible += trace[i].admissible;
    const auto phi = prefix_conductance(trace[i], total);
    if (phi && (!best || *phi < best_phi)) {
      best = i;
      best_phi = *phi;
    }
  }
  if (!best) {
    throw NoAdmissiblePrefixError("no prefix cut with positive volume");
  }

  const PeelStep& chosen = trace[*best];
  const Count side = best_phi.den;
  result.selected_step = *best;
  result.complement_selected = chosen.volume > total - chosen.volume;
  result.phi = best_phi;
  result.g = Fraction{side - chosen.cut, side};
  result.cluster = VertexSet(vertex_count);
  const std::size_t lo = result.complement_selected ? 0 : *best;
  const std::size_t hi = result.complement_selected ? *best : trace.size();
  for (std::size_t i = lo; i < hi; ++i) result.cluster.insert(trace[i].vertex);
  result.trace = std::move(trace);
  return result;
}

ClusterResult psmc(const Graph& graph, int k, int threads) {
  ExactCounts counts(graph, k, threads);
  if (counts.stats().instances == 0) {
    throw NoMotifError("graph contains no " + std::to_string(k) + "-clique");
  }
  Peeler peeler(graph, k, counts);
  while (!peeler.done()) peeler.delete_min_and_update();
  return sweep_select(peeler.take_trace(), graph.vertex_count());
}

std::string format_real(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

void write_peel_trace_csv(const Graph& graph, const ClusterResult& result,
                          std::ostream& out) {
  out << "step,deleted_vertex,mr_num,mr_den,vol,cut,g_num,g_den,admissible,"
         "phi\n";
  const Count total = result.trace.empty() ? 0 : result.trace.front().volume;
  for (std::size_t i = 0; i < result.trace.size(); ++i) {
    const PeelStep& s = result.trace[i];
    const bool has_g = s.volume > 0;
    out << (i + 1) << ',' << graph.label(s.vertex) << ',' << s.resident_num
        << ',' << s.resident_den << ',' << s.volume << ',' << s.cut << ','
        << (has_g ? s.volume - s.cut : 0) << ',' << (has_g ? s.volume : 0)
        << ',' << (s.admissible ? 1 : 0) << ',';
    if (auto phi = prefix_conductance(s, total)) {
      out << format_real(phi->value());
    }
    out << '\n';
  }
}

}  // namespace motifclust
