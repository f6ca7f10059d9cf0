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

#include "motifclust/oracle.h"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "motifclust/error.h"
#include "motifclust/motif.h"
#include "parallel.h"

namespace motifclust {

namespace {

struct ChunkBest {
  std::optional<std::uint64_t> phi_mask;
  Fraction phi;
  std::optional<std::uint64_t> g_mask;
  Fraction g;
};

}  // namespace

OracleResult brute_force_optimum(const Graph& graph, int k, int threads,
                                 VertexId limit) {
  MotifSpec{k};
  const VertexId n = graph.vertex_count();
  if (limit > kOracleVertexLimit) {
    throw ConfigError("oracle limit cannot exceed " +
                      std::to_string(kOracleVertexLimit));
  }
  if (n > limit) {
    throw TooLargeError("exhaustive search limited to " +
                        std::to_string(limit) + " vertices, graph has " +
                        std::to_string(n));
  }
  const MotifStats stats = motif_degrees(graph, k);
  if (stats.instances == 0) {
    throw NoMotifError("graph contains no " + std::to_string(k) + "-clique");
  }
  std::vector<std::uint64_t> cliques;
  enumerate_cliques(graph, k, [&](std::span<const VertexId> clique) {
    std::uint64_t mask = 0;
    for (VertexId v : clique) mask |= std::uint64_t{1} << v;
    cliques.push_back(mask);
  });
  const Count total = stats.total_volume();
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;

  const int workers = std::max(threads, 1);
  std::vector<ChunkBest> best(workers);
  internal::run_workers(workers, [&](int w) {
    // Contiguous ranges of [1, full] so an in-order reduction keeps the
    // smallest mask on ties.
    const std::uint64_t span = full / workers + 1;
    const std::uint64_t lo = std::max<std::uint64_t>(1, span * w);
    const std::uint64_t hi = std::min<std::uint64_t>(full, span * (w + 1) - 1);
    ChunkBest& b = best[w];
    for (std::uint64_t mask = lo; mask <= hi && mask != 0; ++mask) {
      Count volume = 0;
      for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1) {
        volume += stats.degree[std::countr_zero(bits)];
      }
      if (volume == 0) continue;
      Count cut = 0;
      for (std::uint64_t c : cliques) {
        cut += (c & mask) != 0 && (c & ~mask) != 0;
      }
      const Fraction g{volume - cut, volume};
      if (!b.g_mask || g > b.g) {
        b.g_mask = mask;
        b.g = g;
      }
      if (mask != full && 2 * volume <= total) {
        const Fraction phi{cut, volume};
        if (!b.phi_mask || phi < b.phi) {
          b.phi_mask = mask;
          b.phi = phi;
        }
      }
      if (mask == hi) break;
    }
  });

  ChunkBest overall;
  for (const ChunkBest& b : best) {
    if (b.phi_mask && (!overall.phi_mask || b.phi < overall.phi)) {
      overall.phi_mask = b.phi_mask;
      overall.phi = b.phi;
    }
    if (b.g_mask && (!overall.g_mask || b.g > overall.g)) {
      overall.g_mask = b.g_mask;
      overall.g = b.g;
    }
  }
  if (!overall.phi_mask || !overall.g_mask) {
    throw NoAdmissiblePrefixError("no admissible subset");
  }
  return OracleResult{VertexSet::from_mask(n, *overall.phi_mask), overall.phi,
                      VertexSet::from_mask(n, *overall.g_mask), overall.g};
}

RatioCertificate certify_ratio(const Graph& graph, int k, int threads,
                               VertexId limit) {
  const OracleResult oracle = brute_force_optimum(graph, k, threads, limit);
  const ClusterResult peeled = psmc(graph, k, threads);

  RatioCertificate cert;
  cert.phi_hat = *peeled.phi;
  cert.phi_star = oracle.phi_star;
  cert.bound = half_plus_half(oracle.phi_star);
  cert.holds = cert.phi_hat <= cert.bound;

  const MotifStats stats = motif_degrees(graph, k);
  for (VertexId u : oracle.g_optimal.members()) {
    const Count degree = stats.degree[u];
    if (degree == 0) continue;
    const auto profile = membership_profile(graph, k, u, oracle.g_optimal);
    const Fraction resident{degree + profile[k] - profile[1], degree};
    if (!cert.min_resident || resident < *cert.min_resident) {
      cert.min_resident = resident;
    }
  }
  cert.resident_bound_holds =
      cert.min_resident && *cert.min_resident >= oracle.g_best;
  return cert;
}

GroundTruth read_ground_truth(std::istream& in) {
  GroundTruth truth;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string token;
    std::vector<Label> community;
    while (tokens >> token) {
      if (community.empty() && token.front() == '#') break;
      Label value = 0;
      auto [ptr, ec] =
          std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError(line_no, "invalid vertex id '" + token + "'");
      }
      community.push_back(value);
    }
    if (!community.empty()) truth.communities.push_back(std::move(community));
  }
  return truth;
}

void write_ground_truth(const GroundTruth& truth, std::ostream& out) {
  for (const auto& community : truth.communities) {
    for (std::size_t i = 0; i < community.size(); ++i) {
      if (i != 0) out << ' ';
      out << community[i];
    }
    out << '\n';
  }
}

double f1_score(const std::vector<Label>& detected, const GroundTruth& truth) {
  if (truth.communities.empty()) {
    throw UndefinedError("F1 needs at least one ground-truth community");
  }
  if (detected.empty()) throw std::invalid_argument("empty detected cluster");
  std::vector<Label> found = detected;
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());

  double best = 0.0;
  for (const auto& raw : truth.communities) {
    std::vector<Label> community = raw;
    std::sort(community.begin(), community.end());
    community.erase(std::unique(community.begin(), community.end()),
                    community.end());
    if (community.empty()) continue;
    std::vector<Label> common;
    std::set_intersection(found.begin(), found.end(), community.begin(),
                          community.end(), std::back_inserter(common));
    if (common.empty()) continue;
    const double precision =
        static_cast<double>(common.size()) / static_cast<double>(found.size());
    const double recall = static_cast<double>(common.size()) /
                          static_cast<double>(community.size());
    best = std::max(best, 2 * precision * recall / (precision + recall));
  }
  return best;
}

std::vector<Label> cluster_labels(const Graph& graph,
                                  const VertexSet& cluster) {
  std::vector<Label> labels;
  for (VertexId v : cluster.members()) labels.push_back(graph.label(v));
  return labels;
}

MetricsReport metrics_report(const std::string& dataset, const Graph& graph,
                             int k, const std::string& method,
                             const ClusterResult& result,
                             const GroundTruth* truth) {
  MetricsReport report;
  report.dataset = dataset;
  report.k = k;
  report.method = method;
  report.mc = result.phi;
  report.mc_estimated = result.estimated_phi;
  report.size = result.cluster.size();
  report.steps_admissible = result.steps_admissible;
  report.cluster = cluster_labels(graph, result.cluster);
  if (truth != nullptr) report.f1 = f1_score(report.cluster, *truth);
  return report;
}

namespace {

// Numbers printed with twelve significant digits.
nlohmann::ordered_json real(double value) {
  return std::strtod(format_real(value).c_str(), nullptr);
}

}  // namespace

std::string report_json(const MetricsReport& report) {
  nlohmann::ordered_json j;
  j["dataset"] = report.dataset;
  j["k"] = report.k;
  j["method"] = report.method;
  if (report.mc) {
    j["mc_num"] = report.mc->num;
    j["mc_den"] = report.mc->den;
    j["mc"] = real(report.mc->value());
  } else {
    j["mc_num"] = nullptr;
    j["mc_den"] = nullptr;
    j["mc"] = nullptr;
  }
  if (report.mc_estimated) {
    j["mc_estimated_num"] = report.mc_estimated->num;
    j["mc_estimated_den"] = report.mc_estimated->den;
    j["mc_estimated"] = real(report.mc_estimated->value());
  }
  if (report.f1) j["f1"] = real(*report.f1);
  j["size"] = report.size;
  j["steps_admissible"] = report.steps_admissible;
  j["wall_ms"] = report.wall_ms ? nlohmann::ordered_json(real(*report.wall_ms))
                                : nlohmann::ordered_json(nullptr);
  j["peak_kb"] = report.peak_kb ? nlohmann::ordered_json(*report.peak_kb)
                                : nlohmann::ordered_json(nullptr);
  j["cluster"] = report.cluster;
  return j.dump(2) + "\n";
}

std::string report_csv_header() {
  return "dataset,k,method,mc_num,mc_den,mc,f1,size,wall_ms\n";
}

std::string report_csv_row(const MetricsReport& report) {
  std::ostringstream row;
  row << report.dataset << ',' << report.k << ',' << report.method << ',';
  if (report.mc) {
    row << report.mc->num << ',' << report.mc->den << ','
        << format_real(report.mc->value());
  } else {
    row << ",,";
  }
  row << ',';
  if (report.f1) row << format_real(*report.f1);
  row << ',' << report.size << ',';
  if (report.wall_ms) row << format_real(*report.wall_ms);
  row << '\n';
  return row.str();
}

std::optional<long> peak_memory_kb() {
  std::ifstream status("/proc/self/status");
  std::string line;
  while (std::getline(status, line)) {
    if (line.rfind("VmHWM:", 0) == 0) {
      return std::strtol(line.c_str() + 6, nullptr, 10);
    }
  }
  return std::nullopt;
}

}  // namespace motifclust
