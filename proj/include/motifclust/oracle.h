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

#ifndef MOTIFCLUST_ORACLE_H_
#define MOTIFCLUST_ORACLE_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "motifclust/fraction.h"
#include "motifclust/graph.h"
#include "motifclust/peeler.h"

namespace motifclust {

inline constexpr VertexId kOracleVertexLimit = 20;

struct OracleResult {
  VertexSet optimal;      // S*: admissible set of minimum phi
  Fraction phi_star;
  VertexSet g_optimal;    // S~: nonempty set of maximum g
  Fraction g_best;
};

// Exhaustive search over all 2^n subsets. A subset is admissible when
// 0 < vol(S) <= vol(V \ S). Ties resolve to the smallest membership mask,
// bit i standing for vertex i. Subsets are split into contiguous mask ranges
// across `threads` workers.
OracleResult brute_force_optimum(const Graph& graph, int k, int threads = 1,
                                 VertexId limit = kOracleVertexLimit);

struct RatioCertificate {
  Fraction phi_hat;    // phi of the peeled cluster
  Fraction phi_star;
  Fraction bound;      // 1/2 + phi_star / 2
  bool holds = false;  // phi_hat <= bound
  // min over u in S~ with M(u) > 0 of Mr_{S~}(u), compared against g(S~).
  std::optional<Fraction> min_resident;
  bool resident_bound_holds = false;
};

RatioCertificate certify_ratio(const Graph& graph, int k, int threads = 1,
                               VertexId limit = kOracleVertexLimit);

// Communities over original vertex labels.
struct GroundTruth {
  std::vector<std::vector<Label>> communities;
};

// One community per line, whitespace-separated labels; '#' lines skipped.
GroundTruth read_ground_truth(std::istream& in);
void write_ground_truth(const GroundTruth& truth, std::ostream& out);

// Best F1 over the ground-truth communities. Throws UndefinedError when the
// ground truth is empty and std::invalid_argument on an empty detection.
double f1_score(const std::vector<Label>& detected, const GroundTruth& truth);

// Original labels of the vertices in `cluster`, ascending by vertex id.
std::vector<Label> cluster_labels(const Graph& graph, const VertexSet& cluster);

struct MetricsReport {
  std::string dataset;
  int k = 0;
  std::string method;
  std::optional<Fraction> mc;            // exact motif conductance
  std::optional<Fraction> mc_estimated;  // PSMC+ sweep value
  std::optional<double> f1;
  VertexId size = 0;
  std::size_t steps_admissible = 0;
  std::optional<double> wall_ms;
  std::optional<long> peak_kb;
  std::vector<Label> cluster;
};

MetricsReport metrics_report(const std::string& dataset, const Graph& graph,
                             int k, const std::string& method,
                             const ClusterResult& result,
                             const GroundTruth* truth = nullptr);

// JSON object with keys dataset, k, method, mc_num, mc_den, mc, f1, size,
// wall_ms (null when absent), plus the peel statistics and cluster labels.
std::string report_json(const MetricsReport& report);

// CSV columns matching the JSON scalars.
std::string report_csv_header();
std::string report_csv_row(const MetricsReport& report);

// Peak resident set size of this process in KiB, if the platform reports it.
std::optional<long> peak_memory_kb();

}  // namespace motifclust

#endif  // MOTIFCLUST_ORACLE_H_
