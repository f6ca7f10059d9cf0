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

#ifndef MOTIFCLUST_GENERATORS_H_
#define MOTIFCLUST_GENERATORS_H_

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "motifclust/graph.h"

namespace motifclust {

// Portable random source: the engine's output sequence is fixed by the
// standard, and the derived draws below do not depend on library-specific
// distribution implementations.
class Random {
 public:
  explicit Random(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  // Uniform integer in [0, bound), unbiased.
  std::uint64_t below(std::uint64_t bound);
  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

enum class Model { kErdosRenyi, kBarabasiAlbert, kPowerlawCluster, kPlanted };

Model parse_model(std::string_view name);
std::string_view model_name(Model model);

struct GeneratorConfig {
  Model model = Model::kErdosRenyi;
  VertexId n = 0;
  double p = 0.0;               // ER edge probability
  VertexId attachments = 1;     // BA / PLC edges per new vertex
  double triangle_p = 0.0;      // PLC triad-closure probability
  VertexId communities = 1;     // PLANTED block count
  double p_in = 0.3;            // PLANTED intra-block probability
  double p_out = 0.01;          // PLANTED inter-block probability
  std::uint64_t seed = 0;

  // Throws ConfigError on out-of-range parameters.
  void validate() const;
};

struct GeneratedGraph {
  Graph graph;
  // Planted blocks as vertex lists; empty for models without ground truth.
  std::vector<std::vector<VertexId>> communities;
};

GeneratedGraph generate(const GeneratorConfig& config);

}  // namespace motifclust

#endif  // MOTIFCLUST_GENERATORS_H_
