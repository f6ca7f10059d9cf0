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

#include "motifclust/generators.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "motifclust/error.h"

namespace motifclust {

std::uint64_t Random::below(std::uint64_t bound) {
  // Rejection on the top of the range keeps every residue equally likely.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % bound;
}

Model parse_model(std::string_view name) {
  if (name == "er") return Model::kErdosRenyi;
  if (name == "ba") return Model::kBarabasiAlbert;
  if (name == "plc") return Model::kPowerlawCluster;
  if (name == "planted") return Model::kPlanted;
  throw ConfigError("unknown model '" + std::string(name) + "'");
}

std::string_view model_name(Model model) {
  switch (model) {
    case Model::kErdosRenyi: return "er";
    case Model::kBarabasiAlbert: return "ba";
    case Model::kPowerlawCluster: return "plc";
    case Model::kPlanted: return "planted";
  }
  return "unknown";
}

void GeneratorConfig::validate() const {
  auto check_probability = [](double value, const char* name) {
    if (!(value >= 0.0 && value <= 1.0)) {
      throw ConfigError(std::string(name) + " must lie in [0, 1]");
    }
  };
  if (n == 0) throw ConfigError("n must be positive");
  switch (model) {
    case Model::kErdosRenyi:
      check_probability(p, "p");
      break;
    case Model::kPowerlawCluster:
      check_probability(triangle_p, "triangle probability");
      [[fallthrough]];
    case Model::kBarabasiAlbert:
      if (attachments < 1) throw ConfigError("attachments must be >= 1");
      if (attachments >= n) throw ConfigError("attachments must be < n");
      break;
    case Model::kPlanted:
      check_probability(p_in, "p_in");
      check_probability(p_out, "p_out");
      if (communities < 1 || n % communities != 0) {
        throw ConfigError("community count must divide n");
      }
      break;
  }
}

namespace {

std::vector<Edge> erdos_renyi(VertexId n, double p, Random& rng) {
  std::vector<Edge> edges;
  if (p <= 0.0) return edges;
  if (p >= 1.0) {
    for (VertexId v = 1; v < n; ++v) {
      for (VertexId w = 0; w < v; ++w) edges.emplace_back(w, v);
    }
    return edges;
  }
  // Geometric skipping over the lower triangle of the adjacency matrix.
  const double log_q = std::log1p(-p);
  std::int64_t v = 1;
  std::int64_t w = -1;
  while (v < n) {
    const double r = rng.uniform();
    w += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-r) / log_q));
    while (w >= v && v < n) {
      w -= v;
      ++v;
    }
    if (v < n) {
      edges.emplace_back(static_cast<VertexId>(w), static_cast<VertexId>(v));
    }
  }
  return edges;
}

// Draws `count` distinct entries from `pool`, in draw order.
std::vector<VertexId> random_subset(const std::vector<VertexId>& pool,
                                    VertexId count, Random& rng) {
  std::vector<VertexId> picked;
  while (picked.size() < count) {
    const VertexId x = pool[rng.below(pool.size())];
    if (std::find(picked.begin(), picked.end(), x) == picked.end()) {
      picked.push_back(x);
    }
  }
  return picked;
}

std::vector<Edge> barabasi_albert(VertexId n, VertexId m, Random& rng) {
  std::vector<Edge> edges;
  std::vector<VertexId> repeated;
  // Seed graph: star with center 0 and leaves 1..m.
  for (VertexId leaf = 1; leaf <= m; ++leaf) {
    edges.emplace_back(0, leaf);
    repeated.push_back(0);
    repeated.push_back(leaf);
  }
  for (VertexId source = m + 1; source < n; ++source) {
    const auto targets = random_subset(repeated, m, rng);
    for (VertexId t : targets) {
      edges.emplace_back(source, t);
      repeated.push_back(t);
    }
    repeated.insert(repeated.end(), m, source);
  }
  return edges;
}

std::vector<Edge> powerlaw_cluster(VertexId n, VertexId m, double triangle_p,
                                   Random& rng) {
  std::vector<std::vector<VertexId>> adj(n);
  std::vector<Edge> edges;
  auto connected = [&](VertexId a, VertexId b) {
    return std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end();
  };
  auto add = [&](VertexId a, VertexId b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
    edges.emplace_back(a, b);
  };

  std::vector<VertexId> repeated(m);
  for (VertexId v = 0; v < m; ++v) repeated[v] = v;
  for (VertexId source = m; source < n; ++source) {
    auto targets = random_subset(repeated, m, rng);
    VertexId target = targets.back();
    targets.pop_back();
    add(source, target);
    repeated.push_back(target);
    VertexId count = 1;
    while (count < m) {
      if (rng.uniform() < triangle_p) {
        std::vector<VertexId> closable;
        for (VertexId nbr : adj[target]) {
          if (nbr != source && !connected(source, nbr)) closable.push_back(nbr);
        }
        if (!closable.empty()) {
          const VertexId nbr = closable[rng.below(closable.size())];
          add(source, nbr);
          repeated.push_back(nbr);
          ++count;
          continue;
        }
      }
      target = targets.back();
      targets.pop_back();
      add(source, target);
      repeated.push_back(target);
      ++count;
    }
    repeated.insert(repeated.end(), m, source);
  }
  return edges;
}

}  // namespace

GeneratedGraph generate(const GeneratorConfig& config) {
  config.validate();
  Random rng(config.seed);
  GeneratedGraph out;
  std::vector<Edge> edges;
  switch (config.model) {
    case Model::kErdosRenyi:
      edges = erdos_renyi(config.n, config.p, rng);
      break;
    case Model::kBarabasiAlbert:
      edges = barabasi_albert(config.n, config.attachments, rng);
      break;
    case Model::kPowerlawCluster:
      edges = powerlaw_cluster(config.n, config.attachments, config.triangle_p,
                               rng);
      break;
    case Model::kPlanted: {
      const VertexId block = config.n / config.communities;
      for (VertexId u = 0; u < config.n; ++u) {
        for (VertexId v = u + 1; v < config.n; ++v) {
          const double p =
              (u / block == v / block) ? config.p_in : config.p_out;
          if (rng.bernoulli(p)) edges.emplace_back(u, v);
        }
      }
      out.communities.resize(config.communities);
      for (VertexId v = 0; v < config.n; ++v) {
        out.communities[v / block].push_back(v);
      }
      break;
    }
  }
  out.graph = Graph::from_edges(config.n, edges);
  return out;
}

}  // namespace motifclust
