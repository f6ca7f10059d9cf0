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

#include "cli.h"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "motifclust/error.h"
#include "motifclust/estimators.h"
#include "motifclust/generators.h"
#include "motifclust/graph.h"
#include "motifclust/motif.h"
#include "motifclust/oracle.h"
#include "motifclust/peeler.h"

namespace motifclust::cli {

namespace {

struct ClusterOptions {
  std::string graph;
  int k = 3;
  std::string method = "psmc";
  std::string out;
  std::string format = "json";
  int threads = 1;
  std::string trace;
  std::string cluster_out;
  std::string truth;
  std::string motif_graph;
  std::optional<VertexId> vertices;
  bool timing = false;
};

struct GenerateOptions {
  std::string model = "er";
  VertexId n = 100;
  double p = 0.05;
  VertexId attach = 1;
  double triangle_p = 0.0;
  VertexId communities = 1;
  double p_in = 0.3;
  double p_out = 0.01;
  std::uint64_t seed = 0;
  std::string out;
  std::string truth_out;
};

struct OracleOptions {
  std::string graph;
  int k = 3;
  int threads = 1;
  VertexId limit = kOracleVertexLimit;
  std::optional<int> batch;
  std::uint64_t seed = 0;
  std::string out;
  std::optional<VertexId> vertices;
};

struct EvaluateOptions {
  std::string cluster;
  std::string truth;
  std::string graph;
  int k = 3;
  int threads = 1;
  std::string out;
  std::string format = "json";
  std::optional<VertexId> vertices;
};

struct BoundsOptions {
  std::string graph;
  int k = 3;
  int threads = 1;
  std::string out;
  std::optional<VertexId> vertices;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  return in;
}

// Writes to `path`, or to `fallback` when the path is empty.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw ConfigError("cannot write '" + path + "'");
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

Graph load_graph(const std::string& path, std::optional<VertexId> vertices) {
  std::ifstream in = open_input(path);
  IngestOptions options;
  options.declared_vertex_count = vertices;
  return ingest_edge_list(in, options);
}

std::string dataset_name(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

void check_threads(int threads) {
  if (threads < 1) throw ConfigError("--threads must be at least 1");
}

void check_k(int k) {
  if (k < 2) throw ConfigError("--k must be at least 2");
}

void write_fraction(std::ostream& out, const std::string& key,
                    const Fraction& f) {
  out << key << ' ' << f.num << '/' << f.den << ' ' << format_real(f.value())
      << '\n';
}

int cmd_cluster(const ClusterOptions& o, std::ostream& out) {
  check_k(o.k);
  check_threads(o.threads);
  if (o.format != "json" && o.format != "csv") {
    throw ConfigError("--format must be json or csv");
  }
  const Graph graph = load_graph(o.graph, o.vertices);
  std::optional<GroundTruth> truth;
  if (!o.truth.empty()) {
    std::ifstream in = open_input(o.truth);
    truth = read_ground_truth(in);
  }

  const auto start = std::chrono::steady_clock::now();
  ClusterResult result;
  if (o.method == "psmc") {
    result = psmc(graph, o.k, o.threads);
  } else if (o.method == "psmc-plus") {
    result = psmc_plus(graph, o.k, o.threads);
  } else {
    throw ConfigError("--method must be psmc or psmc-plus");
  }
  const auto stop = std::chrono::steady_clock::now();

  MetricsReport report =
      metrics_report(dataset_name(o.graph), graph, o.k, o.method, result,
                     truth ? &*truth : nullptr);
  if (o.timing) {
    report.wall_ms =
        std::chrono::duration<double, std::milli>(stop - start).count();
    report.peak_kb = peak_memory_kb();
  }

  Sink sink(o.out, out);
  if (o.format == "json") {
    sink.get() << report_json(report);
  } else {
    sink.get() << report_csv_header() << report_csv_row(report);
  }
  if (!o.trace.empty()) {
    Sink trace(o.trace, out);
    write_peel_trace_csv(graph, result, trace.get());
  }
  if (!o.cluster_out.empty()) {
    Sink members(o.cluster_out, out);
    for (Label label : report.cluster) members.get() << label << '\n';
  }
  if (!o.motif_graph.empty()) {
    Sink weighted(o.motif_graph, out);
    build_weighted_motif_graph(graph, o.k).write(weighted.get());
  }
  return kOk;
}

int cmd_generate(const GenerateOptions& o, std::ostream& out) {
  GeneratorConfig config;
  config.model = parse_model(o.model);
  config.n = o.n;
  config.p = o.p;
  config.attachments = o.attach;
  config.triangle_p = o.triangle_p;
  config.communities = o.communities;
  config.p_in = o.p_in;
  config.p_out = o.p_out;
  config.seed = o.seed;
  const GeneratedGraph generated = generate(config);

  Sink sink(o.out, out);
  write_edge_list(generated.graph, sink.get());

  std::string truth_path = o.truth_out;
  if (truth_path.empty() && !o.out.empty() && config.model == Model::kPlanted) {
    truth_path = o.out + ".truth";
  }
  if (!truth_path.empty()) {
    GroundTruth truth;
    for (const auto& block : generated.communities) {
      std::vector<Label> labels;
      for (VertexId v : block) labels.push_back(generated.graph.label(v));
      truth.communities.push_back(std::move(labels));
    }
    Sink truth_sink(truth_path, out);
    write_ground_truth(truth, truth_sink.get());
  }
  return kOk;
}

int oracle_single(const OracleOptions& o, std::ostream& out) {
  const Graph graph = load_graph(o.graph, o.vertices);
  const RatioCertificate cert = certify_ratio(graph, o.k, o.threads, o.limit);
  Sink sink(o.out, out);
  std::ostream& s = sink.get();
  write_fraction(s, "phi_hat", cert.phi_hat);
  write_fraction(s, "phi_star", cert.phi_star);
  write_fraction(s, "bound", cert.bound);
  s << "holds " << (cert.holds ? "true" : "false") << '\n';
  if (cert.min_resident) write_fraction(s, "min_resident", *cert.min_resident);
  s << "resident_bound_holds " << (cert.resident_bound_holds ? "true" : "false")
    << '\n';
  return cert.holds ? kOk : kGuaranteeViolated;
}

// Random ER instances with n in [6, 14], p in {0.2, 0.4, 0.6} and k cycling
// through 2, 3, 4. Instances without a k-clique are skipped and counted.
int oracle_batch(const OracleOptions& o, std::ostream& out) {
  if (*o.batch < 1) throw ConfigError("--batch must be at least 1");
  constexpr double kDensities[] = {0.2, 0.4, 0.6};
  Random rng(o.seed);
  Sink sink(o.out, out);
  std::ostream& s = sink.get();
  s << "instance,n,p,k,seed,phi_hat_num,phi_hat_den,phi_star_num,"
       "phi_star_den,holds\n";
  int checked = 0;
  int holds = 0;
  int skipped = 0;
  for (int i = 0; i < *o.batch; ++i) {
    GeneratorConfig config;
    config.model = Model::kErdosRenyi;
    config.n = static_cast<VertexId>(6 + rng.below(9));
    config.p = kDensities[rng.below(3)];
    config.seed = rng.below(std::numeric_limits<std::uint64_t>::max());
    const int k = 2 + i % 3;
    const Graph graph = generate(config).graph;
    if (graph.vertex_count() > o.limit) {
      throw TooLargeError("batch instance exceeds --limit");
    }
    RatioCertificate cert;
    try {
      cert = certify_ratio(graph, k, o.threads, o.limit);
    } catch (const NoMotifError&) {
      ++skipped;
      continue;
    }
    ++checked;
    holds += cert.holds;
    s << i << ',' << config.n << ',' << config.p << ',' << k << ','
      << config.seed << ',' << cert.phi_hat.num << ',' << cert.phi_hat.den
      << ',' << cert.phi_star.num << ',' << cert.phi_star.den << ','
      << (cert.holds ? 1 : 0) << '\n';
  }
  s << "# checked " << checked << " holds " << holds << " skipped " << skipped
    << '\n';
  return holds == checked ? kOk : kGuaranteeViolated;
}

int cmd_oracle(const OracleOptions& o, std::ostream& out) {
  check_k(o.k);
  check_threads(o.threads);
  if (o.limit > kOracleVertexLimit) {
    throw ConfigError("--limit cannot exceed " +
                      std::to_string(kOracleVertexLimit));
  }
  if (o.batch.has_value() == !o.graph.empty()) {
    throw ConfigError("give exactly one of --graph and --batch");
  }
  return o.batch ? oracle_batch(o, out) : oracle_single(o, out);
}

int cmd_evaluate(const EvaluateOptions& o, std::ostream& out) {
  check_k(o.k);
  check_threads(o.threads);
  if (o.format != "json" && o.format != "csv") {
    throw ConfigError("--format must be json or csv");
  }
  const Graph graph = load_graph(o.graph, o.vertices);
  GroundTruth truth;
  {
    std::ifstream in = open_input(o.truth);
    truth = read_ground_truth(in);
  }
  GroundTruth listed;
  {
    std::ifstream in = open_input(o.cluster);
    listed = read_ground_truth(in);
  }
  ClusterResult result;
  result.cluster = VertexSet(graph.vertex_count());
  for (const auto& line : listed.communities) {
    for (Label label : line) {
      const auto v = graph.find_label(label);
      if (!v) {
        throw ConfigError("cluster vertex " + std::to_string(label) +
                          " is not in the graph");
      }
      result.cluster.insert(*v);
    }
  }
  if (result.cluster.empty()) throw ConfigError("cluster file is empty");
  const MotifStats stats = motif_degrees(graph, o.k, o.threads);
  if (stats.instances == 0) {
    throw NoMotifError("graph contains no " + std::to_string(o.k) + "-clique");
  }
  if (auto c = motif_conductance(graph, o.k, result.cluster, stats)) {
    result.phi = c->phi;
    result.g = c->g;
  }
  const MetricsReport report = metrics_report(dataset_name(o.graph), graph,
                                              o.k, "given", result, &truth);
  Sink sink(o.out, out);
  if (o.format == "json") {
    sink.get() << report_json(report);
  } else {
    sink.get() << report_csv_header() << report_csv_row(report);
  }
  return kOk;
}

int cmd_bounds(const BoundsOptions& o, std::ostream& out) {
  check_k(o.k);
  check_threads(o.threads);
  const Graph graph = load_graph(o.graph, o.vertices);
  Sink sink(o.out, out);
  write_bounds_csv(graph, o.k, sink.get(), o.threads);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Motif-conductance clustering with k-clique motifs",
               "motifclust"};
  app.require_subcommand(1);

  ClusterOptions cluster;
  auto* c =
      app.add_subcommand("cluster", "Find a low motif-conductance cluster");
  c->add_option("--graph", cluster.graph, "Edge list")->required();
  c->add_option("--k", cluster.k, "Clique order");
  c->add_option("--method", cluster.method, "psmc or psmc-plus");
  c->add_option("--out", cluster.out, "Report path (default stdout)");
  c->add_option("--format", cluster.format, "json or csv");
  c->add_option("--threads", cluster.threads, "Worker threads");
  c->add_option("--trace", cluster.trace, "Peel trace CSV path");
  c->add_option("--cluster-out", cluster.cluster_out, "Member list path");
  c->add_option("--truth", cluster.truth, "Ground-truth communities");
  c->add_option("--motif-graph", cluster.motif_graph,
                "Motif-weighted edge list path");
  c->add_option("--vertices", cluster.vertices,
                "Declared vertex count; ids used verbatim");
  c->add_flag("--timing", cluster.timing, "Report wall time and peak memory");

  GenerateOptions gen;
  auto* g = app.add_subcommand("generate", "Write a synthetic graph");
  g->add_option("--model", gen.model, "er, ba, plc or planted");
  g->add_option("--n", gen.n, "Vertex count");
  g->add_option("--p", gen.p, "ER edge probability");
  g->add_option("--attach", gen.attach, "BA/PLC edges per new vertex");
  g->add_option("--triangle-p", gen.triangle_p, "PLC triad probability");
  g->add_option("--communities", gen.communities, "Planted block count");
  g->add_option("--p-in", gen.p_in, "Planted intra-block probability");
  g->add_option("--p-out", gen.p_out, "Planted inter-block probability");
  g->add_option("--seed", gen.seed, "Random seed");
  g->add_option("--out", gen.out, "Edge list path (default stdout)");
  g->add_option("--truth-out", gen.truth_out,
                "Ground-truth path (planted default: <out>.truth)");

  OracleOptions oracle;
  auto* o = app.add_subcommand("oracle", "Certify the approximation ratio");
  o->add_option("--graph", oracle.graph, "Edge list");
  o->add_option("--k", oracle.k, "Clique order (single graph)");
  o->add_option("--threads", oracle.threads, "Worker threads");
  o->add_option("--limit", oracle.limit, "Vertex limit, at most 20");
  o->add_option("--batch", oracle.batch, "Random instance count");
  o->add_option("--seed", oracle.seed, "Batch seed");
  o->add_option("--out", oracle.out, "Output path (default stdout)");
  o->add_option("--vertices", oracle.vertices, "Declared vertex count");

  EvaluateOptions eval;
  auto* e = app.add_subcommand("evaluate", "Score a cluster file");
  e->add_option("--cluster", eval.cluster, "Member list")->required();
  e->add_option("--truth", eval.truth, "Ground-truth communities")->required();
  e->add_option("--graph", eval.graph, "Edge list")->required();
  e->add_option("--k", eval.k, "Clique order");
  e->add_option("--threads", eval.threads, "Worker threads");
  e->add_option("--out", eval.out, "Report path (default stdout)");
  e->add_option("--format", eval.format, "json or csv");
  e->add_option("--vertices", eval.vertices, "Declared vertex count");

  BoundsOptions bounds;
  auto* b = app.add_subcommand("bounds", "Per-vertex motif degree bounds");
  b->add_option("--graph", bounds.graph, "Edge list")->required();
  b->add_option("--k", bounds.k, "Clique order");
  b->add_option("--threads", bounds.threads, "Worker threads");
  b->add_option("--out", bounds.out, "CSV path (default stdout)");
  b->add_option("--vertices", bounds.vertices, "Declared vertex count");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (c->parsed()) return cmd_cluster(cluster, out);
    if (g->parsed()) return cmd_generate(gen, out);
    if (o->parsed()) return cmd_oracle(oracle, out);
    if (e->parsed()) return cmd_evaluate(eval, out);
    return cmd_bounds(bounds, out);
  } catch (const NoMotifError& ex) {
    err << "error: " << ex.what() << '\n';
    return kNoMotif;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return kInputError;
  }
}

}  // namespace motifclust::cli
