// Copyright 2026 The Ricci Authors
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
#include <cctype>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "ricci/analysis.h"
#include "ricci/curvature.h"
#include "ricci/detection.h"
#include "ricci/errors.h"
#include "ricci/generators.h"
#include "ricci/graph.h"
#include "ricci/io.h"
#include "ricci/parallel.h"

#ifndef RICCI_VERSION
#define RICCI_VERSION "unknown"
#endif

namespace ricci::cli {
namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Options shared by every command that produces a result.
struct Common {
  std::string format = "csv";
  std::string output;    // empty: caller's stream
  std::string manifest;  // empty: next to `output`, or none
  int threads = 0;

  int resolved_threads() const {
    return threads > 0 ? threads : DefaultThreadCount();
  }
  bool json() const { return format == "json"; }
};

// What a command reports about itself in its manifest.
struct RunRecord {
  std::string command;
  Json parameters = Json::object();
  std::vector<std::uint64_t> seeds;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  Json results = Json::object();
};

// Writes either to a file (replaced only when complete) or to `fallback`.
class Output {
 public:
  Output(std::string path, std::ostream& fallback)
      : path_(std::move(path)), fallback_(fallback) {}

  std::ostream& stream() { return path_.empty() ? fallback_ : buffer_; }

  void Commit() {
    if (path_.empty()) {
      fallback_.flush();
      return;
    }
    std::ofstream file(path_, std::ios::binary | std::ios::trunc);
    file << buffer_.str();
    file.close();
    if (!file) throw IoError("cannot write '" + path_ + "'");
  }

 private:
  std::string path_;
  std::ostream& fallback_;
  std::ostringstream buffer_;
};

void WriteJsonFile(const std::string& path, const Json& j) {
  Output o(path, std::cout);
  o.stream() << j.dump(2) << '\n';
  o.Commit();
}

void WriteManifest(const Common& common, const std::vector<std::string>& argv,
                   RunRecord record, double seconds) {
  std::string path = common.manifest;
  if (path.empty() && !common.output.empty()) path = ManifestPath(common.output);
  if (path.empty()) return;
  Json j;
  j["tool"] = "ricci";
  j["version"] = RICCI_VERSION;
  j["command"] = record.command;
  j["argv"] = argv;
  j["parameters"] = std::move(record.parameters);
  j["seeds"] = record.seeds;
  j["inputs"] = record.inputs;
  j["outputs"] = record.outputs;
  j["threads"] = common.resolved_threads();
  j["wall_time_seconds"] = seconds;
  if (!record.results.empty()) j["results"] = std::move(record.results);
  WriteJsonFile(path, j);
}

std::string Lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

CurvatureMethod ResolveMethod(const std::string& name, std::optional<int> max_cycle) {
  const std::string lower = Lower(name);
  const auto method = ParseMethod(lower, max_cycle.value_or(3));
  if (!method) throw UsageError("unknown curvature method '" + name + "'");
  if (max_cycle && lower != "afrc") {
    if (CycleLengthOf(*method) == 0) {
      throw UsageError("--max-cycle only applies to afrc methods");
    }
    if (CycleLengthOf(*method) != *max_cycle) {
      throw UsageError("--max-cycle " + std::to_string(*max_cycle) +
                       " contradicts method '" + name + "'");
    }
  }
  return *method;
}

Json MethodJson(CurvatureMethod m) { return std::string(MethodName(m)); }

void AddCommon(CLI::App* sub, Common& common) {
  sub->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("-o,--output", common.output, "Output file (default stdout)");
  sub->add_option("--manifest", common.manifest,
                  "Manifest path (default: <output>.manifest.json)");
  sub->add_option("--threads", common.threads,
                  "Worker threads (default $RICCI_THREADS or 1)")
      ->check(CLI::NonNegativeNumber);
}

std::ifstream OpenInput(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return in;
}

Graph LoadGraph(const std::string& path) {
  std::ifstream in = OpenInput(path);
  return ParseEdgeList(in);
}

Partition LoadLabels(const std::string& path, const Graph& g) {
  std::ifstream in = OpenInput(path);
  Partition labels = ParseLabels(in);
  for (VertexId v : g.vertices()) {
    if (!labels.find_label(v)) {
      throw ParseError(0, "'" + path + "' has no label for vertex " + std::to_string(v));
    }
  }
  return labels;
}

// Restricts a labelling to the vertices of g (extra labelled vertices are
// tolerated).
Partition RestrictLabels(const Partition& labels, const Graph& g) {
  std::vector<VertexId> vertices(g.vertices().begin(), g.vertices().end());
  std::vector<int> out;
  out.reserve(vertices.size());
  for (VertexId v : vertices) out.push_back(labels.label(v));
  return Partition(std::move(vertices), std::move(out));
}

// ---------------------------------------------------------------------------
// generate

struct GenerateArgs {
  std::string model;
  int n = 0;
  int l = 0;
  int k = 0;
  double p = 0.0;
  double q = 0.0;
  std::uint64_t seed = 0;
  std::string labels_out;
  CLI::Option* p_opt = nullptr;
  CLI::Option* n_opt = nullptr;
  CLI::Option* l_opt = nullptr;
  CLI::Option* k_opt = nullptr;
};

RunRecord RunGenerate(const GenerateArgs& a, const Common& common, std::ostream& out) {
  const auto model = ParseModel(Lower(a.model));
  if (!model) throw UsageError("unknown model '" + a.model + "'");
  const bool sized_by_n = *model == GraphModel::kEr ||
                          *model == GraphModel::kBipartiteEr ||
                          *model == GraphModel::kHbg;
  if (sized_by_n && a.n_opt->count() == 0) {
    throw UsageError(std::string(ModelName(*model)) + " needs -n");
  }
  if (!sized_by_n && (a.l_opt->count() == 0 || a.k_opt->count() == 0)) {
    throw UsageError(std::string(ModelName(*model)) + " needs -l and -k");
  }
  if (a.p_opt->count() == 0) throw UsageError("missing -p");

  ModelParams params;
  params.model = *model;
  params.n = a.n;
  params.l = a.l;
  params.k = a.k;
  params.p = a.p;
  params.q = a.q;
  params.seed = a.seed;
  GeneratedGraph gen;
  try {
    gen = Generate(params);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }

  RunRecord record;
  record.command = "generate";
  record.parameters = {{"model", ModelName(*model)}, {"n", a.n}, {"l", a.l},
                       {"k", a.k}, {"p", a.p}, {"q", a.q}};
  record.seeds = {a.seed};

  Output edges(common.output, out);
  WriteEdgeList(gen.graph, edges.stream());
  edges.Commit();
  if (!common.output.empty()) record.outputs.push_back(common.output);

  std::string labels_path = a.labels_out;
  if (labels_path.empty() && !common.output.empty() && gen.truth) {
    labels_path = common.output + ".labels";
  }
  if (!labels_path.empty()) {
    if (!gen.truth) throw UsageError(std::string(ModelName(*model)) + " has no planted labels");
    Output labels(labels_path, out);
    WriteLabels(*gen.truth, labels.stream());
    labels.Commit();
    record.outputs.push_back(labels_path);
  }
  record.results = {{"vertices", gen.graph.num_vertices()},
                    {"edges", gen.graph.num_edges()}};
  return record;
}

// ---------------------------------------------------------------------------
// curvature

struct CurvatureArgs {
  std::string graph;
  std::string method;
  std::optional<int> max_cycle;
};

RunRecord RunCurvature(const CurvatureArgs& a, const Common& common, std::ostream& out) {
  const CurvatureMethod method = ResolveMethod(a.method, a.max_cycle);
  const Graph g = LoadGraph(a.graph);
  const CurvatureVector cv = ComputeCurvature(g, method, common.resolved_threads());

  Output o(common.output, out);
  if (common.json()) {
    WriteCurvatureJson(cv, o.stream());
  } else {
    WriteCurvatureCsv(cv, o.stream());
  }
  o.Commit();

  RunRecord record;
  record.command = "curvature";
  record.parameters = {{"method", MethodJson(method)}, {"format", common.format}};
  record.inputs = {a.graph};
  if (!common.output.empty()) record.outputs = {common.output};
  record.results = {{"edges", cv.size()}};
  return record;
}

// ---------------------------------------------------------------------------
// gap

struct GapArgs {
  std::string graph;
  std::string labels;
  std::string method;
  std::optional<int> max_cycle;
};

RunRecord RunGap(const GapArgs& a, const Common& common, std::ostream& out) {
  const CurvatureMethod method = ResolveMethod(a.method, a.max_cycle);
  const Graph g = LoadGraph(a.graph);
  const Partition labels = LoadLabels(a.labels, g);
  const CurvatureVector cv = ComputeCurvature(g, method, common.resolved_threads());
  const GapReport r = CurvatureGap(cv, labels);

  Output o(common.output, out);
  if (common.json()) {
    Json j;
    j["method"] = MethodJson(method);
    j["kappa_within"] = RoundForOutput(r.kappa_within);
    j["kappa_between"] = RoundForOutput(r.kappa_between);
    j["sigma_within"] = RoundForOutput(r.sigma_within);
    j["sigma_between"] = RoundForOutput(r.sigma_between);
    j["pooled_sigma"] = RoundForOutput(r.pooled_sigma);
    j["gap"] = RoundForOutput(r.gap);
    j["within_count"] = r.within_count;
    j["between_count"] = r.between_count;
    o.stream() << j.dump(2) << '\n';
  } else {
    o.stream() << "method,kappa_within,kappa_between,sigma_within,sigma_between,"
                  "pooled_sigma,gap,within_count,between_count\n"
               << MethodName(method) << ',' << FormatReal(r.kappa_within) << ','
               << FormatReal(r.kappa_between) << ',' << FormatReal(r.sigma_within)
               << ',' << FormatReal(r.sigma_between) << ','
               << FormatReal(r.pooled_sigma) << ',' << FormatReal(r.gap) << ','
               << r.within_count << ',' << r.between_count << '\n';
  }
  o.Commit();

  RunRecord record;
  record.command = "gap";
  record.parameters = {{"method", MethodJson(method)}, {"format", common.format}};
  record.inputs = {a.graph, a.labels};
  if (!common.output.empty()) record.outputs = {common.output};
  record.results = {{"gap", RoundForOutput(r.gap)}};
  return record;
}

// ---------------------------------------------------------------------------
// correlate

struct CorrelateArgs {
  std::string graph;
  std::string method_a;
  std::string method_b;
  std::optional<int> max_cycle;
};

RunRecord RunCorrelate(const CorrelateArgs& a, const Common& common, std::ostream& out) {
  const CurvatureMethod ma = ResolveMethod(a.method_a, a.max_cycle);
  const CurvatureMethod mb = ResolveMethod(a.method_b, a.max_cycle);
  const Graph g = LoadGraph(a.graph);
  const int threads = common.resolved_threads();
  const double r = Pearson(ComputeCurvature(g, ma, threads), ComputeCurvature(g, mb, threads));

  Output o(common.output, out);
  if (common.json()) {
    Json j;
    j["method_a"] = MethodJson(ma);
    j["method_b"] = MethodJson(mb);
    j["edges"] = g.num_edges();
    j["pearson"] = RoundForOutput(r);
    o.stream() << j.dump(2) << '\n';
  } else {
    o.stream() << "method_a,method_b,edges,pearson\n"
               << MethodName(ma) << ',' << MethodName(mb) << ',' << g.num_edges()
               << ',' << FormatReal(r) << '\n';
  }
  o.Commit();

  RunRecord record;
  record.command = "correlate";
  record.parameters = {{"method_a", MethodJson(ma)},
                       {"method_b", MethodJson(mb)},
                       {"format", common.format}};
  record.inputs = {a.graph};
  if (!common.output.empty()) record.outputs = {common.output};
  record.results = {{"pearson", RoundForOutput(r)}};
  return record;
}

// ---------------------------------------------------------------------------
// detect

struct DetectArgs {
  std::string graph;
  std::string method;
  std::optional<int> max_cycle;
  std::string direction = "auto";
  std::string threshold = "auto";
  std::uint64_t seed = 0;
  std::string labels;
  std::optional<std::size_t> max_deletions;
  std::string partition_out;
};

RunRecord RunDetect(const DetectArgs& a, const Common& common, std::ostream& out) {
  DetectionConfig cfg;
  cfg.method = ResolveMethod(a.method, a.max_cycle);
  if (Lower(a.direction) == "auto") {
    cfg.direction = DefaultDirection(cfg.method);
  } else {
    const auto d = ParseDirection(Lower(a.direction));
    if (!d) throw UsageError("unknown direction '" + a.direction + "'");
    cfg.direction = *d;
  }
  if (Lower(a.threshold) != "auto") {
    std::size_t used = 0;
    double t = 0.0;
    try {
      t = std::stod(a.threshold, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != a.threshold.size()) {
      throw UsageError("--threshold must be 'auto' or a number, got '" + a.threshold + "'");
    }
    cfg.threshold = t;
  }
  cfg.seed = a.seed;
  cfg.max_deletions = a.max_deletions;
  cfg.threads = common.resolved_threads();

  const Graph g = LoadGraph(a.graph);
  std::optional<Partition> truth;
  if (!a.labels.empty()) truth = RestrictLabels(LoadLabels(a.labels, g), g);
  const DetectionResult r = DetectCommunities(g, cfg);
  std::optional<double> accuracy;
  if (truth) accuracy = Accuracy(r.partition, *truth);

  Output o(common.output, out);
  if (common.json()) {
    WriteDetectionJson(r, o.stream(), accuracy);
  } else {
    std::ostream& s = o.stream();
    s << "# method=" << MethodName(cfg.method)
      << " direction=" << DirectionName(cfg.direction)
      << " threshold=" << FormatReal(r.threshold_used)
      << " iterations=" << r.iterations
      << " communities=" << r.partition.num_communities();
    if (accuracy) s << " accuracy=" << FormatReal(*accuracy);
    s << "\nvertex,label\n";
    for (std::size_t i = 0; i < r.partition.size(); ++i) {
      s << r.partition.vertices()[i] << ',' << r.partition.labels()[i] << '\n';
    }
  }
  o.Commit();

  RunRecord record;
  record.command = "detect";
  record.parameters = {{"method", MethodJson(cfg.method)},
                       {"direction", DirectionName(cfg.direction)},
                       {"threshold", a.threshold},
                       {"format", common.format}};
  if (a.max_deletions) record.parameters["max_deletions"] = *a.max_deletions;
  record.seeds = {a.seed};
  record.inputs = {a.graph};
  if (!a.labels.empty()) record.inputs.push_back(a.labels);
  if (!common.output.empty()) record.outputs = {common.output};
  if (!a.partition_out.empty()) {
    Output p(a.partition_out, out);
    WriteLabels(r.partition, p.stream());
    p.Commit();
    record.outputs.push_back(a.partition_out);
  }
  record.results = {{"threshold", RoundForOutput(r.threshold_used)},
                    {"iterations", r.iterations},
                    {"communities", r.partition.num_communities()},
                    {"deletion_loop_seconds", r.wall_time.count()}};
  if (accuracy) record.results["accuracy"] = RoundForOutput(*accuracy);
  return record;
}

// ---------------------------------------------------------------------------
// hist

struct HistArgs {
  std::string graph;
  std::string method;
  std::optional<int> max_cycle;
  int bins = 20;
  std::string labels;
};

RunRecord RunHist(const HistArgs& a, const Common& common, std::ostream& out) {
  const CurvatureMethod method = ResolveMethod(a.method, a.max_cycle);
  const Graph g = LoadGraph(a.graph);
  std::optional<Partition> labels;
  if (!a.labels.empty()) labels = LoadLabels(a.labels, g);
  const CurvatureVector cv = ComputeCurvature(g, method, common.resolved_threads());
  if (cv.values.empty()) throw InsufficientDataError("graph has no edges");

  const auto [lo_it, hi_it] = std::minmax_element(cv.values.begin(), cv.values.end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  const auto all = Histogram(cv.values, a.bins, lo, hi);
  std::vector<HistogramBin> within;
  std::vector<HistogramBin> between;
  if (labels) {
    std::vector<double> w;
    std::vector<double> b;
    for (std::size_t i = 0; i < cv.size(); ++i) {
      const Edge& e = cv.edges[i];
      (labels->label(e.u) == labels->label(e.v) ? w : b).push_back(cv.values[i]);
    }
    // Empty sides still get zero rows so the columns line up.
    auto split = [&](const std::vector<double>& v) {
      if (!v.empty()) return Histogram(v, a.bins, lo, hi);
      auto zero = all;
      for (auto& bin : zero) bin.count = 0;
      return zero;
    };
    within = split(w);
    between = split(b);
  }
  const double width = all.size() > 1 ? all[1].lower - all[0].lower
                                      : (hi > lo ? hi - lo : 1.0);

  Output o(common.output, out);
  if (common.json()) {
    Json j;
    j["method"] = MethodJson(method);
    auto rows = Json::array();
    for (std::size_t i = 0; i < all.size(); ++i) {
      Json row;
      row["lower"] = RoundForOutput(all[i].lower);
      row["upper"] = RoundForOutput(i + 1 < all.size() ? all[i + 1].lower : hi > lo ? hi : lo + width);
      row["count"] = all[i].count;
      if (labels) {
        row["within"] = within[i].count;
        row["between"] = between[i].count;
      }
      rows.push_back(std::move(row));
    }
    j["bins"] = std::move(rows);
    o.stream() << j.dump(2) << '\n';
  } else {
    std::ostream& s = o.stream();
    s << "# method=" << MethodName(method) << '\n';
    s << (labels ? "lower,upper,count,within,between\n" : "lower,upper,count\n");
    for (std::size_t i = 0; i < all.size(); ++i) {
      const double upper = i + 1 < all.size() ? all[i + 1].lower : hi > lo ? hi : lo + width;
      s << FormatReal(all[i].lower) << ',' << FormatReal(upper) << ',' << all[i].count;
      if (labels) s << ',' << within[i].count << ',' << between[i].count;
      s << '\n';
    }
  }
  o.Commit();

  RunRecord record;
  record.command = "hist";
  record.parameters = {{"method", MethodJson(method)},
                       {"bins", a.bins},
                       {"format", common.format}};
  record.inputs = {a.graph};
  if (labels) record.inputs.push_back(a.labels);
  if (!common.output.empty()) record.outputs = {common.output};
  return record;
}

// ---------------------------------------------------------------------------

void ReportError(std::ostream& err, bool json, int code, const std::string& kind,
                 const std::string& message, std::size_t line = 0) {
  if (json) {
    Json j;
    j["error"] = {{"exit_code", code}, {"kind", kind}, {"message", message}};
    if (line > 0) j["error"]["line"] = line;
    err << j.dump() << '\n';
  } else {
    err << "ricci: " << message << '\n';
  }
}

bool WantsJsonErrors(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--error-format=json") return true;
    if (args[i] == "--error-format" && i + 1 < args.size() && args[i + 1] == "json") {
      return true;
    }
  }
  return false;
}

std::vector<std::string> ReadReplayArgs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, "'" + path + "' is not a manifest: " + e.what());
  }
  if (!j.contains("argv") || !j["argv"].is_array()) {
    throw ParseError(0, "'" + path + "' has no argv array");
  }
  auto argv = j["argv"].get<std::vector<std::string>>();
  if (!argv.empty() && argv.front() == "replay") {
    throw UsageError("a replay manifest cannot replay another manifest");
  }
  return argv;
}

}  // namespace

std::string ManifestPath(const std::string& output) {
  return output + ".manifest.json";
}

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  const bool json_errors = WantsJsonErrors(args);

  CLI::App app{"Discrete Ricci curvature of graphs and curvature-based community detection",
               "ricci"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", RICCI_VERSION);
  std::string error_format = "text";
  app.add_option("--error-format", error_format, "Diagnostics as text or json")
      ->check(CLI::IsMember({"text", "json"}));

  Common common;

  GenerateArgs gen;
  CLI::App* generate = app.add_subcommand("generate", "Sample a random graph model");
  generate->add_option("model", gen.model, "er, bg, sbm, tsbm or hbg")->required();
  gen.n_opt = generate->add_option("-n", gen.n, "Vertices (er), side size (bg, hbg)");
  gen.l_opt = generate->add_option("-l", gen.l, "Number of communities (sbm, tsbm)");
  gen.k_opt = generate->add_option("-k", gen.k, "Community size (sbm, tsbm)");
  gen.p_opt = generate->add_option("-p", gen.p, "Edge probability (within communities)");
  generate->add_option("-q", gen.q, "Edge probability between communities");
  generate->add_option("--seed", gen.seed, "Random seed");
  generate->add_option("--labels-out", gen.labels_out,
                       "Planted labels file (default <output>.labels)");
  AddCommon(generate, common);

  CurvatureArgs curv;
  CLI::App* curvature = app.add_subcommand("curvature", "Per-edge curvature values");
  curvature->add_option("graph", curv.graph, "Edge list")->required();
  curvature->add_option("-m,--method", curv.method, "frc, afrc, afrc3..5 or orc")->required();
  curvature->add_option("--max-cycle", curv.max_cycle, "Longest cycle for afrc")
      ->check(CLI::Range(3, 5));
  AddCommon(curvature, common);

  GapArgs gap_args;
  CLI::App* gap = app.add_subcommand("gap", "Within/between curvature gap");
  gap->add_option("graph", gap_args.graph, "Edge list")->required();
  gap->add_option("--labels", gap_args.labels, "Ground-truth labels")->required();
  gap->add_option("-m,--method", gap_args.method, "Curvature method")->required();
  gap->add_option("--max-cycle", gap_args.max_cycle, "Longest cycle for afrc")
      ->check(CLI::Range(3, 5));
  AddCommon(gap, common);

  CorrelateArgs corr;
  CLI::App* correlate = app.add_subcommand("correlate", "Pearson correlation of two curvatures");
  correlate->add_option("graph", corr.graph, "Edge list")->required();
  correlate->add_option("--method-a", corr.method_a, "First method")->required();
  correlate->add_option("--method-b", corr.method_b, "Second method")->required();
  correlate->add_option("--max-cycle", corr.max_cycle, "Longest cycle for afrc")
      ->check(CLI::Range(3, 5));
  AddCommon(correlate, common);

  DetectArgs det;
  CLI::App* detect = app.add_subcommand("detect", "Community detection by edge deletion");
  detect->add_option("graph", det.graph, "Edge list")->required();
  detect->add_option("-m,--method", det.method, "Curvature method")->required();
  detect->add_option("--max-cycle", det.max_cycle, "Longest cycle for afrc")
      ->check(CLI::Range(3, 5));
  detect->add_option("--direction", det.direction, "min, max or auto");
  detect->add_option("--threshold", det.threshold, "auto or a number");
  detect->add_option("--seed", det.seed, "Tie-break and mixture seed");
  detect->add_option("--labels", det.labels, "Ground truth; adds accuracy");
  detect->add_option("--max-deletions", det.max_deletions, "Cap on deletions");
  detect->add_option("--partition", det.partition_out, "Write 'vertex label' lines here");
  AddCommon(detect, common);

  HistArgs hist_args;
  CLI::App* hist = app.add_subcommand("hist", "Curvature histogram");
  hist->add_option("graph", hist_args.graph, "Edge list")->required();
  hist->add_option("-m,--method", hist_args.method, "Curvature method")->required();
  hist->add_option("--max-cycle", hist_args.max_cycle, "Longest cycle for afrc")
      ->check(CLI::Range(3, 5));
  hist->add_option("--bins", hist_args.bins, "Number of bins")->check(CLI::PositiveNumber);
  hist->add_option("--labels", hist_args.labels, "Split counts into within/between");
  AddCommon(hist, common);

  std::string replay_path;
  CLI::App* replay = app.add_subcommand("replay", "Re-run the command recorded in a manifest");
  replay->add_option("manifest", replay_path, "Manifest file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      std::ostringstream ignored;
      app.exit(e, out, ignored);
      return kExitOk;
    }
    ReportError(err, json_errors, kExitUsage, "usage", e.what());
    return kExitUsage;
  }

  try {
    if (replay->parsed()) {
      return Run(ReadReplayArgs(replay_path), out, err);
    }
    const auto start = Clock::now();
    RunRecord record;
    if (generate->parsed()) {
      record = RunGenerate(gen, common, out);
    } else if (curvature->parsed()) {
      record = RunCurvature(curv, common, out);
    } else if (gap->parsed()) {
      record = RunGap(gap_args, common, out);
    } else if (correlate->parsed()) {
      record = RunCorrelate(corr, common, out);
    } else if (detect->parsed()) {
      record = RunDetect(det, common, out);
    } else {
      record = RunHist(hist_args, common, out);
    }
    const std::chrono::duration<double> elapsed = Clock::now() - start;
    WriteManifest(common, args, std::move(record), elapsed.count());
    return kExitOk;
  } catch (const UsageError& e) {
    ReportError(err, json_errors, kExitUsage, "usage", e.what());
    return kExitUsage;
  } catch (const ParseError& e) {
    ReportError(err, json_errors, kExitData, "parse", e.what(), e.line());
    return kExitData;
  } catch (const IoError& e) {
    ReportError(err, json_errors, kExitData, "io", e.what());
    return kExitData;
  } catch (const DegenerateGapError& e) {
    ReportError(err, json_errors, kExitData, "degenerate", e.what());
    return kExitData;
  } catch (const InsufficientDataError& e) {
    ReportError(err, json_errors, kExitData, "insufficient_data", e.what());
    return kExitData;
  } catch (const DomainError& e) {
    ReportError(err, json_errors, kExitData, "domain", e.what());
    return kExitData;
  } catch (const ContractViolation& e) {
    ReportError(err, json_errors, kExitData, "invalid_input", e.what());
    return kExitData;
  }
}

}  // namespace ricci::cli
