#include "commands.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <unordered_map>

#include <CLI11.hpp>
#include <json.hpp>

#include "dgsp/baseline.hpp"
#include "dgsp/error.hpp"
#include "dgsp/eval.hpp"
#include "dgsp/gen.hpp"
#include "dgsp/graph.hpp"
#include "dgsp/miner.hpp"
#include "dgsp/ranked.hpp"
#include "dgsp/sampler.hpp"
#include "dgsp/weights.hpp"

namespace dgsp::cli {
namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

constexpr const char* kVersion = DGSP_VERSION;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string fnv1a64(std::string_view bytes) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

// Writes to `path`, or stdout when it is empty.
void emit(const std::string& path, const std::function<void(std::ostream&)>& write) {
  if (path.empty()) {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw validation_error("cannot write " + path);
  write(out);
  if (!out) throw validation_error("write failed: " + path);
}

void write_manifest(const std::string& path, const json& manifest) {
  emit(path, [&](std::ostream& out) { out << manifest.dump(2) << '\n'; });
}

std::string manifest_path_for(const std::string& result_path) {
  return result_path + ".manifest.json";
}

uint64_t rejection_budget() {
  const char* env = std::getenv("DGSP_REJECTION_BUDGET");
  if (env == nullptr || *env == '\0') return kDefaultRejectionBudget;
  std::string_view text(env);
  uint64_t value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || value == 0) {
    throw validation_error("DGSP_REJECTION_BUDGET must be a positive integer, got '" +
                           std::string(text) + "'");
  }
  return value;
}

struct LoadedGraph {
  DatabaseGraph graph;
  std::string digest;
};

LoadedGraph load_with_digest(const std::string& path) {
  const std::string text = read_file(path);
  return {parse_graph(text), fnv1a64(text)};
}

// ---- generate --------------------------------------------------------------

struct GenerateFlags {
  uint32_t vertices = 0;
  uint64_t edges = 0;
  std::string db = "constant:20";
  uint32_t items = 0;
  double avg_items = 5.0;
  std::string shape = "random-dag";
  uint64_t seed = 0;
  std::string output;
};

void add_generate(CLI::App& app, GenerateFlags& f) {
  app.add_option("--vertices", f.vertices, "Number of vertices")->required();
  app.add_option("--edges", f.edges, "Number of directed edges")->required();
  app.add_option("--db", f.db, "constant:N or degree-linear:BASE,SLOPE")->capture_default_str();
  app.add_option("--items", f.items, "Item universe size")->required();
  app.add_option("--avg-items", f.avg_items, "Mean transaction size")->capture_default_str();
  app.add_option("--shape", f.shape, "random-dag or random-digraph")->capture_default_str();
  app.add_option("--seed", f.seed, "Random seed")->capture_default_str();
  app.add_option("-o,--output", f.output, "Graph file (stdout when omitted)");
}

int run_generate(const GenerateFlags& f) {
  GenConfig config;
  config.vertex_count = f.vertices;
  config.edge_count = f.edges;
  config.item_universe_size = f.items;
  config.avg_items_per_transaction = f.avg_items;
  config.db_size = parse_db_size_rule(f.db);
  config.shape = parse_graph_shape(f.shape);
  config.seed = f.seed;

  const auto start = Clock::now();
  const DatabaseGraph graph = generate(config);
  const std::string text = graph_to_json(graph);
  emit(f.output, [&](std::ostream& out) { out << text; });

  if (!f.output.empty()) {
    json manifest{
        {"command", "generate"},
        {"tool_version", kVersion},
        {"flags",
         {{"vertices", f.vertices},
          {"edges", f.edges},
          {"db", f.db},
          {"items", f.items},
          {"avg_items", f.avg_items},
          {"shape", f.shape},
          {"seed", f.seed}}},
        {"seed", f.seed},
        {"result", f.output},
        {"graph_digest", fnv1a64(text)},
        {"transactions", graph.transaction_count()},
        {"timings_ms", {{"total", elapsed_ms(start)}}},
    };
    write_manifest(manifest_path_for(f.output), manifest);
  }
  return kExitOk;
}

// ---- mine ------------------------------------------------------------------

struct MineFlags {
  std::string mode;
  std::string graph;
  uint32_t l = 0;
  size_t k = 10;
  size_t samples = 0;
  std::string weights = "walk-count";
  uint64_t seed = 0;
  unsigned workers = 1;
  std::string format = "json";
  std::string output;
  std::string manifest;
  std::string dump_samples;
  size_t max_width = 0;
};

void add_mine(CLI::App& app, MineFlags& f) {
  app.add_option("--mode", f.mode, "exact or sample")
      ->required()
      ->check(CLI::IsMember({"exact", "sample"}));
  app.add_option("--graph", f.graph, "Graph file")->required();
  app.add_option("-l,--length", f.l, "Path length l (>= 1)")->required();
  app.add_option("-k", f.k, "Number of patterns")->capture_default_str();
  app.add_option("--samples", f.samples, "Sample size m (sample mode)");
  app.add_option("--weights", f.weights, "walk-count or paper-literal")
      ->check(CLI::IsMember({"walk-count", "paper-literal"}))
      ->capture_default_str();
  app.add_option("--seed", f.seed, "Random seed")->capture_default_str();
  app.add_option("--workers", f.workers, "Sampler threads")->capture_default_str();
  app.add_option("--format", f.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("-o,--output", f.output, "Result file (stdout when omitted)");
  app.add_option("--manifest", f.manifest,
                 "Manifest file (default: <output>.manifest.json; none for stdout)");
  app.add_option("--dump-samples", f.dump_samples, "Write the sample batch as JSON lines");
  app.add_option("--max-width", f.max_width, "Largest itemset per position (0 = unlimited)")
      ->capture_default_str();
}

int run_mine(const MineFlags& f) {
  const bool sampled = f.mode == "sample";
  if (f.l == 0) throw validation_error("-l must be at least 1");
  if (f.k == 0) throw validation_error("-k must be at least 1");
  if (sampled && f.samples == 0) throw validation_error("--mode sample requires --samples >= 1");
  if (f.workers == 0) throw validation_error("--workers must be at least 1");

  const LoadedGraph loaded = load_with_digest(f.graph);
  const DatabaseGraph& graph = loaded.graph;

  const auto start = Clock::now();
  double sampling_ms = 0.0;
  double mining_ms = 0.0;
  uint64_t rejections = 0;
  RankedPatterns ranked;

  if (sampled) {
    BatchOptions options;
    options.mode = parse_weight_mode(f.weights);
    options.seed = f.seed;
    options.workers = f.workers;
    options.rejection_budget = rejection_budget();

    const auto t0 = Clock::now();
    const SampleBatch batch = sample_batch(graph, f.l, f.samples, options);
    sampling_ms = elapsed_ms(t0);
    rejections = batch.rejections();

    if (!f.dump_samples.empty()) {
      emit(f.dump_samples, [&](std::ostream& out) { write_batch_jsonl(graph, batch, out); });
    }

    const auto t1 = Clock::now();
    ranked = mine_topk(graph, batch, MineOptions{.k = f.k, .max_itemset_width = f.max_width});
    mining_ms = elapsed_ms(t1);
  } else {
    const auto t1 = Clock::now();
    ranked = exact_topk(graph, f.l, f.k, ExactOptions{.max_itemset_width = f.max_width});
    mining_ms = elapsed_ms(t1);
  }

  const auto rows = to_rows(graph, ranked);
  emit(f.output, [&](std::ostream& out) {
    if (f.format == "csv") {
      write_ranked_csv(rows, out);
    } else {
      write_ranked_json(rows, out);
    }
  });

  std::string manifest_path = f.manifest;
  if (manifest_path.empty() && !f.output.empty()) manifest_path = manifest_path_for(f.output);
  if (!manifest_path.empty()) {
    json flags{{"mode", f.mode},     {"graph", f.graph},     {"l", f.l},
               {"k", f.k},           {"format", f.format},   {"max_width", f.max_width}};
    if (sampled) {
      flags["samples"] = f.samples;
      flags["weights"] = f.weights;
      flags["seed"] = f.seed;
      flags["workers"] = f.workers;
    }
    json manifest{
        {"command", "mine"},
        {"tool_version", kVersion},
        {"flags", flags},
        {"seed", sampled ? json(f.seed) : json(nullptr)},
        {"graph_digest", loaded.digest},
        {"score_kind", to_string(ranked.kind)},
        {"l", f.l},
        {"m", sampled ? json(f.samples) : json(nullptr)},
        {"total", ranked.total},
        {"rejections", rejections},
        {"result", f.output.empty() ? json(nullptr) : json(f.output)},
        {"timings_ms",
         {{"sampling", sampling_ms}, {"mining", mining_ms}, {"total", elapsed_ms(start)}}},
    };
    write_manifest(manifest_path, manifest);
  }
  return kExitOk;
}

// ---- eval ------------------------------------------------------------------

struct EvalFlags {
  std::string truth;
  std::string produced;
  std::vector<size_t> ks;
  std::string output;
};

void add_eval(CLI::App& app, EvalFlags& f) {
  app.add_option("--truth", f.truth, "Ground-truth ranked file")->required();
  app.add_option("--produced", f.produced, "Produced ranked file")->required();
  app.add_option("-k", f.ks, "Cutoffs, e.g. -k 50,100,200")->required()->delimiter(',');
  app.add_option("-o,--output", f.output, "Metrics file (stdout when omitted)");
}

json produced_context(const std::string& produced_path) {
  json ctx{{"m", nullptr}, {"l", nullptr}, {"seed", nullptr}};
  const std::string path = manifest_path_for(produced_path);
  if (!std::filesystem::exists(path)) return ctx;
  json manifest;
  try {
    manifest = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw parse_error(path + ": " + e.what());
  }
  for (const char* key : {"m", "l", "seed"}) {
    if (manifest.contains(key)) ctx[key] = manifest[key];
  }
  return ctx;
}

int run_eval(const EvalFlags& f) {
  const auto truth = read_ranked_file(f.truth);
  const auto produced = read_ranked_file(f.produced);
  const json ctx = produced_context(f.produced);

  std::vector<std::string> truth_keys;
  std::vector<std::string> produced_keys;
  for (const auto& r : truth) truth_keys.push_back(r.pattern);
  std::unordered_map<std::string, std::optional<double>> produced_freq;
  for (const auto& r : produced) {
    produced_keys.push_back(r.pattern);
    produced_freq.emplace(r.pattern, r.frequency);
  }

  std::vector<json> lines;
  for (size_t k : f.ks) {
    if (k == 0) throw domain_error("k must be at least 1");
    if (k > truth.size()) {
      throw domain_error("k=" + std::to_string(k) + " exceeds the truth list length " +
                         std::to_string(truth.size()));
    }
    if (k > produced.size()) {
      throw domain_error("k=" + std::to_string(k) + " exceeds the produced list length " +
                         std::to_string(produced.size()));
    }

    json line{{"k", k}};
    bool have_freq = true;
    std::vector<double> exact;
    std::vector<std::optional<double>> estimated;
    for (size_t i = 0; i < k && have_freq; ++i) {
      if (!truth[i].frequency) {
        have_freq = false;
        break;
      }
      exact.push_back(*truth[i].frequency);
      auto it = produced_freq.find(truth[i].pattern);
      if (it == produced_freq.end()) {
        estimated.push_back(std::nullopt);
      } else if (it->second) {
        estimated.push_back(it->second);
      } else {
        have_freq = false;
      }
    }
    if (have_freq) {
      const MeanError me = mean_estimation_error(exact, estimated, k);
      line["ME"] = me.value;
      line["missing"] = me.missing;
    } else {
      line["ME"] = nullptr;
      line["missing"] = nullptr;
    }
    line["AP"] = average_precision(produced_keys, truth_keys, k);
    line["RS"] = ranking_similarity(produced_keys, truth_keys, k);
    line["produced_len"] = produced.size();
    line["m"] = ctx["m"];
    line["l"] = ctx["l"];
    line["seed"] = ctx["seed"];
    lines.push_back(std::move(line));
  }

  emit(f.output, [&](std::ostream& out) {
    for (const auto& line : lines) out << line.dump() << '\n';
  });
  return kExitOk;
}

// ---- bound -----------------------------------------------------------------

struct BoundFlags {
  double epsilon = 0.0;
  double delta = 0.0;
  std::optional<uint64_t> items;
  std::string graph;
  uint32_t l = 0;
  std::optional<double> a;
  std::string samples_file;
  std::optional<double> pattern_count;
};

void add_bound(CLI::App& app, BoundFlags& f) {
  app.add_option("--epsilon", f.epsilon, "Relative error, in (0,1)")->required();
  app.add_option("--delta", f.delta, "Failure probability, in (0,1)")->required();
  auto* items = app.add_option("--items", f.items, "Item universe size |I|");
  auto* graph = app.add_option("--graph", f.graph, "Graph file supplying |I|");
  items->excludes(graph);
  app.add_option("-l,--length", f.l, "Path length l (>= 1)")->required();
  auto* a = app.add_option("--a", f.a, "Mean-to-max path weight ratio, in (0,1]");
  auto* samples = app.add_option("--samples-file", f.samples_file,
                                 "Sample dump (JSON lines) to estimate a from");
  a->excludes(samples);
  app.add_option("--pattern-count", f.pattern_count, "|Q_l|, enables the union bound");
}

json sample_count(double bound) {
  const double c = std::ceil(bound);
  if (c < 18446744073709551616.0) return json(static_cast<uint64_t>(c));
  return json(c);
}

int run_bound(const BoundFlags& f) {
  BoundInputs in;
  in.epsilon = f.epsilon;
  in.delta = f.delta;
  in.l = f.l;
  if (f.l == 0) throw domain_error("-l must be at least 1");

  if (f.items) {
    in.item_count = *f.items;
  } else if (!f.graph.empty()) {
    in.item_count = load_with_digest(f.graph).graph.item_count();
  } else {
    throw validation_error("one of --items or --graph is required");
  }
  if (in.item_count == 0) throw domain_error("item count must be at least 1");

  std::string a_source = "default";
  if (f.a) {
    in.a = *f.a;
    a_source = "flag";
  } else if (!f.samples_file.empty()) {
    std::ifstream file(f.samples_file);
    if (!file) throw parse_error("cannot read " + f.samples_file);
    in.a = estimate_a(read_batch_weights(file));
    a_source = "samples";
  }
  in.pattern_count = f.pattern_count;
  validate(in);
  if (in.pattern_count && !(*in.pattern_count >= 1.0)) {
    throw domain_error("--pattern-count must be at least 1");
  }

  const double item_bound = item_bound_sample_size(in);
  json report{
      {"epsilon", in.epsilon},
      {"delta", in.delta},
      {"items", in.item_count},
      {"l", in.l},
      {"a", in.a},
      {"a_source", a_source},
      {"item_bound", item_bound},
      {"item_bound_samples", sample_count(item_bound)},
  };
  if (in.pattern_count) {
    const double union_bound = union_bound_sample_size(in);
    report["pattern_count"] = *in.pattern_count;
    report["union_bound"] = union_bound;
    report["union_bound_samples"] = sample_count(union_bound);
  } else {
    report["pattern_count"] = nullptr;
    report["union_bound"] = nullptr;
    report["union_bound_samples"] = nullptr;
  }
  std::cout << report.dump(2) << '\n';
  return kExitOk;
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case Error::Kind::kNoPath:
      return kExitNoPath;
    case Error::Kind::kRejectionBudget:
      return kExitBudget;
    case Error::Kind::kParse:
    case Error::Kind::kValidation:
    case Error::Kind::kDomain:
    case Error::Kind::kOverflow:
      return kExitUsage;
  }
  return kExitInternal;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Top-k sequential pattern mining over database graphs", "dgsp"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  GenerateFlags gen_flags;
  MineFlags mine_flags;
  EvalFlags eval_flags;
  BoundFlags bound_flags;
  auto* gen_cmd = app.add_subcommand("generate", "Write a synthetic database graph");
  auto* mine_cmd = app.add_subcommand("mine", "Exact or sampled top-k mining");
  auto* eval_cmd = app.add_subcommand("eval", "Compare a produced ranking to ground truth");
  auto* bound_cmd = app.add_subcommand("bound", "Sample-size bounds");
  add_generate(*gen_cmd, gen_flags);
  add_mine(*mine_cmd, mine_flags);
  add_eval(*eval_cmd, eval_flags);
  add_bound(*bound_cmd, bound_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (gen_cmd->parsed()) return run_generate(gen_flags);
    if (mine_cmd->parsed()) return run_mine(mine_flags);
    if (eval_cmd->parsed()) return run_eval(eval_flags);
    if (bound_cmd->parsed()) return run_bound(bound_flags);
  } catch (const Error& e) {
    std::cerr << "dgsp: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "dgsp: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace dgsp::cli
