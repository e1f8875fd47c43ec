#include "dgsp/sampler.hpp"

#include <algorithm>
#include <cassert>
#include <exception>
#include <istream>
#include <mutex>
#include <ostream>
#include <string>
#include <thread>

#include <json.hpp>

#include "dgsp/error.hpp"

namespace dgsp {

PathSampler::PathSampler(const DatabaseGraph& graph, uint32_t l, WeightMode mode,
                         uint64_t rejection_budget)
    : PathSampler(graph, compute_weights(graph, l, mode), l, rejection_budget) {}

PathSampler::PathSampler(const DatabaseGraph& graph, WeightTable weights, uint32_t l,
                         uint64_t rejection_budget)
    : graph_(&graph), weights_(std::move(weights)), l_(l), budget_(rejection_budget) {
  if (l < 1) throw domain_error("path length must be at least 1");
  if (weights_.max_depth() < l) throw domain_error("weight table shallower than path length");
  start_cumulative_.reserve(graph.vertex_count());
  uint64_t running = 0;
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    if (__builtin_add_overflow(running, weights_.at(v, l), &running)) {
      throw Error(Error::Kind::kOverflow, "start weights overflow 64 bits");
    }
    start_cumulative_.push_back(running);
  }
  if (running == 0) {
    throw Error(Error::Kind::kNoPath, "no length-" + std::to_string(l) + " path in graph");
  }
}

bool PathSampler::draw_walk(Rng& rng, std::span<VertexId> out) const {
  const uint64_t r = rng.below(start_cumulative_.back());
  const auto start = std::upper_bound(start_cumulative_.begin(), start_cumulative_.end(), r);
  out[0] = static_cast<VertexId>(start - start_cumulative_.begin());

  for (uint32_t step = 1; step <= l_; ++step) {
    const VertexId current = out[step - 1];
    const uint32_t remaining = l_ - step;
    const auto neighbors = graph_->out(current);

    uint64_t total = 0;
    for (VertexId u : neighbors) total += weights_.at(u, remaining);
    // Walk counts satisfy w(v, q+1) = sum of w(u, q) over out-neighbors, so
    // the conditional probabilities already sum to one.
    assert(weights_.mode() != WeightMode::kWalkCount || total == weights_.at(current, remaining + 1));
    if (total == 0) return false;

    uint64_t pick = rng.below(total);
    VertexId next = neighbors.back();
    for (VertexId u : neighbors) {
      const uint64_t w = weights_.at(u, remaining);
      if (pick < w) {
        next = u;
        break;
      }
      pick -= w;
    }
    if (std::find(out.begin(), out.begin() + step, next) != out.begin() + step) return false;
    out[step] = next;
  }
  return true;
}

uint64_t PathSampler::sample(Rng& rng, std::span<VertexId> out) const {
  assert(out.size() == static_cast<size_t>(l_) + 1);
  uint64_t rejected = 0;
  while (!draw_walk(rng, out)) {
    if (++rejected >= budget_) {
      throw Error(Error::Kind::kRejectionBudget,
                  "path sampler rejected " + std::to_string(rejected) +
                      " consecutive walks; the graph is dominated by non-simple walks");
    }
  }
  return rejected;
}

Path PathSampler::sample(Rng& rng) const {
  Path p;
  p.vertices.resize(static_cast<size_t>(l_) + 1);
  sample(rng, p.vertices);
  return p;
}

Path sample_path(const DatabaseGraph& graph, const WeightTable& weights, uint32_t l, Rng& rng,
                 uint64_t rejection_budget) {
  return PathSampler(graph, weights, l, rejection_budget).sample(rng);
}

namespace {

void draw_choices(const DatabaseGraph& graph, std::span<const VertexId> path, Rng& rng,
                  std::span<uint32_t> choices) {
  for (size_t q = 0; q < path.size(); ++q) {
    choices[q] = static_cast<uint32_t>(rng.below(graph.database(path[q]).size()));
  }
}

}  // namespace

SampleRecord sample_transaction_sequence(const DatabaseGraph& graph, const Path& path, Rng& rng) {
  SampleRecord record;
  record.sequence.path = path;
  record.sequence.choices.resize(path.vertices.size());
  draw_choices(graph, path.vertices, rng, record.sequence.choices);
  record.path_weight = path_weight(graph, path.vertices);
  return record;
}

SampleBatch::SampleBatch(uint32_t l, uint64_t seed, WeightMode mode, size_t size)
    : l_(l),
      seed_(seed),
      mode_(mode),
      vertices_(size * (static_cast<size_t>(l) + 1)),
      choices_(size * (static_cast<size_t>(l) + 1)),
      weights_(size) {}

uint64_t SampleBatch::total_weight() const {
  uint64_t total = 0;
  for (uint64_t w : weights_) {
    if (__builtin_add_overflow(total, w, &total)) {
      throw Error(Error::Kind::kOverflow, "batch total weight overflows 64 bits");
    }
  }
  return total;
}

SampleBatch sample_batch(const DatabaseGraph& graph, uint32_t l, size_t m,
                         const BatchOptions& options) {
  if (m == 0) throw domain_error("sample size must be at least 1");
  const PathSampler sampler(graph, l, options.mode, options.rejection_budget);
  SampleBatch batch(l, options.seed, options.mode, m);

  const unsigned workers = std::max(1u, std::min<unsigned>(options.workers, m));
  std::vector<uint64_t> rejections(workers, 0);
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto run = [&](unsigned worker) {
    try {
      for (size_t i = worker; i < m; i += workers) {
        Rng rng = Rng::substream(options.seed, i);
        rejections[worker] += sampler.sample(rng, batch.mutable_path(i));
        draw_choices(graph, batch.path(i), rng, batch.mutable_choices(i));
        batch.set_weight(i, path_weight(graph, batch.path(i)));
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (auto& t : threads) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  uint64_t total_rejections = 0;
  for (uint64_t r : rejections) total_rejections += r;
  batch.set_rejections(total_rejections);
  return batch;
}

void write_batch_jsonl(const DatabaseGraph& graph, const SampleBatch& batch, std::ostream& out) {
  for (size_t i = 0; i < batch.size(); ++i) {
    nlohmann::json path = nlohmann::json::array();
    for (VertexId v : batch.path(i)) path.push_back(graph.vertex_name(v));
    nlohmann::json record{{"path", std::move(path)},
                          {"tids", std::vector<uint32_t>(batch.choices(i).begin(),
                                                         batch.choices(i).end())},
                          {"weight", batch.weight(i)}};
    out << record.dump() << '\n';
  }
}

std::vector<uint64_t> read_batch_weights(std::istream& in) {
  std::vector<uint64_t> weights;
  std::string line;
  size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const auto record = nlohmann::json::parse(line);
      const auto& w = record.at("weight");
      if (!w.is_number_unsigned() || w.get<uint64_t>() == 0) {
        throw parse_error("sample line " + std::to_string(line_number) +
                          ": weight must be a positive integer");
      }
      weights.push_back(w.get<uint64_t>());
    } catch (const nlohmann::json::exception& e) {
      throw parse_error("sample line " + std::to_string(line_number) + ": " + e.what());
    }
  }
  return weights;
}

}  // namespace dgsp
