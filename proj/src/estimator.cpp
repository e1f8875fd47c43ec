#include "dgsp/error.hpp"
#include "dgsp/miner.hpp"

namespace dgsp {

EstimatorState EstimatorState::scan(const DatabaseGraph& graph, const SampleBatch& batch,
                                    std::span<const Pattern> patterns) {
  return scan(graph, batch, patterns, 0, batch.size());
}

EstimatorState EstimatorState::scan(const DatabaseGraph& graph, const SampleBatch& batch,
                                    std::span<const Pattern> patterns, size_t begin, size_t end) {
  EstimatorState state;
  for (const auto& p : patterns) {
    if (p.itemsets.size() != batch.width()) {
      throw domain_error("pattern length does not match the batch");
    }
    state.accumulators_.emplace(p, 0);
  }
  end = std::min(end, batch.size());
  for (size_t r = begin; r < end; ++r) {
    const uint64_t w = batch.weight(r);
    state.total_weight_ += w;
    ++state.batch_size_;
    const auto sequence = sequence_itemsets(graph, batch.path(r), batch.choices(r));
    for (auto& [pattern, acc] : state.accumulators_) {
      if (contains(sequence, pattern)) acc += w;
    }
  }
  return state;
}

void EstimatorState::merge(const EstimatorState& other) {
  total_weight_ += other.total_weight_;
  batch_size_ += other.batch_size_;
  for (const auto& [pattern, acc] : other.accumulators_) accumulators_[pattern] += acc;
}

uint64_t EstimatorState::accumulator(const Pattern& pattern) const {
  auto it = accumulators_.find(pattern);
  if (it == accumulators_.end()) throw domain_error("pattern was not scanned");
  return it->second;
}

double estimate_frequency(const EstimatorState& state, const Pattern& pattern,
                          std::optional<uint64_t> path_count,
                          std::optional<uint64_t> total_path_weight) {
  if (state.batch_size() == 0) throw domain_error("estimator has no records");
  const auto acc = static_cast<double>(state.accumulator(pattern));
  if (path_count && total_path_weight) {
    return acc * static_cast<double>(*path_count) /
           (static_cast<double>(state.batch_size()) * static_cast<double>(*total_path_weight));
  }
  return acc / static_cast<double>(state.total_weight());
}

}  // namespace dgsp
