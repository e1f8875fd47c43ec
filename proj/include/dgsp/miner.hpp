#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>

#include "dgsp/graph.hpp"
#include "dgsp/pattern.hpp"
#include "dgsp/ranked.hpp"
#include "dgsp/sampler.hpp"
#include "dgsp/vertical_index.hpp"

namespace dgsp {

struct MineOptions {
  size_t k = 10;
  /// Largest itemset per position; 0 = unlimited.
  size_t max_itemset_width = 0;
  /// Skip subtrees whose support falls below the current k-th best.
  bool prune = true;
};

/// Positional pattern growth over a vertical index.
///
/// Patterns are grown position by position; within a position items are
/// appended in increasing id order, so every pattern is visited once. Only
/// items observed at a position in the projected records are candidates.
/// Support is anti-monotone under item addition, which makes the k-th best
/// support a valid pruning bound.
RankedPatterns mine_topk(const VerticalIndex& index, const MineOptions& options);

/// Ranks by weighted support (sum of path weights over containing records);
/// `frequency` carries the ratio estimate support / total weight.
RankedPatterns mine_topk(const DatabaseGraph& graph, const SampleBatch& batch,
                         const MineOptions& options);

/// Weighted-support accumulators for a fixed pattern set. Merging two states
/// built from disjoint shards equals scanning their union.
class EstimatorState {
 public:
  EstimatorState() = default;

  /// Scans `batch` once per pattern.
  static EstimatorState scan(const DatabaseGraph& graph, const SampleBatch& batch,
                             std::span<const Pattern> patterns);
  static EstimatorState scan(const DatabaseGraph& graph, const SampleBatch& batch,
                             std::span<const Pattern> patterns, size_t begin, size_t end);

  void merge(const EstimatorState& other);

  uint64_t total_weight() const { return total_weight_; }
  uint64_t batch_size() const { return batch_size_; }
  /// Throws a domain error for a pattern not in the scanned set.
  uint64_t accumulator(const Pattern& pattern) const;

 private:
  uint64_t total_weight_ = 0;
  uint64_t batch_size_ = 0;
  std::map<Pattern, uint64_t, CanonicalLess> accumulators_;
};

/// With both exact quantities supplied (|P_l| and the sum of M over all
/// paths, which equals |D_l|) returns the unbiased estimate
/// accumulator * |P_l| / (batch_size * sum_M). Otherwise returns the ratio
/// estimate accumulator / total_weight.
double estimate_frequency(const EstimatorState& state, const Pattern& pattern,
                          std::optional<uint64_t> path_count = std::nullopt,
                          std::optional<uint64_t> total_path_weight = std::nullopt);

}  // namespace dgsp
