#pragma once

// Two-step sampling: draw a length-l simple path, then one transaction per
// vertex on it. Each record carries its path weight M (the product of
// database sizes along the path), which is the estimator's correction for
// the non-uniformity of the second step.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "dgsp/baseline.hpp"
#include "dgsp/graph.hpp"
#include "dgsp/rng.hpp"
#include "dgsp/weights.hpp"

namespace dgsp {

inline constexpr uint64_t kDefaultRejectionBudget = 1'000'000;

/// Draws length-l simple paths with probability proportional to the
/// continuation weights, redrawing walks that revisit a vertex.
///
/// In walk-count mode every simple path is equally likely. In paper-literal
/// mode the next-vertex probabilities are renormalized over out-neighbors
/// with nonzero weight, and no uniformity is claimed.
class PathSampler {
 public:
  PathSampler(const DatabaseGraph& graph, uint32_t l, WeightMode mode,
              uint64_t rejection_budget = kDefaultRejectionBudget);
  PathSampler(const DatabaseGraph& graph, WeightTable weights, uint32_t l,
              uint64_t rejection_budget = kDefaultRejectionBudget);

  /// Writes l+1 vertices into `out` and returns the number of rejected walks
  /// before success. Throws kRejectionBudget after `rejection_budget`
  /// consecutive rejections.
  uint64_t sample(Rng& rng, std::span<VertexId> out) const;
  Path sample(Rng& rng) const;

  uint32_t length() const { return l_; }
  const WeightTable& weights() const { return weights_; }

 private:
  bool draw_walk(Rng& rng, std::span<VertexId> out) const;

  const DatabaseGraph* graph_;
  WeightTable weights_;
  uint32_t l_;
  uint64_t budget_;
  std::vector<uint64_t> start_cumulative_;
};

/// Throws kNoPath when no vertex has a positive weight at depth l.
Path sample_path(const DatabaseGraph& graph, const WeightTable& weights, uint32_t l, Rng& rng,
                 uint64_t rejection_budget = kDefaultRejectionBudget);

struct SampleRecord {
  TransactionSequence sequence;
  uint64_t path_weight = 0;
};

/// Uniform independent transaction per position.
SampleRecord sample_transaction_sequence(const DatabaseGraph& graph, const Path& path, Rng& rng);

/// Fixed-size batch of records stored column-wise.
class SampleBatch {
 public:
  SampleBatch() = default;
  SampleBatch(uint32_t l, uint64_t seed, WeightMode mode, size_t size);

  uint32_t length() const { return l_; }
  uint64_t seed() const { return seed_; }
  WeightMode mode() const { return mode_; }
  size_t size() const { return weights_.size(); }
  size_t width() const { return static_cast<size_t>(l_) + 1; }

  std::span<const VertexId> path(size_t i) const { return {vertices_.data() + i * width(), width()}; }
  std::span<const uint32_t> choices(size_t i) const {
    return {choices_.data() + i * width(), width()};
  }
  uint64_t weight(size_t i) const { return weights_[i]; }
  std::span<const uint64_t> weights() const { return weights_; }

  std::span<VertexId> mutable_path(size_t i) { return {vertices_.data() + i * width(), width()}; }
  std::span<uint32_t> mutable_choices(size_t i) { return {choices_.data() + i * width(), width()}; }
  void set_weight(size_t i, uint64_t w) { weights_[i] = w; }

  /// Sum of record weights; throws on overflow.
  uint64_t total_weight() const;

  /// Walks rejected for revisiting a vertex, summed over the batch.
  uint64_t rejections() const { return rejections_; }
  void set_rejections(uint64_t r) { rejections_ = r; }

  bool operator==(const SampleBatch&) const = default;

 private:
  uint32_t l_ = 0;
  uint64_t seed_ = 0;
  WeightMode mode_ = WeightMode::kWalkCount;
  std::vector<VertexId> vertices_;
  std::vector<uint32_t> choices_;
  std::vector<uint64_t> weights_;
  uint64_t rejections_ = 0;
};

struct BatchOptions {
  WeightMode mode = WeightMode::kWalkCount;
  uint64_t seed = 0;
  unsigned workers = 1;
  uint64_t rejection_budget = kDefaultRejectionBudget;
};

/// m records, record i drawn from Rng::substream(seed, i), so the batch is
/// identical for any number of workers. Requires m >= 1.
SampleBatch sample_batch(const DatabaseGraph& graph, uint32_t l, size_t m,
                         const BatchOptions& options = {});

/// One JSON object per line: {"path":[...],"tids":[...],"weight":M}.
void write_batch_jsonl(const DatabaseGraph& graph, const SampleBatch& batch, std::ostream& out);
/// Reads only the "weight" field of each line.
std::vector<uint64_t> read_batch_weights(std::istream& in);

}  // namespace dgsp
