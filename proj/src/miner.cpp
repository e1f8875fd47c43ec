#include "dgsp/miner.hpp"

#include <algorithm>
#include <deque>
#include <queue>

#include "dgsp/error.hpp"
#include "dgsp/kernels.hpp"

namespace dgsp {

std::string_view to_string(ScoreKind kind) {
  switch (kind) {
    case ScoreKind::kExactFrequency:
      return "exact-frequency";
    case ScoreKind::kEstimatedFrequency:
      return "estimated-frequency";
    case ScoreKind::kWeightedSupport:
      return "weighted-support";
  }
  return "unknown";
}

namespace {

struct Candidate {
  Pattern pattern;
  uint64_t support;
};

// Higher support first, then canonical order.
bool ranks_before(const Candidate& a, const Candidate& b) {
  if (a.support != b.support) return a.support > b.support;
  return canonical_compare(a.pattern, b.pattern) < 0;
}

struct RanksBefore {
  bool operator()(const Candidate& a, const Candidate& b) const { return ranks_before(a, b); }
};

class PatternGrowth {
 public:
  PatternGrowth(const VerticalIndex& index, const MineOptions& options)
      : index_(index), options_(options) {
    current_.itemsets.resize(index.position_count());
  }

  std::vector<Candidate> run() {
    grow(0, 0, index_.all_records());
    std::vector<Candidate> out;
    out.reserve(heap_.size());
    while (!heap_.empty()) {
      out.push_back(heap_.top());
      heap_.pop();
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

 private:
  bool full() const { return heap_.size() >= options_.k; }

  std::vector<uint64_t>& buffer(size_t depth) {
    if (buffers_.size() <= depth) buffers_.resize(depth + 1);
    buffers_[depth].resize(index_.word_count());
    return buffers_[depth];
  }

  uint64_t intersect(std::span<uint64_t> dst, std::span<const uint64_t> mask,
                     std::span<const uint64_t> column) const {
    return index_.unit_weights() ? kernels::and_popcount(dst, mask, column)
                                 : kernels::and_weighted_sum(dst, mask, column, index_.weights());
  }

  void offer(uint64_t support) {
    if (full()) {
      const Candidate& worst = heap_.top();
      if (support < worst.support) return;
      if (support == worst.support && canonical_compare(current_, worst.pattern) >= 0) return;
      heap_.pop();
    }
    heap_.push(Candidate{current_, support});
  }

  // Extends the itemset at `position` with items above its current last item.
  // Each accepted extension is either closed (moving to the next position, or
  // emitted at the last one) or extended further in place.
  void grow(size_t position, size_t depth, std::span<const uint64_t> mask) {
    auto& itemset = current_.itemsets[position];
    if (options_.max_itemset_width != 0 && itemset.size() >= options_.max_itemset_width) return;
    const ItemId min_item = itemset.empty() ? 0 : itemset.back() + 1;
    const bool last = position + 1 == index_.position_count();

    auto& scratch = buffer(depth);
    for (ItemId item : index_.observed_items(position)) {
      if (item < min_item) continue;
      const uint64_t support = intersect(scratch, mask, index_.bitmap(position, item));
      if (support == 0) continue;
      if (options_.prune && full() && support < heap_.top().support) continue;

      itemset.push_back(item);
      if (last) {
        offer(support);
      } else {
        grow(position + 1, depth + 1, scratch);
      }
      grow(position, depth + 1, scratch);
      itemset.pop_back();
    }
  }

  const VerticalIndex& index_;
  const MineOptions& options_;
  Pattern current_;
  // deque: growing it keeps references to shallower buffers valid.
  std::deque<std::vector<uint64_t>> buffers_;
  // Top of the heap is the entry ranked last.
  std::priority_queue<Candidate, std::vector<Candidate>, RanksBefore> heap_;
};

}  // namespace

RankedPatterns mine_topk(const VerticalIndex& index, const MineOptions& options) {
  if (options.k == 0) throw domain_error("k must be at least 1");
  RankedPatterns ranked;
  ranked.total = index.total_weight();
  if (index.record_count() == 0) return ranked;

  auto candidates = PatternGrowth(index, options).run();
  ranked.entries.reserve(candidates.size());
  for (size_t r = 0; r < candidates.size(); ++r) {
    RankedEntry entry;
    entry.pattern = std::move(candidates[r].pattern);
    entry.support = candidates[r].support;
    entry.frequency = static_cast<double>(entry.support) / static_cast<double>(ranked.total);
    entry.rank = r + 1;
    ranked.entries.push_back(std::move(entry));
  }
  return ranked;
}

RankedPatterns mine_topk(const DatabaseGraph& graph, const SampleBatch& batch,
                         const MineOptions& options) {
  if (batch.size() == 0) throw domain_error("cannot mine an empty batch");
  auto ranked = mine_topk(VerticalIndex::from_batch(graph, batch), options);
  ranked.kind = ScoreKind::kWeightedSupport;
  return ranked;
}

}  // namespace dgsp
