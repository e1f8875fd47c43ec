#include "dgsp/vertical_index.hpp"

#include "dgsp/baseline.hpp"
#include "dgsp/error.hpp"
#include "dgsp/kernels.hpp"
#include "dgsp/sampler.hpp"

namespace dgsp {

VerticalIndex::VerticalIndex(size_t records, size_t positions, size_t items)
    : records_(records),
      words_((records + 63) / 64),
      positions_(positions),
      items_(items),
      bits_(positions * items * words_, 0),
      all_(words_, ~uint64_t{0}) {
  if (records % 64 != 0) all_.back() = (uint64_t{1} << (records % 64)) - 1;
}

void VerticalIndex::finish() {
  observed_.assign(positions_, {});
  for (size_t q = 0; q < positions_; ++q) {
    for (ItemId i = 0; i < items_; ++i) {
      if (kernels::popcount(bitmap(q, i)) > 0) observed_[q].push_back(i);
    }
  }
}

VerticalIndex VerticalIndex::from_batch(const DatabaseGraph& graph, const SampleBatch& batch) {
  VerticalIndex index(batch.size(), batch.width(), graph.item_count());
  index.weights_.assign(index.words_ * 64, 0);
  for (size_t r = 0; r < batch.size(); ++r) {
    const auto path = batch.path(r);
    const auto choices = batch.choices(r);
    for (size_t q = 0; q < path.size(); ++q) {
      for (ItemId item : graph.database(path[q])[choices[q]].items) index.set_bit(q, item, r);
    }
    index.weights_[r] = batch.weight(r);
  }
  index.total_weight_ = batch.total_weight();
  index.finish();
  return index;
}

VerticalIndex VerticalIndex::from_exact(const DatabaseGraph& graph, uint32_t l,
                                        uint64_t max_records) {
  const uint64_t records = count_sequences(graph, l);
  if (records == 0) {
    throw Error(Error::Kind::kNoPath, "no length-" + std::to_string(l) + " path in graph");
  }
  if (records > max_records) {
    throw Error(Error::Kind::kOverflow, "|D_l| = " + std::to_string(records) +
                                            " exceeds the exact-mode record limit");
  }
  VerticalIndex index(records, static_cast<size_t>(l) + 1, graph.item_count());
  size_t r = 0;
  for_each_path(graph, l, [&](std::span<const VertexId> path) {
    for_each_choice(graph, path, [&](std::span<const uint32_t> choices) {
      for (size_t q = 0; q < path.size(); ++q) {
        for (ItemId item : graph.database(path[q])[choices[q]].items) index.set_bit(q, item, r);
      }
      ++r;
    });
  });
  index.total_weight_ = records;
  index.finish();
  return index;
}

uint64_t VerticalIndex::support(const Pattern& pattern) const {
  if (pattern.itemsets.size() != positions_) {
    throw domain_error("pattern length does not match the indexed records");
  }
  std::vector<uint64_t> mask(all_);
  for (size_t q = 0; q < positions_; ++q) {
    for (ItemId item : pattern.itemsets[q]) {
      if (item >= items_) return 0;
      kernels::and_popcount(mask, mask, bitmap(q, item));
    }
  }
  return unit_weights() ? kernels::popcount(mask) : kernels::weighted_sum(mask, weights_);
}

}  // namespace dgsp
