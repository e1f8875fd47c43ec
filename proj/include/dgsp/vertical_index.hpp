#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dgsp/graph.hpp"
#include "dgsp/pattern.hpp"

namespace dgsp {

class SampleBatch;

/// Column-oriented view of a record set: for each (position, item) a bitmap
/// over records whose transaction at that position contains the item, plus
/// an optional per-record weight. Record sets come from a sample batch
/// (weights = path weights) or from the full D_l (unit weights).
class VerticalIndex {
 public:
  static VerticalIndex from_batch(const DatabaseGraph& graph, const SampleBatch& batch);
  /// Throws kNoPath when D_l is empty, kOverflow when |D_l| > max_records.
  static VerticalIndex from_exact(const DatabaseGraph& graph, uint32_t l, uint64_t max_records);

  size_t record_count() const { return records_; }
  size_t word_count() const { return words_; }
  size_t position_count() const { return positions_; }
  size_t item_count() const { return items_; }
  bool unit_weights() const { return weights_.empty(); }

  /// Zero-padded to word_count() * 64; empty for unit weights.
  std::span<const uint64_t> weights() const { return weights_; }
  uint64_t total_weight() const { return total_weight_; }

  std::span<const uint64_t> bitmap(size_t position, ItemId item) const {
    return {bits_.data() + (position * items_ + item) * words_, words_};
  }
  /// All records, padding bits cleared.
  std::span<const uint64_t> all_records() const { return all_; }

  /// Items with a non-empty bitmap at `position`, ascending.
  std::span<const ItemId> observed_items(size_t position) const { return observed_[position]; }

  /// Sum of weights over records containing `pattern`.
  uint64_t support(const Pattern& pattern) const;

 private:
  VerticalIndex(size_t records, size_t positions, size_t items);
  void set_bit(size_t position, ItemId item, size_t record) {
    bits_[(position * items_ + item) * words_ + record / 64] |= uint64_t{1} << (record % 64);
  }
  void finish();

  size_t records_ = 0;
  size_t words_ = 0;
  size_t positions_ = 0;
  size_t items_ = 0;
  std::vector<uint64_t> bits_;
  std::vector<uint64_t> all_;
  std::vector<uint64_t> weights_;
  uint64_t total_weight_ = 0;
  std::vector<std::vector<ItemId>> observed_;
};

}  // namespace dgsp
