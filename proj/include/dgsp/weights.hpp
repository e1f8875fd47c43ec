#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "dgsp/graph.hpp"

namespace dgsp {

/// How continuation weights are defined.
///  - kWalkCount: weight(v, q) is the number of length-q directed walks
///    starting at v. Makes the path sampler exactly uniform (with rejection
///    of non-simple walks).
///  - kPaperLiteral: weight(v, q) is the number of vertices at shortest-path
///    distance exactly q from v (the l-th order degree).
enum class WeightMode { kWalkCount, kPaperLiteral };

std::string_view to_string(WeightMode mode);
WeightMode parse_weight_mode(std::string_view text);

/// Per-vertex, per-depth weights for depths 0..max_depth. weight(v, 0) = 1.
class WeightTable {
 public:
  WeightTable(WeightMode mode, size_t vertex_count, uint32_t max_depth);

  WeightMode mode() const { return mode_; }
  uint32_t max_depth() const { return max_depth_; }
  size_t vertex_count() const { return vertex_count_; }

  uint64_t at(VertexId v, uint32_t depth) const { return weights_[index(v, depth)]; }
  uint64_t& at(VertexId v, uint32_t depth) { return weights_[index(v, depth)]; }

  /// Sum over all vertices at `depth`; throws on overflow.
  uint64_t total(uint32_t depth) const;

 private:
  size_t index(VertexId v, uint32_t depth) const {
    return static_cast<size_t>(depth) * vertex_count_ + v;
  }

  WeightMode mode_;
  size_t vertex_count_;
  uint32_t max_depth_;
  std::vector<uint64_t> weights_;
};

/// Requires l >= 1. Walk counts are checked for 64-bit overflow.
WeightTable compute_weights(const DatabaseGraph& graph, uint32_t l, WeightMode mode);

}  // namespace dgsp
