#pragma once

// Exact ground truth: enumerate every length-l simple path, induce its
// transaction sequences, and score patterns against the full multiset D_l.
// D_l is never materialized as itemsets; everything streams through
// visitors.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "dgsp/graph.hpp"
#include "dgsp/pattern.hpp"
#include "dgsp/ranked.hpp"

namespace dgsp {

struct Path {
  std::vector<VertexId> vertices;

  size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  bool operator==(const Path&) const = default;
};

/// A path plus one transaction index per position (index into that vertex's
/// database, which is also its tid).
struct TransactionSequence {
  Path path;
  std::vector<uint32_t> choices;

  bool operator==(const TransactionSequence&) const = default;
};

using PathVisitor = std::function<void(std::span<const VertexId>)>;
using ChoiceVisitor = std::function<void(std::span<const uint32_t>)>;

/// Visits every length-l simple path once, depth-first, starting vertices and
/// out-neighbors in ascending id order. Requires l >= 1.
void for_each_path(const DatabaseGraph& graph, uint32_t l, const PathVisitor& visit);
std::vector<Path> enumerate_paths(const DatabaseGraph& graph, uint32_t l);
uint64_t count_paths(const DatabaseGraph& graph, uint32_t l);

/// Visits the Cartesian product of the databases along `path` in
/// lexicographic choice order (last position varies fastest).
void for_each_choice(const DatabaseGraph& graph, std::span<const VertexId> path,
                     const ChoiceVisitor& visit);
std::vector<TransactionSequence> induce_sequences(const DatabaseGraph& graph, const Path& path);

/// Product of database sizes along the path (M for that path); throws on
/// 64-bit overflow.
uint64_t path_weight(const DatabaseGraph& graph, std::span<const VertexId> path);

/// Materializes the itemsets of a sequence as views into the graph.
SequenceView sequence_itemsets(const DatabaseGraph& graph, std::span<const VertexId> path,
                               std::span<const uint32_t> choices);

/// |D_l|: the number of transaction sequences over all length-l paths.
uint64_t count_sequences(const DatabaseGraph& graph, uint32_t l);

struct Frequency {
  uint64_t count = 0;
  uint64_t total = 0;

  double value() const { return static_cast<double>(count) / static_cast<double>(total); }
  bool operator==(const Frequency&) const = default;
};

/// Streams D_l and counts records containing `pattern`. Throws kNoPath when
/// D_l is empty.
Frequency exact_frequency(const DatabaseGraph& graph, uint32_t l, const Pattern& pattern);

struct ExactOptions {
  size_t max_itemset_width = 0;  // 0 = unlimited
  /// Refuse to index more than this many D_l records.
  uint64_t max_records = uint64_t{1} << 32;
};

/// Top-k over the fully induced D_l with unit weights. Ties are resolved by
/// canonical pattern order; returns every pattern when fewer than k exist.
RankedPatterns exact_topk(const DatabaseGraph& graph, uint32_t l, size_t k,
                          const ExactOptions& options = {});

}  // namespace dgsp
