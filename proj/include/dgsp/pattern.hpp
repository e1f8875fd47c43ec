#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dgsp/graph.hpp"

namespace dgsp {

/// Position-aligned sequential pattern: one non-empty sorted itemset per path
/// position.
struct Pattern {
  std::vector<Itemset> itemsets;

  size_t length() const { return itemsets.empty() ? 0 : itemsets.size() - 1; }

  bool operator==(const Pattern&) const = default;
};

/// Canonical order used for tie-breaking. Patterns compare position by
/// position; itemsets compare first by size, then lexicographically by item
/// id.
std::strong_ordering canonical_compare(const Pattern& a, const Pattern& b);

struct CanonicalLess {
  bool operator()(const Pattern& a, const Pattern& b) const { return canonical_compare(a, b) < 0; }
};

/// Throws a domain error if any itemset is empty or unsorted.
void validate_pattern(const Pattern& pattern);

/// "(i1)(i3)(i3)(i1,i4)": items by external name, in id order.
std::string to_text(const DatabaseGraph& graph, const Pattern& pattern);

/// Inverse of to_text. Unknown item names throw a parse error.
Pattern parse_pattern(const DatabaseGraph& graph, std::string_view text);

/// One materialized transaction per position.
using SequenceView = std::vector<std::span<const ItemId>>;

/// True iff every positional itemset is a subset of the transaction at the
/// same position. Lengths must match.
bool contains(std::span<const std::span<const ItemId>> sequence, const Pattern& pattern);

}  // namespace dgsp
