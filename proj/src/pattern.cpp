#include "dgsp/pattern.hpp"

#include <algorithm>

#include "dgsp/error.hpp"

namespace dgsp {

std::strong_ordering canonical_compare(const Pattern& a, const Pattern& b) {
  const size_t n = std::min(a.itemsets.size(), b.itemsets.size());
  for (size_t q = 0; q < n; ++q) {
    const auto& x = a.itemsets[q];
    const auto& y = b.itemsets[q];
    if (auto c = x.size() <=> y.size(); c != 0) return c;
    if (auto c = x <=> y; c != 0) return c;
  }
  return a.itemsets.size() <=> b.itemsets.size();
}

void validate_pattern(const Pattern& pattern) {
  if (pattern.itemsets.empty()) throw domain_error("pattern has no positions");
  for (const auto& itemset : pattern.itemsets) {
    if (itemset.empty()) throw domain_error("pattern has an empty positional itemset");
    if (std::adjacent_find(itemset.begin(), itemset.end(), std::greater_equal<>()) !=
        itemset.end()) {
      throw domain_error("pattern itemsets must be strictly increasing");
    }
  }
}

std::string to_text(const DatabaseGraph& graph, const Pattern& pattern) {
  std::string text;
  for (const auto& itemset : pattern.itemsets) {
    text += '(';
    for (size_t j = 0; j < itemset.size(); ++j) {
      if (j > 0) text += ',';
      text += graph.item_name(itemset[j]);
    }
    text += ')';
  }
  return text;
}

Pattern parse_pattern(const DatabaseGraph& graph, std::string_view text) {
  Pattern pattern;
  size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] != '(') throw parse_error("pattern text: expected '(' in '" + std::string(text) + "'");
    const size_t close = text.find(')', pos);
    if (close == std::string_view::npos) throw parse_error("pattern text: unbalanced '('");
    Itemset itemset;
    std::string_view body = text.substr(pos + 1, close - pos - 1);
    while (!body.empty()) {
      const size_t comma = body.find(',');
      const std::string_view name = body.substr(0, comma);
      auto id = graph.find_item(name);
      if (!id) throw parse_error("pattern text: unknown item '" + std::string(name) + "'");
      itemset.push_back(*id);
      body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
    }
    std::sort(itemset.begin(), itemset.end());
    pattern.itemsets.push_back(std::move(itemset));
    pos = close + 1;
  }
  validate_pattern(pattern);
  return pattern;
}

bool contains(std::span<const std::span<const ItemId>> sequence, const Pattern& pattern) {
  if (sequence.size() != pattern.itemsets.size()) {
    throw domain_error("contains: sequence and pattern lengths differ");
  }
  for (size_t q = 0; q < sequence.size(); ++q) {
    const auto& x = pattern.itemsets[q];
    if (!std::includes(sequence[q].begin(), sequence[q].end(), x.begin(), x.end())) return false;
  }
  return true;
}

}  // namespace dgsp
