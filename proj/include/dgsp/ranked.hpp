#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "dgsp/pattern.hpp"

namespace dgsp {

enum class ScoreKind { kExactFrequency, kEstimatedFrequency, kWeightedSupport };

std::string_view to_string(ScoreKind kind);

struct RankedEntry {
  Pattern pattern;
  /// Record count (exact) or weighted support (sampled).
  uint64_t support = 0;
  /// Exact frequency, or the ratio estimate support / total weight.
  double frequency = 0.0;
  size_t rank = 0;
};

/// Ranked top-k list. Supports are non-increasing, ties in canonical pattern
/// order, ranks 1..n.
struct RankedPatterns {
  ScoreKind kind = ScoreKind::kExactFrequency;
  /// Denominator for `frequency`: |D_l| or the batch's total weight.
  uint64_t total = 0;
  std::vector<RankedEntry> entries;
};

}  // namespace dgsp

#include <iosfwd>
#include <optional>
#include <string>

namespace dgsp {

/// Serialized form of one ranked entry; the pattern is in text form so that
/// result files can be compared without the graph.
struct RankedRow {
  size_t rank = 0;
  std::string pattern;
  uint64_t support = 0;
  std::optional<double> frequency;

  bool operator==(const RankedRow&) const = default;
};

std::vector<RankedRow> to_rows(const DatabaseGraph& graph, const RankedPatterns& ranked);

/// JSON array of {"rank","pattern","support","freq"} objects, one per line.
void write_ranked_json(const std::vector<RankedRow>& rows, std::ostream& out);
/// Header "rank,pattern,support,freq"; pattern quoted since it holds commas.
void write_ranked_csv(const std::vector<RankedRow>& rows, std::ostream& out);

/// Accepts either format (a leading '[' selects JSON). Throws a parse error
/// on schema mismatch.
std::vector<RankedRow> read_ranked(std::istream& in);
std::vector<RankedRow> read_ranked_file(const std::string& path);

}  // namespace dgsp
