#pragma once

#include <cstdint>
#include <string_view>
#include <variant>

#include "dgsp/graph.hpp"

namespace dgsp {

struct ConstantDbSize {
  uint32_t transactions = 20;
};

/// base + slope * out-degree transactions per vertex (8 + 8d gives 8(d+1)).
struct DegreeLinearDbSize {
  uint32_t base = 8;
  uint32_t slope = 8;
};

using DbSizeRule = std::variant<ConstantDbSize, DegreeLinearDbSize>;

/// "constant:N" or "degree-linear:BASE,SLOPE".
DbSizeRule parse_db_size_rule(std::string_view text);

enum class GraphShape { kRandomDag, kRandomDigraph };

GraphShape parse_graph_shape(std::string_view text);

struct GenConfig {
  uint32_t vertex_count = 24;
  uint64_t edge_count = 28;
  uint32_t item_universe_size = 96;
  double avg_items_per_transaction = 5.0;
  DbSizeRule db_size = ConstantDbSize{};
  GraphShape shape = GraphShape::kRandomDag;
  uint64_t seed = 0;
};

/// Throws a domain error on an unsatisfiable config.
void validate(const GenConfig& config);

/// Synthetic database graph, deterministic in config.seed.
///
/// Edges are drawn uniformly without replacement (forward edges of a random
/// vertex order for DAGs). Transaction sizes are Poisson around the average,
/// truncated to [1, |I|]; items are drawn without replacement from a Zipf(1)
/// law over the universe, named i1..iN by popularity rank.
DatabaseGraph generate(const GenConfig& config);

}  // namespace dgsp
