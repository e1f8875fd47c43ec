#include "dgsp/weights.hpp"

#include <deque>

#include "dgsp/error.hpp"

namespace dgsp {

std::string_view to_string(WeightMode mode) {
  return mode == WeightMode::kWalkCount ? "walk-count" : "paper-literal";
}

WeightMode parse_weight_mode(std::string_view text) {
  if (text == "walk-count") return WeightMode::kWalkCount;
  if (text == "paper-literal") return WeightMode::kPaperLiteral;
  throw domain_error("unknown weight mode '" + std::string(text) + "'");
}

WeightTable::WeightTable(WeightMode mode, size_t vertex_count, uint32_t max_depth)
    : mode_(mode),
      vertex_count_(vertex_count),
      max_depth_(max_depth),
      weights_(vertex_count * (static_cast<size_t>(max_depth) + 1), 0) {}

uint64_t WeightTable::total(uint32_t depth) const {
  uint64_t sum = 0;
  for (VertexId v = 0; v < vertex_count_; ++v) {
    if (__builtin_add_overflow(sum, at(v, depth), &sum)) {
      throw Error(Error::Kind::kOverflow, "total weight overflows 64 bits");
    }
  }
  return sum;
}

namespace {

void fill_walk_counts(const DatabaseGraph& graph, WeightTable& table) {
  for (uint32_t q = 1; q <= table.max_depth(); ++q) {
    for (VertexId v = 0; v < graph.vertex_count(); ++v) {
      uint64_t sum = 0;
      for (VertexId u : graph.out(v)) {
        if (__builtin_add_overflow(sum, table.at(u, q - 1), &sum)) {
          throw Error(Error::Kind::kOverflow, "walk count overflows 64 bits at depth " +
                                                  std::to_string(q));
        }
      }
      table.at(v, q) = sum;
    }
  }
}

// Breadth-first layers from each vertex, truncated at max_depth.
void fill_distance_degrees(const DatabaseGraph& graph, WeightTable& table) {
  const size_t n = graph.vertex_count();
  std::vector<uint32_t> dist(n, UINT32_MAX);
  std::vector<VertexId> touched;
  std::deque<VertexId> frontier;
  for (VertexId source = 0; source < n; ++source) {
    dist[source] = 0;
    touched.push_back(source);
    frontier.push_back(source);
    while (!frontier.empty()) {
      const VertexId v = frontier.front();
      frontier.pop_front();
      if (dist[v] == table.max_depth()) continue;
      for (VertexId u : graph.out(v)) {
        if (dist[u] != UINT32_MAX) continue;
        dist[u] = dist[v] + 1;
        table.at(source, dist[u]) += 1;
        touched.push_back(u);
        frontier.push_back(u);
      }
    }
    for (VertexId v : touched) dist[v] = UINT32_MAX;
    touched.clear();
  }
}

}  // namespace

WeightTable compute_weights(const DatabaseGraph& graph, uint32_t l, WeightMode mode) {
  if (l < 1) throw domain_error("path length must be at least 1");
  WeightTable table(mode, graph.vertex_count(), l);
  for (VertexId v = 0; v < graph.vertex_count(); ++v) table.at(v, 0) = 1;
  if (mode == WeightMode::kWalkCount) {
    fill_walk_counts(graph, table);
  } else {
    fill_distance_degrees(graph, table);
  }
  return table;
}

}  // namespace dgsp
