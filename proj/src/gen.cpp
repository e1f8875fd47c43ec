#include "dgsp/gen.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <string>

#include "dgsp/error.hpp"
#include "dgsp/rng.hpp"

namespace dgsp {
namespace {

uint32_t parse_u32(std::string_view text, std::string_view what) {
  uint32_t value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw domain_error("invalid " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

uint64_t max_edges(const GenConfig& c) {
  const uint64_t n = c.vertex_count;
  const uint64_t ordered = n * (n - (n > 0 ? 1 : 0));
  return c.shape == GraphShape::kRandomDag ? ordered / 2 : ordered;
}

uint32_t poisson(Rng& rng, double mean) {
  if (mean > 30.0) {
    // Normal approximation; Knuth's product method underflows for large means.
    const double u1 = 1.0 - rng.uniform();
    const double u2 = rng.uniform();
    const double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    return static_cast<uint32_t>(std::max(0.0, std::round(mean + std::sqrt(mean) * z)));
  }
  const double limit = std::exp(-mean);
  uint32_t k = 0;
  double p = rng.uniform();
  while (p > limit) {
    ++k;
    p *= rng.uniform();
  }
  return k;
}

std::vector<std::pair<uint32_t, uint32_t>> draw_edges(const GenConfig& c, Rng& rng) {
  std::vector<uint32_t> order(c.vertex_count);
  std::iota(order.begin(), order.end(), 0u);
  for (size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);

  const bool dag = c.shape == GraphShape::kRandomDag;
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  if (c.edge_count * 2 > max_edges(c)) {
    // Dense: enumerate every candidate and take a random subset.
    std::vector<std::pair<uint32_t, uint32_t>> all;
    for (uint32_t i = 0; i < c.vertex_count; ++i) {
      for (uint32_t j = 0; j < c.vertex_count; ++j) {
        if (i == j || (dag && i > j)) continue;
        all.emplace_back(order[i], order[j]);
      }
    }
    for (size_t i = 0; i < c.edge_count; ++i) {
      std::swap(all[i], all[i + rng.below(all.size() - i)]);
      edges.push_back(all[i]);
    }
    return edges;
  }
  std::set<std::pair<uint32_t, uint32_t>> seen;
  while (edges.size() < c.edge_count) {
    uint32_t i = static_cast<uint32_t>(rng.below(c.vertex_count));
    uint32_t j = static_cast<uint32_t>(rng.below(c.vertex_count));
    if (i == j) continue;
    if (dag && i > j) std::swap(i, j);
    const std::pair edge{order[i], order[j]};
    if (seen.insert(edge).second) edges.push_back(edge);
  }
  return edges;
}

}  // namespace

DbSizeRule parse_db_size_rule(std::string_view text) {
  const size_t colon = text.find(':');
  const std::string_view kind = text.substr(0, colon);
  const std::string_view args = colon == std::string_view::npos ? "" : text.substr(colon + 1);
  if (kind == "constant") return ConstantDbSize{parse_u32(args, "transaction count")};
  if (kind == "degree-linear") {
    const size_t comma = args.find(',');
    if (comma == std::string_view::npos) throw domain_error("degree-linear needs BASE,SLOPE");
    return DegreeLinearDbSize{parse_u32(args.substr(0, comma), "base"),
                              parse_u32(args.substr(comma + 1), "slope")};
  }
  throw domain_error("unknown database size rule '" + std::string(text) + "'");
}

GraphShape parse_graph_shape(std::string_view text) {
  if (text == "random-dag") return GraphShape::kRandomDag;
  if (text == "random-digraph") return GraphShape::kRandomDigraph;
  throw domain_error("unknown graph shape '" + std::string(text) + "'");
}

void validate(const GenConfig& c) {
  if (c.vertex_count == 0) throw domain_error("vertex count must be positive");
  if (c.edge_count > max_edges(c)) throw domain_error("too many edges for the vertex count");
  if (c.item_universe_size == 0) throw domain_error("item universe must be non-empty");
  if (!(c.avg_items_per_transaction >= 1.0) ||
      c.avg_items_per_transaction > c.item_universe_size) {
    throw domain_error("average items per transaction must lie in [1, |I|]");
  }
  const bool empty_db = std::visit(
      [](const auto& rule) {
        using Rule = std::decay_t<decltype(rule)>;
        if constexpr (std::is_same_v<Rule, ConstantDbSize>) {
          return rule.transactions == 0;
        } else {
          return rule.base == 0;
        }
      },
      c.db_size);
  if (empty_db) throw domain_error("database size rule yields empty databases");
}

DatabaseGraph generate(const GenConfig& c) {
  validate(c);
  Rng rng(c.seed);
  const auto edges = draw_edges(c, rng);

  std::vector<uint32_t> out_degree(c.vertex_count, 0);
  for (const auto& e : edges) ++out_degree[e.first];

  // Zipf(1) cumulative weights over popularity ranks.
  std::vector<double> cumulative(c.item_universe_size);
  double running = 0.0;
  for (uint32_t r = 0; r < c.item_universe_size; ++r) {
    running += 1.0 / (r + 1.0);
    cumulative[r] = running;
  }

  GraphBuilder builder;
  for (uint32_t v = 0; v < c.vertex_count; ++v) {
    const uint32_t size = std::visit(
        [&](const auto& rule) -> uint32_t {
          using Rule = std::decay_t<decltype(rule)>;
          if constexpr (std::is_same_v<Rule, ConstantDbSize>) {
            return rule.transactions;
          } else {
            return rule.base + rule.slope * out_degree[v];
          }
        },
        c.db_size);

    std::vector<std::vector<std::string>> db;
    db.reserve(size);
    for (uint32_t t = 0; t < size; ++t) {
      uint32_t width = 0;
      while (width == 0) width = poisson(rng, c.avg_items_per_transaction);
      width = std::min(width, c.item_universe_size);
      std::set<uint32_t> ranks;
      while (ranks.size() < width) {
        const double u = rng.uniform() * running;
        const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        ranks.insert(static_cast<uint32_t>(
            std::min<ptrdiff_t>(it - cumulative.begin(), c.item_universe_size - 1)));
      }
      std::vector<std::string> items;
      for (uint32_t r : ranks) items.push_back("i" + std::to_string(r + 1));
      db.push_back(std::move(items));
    }
    builder.add_vertex("v" + std::to_string(v + 1), std::move(db));
  }
  for (const auto& [u, v] : edges) {
    builder.add_edge("v" + std::to_string(u + 1), "v" + std::to_string(v + 1));
  }
  return builder.build();
}

}  // namespace dgsp
