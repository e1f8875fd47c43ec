#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace dgsp {

using VertexId = uint32_t;
using ItemId = uint32_t;

/// Sorted, duplicate-free list of item ids.
using Itemset = std::vector<ItemId>;

struct Transaction {
  uint32_t tid = 0;
  Itemset items;

  bool operator==(const Transaction&) const = default;
};

/// Directed graph whose vertices each own a non-empty transaction database.
///
/// Immutable once built; safe for concurrent reads. Vertex and item ids are
/// dense. Vertex ids follow declaration order, item ids follow first
/// appearance (vertex order, then transaction order, then item order within
/// the transaction as written). Out-neighbor lists are sorted by id.
class DatabaseGraph {
 public:
  size_t vertex_count() const { return vertex_names_.size(); }
  size_t item_count() const { return item_names_.size(); }
  size_t edge_count() const { return targets_.size(); }
  size_t transaction_count() const;
  size_t max_database_size() const;

  const std::string& vertex_name(VertexId v) const { return vertex_names_[v]; }
  const std::string& item_name(ItemId i) const { return item_names_[i]; }
  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<ItemId> find_item(std::string_view name) const;

  std::span<const VertexId> out(VertexId v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  bool has_edge(VertexId u, VertexId v) const;

  std::span<const Transaction> database(VertexId v) const { return databases_[v]; }

  friend bool operator==(const DatabaseGraph&, const DatabaseGraph&) = default;

 private:
  friend class GraphBuilder;

  std::vector<std::string> vertex_names_;
  std::vector<std::string> item_names_;
  std::vector<std::vector<Transaction>> databases_;
  std::vector<size_t> offsets_;
  std::vector<VertexId> targets_;
  std::unordered_map<std::string, VertexId> vertex_index_;
  std::unordered_map<std::string, ItemId> item_index_;
};

/// Accumulates vertices and edges by external name, then validates.
class GraphBuilder {
 public:
  /// Each inner vector is one transaction's item names; tids follow position.
  GraphBuilder& add_vertex(std::string name, std::vector<std::vector<std::string>> database);
  GraphBuilder& add_edge(std::string source, std::string target);

  /// Throws a validation error naming the offending element on duplicate
  /// vertices, self-loops, duplicate edges, unknown endpoints, empty
  /// databases or empty transactions.
  DatabaseGraph build() const;

 private:
  std::vector<std::pair<std::string, std::vector<std::vector<std::string>>>> vertices_;
  std::vector<std::pair<std::string, std::string>> edges_;
};

inline constexpr std::string_view kGraphFormat = "dgsp-graph/1";

DatabaseGraph load_graph(std::istream& in);
DatabaseGraph load_graph_file(const std::string& path);
DatabaseGraph parse_graph(std::string_view json_text);

/// Canonical serialization: vertices in id order, edges sorted by
/// (source id, target id), items written as their external names.
void save_graph(const DatabaseGraph& graph, std::ostream& out);
std::string graph_to_json(const DatabaseGraph& graph);

/// Shortest directed path length, or nullopt when `to` is unreachable.
std::optional<uint32_t> distance(const DatabaseGraph& graph, VertexId from, VertexId to);

}  // namespace dgsp
