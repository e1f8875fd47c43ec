#include "dgsp/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "dgsp/error.hpp"

namespace dgsp {

size_t DatabaseGraph::transaction_count() const {
  size_t total = 0;
  for (const auto& db : databases_) total += db.size();
  return total;
}

size_t DatabaseGraph::max_database_size() const {
  size_t best = 0;
  for (const auto& db : databases_) best = std::max(best, db.size());
  return best;
}

std::optional<VertexId> DatabaseGraph::find_vertex(std::string_view name) const {
  auto it = vertex_index_.find(std::string(name));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<ItemId> DatabaseGraph::find_item(std::string_view name) const {
  auto it = item_index_.find(std::string(name));
  if (it == item_index_.end()) return std::nullopt;
  return it->second;
}

bool DatabaseGraph::has_edge(VertexId u, VertexId v) const {
  auto targets = out(u);
  return std::binary_search(targets.begin(), targets.end(), v);
}

GraphBuilder& GraphBuilder::add_vertex(std::string name,
                                       std::vector<std::vector<std::string>> database) {
  vertices_.emplace_back(std::move(name), std::move(database));
  return *this;
}

GraphBuilder& GraphBuilder::add_edge(std::string source, std::string target) {
  edges_.emplace_back(std::move(source), std::move(target));
  return *this;
}

DatabaseGraph GraphBuilder::build() const {
  DatabaseGraph g;
  g.vertex_names_.reserve(vertices_.size());
  g.databases_.reserve(vertices_.size());

  for (const auto& [name, db] : vertices_) {
    const auto id = static_cast<VertexId>(g.vertex_names_.size());
    if (!g.vertex_index_.emplace(name, id).second) {
      throw validation_error("duplicate vertex '" + name + "'");
    }
    g.vertex_names_.push_back(name);
    if (db.empty()) throw validation_error("vertex '" + name + "' has an empty database");

    std::vector<Transaction> transactions;
    transactions.reserve(db.size());
    for (size_t t = 0; t < db.size(); ++t) {
      if (db[t].empty()) {
        throw validation_error("vertex '" + name + "' transaction " + std::to_string(t) +
                               " is empty");
      }
      Transaction tx;
      tx.tid = static_cast<uint32_t>(t);
      for (const auto& item : db[t]) {
        auto [it, inserted] =
            g.item_index_.emplace(item, static_cast<ItemId>(g.item_names_.size()));
        if (inserted) g.item_names_.push_back(item);
        tx.items.push_back(it->second);
      }
      std::sort(tx.items.begin(), tx.items.end());
      if (std::adjacent_find(tx.items.begin(), tx.items.end()) != tx.items.end()) {
        throw validation_error("vertex '" + name + "' transaction " + std::to_string(t) +
                               " repeats an item");
      }
      transactions.push_back(std::move(tx));
    }
    g.databases_.push_back(std::move(transactions));
  }

  const size_t n = g.vertex_names_.size();
  std::vector<std::vector<VertexId>> adjacency(n);
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const auto& [source, target] : edges_) {
    auto u = g.find_vertex(source);
    if (!u) throw validation_error("edge source '" + source + "' is not a declared vertex");
    auto v = g.find_vertex(target);
    if (!v) throw validation_error("edge target '" + target + "' is not a declared vertex");
    if (*u == *v) throw validation_error("self-loop on vertex '" + source + "'");
    if (!seen.emplace(*u, *v).second) {
      throw validation_error("duplicate edge '" + source + "' -> '" + target + "'");
    }
    adjacency[*u].push_back(*v);
  }

  g.offsets_.assign(n + 1, 0);
  for (size_t v = 0; v < n; ++v) {
    std::sort(adjacency[v].begin(), adjacency[v].end());
    g.offsets_[v + 1] = g.offsets_[v] + adjacency[v].size();
  }
  g.targets_.reserve(g.offsets_[n]);
  for (const auto& list : adjacency) g.targets_.insert(g.targets_.end(), list.begin(), list.end());
  return g;
}

std::optional<uint32_t> distance(const DatabaseGraph& graph, VertexId from, VertexId to) {
  if (from == to) return 0;
  std::vector<uint32_t> dist(graph.vertex_count(), UINT32_MAX);
  std::deque<VertexId> frontier{from};
  dist[from] = 0;
  while (!frontier.empty()) {
    const VertexId v = frontier.front();
    frontier.pop_front();
    for (VertexId u : graph.out(v)) {
      if (dist[u] != UINT32_MAX) continue;
      dist[u] = dist[v] + 1;
      if (u == to) return dist[u];
      frontier.push_back(u);
    }
  }
  return std::nullopt;
}

}  // namespace dgsp
