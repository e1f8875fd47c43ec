#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dgsp/error.hpp"
#include "dgsp/graph.hpp"

namespace dgsp {

using nlohmann::json;

namespace {

DatabaseGraph from_json(const json& doc) {
  if (!doc.is_object()) throw parse_error("graph document must be a JSON object");
  auto format = doc.find("format");
  if (format == doc.end() || !format->is_string() || *format != kGraphFormat) {
    throw parse_error("graph document must declare \"format\": \"" + std::string(kGraphFormat) +
                      "\"");
  }
  auto vertices = doc.find("vertices");
  if (vertices == doc.end() || !vertices->is_array()) {
    throw parse_error("graph document needs a \"vertices\" array");
  }

  GraphBuilder builder;
  for (const auto& vertex : *vertices) {
    if (!vertex.is_object() || !vertex.contains("id") || !vertex["id"].is_string()) {
      throw parse_error("each vertex needs a string \"id\"");
    }
    const auto id = vertex["id"].get<std::string>();
    if (!vertex.contains("db") || !vertex["db"].is_array()) {
      throw parse_error("vertex '" + id + "' needs a \"db\" array");
    }
    std::vector<std::vector<std::string>> db;
    for (const auto& itemset : vertex["db"]) {
      if (!itemset.is_array()) throw parse_error("vertex '" + id + "': itemsets must be arrays");
      std::vector<std::string> items;
      for (const auto& item : itemset) {
        if (!item.is_string()) throw parse_error("vertex '" + id + "': items must be strings");
        items.push_back(item.get<std::string>());
      }
      db.push_back(std::move(items));
    }
    builder.add_vertex(id, std::move(db));
  }

  if (doc.contains("edges")) {
    const auto& edges = doc["edges"];
    if (!edges.is_array()) throw parse_error("\"edges\" must be an array");
    for (const auto& edge : edges) {
      if (!edge.is_array() || edge.size() != 2 || !edge[0].is_string() || !edge[1].is_string()) {
        throw parse_error("each edge must be a [source, target] pair of strings");
      }
      builder.add_edge(edge[0].get<std::string>(), edge[1].get<std::string>());
    }
  }
  return builder.build();
}

json to_json(const DatabaseGraph& graph) {
  json vertices = json::array();
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    json db = json::array();
    for (const auto& tx : graph.database(v)) {
      json items = json::array();
      for (ItemId i : tx.items) items.push_back(graph.item_name(i));
      db.push_back(std::move(items));
    }
    vertices.push_back({{"id", graph.vertex_name(v)}, {"db", std::move(db)}});
  }
  json edges = json::array();
  for (VertexId u = 0; u < graph.vertex_count(); ++u) {
    for (VertexId v : graph.out(u)) {
      edges.push_back(json::array({graph.vertex_name(u), graph.vertex_name(v)}));
    }
  }
  return json{{"format", kGraphFormat}, {"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

}  // namespace

DatabaseGraph parse_graph(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("malformed graph JSON: ") + e.what());
  }
  return from_json(doc);
}

DatabaseGraph load_graph(std::istream& in) {
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

DatabaseGraph load_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open graph file '" + path + "'");
  return load_graph(in);
}

std::string graph_to_json(const DatabaseGraph& graph) { return to_json(graph).dump() + "\n"; }

void save_graph(const DatabaseGraph& graph, std::ostream& out) { out << graph_to_json(graph); }

}  // namespace dgsp
